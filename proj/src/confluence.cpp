#include "ars/confluence.hpp"

#include <algorithm>
#include <map>

namespace ars {

bool is_well_formed(const ExtendedCospan& c) {
  return is_well_formed(c.left) && is_well_formed(c.right) &&
         is_monotone(c.left) && is_monotone(c.right) &&
         (c.left.empty() || c.left.steps.front().dir == Dir::Fwd) &&
         (c.right.empty() || c.right.steps.front().dir == Dir::Fwd) &&
         chain_end(c.left) == chain_end(c.right);
}

Chain flatten_cospan(const ExtendedCospan& c) {
  return concat(c.left, invert(c.right));
}

namespace {

// Shortest forward path to every reachable vertex, with the lexicographically
// smallest edge-id sequence among shortest paths. Level-synchronous BFS keeps
// the selection deterministic.
struct PathTo {
  std::vector<Edge> edges;
};

std::map<VertexId, PathTo> forward_paths(const RewritingSystem& system, const VertexId& start,
                                         const AutoJoiner::SearchLimits& limits) {
  std::map<VertexId, PathTo> settled;
  settled.emplace(start, PathTo{});
  std::vector<std::pair<VertexId, PathTo>> frontier{{start, PathTo{}}};

  auto id_seq_less = [](const PathTo& a, const PathTo& b) {
    return std::lexicographical_compare(
        a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
        [](const Edge& x, const Edge& y) { return x.id < y.id; });
  };

  std::size_t depth = 0;
  while (!frontier.empty() && depth < limits.max_depth) {
    ++depth;
    std::map<VertexId, PathTo> next;
    for (const auto& [v, path] : frontier) {
      for (const Edge& e : system.outgoing(v)) {
        if (settled.count(e.dst)) continue;
        PathTo candidate{path.edges};
        candidate.edges.push_back(e);
        auto it = next.find(e.dst);
        if (it == next.end()) {
          next.emplace(e.dst, std::move(candidate));
        } else if (id_seq_less(candidate, it->second)) {
          it->second = std::move(candidate);
        }
      }
    }
    frontier.assign(next.begin(), next.end());
    for (auto& [v, path] : next) {
      settled.emplace(v, std::move(path));
    }
    if (settled.size() > limits.max_vertices) {
      throw UnsupportedOperationError("forward search from '" + start.value +
                                      "' exceeded the vertex cap");
    }
  }
  return settled;
}

Chain path_chain(const VertexId& start, const PathTo& path) {
  Chain out{start, {}};
  out.steps.reserve(path.edges.size());
  for (const Edge& e : path.edges) {
    out.steps.push_back(Step{e, Dir::Fwd});
  }
  return out;
}

}  // namespace

ExtendedCospan AutoJoiner::join(const Span& span) const {
  if (!is_well_formed(span)) {
    throw MalformedSpanError("auto joiner: edges do not share the apex '" + span.apex.value + "'");
  }
  const auto left_paths = forward_paths(*system_, span.left.dst, limits_);
  const auto right_paths = forward_paths(*system_, span.right.dst, limits_);

  const std::pair<const VertexId, PathTo>* best_left = nullptr;
  const PathTo* best_right = nullptr;
  auto better = [](std::size_t len_a, const std::vector<EdgeId>& seq_a, std::size_t len_b,
                   const std::vector<EdgeId>& seq_b) {
    if (len_a != len_b) return len_a < len_b;
    return seq_a < seq_b;
  };
  std::size_t best_len = 0;
  std::vector<EdgeId> best_seq;
  for (const auto& entry : left_paths) {
    auto rt = right_paths.find(entry.first);
    if (rt == right_paths.end()) continue;
    const std::size_t len = entry.second.edges.size() + rt->second.edges.size();
    std::vector<EdgeId> seq;
    seq.reserve(len);
    for (const Edge& e : entry.second.edges) seq.push_back(e.id);
    for (const Edge& e : rt->second.edges) seq.push_back(e.id);
    if (best_left == nullptr || better(len, seq, best_len, best_seq)) {
      best_left = &entry;
      best_right = &rt->second;
      best_len = len;
      best_seq = std::move(seq);
    }
  }
  if (best_left == nullptr) {
    throw NotLocallyConfluentError("no common descendant joins the feet '" + span.left.dst.value +
                                       "' and '" + span.right.dst.value + "'",
                                   span);
  }
  return ExtendedCospan{path_chain(span.left.dst, best_left->second),
                        path_chain(span.right.dst, *best_right)};
}

ExtendedCospan CachingJoiner::join(const Span& span) const {
  const auto key = std::make_pair(span.left.id, span.right.id);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ExtendedCospan cospan = inner_->join(span);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(std::move(key), std::move(cospan)).first->second;
}

std::optional<std::string> validate_cospan(const Span& span, const ExtendedCospan& cospan) {
  if (!is_well_formed(cospan.left) || !is_well_formed(cospan.right)) {
    return "cospan leg is not a well-formed chain";
  }
  if (!is_monotone(cospan.left) || (!cospan.left.empty() && cospan.left.steps.front().dir != Dir::Fwd)) {
    return "left leg is not forward-monotone";
  }
  if (!is_monotone(cospan.right) ||
      (!cospan.right.empty() && cospan.right.steps.front().dir != Dir::Fwd)) {
    return "right leg is not forward-monotone";
  }
  if (cospan.left.start != span.left.dst) {
    return "left leg starts at '" + cospan.left.start.value + "', expected '" +
           span.left.dst.value + "'";
  }
  if (cospan.right.start != span.right.dst) {
    return "right leg starts at '" + cospan.right.start.value + "', expected '" +
           span.right.dst.value + "'";
  }
  if (chain_end(cospan.left) != chain_end(cospan.right)) {
    return "legs end at different vertices ('" + chain_end(cospan.left).value + "' vs '" +
           chain_end(cospan.right).value + "')";
  }
  return std::nullopt;
}

ConfluenceReport check_local_confluence(const RewritingSystem& /*system*/, const Joiner& joiner,
                                        std::span<const Span> spans) {
  ConfluenceReport report;
  report.entries.reserve(spans.size());
  for (const Span& span : spans) {
    SpanCheckEntry entry;
    entry.span = span;
    try {
      ExtendedCospan cospan = joiner.join(span);
      if (auto problem = validate_cospan(span, cospan)) {
        entry.status = SpanCheckEntry::Status::Invalid;
        entry.message = *problem;
        ++report.failures;
      } else {
        entry.status = SpanCheckEntry::Status::Ok;
      }
      entry.cospan = std::move(cospan);
    } catch (const Error& e) {
      entry.status = SpanCheckEntry::Status::Error;
      entry.message = e.what();
      ++report.failures;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

ExtendedCospan newman_rec(const Joiner& joiner, const Chain& left, const Chain& right,
                          std::size_t& budget) {
  if (budget == 0) {
    throw FuelExhaustedError("newman join ran out of fuel; the system may not terminate");
  }
  --budget;
  if (left.empty()) {
    // b == apex: the right leg itself reaches the meet.
    return ExtendedCospan{right, trivial_chain(chain_end(right))};
  }
  if (right.empty()) {
    return ExtendedCospan{trivial_chain(chain_end(left)), left};
  }
  const Step& s1 = left.steps.front();
  const Step& t1 = right.steps.front();
  Chain left_rest{step_target(s1), {left.steps.begin() + 1, left.steps.end()}};
  Chain right_rest{step_target(t1), {right.steps.begin() + 1, right.steps.end()}};

  const ExtendedCospan local = joiner.join(Span{left.start, s1.edge, t1.edge});
  // Join the left remainder with the local valley's left leg...
  const ExtendedCospan upper = newman_rec(joiner, left_rest, local.left, budget);
  // ...then the path right-foot -> x -> y with the right remainder.
  const ExtendedCospan lower =
      newman_rec(joiner, concat(local.right, upper.right), right_rest, budget);
  return ExtendedCospan{concat(upper.left, lower.left), lower.right};
}

}  // namespace

ExtendedCospan newman_join(const RewritingSystem& /*system*/, const Joiner& joiner,
                           const Chain& left, const Chain& right, std::size_t fuel) {
  if (!is_well_formed(left) || !is_well_formed(right)) {
    throw InvalidChainError("newman join: a leg is not a well-formed chain");
  }
  if (left.start != right.start) {
    throw InvalidChainError("newman join: legs start at '" + left.start.value + "' and '" +
                            right.start.value + "'");
  }
  auto fwd_monotone = [](const Chain& c) {
    return is_monotone(c) && (c.empty() || c.steps.front().dir == Dir::Fwd);
  };
  if (!fwd_monotone(left) || !fwd_monotone(right)) {
    throw InvalidChainError("newman join: legs must be forward-monotone");
  }
  if (fuel == 0) {
    throw FuelExhaustedError("newman join: fuel must be positive");
  }
  std::size_t budget = fuel;
  return newman_rec(joiner, left, right, budget);
}

Cycle confluence_cycle(const Span& span, const ExtendedCospan& cospan) {
  if (auto problem = validate_cospan(span, cospan)) {
    throw MalformedSpanError("confluence cycle: " + *problem);
  }
  Chain around = concat(span_chain(span), concat(cospan.right, invert(cospan.left)));
  return as_cycle(std::move(around));
}

Cycle confluence_cycle(const Span& span, const Joiner& joiner) {
  return confluence_cycle(span, joiner.join(span));
}

}  // namespace ars
