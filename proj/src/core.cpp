#include "ars/core.hpp"

#include <algorithm>
#include <sstream>

namespace ars {

const VertexId& chain_end(const Chain& c) {
  return c.steps.empty() ? c.start : step_target(c.steps.back());
}

bool is_well_formed(const Chain& c) {
  const VertexId* at = &c.start;
  for (const Step& s : c.steps) {
    if (step_source(s) != *at) return false;
    at = &step_target(s);
  }
  return true;
}

Chain concat(const Chain& c1, const Chain& c2) {
  if (chain_end(c1) != c2.start) {
    throw InvalidChainError("concat: end of first chain is '" + chain_end(c1).value +
                            "' but second chain starts at '" + c2.start.value + "'");
  }
  Chain out{c1.start, {}};
  out.steps.reserve(c1.steps.size() + c2.steps.size());
  out.steps.insert(out.steps.end(), c1.steps.begin(), c1.steps.end());
  out.steps.insert(out.steps.end(), c2.steps.begin(), c2.steps.end());
  return out;
}

Chain invert(const Chain& c) {
  Chain out{chain_end(c), {}};
  out.steps.reserve(c.steps.size());
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    out.steps.push_back(invert(*it));
  }
  return out;
}

bool is_monotone(const Chain& c) {
  if (c.steps.empty()) return true;
  const Dir d = c.steps.front().dir;
  return std::all_of(c.steps.begin(), c.steps.end(),
                     [d](const Step& s) { return s.dir == d; });
}

std::vector<VertexId> vertex_list(const Chain& c) {
  std::vector<VertexId> out;
  out.reserve(c.steps.size());
  for (const Step& s : c.steps) {
    out.push_back(step_target(s));
  }
  return out;
}

Cycle as_cycle(Chain c) {
  if (!is_well_formed(c)) {
    throw InvalidChainError("as_cycle: chain is not well-formed");
  }
  if (chain_end(c) != c.start) {
    throw InvalidChainError("as_cycle: chain ends at '" + chain_end(c).value +
                            "', not at its start '" + c.start.value + "'");
  }
  return Cycle{std::move(c)};
}

bool is_well_formed(const Cycle& c) {
  return is_well_formed(c.chain) && chain_end(c.chain) == c.chain.start;
}

Cycle rotate(const Cycle& c) { return rotate(c, 1); }

Cycle rotate(const Cycle& c, std::size_t n) {
  const std::size_t len = c.length();
  if (len == 0) return c;
  const std::size_t m = n % len;
  if (m == 0) return c;
  Cycle out{Chain{step_target(c.chain.steps[m - 1]), {}}};
  out.chain.steps.reserve(len);
  out.chain.steps.insert(out.chain.steps.end(), c.chain.steps.begin() + static_cast<std::ptrdiff_t>(m),
                         c.chain.steps.end());
  out.chain.steps.insert(out.chain.steps.end(), c.chain.steps.begin(),
                         c.chain.steps.begin() + static_cast<std::ptrdiff_t>(m));
  return out;
}

std::vector<VertexId> vertex_list(const Cycle& c) { return vertex_list(c.chain); }

bool is_well_formed(const Span& s) {
  return s.left.src == s.apex && s.right.src == s.apex;
}

Chain span_chain(const Span& s) {
  Chain out{s.left.dst, {Step{s.left, Dir::Bwd}, Step{s.right, Dir::Fwd}}};
  return out;
}

SpanSearch find_span(const Cycle& c) {
  SpanSearch result;
  const std::size_t len = c.length();
  if (len == 0) {
    result.kind = SpanSearch::Kind::Empty;
    return result;
  }
  if (is_monotone(c.chain)) {
    result.kind = SpanSearch::Kind::MonotoneNonempty;
    return result;
  }
  for (std::size_t n = 0; n < len; ++n) {
    const Step& bwd = c.chain.steps[n];
    const Step& fwd = c.chain.steps[(n + 1) % len];
    if (bwd.dir == Dir::Bwd && fwd.dir == Dir::Fwd) {
      // rotate(c, n) = [bwd, fwd, suffix...]; tau inverts the suffix without
      // materializing the rotation, running from the rotated base point
      // (= left.dst) to right.dst.
      Chain tau{step_source(bwd), {}};
      tau.steps.reserve(len - 2);
      for (std::size_t i = 0; i + 2 < len; ++i) {
        tau.steps.push_back(invert(c.chain.steps[(n + len - 1 - i) % len]));
      }
      result.kind = SpanSearch::Kind::Found;
      result.rotation = n;
      result.span = Span{bwd.edge.src, bwd.edge, fwd.edge};
      result.tau = std::move(tau);
      return result;
    }
  }
  // Unreachable for well-formed input: a non-monotone cycle has both
  // directions, hence a Bwd step cyclically followed by a Fwd step.
  throw Error("find_span: non-monotone cycle without Bwd/Fwd adjacency");
}

std::optional<std::string> validate_in_system(const RewritingSystem& system, const Chain& c) {
  if (!is_well_formed(c)) return "chain is not well-formed";
  if (!system.has_vertex(c.start)) return "unknown start vertex '" + c.start.value + "'";
  for (const Step& s : c.steps) {
    auto e = system.edge_by_id(s.edge.id);
    if (!e) return "unknown edge '" + s.edge.id.value + "'";
    if (*e != s.edge) return "edge '" + s.edge.id.value + "' disagrees with the system's endpoints";
  }
  return std::nullopt;
}

}  // namespace ars
