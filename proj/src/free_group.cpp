#include "ars/free_group.hpp"

#include <algorithm>

namespace ars {

FreeGroupSystem::FreeGroupSystem(int generators, std::optional<std::size_t> max_len)
    : generators_(generators), max_len_(max_len) {
  if (generators < 1 || generators > kMaxPrintableGenerators) {
    throw Error("free-group system supports 1.." + std::to_string(kMaxPrintableGenerators) +
                " generators");
  }
}

Word FreeGroupSystem::word_of(const VertexId& v) const {
  return word_from_string(v.value, generators_);
}

EdgeId FreeGroupSystem::make_edge_id(const std::string& word, std::size_t pos) {
  return EdgeId{word + ":" + std::to_string(pos)};
}

std::optional<FreeGroupSystem::RedexRef> FreeGroupSystem::parse_edge_id(const EdgeId& id) {
  const auto colon = id.value.rfind(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string digits = id.value.substr(colon + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  return RedexRef{id.value.substr(0, colon), std::stoul(digits)};
}

std::optional<Edge> FreeGroupSystem::edge_at(const Word& w, std::size_t pos) const {
  if (pos + 1 >= w.size()) return std::nullopt;
  if (w[pos] != letter_inverse(w[pos + 1])) return std::nullopt;
  Word dst = w;
  dst.erase(dst.begin() + static_cast<std::ptrdiff_t>(pos),
            dst.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
  const std::string src_str = word_to_string(w);
  return Edge{make_edge_id(src_str, pos), VertexId{src_str}, VertexId{word_to_string(dst)}};
}

std::vector<Edge> FreeGroupSystem::outgoing(const VertexId& v) const {
  const Word w = word_of(v);
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (auto e = edge_at(w, i)) out.push_back(std::move(*e));
  }
  return out;
}

std::optional<Edge> FreeGroupSystem::edge_by_id(const EdgeId& id) const {
  const auto ref = parse_edge_id(id);
  if (!ref) return std::nullopt;
  Word w;
  try {
    w = word_from_string(ref->word, generators_);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (max_len_ && w.size() > *max_len_) return std::nullopt;
  return edge_at(w, ref->pos);
}

bool FreeGroupSystem::has_vertex(const VertexId& v) const {
  try {
    const Word w = word_of(v);
    return !max_len_ || w.size() <= *max_len_;
  } catch (const ParseError&) {
    return false;
  }
}

std::vector<VertexId> FreeGroupSystem::vertices() const {
  if (!max_len_) {
    throw UnsupportedOperationError("unbounded free-group system has no vertex enumeration");
  }
  // Words by length, then lexicographically in the letter order a,A,b,B,...
  std::vector<VertexId> out;
  std::vector<Word> level{{}};
  out.push_back(VertexId{""});
  std::vector<Letter> alphabet;
  for (int k = 1; k <= generators_; ++k) {
    alphabet.push_back(k);
    alphabet.push_back(-k);
  }
  for (std::size_t len = 1; len <= *max_len_; ++len) {
    std::vector<Word> next;
    next.reserve(level.size() * alphabet.size());
    for (const Word& w : level) {
      for (Letter x : alphabet) {
        Word longer = w;
        longer.push_back(x);
        out.push_back(VertexId{word_to_string(longer)});
        next.push_back(std::move(longer));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Edge> FreeGroupSystem::edges() const {
  std::vector<Edge> out;
  for (const VertexId& v : vertices()) {
    auto es = outgoing(v);
    out.insert(out.end(), es.begin(), es.end());
  }
  return out;
}

ExtendedCospan FgJoiner::join(const Span& span) const {
  const auto left_ref = FreeGroupSystem::parse_edge_id(span.left.id);
  const auto right_ref = FreeGroupSystem::parse_edge_id(span.right.id);
  if (!left_ref || !right_ref) {
    throw MalformedSpanError("free-group joiner: edges are not redex references");
  }
  if (left_ref->word != right_ref->word || VertexId{left_ref->word} != span.apex) {
    throw MalformedSpanError("free-group joiner: redexes do not share the apex word");
  }
  const auto left_edge = system_.edge_by_id(span.left.id);
  const auto right_edge = system_.edge_by_id(span.right.id);
  if (!left_edge || *left_edge != span.left || !right_edge || *right_edge != span.right) {
    throw MalformedSpanError("free-group joiner: span does not match the system's redexes");
  }

  const std::size_t i = left_ref->pos;
  const std::size_t j = right_ref->pos;
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);

  if (hi - lo <= 1) {
    // Fully or partially overlapping redexes: both removals leave the same
    // word, so there is no valley to build.
    if (span.left.dst != span.right.dst) {
      throw MalformedSpanError("free-group joiner: overlapping redexes with distinct feet");
    }
    return ExtendedCospan{trivial_chain(span.left.dst), trivial_chain(span.right.dst)};
  }

  // Disjoint redexes: remove the other redex from each foot. Positions above
  // the removed pair shift down by two.
  const Word left_foot = system_.word_of(span.left.dst);
  const Word right_foot = system_.word_of(span.right.dst);
  const std::size_t pos_in_left = (j > i) ? j - 2 : j;
  const std::size_t pos_in_right = (i > j) ? i - 2 : i;
  const auto left_step = system_.edge_at(left_foot, pos_in_left);
  const auto right_step = system_.edge_at(right_foot, pos_in_right);
  if (!left_step || !right_step || left_step->dst != right_step->dst) {
    throw MalformedSpanError("free-group joiner: disjoint redexes failed to commute");
  }
  return ExtendedCospan{Chain{span.left.dst, {Step{*left_step, Dir::Fwd}}},
                        Chain{span.right.dst, {Step{*right_step, Dir::Fwd}}}};
}

EdgeLabelling word_value_labelling(std::shared_ptr<const FreeGroupTarget> target) {
  const int generators = target->generators();
  return potential_labelling(std::move(target), [generators](const VertexId& v) {
    return reduce_word(v.value, generators);
  });
}

}  // namespace ars
