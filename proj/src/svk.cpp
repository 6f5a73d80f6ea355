#include "ars/svk.hpp"

#include <algorithm>
#include <functional>

namespace ars {

namespace {

bool clean_token(const std::string& t) {
  return !t.empty() && t.find('|') == std::string::npos && t.find('#') == std::string::npos;
}

}  // namespace

SvkSystem::SvkSystem(SvkInstance instance, std::optional<std::size_t> max_pairs)
    : instance_(std::move(instance)), max_pairs_(max_pairs) {
  std::vector<std::string> bad;
  for (const auto& obj : instance_.b.objects()) {
    if (!clean_token(obj)) bad.push_back("object id '" + obj + "' of B contains a separator");
  }
  for (const auto& m : instance_.b.morphisms()) {
    if (!clean_token(m.id)) bad.push_back("morphism id '" + m.id + "' of B contains a separator");
  }
  for (const auto& m : instance_.c.morphisms()) {
    if (!clean_token(m.id)) bad.push_back("morphism id '" + m.id + "' of C contains a separator");
  }
  for (const auto& x : instance_.elements) {
    if (!clean_token(x)) {
      bad.push_back("element id '" + x + "' contains a separator");
      continue;
    }
    auto fx = instance_.f.find(x);
    auto gx = instance_.g.find(x);
    if (fx == instance_.f.end()) {
      bad.push_back("element '" + x + "' has no f-image");
    } else if (std::find(instance_.b.objects().begin(), instance_.b.objects().end(), fx->second) ==
               instance_.b.objects().end()) {
      bad.push_back("f('" + x + "') = '" + fx->second + "' is not an object of B");
    }
    if (gx == instance_.g.end()) {
      bad.push_back("element '" + x + "' has no g-image");
    } else if (std::find(instance_.c.objects().begin(), instance_.c.objects().end(), gx->second) ==
               instance_.c.objects().end()) {
      bad.push_back("g('" + x + "') = '" + gx->second + "' is not an object of C");
    }
  }
  if (!bad.empty()) {
    throw IntegrityError("list-system instance is inconsistent", std::move(bad));
  }
}

std::string SvkSystem::render(const Tokens& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back('|');
    out += tokens[i];
  }
  return out;
}

std::optional<SvkSystem::Tokens> SvkSystem::parse_vertex(const VertexId& v, std::string* why) const {
  auto fail = [&](const std::string& reason) -> std::optional<Tokens> {
    if (why) *why = reason;
    return std::nullopt;
  };

  Tokens tokens;
  std::size_t pos = 0;
  while (true) {
    const std::size_t bar = v.value.find('|', pos);
    tokens.push_back(v.value.substr(pos, bar == std::string::npos ? bar : bar - pos));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  if (tokens.size() % 4 != 1) return fail("token count must be 1 mod 4");

  const TableGroupoid& b = instance_.b;
  const TableGroupoid& c = instance_.c;
  auto is_element = [&](const std::string& t) {
    return std::find(instance_.elements.begin(), instance_.elements.end(), t) !=
           instance_.elements.end();
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    switch (i % 4) {
      case 0:
      case 2: {
        const TableGroupoid& g = (i % 4 == 0) ? b : c;
        try {
          g.source(t);
        } catch (const Error&) {
          return fail("token " + std::to_string(i) + " ('" + t + "') is not a morphism of " +
                      (i % 4 == 0 ? "B" : "C"));
        }
        break;
      }
      default:
        if (!is_element(t)) {
          return fail("token " + std::to_string(i) + " ('" + t + "') is not an element");
        }
        break;
    }
  }
  // Endpoint chaining through f and g.
  for (std::size_t i = 0; i + 1 < tokens.size(); i += 4) {
    const std::string& p = tokens[i];
    const std::string& x = tokens[i + 1];
    const std::string& q = tokens[i + 2];
    const std::string& y = tokens[i + 3];
    const std::string& p_next = tokens[i + 4];
    if (b.target(p) != instance_.f.at(x)) {
      return fail("token " + std::to_string(i) + " must end at f of the next element");
    }
    if (c.source(q) != instance_.g.at(x) || c.target(q) != instance_.g.at(y)) {
      return fail("token " + std::to_string(i + 2) + " must run from g(x) to g(y)");
    }
    if (b.source(p_next) != instance_.f.at(y)) {
      return fail("token " + std::to_string(i + 4) + " must start at f of the element before it");
    }
  }
  if (max_pairs_ && tokens.size() / 4 > *max_pairs_) {
    return fail("list exceeds the pair bound");
  }
  return tokens;
}

bool SvkSystem::is_redex(const Tokens& tokens, std::size_t center) const {
  if (center >= tokens.size()) return false;
  if (center % 2 != 0) return false;
  if (center % 4 == 0) {
    // Interior identity of B between equal elements: the two C-morphisms
    // around it become composable.
    if (center == 0 || center + 1 >= tokens.size()) return false;
    return instance_.b.is_identity_morphism(tokens[center]) &&
           tokens[center - 1] == tokens[center + 1];
  }
  // Identity of C between equal elements: the two B-morphisms compose.
  return instance_.c.is_identity_morphism(tokens[center]) &&
         tokens[center - 1] == tokens[center + 1];
}

std::vector<std::size_t> SvkSystem::redex_centers(const Tokens& tokens) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 2; i + 2 < tokens.size(); i += 2) {
    if (is_redex(tokens, i)) out.push_back(i);
  }
  return out;
}

SvkSystem::Tokens SvkSystem::apply_redex(const Tokens& tokens, std::size_t center) const {
  if (!is_redex(tokens, center)) {
    throw MalformedSpanError("no collapse applies at token " + std::to_string(center));
  }
  const TableGroupoid& g = (center % 4 == 0) ? instance_.c : instance_.b;
  Tokens out(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(center) - 2);
  out.push_back(g.compose(tokens[center - 2], tokens[center + 2]));
  out.insert(out.end(), tokens.begin() + static_cast<std::ptrdiff_t>(center) + 3, tokens.end());
  return out;
}

Edge SvkSystem::make_edge(const Tokens& tokens, std::size_t center) const {
  const std::string src = render(tokens);
  return Edge{EdgeId{src + "#" + std::to_string(center)}, VertexId{src},
              VertexId{render(apply_redex(tokens, center))}};
}

std::vector<Edge> SvkSystem::outgoing(const VertexId& v) const {
  const auto tokens = parse_vertex(v);
  if (!tokens) return {};
  std::vector<Edge> out;
  for (std::size_t center : redex_centers(*tokens)) {
    out.push_back(make_edge(*tokens, center));
  }
  return out;
}

std::optional<Edge> SvkSystem::edge_by_id(const EdgeId& id) const {
  const std::size_t hash = id.value.rfind('#');
  if (hash == std::string::npos) return std::nullopt;
  const std::string digits = id.value.substr(hash + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  const auto tokens = parse_vertex(VertexId{id.value.substr(0, hash)});
  if (!tokens) return std::nullopt;
  const std::size_t center = std::stoul(digits);
  if (!is_redex(*tokens, center)) return std::nullopt;
  return make_edge(*tokens, center);
}

bool SvkSystem::has_vertex(const VertexId& v) const { return parse_vertex(v).has_value(); }

std::vector<VertexId> SvkSystem::vertices() const {
  if (!max_pairs_) {
    throw UnsupportedOperationError("unbounded list system has no vertex enumeration");
  }
  std::vector<VertexId> out;
  const TableGroupoid& b = instance_.b;
  const TableGroupoid& c = instance_.c;

  // Depth-first over well-formed lists, extending one (x, q, y, p) block at
  // a time; declaration order everywhere keeps the enumeration stable.
  std::function<void(Tokens&, std::size_t)> extend = [&](Tokens& tokens, std::size_t pairs) {
    out.push_back(VertexId{render(tokens)});
    if (pairs == *max_pairs_) return;
    const std::string b_end = b.target(tokens.back());
    for (const auto& x : instance_.elements) {
      if (instance_.f.at(x) != b_end) continue;
      for (const auto& q : c.morphisms()) {
        if (q.src != instance_.g.at(x)) continue;
        for (const auto& y : instance_.elements) {
          if (instance_.g.at(y) != q.dst) continue;
          for (const auto& p : b.morphisms()) {
            if (p.src != instance_.f.at(y)) continue;
            tokens.push_back(x);
            tokens.push_back(q.id);
            tokens.push_back(y);
            tokens.push_back(p.id);
            extend(tokens, pairs + 1);
            tokens.resize(tokens.size() - 4);
          }
        }
      }
    }
  };

  for (const auto& p0 : b.morphisms()) {
    Tokens tokens{p0.id};
    extend(tokens, 0);
  }
  return out;
}

std::vector<Edge> SvkSystem::edges() const {
  std::vector<Edge> out;
  for (const VertexId& v : vertices()) {
    auto es = outgoing(v);
    out.insert(out.end(), es.begin(), es.end());
  }
  return out;
}

ExtendedCospan SvkJoiner::join(const Span& span) const {
  const SvkSystem& sys = *system_;
  const auto left_edge = sys.edge_by_id(span.left.id);
  const auto right_edge = sys.edge_by_id(span.right.id);
  if (!left_edge || *left_edge != span.left || !right_edge || *right_edge != span.right) {
    throw MalformedSpanError("list joiner: span does not match the system's collapses");
  }
  if (span.left.src != span.apex || span.right.src != span.apex) {
    throw MalformedSpanError("list joiner: edges do not leave the apex");
  }
  const auto tokens = sys.parse_vertex(span.apex);
  if (!tokens) throw MalformedSpanError("list joiner: apex is not a well-formed list");

  const std::size_t c1 = std::stoul(span.left.id.value.substr(span.left.id.value.rfind('#') + 1));
  const std::size_t c2 = std::stoul(span.right.id.value.substr(span.right.id.value.rfind('#') + 1));
  const std::size_t lo = std::min(c1, c2);
  const std::size_t hi = std::max(c1, c2);

  if (hi - lo <= 2) {
    // Equal centers, or a B-side and a C-side collapse overlapping in two
    // tokens. Either way both feet are the same list (for the overlap, each
    // collapse composes with an identity, which the tables absorb).
    if (span.left.dst != span.right.dst) {
      throw MalformedSpanError("list joiner: overlapping collapses with distinct feet");
    }
    return ExtendedCospan{trivial_chain(span.left.dst), trivial_chain(span.right.dst)};
  }

  // Centers four or more apart: each collapse leaves the other applicable,
  // with centers above the removed block shifted down by four.
  const auto left_tokens = sys.parse_vertex(span.left.dst);
  const auto right_tokens = sys.parse_vertex(span.right.dst);
  if (!left_tokens || !right_tokens) {
    throw MalformedSpanError("list joiner: feet are not well-formed lists");
  }
  const std::size_t pos_in_left = (c2 > c1) ? c2 - 4 : c2;
  const std::size_t pos_in_right = (c1 > c2) ? c1 - 4 : c1;
  if (!sys.is_redex(*left_tokens, pos_in_left) || !sys.is_redex(*right_tokens, pos_in_right)) {
    throw MalformedSpanError("list joiner: residual collapse vanished");
  }
  const Edge left_step = sys.make_edge(*left_tokens, pos_in_left);
  const Edge right_step = sys.make_edge(*right_tokens, pos_in_right);
  if (left_step.dst != right_step.dst) {
    throw MalformedSpanError("list joiner: collapses failed to commute");
  }
  return ExtendedCospan{Chain{span.left.dst, {Step{left_step, Dir::Fwd}}},
                        Chain{span.right.dst, {Step{right_step, Dir::Fwd}}}};
}

}  // namespace ars
