#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ars/confluence.hpp"
#include "ars/core.hpp"
#include "ars/groupoid.hpp"

namespace ars {

/// Data for a pushout-style list system: two finite groupoids B and C, a
/// set of elements, and maps assigning each element an object of B (via f)
/// and of C (via g).
struct SvkInstance {
  TableGroupoid b;
  TableGroupoid c;
  std::vector<std::string> elements;
  std::map<std::string, std::string> f;  // element -> object of b
  std::map<std::string, std::string> g;  // element -> object of c
};

/// The alternating-list rewriting system over an SvkInstance.
///
/// A vertex is a list of tokens
///
///   p0 | x1 | q1 | y1 | p1 | x2 | q2 | y2 | ... | pn
///
/// where the p's are morphisms of B, the q's morphisms of C, and the x/y
/// entries elements; endpoints must chain through f and g (p ends at f of
/// the next element, q runs from g of the element before it to g of the one
/// after). The rewrite relation collapses around identities:
///
///   ... q_k | y | id_B | y | q_{k+1} ...  ~>  ... q_k.q_{k+1} ...
///   ... p_k | x | id_C | x | p_{k+1} ...  ~>  ... p_k.p_{k+1} ...
///
/// Each step removes four tokens, so the relation is Noetherian by length.
/// Edges are identified as "list#center", center being the token index of
/// the identity morphism collapsed away.
///
/// With a pair bound the system is finite (and closed under rewriting);
/// without one, vertex enumeration is unsupported but everything pointwise
/// still works.
class SvkSystem final : public RewritingSystem {
 public:
  explicit SvkSystem(SvkInstance instance,
                     std::optional<std::size_t> max_pairs = std::nullopt);

  const SvkInstance& instance() const { return instance_; }
  std::optional<std::size_t> max_pairs() const { return max_pairs_; }

  std::vector<Edge> outgoing(const VertexId& v) const override;
  std::optional<Edge> edge_by_id(const EdgeId& id) const override;
  bool has_vertex(const VertexId& v) const override;
  bool is_finite() const override { return max_pairs_.has_value(); }
  std::vector<VertexId> vertices() const override;
  std::vector<Edge> edges() const override;

  using Tokens = std::vector<std::string>;

  static std::string render(const Tokens& tokens);

  /// Parses and validates a vertex id; returns a description of the first
  /// shape violation instead of tokens when the list is malformed.
  std::optional<Tokens> parse_vertex(const VertexId& v, std::string* why = nullptr) const;

  /// Token indices at which a collapse applies, ascending.
  std::vector<std::size_t> redex_centers(const Tokens& tokens) const;

  bool is_redex(const Tokens& tokens, std::size_t center) const;

  /// The collapsed list. Requires is_redex(tokens, center).
  Tokens apply_redex(const Tokens& tokens, std::size_t center) const;

  Edge make_edge(const Tokens& tokens, std::size_t center) const;

 private:
  SvkInstance instance_;
  std::optional<std::size_t> max_pairs_;
};

/// Critical-pair joiner for the list system, mirroring the free-group
/// analysis. For two collapse centers on one list: equal centers need no
/// valley; centers two apart overlap in two tokens and both collapses leave
/// the same list (the identity morphism is absorbed by composition); centers
/// four or more apart commute, one further collapse on each side, equal by
/// associativity when the collapses share a morphism.
class SvkJoiner final : public Joiner {
 public:
  explicit SvkJoiner(const SvkSystem& system) : system_(&system) {}

  ExtendedCospan join(const Span& span) const override;

 private:
  const SvkSystem* system_;
};

}  // namespace ars
