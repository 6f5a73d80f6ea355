#pragma once

#include <memory>
#include <optional>

#include "ars/coherence.hpp"
#include "ars/confluence.hpp"
#include "ars/core.hpp"
#include "ars/groupoid.hpp"
#include "ars/words.hpp"

namespace ars {

/// The free-group rewriting system: vertices are words over the signed
/// letters of `generators` generators, and each edge removes one adjacent
/// inverse pair. Edges are identified by (source word, redex position),
/// rendered as "word:position", which makes spans literally pairs of redex
/// positions on a common word.
///
/// Without a length bound the vertex space is infinite but every forward
/// cone is finite (each step shortens the word by two). With a bound the
/// system is finite and closed under rewriting, so bounded enumerations see
/// every span and cycle among the retained words.
class FreeGroupSystem final : public RewritingSystem {
 public:
  explicit FreeGroupSystem(int generators,
                           std::optional<std::size_t> max_len = std::nullopt);

  int generators() const { return generators_; }
  std::optional<std::size_t> max_len() const { return max_len_; }

  std::vector<Edge> outgoing(const VertexId& v) const override;
  std::optional<Edge> edge_by_id(const EdgeId& id) const override;
  bool has_vertex(const VertexId& v) const override;
  bool is_finite() const override { return max_len_.has_value(); }
  std::vector<VertexId> vertices() const override;
  std::vector<Edge> edges() const override;

  /// Word of a vertex; throws ParseError for ids outside the alphabet.
  Word word_of(const VertexId& v) const;

  static EdgeId make_edge_id(const std::string& word, std::size_t pos);

  struct RedexRef {
    std::string word;
    std::size_t pos = 0;
  };
  /// Splits "word:position"; nullopt when the id has a different shape.
  static std::optional<RedexRef> parse_edge_id(const EdgeId& id);

  /// The edge removing the inverse pair at `pos`, if it is a redex.
  std::optional<Edge> edge_at(const Word& w, std::size_t pos) const;

 private:
  int generators_;
  std::optional<std::size_t> max_len_;
};

/// Critical-pair joiner for the free-group system. For two redexes i <= j
/// on one word: equal positions need no valley; adjacent positions
/// (j == i+1) overlap in one letter and both removals leave the same word;
/// disjoint positions commute, one further removal on each side landing on
/// the common word.
class FgJoiner final : public Joiner {
 public:
  explicit FgJoiner(int generators) : system_(generators) {}

  ExtendedCospan join(const Span& span) const override;

 private:
  FreeGroupSystem system_;  // unbounded view, used to rebuild edges
};

/// The canonical coherent labelling of the free-group system into the free
/// group on the same generators: each word is sent to its reduced value, and
/// an edge to the induced potential difference. Removing an inverse pair
/// never changes the reduced value, so every edge is labelled with the
/// identity; what the coherence checker then verifies is that the evaluation
/// algebra really collapses every confluence cycle.
EdgeLabelling word_value_labelling(std::shared_ptr<const FreeGroupTarget> target);

}  // namespace ars
