#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ars/errors.hpp"
#include "ars/ids.hpp"

namespace ars {

/// One edge of a rewriting system: a single proof of `src ~> dst`.
struct Edge {
  EdgeId id;
  VertexId src;
  VertexId dst;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Traversal direction of an edge inside a chain. `Fwd` walks src -> dst,
/// `Bwd` walks dst -> src.
enum class Dir { Fwd, Bwd };

inline Dir flip(Dir d) { return d == Dir::Fwd ? Dir::Bwd : Dir::Fwd; }

/// One segment of a chain: an edge together with the direction it is walked.
struct Step {
  Edge edge;
  Dir dir = Dir::Fwd;

  friend bool operator==(const Step&, const Step&) = default;
};

inline const VertexId& step_source(const Step& s) {
  return s.dir == Dir::Fwd ? s.edge.src : s.edge.dst;
}

inline const VertexId& step_target(const Step& s) {
  return s.dir == Dir::Fwd ? s.edge.dst : s.edge.src;
}

inline Step invert(const Step& s) { return Step{s.edge, flip(s.dir)}; }

/// A finite walk in the symmetric closure of the step relation. Each step
/// may traverse its edge forwards or backwards; consecutive steps must
/// chain up (target of step i = source of step i+1), and a nonempty chain
/// starts at the source of its first step.
struct Chain {
  VertexId start;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  bool empty() const { return steps.empty(); }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// The chain with no steps, sitting at `v`.
inline Chain trivial_chain(VertexId v) { return Chain{std::move(v), {}}; }

/// Final vertex of the walk (the start vertex for empty chains).
const VertexId& chain_end(const Chain& c);

/// Endpoint-matching validator: true iff every step leaves the vertex the
/// previous step arrived at.
bool is_well_formed(const Chain& c);

/// Concatenation. Requires chain_end(c1) == c2.start.
Chain concat(const Chain& c1, const Chain& c2);

/// Reversal: walks the same edges in opposite order and direction.
/// invert(invert(c)) == c.
Chain invert(const Chain& c);

/// True iff all steps share one direction. Empty chains are monotone.
bool is_monotone(const Chain& c);

/// The vertex list of a chain: the arrival vertex of each step, in order.
/// The initial vertex is deliberately not listed, so that the base point of
/// a cycle appears exactly once (at the end).
std::vector<VertexId> vertex_list(const Chain& c);

/// A chain that returns to its start vertex. The start doubles as the
/// base point; rotations of a cycle are distinct cycles.
struct Cycle {
  Chain chain;

  const VertexId& basepoint() const { return chain.start; }
  std::size_t length() const { return chain.steps.size(); }
  bool empty() const { return chain.steps.empty(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline Cycle trivial_cycle(VertexId v) { return Cycle{trivial_chain(std::move(v))}; }

/// Wraps a chain as a cycle. Requires the chain to be well-formed and
/// closed (chain_end == start).
Cycle as_cycle(Chain c);

bool is_well_formed(const Cycle& c);

/// Moves the first step to the end; the base point advances to that step's
/// arrival vertex. Rotating an empty cycle is the identity, and
/// rotate^length == identity.
Cycle rotate(const Cycle& c);

/// rotate applied n times (computed directly, not iteratively).
Cycle rotate(const Cycle& c, std::size_t n);

std::vector<VertexId> vertex_list(const Cycle& c);

/// A local peak: two edges leaving a common apex.
struct Span {
  VertexId apex;
  Edge left;
  Edge right;

  friend bool operator==(const Span&, const Span&) = default;
};

bool is_well_formed(const Span& s);

/// The span walked as a chain: Bwd over `left` then Fwd over `right`,
/// from left.dst through the apex to right.dst.
Chain span_chain(const Span& s);

/// Result of scanning a cycle for a span (a Bwd step immediately followed
/// by a Fwd step, cyclically).
struct SpanSearch {
  enum class Kind {
    Empty,             ///< the cycle has no steps
    Found,             ///< span located; rotation/span/tau are set
    MonotoneNonempty,  ///< nonempty cycle with all steps in one direction:
                       ///< evidence that some vertex steps to itself, i.e.
                       ///< the relation is not Noetherian
  };

  Kind kind = Kind::Empty;

  // Only meaningful for Kind::Found:
  std::size_t rotation = 0;       ///< minimal n so rotate^n(c) starts Bwd,Fwd
  std::optional<Span> span;       ///< rotate^n(c) starts Bwd over span.left,
                                  ///< then Fwd over span.right
  std::optional<Chain> tau;       ///< inverse of the remaining suffix: a chain
                                  ///< from the rotated base point to right.dst
};

/// Locates a span in a cycle. For a nonempty, non-monotone cycle some
/// rotation must begin Bwd-then-Fwd (both directions occur, so going around
/// the cycle there is a switch from Bwd to Fwd); the smallest such rotation
/// is reported, which makes downstream decompositions reproducible.
SpanSearch find_span(const Cycle& c);

/// Interface to a rewriting system: per vertex, its finitely many outgoing
/// edges. Implementations must be deterministic: equal queries return equal
/// results, in a fixed order. Finite systems additionally enumerate their
/// vertices and edges.
class RewritingSystem {
 public:
  virtual ~RewritingSystem() = default;

  /// All edges with src == v, in a fixed order.
  virtual std::vector<Edge> outgoing(const VertexId& v) const = 0;

  /// Resolves an edge id to the edge it names, if any.
  virtual std::optional<Edge> edge_by_id(const EdgeId& id) const = 0;

  virtual bool has_vertex(const VertexId& v) const = 0;

  virtual bool is_finite() const = 0;

  /// Finite enumerations. Throw UnsupportedOperationError when !is_finite().
  virtual std::vector<VertexId> vertices() const = 0;
  virtual std::vector<Edge> edges() const = 0;
};

/// Checks that a chain is well-formed and that every step's edge is the
/// system's edge of that id. Returns a description of the first problem, or
/// nullopt if the chain lives in the system.
std::optional<std::string> validate_in_system(const RewritingSystem& system, const Chain& c);

}  // namespace ars
