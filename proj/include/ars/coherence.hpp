#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "ars/confluence.hpp"
#include "ars/core.hpp"
#include "ars/decomposition.hpp"
#include "ars/groupoid.hpp"

namespace ars {

/// Assigns a target object to every vertex and a target morphism to every
/// edge, with morphism_of(e) running from object_of(e.src) to
/// object_of(e.dst); that alignment is checked on every lookup.
class EdgeLabelling {
 public:
  EdgeLabelling(std::shared_ptr<const Groupoid> target,
                std::function<std::string(const VertexId&)> object_of,
                std::function<std::string(const Edge&)> morphism_of);

  /// Lookup-table labelling. Vertices absent from `objects` default to the
  /// target's unique object when there is one.
  static EdgeLabelling from_maps(std::shared_ptr<const Groupoid> target,
                                 std::map<VertexId, std::string> objects,
                                 std::map<EdgeId, std::string> morphisms);

  const Groupoid& target() const { return *target_; }
  std::shared_ptr<const Groupoid> target_ptr() const { return target_; }

  std::string object_of(const VertexId& v) const;

  /// Canonical morphism for the edge. Throws UnlabelledEdgeError for edges
  /// outside the labelling, Error when endpoints do not line up.
  std::string morphism_of(const Edge& e) const;

 private:
  std::shared_ptr<const Groupoid> target_;
  std::function<std::string(const VertexId&)> object_of_;
  std::function<std::string(const Edge&)> morphism_of_;
};

/// Labels edges of any system into a one-object groupoid through a potential
/// function on vertices: the edge a ~> b gets value(a)^-1 ; value(b). Every
/// cycle then telescopes, so this is the canonical coherent labelling.
EdgeLabelling potential_labelling(std::shared_ptr<const Groupoid> target,
                                  std::function<std::string(const VertexId&)> value);

/// Evaluates a chain in the labelling's target: the empty chain gives the
/// identity at its start's object, a Fwd step contributes its morphism, a
/// Bwd step the inverse. Concatenation maps to composition and inversion to
/// inverse.
std::string eval_chain(const EdgeLabelling& labelling, const Chain& chain);

inline std::string eval_cycle(const EdgeLabelling& labelling, const Cycle& cycle) {
  return eval_chain(labelling, cycle.chain);
}

/// Whether a cycle evaluates to the identity morphism.
bool eval_is_identity(const EdgeLabelling& labelling, const Cycle& cycle);

/// Outcome of the confluence-cycle coherence check.
struct CoherenceVerdict {
  bool certified = false;
  std::size_t spans_checked = 0;

  // Set on the first counterexample, in span-enumeration order.
  std::optional<Span> span;
  std::optional<std::string> morphism;
};

/// Checks that every supplied span's confluence cycle evaluates to an
/// identity. By Noetherian cycle induction this certifies that every cycle
/// of the system does, provided the spans enumerate the whole system.
CoherenceVerdict check_confluence_coherence(const RewritingSystem& system, const Joiner& joiner,
                                            const EdgeLabelling& labelling,
                                            std::span<const Span> spans);

/// Result of explaining a single cycle through its decomposition.
struct ExplainResult {
  bool identity = false;
  DecompositionTrace trace;  ///< always the full decomposition

  // Set when some confluence cycle in the trace fails, earliest step first.
  std::optional<Span> span;
  std::optional<std::string> morphism;
};

/// Decomposes the cycle and folds the coherence witness over the trace: if
/// every confluence cycle in the decomposition evaluates to an identity, the
/// trace certifies that the cycle itself does; otherwise the first failing
/// span is reported. Decomposition errors propagate.
ExplainResult explain_cycle(const RewritingSystem& system, const Joiner& joiner,
                            const EdgeLabelling& labelling, const Cycle& cycle,
                            std::size_t fuel);

}  // namespace ars
