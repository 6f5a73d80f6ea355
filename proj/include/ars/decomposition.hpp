#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ars/confluence.hpp"
#include "ars/core.hpp"

namespace ars {

/// One peeling step: after `rotation` rotations the incoming cycle splits as
/// span-then-inverse-tau, and removing the confluence cycle of that span
/// leaves `remainder`. Writing kappa for span_chain(span) and alpha for
/// flatten_cospan(cospan), the step satisfies, as literal chain equalities:
///
///   rotate(incoming, rotation).chain == concat(kappa, invert(tau))
///   confluence_cycle.chain           == concat(kappa, invert(alpha))
///   remainder.chain                  == concat(alpha, invert(tau))
///
/// so the rotated incoming cycle is exactly the merge of the confluence
/// cycle and the remainder along alpha.
struct DecompStep {
  std::size_t rotation = 0;
  Span span;
  ExtendedCospan cospan;
  Cycle confluence_cycle;
  Cycle remainder;
  Chain tau;

  /// Length of the cycle this step was peeled from.
  std::size_t incoming_length() const { return 2 + tau.length(); }
};

/// Replays the three merge equalities above against `incoming`.
bool verify_merge_decomposition(const Cycle& incoming, const DecompStep& step);

struct DecomposeStepResult {
  enum class Kind {
    Empty,             ///< the cycle has no steps; basepoint is set
    Step,              ///< one peeling step produced
    MonotoneNonempty,  ///< non-Noetherian evidence, propagated from find_span
  };

  Kind kind = Kind::Empty;
  std::optional<VertexId> basepoint;
  std::optional<DecompStep> step;
};

/// Performs one decomposition step on a cycle: locate a span, join it, and
/// split the cycle into the span's confluence cycle and a remainder.
DecomposeStepResult decompose_step(const RewritingSystem& system, const Joiner& joiner,
                                   const Cycle& cycle);

/// The certificate that a cycle is an iterated, rotated merge of confluence
/// cycles: each step's remainder is the next step's incoming cycle, and the
/// final remainder is the empty cycle at `terminal`.
struct DecompositionTrace {
  Cycle input;
  std::vector<DecompStep> steps;
  VertexId terminal;

  const Cycle& incoming(std::size_t i) const {
    return i == 0 ? input : steps[i - 1].remainder;
  }
};

/// Thrown when decomposition meets a nonempty monotone cycle: following it
/// around shows some vertex rewrites to itself, so the system is not
/// Noetherian. The offending cycle is attached as evidence.
class NonNoetherianError : public Error {
 public:
  NonNoetherianError(const std::string& message, Cycle evidence)
      : Error(message), evidence_(std::move(evidence)) {}

  const Cycle& evidence() const { return evidence_; }

 private:
  Cycle evidence_;
};

/// Generous default for desk-scale inputs; surfaced as a CLI flag.
inline std::size_t default_decompose_fuel(const Cycle& cycle) {
  const std::size_t n = cycle.length() + 1;
  return 16 * n * n;
}

/// Iterates decompose_step to the empty cycle. Throws FuelExhaustedError
/// when fuel runs out and NonNoetherianError on monotone evidence.
DecompositionTrace decompose(const RewritingSystem& system, const Joiner& joiner,
                             const Cycle& cycle, std::size_t fuel);

/// What a caller must supply to fold a witness over a decomposition trace.
/// The handlers are assumed to be stable under merging and rotating: merge
/// combines witnesses of the two cycles glued along a shared chain into one
/// for their outer boundary, and applying rotate as many times as a cycle is
/// long must yield a witness that counts for the unrotated cycle again.
template <typename W>
struct InductionHandlers {
  std::function<W(const VertexId&)> empty;
  std::function<W(const Span&, const ExtendedCospan&)> confluence;
  std::function<W(W, W)> merge;  ///< (confluence-cycle witness, remainder witness)
  std::function<W(W)> rotate;
};

/// Noetherian cycle induction, run over a precomputed trace: starting from
/// the witness for the terminal empty cycle, each step (last to first)
/// merges in the witness of its confluence cycle and un-rotates by applying
/// `rotate` (L - rotation mod L) times, L being the incoming cycle's length.
/// Returns the witness for trace.input.
template <typename W>
W cycle_induction(const InductionHandlers<W>& handlers, const DecompositionTrace& trace) {
  W witness = handlers.empty(trace.terminal);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const DecompStep& step = *it;
    witness = handlers.merge(handlers.confluence(step.span, step.cospan), std::move(witness));
    const std::size_t len = step.incoming_length();
    const std::size_t unrotate = len - step.rotation % len;
    for (std::size_t i = 0; i < unrotate; ++i) {
      witness = handlers.rotate(std::move(witness));
    }
  }
  return witness;
}

}  // namespace ars
