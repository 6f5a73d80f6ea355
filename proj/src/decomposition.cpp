#include "ars/decomposition.hpp"

namespace ars {

bool verify_merge_decomposition(const Cycle& incoming, const DecompStep& step) {
  try {
    const Chain kappa = span_chain(step.span);
    const Chain alpha = flatten_cospan(step.cospan);
    return rotate(incoming, step.rotation).chain == concat(kappa, invert(step.tau)) &&
           step.confluence_cycle.chain == concat(kappa, invert(alpha)) &&
           step.remainder.chain == concat(alpha, invert(step.tau));
  } catch (const Error&) {
    return false;  // tampered pieces that do not even compose
  }
}

DecomposeStepResult decompose_step(const RewritingSystem& /*system*/, const Joiner& joiner,
                                   const Cycle& cycle) {
  DecomposeStepResult result;
  const SpanSearch search = find_span(cycle);
  switch (search.kind) {
    case SpanSearch::Kind::Empty:
      result.kind = DecomposeStepResult::Kind::Empty;
      result.basepoint = cycle.basepoint();
      return result;
    case SpanSearch::Kind::MonotoneNonempty:
      result.kind = DecomposeStepResult::Kind::MonotoneNonempty;
      return result;
    case SpanSearch::Kind::Found:
      break;
  }

  const Span& span = *search.span;
  const Chain& tau = *search.tau;
  const ExtendedCospan cospan = joiner.join(span);
  const Chain alpha = flatten_cospan(cospan);

  DecompStep step;
  step.rotation = search.rotation;
  step.span = span;
  step.cospan = cospan;
  step.confluence_cycle = as_cycle(concat(span_chain(span), invert(alpha)));
  step.remainder = as_cycle(concat(alpha, invert(tau)));
  step.tau = tau;

  if (!verify_merge_decomposition(cycle, step)) {
    throw Error("decompose_step: emitted step failed the merge audit");
  }

  result.kind = DecomposeStepResult::Kind::Step;
  result.step = std::move(step);
  return result;
}

DecompositionTrace decompose(const RewritingSystem& system, const Joiner& joiner,
                             const Cycle& cycle, std::size_t fuel) {
  if (fuel == 0) {
    throw FuelExhaustedError("decompose: fuel must be positive");
  }
  DecompositionTrace trace;
  trace.input = cycle;
  Cycle current = cycle;
  for (std::size_t used = 0;; ++used) {
    if (used >= fuel) {
      throw FuelExhaustedError("decompose: fuel exhausted after " + std::to_string(used) +
                               " steps; non-termination suspected");
    }
    DecomposeStepResult r = decompose_step(system, joiner, current);
    switch (r.kind) {
      case DecomposeStepResult::Kind::Empty:
        trace.terminal = *r.basepoint;
        return trace;
      case DecomposeStepResult::Kind::MonotoneNonempty:
        throw NonNoetherianError(
            "decompose: nonempty monotone cycle at '" + current.basepoint().value +
                "' shows the relation is not Noetherian",
            current);
      case DecomposeStepResult::Kind::Step:
        current = r.step->remainder;
        trace.steps.push_back(std::move(*r.step));
        break;
    }
  }
}

}  // namespace ars
