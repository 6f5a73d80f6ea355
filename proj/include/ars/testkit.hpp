#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ars/coherence.hpp"
#include "ars/core.hpp"
#include "ars/orders.hpp"

namespace ars {

/// Brute-force oracles, deliberately dumber than the main implementations
/// so the two sides stay independent.

struct EnumerationBound {
  std::size_t max_len = 0;
  std::optional<VertexId> basepoint;      ///< only cycles based here
  std::optional<std::size_t> vertex_cap;  ///< only the first N vertices as base points
};

/// Incoming-edge adjacency of a finite system, in edge enumeration order.
std::unordered_map<VertexId, std::vector<Edge>> incoming_map(const RewritingSystem& system);

/// Visits every closed chain of length <= bound.max_len, by depth-first
/// search over steps in both directions (forward edges first). Includes the
/// empty cycle at every base point; distinct literal representations are
/// distinct cycles, so rotations and inversions all appear. The visitor
/// returns false to stop early.
void enumerate_cycles(const RewritingSystem& system, const EnumerationBound& bound,
                      const std::function<bool(const Cycle&)>& visit);

/// Same enumeration, materialized.
std::vector<Cycle> enumerate_cycles(const RewritingSystem& system, const EnumerationBound& bound);

/// Every ordered pair of outgoing edges per vertex, including the diagonal.
std::vector<Span> enumerate_spans(const RewritingSystem& system);

/// The list order decided by trying every split of k into three contiguous
/// parts against every position of l. Cubic and obviously complete.
bool brute_list_lt(const VertexList& k, const VertexList& l, const BaseOrder& base);

struct BruteCoherenceResult {
  bool all_identity = true;
  std::size_t cycles_checked = 0;
  std::optional<Cycle> failing;
  std::optional<std::string> morphism;
};

/// Evaluates every enumerated cycle in the labelling; reports the first
/// non-identity.
BruteCoherenceResult brute_coherence(const RewritingSystem& system, const EdgeLabelling& labelling,
                                     const EnumerationBound& bound);

/// Decides whether `smaller` sits below `larger` within at most two steps of
/// the rotation-invariant cycle order, searching single-deletion lists as
/// intermediates for the two-step case (which is the shape decomposition
/// steps produce when the joining chain is empty). Returns the number of
/// steps used, or nullopt if none found within two.
std::optional<int> descent_steps(const Cycle& smaller, const Cycle& larger, const BaseOrder& base);

}  // namespace ars
