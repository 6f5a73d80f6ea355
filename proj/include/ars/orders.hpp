#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ars/core.hpp"

namespace ars {

using VertexList = std::vector<VertexId>;

/// A strict order (any binary relation; no laws imposed) on vertices.
class BaseOrder {
 public:
  virtual ~BaseOrder() = default;
  virtual bool less(const VertexId& x, const VertexId& y) const = 0;
};

/// Adapts a callable to a BaseOrder.
class FnOrder final : public BaseOrder {
 public:
  explicit FnOrder(std::function<bool(const VertexId&, const VertexId&)> fn)
      : fn_(std::move(fn)) {}
  bool less(const VertexId& x, const VertexId& y) const override { return fn_(x, y); }

 private:
  std::function<bool(const VertexId&, const VertexId&)> fn_;
};

/// The canonical base order of a system: less(x, y) iff x is strictly
/// reachable from y (y steps to x in one or more moves). On a Noetherian
/// system this is co-well-founded, which is what the cycle measure needs.
///
/// Reachable sets are computed by forward breadth-first search and memoized
/// per source vertex; the memo is guarded so concurrent readers are safe.
/// The search requires each vertex to have a finite forward cone; a node cap
/// guards against systems where that fails.
class ReachabilityOrder final : public BaseOrder {
 public:
  explicit ReachabilityOrder(const RewritingSystem& system,
                             std::size_t max_nodes = kDefaultNodeCap)
      : system_(&system), max_nodes_(max_nodes) {}

  bool less(const VertexId& x, const VertexId& y) const override;

  static constexpr std::size_t kDefaultNodeCap = 1u << 20;

 private:
  const std::unordered_set<VertexId>& descendants(const VertexId& v) const;

  const RewritingSystem* system_;
  std::size_t max_nodes_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<VertexId, std::unordered_set<VertexId>> memo_;
};

/// True iff every element of k is below x. Vacuously true for empty k.
bool all_less(const VertexList& k, const VertexId& x, const BaseOrder& base);

/// Left rotation of a list, n times.
VertexList rotate_list(VertexList k, std::size_t n = 1);

/// The list order: k is below l iff k is l with a single element replaced
/// by finitely many (possibly zero) strictly smaller elements. Decided by
/// scanning each replacement position; the replaced segment's length is
/// forced to be |k| - |l| + 1.
bool list_lt(const VertexList& k, const VertexList& l, const BaseOrder& base);

/// The rotation-invariant list order: some rotation of k is list_lt-below l.
bool rot_lt(const VertexList& k, const VertexList& l, const BaseOrder& base);

/// One step of the inherited order on cycles: the vertex lists compare under
/// rot_lt over the given base order.
bool cycle_step_lt(const Cycle& smaller, const Cycle& larger, const BaseOrder& base);

/// Same, with the canonical strict-reachability base order of the system.
/// Requires reachability to be decidable (finite forward cones).
bool cycle_step_lt(const Cycle& smaller, const Cycle& larger, const RewritingSystem& system);

}  // namespace ars
