#include "ars/orders.hpp"

#include <algorithm>
#include <deque>

namespace ars {

const std::unordered_set<VertexId>& ReachabilityOrder::descendants(const VertexId& v) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = memo_.find(v);
  if (it != memo_.end()) return it->second;

  std::unordered_set<VertexId> seen;
  std::deque<VertexId> queue;
  for (const Edge& e : system_->outgoing(v)) {
    if (seen.insert(e.dst).second) queue.push_back(e.dst);
  }
  while (!queue.empty()) {
    VertexId cur = std::move(queue.front());
    queue.pop_front();
    if (seen.size() > max_nodes_) {
      throw UnsupportedOperationError(
          "reachability search from '" + v.value + "' exceeded " +
          std::to_string(max_nodes_) + " vertices; system looks non-finite");
    }
    for (const Edge& e : system_->outgoing(cur)) {
      if (seen.insert(e.dst).second) queue.push_back(e.dst);
    }
  }
  return memo_.emplace(v, std::move(seen)).first->second;
}

bool ReachabilityOrder::less(const VertexId& x, const VertexId& y) const {
  return descendants(y).count(x) > 0;
}

bool all_less(const VertexList& k, const VertexId& x, const BaseOrder& base) {
  return std::all_of(k.begin(), k.end(),
                     [&](const VertexId& y) { return base.less(y, x); });
}

VertexList rotate_list(VertexList k, std::size_t n) {
  if (k.empty()) return k;
  const std::size_t m = n % k.size();
  std::rotate(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m), k.end());
  return k;
}

bool list_lt(const VertexList& k, const VertexList& l, const BaseOrder& base) {
  if (l.empty()) return false;
  if (k.size() + 1 < l.size()) return false;  // one step replaces one element
  const std::size_t mid_len = k.size() + 1 - l.size();
  for (std::size_t i = 0; i < l.size(); ++i) {
    // k = l[0..i) ++ mid ++ l[i+1..), with every mid element below l[i].
    if (!std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i), k.begin())) continue;
    if (!std::equal(l.begin() + static_cast<std::ptrdiff_t>(i + 1), l.end(),
                    k.begin() + static_cast<std::ptrdiff_t>(i + mid_len))) {
      continue;
    }
    bool mid_ok = true;
    for (std::size_t j = i; j < i + mid_len; ++j) {
      if (!base.less(k[j], l[i])) {
        mid_ok = false;
        break;
      }
    }
    if (mid_ok) return true;
  }
  return false;
}

bool rot_lt(const VertexList& k, const VertexList& l, const BaseOrder& base) {
  const std::size_t rotations = std::max<std::size_t>(1, k.size());
  VertexList rotated = k;
  for (std::size_t n = 0; n < rotations; ++n) {
    if (list_lt(rotated, l, base)) return true;
    rotated = rotate_list(std::move(rotated));
  }
  return false;
}

bool cycle_step_lt(const Cycle& smaller, const Cycle& larger, const BaseOrder& base) {
  return rot_lt(vertex_list(smaller), vertex_list(larger), base);
}

bool cycle_step_lt(const Cycle& smaller, const Cycle& larger, const RewritingSystem& system) {
  ReachabilityOrder base(system);
  return cycle_step_lt(smaller, larger, base);
}

}  // namespace ars
