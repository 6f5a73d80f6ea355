#include "ars/testkit.hpp"

#include <algorithm>
#include <functional>

namespace ars {

std::unordered_map<VertexId, std::vector<Edge>> incoming_map(const RewritingSystem& system) {
  std::unordered_map<VertexId, std::vector<Edge>> in;
  for (const Edge& e : system.edges()) {
    in[e.dst].push_back(e);
  }
  return in;
}

void enumerate_cycles(const RewritingSystem& system, const EnumerationBound& bound,
                      const std::function<bool(const Cycle&)>& visit) {
  std::vector<VertexId> bases = system.vertices();
  if (bound.vertex_cap && *bound.vertex_cap < bases.size()) {
    bases.resize(*bound.vertex_cap);
  }
  const auto incoming = incoming_map(system);
  static const std::vector<Edge> kNoEdges;
  auto incoming_of = [&](const VertexId& v) -> const std::vector<Edge>& {
    auto it = incoming.find(v);
    return it == incoming.end() ? kNoEdges : it->second;
  };
  // The walk revisits vertices constantly; memoize their outgoing edges.
  std::unordered_map<VertexId, std::vector<Edge>> outgoing_memo;
  auto outgoing_of = [&](const VertexId& v) -> const std::vector<Edge>& {
    auto it = outgoing_memo.find(v);
    if (it == outgoing_memo.end()) {
      it = outgoing_memo.emplace(v, system.outgoing(v)).first;
    }
    return it->second;
  };

  Cycle current;
  for (const VertexId& base : bases) {
    if (bound.basepoint && *bound.basepoint != base) continue;
    current.chain.start = base;
    current.chain.steps.clear();
    std::vector<Step>& walk = current.chain.steps;
    // Preorder emission: a closed prefix is a cycle, and may extend further.
    std::function<bool(const VertexId&)> dfs = [&](const VertexId& at) {
      if (at == base && !visit(current)) return false;
      if (walk.size() == bound.max_len) return true;
      for (const Edge& e : outgoing_of(at)) {
        walk.push_back(Step{e, Dir::Fwd});
        const bool go = dfs(e.dst);
        walk.pop_back();
        if (!go) return false;
      }
      for (const Edge& e : incoming_of(at)) {
        walk.push_back(Step{e, Dir::Bwd});
        const bool go = dfs(e.src);
        walk.pop_back();
        if (!go) return false;
      }
      return true;
    };
    if (!dfs(base)) return;
  }
}

std::vector<Cycle> enumerate_cycles(const RewritingSystem& system, const EnumerationBound& bound) {
  std::vector<Cycle> out;
  enumerate_cycles(system, bound, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<Span> enumerate_spans(const RewritingSystem& system) {
  std::vector<Span> out;
  for (const VertexId& v : system.vertices()) {
    const std::vector<Edge> edges = system.outgoing(v);
    for (const Edge& left : edges) {
      for (const Edge& right : edges) {
        out.push_back(Span{v, left, right});
      }
    }
  }
  return out;
}

bool brute_list_lt(const VertexList& k, const VertexList& l, const BaseOrder& base) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t cut1 = 0; cut1 <= k.size(); ++cut1) {
      for (std::size_t cut2 = cut1; cut2 <= k.size(); ++cut2) {
        // k = k[0..cut1) ++ k[cut1..cut2) ++ k[cut2..)
        const bool prefix_ok =
            std::equal(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(cut1), l.begin(),
                       l.begin() + static_cast<std::ptrdiff_t>(i));
        const bool suffix_ok =
            std::equal(k.begin() + static_cast<std::ptrdiff_t>(cut2), k.end(),
                       l.begin() + static_cast<std::ptrdiff_t>(i + 1), l.end());
        if (!prefix_ok || !suffix_ok) continue;
        bool mid_ok = true;
        for (std::size_t m = cut1; m < cut2; ++m) {
          if (!base.less(k[m], l[i])) {
            mid_ok = false;
            break;
          }
        }
        if (mid_ok) return true;
      }
    }
  }
  return false;
}

BruteCoherenceResult brute_coherence(const RewritingSystem& system, const EdgeLabelling& labelling,
                                     const EnumerationBound& bound) {
  BruteCoherenceResult result;
  enumerate_cycles(system, bound, [&](const Cycle& cycle) {
    ++result.cycles_checked;
    if (!eval_is_identity(labelling, cycle)) {
      result.all_identity = false;
      result.failing = cycle;
      result.morphism = eval_cycle(labelling, cycle);
      return false;
    }
    return true;
  });
  return result;
}

std::optional<int> descent_steps(const Cycle& smaller, const Cycle& larger, const BaseOrder& base) {
  const VertexList small_list = vertex_list(smaller);
  const VertexList large_list = vertex_list(larger);
  if (rot_lt(small_list, large_list, base)) return 1;
  // Two steps through a single-deletion intermediate. Deleting from any
  // rotation is enough: the order ignores rotations of the smaller side by
  // definition and of the larger side by the rotation-invariance lemma.
  const std::size_t rotations = std::max<std::size_t>(1, large_list.size());
  VertexList rotated = large_list;
  for (std::size_t r = 0; r < rotations; ++r) {
    for (std::size_t j = 0; j < rotated.size(); ++j) {
      VertexList mid = rotated;
      mid.erase(mid.begin() + static_cast<std::ptrdiff_t>(j));
      if (rot_lt(mid, large_list, base) && rot_lt(small_list, mid, base)) return 2;
    }
    rotated = rotate_list(std::move(rotated));
  }
  return std::nullopt;
}

}  // namespace ars
