#pragma once

#include <random>
#include <string>
#include <vector>

#include "ars/core.hpp"
#include "ars/generic_system.hpp"
#include "ars/testkit.hpp"

namespace testutil {

inline ars::VertexId v(const std::string& s) { return ars::VertexId{s}; }
inline ars::EdgeId eid(const std::string& s) { return ars::EdgeId{s}; }

inline ars::Edge edge(const std::string& id, const std::string& src, const std::string& dst) {
  return ars::Edge{eid(id), v(src), v(dst)};
}

// a -> b, a -> c, b -> d, c -> d
inline ars::GenericFiniteSystem diamond() {
  return ars::GenericFiniteSystem(
      {v("a"), v("b"), v("c"), v("d")},
      {edge("ab", "a", "b"), edge("ac", "a", "c"), edge("bd", "b", "d"), edge("cd", "c", "d")});
}

// a -> b, a -> c, no way to rejoin
inline ars::GenericFiniteSystem fork() {
  return ars::GenericFiniteSystem({v("a"), v("b"), v("c")},
                                  {edge("ab", "a", "b"), edge("ac", "a", "c")});
}

// a -> b -> a
inline ars::GenericFiniteSystem two_cycle() {
  return ars::GenericFiniteSystem({v("a"), v("b")},
                                  {edge("ab", "a", "b"), edge("ba", "b", "a")});
}

// two parallel edges a -> b
inline ars::GenericFiniteSystem parallel_edges() {
  return ars::GenericFiniteSystem({v("a"), v("b")},
                                  {edge("e1", "a", "b"), edge("e2", "a", "b")});
}

// Random directed acyclic system on `n` vertices: edges only go from lower
// to higher index, so the system is Noetherian by construction.
inline ars::GenericFiniteSystem random_dag(std::mt19937& rng, std::size_t n, double edge_prob) {
  std::vector<ars::VertexId> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(v("v" + std::to_string(i)));
  std::vector<ars::Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < edge_prob) {
        edges.push_back(edge("e" + std::to_string(edges.size()), vertices[i].value,
                             vertices[j].value));
      }
    }
  }
  return ars::GenericFiniteSystem(std::move(vertices), std::move(edges));
}

// Random walk through the symmetric closure, starting anywhere.
inline ars::Chain random_walk(const ars::RewritingSystem& system,
                              const std::unordered_map<ars::VertexId, std::vector<ars::Edge>>& in,
                              std::mt19937& rng, std::size_t len) {
  const auto vertices = system.vertices();
  std::uniform_int_distribution<std::size_t> pick_vertex(0, vertices.size() - 1);
  ars::Chain walk{vertices[pick_vertex(rng)], {}};
  for (std::size_t i = 0; i < len; ++i) {
    const ars::VertexId& at = ars::chain_end(walk);
    std::vector<ars::Step> moves;
    for (const ars::Edge& e : system.outgoing(at)) moves.push_back(ars::Step{e, ars::Dir::Fwd});
    auto it = in.find(at);
    if (it != in.end()) {
      for (const ars::Edge& e : it->second) moves.push_back(ars::Step{e, ars::Dir::Bwd});
    }
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    walk.steps.push_back(moves[pick(rng)]);
  }
  return walk;
}

// A cycle out of a random walk: go somewhere, come straight back.
inline ars::Cycle random_cycle(const ars::RewritingSystem& system,
                               const std::unordered_map<ars::VertexId, std::vector<ars::Edge>>& in,
                               std::mt19937& rng, std::size_t half_len) {
  const ars::Chain out = random_walk(system, in, rng, half_len);
  return ars::as_cycle(ars::concat(out, ars::invert(out)));
}

}  // namespace testutil
