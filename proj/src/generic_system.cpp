#include "ars/generic_system.hpp"

namespace ars {

GenericFiniteSystem::GenericFiniteSystem(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::vector<std::string> bad;
  for (const VertexId& v : vertices_) {
    if (!vertex_set_.insert(v).second) bad.push_back("duplicate vertex id '" + v.value + "'");
  }
  for (const Edge& e : edges_) {
    if (!by_id_.emplace(e.id, e).second) bad.push_back("duplicate edge id '" + e.id.value + "'");
    if (!vertex_set_.count(e.src)) {
      bad.push_back("edge '" + e.id.value + "' has unknown src '" + e.src.value + "'");
    }
    if (!vertex_set_.count(e.dst)) {
      bad.push_back("edge '" + e.id.value + "' has unknown dst '" + e.dst.value + "'");
    }
  }
  if (!bad.empty()) {
    throw IntegrityError("system tables are inconsistent", std::move(bad));
  }
  for (const Edge& e : edges_) {
    outgoing_[e.src].push_back(e);
  }
}

std::vector<Edge> GenericFiniteSystem::outgoing(const VertexId& v) const {
  auto it = outgoing_.find(v);
  return it == outgoing_.end() ? std::vector<Edge>{} : it->second;
}

std::optional<Edge> GenericFiniteSystem::edge_by_id(const EdgeId& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

bool GenericFiniteSystem::has_vertex(const VertexId& v) const {
  return vertex_set_.count(v) > 0;
}

}  // namespace ars
