#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ars/core.hpp"

namespace ars {

/// A finite rewriting system over explicit vertex and edge tables.
/// Construction validates referential integrity (duplicate ids, dangling
/// endpoints) and reports every violation at once. Enumeration order is the
/// declaration order.
class GenericFiniteSystem final : public RewritingSystem {
 public:
  GenericFiniteSystem(std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::vector<Edge> outgoing(const VertexId& v) const override;
  std::optional<Edge> edge_by_id(const EdgeId& id) const override;
  bool has_vertex(const VertexId& v) const override;
  bool is_finite() const override { return true; }
  std::vector<VertexId> vertices() const override { return vertices_; }
  std::vector<Edge> edges() const override { return edges_; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_set<VertexId> vertex_set_;
  std::unordered_map<VertexId, std::vector<Edge>> outgoing_;
  std::unordered_map<EdgeId, Edge> by_id_;
};

}  // namespace ars
