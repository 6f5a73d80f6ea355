#pragma once

#include <functional>
#include <ostream>
#include <string>

namespace ars {

/// Identifies a vertex of a rewriting system. Identity is literal: two ids
/// name the same vertex iff the strings are equal.
struct VertexId {
  std::string value;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Identifies one edge, i.e. one proof of `src ~> dst`. Parallel edges
/// (same endpoints) carry distinct ids.
struct EdgeId {
  std::string value;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const VertexId& v) {
  return os << v.value;
}

inline std::ostream& operator<<(std::ostream& os, const EdgeId& e) {
  return os << e.value;
}

}  // namespace ars

template <>
struct std::hash<ars::VertexId> {
  std::size_t operator()(const ars::VertexId& v) const noexcept {
    return std::hash<std::string>{}(v.value);
  }
};

template <>
struct std::hash<ars::EdgeId> {
  std::size_t operator()(const ars::EdgeId& e) const noexcept {
    return std::hash<std::string>{}(e.value);
  }
};
