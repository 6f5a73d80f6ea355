#include "ars/json_io.hpp"

#include <memory>

namespace ars {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

Json system_to_json(const RewritingSystem& system) {
  Json j;
  j["vertices"] = Json::array();
  for (const VertexId& v : system.vertices()) j["vertices"].push_back(v.value);
  j["edges"] = Json::array();
  for (const Edge& e : system.edges()) {
    j["edges"].push_back({{"id", e.id.value}, {"src", e.src.value}, {"dst", e.dst.value}});
  }
  return j;
}

GenericFiniteSystem system_from_json(const Json& j) {
  const Json& jv = require(j, "vertices");
  const Json& je = require(j, "edges");
  if (!jv.is_array() || !je.is_array()) {
    throw ParseError("'vertices' and 'edges' must be arrays");
  }
  std::vector<VertexId> vertices;
  for (const Json& v : jv) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    vertices.push_back(VertexId{v.get<std::string>()});
  }
  std::vector<Edge> edges;
  for (const Json& e : je) {
    edges.push_back(Edge{EdgeId{require_string(e, "id")}, VertexId{require_string(e, "src")},
                         VertexId{require_string(e, "dst")}});
  }
  return GenericFiniteSystem(std::move(vertices), std::move(edges));
}

Json chain_to_json(const Chain& chain) {
  Json j;
  j["start"] = chain.start.value;
  j["steps"] = Json::array();
  for (const Step& s : chain.steps) {
    j["steps"].push_back({{"edge", s.edge.id.value}, {"dir", s.dir == Dir::Fwd ? "fwd" : "bwd"}});
  }
  return j;
}

Chain chain_from_json(const Json& j, const RewritingSystem& system) {
  Chain chain{VertexId{require_string(j, "start")}, {}};
  const Json& steps = require(j, "steps");
  if (!steps.is_array()) throw ParseError("'steps' must be an array");
  for (const Json& s : steps) {
    const EdgeId id{require_string(s, "edge")};
    const std::string dir = require_string(s, "dir");
    if (dir != "fwd" && dir != "bwd") {
      throw ParseError("step direction must be \"fwd\" or \"bwd\"");
    }
    auto edge = system.edge_by_id(id);
    if (!edge) throw ParseError("unknown edge '" + id.value + "'");
    chain.steps.push_back(Step{*edge, dir == "fwd" ? Dir::Fwd : Dir::Bwd});
  }
  if (auto problem = validate_in_system(system, chain)) {
    throw ParseError("chain does not fit the system: " + *problem);
  }
  return chain;
}

Cycle cycle_from_json(const Json& j, const RewritingSystem& system) {
  Chain chain = chain_from_json(j, system);
  if (chain_end(chain) != chain.start) {
    throw ParseError("chain is not closed: ends at '" + chain_end(chain).value + "'");
  }
  return as_cycle(std::move(chain));
}

Json span_to_json(const Span& span) {
  return Json{{"apex", span.apex.value}, {"left", span.left.id.value}, {"right", span.right.id.value}};
}

Json cospan_to_json(const ExtendedCospan& cospan) {
  auto leg = [](const Chain& c) {
    Json ids = Json::array();
    for (const Step& s : c.steps) ids.push_back(s.edge.id.value);
    return ids;
  };
  return Json{{"left", leg(cospan.left)}, {"right", leg(cospan.right)}, {"meet", meet(cospan).value}};
}

Json report_to_json(const ConfluenceReport& report) {
  Json entries = Json::array();
  for (const SpanCheckEntry& e : report.entries) {
    Json entry;
    entry["span"] = span_to_json(e.span);
    switch (e.status) {
      case SpanCheckEntry::Status::Ok:
        entry["status"] = "ok";
        break;
      case SpanCheckEntry::Status::Invalid:
        entry["status"] = "invalid";
        break;
      case SpanCheckEntry::Status::Error:
        entry["status"] = "error";
        break;
    }
    if (e.cospan) entry["cospan"] = cospan_to_json(*e.cospan);
    if (!e.message.empty()) entry["error"] = e.message;
    entries.push_back(std::move(entry));
  }
  return Json{{"spans", report.entries.size()}, {"failures", report.failures}, {"entries", entries}};
}

Json trace_to_json(const DecompositionTrace& trace) {
  Json steps = Json::array();
  for (const DecompStep& s : trace.steps) {
    steps.push_back(Json{{"rotation", s.rotation},
                         {"span", span_to_json(s.span)},
                         {"cospan", cospan_to_json(s.cospan)},
                         {"confluence_cycle", chain_to_json(s.confluence_cycle.chain)},
                         {"remainder", chain_to_json(s.remainder.chain)},
                         {"tau", chain_to_json(s.tau)}});
  }
  return Json{{"input", chain_to_json(trace.input.chain)},
              {"terminal", trace.terminal.value},
              {"steps", steps}};
}

Json verdict_to_json(const CoherenceVerdict& verdict) {
  Json j;
  j["status"] = verdict.certified ? "certified" : "counterexample";
  j["spans_checked"] = verdict.spans_checked;
  if (verdict.span) j["span"] = span_to_json(*verdict.span);
  if (verdict.morphism) j["morphism"] = *verdict.morphism;
  return j;
}

TableGroupoid table_groupoid_from_json(const Json& j) {
  TableGroupoid::Tables t;
  if (j.contains("name")) t.name = require_string(j, "name");
  for (const Json& o : require(j, "objects")) {
    if (!o.is_string()) throw ParseError("groupoid objects must be strings");
    t.objects.push_back(o.get<std::string>());
  }
  for (const Json& m : require(j, "morphisms")) {
    t.morphisms.push_back(TableGroupoid::MorphismDecl{
        require_string(m, "id"), require_string(m, "src"), require_string(m, "dst")});
  }
  for (const auto& [obj, id] : require(j, "identities").items()) {
    if (!id.is_string()) throw ParseError("identity entries must be strings");
    t.identities[obj] = id.get<std::string>();
  }
  for (const Json& row : require(j, "compose")) {
    if (!row.is_array() || row.size() != 3) {
      throw ParseError("compose rows must be [left, right, result]");
    }
    t.composition[{row[0].get<std::string>(), row[1].get<std::string>()}] =
        row[2].get<std::string>();
  }
  for (const auto& [m, inv] : require(j, "inverse").items()) {
    if (!inv.is_string()) throw ParseError("inverse entries must be strings");
    t.inverses[m] = inv.get<std::string>();
  }
  return TableGroupoid(std::move(t));
}

EdgeLabelling labelling_from_json(const Json& j) {
  const Json& target = require(j, "target");
  const std::string kind = require_string(target, "kind");
  std::shared_ptr<const Groupoid> groupoid;
  if (kind == "permutation") {
    groupoid = std::make_shared<PermutationGroup>(require(target, "degree").get<int>());
  } else if (kind == "free_group") {
    groupoid = std::make_shared<FreeGroupTarget>(require(target, "generators").get<int>());
  } else if (kind == "table") {
    groupoid = std::make_shared<TableGroupoid>(table_groupoid_from_json(target));
  } else {
    throw ParseError("unknown target kind '" + kind + "'");
  }

  std::map<VertexId, std::string> objects;
  if (j.contains("objects")) {
    for (const auto& [vertex, obj] : j.at("objects").items()) {
      if (!obj.is_string()) throw ParseError("object assignments must be strings");
      objects[VertexId{vertex}] = obj.get<std::string>();
    }
  }
  std::map<EdgeId, std::string> morphisms;
  for (const auto& [edge, m] : require(j, "morphisms").items()) {
    if (!m.is_string()) throw ParseError("morphism assignments must be strings");
    morphisms[EdgeId{edge}] = m.get<std::string>();
  }
  return EdgeLabelling::from_maps(std::move(groupoid), std::move(objects), std::move(morphisms));
}

SvkInstance svk_instance_from_json(const Json& j) {
  SvkInstance inst{table_groupoid_from_json(require(j, "groupoid_b")),
                   table_groupoid_from_json(require(j, "groupoid_c")),
                   {},
                   {},
                   {}};
  for (const Json& e : require(j, "elements")) {
    if (!e.is_string()) throw ParseError("elements must be strings");
    inst.elements.push_back(e.get<std::string>());
  }
  for (const auto& [elt, obj] : require(j, "f").items()) {
    if (!obj.is_string()) throw ParseError("f entries must be strings");
    inst.f[elt] = obj.get<std::string>();
  }
  for (const auto& [elt, obj] : require(j, "g").items()) {
    if (!obj.is_string()) throw ParseError("g entries must be strings");
    inst.g[elt] = obj.get<std::string>();
  }
  return inst;
}

}  // namespace ars
