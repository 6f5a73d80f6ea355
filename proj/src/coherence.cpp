#include "ars/coherence.hpp"

namespace ars {

EdgeLabelling::EdgeLabelling(std::shared_ptr<const Groupoid> target,
                             std::function<std::string(const VertexId&)> object_of,
                             std::function<std::string(const Edge&)> morphism_of)
    : target_(std::move(target)),
      object_of_(std::move(object_of)),
      morphism_of_(std::move(morphism_of)) {}

EdgeLabelling EdgeLabelling::from_maps(std::shared_ptr<const Groupoid> target,
                                       std::map<VertexId, std::string> objects,
                                       std::map<EdgeId, std::string> morphisms) {
  std::optional<std::string> default_object;
  if (target->one_object()) default_object = target->the_object();
  auto object_of = [objects = std::move(objects), default_object](const VertexId& v) {
    auto it = objects.find(v);
    if (it != objects.end()) return it->second;
    if (default_object) return *default_object;
    throw UnlabelledEdgeError("no object assigned to vertex '" + v.value + "'");
  };
  auto morphism_of = [morphisms = std::move(morphisms)](const Edge& e) {
    auto it = morphisms.find(e.id);
    if (it == morphisms.end()) {
      throw UnlabelledEdgeError("no morphism assigned to edge '" + e.id.value + "'");
    }
    return it->second;
  };
  return EdgeLabelling(std::move(target), std::move(object_of), std::move(morphism_of));
}

std::string EdgeLabelling::object_of(const VertexId& v) const { return object_of_(v); }

std::string EdgeLabelling::morphism_of(const Edge& e) const {
  const std::string m = target_->canonical(morphism_of_(e));
  if (target_->source(m) != object_of_(e.src) || target_->target(m) != object_of_(e.dst)) {
    throw Error("labelling of edge '" + e.id.value +
                "' does not run between the objects of its endpoints");
  }
  return m;
}

EdgeLabelling potential_labelling(std::shared_ptr<const Groupoid> target,
                                  std::function<std::string(const VertexId&)> value) {
  const std::string obj = target->the_object();
  auto object_of = [obj](const VertexId&) { return obj; };
  auto morphism_of = [target, value = std::move(value)](const Edge& e) {
    return target->compose(target->inverse(value(e.src)), value(e.dst));
  };
  return EdgeLabelling(std::move(target), std::move(object_of), std::move(morphism_of));
}

std::string eval_chain(const EdgeLabelling& labelling, const Chain& chain) {
  const Groupoid& g = labelling.target();
  std::string acc = g.identity(labelling.object_of(chain.start));
  for (const Step& s : chain.steps) {
    std::string m = labelling.morphism_of(s.edge);
    if (s.dir == Dir::Bwd) m = g.inverse(m);
    acc = g.compose(acc, m);
  }
  return acc;
}

bool eval_is_identity(const EdgeLabelling& labelling, const Cycle& cycle) {
  const std::string m = eval_cycle(labelling, cycle);
  return m == labelling.target().identity(labelling.object_of(cycle.basepoint()));
}

CoherenceVerdict check_confluence_coherence(const RewritingSystem& /*system*/,
                                            const Joiner& joiner, const EdgeLabelling& labelling,
                                            std::span<const Span> spans) {
  CoherenceVerdict verdict;
  for (const Span& span : spans) {
    const Cycle cycle = confluence_cycle(span, joiner);
    ++verdict.spans_checked;
    if (!eval_is_identity(labelling, cycle)) {
      verdict.certified = false;
      verdict.span = span;
      verdict.morphism = eval_cycle(labelling, cycle);
      return verdict;
    }
  }
  verdict.certified = true;
  return verdict;
}

namespace {

// Witness for "this cycle evaluates to an identity": either the assertion
// holds, or the earliest failing span is carried. Identity assertions are
// preserved by rotation (conjugation by the first step's value) and by
// merging (composition), which is what lets the fold below certify the
// whole cycle.
struct IdentityWitness {
  bool ok = true;
  std::optional<Span> span;
  std::optional<std::string> morphism;
};

}  // namespace

ExplainResult explain_cycle(const RewritingSystem& system, const Joiner& joiner,
                            const EdgeLabelling& labelling, const Cycle& cycle,
                            std::size_t fuel) {
  ExplainResult result;
  result.trace = decompose(system, joiner, cycle, fuel);

  InductionHandlers<IdentityWitness> handlers;
  handlers.empty = [](const VertexId&) { return IdentityWitness{}; };
  handlers.confluence = [&](const Span& span, const ExtendedCospan& cospan) {
    const Cycle conf = confluence_cycle(span, cospan);
    if (eval_is_identity(labelling, conf)) return IdentityWitness{};
    return IdentityWitness{false, span, eval_cycle(labelling, conf)};
  };
  handlers.merge = [](IdentityWitness a, IdentityWitness b) {
    // The fold runs last step first, so `a` belongs to the earlier step.
    return a.ok ? std::move(b) : std::move(a);
  };
  handlers.rotate = [](IdentityWitness w) { return w; };

  IdentityWitness w = cycle_induction(handlers, result.trace);
  result.identity = w.ok;
  result.span = std::move(w.span);
  result.morphism = std::move(w.morphism);
  return result;
}

}  // namespace ars
