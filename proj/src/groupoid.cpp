#include "ars/groupoid.hpp"

#include <sstream>

namespace ars {

std::string Groupoid::the_object() const {
  auto objs = objects();
  if (objs.size() != 1) {
    throw Error("groupoid '" + name() + "' does not have exactly one object");
  }
  return objs.front();
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(int degree) : degree_(degree) {
  if (degree < 1) throw Error("permutation degree must be >= 1");
}

std::vector<int> PermutationGroup::parse(const std::string& m) const {
  std::istringstream in(m);
  std::vector<int> images;
  int v = 0;
  while (in >> v) images.push_back(v);
  if (!in.eof()) throw ParseError("permutation '" + m + "': expected integers");
  if (images.size() != static_cast<std::size_t>(degree_)) {
    throw ParseError("permutation '" + m + "' has " + std::to_string(images.size()) +
                     " entries, expected " + std::to_string(degree_));
  }
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  for (int img : images) {
    if (img < 1 || img > degree_ || seen[static_cast<std::size_t>(img - 1)]) {
      throw ParseError("permutation '" + m + "' is not a bijection on 1.." +
                       std::to_string(degree_));
    }
    seen[static_cast<std::size_t>(img - 1)] = true;
  }
  return images;
}

std::string PermutationGroup::render(const std::vector<int>& images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(images[i]);
  }
  return out;
}

std::string PermutationGroup::identity(const std::string& obj) const {
  if (obj != "*") throw Error("unknown object '" + obj + "'");
  std::vector<int> images(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return render(images);
}

std::string PermutationGroup::compose(const std::string& a, const std::string& b) const {
  const auto pa = parse(a);
  const auto pb = parse(b);
  std::vector<int> out(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    out[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(pa[static_cast<std::size_t>(i)] - 1)];
  }
  return render(out);
}

std::string PermutationGroup::inverse(const std::string& m) const {
  const auto p = parse(m);
  std::vector<int> out(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    out[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] - 1)] = i + 1;
  }
  return render(out);
}

std::string PermutationGroup::canonical(const std::string& m) const {
  return render(parse(m));
}

// ---------------------------------------------------------------------------
// FreeGroupTarget

FreeGroupTarget::FreeGroupTarget(int generators) : generators_(generators) {
  if (generators < 1 || generators > kMaxPrintableGenerators) {
    throw Error("free-group target supports 1.." + std::to_string(kMaxPrintableGenerators) +
                " generators");
  }
}

std::string FreeGroupTarget::identity(const std::string& obj) const {
  if (obj != "*") throw Error("unknown object '" + obj + "'");
  return "";
}

std::string FreeGroupTarget::compose(const std::string& a, const std::string& b) const {
  Word w = word_from_string(a, generators_);
  const Word wb = word_from_string(b, generators_);
  w.insert(w.end(), wb.begin(), wb.end());
  return word_to_string(reduce_word(w));
}

std::string FreeGroupTarget::inverse(const std::string& m) const {
  const Word w = word_from_string(m, generators_);
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(*it));
  return word_to_string(out);
}

std::string FreeGroupTarget::canonical(const std::string& m) const {
  return reduce_word(m, generators_);
}

// ---------------------------------------------------------------------------
// TableGroupoid

TableGroupoid::TableGroupoid(Tables tables) : tables_(std::move(tables)) {
  for (std::size_t i = 0; i < tables_.morphisms.size(); ++i) {
    index_.emplace(tables_.morphisms[i].id, i);
  }
  validate();
}

const TableGroupoid::MorphismDecl& TableGroupoid::decl(const std::string& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) {
    throw ParseError("groupoid '" + name() + "' has no morphism '" + m + "'");
  }
  return tables_.morphisms[it->second];
}

std::string TableGroupoid::source(const std::string& m) const { return decl(m).src; }
std::string TableGroupoid::target(const std::string& m) const { return decl(m).dst; }

std::string TableGroupoid::identity(const std::string& obj) const {
  auto it = tables_.identities.find(obj);
  if (it == tables_.identities.end()) {
    throw Error("groupoid '" + name() + "' has no identity for object '" + obj + "'");
  }
  return it->second;
}

std::string TableGroupoid::compose(const std::string& a, const std::string& b) const {
  const auto& da = decl(a);
  const auto& db = decl(b);
  if (da.dst != db.src) {
    throw Error("cannot compose '" + a + "' (into " + da.dst + ") with '" + b + "' (from " +
                db.src + ")");
  }
  auto it = tables_.composition.find({a, b});
  if (it == tables_.composition.end()) {
    throw IntegrityError("composition table is missing an entry", {a + " ; " + b});
  }
  return it->second;
}

std::string TableGroupoid::inverse(const std::string& m) const {
  auto it = tables_.inverses.find(m);
  if (it == tables_.inverses.end()) {
    throw IntegrityError("inverse table is missing an entry", {m});
  }
  return it->second;
}

std::string TableGroupoid::canonical(const std::string& m) const {
  return decl(m).id;
}

bool TableGroupoid::is_identity_morphism(const std::string& m) const {
  return m == identity(source(m));
}

void TableGroupoid::validate() const {
  std::vector<std::string> bad;
  auto has_object = [&](const std::string& o) {
    for (const auto& obj : tables_.objects) {
      if (obj == o) return true;
    }
    return false;
  };

  if (index_.size() != tables_.morphisms.size()) {
    bad.push_back("duplicate morphism ids");
  }
  for (const auto& m : tables_.morphisms) {
    if (!has_object(m.src)) bad.push_back("morphism '" + m.id + "' has unknown source '" + m.src + "'");
    if (!has_object(m.dst)) bad.push_back("morphism '" + m.id + "' has unknown target '" + m.dst + "'");
  }
  for (const auto& obj : tables_.objects) {
    auto it = tables_.identities.find(obj);
    if (it == tables_.identities.end()) {
      bad.push_back("object '" + obj + "' has no identity");
      continue;
    }
    auto d = index_.find(it->second);
    if (d == index_.end()) {
      bad.push_back("identity of '" + obj + "' names unknown morphism '" + it->second + "'");
    } else {
      const auto& m = tables_.morphisms[d->second];
      if (m.src != obj || m.dst != obj) {
        bad.push_back("identity of '" + obj + "' is not an endomorphism of it");
      }
    }
  }
  if (!bad.empty()) {
    throw IntegrityError("groupoid '" + name() + "' is malformed", std::move(bad));
  }

  // Composition total exactly on composable pairs, with matching endpoints.
  for (const auto& a : tables_.morphisms) {
    for (const auto& b : tables_.morphisms) {
      auto it = tables_.composition.find({a.id, b.id});
      if (a.dst != b.src) {
        if (it != tables_.composition.end()) {
          bad.push_back("composition defined on non-composable pair " + a.id + " ; " + b.id);
        }
        continue;
      }
      if (it == tables_.composition.end()) {
        bad.push_back("composition missing for " + a.id + " ; " + b.id);
        continue;
      }
      auto d = index_.find(it->second);
      if (d == index_.end()) {
        bad.push_back("composite of " + a.id + " ; " + b.id + " names unknown morphism");
        continue;
      }
      const auto& c = tables_.morphisms[d->second];
      if (c.src != a.src || c.dst != b.dst) {
        bad.push_back("composite of " + a.id + " ; " + b.id + " has wrong endpoints");
      }
    }
  }
  if (!bad.empty()) {
    throw IntegrityError("groupoid '" + name() + "' composition is malformed", std::move(bad));
  }

  auto comp = [&](const std::string& a, const std::string& b) {
    return tables_.composition.at({a, b});
  };
  // Identity, associativity and inverse laws.
  for (const auto& m : tables_.morphisms) {
    const std::string id_src = tables_.identities.at(m.src);
    const std::string id_dst = tables_.identities.at(m.dst);
    if (comp(id_src, m.id) != m.id) bad.push_back("id;" + m.id + " != " + m.id);
    if (comp(m.id, id_dst) != m.id) bad.push_back(m.id + ";id != " + m.id);
    auto inv = tables_.inverses.find(m.id);
    if (inv == tables_.inverses.end() || index_.find(inv->second) == index_.end()) {
      bad.push_back("morphism '" + m.id + "' has no inverse");
      continue;
    }
    const auto& w = tables_.morphisms[index_.at(inv->second)];
    if (w.src != m.dst || w.dst != m.src) {
      bad.push_back("inverse of '" + m.id + "' has wrong endpoints");
      continue;
    }
    if (comp(m.id, w.id) != tables_.identities.at(m.src)) {
      bad.push_back(m.id + ";" + w.id + " is not the identity");
    }
    if (comp(w.id, m.id) != tables_.identities.at(m.dst)) {
      bad.push_back(w.id + ";" + m.id + " is not the identity");
    }
  }
  for (const auto& a : tables_.morphisms) {
    for (const auto& b : tables_.morphisms) {
      if (a.dst != b.src) continue;
      for (const auto& c : tables_.morphisms) {
        if (b.dst != c.src) continue;
        if (comp(comp(a.id, b.id), c.id) != comp(a.id, comp(b.id, c.id))) {
          bad.push_back("associativity fails on " + a.id + " ; " + b.id + " ; " + c.id);
        }
      }
    }
  }
  if (!bad.empty()) {
    throw IntegrityError("groupoid '" + name() + "' violates groupoid laws", std::move(bad));
  }
}

TableGroupoid TableGroupoid::z2(const std::string& object) {
  Tables t;
  t.name = "Z2";
  t.objects = {object};
  t.morphisms = {{"e", object, object}, {"s", object, object}};
  t.identities = {{object, "e"}};
  t.composition = {{{"e", "e"}, "e"}, {{"e", "s"}, "s"}, {{"s", "e"}, "s"}, {{"s", "s"}, "e"}};
  t.inverses = {{"e", "e"}, {"s", "s"}};
  return TableGroupoid(std::move(t));
}

}  // namespace ars
