#pragma once

#include <map>
#include <string>
#include <vector>

#include "ars/errors.hpp"
#include "ars/words.hpp"

namespace ars {

/// A concrete groupoid with decidable morphism equality. Objects and
/// morphisms are identified by canonical strings, so equality of morphisms
/// is string equality of canonical forms. Composition is diagrammatic:
/// compose(a, b) is "a then b" and needs target(a) == source(b).
class Groupoid {
 public:
  virtual ~Groupoid() = default;

  virtual std::string name() const = 0;
  virtual std::vector<std::string> objects() const = 0;

  virtual std::string source(const std::string& m) const = 0;
  virtual std::string target(const std::string& m) const = 0;
  virtual std::string identity(const std::string& obj) const = 0;
  virtual std::string compose(const std::string& a, const std::string& b) const = 0;
  virtual std::string inverse(const std::string& m) const = 0;

  /// Parses/validates a morphism literal and returns its canonical form.
  virtual std::string canonical(const std::string& m) const = 0;

  bool is_identity(const std::string& m) const {
    return canonical(m) == identity(source(m));
  }

  bool equal(const std::string& a, const std::string& b) const {
    return canonical(a) == canonical(b);
  }

  bool one_object() const { return objects().size() == 1; }

  /// The single object of a one-object groupoid.
  std::string the_object() const;
};

/// The symmetric group on {1..degree} as a one-object groupoid. Morphisms
/// are written in one-line notation, e.g. "2 1 3" maps 1->2, 2->1, 3->3.
class PermutationGroup final : public Groupoid {
 public:
  explicit PermutationGroup(int degree);

  std::string name() const override { return "S" + std::to_string(degree_); }
  std::vector<std::string> objects() const override { return {"*"}; }
  std::string source(const std::string&) const override { return "*"; }
  std::string target(const std::string&) const override { return "*"; }
  std::string identity(const std::string& obj) const override;
  std::string compose(const std::string& a, const std::string& b) const override;
  std::string inverse(const std::string& m) const override;
  std::string canonical(const std::string& m) const override;

  int degree() const { return degree_; }

  std::vector<int> parse(const std::string& m) const;
  static std::string render(const std::vector<int>& images);

 private:
  int degree_;
};

/// The free group on `generators` letters as a one-object groupoid.
/// Morphisms are reduced words in the letter alphabet ("aAb..."); composing
/// concatenates and reduces.
class FreeGroupTarget final : public Groupoid {
 public:
  explicit FreeGroupTarget(int generators);

  std::string name() const override { return "F" + std::to_string(generators_); }
  std::vector<std::string> objects() const override { return {"*"}; }
  std::string source(const std::string&) const override { return "*"; }
  std::string target(const std::string&) const override { return "*"; }
  std::string identity(const std::string& obj) const override;
  std::string compose(const std::string& a, const std::string& b) const override;
  std::string inverse(const std::string& m) const override;
  std::string canonical(const std::string& m) const override;

  int generators() const { return generators_; }

 private:
  int generators_;
};

/// A finite groupoid given by explicit tables. The constructor validates
/// the category and inverse laws (composition total exactly on composable
/// pairs, associativity, identity and inverse laws) and reports every
/// violation found.
class TableGroupoid final : public Groupoid {
 public:
  struct MorphismDecl {
    std::string id;
    std::string src;
    std::string dst;
  };

  struct Tables {
    std::string name = "table";
    std::vector<std::string> objects;
    std::vector<MorphismDecl> morphisms;
    std::map<std::string, std::string> identities;                  // object -> morphism
    std::map<std::pair<std::string, std::string>, std::string> composition;
    std::map<std::string, std::string> inverses;                    // morphism -> morphism
  };

  explicit TableGroupoid(Tables tables);

  std::string name() const override { return tables_.name; }
  std::vector<std::string> objects() const override { return tables_.objects; }
  std::string source(const std::string& m) const override;
  std::string target(const std::string& m) const override;
  std::string identity(const std::string& obj) const override;
  std::string compose(const std::string& a, const std::string& b) const override;
  std::string inverse(const std::string& m) const override;
  std::string canonical(const std::string& m) const override;

  const std::vector<MorphismDecl>& morphisms() const { return tables_.morphisms; }

  bool is_identity_morphism(const std::string& m) const;

  /// The group Z/2 on a single object: morphisms "e" (identity) and "s"
  /// with s*s = e. The smallest groupoid with a non-identity morphism.
  static TableGroupoid z2(const std::string& object = "*");

 private:
  const MorphismDecl& decl(const std::string& m) const;
  void validate() const;

  Tables tables_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace ars
