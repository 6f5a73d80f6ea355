#include <doctest.h>

#include <algorithm>
#include <random>

#include "ars/groupoid.hpp"
#include "ars/words.hpp"

using namespace ars;

TEST_CASE("reduce_word cancels adjacent inverse pairs") {
  CHECK(reduce_word("aA", 1) == "");
  CHECK(reduce_word("aAbBa", 2) == "a");
  CHECK(reduce_word("ab", 2) == "ab");
  CHECK(reduce_word("", 1) == "");
  CHECK(reduce_word("baAB", 2) == "");
}

TEST_CASE("reduce_word is idempotent and leaves no redex") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> letter(0, 5);
  std::uniform_int_distribution<std::size_t> len(0, 12);
  for (int i = 0; i < 500; ++i) {
    Word w;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) {
      const int x = letter(rng);
      w.push_back(x < 3 ? x + 1 : -(x - 2));
    }
    const Word r = reduce_word(w);
    CHECK(is_reduced(r));
    CHECK(reduce_word(r) == r);
  }
}

TEST_CASE("word encoding round-trips and rejects foreign letters") {
  CHECK(word_to_string(word_from_string("aAbB", 2)) == "aAbB");
  CHECK(word_from_string("", 1).empty());
  CHECK_THROWS_AS(word_from_string("abc", 2), ParseError);
  CHECK_THROWS_AS(word_from_string("a b", 1), ParseError);
  CHECK_THROWS_AS(letter_to_char(0), ParseError);
}

TEST_CASE("permutation composition is diagrammatic") {
  const PermutationGroup s3(3);
  // (1 2) then (2 3)
  CHECK(s3.compose("2 1 3", "1 3 2") == "3 1 2");
  CHECK(s3.identity("*") == "1 2 3");
  CHECK(s3.inverse("3 1 2") == "2 3 1");
  CHECK(s3.is_identity(s3.compose("2 1 3", "2 1 3")));
  CHECK_THROWS_AS(s3.canonical("1 2"), ParseError);
  CHECK_THROWS_AS(s3.canonical("1 2 2"), ParseError);
}

TEST_CASE("permutation group laws hold on random elements") {
  const PermutationGroup s5(5);
  std::mt19937 rng(53);
  auto random_perm = [&]() {
    std::vector<int> images{1, 2, 3, 4, 5};
    std::shuffle(images.begin(), images.end(), rng);
    return PermutationGroup::render(images);
  };
  for (int i = 0; i < 300; ++i) {
    const std::string a = random_perm();
    const std::string b = random_perm();
    const std::string c = random_perm();
    CHECK(s5.compose(s5.compose(a, b), c) == s5.compose(a, s5.compose(b, c)));
    CHECK(s5.compose(a, s5.inverse(a)) == s5.identity("*"));
    CHECK(s5.compose(s5.inverse(a), a) == s5.identity("*"));
    CHECK(s5.compose(a, s5.identity("*")) == a);
  }
}

TEST_CASE("free-group target composes by concatenate-then-reduce") {
  const FreeGroupTarget f2(2);
  CHECK(f2.compose("ab", "Ba") == "aa");
  CHECK(f2.inverse("ab") == "BA");
  CHECK(f2.compose("ab", f2.inverse("ab")) == "");
  CHECK(f2.canonical("aAb") == "b");
  CHECK(f2.is_identity("aA"));
}

TEST_CASE("table groupoid validates its laws") {
  SUBCASE("the Z2 group is accepted") {
    const TableGroupoid z2 = TableGroupoid::z2();
    CHECK(z2.compose("s", "s") == "e");
    CHECK(z2.inverse("s") == "s");
    CHECK(z2.is_identity("e"));
    CHECK_FALSE(z2.is_identity("s"));
    CHECK_THROWS_AS(z2.canonical("t"), ParseError);
  }

  SUBCASE("a broken composition table is rejected with all violations") {
    TableGroupoid::Tables t;
    t.objects = {"*"};
    t.morphisms = {{"e", "*", "*"}, {"s", "*", "*"}};
    t.identities = {{"*", "e"}};
    // s*s wrongly set to s: breaks the inverse law.
    t.composition = {{{"e", "e"}, "e"}, {{"e", "s"}, "s"}, {{"s", "e"}, "s"}, {{"s", "s"}, "s"}};
    t.inverses = {{"e", "e"}, {"s", "s"}};
    CHECK_THROWS_AS(TableGroupoid{std::move(t)}, IntegrityError);
  }

  SUBCASE("missing composites are rejected") {
    TableGroupoid::Tables t;
    t.objects = {"*"};
    t.morphisms = {{"e", "*", "*"}};
    t.identities = {{"*", "e"}};
    t.inverses = {{"e", "e"}};
    CHECK_THROWS_AS(TableGroupoid{std::move(t)}, IntegrityError);
  }

  SUBCASE("a two-object groupoid with one isomorphism works") {
    TableGroupoid::Tables t;
    t.name = "iso";
    t.objects = {"x", "y"};
    t.morphisms = {{"ix", "x", "x"}, {"iy", "y", "y"}, {"u", "x", "y"}, {"v", "y", "x"}};
    t.identities = {{"x", "ix"}, {"y", "iy"}};
    t.composition = {{{"ix", "ix"}, "ix"}, {{"iy", "iy"}, "iy"}, {{"ix", "u"}, "u"},
                     {{"u", "iy"}, "u"},   {{"iy", "v"}, "v"},   {{"v", "ix"}, "v"},
                     {{"u", "v"}, "ix"},   {{"v", "u"}, "iy"}};
    t.inverses = {{"ix", "ix"}, {"iy", "iy"}, {"u", "v"}, {"v", "u"}};
    const TableGroupoid g{std::move(t)};
    CHECK(g.compose("u", "v") == "ix");
    CHECK(g.source("u") == "x");
    CHECK(g.target("u") == "y");
    CHECK_THROWS_AS(g.compose("u", "u"), Error);
  }
}
