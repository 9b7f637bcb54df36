#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "suite.hpp"

using namespace srl;

namespace {

Algebra chain(std::size_t n) { return brouwerian_chain(n); }

// Transitive-reflexive closure of a cover list.
std::vector<std::vector<bool>> closure_of(std::size_t n,
                                          std::vector<std::pair<Elem, Elem>> covers) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (Elem a = 0; a < n; ++a) r[a][a] = true;
  for (auto [a, b] : covers) r[a][b] = true;
  for (Elem k = 0; k < n; ++k) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) r[a][b] = r[a][b] || (r[a][k] && r[k][b]);
    }
  }
  return r;
}

}  // namespace

TEST_CASE("derive_order reads the order off the meet table") {
  Order two = derive_order(chain(2));
  CHECK(two.leq(0, 0));
  CHECK(two.leq(0, 1));
  CHECK(two.leq(1, 1));
  CHECK_FALSE(two.leq(1, 0));

  Order c = derive_order(c4());
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) CHECK(c.leq(a, b) == (a <= b));
  }

  auto expected = closure_of(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
  Order x = derive_order(crystal());
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) CHECK(x.leq(a, b) == expected[a][b]);
  }
  CHECK_FALSE(x.leq(2, 3));
  CHECK_FALSE(x.leq(3, 2));
}

TEST_CASE("derive_order rejects a non-semilattice meet") {
  AlgebraTables t = chain(2).tables();
  t.meet = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(derive_order(Algebra(t)), MalformedTable);
}

TEST_CASE("malformed tables are rejected at construction") {
  AlgebraTables t = chain(2).tables();
  t.e = 2;
  CHECK_THROWS_AS(Algebra(t), MalformedTable);
  t = chain(2).tables();
  t.join = {{0, 1}};
  CHECK_THROWS_AS(Algebra(t), MalformedTable);
  t = chain(2).tables();
  t.fusion[0][1] = 7;
  CHECK_THROWS_AS(Algebra(t), MalformedTable);
  t = chain(2).tables();
  t.signature.involution = true;
  CHECK_THROWS_AS(Algebra(t), MalformedTable);
}

TEST_CASE("validate accepts the catalog and reports broken tables") {
  CHECK(validate(c4()).ok());
  CHECK(validate(crystal()).ok());
  CHECK(classify(crystal()).square_increasing);

  AlgebraTables t = c4().tables();
  t.fusion[1][1] = 2;  // e·e := f
  AxiomReport r = validate(Algebra(t));
  REQUIRE_FALSE(r.ok());
  auto const* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK_FALSE(f->witness.empty());
  bool identity_or_residuation = false;
  for (auto const& v : r.verdicts) {
    if (!v.pass && (v.name == "fusion_identity" || v.name == "residuation")) {
      identity_or_residuation = true;
    }
  }
  CHECK(identity_or_residuation);
  CHECK_THROWS_AS(require_valid(Algebra(t)), ValidationError);
}

TEST_CASE("validate: failing involution and bound axioms") {
  AlgebraTables t = c4().tables();
  t.neg = std::vector<Elem>{3, 1, 2, 0};
  CHECK_FALSE(validate(Algebra(t)).ok());
  t = heyting_chain(3).tables();
  t.bottom = 1;
  CHECK_FALSE(validate(Algebra(t)).ok());
}

TEST_CASE("derived laws hold on the catalog and the trivial algebra") {
  CHECK(derived_laws(c4()).ok());
  CHECK(derived_laws(trivial_algebra()).ok());
  for (auto const& entry : catalog_entries()) {
    Algebra A = builtin_from_spec(entry.spec);
    INFO(entry.spec);
    CHECK(derived_laws(A).ok());
    if (classify(A).brouwerian) {
      for (Elem a = 0; a < A.size(); ++a) {
        for (Elem b = 0; b < A.size(); ++b) CHECK(A.fusion(a, b) == A.meet(a, b));
      }
    }
  }
}

TEST_CASE("validate implies derived laws across the suite") {
  for (Algebra const& A : algebra_suite()) {
    INFO(A.name());
    REQUIRE(validate(A).ok());
    CHECK_NOTHROW(check_derived_laws(A));
  }
}

TEST_CASE("residual_from_fusion") {
  Algebra two = chain(2);
  CHECK(two.residual(1, 0) == 0);
  CHECK(two.residual(0, 0) == 1);
  CHECK(c4().residual(2, 2) == 1);

  // fusion = join on a 2-chain has no residual: nothing satisfies a·1 ≤ 0.
  AlgebraTables t;
  t.size = 2;
  t.meet = {{0, 0}, {0, 1}};
  t.join = {{0, 1}, {1, 1}};
  t.fusion = t.join;
  t.e = 0;
  try {
    residual_from_fusion(t);
    FAIL("expected NotResiduated");
  } catch (NotResiduated const& e) {
    CHECK(e.b == 1);
    CHECK(e.c == 0);
  }
}

TEST_CASE("residual_from_fusion reconstructs stored tables") {
  for (Algebra const& A : algebra_suite()) {
    AlgebraTables t = A.tables();
    Table stored = t.residual;
    t.residual.clear();
    CHECK(residual_from_fusion(t) == stored);
  }
}

TEST_CASE("classify") {
  ClassFlags c = classify(c4());
  CHECK(c.de_morgan_monoid);
  CHECK_FALSE(c.idempotent);
  CHECK(classify(crystal()).de_morgan_monoid);
  for (std::size_t n = 1; n <= 5; ++n) {
    ClassFlags b = classify(chain(n));
    CHECK(b.brouwerian);
    CHECK(b.idempotent);
    CHECK(b.distributive);
  }
  CHECK(classify(sugihara(3)).sugihara_monoid);
}

TEST_CASE("class flag identities hold across the suite") {
  for (Algebra const& A : algebra_suite()) {
    ClassFlags c = classify(A);
    bool inv = A.has_neg();
    CHECK(c.de_morgan_monoid == (c.distributive && c.square_increasing && inv));
    CHECK(c.sugihara_monoid == (c.de_morgan_monoid && c.idempotent));
    CHECK(c.dunn_monoid == (c.distributive && c.square_increasing && !inv));
    if (!inv) CHECK(c.brouwerian == c.integral);
  }
}

TEST_CASE("homomorphisms: examples") {
  auto id = homomorphisms(c4(), c4());
  REQUIRE(id.size() == 1);
  CHECK(id[0].map == std::vector<Elem>{0, 1, 2, 3});
  CHECK(oracle::homomorphisms(c4(), c4()).size() == 1);

  CHECK(homomorphisms(chain(2), trivial_algebra()).size() == 1);

  Algebra three = chain(3);
  auto hs = homomorphisms(three, three, PartialMap{Elem{0}, std::nullopt, std::nullopt});
  std::vector<std::vector<Elem>> maps;
  for (auto const& h : hs) maps.push_back(h.map);
  CHECK(std::find(maps.begin(), maps.end(), std::vector<Elem>{0, 1, 2}) != maps.end());
  CHECK(std::find(maps.begin(), maps.end(), std::vector<Elem>{0, 2, 2}) != maps.end());
}

TEST_CASE("homomorphisms match exhaustive search, in order, and compose") {
  std::vector<Algebra> small;
  for (Algebra const& A : algebra_suite(4, 4)) small.push_back(A);
  for (Algebra const& A : small) {
    for (Algebra const& B : small) {
      if (A.signature() != B.signature()) continue;
      auto hs = homomorphisms(A, B);
      auto expect = oracle::homomorphisms(A, B);
      REQUIRE(hs.size() == expect.size());
      for (std::size_t i = 0; i < hs.size(); ++i) CHECK(hs[i].map == expect[i]);
      for (auto const& g : homomorphisms(B, B)) {
        for (auto const& f : hs) CHECK(is_homomorphism(compose(g, f)));
      }
    }
  }
}

TEST_CASE("find_isomorphism: examples") {
  auto self = find_isomorphism(crystal(), crystal());
  REQUIRE(self);
  CHECK(is_homomorphism(*self));
  CHECK(self->injective());
  CHECK_FALSE(find_isomorphism(c4(), crystal()));
}

TEST_CASE("find_isomorphism agrees with brute force up to size 5") {
  std::vector<Algebra> small;
  for (Algebra const& A : algebra_suite(5, 5)) {
    if (A.size() <= 5) small.push_back(A);
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      Algebra const& A = small[i];
      Algebra const& B = small[j];
      if (A.size() != B.size() || A.signature() != B.signature()) continue;
      auto iso = find_isomorphism(A, B);
      CHECK(iso.has_value() == oracle::isomorphic(A, B));
      if (iso) {
        CHECK(is_homomorphism(*iso));
        CHECK(iso->injective());
      }
    }
  }
}

TEST_CASE("subuniverses and closure match exhaustive search") {
  for (Algebra const& A : algebra_suite(5, 5)) {
    auto subs = all_subuniverses(A);
    auto expect = oracle::subuniverses(A);
    std::sort(expect.begin(), expect.end(), size_lex_less);
    CHECK(subs == expect);
    for (Subset s : subs) CHECK(closure(A, s) == s);
  }
}
