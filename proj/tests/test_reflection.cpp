#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "suite.hpp"

using namespace srl;

namespace {

std::vector<Algebra> srl_bases(std::size_t n) {
  return enumerate_models(ModelClass::srl, n);
}

}  // namespace

TEST_CASE("reflect: small examples") {
  Reflection one = reflect(trivial_algebra());
  CHECK(one.result.size() == 4);
  CHECK(isomorphic(one.result, c4()));
  CHECK(oracle::isomorphic(one.result, c4()));

  Reflection two = reflect(brouwerian_chain(2));
  CHECK(two.result.size() == 6);
  CHECK(validate(two.result).ok());

  CHECK_THROWS_AS(reflect(c4()), WrongSignature);
  CHECK_THROWS_AS(reflect(heyting_chain(2)), WrongSignature);
}

TEST_CASE("reflect: order and table clauses") {
  for (Algebra const& A : srl_bases(4)) {
    Reflection R = reflect(A);
    Algebra const& X = R.result;
    std::size_t n = R.n();
    Elem bot = R.bottom(), top = R.top();
    for (Elem a = 0; a < n; ++a) {
      CHECK(X.less(bot, R.plain(a)));
      CHECK(X.less(R.primed(a), top));
      CHECK(X.neg(R.plain(a)) == R.primed(a));
      for (Elem b = 0; b < n; ++b) {
        CHECK(X.less(R.plain(a), R.primed(b)));
        CHECK(X.leq(R.plain(a), R.plain(b)) == A.leq(a, b));
        CHECK(X.leq(R.primed(a), R.primed(b)) == A.leq(b, a));
        CHECK(X.fusion(R.plain(a), R.primed(b)) == R.primed(A.residual(a, b)));
        CHECK(X.fusion(R.plain(a), R.plain(b)) == R.plain(A.fusion(a, b)));
      }
    }
    CHECK(X.neg(bot) == top);
    for (Elem x = 0; x < X.size(); ++x) {
      CHECK(X.fusion(x, bot) == bot);
      if (x != bot) CHECK(X.fusion(x, top) == top);
      for (Elem y = 0; y < X.size(); ++y) {
        CHECK(X.residual(x, y) == X.neg(X.fusion(x, X.neg(y))));
      }
    }
    Elem f = X.f();
    CHECK(X.fusion(f, f) == top);
    CHECK(X.neg(X.fusion(f, f)) == bot);
  }
}

TEST_CASE("reflect: the negative part is the base cone plus the bottom") {
  for (Algebra const& A : srl_bases(4)) {
    Reflection R = reflect(A);
    Subset expect{R.bottom()};
    for (Elem a : A.negative_part().elements()) expect.insert(R.plain(a));
    CHECK(R.result.negative_part() == expect);
    auto g = generate_subalgebra(R.result, R.result.negative_part());
    CHECK(g.members == reflect_subuniverse(R, closure(A, A.negative_part())));
  }
}

TEST_CASE("reflect: the base block generates") {
  for (Algebra const& A : srl_bases(4)) {
    Reflection R = reflect(A);
    Subset base;
    for (Elem a = 0; a < R.n(); ++a) base.insert(R.plain(a));
    CHECK(closure(R.result, base) == Subset::full(R.result.size()));
  }
}

TEST_CASE("reflect: validity, FSI and class transfer") {
  for (Algebra const& A : srl_bases(5)) {
    INFO(A.name());
    Reflection R = reflect(A);
    CHECK(validate(R.result).ok());
    // R(trivial) = C₄ is FSI, so the transfer reads FSI as join-irreducibility
    // of e, which the trivial algebra satisfies.
    CHECK(e_join_irreducible(A) == is_fsi(R.result));
    if (A.size() > 1) CHECK(is_fsi(A) == is_fsi(R.result));
    CHECK(classify(A).dunn_monoid == classify(R.result).de_morgan_monoid);
  }
}

TEST_CASE("reflect_subalgebra: examples") {
  Algebra two = brouwerian_chain(2);
  Reflection R = reflect(two);
  CHECK(reflect_subalgebra(R, Subset::full(2)).universe == Subset::full(6));
  Subalgebra e_only = reflect_subalgebra(R, Subset{1});
  CHECK(e_only.algebra.size() == 4);
  CHECK(isomorphic(e_only.algebra, c4()));
  CHECK(all_subuniverses(two).size() == 2);
  CHECK(oracle::subuniverses(R.result).size() == 2);
  CHECK(subalgebra_census_matches(R));
  CHECK_THROWS_AS(reflect_subalgebra(R, Subset{0}), NotASubalgebra);
}

TEST_CASE("reflect_congruence: examples") {
  Algebra two = brouwerian_chain(2);
  Reflection R = reflect(two);
  CHECK(reflect_congruence(R, Congruence::identity(2)).is_identity());
  Congruence total = reflect_congruence(R, Congruence::total(2));
  CHECK_FALSE(total.is_total());
  CHECK(isomorphic(quotient_by(R.result, total).algebra, c4()));
  CHECK(oracle::congruences(R.result).size() == oracle::congruences(two).size() + 1);
  CHECK(congruence_census_matches(R));
}

TEST_CASE("censuses match for bases up to size 4") {
  for (Algebra const& A : srl_bases(4)) {
    INFO(A.name());
    Reflection R = reflect(A);
    CHECK(subalgebra_census_matches(R));
    CHECK(congruence_census_matches(R));
    CHECK(oracle::congruences(R.result).size() == oracle::congruences(A).size() + 1);
    CHECK(oracle::subuniverses(R.result).size() == oracle::subuniverses(A).size());
  }
}

TEST_CASE("reflection_epic_transfer") {
  Algebra four = brouwerian_chain(4);
  auto whole = reflection_epic_transfer(four, Subset::full(4), VarietySpec({four}));
  CHECK(whole == std::pair{true, true});

  auto mid = reflection_epic_transfer(four, Subset{0, 2, 3}, VarietySpec({four}));
  CHECK(mid.first == mid.second);

  Algebra three = brouwerian_chain(3);
  auto small = reflection_epic_transfer(three, Subset{0, 2}, VarietySpec({three}));
  CHECK(small == std::pair{false, false});

  for (Algebra const& A : srl_bases(4)) {
    for (Subset b : all_subuniverses(A)) {
      auto [base, lifted] = reflection_epic_transfer(A, b, VarietySpec({A}));
      CHECK(base == lifted);
    }
  }
}
