#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "suite.hpp"

using namespace srl;

namespace {

Algebra product(Algebra const& A, Algebra const& B) {
  std::size_t m = B.size(), n = A.size() * m;
  auto pair = [&](Elem x) { return std::pair{x / m, x % m}; };
  auto idx = [&](Elem a, Elem b) { return a * m + b; };
  AlgebraTables t;
  t.size = n;
  t.signature = A.signature();
  auto make = [&](auto op) {
    Table tab(n, std::vector<Elem>(n));
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        auto [a1, b1] = pair(x);
        auto [a2, b2] = pair(y);
        tab[x][y] = op(a1, b1, a2, b2);
      }
    }
    return tab;
  };
  t.meet = make([&](Elem a1, Elem b1, Elem a2, Elem b2) {
    return idx(A.meet(a1, a2), B.meet(b1, b2));
  });
  t.join = make([&](Elem a1, Elem b1, Elem a2, Elem b2) {
    return idx(A.join(a1, a2), B.join(b1, b2));
  });
  t.fusion = make([&](Elem a1, Elem b1, Elem a2, Elem b2) {
    return idx(A.fusion(a1, a2), B.fusion(b1, b2));
  });
  t.residual = make([&](Elem a1, Elem b1, Elem a2, Elem b2) {
    return idx(A.residual(a1, a2), B.residual(b1, b2));
  });
  t.e = idx(A.e(), B.e());
  if (A.has_neg()) {
    std::vector<Elem> neg(n);
    for (Elem x = 0; x < n; ++x) neg[x] = idx(A.neg(pair(x).first), B.neg(pair(x).second));
    t.neg = neg;
  }
  t.name = A.name() + "x" + B.name();
  return Algebra(std::move(t));
}

Subset up(Algebra const& A, Elem a) { return A.up(a); }

}  // namespace

TEST_CASE("fg: examples") {
  Algebra C = c4();
  CHECK(fg(C, Subset{0}) == Subset::full(4));
  CHECK(fg(C, Subset{0}) == up(C, 0));
  CHECK(fg(C, Subset{}) == up(C, C.e()));

  Algebra X = crystal();
  CHECK(fg(X, Subset{2}) == oracle::generated_filter(X, Subset{2}));
  CHECK(fg(X, Subset{2}) == Subset({1, 2, 3, 4, 5}));
}

TEST_CASE("fg agrees with the intersection of all filters containing X") {
  for (Algebra const& A : algebra_suite(5, 4)) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << A.size()); ++m) {
      CHECK(fg(A, Subset(m)) == oracle::generated_filter(A, Subset(m)));
    }
  }
}

TEST_CASE("omega and congruence_to_filter: examples") {
  Algebra A = brouwerian_chain(4);  // 0 < c < d < e
  CHECK(omega(A, up(A, A.e())).is_identity());
  CHECK(omega(A, Subset::full(4)).is_total());
  Congruence t = omega(A, up(A, 2));
  CHECK(t == Congruence({0, 1, 2, 2}));
  CHECK(congruence_to_filter(A, t) == up(A, 2));
  CHECK(congruence_to_filter(A, Congruence::identity(4)) == up(A, A.e()));
  CHECK(congruence_to_filter(A, Congruence::total(4)) == Subset::full(4));
}

TEST_CASE("deductive filters: examples") {
  Algebra C = c4();
  CHECK(all_deductive_filters(C) == std::vector<Subset>{up(C, 1), Subset::full(4)});
  CHECK(all_deductive_filters(trivial_algebra()).size() == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(all_deductive_filters(brouwerian_chain(n)).size() == n);
  }
}

TEST_CASE("filters and congruences correspond across the suite") {
  for (Algebra const& A : algebra_suite()) {
    INFO(A.name());
    auto filters = all_deductive_filters(A);
    auto expect = oracle::deductive_filters(A);
    std::sort(expect.begin(), expect.end(), size_lex_less);
    REQUIRE(filters == expect);
    auto cons = oracle::congruences(A);
    REQUIRE(filters.size() == cons.size());
    std::vector<Congruence> images;
    for (Subset f : filters) {
      Congruence t = omega(A, f);
      CHECK(is_congruence(A, t));
      CHECK(congruence_to_filter(A, t) == f);
      images.push_back(t);
    }
    for (auto const& raw : cons) {
      Congruence t(raw);
      CHECK(std::find(images.begin(), images.end(), t) != images.end());
      CHECK(omega(A, congruence_to_filter(A, t)) == t);
    }
    // order isomorphism
    for (std::size_t i = 0; i < filters.size(); ++i) {
      for (std::size_t j = 0; j < filters.size(); ++j) {
        CHECK(filters[i].subset_of(filters[j]) == images[i].refines(images[j]));
      }
    }
  }
}

TEST_CASE("prime deductive filters: examples") {
  Algebra C = c4();
  CHECK(prime_deductive_filters(C, Mode::pointed) ==
        std::vector<Subset>{up(C, 1), Subset::full(4)});
  CHECK(prime_deductive_filters(heyting_chain(1), Mode::proper).empty());

  // 0 < p, q < e: ↑p, ↑q and the carrier. ↑e = {e} is not prime since
  // p ∨ q = e while neither p nor q lies in it.
  Algebra D = brouwerian_diamond();
  std::vector<Subset> expect{up(D, 1), up(D, 2), Subset::full(4)};
  std::sort(expect.begin(), expect.end(), size_lex_less);
  CHECK(prime_deductive_filters(D, Mode::pointed) == expect);
  CHECK_FALSE(is_prime(D, up(D, 3)));
}

TEST_CASE("a prime filter containing F ∩ G contains F or G") {
  for (Algebra const& A : algebra_suite(5, 4)) {
    auto fs = all_lattice_filters(A);
    for (Subset h : fs) {
      if (!is_prime(A, h)) continue;
      for (Subset f : fs) {
        for (Subset g : fs) {
          if ((f & g).subset_of(h)) CHECK((f.subset_of(h) || g.subset_of(h)));
        }
      }
    }
  }
}

TEST_CASE("prime lattice filters of a distributive subalgebra are traces") {
  for (Algebra const& A : algebra_suite(5, 4)) {
    if (!classify(A).distributive) continue;
    auto big = prime_lattice_filters(A);
    for (Subset b : all_subuniverses(A)) {
      Subalgebra B = subalgebra(A, b);
      std::vector<Subset> traces;
      for (Subset f : big) {
        Subset t;
        for (std::size_t i = 0; i < B.elements.size(); ++i) {
          if (f.contains(B.elements[i])) t.insert(i);
        }
        if (!t.empty() && std::find(traces.begin(), traces.end(), t) == traces.end()) {
          traces.push_back(t);
        }
      }
      auto small = prime_lattice_filters(B.algebra);
      std::sort(traces.begin(), traces.end(), size_lex_less);
      CHECK(traces == small);
    }
  }
}

TEST_CASE("quotients: examples and the order law") {
  Algebra A = brouwerian_chain(4);
  Quotient least = quotient(A, up(A, A.e()));
  CHECK(least.projection.injective());
  CHECK(isomorphic(least.algebra, A));
  CHECK(quotient(A, Subset::full(4)).algebra.size() == 1);
  Quotient q = quotient(A, up(A, 2));
  CHECK(isomorphic(q.algebra, brouwerian_chain(3)));
  CHECK(q.projection(2) == q.projection(3));
  CHECK_THROWS_AS(quotient(A, Subset{1}), NotAFilter);

  for (Algebra const& B : algebra_suite(5, 4)) {
    for (Subset f : all_deductive_filters(B)) {
      Quotient r = quotient(B, f);
      CHECK(is_homomorphism(r.projection));
      for (Elem a = 0; a < B.size(); ++a) {
        for (Elem b = 0; b < B.size(); ++b) {
          CHECK(f.contains(B.residual(a, b)) ==
                r.algebra.leq(r.projection(a), r.projection(b)));
        }
      }
    }
  }
}

TEST_CASE("surjections: prime filters above the kernel correspond") {
  for (Algebra const& A : algebra_suite(5, 4)) {
    for (Subset k : all_deductive_filters(A)) {
      Quotient q = quotient(A, k);
      auto pa = prime_deductive_filters(A, Mode::pointed);
      auto pb = prime_deductive_filters(q.algebra, Mode::pointed);
      std::vector<Subset> pulled;
      for (Subset h : pb) pulled.push_back(preimage(q.projection, h));
      std::vector<Subset> above;
      for (Subset g : pa) {
        if (k.subset_of(g)) above.push_back(g);
      }
      std::vector<Subset> sorted = pulled;
      std::sort(sorted.begin(), sorted.end(), size_lex_less);
      CHECK(sorted == above);
      for (std::size_t i = 0; i < pb.size(); ++i) {
        for (std::size_t j = 0; j < pb.size(); ++j) {
          CHECK(pb[i].subset_of(pb[j]) == pulled[i].subset_of(pulled[j]));
        }
      }
      for (Subset g : all_deductive_filters(A)) {
        if (k.subset_of(g)) CHECK(preimage(q.projection, image(q.projection, g)) == g);
      }
    }
  }
}

TEST_CASE("is_fsi: examples") {
  CHECK(is_fsi(c4()));
  CHECK_FALSE(is_fsi(trivial_algebra()));
  // e = (e,⊥) ∨ (⊥,e) in C₄ × C₄; the two projection kernels are
  // non-identity congruences meeting in the identity.
  Algebra P = product(c4(), c4());
  CHECK_FALSE(is_fsi(P));
  CHECK(P.join(1 * 4 + 0, 0 * 4 + 1) == P.e());
  std::vector<Elem> left(16), right(16);
  for (Elem x = 0; x < 16; ++x) {
    left[x] = x / 4;
    right[x] = x % 4;
  }
  CHECK(oracle::compatible(P, left));
  CHECK(oracle::compatible(P, right));
  for (Elem x = 0; x < 16; ++x) {
    for (Elem y = x + 1; y < 16; ++y) CHECK_FALSE((left[x] == left[y] && right[x] == right[y]));
  }
}

TEST_CASE("is_fsi agrees with meet-irreducibility of the identity congruence") {
  for (Algebra const& A : algebra_suite()) {
    INFO(A.name());
    CHECK(is_fsi(A) == oracle::identity_meet_irreducible(A));
  }
}

TEST_CASE("restrict_quotient_embedding") {
  Algebra A = brouwerian_chain(4);
  Subset b{0, 2, 3};
  auto id = restrict_quotient_embedding(A, b, Congruence::identity(4));
  CHECK(id.embedding.map == std::vector<Elem>{0, 2, 3});
  auto tot = restrict_quotient_embedding(A, b, Congruence::total(4));
  CHECK(tot.embedding.map == std::vector<Elem>{0});
  auto mid = restrict_quotient_embedding(A, b, omega(A, up(A, 2)));
  CHECK(isomorphic(mid.sub_quotient.algebra, brouwerian_chain(2)));
  CHECK(isomorphic(mid.quotient.algebra, brouwerian_chain(3)));
  CHECK(mid.embedding.injective());
  CHECK_THROWS_AS(restrict_quotient_embedding(A, Subset{1}, Congruence::identity(4)),
                  NotASubalgebra);

  for (Algebra const& B : algebra_suite(5, 4)) {
    for (Subset s : all_subuniverses(B)) {
      for (Subset f : all_deductive_filters(B)) {
        CHECK_NOTHROW(restrict_quotient_embedding(B, s, omega(B, f)));
      }
    }
  }
}
