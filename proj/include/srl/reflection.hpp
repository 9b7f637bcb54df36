#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/filters.hpp"
#include "srl/homomorphism.hpp"
#include "srl/subalgebra.hpp"
#include "srl/varieties.hpp"

namespace srl {

/// R(A) = A ∪ A′ ∪ {⊥, ⊤} for an SRL A of size n, laid out as
/// ⊥ = 0, a = 1 + a, a′ = n + 1 + a, ⊤ = 2n + 1.
struct Reflection {
  enum class Tag { bottom, base, primed, top };

  Algebra base;
  Algebra result;

  std::size_t n() const { return base.size(); }
  Elem bottom() const { return 0; }
  Elem top() const { return 2 * n() + 1; }
  Elem plain(Elem a) const { return 1 + a; }
  Elem primed(Elem a) const { return n() + 1 + a; }
  Tag tag(Elem x) const {
    if (x == 0) return Tag::bottom;
    if (x == top()) return Tag::top;
    return x <= n() ? Tag::base : Tag::primed;
  }
  /// The base element behind a base or primed element.
  Elem origin(Elem x) const { return tag(x) == Tag::base ? x - 1 : x - n() - 1; }
};

inline Reflection reflect(Algebra const& A) {
  if (A.has_neg() || A.has_bottom()) {
    throw WrongSignature("reflection is defined on SRLs without ¬ or ⊥");
  }
  std::size_t n = A.size();
  std::size_t m = 2 * n + 2;
  Elem bot = 0, top = 2 * n + 1;
  auto plain = [&](Elem a) { return 1 + a; };
  auto primed = [&](Elem a) { return n + 1 + a; };
  auto is_base = [&](Elem x) { return x >= 1 && x <= n; };
  auto origin = [&](Elem x) { return is_base(x) ? x - 1 : x - n - 1; };
  auto neg = [&](Elem x) -> Elem {
    if (x == bot) return top;
    if (x == top) return bot;
    return is_base(x) ? primed(origin(x)) : plain(origin(x));
  };
  auto meet = [&](Elem x, Elem y) -> Elem {
    if (x == bot || y == bot) return bot;
    if (x == top) return y;
    if (y == top) return x;
    if (is_base(x) && is_base(y)) return plain(A.meet(origin(x), origin(y)));
    if (is_base(x)) return x;
    if (is_base(y)) return y;
    return primed(A.join(origin(x), origin(y)));
  };
  auto join = [&](Elem x, Elem y) { return neg(meet(neg(x), neg(y))); };
  auto fusion = [&](Elem x, Elem y) -> Elem {
    if (x == bot || y == bot) return bot;
    if (x == top || y == top) return top;
    bool bx = is_base(x), by = is_base(y);
    if (bx && by) return plain(A.fusion(origin(x), origin(y)));
    if (bx) return primed(A.residual(origin(x), origin(y)));
    if (by) return primed(A.residual(origin(y), origin(x)));
    return top;
  };

  AlgebraTables t;
  t.size = m;
  t.signature = {true, false};
  t.name = "R(" + A.name() + ")";
  t.meet.assign(m, std::vector<Elem>(m));
  t.join = t.fusion = t.residual = t.meet;
  std::vector<Elem> negs(m);
  for (Elem x = 0; x < m; ++x) {
    negs[x] = neg(x);
    for (Elem y = 0; y < m; ++y) {
      t.meet[x][y] = meet(x, y);
      t.join[x][y] = join(x, y);
      t.fusion[x][y] = fusion(x, y);
    }
  }
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) t.residual[x][y] = neg(fusion(x, neg(y)));
  }
  t.neg = std::move(negs);
  t.e = plain(A.e());
  t.labels.assign(m, "");
  t.labels[bot] = "⊥";
  t.labels[top] = "⊤";
  for (Elem a = 0; a < n; ++a) {
    t.labels[plain(a)] = A.label(a);
    t.labels[primed(a)] = A.label(a) + "'";
  }
  return {A, Algebra(std::move(t))};
}

/// B ∪ B′ ∪ {⊥, ⊤} for a subuniverse B of the base.
inline Subset reflect_subuniverse(Reflection const& R, Subset b) {
  Subset s{R.bottom(), R.top()};
  for (Elem a : b.elements()) {
    s.insert(R.plain(a));
    s.insert(R.primed(a));
  }
  return s;
}

/// The subalgebra of R(A) over B ∪ B′ ∪ {⊥, ⊤}, checked to be isomorphic to
/// R(B).
inline Subalgebra reflect_subalgebra(Reflection const& R, Subset b) {
  Subalgebra base_sub = subalgebra(R.base, b);
  Subalgebra s = subalgebra(R.result, reflect_subuniverse(R, b));
  if (!isomorphic(s.algebra, reflect(base_sub.algebra).result)) {
    throw VerificationFailure("reflected subalgebra is not isomorphic to R(B)");
  }
  return s;
}

/// Every subuniverse of R(A) is B ∪ B′ ∪ {⊥, ⊤} for a subuniverse B of A.
inline bool subalgebra_census_matches(Reflection const& R) {
  std::vector<Subset> base = all_subuniverses(R.base);
  std::vector<Subset> top = all_subuniverses(R.result);
  if (base.size() != top.size()) return false;
  for (Subset b : base) {
    if (std::find(top.begin(), top.end(), reflect_subuniverse(R, b)) == top.end()) {
      return false;
    }
    reflect_subalgebra(R, b);
  }
  return true;
}

/// R(θ) = θ ∪ {(a′,b′) : a θ b} ∪ {(⊥,⊥), (⊤,⊤)}, checked to be a
/// congruence with R(A)/R(θ) ≅ R(A/θ).
inline Congruence reflect_congruence(Reflection const& R, Congruence const& theta) {
  std::size_t n = R.n();
  std::size_t k = theta.block_count();
  std::vector<Elem> blocks(2 * n + 2);
  blocks[R.bottom()] = 0;
  blocks[R.top()] = 2 * k + 1;
  for (Elem a = 0; a < n; ++a) {
    blocks[R.plain(a)] = 1 + theta.block(a);
    blocks[R.primed(a)] = 1 + k + theta.block(a);
  }
  Congruence rt(std::move(blocks));
  if (!is_congruence(R.result, rt)) {
    throw VerificationFailure("R(θ) is not a congruence");
  }
  Algebra lhs = quotient_by(R.result, rt).algebra;
  Algebra rhs = reflect(quotient_by(R.base, theta).algebra).result;
  if (!isomorphic(lhs, rhs)) {
    throw VerificationFailure("R(A)/R(θ) is not isomorphic to R(A/θ)");
  }
  return rt;
}

/// Every proper congruence of R(A) is some R(θ); with the total congruence
/// this gives |Con R(A)| = |Con A| + 1.
inline bool congruence_census_matches(Reflection const& R) {
  std::vector<Congruence> lifted;
  for (Subset f : all_deductive_filters(R.base)) {
    lifted.push_back(reflect_congruence(R, omega(R.base, f)));
  }
  std::vector<Subset> top_filters = all_deductive_filters(R.result);
  if (top_filters.size() != lifted.size() + 1) return false;
  for (Subset f : top_filters) {
    Congruence c = omega(R.result, f);
    if (c.is_total()) continue;
    if (std::find(lifted.begin(), lifted.end(), c) == lifted.end()) return false;
  }
  return true;
}

/// Epicity of B in A relative to V(gens), and of R(B) in R(A) relative to
/// V(R(gens)). The two verdicts agree.
inline std::pair<bool, bool> reflection_epic_transfer(Algebra const& A, Subset b,
                                                      VarietySpec const& spec) {
  bool base = is_epic_subalgebra(A, b, spec).epic;
  std::vector<Algebra> reflected;
  for (auto const& g : spec.generators) reflected.push_back(reflect(g).result);
  Reflection R = reflect(A);
  bool lifted =
      is_epic_subalgebra(R.result, reflect_subuniverse(R, b), VarietySpec(reflected)).epic;
  return {base, lifted};
}

}  // namespace srl
