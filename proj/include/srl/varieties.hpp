#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/cones.hpp"
#include "srl/duality.hpp"
#include "srl/filters.hpp"
#include "srl/homomorphism.hpp"
#include "srl/parallel.hpp"
#include "srl/subalgebra.hpp"

namespace srl {

/// The variety generated by finitely many finite algebras.
struct VarietySpec {
  std::vector<Algebra> generators;

  explicit VarietySpec(std::vector<Algebra> gens) : generators(std::move(gens)) {
    if (generators.empty()) throw BadParams("a variety needs a generator");
    for (auto const& g : generators) {
      if (g.signature() != generators.front().signature()) {
        throw WrongSignature("generators have different signatures");
      }
      require_valid(g);
    }
  }
};

/// FSI members of HS(generators) up to isomorphism. By Jónsson's theorem
/// these are all the FSI members of the variety, since ultraproducts of
/// finitely many finite algebras are isomorphic to factors.
inline std::vector<Algebra> fsi_spectrum(VarietySpec const& spec) {
  std::vector<Algebra> out;
  for (auto const& g : spec.generators) {
    for (Subset s : all_subuniverses(g)) {
      Subalgebra sub = subalgebra(g, s, g.name() + "[" + std::to_string(s.size()) + "]");
      for (Subset f : all_deductive_filters(sub.algebra)) {
        Quotient q = quotient(sub.algebra, f);
        if (!is_fsi(q.algebra)) continue;
        bool known = std::any_of(out.begin(), out.end(), [&](Algebra const& m) {
          return isomorphic(m, q.algebra);
        });
        if (known) continue;
        std::string name = g.name();
        if (s.size() != g.size()) name += "|" + std::to_string(s.size());
        if (q.algebra.size() != sub.algebra.size()) {
          name += "/" + std::to_string(q.algebra.size());
        }
        out.push_back(q.algebra.renamed(name));
      }
    }
  }
  return out;
}

/// Largest depth of an FSI member (0 when there is none).
inline std::size_t variety_depth(VarietySpec const& spec) {
  std::size_t d = 0;
  for (auto const& m : fsi_spectrum(spec)) d = std::max(d, depth(m));
  return d;
}

struct GateReport {
  struct Member {
    Algebra algebra;
    std::size_t depth;
    bool negatively_generated;
  };
  std::vector<Member> members;
  bool pass = true;
};

/// Checks that every FSI member has finite depth (always, at finite scale)
/// and is negatively generated. When it passes, every epimorphism of the
/// variety is surjective.
inline GateReport hypotheses_gate(VarietySpec const& spec) {
  GateReport r;
  for (auto const& m : fsi_spectrum(spec)) {
    bool ng = is_negatively_generated(m);
    r.members.push_back({m, depth(m), ng});
    r.pass = r.pass && ng;
  }
  return r;
}

/// When the subalgebra is not epic: two distinct homomorphisms into a
/// spectrum member that agree on it.
struct EpicVerdict {
  bool epic = true;
  std::optional<Homomorphism> g;
  std::optional<Homomorphism> h;
};

namespace detail {

/// Two distinct homomorphisms A → C agreeing on `b`, if any.
inline std::optional<std::pair<Homomorphism, Homomorphism>> agreeing_pair(
    Algebra const& A, Subset b, Algebra const& C) {
  std::vector<Elem> elems = b.elements();
  std::map<std::vector<Elem>, Homomorphism> by_restriction;
  std::optional<std::pair<Homomorphism, Homomorphism>> found;
  detail::HomSearch s(A, C, false);
  s.run({}, [&](std::vector<Elem> const& m) {
    std::vector<Elem> key;
    for (Elem x : elems) key.push_back(m[x]);
    Homomorphism h{A, C, m};
    auto [it, fresh] = by_restriction.emplace(key, h);
    if (!fresh) {
      found.emplace(it->second, std::move(h));
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace detail

/// B is epic in A relative to the variety: homomorphisms out of A into the
/// variety are determined by their restriction to B. It suffices to test
/// codomains in the FSI spectrum, because distinct homomorphisms into any
/// member stay distinct after projecting onto some subdirectly irreducible
/// factor.
inline EpicVerdict is_epic_subalgebra(Algebra const& A, Subset b,
                                      std::vector<Algebra> const& spectrum) {
  if (!is_subuniverse(A, b)) throw NotASubalgebra("not a subuniverse of " + A.name());
  for (auto const& C : spectrum) {
    if (C.signature() != A.signature()) {
      throw WrongSignature("algebra and variety have different signatures");
    }
    if (auto p = detail::agreeing_pair(A, b, C)) {
      return {false, std::move(p->first), std::move(p->second)};
    }
  }
  return {};
}

inline EpicVerdict is_epic_subalgebra(Algebra const& A, Subset b,
                                      VarietySpec const& spec) {
  return is_epic_subalgebra(A, b, fsi_spectrum(spec));
}

struct EsVerdict {
  bool es = true;
  std::optional<Algebra> member;  // FSI member with an epic proper subalgebra
  std::optional<Subset> sub;
};

/// The variety has the ES property iff no FSI member has an epic proper
/// subalgebra (varieties of these algebras are congruence permutable with
/// EDPM). Larger subalgebras are tried first, and among equal sizes those
/// that are lexicographically larger.
inline EsVerdict decide_es(VarietySpec const& spec) {
  std::vector<Algebra> spectrum = fsi_spectrum(spec);
  std::vector<std::pair<std::size_t, Subset>> tasks;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    std::vector<Subset> subs = all_subuniverses(spectrum[i]);
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      if (*it != Subset::full(spectrum[i].size())) tasks.emplace_back(i, *it);
    }
  }
  std::vector<bool> epic = parallel_map(tasks.size(), [&](std::size_t t) {
    return is_epic_subalgebra(spectrum[tasks[t].first], tasks[t].second, spectrum)
        .epic;
  });
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (epic[t]) return {false, spectrum[tasks[t].first], tasks[t].second};
  }
  return {};
}

enum class EpiCase { nested, incomparable };

/// The data extracted from a negatively generated FSI algebra A and a proper
/// negatively generated subalgebra B, following the argument that such a B
/// is never epic. Filters of A⁻ are stored in A's element indices.
struct EpiAnalysis {
  Algebra algebra;
  Subalgebra sub;
  NegativeCone cone;
  std::vector<Subset> primes;  // Pr(A⁻), indexed like cone_dual
  PointedPoset cone_dual;
  std::vector<std::pair<Subset, Subset>> collisions;  // pairs with equal trace on B
  Subset f1, f2;
  std::size_t depth_f1 = 0, depth_f2 = 0;
  EpiCase kind = EpiCase::nested;
  Congruence theta;
  QuotientEmbedding embedding;  // j: B/θ|B → A/θ
  Elem a1 = 0, a2 = 0;
  Subset rest;  // M = (A/θ)⁻ ∖ j[(B/θ|B)⁻], in A/θ indices
};

namespace detail {

inline void expect(bool ok, std::string const& what) {
  if (!ok) throw VerificationFailure(what);
}

/// Prime filters of the cone of `A`, translated to A indices through
/// `to_parent` (cone index → index in the ambient algebra).
inline std::vector<Subset> cone_primes(NegativeCone const& c,
                                       std::vector<Elem> const& to_parent,
                                       PointedPoset* poset = nullptr) {
  DualSpace d = dual_space(c.algebra, Mode::pointed);
  std::vector<Subset> out;
  for (Subset f : d.filters) {
    Subset g;
    for (Elem i : f.elements()) g.insert(to_parent[c.elements[i]]);
    out.push_back(g);
  }
  if (poset) *poset = d.poset;
  return out;
}

/// {H ∈ primes : base ∪ {a} ⊆ H}
inline Subset points_above(std::vector<Subset> const& primes, Subset base,
                           std::optional<Elem> a = {}) {
  Subset out;
  for (Elem k = 0; k < primes.size(); ++k) {
    if (base.subset_of(primes[k]) && (!a || primes[k].contains(*a))) out.insert(k);
  }
  return out;
}

}  // namespace detail

inline EpiAnalysis epi_analysis(Algebra const& A, Subset b_universe) {
  using detail::expect;
  if (!is_fsi(A)) throw HypothesesNotMet("A is finitely subdirectly irreducible");
  if (!is_negatively_generated(A)) throw HypothesesNotMet("A is negatively generated");
  if (!is_subuniverse(A, b_universe)) throw NotASubalgebra("B is not a subuniverse of A");
  if (b_universe == Subset::full(A.size())) throw HypothesesNotMet("B is a proper subalgebra");
  Subalgebra B = subalgebra(A, b_universe, A.name() + "|B");
  if (!is_negatively_generated(B.algebra)) {
    throw HypothesesNotMet("B is negatively generated");
  }

  NegativeCone cone = negative_cone(A);
  std::vector<Elem> ident(A.size());
  for (Elem i = 0; i < ident.size(); ++i) ident[i] = i;
  PointedPoset cone_dual;
  std::vector<Subset> primes = detail::cone_primes(cone, ident, &cone_dual);
  auto depth_of = [&](Subset f) {
    auto idx = std::find(primes.begin(), primes.end(), f) - primes.begin();
    return depth(cone_dual, static_cast<Elem>(idx));
  };

  std::vector<std::pair<Subset, Subset>> collisions;
  for (Subset g1 : primes) {
    for (Subset g2 : primes) {
      if (g1 != g2 && (g1 & b_universe) == (g2 & b_universe)) collisions.emplace_back(g1, g2);
    }
  }
  if (collisions.empty()) throw HypothesesNotMet("B⁻ differs from A⁻");

  // F1: least depth among members of collisions; F2: least depth among
  // partners of F1. Ties go to the lexicographically smallest filter.
  auto better = [&](Subset x, Subset over_f1) {
    std::size_t dx = depth_of(x), dy = depth_of(over_f1);
    return dx != dy ? dx < dy : lex_less(x, over_f1);
  };
  Subset f1 = collisions.front().first;
  for (auto const& [g1, g2] : collisions) {
    if (better(g1, f1)) f1 = g1;
  }
  std::optional<Subset> f2;
  for (auto const& [g1, g2] : collisions) {
    if (g1 == f1 && (!f2 || better(g2, *f2))) f2 = g2;
  }

  Subset F1 = f1, F2 = *f2;
  std::size_t d1 = depth_of(F1), d2 = depth_of(F2);

  for (auto const& [g1, g2] : collisions) {
    expect(g1 != g2 && (g1 & b_universe) == (g2 & b_universe), "collision pair invariant");
    expect(d1 <= depth_of(g1) && d1 <= depth_of(g2),
           "F1 does not have least depth among collisions");
    if (g1 == F1) expect(d2 <= depth_of(g2), "F2 does not have least depth");
  }
  expect(!F1.proper_subset_of(F2), "F1 is properly contained in F2");

  for (Subset g : primes) {
    if (F1.proper_subset_of(g)) expect(F2.proper_subset_of(g), "upper bound of F1 misses F2");
    if (F2.proper_subset_of(g)) expect(F1.subset_of(g), "upper bound of F2 misses F1");
  }

  EpiCase kind;
  if (F2.proper_subset_of(F1)) {
    kind = EpiCase::nested;
    for (Subset g : primes) {
      if (F2.proper_subset_of(g)) expect(F1.subset_of(g), "F1 is not the least upper bound of F2");
    }
  } else {
    kind = EpiCase::incomparable;
    expect(!F2.subset_of(F1), "F1 and F2 are comparable");
    expect(d1 == d2, "incomparable F1, F2 differ in depth");
    for (Subset g : primes) {
      expect(F1.proper_subset_of(g) == F2.proper_subset_of(g),
             "incomparable F1, F2 have different strict upper bounds");
    }
  }

  Subset common = F1 & F2;
  Subset gen = fg(A, common);
  expect((gen & A.negative_part()) == common, "A⁻ ∩ Fg(F1 ∩ F2) differs from F1 ∩ F2");
  Congruence theta = omega(A, gen);
  QuotientEmbedding qe = restrict_quotient_embedding(A, b_universe, theta);
  Quotient const& aq = qe.quotient;
  Quotient const& bq = qe.sub_quotient;
  Homomorphism const& embed = qe.embedding;
  Algebra const& target = aq.algebra;
  Subset b_neg = b_universe & A.negative_part();

  // a ≡θ b with a ∈ A⁻, b ∈ B⁻ never separates F1 from F2.
  for (Elem a : A.negative_part().elements()) {
    for (Elem bb : b_neg.elements()) {
      if (!theta.related(a, bb)) continue;
      expect(F1.contains(a) == F1.contains(bb) && F2.contains(a) == F2.contains(bb),
             "θ-related cone elements disagree on F1 or F2");
    }
  }

  Elem a1 = (F1 - F2).first();
  Elem a2 = kind == EpiCase::nested ? A.e() : (F2 - F1).first();

  Subset embed_cone = image(embed, bq.algebra.negative_part());
  Subset rest = target.negative_part() - embed_cone;
  Subset expected{aq.projection(a1)};
  if (kind == EpiCase::incomparable) expected.insert(aq.projection(a2));
  expect(rest == expected, "M is not {a1/θ} (or {a1/θ, a2/θ})");
  for (Elem m : rest.elements()) {
    expect(target.order().covers(m, target.e()), "element of M is not covered by e/θ");
  }

  // i1: (A/θ)⁻ ≅ A⁻/(F1∩F2) and i2: (B/θ|B)⁻ ≅ B⁻/(F1∩B), each verified on
  // construction. Elements of the cone quotients are read back as
  // representatives in A.
  ConeQuotientIso i1 = cone_quotient_iso(A, gen);
  Subset b_gen;
  for (std::size_t i = 0; i < B.elements.size(); ++i) {
    if (gen.contains(B.elements[i])) b_gen.insert(i);
  }
  ConeQuotientIso i2 = cone_quotient_iso(B.algebra, b_gen);
  auto i1_rep = [&](Elem u) {  // u ∈ A/θ, u ≤ e/θ
    Elem x = i1.forward(i1.quotient_cone.index_of(u));
    return i1.cone.elements[i1.cone_quotient.representatives[x]];
  };
  auto i2_rep = [&](Elem v) {  // v ∈ B/θ|B, v ≤ e
    Elem x = i2.forward(i2.quotient_cone.index_of(v));
    return B.elements[i2.cone.elements[i2.cone_quotient.representatives[x]]];
  };

  // h = φ_{F1∩F2} ∘ i1, with φ_K(a/K) = {H ∈ Pr(A⁻) : K ∪ {a} ⊆ H}.
  Subset over_common = detail::points_above(primes, common);
  Subset over_f1 = detail::points_above(primes, F1);
  auto points_of = [&](Elem u) { return detail::points_above(primes, common, i1_rep(u)); };
  {
    std::vector<Subset> seen;
    for (Elem u : target.negative_part().elements()) {
      Subset hu = points_of(u);
      expect(hu.subset_of(over_common), "h leaves the subspace over F1 ∩ F2");
      expect(std::find(seen.begin(), seen.end(), hu) == seen.end(), "h is not injective");
      seen.push_back(hu);
    }
    expect(points_of(aq.projection(a1)) == over_f1, "a1/θ does not go to ↑F1");
    Subset over_f2 = detail::points_above(primes, F2);
    if (kind == EpiCase::incomparable) {
      expect(points_of(aq.projection(a2)) == over_f2, "a2/θ does not go to ↑F2");
    } else {
      expect(over_f2 == over_common && points_of(target.e()) == over_common,
             "↑F2 is not the whole subspace over F1 ∩ F2");
    }
  }

  // i_*: H ↦ H ∩ B restricts to a bijection from Y = ↑F1 onto Z = ↑(F1∩B).
  NegativeCone bcone = negative_cone(B.algebra);
  std::vector<Subset> bprimes = detail::cone_primes(bcone, B.elements);
  Subset trace = F1 & b_universe;
  Subset over_trace = detail::points_above(bprimes, trace);
  std::vector<Elem> i_star(primes.size(), 0);
  {
    Subset hit;
    for (Elem hk : over_f1.elements()) {
      auto it = std::find(bprimes.begin(), bprimes.end(), primes[hk] & b_universe);
      expect(it != bprimes.end(), "trace of a prime filter is not prime in B⁻");
      i_star[hk] = static_cast<Elem>(it - bprimes.begin());
      expect(over_trace.contains(i_star[hk]), "trace leaves ↑(F1 ∩ B)");
      expect(!hit.contains(i_star[hk]), "i_* restricted to ↑F1 is not injective");
      hit.insert(i_star[hk]);
    }
    expect(hit == over_trace, "i_* restricted to ↑F1 is not onto ↑(F1 ∩ B)");
  }
  // (i_Y)* ∘ φ_{F1∩F2} = φ_{F1} ∘ q on A⁻.
  check_subspace_square(cone.algebra, detail::to_cone(cone, common), detail::to_cone(cone, F1));

  // g ∘ i2 = φ_{F1} ∘ q ∘ i1 ∘ embed, with g = (i_*|Y)* ∘ φ^{B⁻}_{F1∩B}.
  for (Elem v : bq.algebra.negative_part().elements()) {
    Subset up_b = detail::points_above(bprimes, trace, i2_rep(v));
    Subset left;
    for (Elem hk : over_f1.elements()) {
      if (up_b.contains(i_star[hk])) left.insert(hk);
    }
    Subset right = detail::points_above(primes, F1, i1_rep(embed(v)));
    expect(left == right, "retract square does not commute");
  }

  return {A, std::move(B), std::move(cone), std::move(primes), std::move(cone_dual),
          std::move(collisions), F1, F2, d1, d2, kind, std::move(theta), std::move(qe),
          a1, a2, rest};
}

/// A pair of homomorphisms out of A that agree on B but not at `witness`,
/// so B is not epic in A relative to any variety containing `target`.
struct EpiCertificate {
  Algebra target;
  Homomorphism g;
  Homomorphism h;
  Elem witness = 0;
};

inline bool certifies(EpiCertificate const& c, Subset b) {
  if (!is_homomorphism(c.g) || !is_homomorphism(c.h)) return false;
  for (Elem x : b.elements()) {
    if (c.g(x) != c.h(x)) return false;
  }
  return c.g(c.witness) != c.h(c.witness);
}

struct EllSeparator {
  Homomorphism ell;
  GeneratedSubalgebra generation;
};

/// For an algebra generated by C⁻ ∪ {b}, where C = `fixed` is negatively
/// generated, b = `moved` lies outside C and b ≺ e: the endomorphism ℓ
/// sending each element t(b, c⃗) to t(e, c⃗). It fixes C pointwise and
/// moves b.
inline EllSeparator ell_separator(Algebra const& whole, Subset fixed, Elem moved) {
  if (!is_subuniverse(whole, fixed)) throw NotASubalgebra("C is not a subuniverse");
  if (fixed.contains(moved)) throw HypothesesNotMet("the moved element lies outside C");
  Subset c_neg = fixed & whole.negative_part();
  if (closure(whole, c_neg) != fixed) throw HypothesesNotMet("C is negatively generated");
  if (!whole.order().covers(moved, whole.e())) {
    throw HypothesesNotMet("the moved element is covered by e");
  }
  GeneratedSubalgebra gen = generate_subalgebra(whole, c_neg, moved);
  if (gen.members != Subset::full(whole.size())) {
    throw HypothesesNotMet("the algebra is generated by C⁻ and the moved element");
  }
  Assignment at_e{gen.generators, whole.e()};
  std::vector<Elem> m(whole.size());
  for (Elem a = 0; a < whole.size(); ++a) {
    m[a] = eval_term(whole, *gen.witness[a], at_e);
    detail::expect(eval_term(whole, *gen.witness[a], gen.assignment()) == a,
                   "witness term does not evaluate to its element");
  }
  Homomorphism ell{whole, whole, std::move(m)};
  detail::expect(is_homomorphism(ell), "ℓ is not an endomorphism");
  for (Elem x : fixed.elements()) detail::expect(ell(x) == x, "ℓ moves an element of C");
  detail::expect(ell(moved) != moved, "ℓ fixes the moved element");
  detail::expect(ell.image().subset_of(fixed), "ℓ leaves C");
  return {std::move(ell), std::move(gen)};
}

struct EpiRefutation {
  EpiAnalysis analysis;
  Subset fixed;     // C, in A/θ indices
  Elem chosen = 0;  // a1 or a2, in A indices
  EllSeparator separator;
  EpiCertificate certificate;
};

/// Runs the analysis, picks C and a (C = J, a = a1, unless the incomparable
/// case has a2/θ ∉ Sg(J⁻ ∪ {a1/θ}), in which case C is that subalgebra and
/// a = a2), builds ℓ on A/θ and returns g = ℓ ∘ q, h = q.
inline EpiRefutation refute_epic(Algebra const& A, Subset b_universe) {
  using detail::expect;
  EpiAnalysis an = epi_analysis(A, b_universe);
  Quotient const& aq = an.embedding.quotient;
  Algebra const& target = aq.algebra;
  Subset embed_image = an.embedding.embedding.image();
  Subset embed_neg = embed_image & target.negative_part();
  Elem b1 = aq.projection(an.a1);
  Elem b2 = aq.projection(an.a2);

  Subset fixed = embed_image;
  Elem chosen = an.a1;
  if (an.kind == EpiCase::incomparable) {
    Subset with_a1 = embed_neg;
    with_a1.insert(b1);
    Subset with_a1_closure = closure(target, with_a1);
    if (!with_a1_closure.contains(b2)) {
      fixed = with_a1_closure;
      chosen = an.a2;
    }
  }
  Elem bq = aq.projection(chosen);
  expect(fixed != Subset::full(target.size()), "C is not proper");
  Subset gens = fixed & target.negative_part();
  gens.insert(bq);
  expect(closure(target, gens) == Subset::full(target.size()),
         "A/θ is not generated by C⁻ ∪ {a/θ}");

  EllSeparator sep = ell_separator(target, fixed, bq);
  EpiCertificate cert{target, compose(sep.ell, aq.projection), aq.projection, chosen};
  expect(certifies(cert, b_universe), "certificate does not separate");
  return {std::move(an), fixed, chosen, std::move(sep), std::move(cert)};
}

}  // namespace srl
