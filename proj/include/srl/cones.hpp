#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/filters.hpp"
#include "srl/homomorphism.hpp"
#include "srl/subalgebra.hpp"
#include "srl/term.hpp"

namespace srl {

/// A⁻ = {a : a ≤ e} as a Brouwerian algebra (fusion = ∧, a→⁻b = (a→b)∧e),
/// Heyting when A has a bottom constant. Element i is `elements[i]` of A.
struct NegativeCone {
  Algebra algebra;
  std::vector<Elem> elements;

  Elem index_of(Elem a) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), a);
    return static_cast<Elem>(it - elements.begin());
  }
};

inline NegativeCone negative_cone(Algebra const& A) {
  std::vector<Elem> els = A.negative_part().elements();
  std::size_t m = els.size();
  std::vector<Elem> idx(A.size(), 0);
  for (std::size_t i = 0; i < m; ++i) idx[els[i]] = i;
  AlgebraTables t;
  t.size = m;
  t.signature = {false, A.has_bottom()};
  t.name = A.name() + "⁻";
  auto make = [&](auto op) {
    Table tab(m, std::vector<Elem>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) tab[i][j] = idx[op(els[i], els[j])];
    }
    return tab;
  };
  t.meet = make([&](Elem a, Elem b) { return A.meet(a, b); });
  t.join = make([&](Elem a, Elem b) { return A.join(a, b); });
  t.fusion = t.meet;
  t.residual = make([&](Elem a, Elem b) {
    return A.meet(A.residual(a, b), A.e());
  });
  t.e = idx[A.e()];
  if (A.has_bottom()) t.bottom = idx[A.bottom()];
  if (A.has_labels()) {
    for (Elem a : els) t.labels.push_back(A.label(a));
  }
  return {Algebra(std::move(t)), std::move(els)};
}

/// h|A⁻ : A⁻ → B⁻ for a homomorphism h: A → B.
inline Homomorphism restrict_to_cones(Homomorphism const& h) {
  NegativeCone ca = negative_cone(h.source);
  NegativeCone cb = negative_cone(h.target);
  std::vector<Elem> m;
  for (Elem a : ca.elements) m.push_back(cb.index_of(h(a)));
  return {ca.algebra, cb.algebra, std::move(m)};
}

/// Sg^A of a generating set, with a smallest witness term for every member.
/// Generators are y0, y1, ... in increasing index order, except the optional
/// designated element, which is x.
struct GeneratedSubalgebra {
  Algebra parent;
  Subset members;
  std::vector<Elem> generators;
  std::optional<Elem> designated;
  std::vector<std::optional<Term>> witness;  // indexed by parent element

  Assignment assignment() const { return {generators, designated}; }
};

/// Breadth-first closure by term size. At each size the connectives are
/// tried in the order ∧ ∨ · → ¬, left operands before right ones in order of
/// discovery, and the first term reaching an element is kept.
inline GeneratedSubalgebra generate_subalgebra(
    Algebra const& A, Subset gens, std::optional<Elem> designated = {}) {
  using Op = Term::Op;
  std::size_t n = A.size();
  GeneratedSubalgebra g{A, {}, {}, designated, std::vector<std::optional<Term>>(n)};
  std::vector<std::vector<Elem>> by_size(2);
  auto add = [&](Elem a, Term t) {
    if (g.members.contains(a)) return;
    g.members.insert(a);
    if (by_size.size() <= t.size()) by_size.resize(t.size() + 1);
    by_size[t.size()].push_back(a);
    g.witness[a] = std::move(t);
  };

  if (designated) add(*designated, Term::x());
  for (Elem a : gens.elements()) {
    if (designated && a == *designated) continue;
    g.generators.push_back(a);
    add(a, Term::var(g.generators.size() - 1));
  }
  add(A.e(), Term::unit());
  if (A.has_bottom()) add(A.bottom(), Term::bottom());

  Subset target = closure(A, g.members);
  Op const binary[] = {Op::meet, Op::join, Op::fusion, Op::residual};
  for (std::size_t k = 2; g.members != target; ++k) {
    by_size.resize(std::max(by_size.size(), k + 1));
    for (Op op : binary) {
      for (std::size_t i = 1; i + 1 < k; ++i) {
        std::vector<Elem> left = by_size[i];
        std::vector<Elem> right = by_size[k - 1 - i];
        for (Elem a : left) {
          for (Elem b : right) {
            Elem c = op == Op::meet     ? A.meet(a, b)
                     : op == Op::join   ? A.join(a, b)
                     : op == Op::fusion ? A.fusion(a, b)
                                        : A.residual(a, b);
            if (!g.members.contains(c)) {
              add(c, Term::binary(op, *g.witness[a], *g.witness[b]));
            }
          }
        }
      }
    }
    if (A.has_neg()) {
      std::vector<Elem> prev = by_size[k - 1];
      for (Elem a : prev) {
        Elem c = A.neg(a);
        if (!g.members.contains(c)) add(c, Term::neg(*g.witness[a]));
      }
    }
  }
  return g;
}

inline bool is_negatively_generated(Algebra const& A) {
  return generate_subalgebra(A, A.negative_part()).members ==
         Subset::full(A.size());
}

/// (A/F)⁻ ≅ A⁻/(A⁻∩F), both directions, checked on construction.
struct ConeQuotientIso {
  Quotient quotient;          // A/F
  NegativeCone quotient_cone; // (A/F)⁻
  NegativeCone cone;          // A⁻
  Quotient cone_quotient;     // A⁻/(A⁻∩F)
  Homomorphism forward;       // a/F ↦ (a∧e)/(A⁻∩F)
  Homomorphism backward;      // a/(A⁻∩F) ↦ a/F
};

namespace detail {

inline Subset to_cone(NegativeCone const& c, Subset s) {
  Subset out;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (s.contains(c.elements[i])) out.insert(i);
  }
  return out;
}

inline Subset from_cone(NegativeCone const& c, Subset s) {
  Subset out;
  for (Elem i : s.elements()) out.insert(c.elements[i]);
  return out;
}

}  // namespace detail

/// Checks A⁻ ∩ Fg^A(G) = G for every deductive filter G of the cone.
inline void check_cone_filter_generation(Algebra const& A,
                                         NegativeCone const& cone) {
  for (Subset g : all_deductive_filters(cone.algebra)) {
    Subset gen = fg(A, detail::from_cone(cone, g));
    if (detail::to_cone(cone, gen) != g) {
      throw VerificationFailure("cone filter is not the trace of the filter it generates");
    }
  }
}

inline ConeQuotientIso cone_quotient_iso(Algebra const& A, Subset filter) {
  Quotient q = quotient(A, filter);
  NegativeCone qc = negative_cone(q.algebra);
  NegativeCone c = negative_cone(A);
  Quotient cq = quotient(c.algebra, detail::to_cone(c, filter));
  check_cone_filter_generation(A, c);

  std::vector<Elem> fwd(qc.elements.size());
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    Elem rep = q.representatives[qc.elements[i]];
    fwd[i] = cq.projection(c.index_of(A.meet(rep, A.e())));
  }
  std::vector<Elem> bwd(cq.algebra.size());
  for (std::size_t i = 0; i < bwd.size(); ++i) {
    Elem a = c.elements[cq.representatives[i]];
    bwd[i] = qc.index_of(q.projection(a));
  }
  Homomorphism f{qc.algebra, cq.algebra, std::move(fwd)};
  Homomorphism b{cq.algebra, qc.algebra, std::move(bwd)};
  if (!is_homomorphism(f) || !is_homomorphism(b) ||
      compose(b, f).map != identity_map(qc.algebra).map ||
      compose(f, b).map != identity_map(cq.algebra).map) {
    throw VerificationFailure("cone/quotient maps are not inverse isomorphisms");
  }
  return {std::move(q), std::move(qc), std::move(c), std::move(cq),
          std::move(f), std::move(b)};
}

}  // namespace srl
