#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/cones.hpp"
#include "srl/filters.hpp"
#include "srl/homomorphism.hpp"

namespace srl {

/// A finite poset, with its greatest element when it is used as a pointed
/// space. Finite spaces carry the discrete topology, so every subset is
/// clopen and no topology is stored.
struct PointedPoset {
  Order order;
  std::optional<Elem> top;
  std::vector<std::string> labels;

  std::size_t size() const { return order.size(); }
  bool leq(Elem x, Elem y) const { return order.leq(x, y); }
  Subset up(Elem x) const { return order.up[x]; }
  Subset down(Elem x) const { return order.down(x); }
  std::string label(Elem x) const {
    return labels.empty() ? std::to_string(x) : labels[x];
  }
};

/// Builds a poset from a reflexive-transitive `leq` relation; the top, if
/// any, is detected.
template <class Leq>
PointedPoset make_poset(std::size_t n, Leq leq) {
  PointedPoset p;
  p.order.up.assign(n, Subset{});
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (leq(x, y)) p.order.up[x].insert(y);
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (p.down(x) == Subset::full(n)) p.top = x;
  }
  return p;
}

inline bool is_partial_order(PointedPoset const& X) {
  std::size_t n = X.size();
  for (Elem x = 0; x < n; ++x) {
    if (!X.leq(x, x)) return false;
    for (Elem y : X.up(x).elements()) {
      if (y != x && X.leq(y, x)) return false;
      if (!X.up(y).subset_of(X.up(x))) return false;
    }
  }
  return true;
}

inline bool is_up_set(PointedPoset const& X, Subset s) {
  for (Elem x : s.elements()) {
    if (!X.up(x).subset_of(s)) return false;
  }
  return true;
}

inline Subset down_closure(PointedPoset const& X, Subset s) {
  Subset out;
  for (Elem x : s.elements()) out = out | X.down(x);
  return out;
}

/// The subposet on `points` (reindexed in increasing order).
inline PointedPoset induced_poset(PointedPoset const& X, Subset points) {
  std::vector<Elem> pts = points.elements();
  PointedPoset p = make_poset(pts.size(), [&](Elem i, Elem j) {
    return X.leq(pts[i], pts[j]);
  });
  if (!X.labels.empty()) {
    for (Elem x : pts) p.labels.push_back(X.labels[x]);
  }
  return p;
}

/// Every up-set of X (∅ included), ordered by size then lexicographically.
inline std::vector<Subset> all_up_sets(PointedPoset const& X) {
  std::vector<Subset> found{Subset{}};
  std::set<std::uint64_t> seen{0};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x = 0; x < X.size(); ++x) {
      if (found[i].contains(x)) continue;
      Subset t = found[i] | X.up(x);
      if (seen.insert(t.bits()).second) {
        if (found.size() > kMaxSize) {
          throw BoundExceeded("poset has more than " +
                              std::to_string(kMaxSize) + " up-sets");
        }
        found.push_back(t);
      }
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  return found;
}

/// A_*: prime filters ordered by inclusion. Point i is `filters[i]`.
struct DualSpace {
  PointedPoset poset;
  std::vector<Subset> filters;

  std::optional<Elem> index_of(Subset f) const {
    auto it = std::find(filters.begin(), filters.end(), f);
    if (it == filters.end()) return std::nullopt;
    return static_cast<Elem>(it - filters.begin());
  }
};

namespace detail {

inline void require_brouwerian(Algebra const& A) {
  if (!classify(A).brouwerian) {
    throw NotBrouwerian(A.name() + " is not a Brouwerian algebra");
  }
}

inline std::string subset_label(Algebra const& A, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Elem a : s.elements()) {
    if (!first) out += ",";
    out += A.label(a);
    first = false;
  }
  return out + "}";
}

}  // namespace detail

inline DualSpace dual_space(Algebra const& A, Mode mode) {
  detail::require_brouwerian(A);
  std::vector<Subset> primes = prime_deductive_filters(A, mode);
  PointedPoset p = make_poset(primes.size(), [&](Elem i, Elem j) {
    return primes[i].subset_of(primes[j]);
  });
  if (mode == Mode::proper) p.top.reset();
  for (Subset f : primes) p.labels.push_back(detail::subset_label(A, f));
  return {std::move(p), std::move(primes)};
}

/// X*: the up-set algebra. Pointed mode uses the non-empty up-sets of a
/// poset with top; proper mode uses all up-sets and ⊥ = ∅.
/// Element i is `up_sets[i]`.
struct DualAlgebra {
  Algebra algebra;
  std::vector<Subset> up_sets;

  Elem index_of(Subset u) const {
    auto it = std::find(up_sets.begin(), up_sets.end(), u);
    if (it == up_sets.end()) throw Error("not an element of the up-set algebra");
    return static_cast<Elem>(it - up_sets.begin());
  }
};

inline DualAlgebra dual_algebra(PointedPoset const& X, Mode mode) {
  if (mode == Mode::pointed && !X.top) {
    throw NoTop("pointed duality needs a poset with a greatest element");
  }
  std::vector<Subset> ups = all_up_sets(X);
  if (mode == Mode::pointed) ups.erase(ups.begin());  // drop ∅
  std::size_t m = ups.size();
  auto idx = [&](Subset u) {
    return static_cast<Elem>(std::find(ups.begin(), ups.end(), u) - ups.begin());
  };
  Subset whole = Subset::full(X.size());
  AlgebraTables t;
  t.size = m;
  t.signature = {false, mode == Mode::proper};
  t.meet.assign(m, std::vector<Elem>(m));
  t.join.assign(m, std::vector<Elem>(m));
  t.residual.assign(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      t.meet[i][j] = idx(ups[i] & ups[j]);
      t.join[i][j] = idx(ups[i] | ups[j]);
      t.residual[i][j] = idx(whole - down_closure(X, ups[i] - ups[j]));
    }
  }
  t.fusion = t.meet;
  t.e = idx(whole);
  if (mode == Mode::proper) t.bottom = idx(Subset{});
  for (Subset u : ups) {
    std::string s = "{";
    bool first = true;
    for (Elem x : u.elements()) {
      if (!first) s += ",";
      s += X.label(x);
      first = false;
    }
    t.labels.push_back(s + "}");
  }
  t.name = "up-sets";
  return {Algebra(std::move(t)), std::move(ups)};
}

/// φ(a) = {F ∈ Pr(A) : a ∈ F}
inline Subset canonical_image(DualSpace const& X, Elem a) {
  Subset s;
  for (Elem i = 0; i < X.filters.size(); ++i) {
    if (X.filters[i].contains(a)) s.insert(i);
  }
  return s;
}

/// a ↦ φ(a) as a map A → (A_*)*, checked to be an isomorphism. Proper mode
/// needs a Heyting algebra so that both sides have a bottom constant.
inline Homomorphism canonical_iso(Algebra const& A, Mode mode) {
  if (mode == Mode::proper && !A.has_bottom()) {
    throw NotBrouwerian("proper duality needs a Heyting algebra");
  }
  DualSpace X = dual_space(A, mode);
  DualAlgebra D = dual_algebra(X.poset, mode);
  std::vector<Elem> m(A.size());
  for (Elem a = 0; a < A.size(); ++a) m[a] = D.index_of(canonical_image(X, a));
  Homomorphism h{A, D.algebra, std::move(m)};
  if (!is_homomorphism(h) || !h.injective() || !h.surjective()) {
    throw VerificationFailure("canonical map onto the double dual is not an isomorphism");
  }
  return h;
}

/// x ↦ {U ∈ X* : x ∈ U} as a map X → (X*)_*, checked to be an order
/// isomorphism preserving the top.
inline std::vector<Elem> poset_round_trip(PointedPoset const& X, Mode mode) {
  DualAlgebra D = dual_algebra(X, mode);
  DualSpace Y = dual_space(D.algebra, mode);
  std::vector<Elem> m(X.size());
  for (Elem x = 0; x < X.size(); ++x) {
    Subset f;
    for (Elem i = 0; i < D.up_sets.size(); ++i) {
      if (D.up_sets[i].contains(x)) f.insert(i);
    }
    auto idx = Y.index_of(f);
    if (!idx) throw VerificationFailure("point does not determine a prime filter");
    m[x] = *idx;
  }
  bool ok = X.size() == Y.poset.size();
  for (Elem x = 0; ok && x < X.size(); ++x) {
    for (Elem y = 0; y < X.size(); ++y) {
      if (X.leq(x, y) != Y.poset.leq(m[x], m[y])) ok = false;
    }
  }
  if (ok && mode == Mode::pointed) ok = Y.poset.top && m[*X.top] == *Y.poset.top;
  if (!ok) throw VerificationFailure("poset round trip is not an isomorphism");
  return m;
}

struct EsakiaMorphism {
  PointedPoset source;
  PointedPoset target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
};

/// Isotone, and g(x) ≤ y implies y = g(z) for some z ≥ x; in pointed mode
/// the top goes to the top.
inline bool is_esakia_morphism(PointedPoset const& X, PointedPoset const& Y,
                               std::vector<Elem> const& g, Mode mode) {
  if (g.size() != X.size()) return false;
  for (Elem y : g) {
    if (y >= Y.size()) return false;
  }
  if (mode == Mode::pointed) {
    if (!X.top || !Y.top || g[*X.top] != *Y.top) return false;
  }
  for (Elem x = 0; x < X.size(); ++x) {
    Subset reach;
    for (Elem z : X.up(x).elements()) {
      if (!Y.leq(g[x], g[z])) return false;
      reach.insert(g[z]);
    }
    if (!Y.up(g[x]).subset_of(reach)) return false;
  }
  return true;
}

inline bool is_esakia_morphism(EsakiaMorphism const& g, Mode mode) {
  return is_esakia_morphism(g.source, g.target, g.map, mode);
}

/// h_*: B_* → A_*, F ↦ h←[F].
inline EsakiaMorphism dualize_morphism(Homomorphism const& h, Mode mode) {
  DualSpace xa = dual_space(h.source, mode);
  DualSpace xb = dual_space(h.target, mode);
  std::vector<Elem> m(xb.filters.size());
  for (Elem i = 0; i < m.size(); ++i) {
    auto idx = xa.index_of(preimage(h, xb.filters[i]));
    if (!idx) throw VerificationFailure("preimage of a prime filter is not prime");
    m[i] = *idx;
  }
  EsakiaMorphism g{xb.poset, xa.poset, std::move(m)};
  if (!is_esakia_morphism(g, mode)) {
    throw VerificationFailure("dual of a homomorphism is not an Esakia morphism");
  }
  return g;
}

/// The up-set ↑F of A_* (pointed mode) with φ_F: A/F ≅ (↑F)*,
/// a/F ↦ {H ∈ Pr(A) : F ∪ {a} ⊆ H}.
struct ESubspace {
  DualSpace space;       // A_*
  Subset points;         // ↑F within A_*
  PointedPoset subspace; // ↑F as a poset, points reindexed
  Quotient quotient;     // A/F
  DualAlgebra algebra;   // (↑F)*
  Homomorphism iso;      // φ_F
};

/// Pointed duality sees a Heyting algebra through its Brouwerian reduct.
inline ESubspace e_subspace(Algebra const& bounded, Subset filter) {
  if (!is_deductive_filter(bounded, filter)) {
    throw NotAFilter("not a filter of " + bounded.name());
  }
  Algebra A = bounded;
  if (A.has_bottom()) {
    AlgebraTables t = A.tables();
    t.signature.bottom = false;
    t.bottom.reset();
    A = Algebra(std::move(t));
  }
  DualSpace X = dual_space(A, Mode::pointed);
  Subset pts;
  for (Elem i = 0; i < X.filters.size(); ++i) {
    if (filter.subset_of(X.filters[i])) pts.insert(i);
  }
  PointedPoset sub = induced_poset(X.poset, pts);
  Quotient q = quotient(A, filter);
  DualAlgebra D = dual_algebra(sub, Mode::pointed);
  std::vector<Elem> ptlist = pts.elements();
  std::vector<Elem> m(q.algebra.size());
  for (Elem c = 0; c < m.size(); ++c) {
    Elem a = q.representatives[c];
    Subset u;
    for (Elem k = 0; k < ptlist.size(); ++k) {
      if (X.filters[ptlist[k]].contains(a)) u.insert(k);
    }
    m[c] = D.index_of(u);
  }
  Homomorphism iso{q.algebra, D.algebra, std::move(m)};
  if (!is_homomorphism(iso) || !iso.injective() || !iso.surjective()) {
    throw VerificationFailure("φ_F is not an isomorphism onto the subspace algebra");
  }
  // φ_F ∘ q agrees with a ↦ φ(a) ∩ ↑F.
  for (Elem a = 0; a < A.size(); ++a) {
    Subset full = canonical_image(X, a) & pts;
    Subset u = D.up_sets[iso(q.projection(a))];
    Subset lifted;
    for (Elem k : u.elements()) lifted.insert(ptlist[k]);
    if (lifted != full) {
      throw VerificationFailure("restriction square for φ_F does not commute");
    }
  }
  return {std::move(X), pts, std::move(sub), std::move(q), std::move(D),
          std::move(iso)};
}

/// For filters F ⊆ G: φ_G ∘ q' = i₂* ∘ φ_F, where q': a/F ↦ a/G and i₂* cuts
/// an up-set of ↑F down to ↑G. Throws VerificationFailure if not.
inline void check_subspace_square(Algebra const& A, Subset f, Subset g) {
  if (!f.subset_of(g)) throw NotAFilter("the filters are not nested");
  ESubspace sf = e_subspace(A, f);
  ESubspace sg = e_subspace(A, g);
  std::vector<Elem> pf = sf.points.elements();
  std::vector<Elem> pg = sg.points.elements();
  for (Elem a = 0; a < A.size(); ++a) {
    Subset left;  // φ_G(a/G), in A_* indices
    for (Elem k : sg.algebra.up_sets[sg.iso(sg.quotient.projection(a))].elements()) {
      left.insert(pg[k]);
    }
    Subset right;  // φ_F(a/F) ∩ ↑G
    for (Elem k : sf.algebra.up_sets[sf.iso(sf.quotient.projection(a))].elements()) {
      right.insert(pf[k]);
    }
    right = right & sg.points;
    if (left != right) {
      throw VerificationFailure("nested subspace square does not commute");
    }
  }
}

/// Length of the longest chain x = x0 < x1 < ... < xk up to a maximal
/// point (the top, in a pointed poset).
inline std::size_t depth(PointedPoset const& X, Elem x) {
  std::vector<std::optional<std::size_t>> memo(X.size());
  auto go = [&](auto&& self, Elem p) -> std::size_t {
    if (memo[p]) return *memo[p];
    std::size_t best = 0;
    for (Elem q : X.up(p).elements()) {
      if (q != p) best = std::max(best, 1 + self(self, q));
    }
    memo[p] = best;
    return best;
  };
  return go(go, x);
}

inline std::size_t depth(PointedPoset const& X) {
  std::size_t d = 0;
  for (Elem x = 0; x < X.size(); ++x) d = std::max(d, depth(X, x));
  return d;
}

/// Depth of an S[I]RL: the depth of the pointed dual of its negative cone.
/// A Heyting algebra gets the depth of its Brouwerian reduct.
inline std::size_t depth(Algebra const& A) {
  NegativeCone c = negative_cone(A);
  return depth(dual_space(c.algebra, Mode::pointed).poset);
}

/// Most points on a chain of the poset (0 when empty).
inline std::size_t longest_chain_points(PointedPoset const& X) {
  if (X.size() == 0) return 0;
  std::size_t best = 0;
  for (Elem x = 0; x < X.size(); ++x) best = std::max(best, depth(X, x) + 1);
  return best;
}

/// For a Heyting algebra, the pointed dual is the proper dual with a top
/// point added, so pointed depth equals the number of points on a longest
/// chain of the proper dual. Throws VerificationFailure otherwise.
inline void check_heyting_depth(Algebra const& A) {
  if (!A.has_bottom()) throw NotBrouwerian("needs a Heyting algebra");
  std::size_t pointed = depth(dual_space(A, Mode::pointed).poset);
  std::size_t proper = longest_chain_points(dual_space(A, Mode::proper).poset);
  if (pointed != proper) {
    throw VerificationFailure("pointed and proper depths disagree");
  }
}

}  // namespace srl
