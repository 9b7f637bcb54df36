#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/homomorphism.hpp"
#include "srl/subalgebra.hpp"

namespace srl {

/// An equivalence relation on 0..n-1 given by a block id per element.
/// Block ids are normalized to order of first appearance, so equal relations
/// compare equal.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<Elem> blocks) : block_(normalize(blocks)) {}

  static Congruence identity(std::size_t n) {
    std::vector<Elem> b(n);
    for (Elem i = 0; i < n; ++i) b[i] = i;
    return Congruence(std::move(b));
  }
  static Congruence total(std::size_t n) {
    return Congruence(std::vector<Elem>(n, 0));
  }

  std::size_t size() const { return block_.size(); }
  Elem block(Elem a) const { return block_[a]; }
  std::vector<Elem> const& blocks() const { return block_; }
  bool related(Elem a, Elem b) const { return block_[a] == block_[b]; }
  std::size_t block_count() const {
    Elem m = 0;
    for (Elem b : block_) m = std::max(m, b + 1);
    return m;
  }
  bool is_identity() const { return block_count() == size(); }
  bool is_total() const { return block_count() <= 1; }

  /// θ ⊆ other as relations.
  bool refines(Congruence const& other) const {
    for (Elem a = 0; a < size(); ++a) {
      for (Elem b = a + 1; b < size(); ++b) {
        if (related(a, b) && !other.related(a, b)) return false;
      }
    }
    return true;
  }

  friend bool operator==(Congruence const&, Congruence const&) = default;

 private:
  static std::vector<Elem> normalize(std::vector<Elem> const& raw) {
    std::vector<Elem> out(raw.size());
    std::vector<std::pair<Elem, Elem>> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](auto const& p) { return p.first == raw[i]; });
      if (it == seen.end()) {
        seen.emplace_back(raw[i], seen.size());
        out[i] = seen.back().second;
      } else {
        out[i] = it->second;
      }
    }
    return out;
  }
  std::vector<Elem> block_;
};

inline bool is_congruence(Algebra const& A, Congruence const& t) {
  std::size_t n = A.size();
  if (t.size() != n) return false;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (!t.related(a, b)) continue;
      if (A.has_neg() && !t.related(A.neg(a), A.neg(b))) return false;
      for (Elem c = 0; c < n; ++c) {
        if (!t.related(A.meet(a, c), A.meet(b, c)) ||
            !t.related(A.join(a, c), A.join(b, c)) ||
            !t.related(A.fusion(a, c), A.fusion(b, c)) ||
            !t.related(A.residual(a, c), A.residual(b, c)) ||
            !t.related(A.residual(c, a), A.residual(c, b))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Up-closed and closed under binary meets (possibly empty).
inline bool is_lattice_filter(Algebra const& A, Subset s) {
  for (Elem a : s.elements()) {
    if (!A.up(a).subset_of(s)) return false;
    for (Elem b : s.elements()) {
      if (!s.contains(A.meet(a, b))) return false;
    }
  }
  return true;
}

/// Lattice filter containing e.
inline bool is_deductive_filter(Algebra const& A, Subset s) {
  return s.contains(A.e()) && is_lattice_filter(A, s);
}

inline Subset up_closure(Algebra const& A, Subset s) {
  Subset out;
  for (Elem a : s.elements()) out = out | A.up(a);
  return out;
}

/// Smallest deductive filter containing `x`: the up-closure of all finite
/// meets of x ∪ {e}, computed as a fixpoint.
inline Subset fg(Algebra const& A, Subset x) {
  Subset s = x;
  s.insert(A.e());
  while (true) {
    Subset next = up_closure(A, s);
    for (Elem a : s.elements()) {
      for (Elem b : s.elements()) next.insert(A.meet(a, b));
    }
    if (next == s) return s;
    s = next;
  }
}

/// Ω F = {(a,b) : a↔b ∈ F}.
inline Congruence omega(Algebra const& A, Subset filter) {
  std::size_t n = A.size();
  std::vector<Elem> blocks(n);
  for (Elem a = 0; a < n; ++a) {
    blocks[a] = a;
    for (Elem b = 0; b < a; ++b) {
      if (filter.contains(A.biconditional(a, b))) {
        blocks[a] = blocks[b];
        break;
      }
    }
  }
  return Congruence(std::move(blocks));
}

/// θ ↦ {a : a∧e ≡θ e}
inline Subset congruence_to_filter(Algebra const& A, Congruence const& t) {
  Subset f;
  for (Elem a = 0; a < A.size(); ++a) {
    if (t.related(A.meet(a, A.e()), A.e())) f.insert(a);
  }
  return f;
}

/// All deductive filters, ordered by size then lexicographically. In a
/// finite algebra these are exactly the principal filters ↑d with d ≤ e.
inline std::vector<Subset> all_deductive_filters(Algebra const& A) {
  std::vector<Subset> out;
  for (Elem d : A.negative_part().elements()) out.push_back(A.up(d));
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

/// All lattice filters, including the empty one (ordered like
/// `all_deductive_filters`).
inline std::vector<Subset> all_lattice_filters(Algebra const& A) {
  std::vector<Subset> out{Subset{}};
  for (Elem d = 0; d < A.size(); ++d) out.push_back(A.up(d));
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

/// Complement closed under join. The improper filter qualifies.
inline bool is_prime(Algebra const& A, Subset filter) {
  Subset comp = Subset::full(A.size()) - filter;
  for (Elem a : comp.elements()) {
    for (Elem b : comp.elements()) {
      if (filter.contains(A.join(a, b))) return false;
    }
  }
  return true;
}

/// Pointed: prime deductive filters including the improper one (the
/// convention for pointed duals). Proper: prime proper filters only (the
/// convention for bounded duals).
enum class Mode { pointed, proper };

inline std::vector<Subset> prime_deductive_filters(Algebra const& A,
                                                   Mode mode) {
  std::vector<Subset> out;
  Subset all = Subset::full(A.size());
  for (Subset f : all_deductive_filters(A)) {
    if (mode == Mode::proper && f == all) continue;
    if (is_prime(A, f)) out.push_back(f);
  }
  return out;
}

/// Non-empty prime lattice filters, improper one included.
inline std::vector<Subset> prime_lattice_filters(Algebra const& A) {
  std::vector<Subset> out;
  for (Subset f : all_lattice_filters(A)) {
    if (!f.empty() && is_prime(A, f)) out.push_back(f);
  }
  return out;
}

/// A quotient algebra with its canonical surjection. Element i of
/// `algebra` is the block whose least member is `representatives[i]`.
struct Quotient {
  Algebra algebra;
  Homomorphism projection;
  Congruence congruence;
  std::vector<Elem> representatives;
};

inline Quotient quotient_by(Algebra const& A, Congruence const& t,
                            std::string name = {}) {
  if (!is_congruence(A, t)) throw Error("not a congruence of " + A.name());
  std::vector<Elem> reps(t.block_count());
  for (Elem a = A.size(); a-- > 0;) reps[t.block(a)] = a;
  if (name.empty()) name = A.name() + "/θ";
  Algebra Q = induced_algebra(A, reps, t.blocks(), std::move(name));
  Homomorphism q{A, Q, t.blocks()};
  return {std::move(Q), std::move(q), t, std::move(reps)};
}

/// A/F, the quotient by Ω F.
inline Quotient quotient(Algebra const& A, Subset filter,
                         std::string name = {}) {
  if (!is_deductive_filter(A, filter)) {
    throw NotAFilter("not a deductive filter of " + A.name());
  }
  if (name.empty()) name = A.name() + "/F";
  return quotient_by(A, omega(A, filter), std::move(name));
}

/// e = a ∨ b implies e ∈ {a, b}. As a universal sentence this also holds
/// in the trivial algebra.
inline bool e_join_irreducible(Algebra const& A) {
  Elem e = A.e();
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = a; b < A.size(); ++b) {
      if (A.join(a, b) == e && a != e && b != e) return false;
    }
  }
  return true;
}

/// e is join-irreducible and the algebra is non-trivial. The trivial
/// algebra is treated as not FSI.
inline bool is_fsi(Algebra const& A) { return A.size() > 1 && e_join_irreducible(A); }

/// μ|_B for B given by its elements (in increasing order).
inline Congruence restrict_congruence(Congruence const& mu,
                                      std::vector<Elem> const& elements) {
  std::vector<Elem> b(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) b[i] = mu.block(elements[i]);
  return Congruence(std::move(b));
}

/// h←[S]
inline Subset preimage(Homomorphism const& h, Subset s) {
  Subset out;
  for (Elem a = 0; a < h.map.size(); ++a) {
    if (s.contains(h.map[a])) out.insert(a);
  }
  return out;
}

/// h[S]
inline Subset image(Homomorphism const& h, Subset s) {
  Subset out;
  for (Elem a : s.elements()) out.insert(h.map[a]);
  return out;
}

/// B/(μ|_B) → A/μ, a/(μ|_B) ↦ a/μ, with both quotients.
struct QuotientEmbedding {
  Subalgebra sub;
  Quotient sub_quotient;
  Quotient quotient;
  Homomorphism embedding;
};

inline QuotientEmbedding restrict_quotient_embedding(Algebra const& A,
                                                     Subset b_universe,
                                                     Congruence const& mu) {
  Subalgebra B = subalgebra(A, b_universe);
  Quotient Aq = quotient_by(A, mu);
  Congruence mu_b = restrict_congruence(mu, B.elements);
  Quotient Bq = quotient_by(B.algebra, mu_b);

  // Ω^B(B ∩ F) = (Ω^A F)|_B with F the filter of μ.
  Subset f = congruence_to_filter(A, mu);
  Subset trace;
  for (std::size_t i = 0; i < B.elements.size(); ++i) {
    if (f.contains(B.elements[i])) trace.insert(i);
  }
  if (omega(B.algebra, trace) != mu_b) {
    throw VerificationFailure("Ω of the trace filter differs from μ|_B");
  }

  std::vector<Elem> m(Bq.algebra.size());
  for (Elem i = 0; i < m.size(); ++i) {
    m[i] = mu.block(B.elements[Bq.representatives[i]]);
  }
  Homomorphism j{Bq.algebra, Aq.algebra, std::move(m)};
  if (!is_homomorphism(j) || !j.injective()) {
    throw VerificationFailure("quotient embedding is not an injective homomorphism");
  }
  return {std::move(B), std::move(Bq), std::move(Aq), std::move(j)};
}

}  // namespace srl
