#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "srl/algebra.hpp"

namespace srl {

/// A map between the carriers of two algebras of the same signature.
/// Whether it actually preserves the operations is checked by
/// `is_homomorphism`; everything returned by this library does.
struct Homomorphism {
  Algebra source;
  Algebra target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }

  bool injective() const {
    Subset seen;
    for (Elem y : map) {
      if (seen.contains(y)) return false;
      seen.insert(y);
    }
    return true;
  }
  bool surjective() const { return image() == Subset::full(target.size()); }
  Subset image() const {
    Subset s;
    for (Elem y : map) s.insert(y);
    return s;
  }
};

/// True iff `map` preserves every operation of the common signature,
/// including e and, when present, ¬ and ⊥.
inline bool is_homomorphism(Algebra const& A, Algebra const& B,
                            std::vector<Elem> const& map) {
  if (A.signature() != B.signature()) return false;
  if (map.size() != A.size()) return false;
  for (Elem y : map) {
    if (y >= B.size()) return false;
  }
  if (map[A.e()] != B.e()) return false;
  if (A.has_bottom() && map[A.bottom()] != B.bottom()) return false;
  std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a) {
    if (A.has_neg() && map[A.neg(a)] != B.neg(map[a])) return false;
    for (Elem b = 0; b < n; ++b) {
      Elem x = map[a];
      Elem y = map[b];
      if (map[A.meet(a, b)] != B.meet(x, y) ||
          map[A.join(a, b)] != B.join(x, y) ||
          map[A.fusion(a, b)] != B.fusion(x, y) ||
          map[A.residual(a, b)] != B.residual(x, y)) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_homomorphism(Homomorphism const& h) {
  return is_homomorphism(h.source, h.target, h.map);
}

/// g ∘ f
inline Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
  std::vector<Elem> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return {f.source, g.target, std::move(m)};
}

inline Homomorphism identity_map(Algebra const& A) {
  std::vector<Elem> m(A.size());
  for (Elem i = 0; i < m.size(); ++i) m[i] = i;
  return {A, A, std::move(m)};
}

/// Partial assignment for homomorphism search; nullopt = unconstrained.
using PartialMap = std::vector<std::optional<Elem>>;

namespace detail {

inline constexpr Elem kUnassigned = std::numeric_limits<Elem>::max();

/// Backtracking search for operation-preserving maps A → B. Every new
/// assignment is propagated through all operation tables against every
/// element already assigned, so forced values are set (or refuted) as soon
/// as both arguments are known.
class HomSearch {
 public:
  HomSearch(Algebra const& A, Algebra const& B, bool injective)
      : A_(A), B_(B), injective_(injective), img_(A.size(), kUnassigned) {}

  template <class Visit>
  void run(PartialMap const& partial, Visit&& visit) {
    if (!assign(A_.e(), B_.e())) return;
    if (A_.has_bottom() && !assign(A_.bottom(), B_.bottom())) return;
    for (Elem a = 0; a < partial.size() && a < A_.size(); ++a) {
      if (partial[a] && (*partial[a] >= B_.size() || !assign(a, *partial[a]))) {
        return;
      }
    }
    if (!propagate()) return;
    search(visit);
  }

  void set_candidates(std::vector<Subset> cands) { cands_ = std::move(cands); }

 private:
  bool assign(Elem a, Elem v) {
    if (img_[a] != kUnassigned) return img_[a] == v;
    if (!cands_.empty() && !cands_[a].contains(v)) return false;
    if (injective_) {
      if (used_.contains(v)) return false;
      used_.insert(v);
    }
    img_[a] = v;
    trail_.push_back(a);
    queue_.push_back(a);
    return true;
  }

  bool propagate() {
    while (qhead_ < queue_.size()) {
      Elem x = queue_[qhead_++];
      Elem hx = img_[x];
      if (A_.has_neg() && !assign(A_.neg(x), B_.neg(hx))) return false;
      // Pair x with every element assigned so far (x included).
      for (std::size_t k = 0; k < trail_.size(); ++k) {
        Elem y = trail_[k];
        Elem hy = img_[y];
        if (!assign(A_.meet(x, y), B_.meet(hx, hy)) ||
            !assign(A_.join(x, y), B_.join(hx, hy)) ||
            !assign(A_.fusion(x, y), B_.fusion(hx, hy)) ||
            !assign(A_.residual(x, y), B_.residual(hx, hy)) ||
            !assign(A_.residual(y, x), B_.residual(hy, hx))) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t trail_size, std::size_t queue_size) {
    while (trail_.size() > trail_size) {
      Elem a = trail_.back();
      trail_.pop_back();
      if (injective_) used_.erase(img_[a]);
      img_[a] = kUnassigned;
    }
    queue_.resize(queue_size);
    qhead_ = queue_size;
  }

  template <class Visit>
  bool search(Visit& visit) {
    Elem x = 0;
    while (x < img_.size() && img_[x] != kUnassigned) ++x;
    if (x == img_.size()) return visit(img_);
    for (Elem v = 0; v < B_.size(); ++v) {
      std::size_t ts = trail_.size();
      std::size_t qs = queue_.size();
      if (assign(x, v) && propagate()) {
        if (!search(visit)) return false;
      }
      undo(ts, qs);
    }
    return true;
  }

  Algebra const& A_;
  Algebra const& B_;
  bool injective_;
  std::vector<Elem> img_;
  std::vector<Elem> trail_;
  std::vector<Elem> queue_;
  std::size_t qhead_ = 0;
  Subset used_;
  std::vector<Subset> cands_;
};

/// Isomorphism-invariant fingerprint of an element.
inline auto element_invariant(Algebra const& A, Elem a) {
  return std::make_tuple(A.down(a).size(), A.up(a).size(), a == A.e(),
                         A.fusion(a, a) == a, A.leq(a, A.e()),
                         A.has_neg() && A.neg(a) == a,
                         A.leq(A.fusion(a, a), a));
}

}  // namespace detail

/// All homomorphisms A → B extending `partial`, in lexicographic order of
/// their map arrays.
inline std::vector<Homomorphism> homomorphisms(Algebra const& A,
                                               Algebra const& B,
                                               PartialMap const& partial = {}) {
  if (A.signature() != B.signature()) {
    throw WrongSignature("homomorphisms require a common signature");
  }
  std::vector<Homomorphism> out;
  detail::HomSearch s(A, B, false);
  s.run(partial, [&](std::vector<Elem> const& m) {
    out.push_back({A, B, m});
    return true;
  });
  return out;
}

/// First homomorphism in lexicographic order satisfying `accept`, or none.
template <class Pred>
std::optional<Homomorphism> find_homomorphism(Algebra const& A,
                                              Algebra const& B, Pred accept,
                                              PartialMap const& partial = {}) {
  if (A.signature() != B.signature()) {
    throw WrongSignature("homomorphisms require a common signature");
  }
  std::optional<Homomorphism> found;
  detail::HomSearch s(A, B, false);
  s.run(partial, [&](std::vector<Elem> const& m) {
    Homomorphism h{A, B, m};
    if (accept(h)) {
      found = std::move(h);
      return false;
    }
    return true;
  });
  return found;
}

/// Injective homomorphisms A → B (embeddings), lexicographically ordered.
inline std::vector<Homomorphism> embeddings(Algebra const& A,
                                            Algebra const& B) {
  if (A.signature() != B.signature()) {
    throw WrongSignature("homomorphisms require a common signature");
  }
  std::vector<Homomorphism> out;
  detail::HomSearch s(A, B, true);
  s.run({}, [&](std::vector<Elem> const& m) {
    out.push_back({A, B, m});
    return true;
  });
  return out;
}

/// A bijective homomorphism A → B if one exists. Candidates are pruned by
/// element invariants (order ranks, idempotence, position relative to e).
inline std::optional<Homomorphism> find_isomorphism(Algebra const& A,
                                                    Algebra const& B) {
  if (A.signature() != B.signature()) {
    throw WrongSignature("isomorphism search requires a common signature");
  }
  if (A.size() != B.size()) return std::nullopt;
  std::size_t n = A.size();
  std::vector<Subset> cands(n);
  for (Elem a = 0; a < n; ++a) {
    auto ia = detail::element_invariant(A, a);
    for (Elem b = 0; b < n; ++b) {
      if (ia == detail::element_invariant(B, b)) cands[a].insert(b);
    }
    if (cands[a].empty()) return std::nullopt;
  }
  std::optional<Homomorphism> found;
  detail::HomSearch s(A, B, true);
  s.set_candidates(std::move(cands));
  s.run({}, [&](std::vector<Elem> const& m) {
    found = Homomorphism{A, B, m};
    return false;
  });
  return found;
}

inline bool isomorphic(Algebra const& A, Algebra const& B) {
  return A.signature() == B.signature() && find_isomorphism(A, B).has_value();
}

}  // namespace srl
