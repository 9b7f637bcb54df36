#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "srl/algebra.hpp"

namespace srl {

enum class ModelClass { brouwerian, heyting, srl, sirl };

inline std::string to_string(ModelClass c) {
  switch (c) {
    case ModelClass::brouwerian: return "brouwerian";
    case ModelClass::heyting: return "heyting";
    case ModelClass::srl: return "srl";
    case ModelClass::sirl: return "sirl";
  }
  return "?";
}

inline ModelClass parse_model_class(std::string const& s) {
  for (ModelClass c : {ModelClass::brouwerian, ModelClass::heyting, ModelClass::srl,
                       ModelClass::sirl}) {
    if (to_string(c) == s) return c;
  }
  throw UnknownName("unknown model class '" + s + "'");
}

/// Largest size `enumerate_models` accepts by default for a class.
inline std::size_t default_bound(ModelClass c) {
  return c == ModelClass::srl || c == ModelClass::sirl ? 6 : 8;
}

/// A finite lattice in canonical labeling: elements sorted by the size of
/// their down-set (so 0 is the bottom and n-1 the top), with the order
/// automorphisms of the labeled lattice.
struct Lattice {
  std::size_t n = 0;
  std::vector<Subset> up;
  Table meet, join;
  std::vector<std::vector<Elem>> automorphisms;

  bool leq(Elem a, Elem b) const { return up[a].contains(b); }
};

namespace detail {

/// Calls f(perm) for every permutation of 0..n-1 that maps each class (a
/// list of element groups) onto itself.
inline void for_each_class_perm(std::vector<std::vector<Elem>> const& classes, std::size_t n,
                                std::function<void(std::vector<Elem> const&)> const& f) {
  std::vector<Elem> perm(n);
  std::function<void(std::size_t)> rec = [&](std::size_t ci) {
    if (ci == classes.size()) {
      f(perm);
      return;
    }
    std::vector<Elem> img = classes[ci];
    std::sort(img.begin(), img.end());
    do {
      for (std::size_t i = 0; i < img.size(); ++i) perm[classes[ci][i]] = img[i];
      rec(ci + 1);
    } while (std::next_permutation(img.begin(), img.end()));
  };
  rec(0);
}

/// Up-set bit patterns after relabeling by perm.
inline std::vector<std::uint64_t> order_code(std::vector<Subset> const& up,
                                             std::vector<Elem> const& perm) {
  std::size_t n = up.size();
  std::vector<std::uint64_t> code(n);
  for (Elem a = 0; a < n; ++a) {
    std::uint64_t bits = 0;
    for (Elem b : up[a].elements()) bits |= std::uint64_t{1} << perm[b];
    code[perm[a]] = bits;
  }
  return code;
}

inline std::optional<Lattice> make_lattice(std::vector<Subset> const& up) {
  std::size_t n = up.size();
  Lattice L;
  L.n = n;
  L.meet.assign(n, std::vector<Elem>(n));
  L.join.assign(n, std::vector<Elem>(n));
  auto down = [&](Elem a) {
    Subset d;
    for (Elem x = 0; x < n; ++x) {
      if (up[x].contains(a)) d.insert(x);
    }
    return d;
  };
  std::vector<Subset> downs(n);
  for (Elem a = 0; a < n; ++a) downs[a] = down(a);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Subset ub = up[a] & up[b];
      Subset lb = downs[a] & downs[b];
      std::optional<Elem> j, m;
      for (Elem c : ub.elements()) {
        if (up[c] == ub) j = c;
      }
      for (Elem c : lb.elements()) {
        if (downs[c] == lb) m = c;
      }
      if (!j || !m) return std::nullopt;
      L.join[a][b] = *j;
      L.meet[a][b] = *m;
    }
  }
  L.up = up;
  return L;
}

/// Canonical relabeling of a lattice order and its automorphism group.
inline Lattice canonical_lattice(std::vector<Subset> const& up) {
  std::size_t n = up.size();
  auto downsize = [&](Elem a) {
    std::size_t c = 0;
    for (Elem x = 0; x < n; ++x) c += up[x].contains(a);
    return c;
  };
  std::vector<std::tuple<std::size_t, std::size_t, Elem>> key;
  for (Elem a = 0; a < n; ++a) key.emplace_back(downsize(a), n - up[a].size(), a);
  std::sort(key.begin(), key.end());
  // Slot i holds the i-th element by invariant; elements with equal
  // invariants form a class and may be permuted among their slots.
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> slot_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem a = std::get<2>(key[i]);
    slot_of[a] = i;
    bool same = i > 0 && std::get<0>(key[i]) == std::get<0>(key[i - 1]) &&
                std::get<1>(key[i]) == std::get<1>(key[i - 1]);
    if (!same) classes.emplace_back();
    classes.back().push_back(a);
  }
  // Turn element classes into permutations of elements onto slots.
  std::vector<std::uint64_t> best;
  std::vector<Elem> best_perm;
  std::vector<std::vector<Elem>> slot_classes;
  for (auto const& c : classes) {
    std::vector<Elem> s;
    for (Elem a : c) s.push_back(slot_of[a]);
    slot_classes.push_back(s);
  }
  // perm maps element a to slot; build from class perms over slot indices.
  for_each_class_perm(classes, n, [&](std::vector<Elem> const& p) {
    // p permutes elements within classes; compose with slot_of.
    std::vector<Elem> perm(n);
    for (Elem a = 0; a < n; ++a) perm[a] = slot_of[p[a]];
    auto code = order_code(up, perm);
    if (best.empty() || code < best) {
      best = code;
      best_perm = perm;
    }
  });
  std::vector<Subset> cup(n);
  for (Elem a = 0; a < n; ++a) cup[a] = Subset(best[a]);
  Lattice L = *make_lattice(cup);
  for_each_class_perm(slot_classes, n, [&](std::vector<Elem> const& p) {
    if (order_code(cup, p) == best) L.automorphisms.push_back(p);
  });
  return L;
}

}  // namespace detail

/// All lattices with n elements up to isomorphism, in canonical form and
/// a fixed order.
inline std::vector<Lattice> enumerate_lattices(std::size_t n) {
  if (n == 0 || n > kMaxSize) throw BoundExceeded("lattice size out of range");
  if (n == 1) return {detail::canonical_lattice({Subset{0}})};
  // Elements 1..n-2 sit strictly between 0 and n-1 and are labeled
  // compatibly with the order; below[k] is the set of middle elements
  // strictly below k.
  std::size_t mid = n - 2;
  std::map<std::vector<std::uint64_t>, Lattice> found;
  std::vector<Subset> below(n);
  std::function<void(Elem)> rec = [&](Elem k) {
    if (k == n - 1) {
      std::vector<Subset> up(n);
      for (Elem a = 0; a < n; ++a) {
        up[a].insert(a);
        up[a].insert(n - 1);
      }
      up[0] = Subset::full(n);
      for (Elem b = 1; b + 1 < n; ++b) {
        for (Elem a : below[b].elements()) up[a].insert(b);
      }
      if (!detail::make_lattice(up)) return;
      Lattice L = detail::canonical_lattice(up);
      auto code = detail::order_code(L.up, [&] {
        std::vector<Elem> id(n);
        for (Elem i = 0; i < n; ++i) id[i] = i;
        return id;
      }());
      found.emplace(code, std::move(L));
      return;
    }
    std::size_t choices = std::size_t{1} << (k - 1);
    for (std::size_t mask = 0; mask < choices; ++mask) {
      Subset s(static_cast<std::uint64_t>(mask) << 1);
      bool closed = true;
      for (Elem x : s.elements()) closed = closed && below[x].subset_of(s);
      if (!closed) continue;
      below[k] = s;
      rec(k + 1);
    }
  };
  (void)mid;
  rec(1);
  std::vector<Lattice> out;
  for (auto& [code, L] : found) out.push_back(std::move(L));
  return out;
}

inline bool is_distributive(Lattice const& L) {
  for (Elem a = 0; a < L.n; ++a) {
    for (Elem b = 0; b < L.n; ++b) {
      for (Elem c = 0; c < L.n; ++c) {
        if (L.meet[a][L.join[b][c]] != L.join[L.meet[a][b]][L.meet[a][c]]) return false;
      }
    }
  }
  return true;
}

namespace detail {

inline constexpr Elem kUnset = ~Elem{0};

/// Backtracking search for commutative fusions on a lattice with unit e:
/// monoid identity, x·0 = 0, fusion = meet below e, and preservation of
/// binary joins plus associativity checked as soon as the entries involved
/// are known.
class FusionSearch {
 public:
  FusionSearch(Lattice const& L, Elem e) : L_(L), e_(e), p_(L.n, std::vector<Elem>(L.n, kUnset)) {}

  void run(std::function<void(Table const&)> const& visit) {
    std::size_t n = L_.n;
    for (Elem x = 0; x < n; ++x) {
      if (!fix(e_, x, x)) return;
      if (!fix(0, x, 0)) return;
      for (Elem y = 0; y < n; ++y) {
        if (L_.leq(x, e_) && L_.leq(y, e_) && !fix(x, y, L_.meet[x][y])) return;
      }
    }
    if (!consistent()) return;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x; y < n; ++y) {
        if (p_[x][y] == kUnset) free_.emplace_back(x, y);
      }
    }
    search(0, visit);
  }

 private:
  bool fix(Elem x, Elem y, Elem v) {
    if (p_[x][y] != kUnset && p_[x][y] != v) return false;
    p_[x][y] = p_[y][x] = v;
    return true;
  }

  bool consistent() const {
    std::size_t n = L_.n;
    auto known = [&](Elem a, Elem b) { return p_[a][b] != kUnset; };
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (!known(a, b)) continue;
        for (Elem c = 0; c < n; ++c) {
          // monotone along the order
          if (L_.leq(b, c) && known(a, c) && !L_.leq(p_[a][b], p_[a][c])) return false;
          // a·(b∨c) = a·b ∨ a·c
          Elem bc = L_.join[b][c];
          if (known(a, c) && known(a, bc) && p_[a][bc] != L_.join[p_[a][b]][p_[a][c]]) {
            return false;
          }
          // (a·b)·c = a·(b·c)
          Elem ab = p_[a][b];
          if (known(b, c) && known(ab, c) && known(a, p_[b][c]) &&
              p_[ab][c] != p_[a][p_[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(std::size_t i, std::function<void(Table const&)> const& visit) {
    if (i == free_.size()) {
      visit(p_);
      return;
    }
    auto [x, y] = free_[i];
    for (Elem v = 0; v < L_.n; ++v) {
      p_[x][y] = p_[y][x] = v;
      if (consistent()) search(i + 1, visit);
    }
    p_[x][y] = p_[y][x] = kUnset;
  }

  Lattice const& L_;
  Elem e_;
  Table p_;
  std::vector<std::pair<Elem, Elem>> free_;
};

inline AlgebraTables lattice_algebra(Lattice const& L, Elem e, Table fusion,
                                     std::optional<std::vector<Elem>> neg,
                                     bool bounded) {
  AlgebraTables t;
  t.size = L.n;
  t.meet = L.meet;
  t.join = L.join;
  t.fusion = std::move(fusion);
  t.e = e;
  t.signature = {neg.has_value(), bounded};
  t.neg = std::move(neg);
  if (bounded) t.bottom = 0;
  t.residual = residual_from_fusion(t);
  return t;
}

/// Relabeled code of (e, fusion, neg) under a lattice automorphism.
inline std::vector<Elem> structure_code(Elem e, Table const& f,
                                        std::optional<std::vector<Elem>> const& neg,
                                        std::vector<Elem> const& s) {
  std::size_t n = s.size();
  std::vector<Elem> code(1 + n * n + (neg ? n : 0));
  code[0] = s[e];
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) code[1 + s[x] * n + s[y]] = s[f[x][y]];
    if (neg) code[1 + n * n + s[x]] = s[(*neg)[x]];
  }
  return code;
}

/// Order-reversing involutions ¬ of L with x→¬y = y→¬x.
inline std::vector<std::vector<Elem>> involutions(Lattice const& L, AlgebraTables const& t) {
  std::size_t n = L.n;
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> neg(n, kUnset);
  std::function<void(Elem)> rec = [&](Elem x) {
    if (x == n) {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (t.residual[a][neg[b]] != t.residual[b][neg[a]]) return;
        }
      }
      out.push_back(neg);
      return;
    }
    if (neg[x] != kUnset) {
      rec(x + 1);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      if (neg[v] != kUnset && !(v == x)) continue;
      neg[x] = v;
      neg[v] = x;
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a) {
        if (neg[a] == kUnset) continue;
        for (Elem b = 0; b < n && ok; ++b) {
          if (neg[b] == kUnset) continue;
          if (L.leq(a, b) != L.leq(neg[b], neg[a])) ok = false;
        }
      }
      if (ok) rec(x + 1);
      neg[v] = kUnset;
      neg[x] = kUnset;
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

/// All algebras of the class with at most `max_size` elements, up to
/// isomorphism, smallest first. Sizes above `bound` raise BoundExceeded.
inline std::vector<Algebra> enumerate_models(ModelClass cls, std::size_t max_size,
                                             std::optional<std::size_t> bound = {}) {
  std::size_t limit = bound.value_or(default_bound(cls));
  if (max_size > limit) {
    throw BoundExceeded("enumeration of " + to_string(cls) + " is capped at size " +
                        std::to_string(limit));
  }
  std::vector<Algebra> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::size_t index = 0;
    auto emit = [&](AlgebraTables t) {
      t.name = to_string(cls) + std::to_string(n) + "#" + std::to_string(index++);
      out.emplace_back(std::move(t));
    };
    for (Lattice const& L : enumerate_lattices(n)) {
      if (cls == ModelClass::brouwerian || cls == ModelClass::heyting) {
        if (!is_distributive(L)) continue;
        emit(detail::lattice_algebra(L, n - 1, L.meet, std::nullopt,
                                     cls == ModelClass::heyting));
        continue;
      }
      std::map<std::vector<Elem>, AlgebraTables> found;
      for (Elem e = 0; e < n; ++e) {
        detail::FusionSearch search(L, e);
        search.run([&](Table const& fusion) {
          AlgebraTables t = detail::lattice_algebra(L, e, fusion, std::nullopt, false);
          std::vector<std::optional<std::vector<Elem>>> negs;
          if (cls == ModelClass::sirl) {
            for (auto& ng : detail::involutions(L, t)) negs.emplace_back(ng);
          } else {
            negs.emplace_back(std::nullopt);
          }
          for (auto const& ng : negs) {
            std::vector<Elem> best;
            for (auto const& s : L.automorphisms) {
              auto code = detail::structure_code(e, fusion, ng, s);
              if (best.empty() || code < best) best = code;
            }
            if (found.count(best)) continue;
            AlgebraTables u = t;
            u.neg = ng;
            u.signature.involution = ng.has_value();
            found.emplace(best, std::move(u));
          }
        });
      }
      for (auto& [code, t] : found) emit(std::move(t));
    }
  }
  return out;
}

}  // namespace srl
