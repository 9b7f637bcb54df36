#pragma once

// Brute-force reference implementations. They share no search code with
// the library: everything here walks all subsets, partitions, maps or
// tables and checks the defining conditions directly.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "srl/srl.hpp"

namespace oracle {

using srl::Algebra;
using srl::AlgebraTables;
using srl::Elem;
using srl::Subset;
using srl::Table;

inline bool leq(Algebra const& A, Elem a, Elem b) { return A.meet(a, b) == a; }

/// Block id per element; `related(b, x, y)` for a block assignment.
inline bool compatible(Algebra const& A, std::vector<Elem> const& block) {
  std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (block[a] != block[b]) continue;
      if (A.has_neg() && block[A.neg(a)] != block[A.neg(b)]) return false;
      for (Elem c = 0; c < n; ++c) {
        if (block[A.meet(a, c)] != block[A.meet(b, c)]) return false;
        if (block[A.join(a, c)] != block[A.join(b, c)]) return false;
        if (block[A.fusion(a, c)] != block[A.fusion(b, c)]) return false;
        if (block[A.residual(a, c)] != block[A.residual(b, c)]) return false;
        if (block[A.residual(c, a)] != block[A.residual(c, b)]) return false;
      }
    }
  }
  return true;
}

/// All congruences as block vectors in restricted-growth form.
inline std::vector<std::vector<Elem>> congruences(Algebra const& A) {
  std::size_t n = A.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> rgs(n, 0);
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t i, Elem used) {
    if (i == n) {
      if (compatible(A, rgs)) out.push_back(rgs);
      return;
    }
    for (Elem b = 0; b <= used; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max<Elem>(used, b + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return out;
}

/// x ≤ y in the refinement order.
inline bool refines(std::vector<Elem> const& x, std::vector<Elem> const& y) {
  for (Elem a = 0; a < x.size(); ++a) {
    for (Elem b = 0; b < x.size(); ++b) {
      if (x[a] == x[b] && y[a] != y[b]) return false;
    }
  }
  return true;
}

/// The identity congruence is meet-irreducible in Con A: it is not the
/// meet (intersection) of two congruences strictly above it. Trivial
/// algebras have no proper pair and count as reducible.
inline bool identity_meet_irreducible(Algebra const& A) {
  auto cons = congruences(A);
  std::vector<std::vector<Elem>> above;
  for (auto const& c : cons) {
    bool identity = std::set<Elem>(c.begin(), c.end()).size() == A.size();
    if (!identity) above.push_back(c);
  }
  if (A.size() == 1) return false;
  for (auto const& x : above) {
    for (auto const& y : above) {
      bool meet_is_identity = true;
      for (Elem a = 0; a < A.size() && meet_is_identity; ++a) {
        for (Elem b = a + 1; b < A.size(); ++b) {
          if (x[a] == x[b] && y[a] == y[b]) {
            meet_is_identity = false;
            break;
          }
        }
      }
      if (meet_is_identity) return false;
    }
  }
  return true;
}

inline bool is_deductive_filter(Algebra const& A, Subset s) {
  if (!s.contains(A.e())) return false;
  for (Elem a : s.elements()) {
    for (Elem b = 0; b < A.size(); ++b) {
      if (leq(A, a, b) && !s.contains(b)) return false;
      if (s.contains(b) && !s.contains(A.meet(a, b))) return false;
    }
  }
  return true;
}

inline std::vector<Subset> deductive_filters(Algebra const& A) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << A.size()); ++m) {
    if (oracle::is_deductive_filter(A, Subset(m))) out.push_back(Subset(m));
  }
  return out;
}

/// Intersection of all deductive filters containing x.
inline Subset generated_filter(Algebra const& A, Subset x) {
  Subset out = Subset::full(A.size());
  for (Subset f : deductive_filters(A)) {
    if (x.subset_of(f)) out = out & f;
  }
  return out;
}

inline bool closed(Algebra const& A, Subset s) {
  if (!s.contains(A.e())) return false;
  if (A.has_bottom() && !s.contains(A.bottom())) return false;
  for (Elem a : s.elements()) {
    if (A.has_neg() && !s.contains(A.neg(a))) return false;
    for (Elem b : s.elements()) {
      for (Elem r : {A.meet(a, b), A.join(a, b), A.fusion(a, b), A.residual(a, b)}) {
        if (!s.contains(r)) return false;
      }
    }
  }
  return true;
}

inline std::vector<Subset> subuniverses(Algebra const& A) {
  std::vector<Subset> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << A.size()); ++m) {
    if (closed(A, Subset(m))) out.push_back(Subset(m));
  }
  return out;
}

inline bool preserves(Algebra const& A, Algebra const& B, std::vector<Elem> const& f) {
  if (f[A.e()] != B.e()) return false;
  if (A.has_bottom() && f[A.bottom()] != B.bottom()) return false;
  for (Elem a = 0; a < A.size(); ++a) {
    if (A.has_neg() && f[A.neg(a)] != B.neg(f[a])) return false;
    for (Elem b = 0; b < A.size(); ++b) {
      if (f[A.meet(a, b)] != B.meet(f[a], f[b])) return false;
      if (f[A.join(a, b)] != B.join(f[a], f[b])) return false;
      if (f[A.fusion(a, b)] != B.fusion(f[a], f[b])) return false;
      if (f[A.residual(a, b)] != B.residual(f[a], f[b])) return false;
    }
  }
  return true;
}

/// All homomorphisms by walking every map, in lexicographic order.
inline std::vector<std::vector<Elem>> homomorphisms(Algebra const& A, Algebra const& B) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(A.size(), 0);
  while (true) {
    if (preserves(A, B, f)) out.push_back(f);
    std::size_t i = A.size();
    while (i > 0) {
      --i;
      if (++f[i] < B.size()) break;
      f[i] = 0;
      if (i == 0) return out;
    }
  }
}

inline bool isomorphic(Algebra const& A, Algebra const& B) {
  if (A.size() != B.size() || A.signature() != B.signature()) return false;
  std::vector<Elem> p(A.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (preserves(A, B, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Canonical code of an algebra: least table encoding over all relabelings.
inline std::vector<Elem> canonical_code(Algebra const& A) {
  std::size_t n = A.size();
  std::vector<Elem> p(n), best;
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<Elem> code(3 * n * n + n + 1);
    code[0] = p[A.e()];
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        code[1 + p[a] * n + p[b]] = p[A.meet(a, b)];
        code[1 + n * n + p[a] * n + p[b]] = p[A.fusion(a, b)];
      }
      if (A.has_neg()) code[1 + 2 * n * n + p[a]] = p[A.neg(a)];
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Number of isomorphism types of a model class with exactly n ≤ 4
/// elements: all lattice orders on labeled carriers, every unit, every
/// commutative fusion table with e as identity, and for involutive classes
/// every map as ¬; then the full axiom check and canonical codes.
inline std::size_t count_models(srl::ModelClass cls, std::size_t n) {
  bool brouwerian = cls == srl::ModelClass::brouwerian || cls == srl::ModelClass::heyting;
  bool bounded = cls == srl::ModelClass::heyting;
  bool involutive = cls == srl::ModelClass::sirl;
  std::set<std::vector<Elem>> codes;
  std::size_t pairs = n * n;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << pairs); ++rel) {
    auto le = [&](Elem a, Elem b) { return (rel >> (a * n + b)) & 1; };
    bool order = true;
    for (Elem a = 0; a < n && order; ++a) {
      order = le(a, a);
      for (Elem b = 0; b < n && order; ++b) {
        if (a != b && le(a, b) && le(b, a)) order = false;
        for (Elem c = 0; c < n && order; ++c) {
          if (le(a, b) && le(b, c) && !le(a, c)) order = false;
        }
      }
    }
    if (!order) continue;
    AlgebraTables base;
    base.size = n;
    base.meet.assign(n, std::vector<Elem>(n));
    base.join = base.meet;
    bool lattice = true;
    for (Elem a = 0; a < n && lattice; ++a) {
      for (Elem b = 0; b < n && lattice; ++b) {
        std::optional<Elem> lo, hi;
        for (Elem c = 0; c < n; ++c) {
          bool is_lb = le(c, a) && le(c, b), is_ub = le(a, c) && le(b, c);
          bool greatest = is_lb, least = is_ub;
          for (Elem d = 0; d < n; ++d) {
            if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
            if (le(a, d) && le(b, d) && !le(c, d)) least = false;
          }
          if (greatest) lo = c;
          if (least) hi = c;
        }
        if (!lo || !hi) lattice = false;
        else {
          base.meet[a][b] = *lo;
          base.join[a][b] = *hi;
        }
      }
    }
    if (!lattice) continue;
    Elem bottom = 0;
    for (Elem a = 0; a < n; ++a) {
      bool least = true;
      for (Elem b = 0; b < n; ++b) least = least && le(a, b);
      if (least) bottom = a;
    }
    for (Elem e = 0; e < n; ++e) {
      std::vector<std::pair<Elem, Elem>> free;
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = a; b < n; ++b) {
          if (a != e && b != e) free.emplace_back(a, b);
        }
      }
      std::vector<Elem> vals(free.size(), 0);
      while (true) {
        AlgebraTables t = base;
        t.e = e;
        t.fusion.assign(n, std::vector<Elem>(n));
        for (Elem a = 0; a < n; ++a) t.fusion[e][a] = t.fusion[a][e] = a;
        for (std::size_t i = 0; i < free.size(); ++i) {
          auto [a, b] = free[i];
          t.fusion[a][b] = t.fusion[b][a] = vals[i];
        }
        t.signature = {false, bounded};
        if (bounded) t.bottom = bottom;
        std::optional<Algebra> A;
        try {
          A.emplace(t);
        } catch (srl::Error const&) {
        }
        if (A && srl::validate(*A).ok() &&
            (!brouwerian || srl::classify(*A).brouwerian)) {
          if (!involutive) {
            codes.insert(canonical_code(*A));
          } else {
            std::vector<Elem> neg(n, 0);
            while (true) {
              AlgebraTables u = A->tables();
              u.signature.involution = true;
              u.neg = neg;
              Algebra B(u);
              if (srl::validate(B).ok()) codes.insert(canonical_code(B));
              std::size_t i = n;
              bool done = true;
              while (i > 0) {
                --i;
                if (++neg[i] < n) {
                  done = false;
                  break;
                }
                neg[i] = 0;
              }
              if (done) break;
            }
          }
        }
        std::size_t i = free.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++vals[i] < n) {
            done = false;
            break;
          }
          vals[i] = 0;
        }
        if (done) break;
      }
    }
  }
  return codes.size();
}

/// Every fusion table on the crystal's lattice and involution with e the
/// unit, a² = a, b² = b and a·b = f², that makes a valid algebra.
/// Backtracking prunes only on monotonicity.
inline std::vector<Table> crystal_completions() {
  Algebra shape = srl::crystal();
  std::size_t n = 6;
  Elem e = 1, a = 2, b = 3, top = 5;
  Table f(n, std::vector<Elem>(n, n));
  auto set = [&](Elem x, Elem y, Elem v) { f[x][y] = f[y][x] = v; };
  for (Elem x = 0; x < n; ++x) set(e, x, x);
  set(a, a, a);
  set(b, b, b);
  set(a, b, top);
  std::vector<std::pair<Elem, Elem>> free;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      if (f[x][y] == n) free.emplace_back(x, y);
    }
  }
  auto monotone = [&] {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (f[x][y] == n || f[x][z] == n) continue;
          if (leq(shape, y, z) && !leq(shape, f[x][y], f[x][z])) return false;
        }
      }
    }
    return true;
  };
  std::vector<Table> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      AlgebraTables t = shape.tables();
      t.fusion = f;
      t.residual.clear();
      try {
        Algebra A(t);
        if (srl::validate(A).ok()) out.push_back(f);
      } catch (srl::Error const&) {
      }
      return;
    }
    auto [x, y] = free[i];
    for (Elem v = 0; v < n; ++v) {
      set(x, y, v);
      if (monotone()) rec(i + 1);
    }
    set(x, y, n);
  };
  rec(0);
  return out;
}

/// Posets with a greatest element on up to `max_size` points, one per
/// natural labeling (duplicates across labelings are kept). The last point
/// is the top.
inline std::vector<srl::PointedPoset> posets_with_top(std::size_t max_size) {
  std::vector<srl::PointedPoset> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::size_t k = n - 1;  // points below the top
    std::vector<Subset> below(k);
    std::function<void(Elem)> rec = [&](Elem i) {
      if (i == k) {
        out.push_back(srl::make_poset(n, [&](Elem x, Elem y) {
          return x == y || y == n - 1 || (y < k && below[y].contains(x));
        }));
        return;
      }
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << i); ++m) {
        Subset s(m);
        bool down = true;
        for (Elem x : s.elements()) down = down && below[x].subset_of(s);
        if (!down) continue;
        below[i] = s;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace oracle
