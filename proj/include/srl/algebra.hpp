#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srl/errors.hpp"
#include "srl/subset.hpp"

namespace srl {

/// Which optional operations an algebra carries besides the SRL operations
/// (meet, join, fusion, residual, e).
struct Signature {
  bool involution = false;
  bool bottom = false;
  friend bool operator==(Signature, Signature) = default;
};

using Table = std::vector<std::vector<Elem>>;

/// Plain construction data for an `Algebra`. An empty `residual` asks the
/// constructor to derive it from fusion.
struct AlgebraTables {
  std::size_t size = 0;
  Signature signature;
  Table meet;
  Table join;
  Table fusion;
  Table residual;
  Elem e = 0;
  std::optional<std::vector<Elem>> neg;
  std::optional<Elem> bottom;
  std::string name;
  std::vector<std::string> labels;
};

/// A partial order on 0..n-1 stored as one up-set per element.
struct Order {
  std::vector<Subset> up;

  std::size_t size() const { return up.size(); }
  bool leq(Elem a, Elem b) const { return up[a].contains(b); }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  Subset down(Elem a) const {
    Subset d;
    for (Elem x = 0; x < up.size(); ++x) {
      if (up[x].contains(a)) d.insert(x);
    }
    return d;
  }
  /// b covers a.
  bool covers(Elem a, Elem b) const {
    if (!less(a, b)) return false;
    for (Elem z : up[a].elements()) {
      if (z != a && z != b && leq(z, b)) return false;
    }
    return true;
  }
  friend bool operator==(Order const&, Order const&) = default;
};

std::vector<std::vector<Elem>> residual_from_fusion(AlgebraTables const& t);

/// A finite commutative subidempotent residuated lattice, possibly with an
/// involution and/or a bottom constant. Elements are the indices 0..n-1.
///
/// Construction only checks table shapes; axioms are checked by `validate`.
/// The order is read off the meet table. Copies share the immutable tables.
class Algebra {
 public:
  explicit Algebra(AlgebraTables t) {
    auto d = std::make_shared<Data>();
    std::size_t n = t.size;
    if (n == 0) throw MalformedTable("algebra must have at least one element");
    if (n > kMaxSize) {
      throw MalformedTable("algebra exceeds " + std::to_string(kMaxSize) +
                           " elements");
    }
    d->n = n;
    d->signature = t.signature;
    d->name = std::move(t.name);
    d->e = t.e;
    if (t.e >= n) throw MalformedTable("e out of range");
    if (t.signature.involution != t.neg.has_value()) {
      throw MalformedTable("neg table presence does not match signature");
    }
    if (t.signature.bottom != t.bottom.has_value()) {
      throw MalformedTable("bottom presence does not match signature");
    }
    if (t.residual.empty()) t.residual = residual_from_fusion(t);
    d->meet = flatten(t.meet, n, "meet");
    d->join = flatten(t.join, n, "join");
    d->fusion = flatten(t.fusion, n, "fusion");
    d->residual = flatten(t.residual, n, "residual");
    if (t.neg) {
      if (t.neg->size() != n) throw MalformedTable("neg has wrong length");
      for (Elem x : *t.neg) {
        if (x >= n) throw MalformedTable("neg entry out of range");
      }
      d->neg = std::move(*t.neg);
    }
    if (t.bottom) {
      if (*t.bottom >= n) throw MalformedTable("bottom out of range");
      d->bottom = t.bottom;
    }
    if (!t.labels.empty()) {
      if (t.labels.size() != n) throw MalformedTable("labels have wrong length");
      d->labels = std::move(t.labels);
    }
    d->order.up.assign(n, Subset{});
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (d->meet[a * n + b] == a) d->order.up[a].insert(b);
      }
    }
    d_ = std::move(d);
  }

  std::size_t size() const { return d_->n; }
  Signature signature() const { return d_->signature; }
  std::string const& name() const { return d_->name; }

  Elem meet(Elem a, Elem b) const { return d_->meet[a * d_->n + b]; }
  Elem join(Elem a, Elem b) const { return d_->join[a * d_->n + b]; }
  Elem fusion(Elem a, Elem b) const { return d_->fusion[a * d_->n + b]; }
  Elem residual(Elem a, Elem b) const { return d_->residual[a * d_->n + b]; }
  Elem e() const { return d_->e; }

  bool has_neg() const { return d_->signature.involution; }
  Elem neg(Elem a) const { return d_->neg[a]; }
  /// f = ¬e; requires an involution.
  Elem f() const {
    if (!has_neg()) throw WrongSignature("f is defined only with an involution");
    return neg(e());
  }

  bool has_bottom() const { return d_->signature.bottom; }
  Elem bottom() const {
    if (!has_bottom()) throw WrongSignature("no bottom constant");
    return *d_->bottom;
  }
  /// ⊤ = ⊥→⊥ in bounded signatures.
  Elem top() const { return residual(bottom(), bottom()); }

  /// (a→b)∧(b→a)
  Elem biconditional(Elem a, Elem b) const {
    return meet(residual(a, b), residual(b, a));
  }

  Order const& order() const { return d_->order; }
  bool leq(Elem a, Elem b) const { return d_->order.leq(a, b); }
  bool less(Elem a, Elem b) const { return d_->order.less(a, b); }
  Subset up(Elem a) const { return d_->order.up[a]; }
  Subset down(Elem a) const { return d_->order.down(a); }

  /// Greatest and least elements of the lattice reduct (whether or not they
  /// are constants of the signature).
  Elem lattice_top() const {
    Elem t = 0;
    for (Elem x = 1; x < size(); ++x) t = join(t, x);
    return t;
  }
  Elem lattice_bottom() const {
    Elem b = 0;
    for (Elem x = 1; x < size(); ++x) b = meet(b, x);
    return b;
  }

  /// Elements below e.
  Subset negative_part() const { return down(e()); }

  std::string label(Elem a) const {
    if (d_->labels.empty()) return std::to_string(a);
    return d_->labels[a];
  }
  bool has_labels() const { return !d_->labels.empty(); }

  AlgebraTables tables() const {
    AlgebraTables t;
    std::size_t n = d_->n;
    t.size = n;
    t.signature = d_->signature;
    t.meet = unflatten(d_->meet, n);
    t.join = unflatten(d_->join, n);
    t.fusion = unflatten(d_->fusion, n);
    t.residual = unflatten(d_->residual, n);
    t.e = d_->e;
    if (has_neg()) t.neg = d_->neg;
    t.bottom = d_->bottom;
    t.name = d_->name;
    t.labels = d_->labels;
    return t;
  }

  Algebra renamed(std::string name) const {
    AlgebraTables t = tables();
    t.name = std::move(name);
    return Algebra(std::move(t));
  }

  /// Equality of operation tables and constants; names and labels ignored.
  friend bool operator==(Algebra const& a, Algebra const& b) {
    if (a.d_ == b.d_) return true;
    Data const& x = *a.d_;
    Data const& y = *b.d_;
    return x.n == y.n && x.signature == y.signature && x.e == y.e &&
           x.meet == y.meet && x.join == y.join && x.fusion == y.fusion &&
           x.residual == y.residual && x.neg == y.neg && x.bottom == y.bottom;
  }

 private:
  struct Data {
    std::size_t n = 0;
    Signature signature;
    std::vector<Elem> meet, join, fusion, residual, neg;
    Elem e = 0;
    std::optional<Elem> bottom;
    std::string name;
    std::vector<std::string> labels;
    Order order;
  };

  static std::vector<Elem> flatten(Table const& t, std::size_t n,
                                   char const* what) {
    if (t.size() != n) {
      throw MalformedTable(std::string(what) + " table has wrong row count");
    }
    std::vector<Elem> out;
    out.reserve(n * n);
    for (auto const& row : t) {
      if (row.size() != n) {
        throw MalformedTable(std::string(what) + " table has a short row");
      }
      for (Elem x : row) {
        if (x >= n) throw MalformedTable(std::string(what) + " entry out of range");
        out.push_back(x);
      }
    }
    return out;
  }
  static Table unflatten(std::vector<Elem> const& v, std::size_t n) {
    Table t(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[i][j] = v[i * n + j];
    }
    return t;
  }

  std::shared_ptr<const Data> d_;
};

namespace detail {

inline bool table_in_range(Table const& t, std::size_t n) {
  if (t.size() != n) return false;
  for (auto const& row : t) {
    if (row.size() != n) return false;
    for (Elem x : row) {
      if (x >= n) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Derives the residual table as b→c = max{a : a·b ≤ c}, with ≤ read off
/// the meet table. Throws NotResiduated for the first pair (row-major) that
/// has no such maximum.
inline std::vector<std::vector<Elem>> residual_from_fusion(
    AlgebraTables const& t) {
  std::size_t n = t.size;
  if (!detail::table_in_range(t.meet, n) ||
      !detail::table_in_range(t.fusion, n)) {
    throw MalformedTable("meet/fusion tables malformed");
  }
  auto leq = [&](Elem a, Elem b) { return t.meet[a][b] == a; };
  Table r(n, std::vector<Elem>(n));
  for (Elem b = 0; b < n; ++b) {
    for (Elem c = 0; c < n; ++c) {
      std::optional<Elem> best;
      for (Elem a = 0; a < n; ++a) {
        if (!leq(t.fusion[a][b], c)) continue;
        if (!best || leq(*best, a)) {
          best = a;
        }
      }
      if (!best) throw NotResiduated(b, c);
      for (Elem a = 0; a < n; ++a) {
        if (leq(t.fusion[a][b], c) && !leq(a, *best)) throw NotResiduated(b, c);
      }
      r[b][c] = *best;
    }
  }
  return r;
}

/// Checks that the meet table is a semilattice operation and returns the
/// induced order a ≤ b iff a∧b = a.
inline Order derive_order(Algebra const& A) {
  std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a) {
    if (A.meet(a, a) != a) throw MalformedTable("meet is not idempotent");
    for (Elem b = 0; b < n; ++b) {
      if (A.meet(a, b) != A.meet(b, a)) {
        throw MalformedTable("meet is not commutative");
      }
      for (Elem c = 0; c < n; ++c) {
        if (A.meet(A.meet(a, b), c) != A.meet(a, A.meet(b, c))) {
          throw MalformedTable("meet is not associative");
        }
      }
    }
  }
  return A.order();
}

struct Verdict {
  std::string name;
  bool pass = true;
  std::vector<Elem> witness;
};

/// Per-axiom verdicts; a failing verdict carries the first counterexample in
/// row-major scan order.
struct AxiomReport {
  std::vector<Verdict> verdicts;

  bool ok() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](Verdict const& v) { return v.pass; });
  }
  Verdict const* first_failure() const {
    for (auto const& v : verdicts) {
      if (!v.pass) return &v;
    }
    return nullptr;
  }
  Verdict const* find(std::string const& name) const {
    for (auto const& v : verdicts) {
      if (v.name == name) return &v;
    }
    return nullptr;
  }
};

class ValidationError : public Error {
 public:
  explicit ValidationError(AxiomReport r)
      : Error(message(r)), report(std::move(r)) {}
  AxiomReport report;

 private:
  static std::string message(AxiomReport const& r) {
    auto const* f = r.first_failure();
    if (f == nullptr) return "validation failed";
    std::string s = "axiom '" + f->name + "' fails at (";
    for (std::size_t i = 0; i < f->witness.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(f->witness[i]);
    }
    return s + ")";
  }
};

namespace detail {

template <class Pred>
Verdict scan1(std::string name, std::size_t n, Pred p) {
  for (Elem a = 0; a < n; ++a) {
    if (!p(a)) return {std::move(name), false, {a}};
  }
  return {std::move(name), true, {}};
}

template <class Pred>
Verdict scan2(std::string name, std::size_t n, Pred p) {
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!p(a, b)) return {std::move(name), false, {a, b}};
    }
  }
  return {std::move(name), true, {}};
}

template <class Pred>
Verdict scan3(std::string name, std::size_t n, Pred p) {
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (!p(a, b, c)) return {std::move(name), false, {a, b, c}};
      }
    }
  }
  return {std::move(name), true, {}};
}

}  // namespace detail

/// Checks every defining axiom of the algebra's signature.
inline AxiomReport validate(Algebra const& A) {
  using detail::scan1, detail::scan2, detail::scan3;
  std::size_t n = A.size();
  AxiomReport r;
  auto& v = r.verdicts;
  v.push_back(scan1("meet_idempotent", n,
                    [&](Elem a) { return A.meet(a, a) == a; }));
  v.push_back(scan2("meet_commutative", n, [&](Elem a, Elem b) {
    return A.meet(a, b) == A.meet(b, a);
  }));
  v.push_back(scan3("meet_associative", n, [&](Elem a, Elem b, Elem c) {
    return A.meet(A.meet(a, b), c) == A.meet(a, A.meet(b, c));
  }));
  v.push_back(scan1("join_idempotent", n,
                    [&](Elem a) { return A.join(a, a) == a; }));
  v.push_back(scan2("join_commutative", n, [&](Elem a, Elem b) {
    return A.join(a, b) == A.join(b, a);
  }));
  v.push_back(scan3("join_associative", n, [&](Elem a, Elem b, Elem c) {
    return A.join(A.join(a, b), c) == A.join(a, A.join(b, c));
  }));
  v.push_back(scan2("absorption", n, [&](Elem a, Elem b) {
    return A.meet(a, A.join(a, b)) == a && A.join(a, A.meet(a, b)) == a;
  }));
  v.push_back(scan2("fusion_commutative", n, [&](Elem a, Elem b) {
    return A.fusion(a, b) == A.fusion(b, a);
  }));
  v.push_back(scan3("fusion_associative", n, [&](Elem a, Elem b, Elem c) {
    return A.fusion(A.fusion(a, b), c) == A.fusion(a, A.fusion(b, c));
  }));
  v.push_back(scan1("fusion_identity", n, [&](Elem a) {
    return A.fusion(A.e(), a) == a && A.fusion(a, A.e()) == a;
  }));
  v.push_back(scan3("residuation", n, [&](Elem a, Elem b, Elem c) {
    return A.leq(A.fusion(a, b), c) == A.leq(a, A.residual(b, c));
  }));
  v.push_back(scan1("subidempotence", n, [&](Elem a) {
    return !A.leq(a, A.e()) || A.fusion(a, a) == a;
  }));
  if (A.has_neg()) {
    v.push_back(scan1("involution_double_negation", n,
                      [&](Elem a) { return A.neg(A.neg(a)) == a; }));
    v.push_back(scan2("involution_contraposition", n, [&](Elem a, Elem b) {
      return A.residual(a, A.neg(b)) == A.residual(b, A.neg(a));
    }));
  }
  if (A.has_bottom()) {
    v.push_back(scan1("bottom_least", n,
                      [&](Elem a) { return A.leq(A.bottom(), a); }));
  }
  return r;
}

/// Throws ValidationError unless every axiom holds.
inline void require_valid(Algebra const& A) {
  AxiomReport r = validate(A);
  if (!r.ok()) throw ValidationError(std::move(r));
}

/// Exhaustive check of the laws every SRL satisfies as theorems
/// (distributivity of fusion and residual, order/unit laws, fusion = meet on
/// the negative cone). A failure here means a bug, not a bad input.
inline AxiomReport derived_laws(Algebra const& A) {
  using detail::scan1, detail::scan2, detail::scan3;
  require_valid(A);
  std::size_t n = A.size();
  Elem e = A.e();
  AxiomReport r;
  auto& v = r.verdicts;
  v.push_back(scan3("fusion_distributes_over_join", n,
                    [&](Elem x, Elem y, Elem z) {
                      return A.fusion(x, A.join(y, z)) ==
                             A.join(A.fusion(x, y), A.fusion(x, z));
                    }));
  v.push_back(scan3("residual_distributes_over_meet", n,
                    [&](Elem x, Elem y, Elem z) {
                      return A.residual(x, A.meet(y, z)) ==
                             A.meet(A.residual(x, y), A.residual(x, z));
                    }));
  v.push_back(scan3("residual_converts_join", n, [&](Elem x, Elem y, Elem z) {
    return A.residual(A.join(x, y), z) ==
           A.meet(A.residual(x, z), A.residual(y, z));
  }));
  v.push_back(scan2("order_via_residual", n, [&](Elem x, Elem y) {
    return A.leq(x, y) == A.leq(e, A.residual(x, y));
  }));
  v.push_back(scan2("equality_via_biconditional", n, [&](Elem x, Elem y) {
    return (x == y) == A.leq(e, A.biconditional(x, y));
  }));
  v.push_back(scan1("unit_laws", n, [&](Elem x) {
    return A.leq(e, A.residual(x, x)) && A.residual(e, x) == x;
  }));
  v.push_back(scan2("negative_fusion_is_meet", n, [&](Elem x, Elem y) {
    return !(A.leq(x, e) && A.leq(y, e)) || A.meet(x, y) == A.fusion(x, y);
  }));
  return r;
}

inline void check_derived_laws(Algebra const& A) {
  AxiomReport r = derived_laws(A);
  if (auto const* f = r.first_failure()) {
    throw DerivedLawFailure("derived law '" + f->name + "' fails on " +
                            A.name());
  }
}

struct ClassFlags {
  bool integral = false;
  bool square_increasing = false;
  bool idempotent = false;
  bool distributive = false;
  bool brouwerian = false;
  bool dunn_monoid = false;
  bool de_morgan_monoid = false;
  bool sugihara_monoid = false;
  bool heyting = false;
  friend bool operator==(ClassFlags const&, ClassFlags const&) = default;
};

/// Brouwerian means an integral algebra without involution (the Brouwerian
/// reduct of a bounded one counts); Heyting adds a bottom constant.
inline ClassFlags classify(Algebra const& A) {
  std::size_t n = A.size();
  ClassFlags c;
  c.integral = A.lattice_top() == A.e();
  c.square_increasing = true;
  c.idempotent = true;
  for (Elem x = 0; x < n; ++x) {
    Elem sq = A.fusion(x, x);
    if (!A.leq(x, sq)) c.square_increasing = false;
    if (sq != x) c.idempotent = false;
  }
  c.distributive = true;
  for (Elem a = 0; a < n && c.distributive; ++a) {
    for (Elem b = 0; b < n && c.distributive; ++b) {
      for (Elem d = 0; d < n; ++d) {
        if (A.meet(a, A.join(b, d)) != A.join(A.meet(a, b), A.meet(a, d))) {
          c.distributive = false;
          break;
        }
      }
    }
  }
  bool inv = A.has_neg();
  c.brouwerian = c.integral && !inv;
  c.heyting = c.brouwerian && A.has_bottom();
  c.dunn_monoid = c.distributive && c.square_increasing && !inv;
  c.de_morgan_monoid = c.distributive && c.square_increasing && inv;
  c.sugihara_monoid = c.de_morgan_monoid && c.idempotent;
  return c;
}

/// Builds the algebra whose element i stands for `reps[i]` of A, mapping
/// every result of an operation through `index_of`. Used for subalgebras
/// (index_of = position) and quotients (index_of = block id); the caller
/// guarantees that results are representable.
inline Algebra induced_algebra(Algebra const& A, std::vector<Elem> const& reps,
                               std::vector<Elem> const& index_of,
                               std::string name) {
  std::size_t m = reps.size();
  AlgebraTables t;
  t.size = m;
  t.signature = A.signature();
  t.name = std::move(name);
  auto make = [&](auto op) {
    Table tab(m, std::vector<Elem>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        tab[i][j] = index_of[op(reps[i], reps[j])];
      }
    }
    return tab;
  };
  t.meet = make([&](Elem a, Elem b) { return A.meet(a, b); });
  t.join = make([&](Elem a, Elem b) { return A.join(a, b); });
  t.fusion = make([&](Elem a, Elem b) { return A.fusion(a, b); });
  t.residual = make([&](Elem a, Elem b) { return A.residual(a, b); });
  t.e = index_of[A.e()];
  if (A.has_neg()) {
    std::vector<Elem> neg(m);
    for (std::size_t i = 0; i < m; ++i) neg[i] = index_of[A.neg(reps[i])];
    t.neg = std::move(neg);
  }
  if (A.has_bottom()) t.bottom = index_of[A.bottom()];
  if (A.has_labels()) {
    for (Elem r : reps) t.labels.push_back(A.label(r));
  }
  return Algebra(std::move(t));
}

}  // namespace srl
