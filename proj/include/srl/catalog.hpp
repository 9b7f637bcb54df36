#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srl/algebra.hpp"

namespace srl {

namespace detail {

/// Tables of a lattice given by a `leq` relation on 0..n-1 (assumed to be a
/// lattice order).
template <class Leq>
void lattice_tables(AlgebraTables& t, std::size_t n, Leq leq) {
  t.size = n;
  t.meet.assign(n, std::vector<Elem>(n));
  t.join.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::optional<Elem> lo, hi;
      for (Elem c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b) && (!lo || leq(*lo, c))) lo = c;
        if (leq(a, c) && leq(b, c) && (!hi || leq(c, *hi))) hi = c;
      }
      t.meet[a][b] = *lo;
      t.join[a][b] = *hi;
    }
  }
}

inline Table chain_table(std::size_t n, bool min) {
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) t[a][b] = min ? std::min(a, b) : std::max(a, b);
  }
  return t;
}

inline Algebra brouwerian_chain(std::size_t n, bool bounded) {
  if (n == 0 || n > kMaxSize) throw BadParams("chain length out of range");
  AlgebraTables t;
  t.size = n;
  t.meet = chain_table(n, true);
  t.join = chain_table(n, false);
  t.fusion = t.meet;
  t.e = n - 1;
  t.signature = {false, bounded};
  if (bounded) t.bottom = 0;
  t.name = (bounded ? "heyting_chain(" : "brouwerian_chain(") + std::to_string(n) + ")";
  return Algebra(std::move(t));
}

}  // namespace detail

inline Algebra trivial_algebra() {
  AlgebraTables t;
  t.size = 1;
  t.meet = t.join = t.fusion = t.residual = {{0}};
  t.name = "trivial";
  return Algebra(std::move(t));
}

inline Algebra brouwerian_chain(std::size_t n) { return detail::brouwerian_chain(n, false); }
inline Algebra heyting_chain(std::size_t n) { return detail::brouwerian_chain(n, true); }

/// 0 < p, q < e
inline Algebra brouwerian_diamond() {
  AlgebraTables t;
  detail::lattice_tables(t, 4, [](Elem a, Elem b) {
    return a == b || a == 0 || b == 3;
  });
  t.fusion = t.meet;
  t.e = 3;
  t.labels = {"0", "p", "q", "e"};
  t.name = "brouwerian_diamond";
  return Algebra(std::move(t));
}

/// The chain ¬(f²) < e < f < f² with f·f = f².
inline Algebra c4() {
  AlgebraTables t;
  t.size = 4;
  t.signature = {true, false};
  t.meet = detail::chain_table(4, true);
  t.join = detail::chain_table(4, false);
  t.fusion = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 3}, {0, 3, 3, 3}};
  t.e = 1;
  t.neg = std::vector<Elem>{3, 2, 1, 0};
  t.labels = {"¬f²", "e", "f", "f²"};
  t.name = "c4";
  return Algebra(std::move(t));
}

/// ¬(f²) < e < a, b < f < f² with a² = a = ¬a, b² = b = ¬b, a·b = f².
/// The fusion table is the unique completion of these constraints.
inline Algebra crystal() {
  AlgebraTables t;
  detail::lattice_tables(t, 6, [](Elem x, Elem y) {
    if (x == y || x == 0 || y == 5) return true;
    if (x == 1) return y != 0;
    if (y == 4) return x != 5;
    return false;
  });
  t.signature = {true, false};
  t.fusion = {{0, 0, 0, 0, 0, 0}, {0, 1, 2, 3, 4, 5}, {0, 2, 2, 5, 5, 5},
              {0, 3, 5, 3, 5, 5}, {0, 4, 5, 5, 5, 5}, {0, 5, 5, 5, 5, 5}};
  t.e = 1;
  t.neg = std::vector<Elem>{5, 4, 2, 3, 1, 0};
  t.labels = {"¬f²", "e", "a", "b", "f", "f²"};
  t.name = "crystal";
  return Algebra(std::move(t));
}

/// {-k, ..., k} with e = 0, ¬x = -x, and x·y the one of larger absolute
/// value (the smaller one on ties).
inline Algebra sugihara(std::size_t size) {
  if (size % 2 == 0 || size > kMaxSize) {
    throw BadParams("sugihara needs an odd size up to " + std::to_string(kMaxSize));
  }
  std::size_t n = size;
  long k = static_cast<long>(n / 2);
  auto val = [&](Elem i) { return static_cast<long>(i) - k; };
  auto idx = [&](long v) { return static_cast<Elem>(v + k); };
  AlgebraTables t;
  t.size = n;
  t.signature = {true, false};
  t.meet = detail::chain_table(n, true);
  t.join = detail::chain_table(n, false);
  t.fusion.assign(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      long x = val(i), y = val(j);
      long ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
      t.fusion[i][j] = idx(ax > ay ? x : ay > ax ? y : std::min(x, y));
    }
  }
  t.e = idx(0);
  std::vector<Elem> neg(n);
  for (Elem i = 0; i < n; ++i) neg[i] = idx(-val(i));
  t.neg = std::move(neg);
  for (Elem i = 0; i < n; ++i) t.labels.push_back(std::to_string(val(i)));
  t.name = "sugihara(" + std::to_string(n) + ")";
  return Algebra(std::move(t));
}

struct BuiltinInfo {
  std::string name;
  std::string params;  // empty, or a description of the integer parameter
};

inline std::vector<BuiltinInfo> builtin_names() {
  return {{"trivial", ""},       {"brouwerian_chain", "n >= 1"},
          {"brouwerian_diamond", ""}, {"c4", ""},
          {"crystal", ""},       {"sugihara", "odd n"},
          {"heyting_chain", "n >= 1"}};
}

inline Algebra builtin(std::string const& name, std::vector<std::size_t> const& params = {}) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k) {
      throw BadParams(name + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (name == "trivial") return arity(0), trivial_algebra();
  if (name == "brouwerian_diamond") return arity(0), brouwerian_diamond();
  if (name == "c4") return arity(0), c4();
  if (name == "crystal") return arity(0), crystal();
  if (name == "brouwerian_chain") return arity(1), brouwerian_chain(params[0]);
  if (name == "heyting_chain") return arity(1), heyting_chain(params[0]);
  if (name == "sugihara") return arity(1), sugihara(params[0]);
  throw UnknownName("no builtin algebra named '" + name + "'");
}

/// Parses "name" or "name(n)".
inline Algebra builtin_from_spec(std::string const& spec) {
  auto open = spec.find('(');
  if (open == std::string::npos) return builtin(spec);
  if (spec.back() != ')') throw BadParams("malformed builtin parameters: " + spec);
  std::string name = spec.substr(0, open);
  std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  std::vector<std::size_t> params;
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    auto comma = inner.find(',', pos);
    std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw BadParams("builtin parameters must be non-negative integers: " + spec);
    }
    params.push_back(std::stoul(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return builtin(name, params);
}

/// Expected properties of a catalog instance.
struct CatalogEntry {
  std::string spec;
  std::size_t depth;
  ClassFlags flags;
  bool negatively_generated;
  bool fsi;
};

inline std::vector<CatalogEntry> catalog_entries() {
  auto flags = [](bool integral, bool sq_inc, bool idem, bool distributive, bool brouwerian,
                  bool dunn, bool de_morgan, bool sugihara_m, bool heyting) {
    return ClassFlags{integral, sq_inc, idem, distributive, brouwerian,
                      dunn, de_morgan, sugihara_m, heyting};
  };
  ClassFlags brouwerian = flags(true, true, true, true, true, true, false, false, false);
  ClassFlags heyting = brouwerian;
  heyting.heyting = true;
  return {
      {"trivial", 0, brouwerian, true, false},
      {"brouwerian_chain(2)", 1, brouwerian, true, true},
      {"brouwerian_chain(4)", 3, brouwerian, true, true},
      {"brouwerian_diamond", 1, brouwerian, true, false},
      {"heyting_chain(3)", 2, heyting, true, true},
      {"c4", 1, flags(false, true, false, true, false, false, true, false, false), true, true},
      {"crystal", 1, flags(false, true, false, true, false, false, true, false, false), false, true},
      {"sugihara(3)", 1, flags(false, true, true, true, false, false, true, true, false), true, true},
      {"sugihara(5)", 2, flags(false, true, true, true, false, false, true, true, false), true, true},
  };
}

}  // namespace srl
