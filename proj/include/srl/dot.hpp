#pragma once

#include <sstream>
#include <string>

#include "srl/algebra.hpp"
#include "srl/duality.hpp"

namespace srl {

namespace detail {

inline std::string dot_escape(std::string const& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <class Label, class Covers>
std::string hasse_dot(std::size_t n, Label label, Covers covers) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (Elem a = 0; a < n; ++a) {
    out << "  n" << a << " [label=\"" << dot_escape(label(a)) << "\"];\n";
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (covers(a, b)) out << "  n" << a << " -> n" << b << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace detail

/// Hasse diagram of a poset in Graphviz syntax, edges pointing upwards.
inline std::string export_dot(PointedPoset const& X) {
  return detail::hasse_dot(
      X.size(), [&](Elem a) { return X.label(a); },
      [&](Elem a, Elem b) { return X.order.covers(a, b); });
}

/// Hasse diagram of the lattice order of an algebra.
inline std::string export_dot(Algebra const& A) {
  Order const& o = A.order();
  return detail::hasse_dot(
      A.size(), [&](Elem a) { return A.label(a); },
      [&](Elem a, Elem b) { return o.covers(a, b); });
}

}  // namespace srl
