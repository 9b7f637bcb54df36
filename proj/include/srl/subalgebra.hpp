#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "srl/algebra.hpp"
#include "srl/homomorphism.hpp"

namespace srl {

/// Smallest subuniverse of A containing `gens` (and the constants).
inline Subset closure(Algebra const& A, Subset gens) {
  Subset s = gens;
  s.insert(A.e());
  if (A.has_bottom()) s.insert(A.bottom());
  bool grew = true;
  while (grew) {
    grew = false;
    auto members = s.elements();
    auto add = [&](Elem x) {
      if (!s.contains(x)) {
        s.insert(x);
        grew = true;
      }
    };
    for (Elem a : members) {
      if (A.has_neg()) add(A.neg(a));
      for (Elem b : members) {
        add(A.meet(a, b));
        add(A.join(a, b));
        add(A.fusion(a, b));
        add(A.residual(a, b));
      }
    }
  }
  return s;
}

inline bool is_subuniverse(Algebra const& A, Subset s) {
  if (!s.subset_of(Subset::full(A.size()))) return false;
  return closure(A, s) == s;
}

/// A subalgebra of `parent` together with its carrier in parent indices.
/// Element i of `algebra` is parent element `elements[i]`.
struct Subalgebra {
  Algebra algebra;
  Subset universe;
  std::vector<Elem> elements;

  Homomorphism inclusion(Algebra const& parent) const {
    return {algebra, parent, elements};
  }
  /// Index within `algebra` of a parent element in the universe.
  Elem index_of(Elem parent_elem) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent_elem);
    return static_cast<Elem>(it - elements.begin());
  }
};

inline Subalgebra subalgebra(Algebra const& A, Subset s,
                             std::string name = {}) {
  if (!is_subuniverse(A, s)) {
    throw NotASubalgebra("subset is not closed under the operations");
  }
  std::vector<Elem> elems = s.elements();
  std::vector<Elem> index_of(A.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = i;
  if (name.empty()) name = A.name() + "|sub";
  Algebra B = induced_algebra(A, elems, index_of, std::move(name));
  return {std::move(B), s, std::move(elems)};
}

/// Orders subsets by cardinality, then lexicographically.
inline bool size_lex_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

/// Every subuniverse of A, smallest first. Each subuniverse is reached from
/// the least one by adding elements one at a time, so the breadth-first
/// closure below finds all of them.
inline std::vector<Subset> all_subuniverses(Algebra const& A) {
  std::vector<Subset> found{closure(A, Subset{})};
  std::set<std::uint64_t> seen{found.front().bits()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    Subset s = found[i];
    for (Elem x = 0; x < A.size(); ++x) {
      if (s.contains(x)) continue;
      Subset t = s;
      t.insert(x);
      t = closure(A, t);
      if (seen.insert(t.bits()).second) found.push_back(t);
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  return found;
}

}  // namespace srl
