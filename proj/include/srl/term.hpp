#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srl/algebra.hpp"

namespace srl {

/// Term over variables y0, y1, ..., one designated variable x, the
/// constants e and ⊥, and the connectives ∧ ∨ · → ¬. Subterms are shared.
class Term {
 public:
  enum class Op { var, x, unit, bottom, meet, join, fusion, residual, neg };

  static Term var(std::size_t j) { return Term(make(Op::var, j)); }
  static Term x() { return Term(make(Op::x)); }
  static Term unit() { return Term(make(Op::unit)); }
  static Term bottom() { return Term(make(Op::bottom)); }
  static Term binary(Op op, Term const& l, Term const& r) {
    auto n = make(op);
    n->left = l.node_;
    n->right = r.node_;
    n->size = 1 + l.size() + r.size();
    return Term(std::move(n));
  }
  static Term neg(Term const& t) {
    auto n = make(Op::neg);
    n->left = t.node_;
    n->size = 1 + t.size();
    return Term(std::move(n));
  }

  Op op() const { return node_->op; }
  std::size_t index() const { return node_->index; }
  std::size_t size() const { return node_->size; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  std::string to_string() const {
    switch (op()) {
      case Op::var: return "y" + std::to_string(index());
      case Op::x: return "x";
      case Op::unit: return "e";
      case Op::bottom: return "⊥";
      case Op::neg: return "¬" + left().to_string();
      default: break;
    }
    char const* sym = op() == Op::meet     ? " ∧ "
                      : op() == Op::join   ? " ∨ "
                      : op() == Op::fusion ? " · "
                                           : " → ";
    return "(" + left().to_string() + sym + right().to_string() + ")";
  }

 private:
  struct Node {
    Op op;
    std::size_t index = 0;
    std::size_t size = 1;
    std::shared_ptr<const Node> left, right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::shared_ptr<Node> make(Op op, std::size_t index = 0) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->index = index;
    return n;
  }
  std::shared_ptr<const Node> node_;
};

/// Values for the variables of a term: `y[j]` for y_j and `x` for x.
struct Assignment {
  std::vector<Elem> y;
  std::optional<Elem> x;
};

inline Elem eval_term(Algebra const& A, Term const& t, Assignment const& env) {
  using Op = Term::Op;
  switch (t.op()) {
    case Op::var:
      if (t.index() >= env.y.size()) {
        throw UnboundVariable("y" + std::to_string(t.index()) + " is unbound");
      }
      return env.y[t.index()];
    case Op::x:
      if (!env.x) throw UnboundVariable("x is unbound");
      return *env.x;
    case Op::unit: return A.e();
    case Op::bottom: return A.bottom();
    case Op::neg:
      if (!A.has_neg()) throw WrongSignature("term uses ¬ outside the signature");
      return A.neg(eval_term(A, t.left(), env));
    default: break;
  }
  Elem a = eval_term(A, t.left(), env);
  Elem b = eval_term(A, t.right(), env);
  switch (t.op()) {
    case Op::meet: return A.meet(a, b);
    case Op::join: return A.join(a, b);
    case Op::fusion: return A.fusion(a, b);
    default: return A.residual(a, b);
  }
}

}  // namespace srl
