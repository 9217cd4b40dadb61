#include "ncl/expr.hpp"

namespace ncl {

namespace {
ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }
}  // namespace

struct ExprBuilder : Expr {};

ExprPtr Expr::constant(Dyadic v) {
  Expr e;
  e.op_ = Op::Const;
  e.value_ = std::move(v);
  return make(std::move(e));
}

ExprPtr Expr::var(std::string name) {
  Expr e;
  e.op_ = Op::Var;
  e.name_ = std::move(name);
  return make(std::move(e));
}

ExprPtr Expr::neg(ExprPtr a) {
  Expr e;
  e.op_ = Op::Neg;
  e.a_ = std::move(a);
  return make(std::move(e));
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  Expr e;
  e.op_ = Op::Add;
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  return make(std::move(e));
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
  Expr e;
  e.op_ = Op::Sub;
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  return make(std::move(e));
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  Expr e;
  e.op_ = Op::Mul;
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  return make(std::move(e));
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
  Expr e;
  e.op_ = Op::Div;
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  return make(std::move(e));
}

ExprPtr Expr::exp(ExprPtr a) {
  Expr e;
  e.op_ = Op::Exp;
  e.a_ = std::move(a);
  return make(std::move(e));
}

Interval iv_eval(const ExprPtr& e, const Env& env, std::size_t prec_bits) {
  switch (e->op()) {
    case Expr::Op::Const:
      return Interval(e->value());
    case Expr::Op::Var: {
      const auto it = env.find(e->name());
      if (it == env.end()) throw Error("iv_eval: unbound variable " + e->name());
      return it->second;
    }
    case Expr::Op::Neg:
      return -iv_eval(e->left(), env, prec_bits);
    case Expr::Op::Add:
      return iv_eval(e->left(), env, prec_bits) +
             iv_eval(e->right(), env, prec_bits);
    case Expr::Op::Sub:
      return iv_eval(e->left(), env, prec_bits) -
             iv_eval(e->right(), env, prec_bits);
    case Expr::Op::Mul:
      return iv_eval(e->left(), env, prec_bits) *
             iv_eval(e->right(), env, prec_bits);
    case Expr::Op::Div:
      return Interval::div(iv_eval(e->left(), env, prec_bits),
                           iv_eval(e->right(), env, prec_bits), prec_bits);
    case Expr::Op::Exp:
      return exp_enclosure(iv_eval(e->left(), env, prec_bits), prec_bits);
  }
  throw Error("iv_eval: bad node");
}

}  // namespace ncl
