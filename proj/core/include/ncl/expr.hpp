#pragma once

#include <map>
#include <memory>
#include <string>

#include "ncl/interval.hpp"

namespace ncl {

// Small expression tree over +, -, *, /, exp and named variables, evaluated
// rigorously over intervals. Enough to state the bump-function formulas
// and drive the soundness property tests.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, Exp };

  static ExprPtr constant(Dyadic v);
  static ExprPtr constant(long long v) { return constant(Dyadic(v)); }
  static ExprPtr var(std::string name);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr exp(ExprPtr a);

  Op op() const { return op_; }
  const Dyadic& value() const { return value_; }
  const std::string& name() const { return name_; }
  const ExprPtr& left() const { return a_; }
  const ExprPtr& right() const { return b_; }

 private:
  Op op_ = Op::Const;
  Dyadic value_;
  std::string name_;
  ExprPtr a_, b_;
};

using Env = std::map<std::string, Interval>;

// Sound enclosure of the expression over the environment; throws
// DivisorContainsZero when a divisor enclosure straddles zero and
// OverflowBudgetExceeded when the mantissa budget is exhausted.
Interval iv_eval(const ExprPtr& e, const Env& env, std::size_t prec_bits = 128);

}  // namespace ncl
