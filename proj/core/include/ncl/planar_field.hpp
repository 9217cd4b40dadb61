#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ncl/interval.hpp"
#include "ncl/radial_profile.hpp"

namespace ncl {

using DVec2 = std::array<double, 2>;
using IVec2 = std::array<Interval, 2>;
using DMat2 = std::array<std::array<double, 2>, 2>;
using IMat2 = std::array<std::array<Interval, 2>, 2>;

// C1 planar vector field with both a fast double path and a rigorous
// interval path, plus a certified Lipschitz bound on its domain disk.
class SmoothField2 {
 public:
  virtual ~SmoothField2() = default;
  virtual std::string describe() const = 0;
  virtual double domain_radius() const = 0;
  virtual DVec2 eval_d(const DVec2& x) const = 0;
  virtual DMat2 jac_d(const DVec2& x) const = 0;
  virtual IVec2 eval_i(const IVec2& x, std::size_t prec_bits = 64) const = 0;
  virtual IMat2 jac_i(const IVec2& x, std::size_t prec_bits = 64) const = 0;
  // Certified L with ||F(x)-F(y)|| <= L ||x-y|| on the domain disk.
  virtual double lipschitz_bound() const = 0;
};

using FieldPtr = std::shared_ptr<const SmoothField2>;

// Scalar radial factor p(w) for rotation-symmetric fields.
class ScalarProfile {
 public:
  virtual ~ScalarProfile() = default;
  virtual double eval_d(double w) const = 0;
  virtual double deriv_d(double w) const = 0;
  virtual Interval eval_i(const Interval& w, std::size_t prec_bits) const = 0;
  virtual Interval deriv_i(const Interval& w, std::size_t prec_bits) const = 0;
  // Certified sup |p| and sup |p'| over [0, wmax].
  virtual double sup_abs(double wmax) const = 0;
  virtual double sup_deriv(double wmax) const = 0;
};

// Polynomial in w with dyadic coefficients (doubles convert exactly).
class PolyProfile : public ScalarProfile {
 public:
  explicit PolyProfile(std::vector<double> coeffs);
  double eval_d(double w) const override;
  double deriv_d(double w) const override;
  Interval eval_i(const Interval& w, std::size_t prec_bits) const override;
  Interval deriv_i(const Interval& w, std::size_t prec_bits) const override;
  double sup_abs(double wmax) const override;
  double sup_deriv(double wmax) const override;
  const std::vector<Dyadic>& coefficients() const { return c_; }

 private:
  std::vector<Dyadic> c_;
  std::vector<double> cd_;
};

// The level-M series profile.
class SeriesProfile : public ScalarProfile {
 public:
  explicit SeriesProfile(RadialProfile profile) : p_(std::move(profile)) {}
  const RadialProfile& profile() const { return p_; }
  double eval_d(double w) const override { return p_.eval_d(w); }
  double deriv_d(double w) const override { return p_.deriv_d(w); }
  Interval eval_i(const Interval& w, std::size_t prec) const override {
    return p_.eval(w, prec);
  }
  Interval deriv_i(const Interval& w, std::size_t prec) const override {
    return p_.deriv(w, prec);
  }
  double sup_abs(double) const override;
  double sup_deriv(double) const override;

 private:
  RadialProfile p_;
};

// h1 = x1 p(w) - x2, h2 = x2 p(w) + x1 with w = x1^2 + x2^2 (w is the
// squared radius throughout; the polar form is dw/dt = 2 w p(w),
// dtheta/dt = 1).
class RotationalField : public SmoothField2 {
 public:
  RotationalField(std::shared_ptr<const ScalarProfile> profile, double radius,
                  std::string label);
  const ScalarProfile& profile() const { return *profile_; }
  std::string describe() const override { return label_; }
  double domain_radius() const override { return radius_; }
  DVec2 eval_d(const DVec2& x) const override;
  DMat2 jac_d(const DVec2& x) const override;
  IVec2 eval_i(const IVec2& x, std::size_t prec_bits) const override;
  IMat2 jac_i(const IVec2& x, std::size_t prec_bits) const override;
  double lipschitz_bound() const override;

 private:
  std::shared_ptr<const ScalarProfile> profile_;
  double radius_;
  std::string label_;
};

// Bivariate polynomial field: each component is a list of monomials
// coeff * x1^i * x2^j with dyadic coefficients.
class PolyField2 : public SmoothField2 {
 public:
  struct Monomial {
    unsigned i, j;
    Dyadic coeff;
    double coeff_d = 0;  // cached for the fast path
  };
  PolyField2(std::vector<Monomial> h1, std::vector<Monomial> h2, double radius,
             std::string label);
  std::string describe() const override { return label_; }
  double domain_radius() const override { return radius_; }
  DVec2 eval_d(const DVec2& x) const override;
  DMat2 jac_d(const DVec2& x) const override;
  IVec2 eval_i(const IVec2& x, std::size_t prec_bits) const override;
  IMat2 jac_i(const IVec2& x, std::size_t prec_bits) const override;
  double lipschitz_bound() const override;

 private:
  std::array<std::vector<Monomial>, 2> comp_;
  std::array<std::array<std::vector<Monomial>, 2>, 2> jac_;
  double radius_;
  std::string label_;
};

// Builtin fields.
// "radial" oracle: p(w) = (w - rho2)(R2 - w): sink at the origin with basin
// {w < rho2}, repelling cycle at w = rho2, attracting cycle at w = R2,
// inward on the domain circle.
FieldPtr make_radial_oracle_field(double rho2 = 1.0, double R2 = 2.25,
                                  double radius = 2.0);
// Gradient two-well field (x1 - x1^3, -x2): sinks at (+-1, 0), saddle at 0.
FieldPtr make_two_well_field(double radius = 2.0);
// Linear field (a x1 + b x2, c x1 + d x2).
FieldPtr make_linear_field(double a, double b, double c, double d,
                           double radius = 1.0);
// Theorem-6 profile field on the radius-3 disk.
FieldPtr make_profile_field(RadialProfile profile, double radius = 3.0);
// Rotational field from polynomial radial coefficients.
FieldPtr make_radial_poly_field(std::vector<double> coeffs, double radius);

// Parses CLI field specs: "radial:rho2=1", "twowell", "linear:a=..,b=..",
// "profile:level=3,shift_n=5,budget=200000", "radialpoly:c0=..,c1=..".
FieldPtr field_by_spec(const std::string& spec);

struct InwardReport {
  double sq_radius = 0;
  std::size_t boxes = 0;
  std::size_t inward = 0;        // certified (F . x) < 0
  std::size_t undecided = 0;     // enclosure touches 0
  std::size_t outward = 0;       // certified (F . x) > 0 somewhere
  double worst_upper = 0;        // max over boxes of upper bound of F . x
  bool all_inward() const { return inward == boxes; }
};

// Covers the circle x1^2 + x2^2 = sq_radius with interval boxes and
// checks the outward flux F(x) . x on each (negative iff inward; on the
// circle of squared radius W this equals w f(w) for rotational fields).
InwardReport inward_check(const SmoothField2& field, double sq_radius,
                          std::size_t boxes = 256, std::size_t prec_bits = 64);

}  // namespace ncl
