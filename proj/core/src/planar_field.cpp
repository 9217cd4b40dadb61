#include "ncl/planar_field.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "ncl/bump.hpp"
#include "ncl/dovetail.hpp"

namespace ncl {

PolyProfile::PolyProfile(std::vector<double> coeffs) {
  for (double c : coeffs) c_.push_back(Dyadic::from_double(c));
  if (c_.empty()) c_.push_back(Dyadic(0));
  for (const Dyadic& c : c_) cd_.push_back(c.to_double());
}

double PolyProfile::eval_d(double w) const {
  double acc = 0;
  for (std::size_t i = cd_.size(); i-- > 0;) acc = acc * w + cd_[i];
  return acc;
}

double PolyProfile::deriv_d(double w) const {
  double acc = 0;
  for (std::size_t i = cd_.size(); i-- > 1;) acc = acc * w + i * cd_[i];
  return acc;
}

Interval PolyProfile::eval_i(const Interval& w, std::size_t prec) const {
  (void)prec;
  Interval acc(Dyadic(0));
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * w + Interval(c_[i]);
  return acc;
}

Interval PolyProfile::deriv_i(const Interval& w, std::size_t prec) const {
  (void)prec;
  Interval acc(Dyadic(0));
  for (std::size_t i = c_.size(); i-- > 1;)
    acc = acc * w + Interval(c_[i] * Dyadic(static_cast<long long>(i)));
  return acc;
}

double PolyProfile::sup_abs(double wmax) const {
  double acc = 0, p = 1;
  for (const Dyadic& c : c_) {
    acc += std::abs(c.to_double()) * p;
    p *= wmax;
  }
  return acc;
}

double PolyProfile::sup_deriv(double wmax) const {
  double acc = 0, p = 1;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    acc += i * std::abs(c_[i].to_double()) * p;
    p *= wmax;
  }
  return acc;
}

double SeriesProfile::sup_abs(double) const {
  // |f| <= sup E + sum of weights (phi <= 1).
  double s = 1.0;
  for (std::size_t m = 0; m <= p_.level(); ++m) s += std::pow(2.0, -double(m));
  return s;
}

double SeriesProfile::sup_deriv(double) const {
  return p_.lipschitz_bound().to_double();
}

RotationalField::RotationalField(std::shared_ptr<const ScalarProfile> profile,
                                 double radius, std::string label)
    : profile_(std::move(profile)), radius_(radius), label_(std::move(label)) {}

DVec2 RotationalField::eval_d(const DVec2& x) const {
  const double w = x[0] * x[0] + x[1] * x[1];
  const double p = profile_->eval_d(w);
  return {x[0] * p - x[1], x[1] * p + x[0]};
}

DMat2 RotationalField::jac_d(const DVec2& x) const {
  const double w = x[0] * x[0] + x[1] * x[1];
  const double p = profile_->eval_d(w);
  const double dp = profile_->deriv_d(w);
  return {{{p + 2 * x[0] * x[0] * dp, 2 * x[0] * x[1] * dp - 1},
           {2 * x[0] * x[1] * dp + 1, p + 2 * x[1] * x[1] * dp}}};
}

IVec2 RotationalField::eval_i(const IVec2& x, std::size_t prec) const {
  const Interval w = x[0].square() + x[1].square();
  const Interval p = profile_->eval_i(w, prec);
  return {x[0] * p - x[1], x[1] * p + x[0]};
}

IMat2 RotationalField::jac_i(const IVec2& x, std::size_t prec) const {
  const Interval w = x[0].square() + x[1].square();
  const Interval p = profile_->eval_i(w, prec);
  const Interval dp = profile_->deriv_i(w, prec);
  const Interval one(Dyadic(1));
  const Interval two_x0x1 = (x[0] * x[1]).mul_pow2(1);
  return {{{p + x[0].square().mul_pow2(1) * dp, two_x0x1 * dp - one},
           {two_x0x1 * dp + one, p + x[1].square().mul_pow2(1) * dp}}};
}

double RotationalField::lipschitz_bound() const {
  const double R2 = radius_ * radius_;
  // Row sums of the Jacobian: |p| + 2|x1|(|x1|+|x2|)|p'| + 1 with
  // |x1|+|x2| <= sqrt(2) R on the disk; 3 R^2 absorbs the 2 sqrt(2).
  return profile_->sup_abs(R2) + 3.0 * R2 * profile_->sup_deriv(R2) + 1.0;
}

namespace {

std::vector<PolyField2::Monomial> differentiate(
    const std::vector<PolyField2::Monomial>& terms, int axis) {
  std::vector<PolyField2::Monomial> out;
  for (const auto& t : terms) {
    const unsigned e = axis == 0 ? t.i : t.j;
    if (e == 0) continue;
    PolyField2::Monomial d = t;
    d.coeff = t.coeff * Dyadic(static_cast<long long>(e));
    if (axis == 0)
      --d.i;
    else
      --d.j;
    out.push_back(std::move(d));
  }
  return out;
}

double ipow_d(double x, unsigned e) {
  double acc = 1;
  while (e--) acc *= x;
  return acc;
}

double eval_monomials_d(const std::vector<PolyField2::Monomial>& terms,
                        const DVec2& x) {
  double acc = 0;
  for (const auto& t : terms)
    acc += t.coeff_d * ipow_d(x[0], t.i) * ipow_d(x[1], t.j);
  return acc;
}

Interval ipow(const Interval& x, unsigned e) {
  // Even powers via square() to keep enclosures tight around zero.
  Interval acc(Dyadic(1));
  Interval base = x;
  unsigned n = e;
  bool first = true;
  while (n > 0) {
    if (n & 1u) {
      acc = first ? base : acc * base;
      first = false;
    }
    n >>= 1;
    if (n) base = base.square();
  }
  return e == 0 ? Interval(Dyadic(1)) : acc;
}

Interval eval_monomials_i(const std::vector<PolyField2::Monomial>& terms,
                          const IVec2& x) {
  Interval acc(Dyadic(0));
  for (const auto& t : terms)
    acc += Interval(t.coeff) * ipow(x[0], t.i) * ipow(x[1], t.j);
  return acc;
}

double sup_monomials(const std::vector<PolyField2::Monomial>& terms, double R) {
  double acc = 0;
  for (const auto& t : terms)
    acc += std::abs(t.coeff.to_double()) * std::pow(R, t.i + t.j);
  return acc;
}

}  // namespace

PolyField2::PolyField2(std::vector<Monomial> h1, std::vector<Monomial> h2,
                       double radius, std::string label)
    : comp_{std::move(h1), std::move(h2)},
      radius_(radius),
      label_(std::move(label)) {
  for (auto& comp : comp_)
    for (auto& t : comp) t.coeff_d = t.coeff.to_double();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      jac_[i][j] = differentiate(comp_[i], j);
      for (auto& t : jac_[i][j]) t.coeff_d = t.coeff.to_double();
    }
}

DVec2 PolyField2::eval_d(const DVec2& x) const {
  return {eval_monomials_d(comp_[0], x), eval_monomials_d(comp_[1], x)};
}

DMat2 PolyField2::jac_d(const DVec2& x) const {
  return {{{eval_monomials_d(jac_[0][0], x), eval_monomials_d(jac_[0][1], x)},
           {eval_monomials_d(jac_[1][0], x), eval_monomials_d(jac_[1][1], x)}}};
}

IVec2 PolyField2::eval_i(const IVec2& x, std::size_t) const {
  return {eval_monomials_i(comp_[0], x), eval_monomials_i(comp_[1], x)};
}

IMat2 PolyField2::jac_i(const IVec2& x, std::size_t) const {
  return {{{eval_monomials_i(jac_[0][0], x), eval_monomials_i(jac_[0][1], x)},
           {eval_monomials_i(jac_[1][0], x), eval_monomials_i(jac_[1][1], x)}}};
}

double PolyField2::lipschitz_bound() const {
  const double r0 = sup_monomials(jac_[0][0], radius_) +
                    sup_monomials(jac_[0][1], radius_);
  const double r1 = sup_monomials(jac_[1][0], radius_) +
                    sup_monomials(jac_[1][1], radius_);
  return std::max(r0, r1);
}

FieldPtr make_radial_oracle_field(double rho2, double R2, double radius) {
  // p(w) = (w - rho2)(R2 - w) = -w^2 + (rho2 + R2) w - rho2 R2.
  auto profile = std::make_shared<PolyProfile>(
      std::vector<double>{-rho2 * R2, rho2 + R2, -1.0});
  std::ostringstream label;
  label << "radial:rho2=" << rho2 << ",R2=" << R2 << ",radius=" << radius;
  return std::make_shared<RotationalField>(profile, radius, label.str());
}

FieldPtr make_two_well_field(double radius) {
  using M = PolyField2::Monomial;
  std::vector<M> h1 = {{1, 0, Dyadic(1)}, {3, 0, Dyadic(-1)}};
  std::vector<M> h2 = {{0, 1, Dyadic(-1)}};
  std::ostringstream label;
  label << "twowell:radius=" << radius;
  return std::make_shared<PolyField2>(std::move(h1), std::move(h2), radius,
                                      label.str());
}

FieldPtr make_linear_field(double a, double b, double c, double d,
                           double radius) {
  using M = PolyField2::Monomial;
  std::vector<M> h1 = {{1, 0, Dyadic::from_double(a)},
                       {0, 1, Dyadic::from_double(b)}};
  std::vector<M> h2 = {{1, 0, Dyadic::from_double(c)},
                       {0, 1, Dyadic::from_double(d)}};
  std::ostringstream label;
  label << "linear:a=" << a << ",b=" << b << ",c=" << c << ",d=" << d;
  return std::make_shared<PolyField2>(std::move(h1), std::move(h2), radius,
                                      label.str());
}

FieldPtr make_profile_field(RadialProfile profile, double radius) {
  std::ostringstream label;
  label << "profile:level=" << profile.level()
        << ",shift=" << profile.shift().to_double() << ",radius=" << radius;
  auto sp = std::make_shared<SeriesProfile>(std::move(profile));
  return std::make_shared<RotationalField>(sp, radius, label.str());
}

FieldPtr make_radial_poly_field(std::vector<double> coeffs, double radius) {
  std::ostringstream label;
  label << "radialpoly:radius=" << radius;
  auto profile = std::make_shared<PolyProfile>(std::move(coeffs));
  return std::make_shared<RotationalField>(profile, radius, label.str());
}

namespace {

std::map<std::string, double> parse_params(const std::string& s) {
  std::map<std::string, double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw SchemaError("bad field parameter '" + item + "'");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

FieldPtr field_by_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::map<std::string, double> p;
  if (colon != std::string::npos) p = parse_params(spec.substr(colon + 1));
  const auto get = [&](const std::string& k, double dflt) {
    const auto it = p.find(k);
    return it == p.end() ? dflt : it->second;
  };
  if (kind == "radial") {
    return make_radial_oracle_field(get("rho2", 1.0), get("R2", 2.25),
                                    get("radius", 2.0));
  }
  if (kind == "twowell") return make_two_well_field(get("radius", 2.0));
  if (kind == "linear") {
    return make_linear_field(get("a", 1), get("b", 0), get("c", 0),
                             get("d", 1), get("radius", 1.0));
  }
  if (kind == "profile") {
    const auto level = static_cast<std::size_t>(get("level", 2));
    const auto budget = static_cast<std::uint64_t>(get("budget", 200000));
    ToyFamily family;
    RadialProfile prof =
        RadialProfile::build(dovetail_enumerate(family, budget), level);
    const int shift_n = static_cast<int>(get("shift_n", -1));
    if (shift_n >= 0) prof = prof.shifted(static_cast<unsigned>(shift_n));
    return make_profile_field(std::move(prof), get("radius", 3.0));
  }
  if (kind == "radialpoly") {
    std::vector<double> coeffs;
    for (unsigned i = 0;; ++i) {
      const auto it = p.find("c" + std::to_string(i));
      if (it == p.end()) break;
      coeffs.push_back(it->second);
    }
    if (coeffs.empty()) throw SchemaError("radialpoly needs c0,c1,...");
    return make_radial_poly_field(std::move(coeffs), get("radius", 2.0));
  }
  throw SchemaError("unknown field spec '" + spec + "'");
}

InwardReport inward_check(const SmoothField2& field, double sq_radius,
                          std::size_t boxes, std::size_t prec) {
  InwardReport rep;
  rep.sq_radius = sq_radius;
  rep.worst_upper = -std::numeric_limits<double>::infinity();
  const Dyadic W = Dyadic::from_double(sq_radius);
  const Dyadic R = Dyadic::sqrt_dir(W, 60, RoundDir::Up);
  for (std::size_t i = 0; i < boxes; ++i) {
    // Slice x1 in [-R + 2R i/boxes, -R + 2R (i+1)/boxes].
    const Dyadic frac_lo = Dyadic::div_uint_dir(
        R.mul_pow2(1) * Dyadic(static_cast<long long>(i)), boxes, 60,
        RoundDir::Down);
    const Dyadic frac_hi = Dyadic::div_uint_dir(
        R.mul_pow2(1) * Dyadic(static_cast<long long>(i + 1)), boxes, 60,
        RoundDir::Up);
    const Interval X(-R + frac_lo, -R + frac_hi);
    Interval y2 = Interval(W) - X.square();
    if (y2.hi().sign() < 0) continue;
    const Interval Y = sqrt_enclosure(y2, prec);
    for (int sign = 0; sign < 2; ++sign) {
      const IVec2 box = {X, sign == 0 ? Y : -Y};
      const IVec2 F = field.eval_i(box, prec);
      const Interval flux = F[0] * box[0] + F[1] * box[1];
      ++rep.boxes;
      rep.worst_upper = std::max(rep.worst_upper, flux.hi_double());
      if (flux.strictly_negative())
        ++rep.inward;
      else if (flux.strictly_positive())
        ++rep.outward;
      else
        ++rep.undecided;
    }
  }
  return rep;
}

}  // namespace ncl
