#include "ncl/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>

#include "ncl/geometry.hpp"

namespace ncl {

std::vector<std::size_t> PhasePortrait::sink_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < squares.size(); ++i)
    if (squares[i].kind == EquilibriumKind::Sink) out.push_back(i);
  return out;
}

std::vector<std::size_t> PhasePortrait::saddle_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < squares.size(); ++i)
    if (squares[i].kind == EquilibriumKind::Saddle) out.push_back(i);
  return out;
}

namespace {

IVec2 box_of(const DVec2& lo, const DVec2& hi) {
  return {Interval(Dyadic::from_double(lo[0]), Dyadic::from_double(hi[0])),
          Interval(Dyadic::from_double(lo[1]), Dyadic::from_double(hi[1]))};
}

double box_width(const IVec2& b) {
  return std::max(b[0].width().to_double(), b[1].width().to_double());
}

DVec2 box_mid(const IVec2& b) {
  return {b[0].mid().to_double(), b[1].mid().to_double()};
}

struct KrawczykResult {
  enum { Contracted, Empty, Undecided } status;
  IVec2 image;
};

// K(X) = m - Y F(m) + (I - Y J(X)) (X - m) with Y the approximate inverse
// of the midpoint Jacobian. K(X) within the interior of X certifies a
// unique zero in X; empty intersection certifies none.
KrawczykResult krawczyk(const SmoothField2& field, const IVec2& X,
                        std::size_t prec) {
  const DVec2 m = box_mid(X);
  const DMat2 Jm = field.jac_d(m);
  const double det = Jm[0][0] * Jm[1][1] - Jm[0][1] * Jm[1][0];
  if (det == 0 || !std::isfinite(det)) return {KrawczykResult::Undecided, X};
  const double Y00 = Jm[1][1] / det, Y01 = -Jm[0][1] / det;
  const double Y10 = -Jm[1][0] / det, Y11 = Jm[0][0] / det;
  const auto D = [](double v) { return Interval(Dyadic::from_double(v)); };
  const IMat2 Y = {{{D(Y00), D(Y01)}, {D(Y10), D(Y11)}}};

  const IVec2 mI = {D(m[0]), D(m[1])};
  const IVec2 Fm = field.eval_i(mI, prec);
  const IMat2 J = field.jac_i(X, prec);
  // I - Y J
  IMat2 E;
  const Interval one(Dyadic(1));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Interval acc = Y[i][0] * J[0][j] + Y[i][1] * J[1][j];
      E[i][j] = (i == j ? one - acc : -acc);
    }
  }
  const IVec2 delta = {X[0] - mI[0], X[1] - mI[1]};
  IVec2 K;
  for (int i = 0; i < 2; ++i) {
    K[i] = mI[i] - (Y[i][0] * Fm[0] + Y[i][1] * Fm[1]) +
           E[i][0] * delta[0] + E[i][1] * delta[1];
  }
  const bool inside = K[0].lo() > X[0].lo() && K[0].hi() < X[0].hi() &&
                      K[1].lo() > X[1].lo() && K[1].hi() < X[1].hi();
  if (inside) return {KrawczykResult::Contracted, K};
  const bool disjoint = !K[0].intersects(X[0]) || !K[1].intersects(X[1]);
  if (disjoint) return {KrawczykResult::Empty, K};
  return {KrawczykResult::Undecided, K};
}

std::optional<EquilibriumKind> classify_jacobian(const SmoothField2& field,
                                                 const IVec2& box,
                                                 std::size_t prec) {
  const IMat2 J = field.jac_i(box, prec);
  const Interval tr = J[0][0] + J[1][1];
  const Interval det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  if (det.strictly_negative()) return EquilibriumKind::Saddle;
  if (det.strictly_positive() && tr.strictly_negative())
    return EquilibriumKind::Sink;
  if (det.strictly_positive() && tr.strictly_positive())
    return EquilibriumKind::Source;
  return std::nullopt;
}

}  // namespace

std::vector<EquilibriumSquare> isolate_equilibria(const SmoothField2& field,
                                                  unsigned k,
                                                  std::size_t prec) {
  const double R = field.domain_radius();
  struct Item {
    IVec2 box;
    int depth;
  };
  std::deque<Item> queue;
  queue.push_back({box_of({-R, -R}, {R, R}), 0});
  std::vector<IVec2> certified;
  const int max_depth = 60;
  const double newton_size = std::min(0.2, 1.0 / (2.0 * k));

  while (!queue.empty()) {
    Item it = queue.front();
    queue.pop_front();
    // Discard boxes fully outside the closed domain disk.
    double min_r2 = 0;
    for (int i = 0; i < 2; ++i) {
      const double lo = it.box[i].lo_double(), hi = it.box[i].hi_double();
      const double nearest = lo > 0 ? lo : (hi < 0 ? hi : 0.0);
      min_r2 += nearest * nearest;
    }
    if (min_r2 > R * R) continue;

    const IVec2 F = field.eval_i(it.box, prec);
    if (!F[0].contains(Dyadic(0)) || !F[1].contains(Dyadic(0))) continue;

    if (box_width(it.box) <= newton_size) {
      // Inflate so a zero sitting exactly on a subdivision line becomes
      // interior; overlapping certificates from neighbors merge below.
      IVec2 big = it.box;
      for (int i = 0; i < 2; ++i) {
        const Dyadic pad = big[i].width().mul_pow2(-2);
        big[i] = Interval(big[i].lo() - pad, big[i].hi() + pad);
      }
      const KrawczykResult kr = krawczyk(field, big, prec);
      if (kr.status == KrawczykResult::Empty) continue;
      if (kr.status == KrawczykResult::Contracted) {
        // Refine: once existence is certified, the zero lies in K(X) & X,
        // so intersecting each iterate keeps a valid enclosure even when a
        // component collapses to a point.
        IVec2 tight = kr.image;
        for (int i = 0; i < 12; ++i) {
          const KrawczykResult again = krawczyk(field, tight, prec);
          IVec2 next;
          bool shrank = false;
          for (int c = 0; c < 2; ++c) {
            const Dyadic lo = max(tight[c].lo(), again.image[c].lo());
            const Dyadic hi = min(tight[c].hi(), again.image[c].hi());
            next[c] = (lo <= hi) ? Interval(lo, hi) : tight[c];
            if (next[c].width() < tight[c].width()) shrank = true;
          }
          tight = next;
          if (!shrank) break;
        }
        certified.push_back(tight);
        continue;
      }
    }
    if (it.depth >= max_depth)
      throw ResolutionExceeded(
          "equilibrium neither certified nor excluded at depth limit near (" +
          std::to_string(box_mid(it.box)[0]) + ", " +
          std::to_string(box_mid(it.box)[1]) + ")");
    // Bisect the longer axis.
    const int axis = it.box[0].width() >= it.box[1].width() ? 0 : 1;
    const Dyadic mid = it.box[axis].mid();
    IVec2 a = it.box, b = it.box;
    a[axis] = Interval(it.box[axis].lo(), mid);
    b[axis] = Interval(mid, it.box[axis].hi());
    queue.push_back({a, it.depth + 1});
    queue.push_back({b, it.depth + 1});
  }

  // Merge duplicate certifications of the same zero from adjacent cells.
  std::vector<IVec2> unique_boxes;
  for (const IVec2& b : certified) {
    bool dup = false;
    for (IVec2& u : unique_boxes) {
      if (dist(box_mid(b), box_mid(u)) < 1e-6) {
        if (box_width(b) < box_width(u)) u = b;
        dup = true;
        break;
      }
    }
    if (!dup) unique_boxes.push_back(b);
  }

  std::vector<EquilibriumSquare> out;
  for (const IVec2& b : unique_boxes) {
    EquilibriumSquare sq;
    sq.certified_box = b;
    sq.center = box_mid(b);
    sq.side = 0.9 / k;
    auto kind = classify_jacobian(field, b, prec);
    if (!kind)
      throw ResolutionExceeded(
          "equilibrium marker undecidable (possibly non-hyperbolic) near (" +
          std::to_string(sq.center[0]) + ", " + std::to_string(sq.center[1]) +
          ")");
    sq.kind = *kind;
    out.push_back(std::move(sq));
  }
  // Keep squares disjoint.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const double gap = std::max(std::abs(out[i].center[0] - out[j].center[0]),
                                  std::abs(out[i].center[1] - out[j].center[1]));
      const double limit = 0.9 * gap;
      if (out[i].side + out[j].side > 2 * limit) {
        out[i].side = std::min(out[i].side, limit);
        out[j].side = std::min(out[j].side, limit);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.center[0] != b.center[0] ? a.center[0] < b.center[0]
                                      : a.center[1] < b.center[1];
  });
  return out;
}

namespace {

struct ReturnHit {
  double s_return;
  double period;
};

// First return to the ray {y = e_y, x > e_x} after a full turn around e,
// found by accumulated-angle tracking and refined by time bisection.
std::optional<ReturnHit> poincare_return(const SmoothField2& field,
                                         const DVec2& e, double s,
                                         double t_max) {
  FlowIntegrator fi(FieldPtr(&field, [](const SmoothField2*) {}),
                    {e[0] + s, e[1]}, {});
  double angle = 0;
  DVec2 prev = fi.x();
  double prev_angle = 0;
  double prev_t = 0;
  FlowIntegrator prev_state = fi;
  const double dt = 0.02;
  while (fi.t() < t_max) {
    prev = fi.x();
    prev_angle = angle;
    prev_t = fi.t();
    prev_state = fi;
    try {
      fi.advance_to(fi.t() + dt);
    } catch (const DomainExit&) {
      return std::nullopt;
    } catch (const ToleranceUnachievable&) {
      return std::nullopt;
    }
    const DVec2 r0 = prev - e;
    const DVec2 r1 = fi.x() - e;
    if (norm(r1) < 1e-9) return std::nullopt;  // fell into the equilibrium
    const double cross = r0[0] * r1[1] - r0[1] * r1[0];
    const double d = dot(r0, r1);
    angle += std::atan2(cross, d);
    if (norm(field.eval_d(fi.x())) < 1e-12) return std::nullopt;  // settled
    if (std::abs(angle) >= 2 * M_PI) {
      // Bisect the crossing time of |angle| = 2pi.
      double lo_t = prev_t, hi_t = fi.t();
      double lo_a = prev_angle;
      FlowIntegrator lo_state = prev_state;
      for (int iter = 0; iter < 60 && hi_t - lo_t > 1e-13; ++iter) {
        const double mid_t = 0.5 * (lo_t + hi_t);
        FlowIntegrator trial = lo_state;
        trial.advance_to(mid_t);
        const DVec2 rm = trial.x() - e;
        const DVec2 rl = lo_state.x() - e;
        const double cr = rl[0] * rm[1] - rl[1] * rm[0];
        const double mid_a = lo_a + std::atan2(cr, dot(rl, rm));
        if (std::abs(mid_a) >= 2 * M_PI) {
          hi_t = mid_t;
        } else {
          lo_t = mid_t;
          lo_a = mid_a;
          lo_state = std::move(trial);
        }
      }
      FlowIntegrator final_state = lo_state;
      final_state.advance_to(hi_t);
      return ReturnHit{final_state.x()[0] - e[0], hi_t};
    }
  }
  return std::nullopt;
}

std::vector<DVec2> trace_cycle(const SmoothField2& field, const DVec2& start,
                               double period) {
  FlowIntegrator fi(FieldPtr(&field, [](const SmoothField2*) {}), start, {});
  std::vector<DVec2> poly;
  const int n = std::max(96, static_cast<int>(period / 0.05));
  for (int i = 0; i < n; ++i) {
    poly.push_back(fi.x());
    fi.advance_to(period * (i + 1.0) / n);
  }
  return poly;
}

// Certifies that the field crosses every polygon edge strictly in the
// direction `orient_sign * (edge normal oriented along the vertex
// normals)`. Sub-boxes scale with box_size so the enclosure widening
// stays below the crossing signal.
bool certify_polygon_flux(const SmoothField2& field,
                          const std::vector<DVec2>& poly,
                          const std::vector<DVec2>& normals, double orient_sign,
                          double box_size, std::size_t prec) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const DVec2& a = poly[i];
    const DVec2& b = poly[(i + 1) % n];
    DVec2 edge_n = {-(b[1] - a[1]), b[0] - a[0]};
    const double en = norm(edge_n);
    if (en == 0) continue;
    edge_n = (1.0 / en) * edge_n;
    const DVec2 avg = 0.5 * (normals[i] + normals[(i + 1) % n]);
    if (dot(edge_n, avg) < 0) edge_n = -1.0 * edge_n;
    const std::size_t sub =
        1 + static_cast<std::size_t>(dist(a, b) / std::max(box_size, 1e-6));
    for (std::size_t j = 0; j < sub; ++j) {
      const double t0 = double(j) / sub, t1 = double(j + 1) / sub;
      const DVec2 p0 = a + t0 * (b - a);
      const DVec2 p1 = a + t1 * (b - a);
      const IVec2 box = box_of({std::min(p0[0], p1[0]), std::min(p0[1], p1[1])},
                               {std::max(p0[0], p1[0]), std::max(p0[1], p1[1])});
      const IVec2 F = field.eval_i(box, prec);
      const Interval flux =
          F[0] * Interval(Dyadic::from_double(orient_sign * edge_n[0])) +
          F[1] * Interval(Dyadic::from_double(orient_sign * edge_n[1]));
      if (!flux.strictly_positive()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<CycleAnnulus> isolate_periodic_orbits(
    const SmoothField2& field, unsigned k,
    const std::vector<EquilibriumSquare>& equilibria, std::size_t prec) {
  const double R = field.domain_radius();
  const double t_max = 80;
  std::vector<CycleAnnulus> out;

  for (const EquilibriumSquare& e : equilibria) {
    if (e.kind == EquilibriumKind::Saddle) continue;
    const double s_max = R - norm(e.center) - 0.02;
    if (s_max <= 0.1) continue;
    const double s_min = std::max(e.side, 0.04);
    const int n_samples = 48;
    std::vector<std::optional<double>> disp(n_samples);
    std::vector<double> ss(n_samples);
    int plateau_run = 0;
    for (int i = 0; i < n_samples; ++i) {
      const double s = s_min + (s_max - s_min) * (i + 0.5) / n_samples;
      ss[i] = s;
      const auto hit = poincare_return(field, e.center, s, t_max);
      if (hit) {
        disp[i] = hit->s_return - s;
        if (std::abs(*disp[i]) < 1e-9) {
          if (++plateau_run >= 2)
            throw CycleCertificationFailed(
                "zero-displacement plateau on the section: cycles are not "
                "isolated/hyperbolic");
        } else {
          plateau_run = 0;
        }
      } else {
        plateau_run = 0;
      }
    }

    for (int i = 0; i + 1 < n_samples; ++i) {
      if (!disp[i] || !disp[i + 1]) continue;
      if (*disp[i] == 0 || (*disp[i] > 0) == (*disp[i + 1] > 0)) continue;
      // Bracketed root: bisection on s.
      double lo = ss[i], hi = ss[i + 1];
      double d_lo = *disp[i];
      for (int iter = 0; iter < 60 && hi - lo > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const auto hm = poincare_return(field, e.center, mid, t_max);
        if (!hm) break;
        const double dm = hm->s_return - mid;
        if ((dm > 0) == (d_lo > 0)) {
          lo = mid;
          d_lo = dm;
        } else {
          hi = mid;
        }
      }
      const double s_star = 0.5 * (lo + hi);
      const auto hit = poincare_return(field, e.center, s_star, t_max);
      if (!hit) continue;

      // Hyperbolicity from the displacement slope.
      const double h_slope = std::max(1e-5, (ss[1] - ss[0]) * 0.05);
      const auto hp = poincare_return(field, e.center, s_star + h_slope, t_max);
      const auto hm2 = poincare_return(field, e.center, s_star - h_slope, t_max);
      if (!hp || !hm2) continue;
      const double slope = ((hp->s_return - (s_star + h_slope)) -
                            (hm2->s_return - (s_star - h_slope))) /
                           (2 * h_slope);
      if (std::abs(slope) < 1e-6)
        throw CycleCertificationFailed(
            "return-map slope indistinguishable from zero: cycle not "
            "hyperbolic");

      CycleAnnulus ann;
      ann.kind = slope < 0 ? CycleKind::Attracting : CycleKind::Repelling;
      ann.section_s = s_star;
      ann.return_slope = slope;
      ann.core = trace_cycle(field, {e.center[0] + s_star, e.center[1]},
                             hit->period);

      // Duplicate cycles found from another equilibrium's section.
      bool dup = false;
      for (const CycleAnnulus& prev : out) {
        if (point_polyline_dist(ann.core.front(), prev.core, true) < 0.5 / k) {
          dup = true;
          break;
        }
      }
      if (dup) continue;

      // Clearance to other portrait objects bounds the tube width.
      double clearance = R - 0;
      for (const auto& q : equilibria)
        clearance = std::min(clearance,
                             point_polyline_dist(q.center, ann.core, true));
      for (const auto& prev : out)
        for (const auto& v : prev.core)
          clearance =
              std::min(clearance, point_polyline_dist(v, ann.core, true));
      double half_width = std::min({0.45 / k, clearance / 3, 0.1});

      // Vertex normals, oriented away from the section equilibrium.
      const std::size_t n = ann.core.size();
      std::vector<DVec2> normals(n);
      for (std::size_t v = 0; v < n; ++v) {
        const DVec2 tang = ann.core[(v + 1) % n] - ann.core[(v + n - 1) % n];
        DVec2 nm = {-tang[1], tang[0]};
        const double nn = norm(nm);
        nm = (nn > 0 ? 1.0 / nn : 0.0) * nm;
        if (dot(nm, ann.core[v] - e.center) < 0) nm = -1.0 * nm;
        normals[v] = nm;
      }

      for (int attempt = 0; attempt < 4; ++attempt) {
        // Asymmetric offsets: the orbit sits at distance ~hw/2 from the
        // inner boundary and ~3hw/2 from the outer one, so a trajectory
        // settled on the cycle satisfies the race test
        // d(., IB) < m/2 and d(., OB) < m with room to spare.
        const double inner_off = 0.5 * half_width;
        const double outer_off = 1.5 * half_width;
        ann.inner_boundary.clear();
        ann.outer_boundary.clear();
        for (std::size_t v = 0; v < n; ++v) {
          ann.inner_boundary.push_back(ann.core[v] - inner_off * normals[v]);
          ann.outer_boundary.push_back(ann.core[v] + outer_off * normals[v]);
        }
        const double sign = ann.kind == CycleKind::Attracting ? 1.0 : -1.0;
        // Attracting: flux enters the tube across both boundaries
        // (outer: inward normal is -n; inner: +n). Repelling: reversed.
        const double box_size = inner_off / 4;
        const bool ok =
            certify_polygon_flux(field, ann.outer_boundary, normals, -sign,
                                 box_size, prec) &&
            certify_polygon_flux(field, ann.inner_boundary, normals, sign,
                                 box_size, prec);
        if (ok) {
          ann.invariance_certified = true;
          ann.half_width = outer_off;
          break;
        }
        half_width *= 0.5;
      }
      if (!ann.invariance_certified)
        throw CycleCertificationFailed(
            "tube invariance could not be certified around the cycle at "
            "section s=" +
            std::to_string(s_star));

      double m = std::numeric_limits<double>::infinity();
      for (const DVec2& v : ann.inner_boundary)
        m = std::min(m, point_polyline_dist(v, ann.outer_boundary, true));
      ann.margin = m;
      ann.ring_lo = std::numeric_limits<double>::infinity();
      ann.ring_hi = 0;
      for (const DVec2& v : ann.core) {
        ann.ring_lo = std::min(ann.ring_lo, norm(v));
        ann.ring_hi = std::max(ann.ring_hi, norm(v));
      }
      ann.ring_lo -= 2 * ann.half_width;
      ann.ring_hi += 2 * ann.half_width;
      out.push_back(std::move(ann));
    }
  }
  return out;
}

SaddleArc stable_manifold_arc(const SmoothField2& field,
                              const EquilibriumSquare& saddle, double T,
                              bool clip_at_boundary) {
  if (saddle.kind != EquilibriumKind::Saddle)
    throw Error("stable_manifold_arc needs a saddle square");
  const DVec2 c = saddle.center;
  const DMat2 J = field.jac_d(c);
  const double tr = J[0][0] + J[1][1];
  const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  const double disc = tr * tr - 4 * det;
  if (disc <= 0 || det >= 0)
    throw Error("saddle eigenstructure not transversal");
  const double lam_s = 0.5 * (tr - std::sqrt(disc));  // negative eigenvalue
  // Stable eigenvector of the 2x2 Jacobian.
  DVec2 v{};
  if (std::abs(J[0][1]) > 1e-14) {
    v = {J[0][1], lam_s - J[0][0]};
  } else if (std::abs(J[1][0]) > 1e-14) {
    v = {lam_s - J[1][1], J[1][0]};
  } else {
    v = std::abs(J[0][0] - lam_s) < std::abs(J[1][1] - lam_s)
            ? DVec2{1, 0}
            : DVec2{0, 1};
  }
  const double nv = norm(v);
  v = (1.0 / nv) * v;

  const double h_loc = std::min(0.02, saddle.side);
  const double R = field.domain_radius();
  SaddleArc arc;
  arc.saddle = c;

  // Reversed-field integration for the two backward extensions.
  class ReversedField : public SmoothField2 {
   public:
    explicit ReversedField(const SmoothField2& f) : f_(f) {}
    std::string describe() const override { return "reversed"; }
    double domain_radius() const override { return f_.domain_radius(); }
    DVec2 eval_d(const DVec2& x) const override {
      const DVec2 v2 = f_.eval_d(x);
      return {-v2[0], -v2[1]};
    }
    DMat2 jac_d(const DVec2& x) const override {
      DMat2 j = f_.jac_d(x);
      for (auto& row : j)
        for (auto& e : row) e = -e;
      return j;
    }
    IVec2 eval_i(const IVec2& x, std::size_t prec) const override {
      const IVec2 v2 = f_.eval_i(x, prec);
      return {-v2[0], -v2[1]};
    }
    IMat2 jac_i(const IVec2& x, std::size_t prec) const override {
      IMat2 j = f_.jac_i(x, prec);
      for (auto& row : j)
        for (auto& e : row) e = -e;
      return j;
    }
    double lipschitz_bound() const override { return f_.lipschitz_bound(); }

   private:
    const SmoothField2& f_;
  };
  const ReversedField rev(field);

  const auto backward = [&](const DVec2& z) {
    std::vector<DVec2> pts;
    FlowIntegrator fi(FieldPtr(&rev, [](const SmoothField2*) {}), z, {});
    const double dt = 0.02;
    while (fi.t() < T) {
      try {
        fi.advance_to(std::min(T, fi.t() + dt));
      } catch (const DomainExit&) {
        arc.clipped_at_boundary = true;
        if (!clip_at_boundary)
          throw ManifoldEscape("stable-manifold arc left the domain at t=-" +
                               std::to_string(fi.t()));
        break;
      }
      pts.push_back(fi.x());
      if (norm(fi.x()) > R) {
        arc.clipped_at_boundary = true;
        if (!clip_at_boundary)
          throw ManifoldEscape("stable-manifold arc left the domain at t=-" +
                               std::to_string(fi.t()));
        break;
      }
    }
    return pts;
  };

  const DVec2 z1 = c + h_loc * v;
  const DVec2 z2 = c - h_loc * v;
  std::vector<DVec2> ext1 = backward(z1);
  std::vector<DVec2> ext2 = backward(z2);
  arc.curve.assign(ext2.rbegin(), ext2.rend());
  arc.curve.push_back(z2);
  arc.curve.push_back(c);
  arc.curve.push_back(z1);
  arc.curve.insert(arc.curve.end(), ext1.begin(), ext1.end());

  const double L = field.lipschitz_bound();
  arc.error_bound =
      std::min(1e30, h_loc * h_loc * std::exp(std::min(700.0, L * T)));
  return arc;
}

PhasePortrait extract_portrait(const SmoothField2& field, unsigned k,
                               std::size_t prec) {
  PhasePortrait p;
  p.k = k;
  p.squares = isolate_equilibria(field, k, prec);
  p.annuli = isolate_periodic_orbits(field, k, p.squares, prec);
  for (std::size_t i : p.saddle_indices()) {
    p.saddle_arcs.push_back(stable_manifold_arc(
        field, p.squares[i], 4.0 * field.domain_radius(), true));
  }
  return p;
}

}  // namespace ncl
