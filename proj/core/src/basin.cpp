#include "ncl/basin.hpp"

#include <cmath>

#include "ncl/geometry.hpp"
#include "ncl/parallel.hpp"

namespace ncl {

char verdict_code(Verdict v) {
  switch (v) {
    case Verdict::InWs: return 'S';
    case Verdict::InWA: return 'A';
    case Verdict::ExcludedB: return 'B';
    case Verdict::ExcludedGamma: return 'G';
    case Verdict::Unresolved: return 'U';
    case Verdict::Outside: return '.';
  }
  return '?';
}

namespace {

constexpr std::size_t kBallUnit = 256;  // ball checks per race round

FieldPtr borrow(const SmoothField2& f) {
  return FieldPtr(&f, [](const SmoothField2*) {});
}

bool in_square(const DVec2& p, const EquilibriumSquare& sq, double scale = 1.0) {
  return std::max(std::abs(p[0] - sq.center[0]),
                  std::abs(p[1] - sq.center[1])) <= scale * sq.side / 2;
}

bool in_annulus_tube(const DVec2& p, const CycleAnnulus& ann) {
  const double r = norm(p);
  if (r < ann.ring_lo || r > ann.ring_hi) return false;
  return point_polyline_dist2(p, ann.core, true) <= ann.half_width * ann.half_width;
}

}  // namespace

ClassifyOutcome classify_point(const DVec2& x, const SmoothField2& field,
                               const PhasePortrait& portrait,
                               std::size_t target_sink,
                               const std::vector<CertifiedBall>& balls,
                               double t_budget) {
  ClassifyOutcome out;
  FlowIntegrator fi(borrow(field), x, {});
  std::size_t ball_pos = 0;
  for (double t = 1; t <= t_budget; t += 1) {
    bool ws = false;
    bool wa = false;
    std::size_t wa_region = 0;
    int status = 0;

    // (i) one unit of the ball scan.
    for (std::size_t i = 0; i < kBallUnit && ball_pos < balls.size();
         ++i, ++ball_pos) {
      const CertifiedBall& b = balls[ball_pos];
      if (norm2(x - b.center) < b.radius * b.radius) {
        ws = true;
        status = 1;
        break;
      }
    }

    fi.advance_to(t);  // DomainExit propagates
    const DVec2 y = fi.x();

    // (ii) sink squares: d(phi_t(x), CS_j) < l_j / 2.
    for (std::size_t j = 0; j < portrait.squares.size(); ++j) {
      const EquilibriumSquare& sq = portrait.squares[j];
      if (sq.kind != EquilibriumKind::Sink) continue;
      if (norm2(y - sq.center) < sq.side * sq.side / 4) {
        if (j == target_sink) {
          if (!ws) status = status == 0 ? 1 : status;
          ws = true;
        } else if (!wa) {
          wa = true;
          wa_region = j;
          status = status == 0 ? 2 : status;
        }
      }
    }

    // (iii) attracting annuli: d(., IB) < m/2 and d(., OB) < m.
    for (std::size_t j = 0; j < portrait.annuli.size(); ++j) {
      const CycleAnnulus& ann = portrait.annuli[j];
      if (ann.kind != CycleKind::Attracting) continue;
      const double r = norm(y);
      if (r < ann.ring_lo - ann.margin || r > ann.ring_hi + ann.margin)
        continue;
      const double m2 = ann.margin * ann.margin;
      if (point_polyline_dist2(y, ann.inner_boundary, true) < m2 / 4 &&
          point_polyline_dist2(y, ann.outer_boundary, true) < m2) {
        if (!wa) {
          wa = true;
          wa_region = portrait.squares.size() + j;
          status = status == 0 ? 3 : status;
        }
      }
    }

    if (ws && wa) out.exclusivity_violation = true;
    if (ws || wa) {
      out.verdict = ws ? Verdict::InWs : Verdict::InWA;
      out.region = ws ? target_sink : wa_region;
      out.status = status;
      out.time = t;
      return out;
    }
  }
  out.verdict = Verdict::Unresolved;
  return out;
}

std::vector<CertifiedBall> enumerate_basin(const SmoothField2& field,
                                           const PhasePortrait& portrait,
                                           std::size_t target_sink,
                                           unsigned level,
                                           std::size_t max_points,
                                           double t_budget) {
  std::vector<CertifiedBall> balls;
  if (target_sink >= portrait.squares.size()) return balls;
  const EquilibriumSquare& sq = portrait.squares[target_sink];
  const double L = field.lipschitz_bound();
  const double R = field.domain_radius();
  const long H = static_cast<long>(std::floor(R * (1u << level)));
  const double s = 1.0 / (1u << level);
  for (long iy = -H; iy <= H && balls.size() < max_points; ++iy) {
    for (long ix = -H; ix <= H && balls.size() < max_points; ++ix) {
      const DVec2 a = {ix * s, iy * s};
      if (norm(a) > R) continue;
      FlowIntegrator fi(borrow(field), a, {});
      try {
        for (double t = 1; t <= t_budget; t += 1) {
          fi.advance_to(t);
          const double d = dist(fi.x(), sq.center);
          if (d < sq.side / 4) {
            const double alpha = sq.side / 2 - d;
            const double beta =
                0.9 * alpha * std::exp(-std::min(700.0, L * t));
            if (beta > 1e-12)
              balls.push_back({a, beta, t, target_sink});
            break;
          }
        }
      } catch (const DomainExit&) {
      } catch (const ToleranceUnachievable&) {
      }
    }
  }
  return balls;
}

std::vector<DVec2> grid_dense_sequence(
    const std::vector<std::pair<DVec2, double>>& region_balls, unsigned l,
    double domain_radius) {
  std::vector<DVec2> out;
  const long H = static_cast<long>(std::floor(domain_radius * (1u << l)));
  const double s = 1.0 / (1u << l);
  const std::size_t avail = std::min<std::size_t>(l, region_balls.size());
  for (long iy = -H; iy <= H; ++iy) {
    for (long ix = -H; ix <= H; ++ix) {
      const DVec2 x = {ix * s, iy * s};
      if (norm(x) > domain_radius) continue;
      for (std::size_t i = 0; i < avail; ++i) {
        if (dist(x, region_balls[i].first) < region_balls[i].second) {
          out.push_back(x);
          break;
        }
      }
    }
  }
  return out;
}

BasinGrid compute_basin(const SmoothField2& field, std::size_t sink_index,
                        unsigned k, unsigned level, double t_budget) {
  PhasePortrait portrait;
  try {
    portrait = extract_portrait(field, k);
  } catch (const CycleCertificationFailed& e) {
    throw NotStructurallyStable(std::string("cycle certification failed: ") +
                                e.what());
  }

  BasinGrid grid;
  grid.level = level;
  grid.k = k;
  grid.domain_radius = field.domain_radius();
  grid.half_cells = static_cast<long>(std::floor(grid.domain_radius * (1u << level)));
  grid.target_sink = sink_index;
  grid.claimed_hausdorff = 1.0 / k;

  const auto sinks = portrait.sink_indices();
  if (sink_index == 0 || sink_index > sinks.size()) {
    grid.empty_result = true;
    return grid;
  }
  const std::size_t target = sinks[sink_index - 1];

  const std::vector<CertifiedBall> balls = enumerate_basin(
      field, portrait, target, std::min(level, 6u), 4096, 8);

  const double cell = 1.0 / (1u << level);
  const double gamma_width = std::max(1.5 * cell, 0.5 / k);

  const long H = grid.half_cells;
  const long side = 2 * H + 1;
  grid.cells.assign(static_cast<std::size_t>(side) * side, Verdict::Outside);

  std::vector<std::size_t> violations_per_row(side, 0);
  parallel_for(static_cast<std::size_t>(side), [&](std::size_t row) {
    const long iy = static_cast<long>(row) - H;
    for (long ix = -H; ix <= H; ++ix) {
      const DVec2 p = grid.point_of(ix, iy);
      if (norm(p) > grid.domain_radius) continue;
      Verdict v = Verdict::Unresolved;
      bool excluded = false;
      for (const EquilibriumSquare& sq : portrait.squares) {
        if (sq.kind == EquilibriumKind::Source && in_square(p, sq)) {
          v = Verdict::ExcludedB;
          excluded = true;
          break;
        }
      }
      if (!excluded) {
        for (const CycleAnnulus& ann : portrait.annuli) {
          if (ann.kind == CycleKind::Repelling && in_annulus_tube(p, ann)) {
            v = Verdict::ExcludedB;
            excluded = true;
            break;
          }
        }
      }
      if (!excluded) {
        for (const SaddleArc& arc : portrait.saddle_arcs) {
          if (point_polyline_dist(p, arc.curve, false) <= gamma_width) {
            v = Verdict::ExcludedGamma;
            excluded = true;
            break;
          }
        }
      }
      if (!excluded) {
        try {
          const ClassifyOutcome oc =
              classify_point(p, field, portrait, target, balls, t_budget);
          v = oc.verdict;
          if (oc.exclusivity_violation) ++violations_per_row[row];
        } catch (const DomainExit&) {
          v = Verdict::Unresolved;
        } catch (const ToleranceUnachievable&) {
          v = Verdict::Unresolved;
        }
      }
      grid.cells[grid.index(ix, iy)] = v;
    }
  });

  for (const Verdict v : grid.cells) {
    switch (v) {
      case Verdict::InWs: ++grid.in_ws; ++grid.inside; break;
      case Verdict::InWA: ++grid.in_wa; ++grid.inside; break;
      case Verdict::ExcludedB: ++grid.excluded_b; ++grid.inside; break;
      case Verdict::ExcludedGamma: ++grid.excluded_gamma; ++grid.inside; break;
      case Verdict::Unresolved: ++grid.unresolved; ++grid.inside; break;
      case Verdict::Outside: break;
    }
  }
  for (const std::size_t nv : violations_per_row)
    grid.exclusivity_violations += nv;
  grid.unresolved_fraction =
      grid.inside ? static_cast<double>(grid.unresolved) / grid.inside : 0;
  return grid;
}

}  // namespace ncl
