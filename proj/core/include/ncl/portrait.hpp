#pragma once

#include <optional>

#include "ncl/integrate.hpp"

namespace ncl {

enum class EquilibriumKind { Sink, Source, Saddle };

struct EquilibriumSquare {
  DVec2 center;
  double side = 0;
  EquilibriumKind kind = EquilibriumKind::Sink;
  IVec2 certified_box;  // Krawczyk box containing the unique equilibrium
};

enum class CycleKind { Attracting, Repelling };

struct CycleAnnulus {
  CycleKind kind = CycleKind::Attracting;
  std::vector<DVec2> inner_boundary;  // closed polygons around the orbit
  std::vector<DVec2> outer_boundary;
  std::vector<DVec2> core;            // numerical cycle polygon
  double half_width = 0;              // tube half-width
  double margin = 0;                  // min distance between boundaries
  double section_s = 0;               // fixed-point parameter on the section
  double return_slope = 0;            // displacement-map slope at the cycle
  bool invariance_certified = false;
  double ring_lo = 0, ring_hi = 0;    // |x| bounds for quick rejection
};

struct SaddleArc {
  DVec2 saddle;
  std::vector<DVec2> curve;   // polyline through the saddle
  double error_bound = 0;     // reported per-vertex bound (approximate)
  bool clipped_at_boundary = false;
};

struct PhasePortrait {
  std::vector<EquilibriumSquare> squares;
  std::vector<CycleAnnulus> annuli;
  std::vector<SaddleArc> saddle_arcs;
  unsigned k = 0;  // resolution parameter: sides and tube radii < 1/k

  std::vector<std::size_t> sink_indices() const;
  std::vector<std::size_t> saddle_indices() const;
};

// Interval-Newton (Krawczyk) equilibrium isolation on the domain disk:
// adaptive subdivision discards boxes with 0 not in F(X) and certifies a
// unique zero in each surviving region; markers come from certified
// trace/determinant signs of the Jacobian. Throws ResolutionExceeded when
// a region can be neither discarded nor certified at the depth budget
// (degenerate equilibria, i.e. a structural-stability violation).
std::vector<EquilibriumSquare> isolate_equilibria(const SmoothField2& field,
                                                  unsigned k,
                                                  std::size_t prec_bits = 64);

// Poincare-section cycle isolation: rays from each non-saddle equilibrium
// carry a return displacement map whose isolated roots are limit cycles;
// bisection brackets them, the return-map slope decides attracting vs
// repelling, and the annulus is a polygonal tube of half-width < 1/k whose
// boundary invariance is certified by interval flux checks. A root cluster
// with an indistinguishable-from-zero displacement plateau signals
// non-hyperbolic cycles and throws CycleCertificationFailed. Certification
// level: practical (numerical trajectories; flux checks rigorous).
std::vector<CycleAnnulus> isolate_periodic_orbits(const SmoothField2& field,
                                                  unsigned k,
                                                  const std::vector<EquilibriumSquare>& equilibria,
                                                  std::size_t prec_bits = 64);

// Stable-manifold arc of a saddle: the local segment through the certified
// saddle along the stable eigendirection, extended by backward integration
// from its endpoints until time T or the domain boundary (the inside-domain
// part is exactly the exclusion set the basin pipeline needs; escaping arcs
// throw ManifoldEscape unless clipping is requested). Approximate
// certification level, with the reported Lipschitz amplification bound.
SaddleArc stable_manifold_arc(const SmoothField2& field,
                              const EquilibriumSquare& saddle, double T,
                              bool clip_at_boundary = false);

// Full portrait at resolution k.
PhasePortrait extract_portrait(const SmoothField2& field, unsigned k,
                               std::size_t prec_bits = 64);

}  // namespace ncl
