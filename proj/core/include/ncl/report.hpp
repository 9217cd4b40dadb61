#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncl/basin.hpp"
#include "ncl/integrate.hpp"

namespace ncl {

inline constexpr int kFormatVersion = 1;

// Shortest round-trip decimal form; byte-stable across runs.
std::string double_str(double v);

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::json& j);

// Minimal deterministic SVG surface (world coordinates, y up).
class SvgWriter {
 public:
  SvgWriter(double min_x, double min_y, double max_x, double max_y,
            unsigned px_width = 800);
  void rect(double x, double y, double w, double h, const std::string& fill);
  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke, double width);
  void polyline(const std::vector<DVec2>& pts, const std::string& stroke,
                double width, bool closed = false);
  void circle(double cx, double cy, double r, const std::string& stroke,
              double width, const std::string& fill = "none");
  void text(double x, double y, const std::string& s, double size);
  void save(const std::string& path) const;

 private:
  double tx(double x) const;
  double ty(double y) const;
  double ts(double s) const;
  double min_x_, min_y_, max_x_, max_y_;
  unsigned px_w_, px_h_;
  std::string body_;
};

nlohmann::json basin_to_json(const BasinGrid& grid);
void write_basin_svg(const BasinGrid& grid, const std::string& path);
void write_basin_csv(const BasinGrid& grid, const std::string& path);

// Trajectory CSV: t, x1, x2, sq_radius, error_bound.
void write_trajectory_csv(const Trajectory& tr, const std::string& path);

// Phase portrait sketch: domain circle, portrait objects, trajectories.
void write_phase_svg(const SmoothField2& field, const PhasePortrait* portrait,
                     const std::vector<Trajectory>& trajectories,
                     const std::string& path);

}  // namespace ncl
