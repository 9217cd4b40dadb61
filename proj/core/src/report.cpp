#include "ncl/report.hpp"

#include <charconv>
#include <fstream>

#include "ncl/geometry.hpp"

namespace ncl {

std::string double_str(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

SvgWriter::SvgWriter(double min_x, double min_y, double max_x, double max_y,
                     unsigned px_width)
    : min_x_(min_x), min_y_(min_y), max_x_(max_x), max_y_(max_y),
      px_w_(px_width) {
  px_h_ = static_cast<unsigned>(px_width * (max_y - min_y) / (max_x - min_x));
}

double SvgWriter::tx(double x) const {
  return (x - min_x_) / (max_x_ - min_x_) * px_w_;
}
double SvgWriter::ty(double y) const {
  return (max_y_ - y) / (max_y_ - min_y_) * px_h_;
}
double SvgWriter::ts(double s) const {
  return s / (max_x_ - min_x_) * px_w_;
}

void SvgWriter::rect(double x, double y, double w, double h,
                     const std::string& fill) {
  body_ += "<rect x=\"" + double_str(tx(x)) + "\" y=\"" +
           double_str(ty(y + h)) + "\" width=\"" + double_str(ts(w)) +
           "\" height=\"" + double_str(ts(h)) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2,
                     const std::string& stroke, double width) {
  body_ += "<line x1=\"" + double_str(tx(x1)) + "\" y1=\"" + double_str(ty(y1)) +
           "\" x2=\"" + double_str(tx(x2)) + "\" y2=\"" + double_str(ty(y2)) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" +
           double_str(ts(width)) + "\"/>\n";
}

void SvgWriter::polyline(const std::vector<DVec2>& pts,
                         const std::string& stroke, double width, bool closed) {
  if (pts.empty()) return;
  body_ += closed ? "<polygon points=\"" : "<polyline points=\"";
  for (const DVec2& p : pts) {
    body_ += double_str(tx(p[0])) + "," + double_str(ty(p[1])) + " ";
  }
  body_ += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
           double_str(ts(width)) + "\"/>\n";
}

void SvgWriter::circle(double cx, double cy, double r,
                       const std::string& stroke, double width,
                       const std::string& fill) {
  body_ += "<circle cx=\"" + double_str(tx(cx)) + "\" cy=\"" +
           double_str(ty(cy)) + "\" r=\"" + double_str(ts(r)) + "\" fill=\"" +
           fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
           double_str(ts(width)) + "\"/>\n";
}

void SvgWriter::text(double x, double y, const std::string& s, double size) {
  body_ += "<text x=\"" + double_str(tx(x)) + "\" y=\"" + double_str(ty(y)) +
           "\" font-size=\"" + double_str(ts(size)) + "\" font-family=\"monospace\">" +
           s + "</text>\n";
}

void SvgWriter::save(const std::string& path) const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(px_w_) + "\" height=\"" +
                    std::to_string(px_h_) + "\">\n";
  out += body_;
  out += "</svg>\n";
  write_text_file(path, out);
}

namespace {

const char* verdict_fill(Verdict v) {
  switch (v) {
    case Verdict::InWs: return "#3182ce";
    case Verdict::InWA: return "#e53e3e";
    case Verdict::ExcludedB: return "#805ad5";
    case Verdict::ExcludedGamma: return "#38a169";
    case Verdict::Unresolved: return "#a0aec0";
    case Verdict::Outside: return "none";
  }
  return "none";
}

}  // namespace

nlohmann::json basin_to_json(const BasinGrid& grid) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "basin_grid";
  j["level"] = grid.level;
  j["k"] = grid.k;
  j["domain_radius"] = grid.domain_radius;
  j["half_cells"] = grid.half_cells;
  j["target_sink"] = grid.target_sink;
  j["empty_result"] = grid.empty_result;
  j["claimed_hausdorff"] = grid.claimed_hausdorff;
  j["counts"] = {
      {"inside", grid.inside},       {"in_ws", grid.in_ws},
      {"in_wa", grid.in_wa},         {"excluded_b", grid.excluded_b},
      {"excluded_gamma", grid.excluded_gamma}, {"unresolved", grid.unresolved}};
  j["unresolved_fraction"] = grid.unresolved_fraction;
  j["exclusivity_violations"] = grid.exclusivity_violations;
  // One code string per row, y from -H to H.
  std::vector<std::string> rows;
  const long H = grid.half_cells;
  for (long iy = -H; iy <= H; ++iy) {
    std::string row;
    row.reserve(2 * H + 1);
    for (long ix = -H; ix <= H; ++ix)
      row += verdict_code(grid.cells.empty() ? Verdict::Outside
                                             : grid.cells[grid.index(ix, iy)]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

void write_basin_svg(const BasinGrid& grid, const std::string& path) {
  const double R = grid.domain_radius;
  SvgWriter svg(-R, -R, R, R, 820);
  const double cell = 1.0 / (1u << grid.level);
  const long H = grid.half_cells;
  if (!grid.cells.empty()) {
    for (long iy = -H; iy <= H; ++iy) {
      long ix = -H;
      while (ix <= H) {
        const Verdict v = grid.cells[grid.index(ix, iy)];
        long run = 1;
        while (ix + run <= H && grid.cells[grid.index(ix + run, iy)] == v)
          ++run;
        if (v != Verdict::Outside) {
          const DVec2 p = grid.point_of(ix, iy);
          svg.rect(p[0] - cell / 2, p[1] - cell / 2, run * cell, cell,
                   verdict_fill(v));
        }
        ix += run;
      }
    }
  }
  svg.circle(0, 0, R, "#1a202c", 0.01);
  svg.save(path);
}

void write_basin_csv(const BasinGrid& grid, const std::string& path) {
  std::string out = "iy,ix_start,ix_end,verdict\n";
  const long H = grid.half_cells;
  if (!grid.cells.empty()) {
    for (long iy = -H; iy <= H; ++iy) {
      long ix = -H;
      while (ix <= H) {
        const Verdict v = grid.cells[grid.index(ix, iy)];
        long run = 1;
        while (ix + run <= H && grid.cells[grid.index(ix + run, iy)] == v)
          ++run;
        if (v != Verdict::Outside) {
          out += std::to_string(iy) + "," + std::to_string(ix) + "," +
                 std::to_string(ix + run - 1) + "," + verdict_code(v) + "\n";
        }
        ix += run;
      }
    }
  }
  write_text_file(path, out);
}

void write_trajectory_csv(const Trajectory& tr, const std::string& path) {
  std::string out = "t,x1,x2,sq_radius,error_bound\n";
  for (const TrajectorySample& s : tr.samples) {
    out += double_str(s.t) + "," + double_str(s.x[0]) + "," +
           double_str(s.x[1]) + "," + double_str(norm2(s.x)) + "," +
           double_str(s.error_bound) + "\n";
  }
  write_text_file(path, out);
}

void write_phase_svg(const SmoothField2& field, const PhasePortrait* portrait,
                     const std::vector<Trajectory>& trajectories,
                     const std::string& path) {
  const double R = field.domain_radius() * 1.05;
  SvgWriter svg(-R, -R, R, R, 820);
  svg.circle(0, 0, field.domain_radius(), "#1a202c", 0.01);
  const std::vector<std::string> colors = {"#3182ce", "#e53e3e", "#38a169",
                                           "#d69e2e", "#805ad5", "#319795"};
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    std::vector<DVec2> pts;
    for (const auto& s : trajectories[i].samples) pts.push_back(s.x);
    svg.polyline(pts, colors[i % colors.size()], 0.008);
  }
  if (portrait) {
    for (const auto& sq : portrait->squares) {
      const char* c = sq.kind == EquilibriumKind::Sink
                          ? "#3182ce"
                          : (sq.kind == EquilibriumKind::Source ? "#e53e3e"
                                                                : "#d69e2e");
      svg.rect(sq.center[0] - sq.side / 2, sq.center[1] - sq.side / 2, sq.side,
               sq.side, c);
    }
    for (const auto& ann : portrait->annuli) {
      const char* c =
          ann.kind == CycleKind::Attracting ? "#3182ce" : "#e53e3e";
      svg.polyline(ann.inner_boundary, c, 0.006, true);
      svg.polyline(ann.outer_boundary, c, 0.006, true);
    }
    for (const auto& arc : portrait->saddle_arcs) {
      svg.polyline(arc.curve, "#38a169", 0.008);
    }
  }
  svg.save(path);
}

}  // namespace ncl
