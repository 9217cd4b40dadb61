// noncomp-lab: batch experiment driver for the rigorous-numerics lab.
// Subcommands map one-to-one onto the library harnesses; identical
// arguments and seed produce byte-identical artifacts.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncl/basin.hpp"
#include "ncl/dovetail.hpp"
#include "ncl/embed_harness.hpp"
#include "ncl/geometry.hpp"
#include "ncl/parallel.hpp"
#include "ncl/pr_series.hpp"
#include "ncl/removable.hpp"
#include "ncl/report.hpp"

using nlohmann::json;
using namespace ncl;

namespace {

EnumerationPrefix prefix_from_flags(const std::string& family,
                                    std::uint64_t budget,
                                    const std::string& values_csv) {
  if (!values_csv.empty()) {
    std::vector<std::uint64_t> vals;
    std::stringstream ss(values_csv);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stoull(item));
    return EnumerationPrefix::from_values(std::move(vals), "cli", 0);
  }
  return dovetail_enumerate(*family_by_name(family), budget);
}

Dyadic parse_alpha(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Dyadic::from_double(std::stod(s));
  const long long p = std::stoll(s.substr(0, slash));
  const long long q = std::stoll(s.substr(slash + 1));
  if (q <= 0 || (q & (q - 1)) != 0)
    throw SchemaError("alpha denominator must be a power of two");
  long e = 0;
  long long qq = q;
  while (qq > 1) {
    qq >>= 1;
    --e;
  }
  return Dyadic::from_mantissa_exp(BigInt(p), e);
}

// "0.36" or "0.9invalpha" (multiples of 1/alpha).
Dyadic parse_scale(const std::string& s, const Dyadic& alpha) {
  const std::string suffix = "invalpha";
  if (s.size() > suffix.size() &&
      s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    const double mult = std::stod(s.substr(0, s.size() - suffix.size()));
    const Dyadic inv_alpha =
        Dyadic::div_dir(Dyadic(1), alpha, 64, RoundDir::Down);
    return (Dyadic::from_double(mult) * inv_alpha).round_dir(64, RoundDir::Down);
  }
  return Dyadic::from_double(std::stod(s));
}

MachineSpec machine_from_flag(const std::string& name_or_path) {
  if (name_or_path.find('.') != std::string::npos ||
      name_or_path.find('/') != std::string::npos)
    return MachineSpec::load_file(name_or_path);
  return MachineSpec::by_name(name_or_path);
}

json prefix_to_json(const EnumerationPrefix& p) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "enumeration_prefix";
  j["source"] = p.source();
  j["budget"] = p.budget();
  j["values"] = p.values();
  return j;
}

json derivative_report_to_json(const DerivativeHarnessReport& r) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "derivative_harness";
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["perturb_scale"] = r.perturb_scale;
  j["alpha"] = r.alpha;
  j["checks"] = r.checks;
  j["misclassifications"] = r.misclassifications;
  j["gap_violations"] = r.gap_violations;
  json recs = json::array();
  for (const MuRecord& m : r.records) {
    recs.push_back(json{{"trial", m.trial},
                        {"n", m.n},
                        {"member", m.member},
                        {"k", m.k},
                        {"mu_lo", m.mu_lo},
                        {"mu_hi", m.mu_hi},
                        {"verdict", m.verdict},
                        {"correct", m.correct}});
  }
  j["records"] = std::move(recs);
  return j;
}

std::string derivative_report_to_csv(const DerivativeHarnessReport& r) {
  std::string out = "trial,n,member,k,mu_lo,mu_hi,verdict,correct\n";
  for (const MuRecord& m : r.records) {
    out += std::to_string(m.trial) + "," + std::to_string(m.n) + "," +
           (m.member ? "1" : "0") + "," + std::to_string(m.k) + "," +
           double_str(m.mu_lo) + "," + double_str(m.mu_hi) + "," + m.verdict +
           "," + (m.correct ? "1" : "0") + "\n";
  }
  return out;
}

int cmd_enumerate(const std::string& family, std::uint64_t budget,
                  const std::string& json_path, const std::string& csv_path) {
  const EnumerationPrefix p = dovetail_enumerate(*family_by_name(family), budget);
  const json j = prefix_to_json(p);
  if (!json_path.empty()) write_json_file(json_path, j);
  if (!csv_path.empty()) {
    std::string out = "m,a_m\n";
    for (std::size_t m = 0; m < p.size(); ++m)
      out += std::to_string(m) + "," + std::to_string(p.value(m)) + "\n";
    write_text_file(csv_path, out);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_derivative(const EnumerationPrefix& prefix, const std::string& alpha_s,
                   const std::string& scale_s, std::uint64_t trials,
                   std::uint64_t seed, const std::string& json_path,
                   const std::string& csv_path) {
  const Dyadic alpha = parse_alpha(alpha_s);
  const RobustSeries series = RobustSeries::make(prefix, alpha);
  const Dyadic scale = parse_scale(scale_s, alpha);
  const DerivativeHarnessReport rep =
      robust_derivative_harness(series, trials, scale, seed);
  const json j = derivative_report_to_json(rep);
  if (!json_path.empty()) write_json_file(json_path, j);
  if (!csv_path.empty()) write_text_file(csv_path, derivative_report_to_csv(rep));
  std::cout << j.dump(2) << "\n";
  return rep.all_clean() ? 0 : 3;
}

int cmd_removable(const EnumerationPrefix& prefix, std::uint64_t n_max,
                  const std::string& json_path, const std::string& csv_path) {
  json rows = json::array();
  std::string csv = "x,value_dyadic,value_double,lower_bound_only\n";
  const auto add = [&](const std::string& label, const Interval& v) {
    json r;
    r["x"] = label;
    r["lower"] = v.lo().to_string();
    r["lower_double"] = v.lo().to_double();
    r["lower_bound_only"] = v.unbounded_above();
    rows.push_back(r);
    csv += label + "," + v.lo().to_string() + "," + double_str(v.lo().to_double()) +
           "," + (v.unbounded_above() ? "1" : "0") + "\n";
  };
  add("2", removable_phi_eval(Dyadic(2), prefix));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    // x = 1/n is generally not dyadic; evaluate at the dyadic midpoint of
    // the segment instead, plus the exact endpoint when n is a power of 2.
    if ((n & (n - 1)) == 0) {
      long e = 0;
      std::uint64_t q = n;
      while (q > 1) {
        q >>= 1;
        --e;
      }
      add("1/" + std::to_string(n),
          removable_phi_eval(Dyadic::pow2(e), prefix));
    }
  }
  add("0", removable_phi_eval(Dyadic(0), prefix));
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "removable_table";
  j["prefix_length"] = prefix.size();
  j["rows"] = std::move(rows);
  if (!json_path.empty()) write_json_file(json_path, j);
  if (!csv_path.empty()) write_text_file(csv_path, csv);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_embed(const std::string& machine_s, const std::string& check,
              double delta, double epsilon, double theta, std::uint64_t trials,
              std::size_t jmax, std::size_t horizon, std::uint64_t input_len,
              std::uint64_t maps, std::uint64_t seed,
              const std::string& json_path, const std::string& csv_path) {
  const MachineSpec M = machine_from_flag(machine_s);
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "embedding_harness";
  j["machine"] = M.name();
  j["seed"] = seed;
  std::string csv;
  bool clean = true;

  const auto anchors_for = [&](const MachineSpec& m) {
    std::vector<DyVec3> anchors;
    const ConfigCodec codec(m);
    EncodedConfig e = codec.encode(unary_input(m, input_len));
    for (int i = 0; i < 6; ++i) {
      anchors.push_back(dyvec3_from_encoded(e));
      e = codec.lattice_step(e);
    }
    return anchors;
  };

  if (check == "prop1" || check == "all") {
    const Prop1Report r =
        proposition1_harness(M, delta, epsilon, trials, jmax, seed);
    j["prop1"] = {{"delta", r.delta},       {"epsilon", r.epsilon},
                  {"trials", r.trials},     {"j_max", r.j_max},
                  {"violations", r.violations},
                  {"worst_distance", r.worst_distance}};
    csv += "prop1_trial,machine,worst_distance,violations\n";
    for (const TrackingTrial& t : r.per_trial)
      csv += std::to_string(t.trial) + "," + t.machine + "," +
             double_str(t.worst_distance) + "," + std::to_string(t.violations) +
             "\n";
    clean = clean && r.clean();
  }
  if (check == "contraction" || check == "all") {
    CounterRng rng(seed + 1);
    const Perturbation3D q = Perturbation3D::sample(
        rng, Dyadic::from_double(theta), anchors_for(M), true);
    const PerturbedMap g(ExtendedMap(M), q);
    const ContractionReport r = contraction_check(g, trials, seed);
    j["contraction"] = {{"theta", r.theta},
                        {"lambda", r.lambda},
                        {"samples", r.samples},
                        {"violations", r.violations},
                        {"worst_quotient", r.worst_quotient}};
    clean = clean && r.clean();
  }
  if (check == "halting" || check == "all") {
    json per_map = json::array();
    CounterRng root(seed + 2);
    const HaltStatus hs = halts_within(M, unary_input(M, input_len), 100000);
    for (std::uint64_t i = 0; i < maps; ++i) {
      CounterRng rng = root.fork(i);
      const Perturbation3D q = Perturbation3D::sample(
          rng, Dyadic::from_double(theta), anchors_for(M), true);
      const PerturbedMap g(ExtendedMap(M), q);
      const BasinVsHalting r = basin_vs_halting(
          g, unary_input(M, input_len), horizon, Dyadic::from_double(epsilon));
      per_map.push_back(json{{"map", i},
                             {"attracted", r.attracted},
                             {"step", r.step},
                             {"min_distance", r.min_distance}});
      if (hs.halted != r.attracted) clean = false;
    }
    j["halting"] = {{"machine_halts", hs.halted},
                    {"halt_steps", hs.step},
                    {"input_len", input_len},
                    {"horizon", horizon},
                    {"per_map", std::move(per_map)}};
  }
  if (!json_path.empty()) write_json_file(json_path, j);
  if (!csv_path.empty() && !csv.empty()) write_text_file(csv_path, csv);
  std::cout << j.dump(2) << "\n";
  return clean ? 0 : 3;
}

int cmd_flow(const std::string& family, std::uint64_t budget, std::size_t level,
             int shift_n, unsigned tol_log2, const std::string& starts,
             const std::string& json_path, const std::string& traj_csv,
             const std::string& svg_path) {
  const EnumerationPrefix prefix = prefix_from_flags(family, budget, "");
  RadialProfile prof = RadialProfile::build(prefix, level);
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "flow_report";
  j["level"] = level;
  j["alpha_level"] = prof.alpha().to_string();
  j["alpha_level_double"] = prof.alpha().to_double();
  j["lipschitz"] = prof.lipschitz_bound().to_double();
  j["c1_tail_bound"] = prof.c1_tail_bound().to_double();

  const Dyadic tol = Dyadic::pow2(-static_cast<long>(tol_log2));
  const Interval est = basin_radius_estimate(prof, tol);
  j["basin_sq_radius"] = {{"lo", est.lo().to_string()},
                          {"hi", est.hi().to_string()},
                          {"lo_double", est.lo().to_double()},
                          {"hi_double", est.hi().to_double()}};
  if (shift_n >= 0) {
    const unsigned theta_n = prof.modulus_theta(shift_n);
    const RadialProfile shifted = prof.shifted(shift_n);
    const Interval est2 = basin_radius_estimate(shifted, tol);
    j["shift"] = {{"n", shift_n},
                  {"theta_n", theta_n},
                  {"shift_value", shifted.shift().to_string()},
                  {"basin_sq_radius_lo", est2.lo().to_double()},
                  {"basin_sq_radius_hi", est2.hi().to_double()}};
  }

  const FieldPtr field = make_profile_field(prof, 3.0);
  const InwardReport inward = inward_check(*field, 9.0, 96);
  j["inward_boundary"] = {{"boxes", inward.boxes},
                          {"inward", inward.inward},
                          {"all_inward", inward.all_inward()},
                          {"worst_upper", inward.worst_upper}};

  std::vector<Trajectory> trajs;
  if (!starts.empty()) {
    std::stringstream ss(starts);
    std::string item;
    while (std::getline(ss, item, ';')) {
      const auto comma = item.find(',');
      if (comma == std::string::npos) throw SchemaError("bad start point");
      const DVec2 x0 = {std::stod(item.substr(0, comma)),
                        std::stod(item.substr(comma + 1))};
      trajs.push_back(integrate_flow(field, x0, 40.0, 0.1));
    }
  }
  if (!traj_csv.empty() && !trajs.empty()) write_trajectory_csv(trajs[0], traj_csv);
  if (!svg_path.empty()) write_phase_svg(*field, nullptr, trajs, svg_path);
  if (!json_path.empty()) write_json_file(json_path, j);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& field_spec, std::size_t sink, unsigned k,
                 unsigned level, double t_budget, const std::string& mode,
                 const std::string& json_path, const std::string& svg_path,
                 const std::string& csv_path) {
  const FieldPtr field = field_by_spec(field_spec);
  const BasinGrid grid = compute_basin(*field, sink, k, level, t_budget);
  json j = basin_to_json(grid);
  j["field"] = field->describe();
  j["mode"] = mode;
  if (mode == "certified") {
    // Spot re-verification: one validated-integration step on sampled
    // classified cells; reports the worst gap between the fast and the
    // certified short-horizon position.
    double worst = 0;
    std::size_t checked = 0;
    const long H = grid.half_cells;
    for (long iy = -H; iy <= H && checked < 16; iy += std::max(1L, H / 2)) {
      for (long ix = -H; ix <= H && checked < 16; ix += std::max(1L, H / 2)) {
        if (grid.cells.empty()) break;
        const Verdict v = grid.cells[grid.index(ix, iy)];
        if (v != Verdict::InWs && v != Verdict::InWA) continue;
        const DVec2 p = grid.point_of(ix, iy);
        try {
          const IVec2 enc = validated_flow_enclosure(
              *field,
              {Interval(Dyadic::from_double(p[0])),
               Interval(Dyadic::from_double(p[1]))},
              0.5);
          FlowIntegrator fi(field, p, {});
          fi.advance_to(0.5);
          const double gap = std::max(
              std::max(fi.x()[0] - enc[0].hi_double(),
                       enc[0].lo_double() - fi.x()[0]),
              std::max(fi.x()[1] - enc[1].hi_double(),
                       enc[1].lo_double() - fi.x()[1]));
          worst = std::max(worst, gap);
          ++checked;
        } catch (const Error&) {
        }
      }
    }
    j["certified_spot_checks"] = {{"cells", checked},
                                  {"worst_excess", worst},
                                  {"consistent", worst <= 0}};
  }
  if (!json_path.empty()) write_json_file(json_path, j);
  if (!svg_path.empty()) write_basin_svg(grid, svg_path);
  if (!csv_path.empty()) write_basin_csv(grid, csv_path);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_report(const std::string& in_path, const std::string& svg_path,
               const std::string& csv_path) {
  std::ifstream in(in_path);
  if (!in) throw SchemaError("cannot open report " + in_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("report parse: ") + e.what());
  }
  const std::string kind = j.value("kind", "");
  if (kind == "basin_grid") {
    BasinGrid grid;
    grid.level = j.at("level").get<unsigned>();
    grid.k = j.at("k").get<unsigned>();
    grid.domain_radius = j.at("domain_radius").get<double>();
    grid.half_cells = j.at("half_cells").get<long>();
    const auto rows = j.at("rows").get<std::vector<std::string>>();
    const long H = grid.half_cells;
    grid.cells.assign((2 * H + 1) * (2 * H + 1), Verdict::Outside);
    for (long iy = -H; iy <= H; ++iy) {
      const std::string& row = rows.at(iy + H);
      for (long ix = -H; ix <= H; ++ix) {
        Verdict v = Verdict::Outside;
        switch (row.at(ix + H)) {
          case 'S': v = Verdict::InWs; break;
          case 'A': v = Verdict::InWA; break;
          case 'B': v = Verdict::ExcludedB; break;
          case 'G': v = Verdict::ExcludedGamma; break;
          case 'U': v = Verdict::Unresolved; break;
          default: break;
        }
        grid.cells[grid.index(ix, iy)] = v;
      }
    }
    if (!svg_path.empty()) write_basin_svg(grid, svg_path);
    if (!csv_path.empty()) write_basin_csv(grid, csv_path);
    return 0;
  }
  if (kind == "derivative_harness") {
    if (!csv_path.empty()) {
      std::string out = "trial,n,member,k,mu_lo,mu_hi,verdict,correct\n";
      for (const auto& m : j.at("records")) {
        out += std::to_string(m.at("trial").get<std::uint64_t>()) + "," +
               std::to_string(m.at("n").get<std::uint64_t>()) + "," +
               (m.at("member").get<bool>() ? "1" : "0") + "," +
               std::to_string(m.at("k").get<std::uint64_t>()) + "," +
               double_str(m.at("mu_lo").get<double>()) + "," +
               double_str(m.at("mu_hi").get<double>()) + "," +
               m.at("verdict").get<std::string>() + "," +
               (m.at("correct").get<bool>() ? "1" : "0") + "\n";
      }
      write_text_file(csv_path, out);
    }
    if (!svg_path.empty()) {
      // mu intervals per n: vertical bars with the 1/3 and 5/3 thresholds.
      double max_n = 1, max_mu = 2;
      for (const auto& m : j.at("records")) {
        max_n = std::max(max_n, m.at("n").get<double>());
        max_mu = std::max(max_mu, m.at("mu_hi").get<double>());
      }
      SvgWriter svg(-1, -1, max_n + 1, max_mu + 1, 800);
      svg.line(-1, 1.0 / 3, max_n + 1, 1.0 / 3, "#718096", 0.01 * max_n);
      svg.line(-1, 5.0 / 3, max_n + 1, 5.0 / 3, "#718096", 0.01 * max_n);
      for (const auto& m : j.at("records")) {
        const double n = m.at("n").get<double>();
        const bool member = m.at("member").get<bool>();
        svg.line(n, m.at("mu_lo").get<double>(), n, m.at("mu_hi").get<double>(),
                 member ? "#3182ce" : "#e53e3e", 0.005 * max_n);
      }
      svg.save(svg_path);
    }
    return 0;
  }
  throw SchemaError("no renderer for report kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncomp-lab: constructions, embeddings and basin computation"};
  app.require_subcommand(0, 1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "dump a dovetailed enumeration prefix");
  std::string en_family = "toy";
  std::uint64_t en_budget = 100000;
  std::string en_json, en_csv;
  enumerate->add_option("--family", en_family, "toy|godel");
  enumerate->add_option("--budget", en_budget, "dovetail step budget");
  enumerate->add_option("--json", en_json);
  enumerate->add_option("--csv", en_csv);

  // derivative
  auto* derivative = app.add_subcommand("derivative", "Theorem-1 robustness harness");
  std::string de_family = "godel";
  std::uint64_t de_budget = 200000;
  std::string de_prefix_values, de_alpha = "5/2", de_scale = "0.9invalpha";
  std::uint64_t de_trials = 100, de_seed = 1;
  std::string de_json, de_csv;
  derivative->add_option("--family", de_family);
  derivative->add_option("--prefix-budget", de_budget);
  derivative->add_option("--prefix", de_prefix_values, "explicit a(m) values, comma separated");
  derivative->add_option("--alpha", de_alpha, "rational p/q with q a power of 2");
  derivative->add_option("--scale", de_scale, "C1 budget; suffix 'invalpha' scales by 1/alpha");
  derivative->add_option("--trials", de_trials);
  derivative->add_option("--seed", de_seed);
  derivative->add_option("--json", de_json);
  derivative->add_option("--csv", de_csv);

  // removable
  auto* removable = app.add_subcommand("removable", "piecewise-affine map value table");
  std::string rm_family = "toy";
  std::uint64_t rm_budget = 100000, rm_nmax = 16;
  std::string rm_prefix_values, rm_json, rm_csv;
  removable->add_option("--family", rm_family);
  removable->add_option("--prefix-budget", rm_budget);
  removable->add_option("--prefix", rm_prefix_values);
  removable->add_option("--n-max", rm_nmax);
  removable->add_option("--json", rm_json);
  removable->add_option("--csv", rm_csv);

  // embed
  auto* embed = app.add_subcommand("embed", "machine-in-R^3 harnesses");
  std::string em_machine = "zigzag", em_check = "all";
  double em_delta = 0.1, em_epsilon = 0.2, em_theta = 0.2;
  std::uint64_t em_trials = 100, em_seed = 1, em_input = 3, em_maps = 20;
  std::size_t em_jmax = 50, em_horizon = 200;
  std::string em_json, em_csv;
  embed->add_option("--machine", em_machine, "builtin name or machine JSON path");
  embed->add_option("--check", em_check, "prop1|contraction|halting|all");
  embed->add_option("--delta", em_delta);
  embed->add_option("--epsilon", em_epsilon);
  embed->add_option("--theta", em_theta);
  embed->add_option("--trials", em_trials);
  embed->add_option("--jmax", em_jmax);
  embed->add_option("--horizon", em_horizon);
  embed->add_option("--input-len", em_input);
  embed->add_option("--maps", em_maps);
  embed->add_option("--seed", em_seed);
  embed->add_option("--json", em_json);
  embed->add_option("--csv", em_csv);

  // flow
  auto* flow = app.add_subcommand("flow", "Theorem-6 planar flow sweep");
  std::string fl_family = "toy";
  std::uint64_t fl_budget = 100000;
  std::size_t fl_level = 1;
  int fl_shift_n = 5;
  unsigned fl_tol = 21;
  std::string fl_starts = "0.3,0;1.2,0.5";
  std::string fl_json, fl_csv, fl_svg;
  flow->add_option("--family", fl_family);
  flow->add_option("--budget", fl_budget);
  flow->add_option("--level", fl_level);
  flow->add_option("--shift-n", fl_shift_n, "modulus index; negative disables the shift report");
  flow->add_option("--tol-log2", fl_tol);
  flow->add_option("--starts", fl_starts, "semicolon-separated x,y pairs");
  flow->add_option("--json", fl_json);
  flow->add_option("--traj-csv", fl_csv);
  flow->add_option("--svg", fl_svg);

  // classify
  auto* classify = app.add_subcommand("classify", "Theorem-5 basin pipeline");
  std::string cl_field = "radial:rho2=1";
  std::size_t cl_sink = 1;
  unsigned cl_k = 16, cl_level = 7;
  double cl_budget = 64;
  std::string cl_mode = "fast";
  std::string cl_json, cl_svg, cl_csv;
  classify->add_option("--field", cl_field);
  classify->add_option("--sink", cl_sink, "1-based sink index");
  classify->add_option("--k", cl_k);
  classify->add_option("--l", cl_level);
  classify->add_option("--t-budget", cl_budget);
  classify->add_option("--mode", cl_mode, "fast|certified");
  classify->add_option("--json", cl_json);
  classify->add_option("--svg", cl_svg);
  classify->add_option("--csv", cl_csv);

  // report
  auto* report = app.add_subcommand("report", "re-render a JSON report");
  std::string rp_in, rp_svg, rp_csv;
  report->add_option("--in", rp_in)->required();
  report->add_option("--svg", rp_svg);
  report->add_option("--csv", rp_csv);

  // run
  auto* run = app.add_subcommand("run", "run an experiment spec file");
  std::string run_spec;
  run->add_option("--spec", run_spec)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(en_family, en_budget, en_json, en_csv);
    if (app.got_subcommand(derivative))
      return cmd_derivative(
          prefix_from_flags(de_family, de_budget, de_prefix_values), de_alpha,
          de_scale, de_trials, de_seed, de_json, de_csv);
    if (app.got_subcommand(removable))
      return cmd_removable(
          prefix_from_flags(rm_family, rm_budget, rm_prefix_values), rm_nmax,
          rm_json, rm_csv);
    if (app.got_subcommand(embed))
      return cmd_embed(em_machine, em_check, em_delta, em_epsilon, em_theta,
                       em_trials, em_jmax, em_horizon, em_input, em_maps,
                       em_seed, em_json, em_csv);
    if (app.got_subcommand(flow))
      return cmd_flow(fl_family, fl_budget, fl_level, fl_shift_n, fl_tol,
                      fl_starts, fl_json, fl_csv, fl_svg);
    if (app.got_subcommand(classify))
      return cmd_classify(cl_field, cl_sink, cl_k, cl_level, cl_budget, cl_mode,
                          cl_json, cl_svg, cl_csv);
    if (app.got_subcommand(report)) return cmd_report(rp_in, rp_svg, rp_csv);
    if (app.got_subcommand(run)) {
      std::ifstream in(run_spec);
      if (!in) throw SchemaError("cannot open spec " + run_spec);
      json spec;
      try {
        in >> spec;
      } catch (const json::exception& e) {
        throw SchemaError(std::string("spec parse: ") + e.what());
      }
      if (!spec.is_object() || !spec.contains("command"))
        throw SchemaError("spec must be an object with a 'command' field");
      if (spec.value("format_version", 0) != kFormatVersion)
        throw SchemaError("unsupported or missing format_version");
      const std::string cmd = spec.at("command").get<std::string>();
      const json p = spec.value("params", json::object());
      const auto gs = [&](const char* k, const std::string& d) {
        return p.value(k, d);
      };
      if (cmd == "enumerate")
        return cmd_enumerate(gs("family", "toy"), p.value("budget", 100000ull),
                             gs("json", ""), gs("csv", ""));
      if (cmd == "derivative")
        return cmd_derivative(
            prefix_from_flags(gs("family", "godel"),
                              p.value("prefix_budget", 200000ull),
                              gs("prefix", "")),
            gs("alpha", "5/2"), gs("scale", "0.9invalpha"),
            p.value("trials", 100ull), p.value("seed", 1ull), gs("json", ""),
            gs("csv", ""));
      if (cmd == "classify")
        return cmd_classify(gs("field", "radial:rho2=1"),
                            p.value("sink", std::size_t{1}),
                            p.value("k", 16u), p.value("l", 7u),
                            p.value("t_budget", 64.0), gs("mode", "fast"),
                            gs("json", ""), gs("svg", ""), gs("csv", ""));
      throw SchemaError("unknown command '" + cmd + "'");
    }
    std::cout << app.help() << "\n";
    return 0;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected: " << e.what() << "\n";
    return 4;
  }
}
