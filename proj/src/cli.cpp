#include "logsig/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "logsig/cartan.hpp"
#include "logsig/exp_integrals.hpp"
#include "logsig/signature.hpp"
#include "logsig/winding.hpp"

namespace logsig::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
    v.push_back(x);
  }
  if (v.empty()) throw UsageError("empty list");
  return v;
}

std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_complex(item));
  if (v.empty()) throw UsageError("empty rate list");
  return v;
}

void emit(const json& j, const std::string& out_file, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out_file);
  f << text;
}

void check_depth(const PiecewisePath& p, int depth) {
  if (depth < 0) throw UsageError("depth must be non-negative");
  if (p.dim() == 2 && depth > kMaxCliDepthPlanar) throw UsageError("depth above 18 for a planar path");
}

const char* kFooter =
    "Tensor dumps list levels 0..N; level n is a flat array of d^n [re, im] pairs.\n"
    "A word (i1,...,in) sits at index i1 + i2*d + ... + in*d^(n-1) (first letter least significant).\n"
    "LOGSIG_THREADS caps OpenMP threads. Exit status: 0 ran, 2 usage or input error.";

}  // namespace

json path_to_json(const PiecewisePath& p) {
  json j;
  j["dimension"] = p.dim();
  j["vertices"] = p.vertices();
  if (!p.name().empty()) j["name"] = p.name();
  return j;
}

PiecewisePath path_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices"))
    throw ShapeError("path file needs \"dimension\" and \"vertices\"");
  const int dim = j.at("dimension").get<int>();
  auto verts = j.at("vertices").get<std::vector<Point>>();
  return PiecewisePath(dim, std::move(verts), j.value("name", std::string{}));
}

PiecewisePath read_path_file(const std::string& file) {
  std::ifstream f(file);
  if (!f) throw UsageError("cannot read " + file);
  return path_from_json(json::parse(f));
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json tensor_to_json(const GradedTensor& t) {
  json levels = json::array();
  for (int n = 0; n <= t.depth(); ++n) {
    json lvl = json::array();
    for (cplx c : t.level(n)) lvl.push_back(complex_to_json(c));
    levels.push_back(std::move(lvl));
  }
  return {{"dimension", t.dim()}, {"depth", t.depth()}, {"levels", std::move(levels)}};
}

json report_to_json(const IdentityReport& r, int truncation) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json params = json::object();
    for (const auto& [k, v] : row.params) params[k] = v;
    rows.push_back({{"id", row.id}, {"params", params}, {"residual", row.residual}});
  }
  json j{{"path", r.path},
         {"battery", r.battery},
         {"rows", rows},
         {"verdict", to_string(r.verdict)},
         {"engine",
          {{"truncation", truncation},
           {"tolerances", {{"engine", r.engine_tol}, {"certification", r.threshold}}}}}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

cplx parse_complex(const std::string& s) {
  static const std::regex full(
      R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*)");
  static const std::regex imag_only(R"(\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*)");
  std::smatch m;
  if (std::regex_match(s, m, imag_only)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (std::regex_match(s, m, full) && m[1].matched) {
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {std::stod(m[1].str()), im};
  }
  throw UsageError("not a complex number: '" + s + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("LOGSIG_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
  }

  CLI::App app{"Signatures, log-signatures and integral-identity checks for piecewise-linear paths"};
  app.footer(kFooter);
  app.require_subcommand(1);
  std::string out_file;

  std::string gen_name, gen_v = "1,0", gen_alpha = "0,1";
  int gen_steps = 1024;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a built-in path (line, square, figure8, brownian, conjugate)");
  gen->add_option("name", gen_name)->required();
  gen->add_option("--v", gen_v, "Line increment, comma separated");
  gen->add_option("--alpha", gen_alpha, "End point of the one-segment alpha for conjugate");
  gen->add_option("--steps", gen_steps, "Brownian steps");
  gen->add_option("--seed", gen_seed, "Brownian seed");
  gen->add_option("--out", out_file);

  std::string in_file;
  int depth = 6;
  auto* sig = app.add_subcommand("sig", "Truncated signature as a JSON tensor dump");
  auto* logsig = app.add_subcommand("logsig", "Truncated log-signature as a JSON tensor dump");
  auto* roc = app.add_subcommand("roc", "Radius-of-convergence profile of the log-signature");
  for (auto* c : {sig, logsig, roc}) {
    c->add_option("path", in_file)->required();
    c->add_option("--depth", depth);
    c->add_option("--out", out_file);
  }

  std::string battery = "all";
  BatteryOptions opt;
  double tol = -1.0;
  auto* check = app.add_subcommand("check", "Run an identity battery and emit a report");
  check->add_option("path", in_file)->required();
  check->add_option("--battery", battery)->check(CLI::IsMember({"lineint", "doubint", "iterint", "genform", "all"}));
  check->add_option("--kmax", opt.kmax, "Line-integral frequency bound");
  check->add_option("--pq", opt.pq_bound, "Double-integral frequency bound");
  check->add_option("--mmax", opt.mmax, "Largest iterated-integral order");
  check->add_option("--kbound", opt.kbound, "Frequency bound for iterated-integral sequences");
  check->add_option("--tol", tol, "Engine tolerance used for the certification threshold");
  check->add_option("--depth", depth, "Recorded truncation (engines are closed form)");
  check->add_option("--out", out_file);

  int dev_m = 1, dev_k = 0;
  std::string dev_rates, dev_mu = "1";
  auto* develop = app.add_subcommand("develop", "Development identity residuals");
  develop->add_option("path", in_file)->required();
  develop->add_option("--m", dev_m);
  develop->add_option("--rates", dev_rates, "Comma-separated complex rates, e.g. 1,2i,0.5-1i")->required();
  develop->add_option("--k", dev_k, "Single k for m >= 2 (default: all)");
  develop->add_option("--mu", dev_mu, "Second scale for m = 1");
  develop->add_option("--depth", depth);
  develop->add_option("--out", out_file);

  std::string wind_point, wind_grid;
  bool wind_tilde = false;
  auto* winding = app.add_subcommand("winding", "Winding number at a point or on a grid");
  winding->add_option("path", in_file)->required();
  winding->add_option("--point", wind_point, "x,y");
  winding->add_option("--grid", wind_grid, "x0,x1,y0,y1,nx,ny");
  winding->add_flag("--tilde", wind_tilde, "Close the path with its chord first");
  winding->add_option("--out", out_file);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      PiecewisePath p;
      if (gen_name == "line")
        p = line(parse_list(gen_v));
      else if (gen_name == "square")
        p = square_loop();
      else if (gen_name == "figure8")
        p = figure_eight();
      else if (gen_name == "brownian")
        p = brownian_sample(gen_steps, gen_seed, 2);
      else if (gen_name == "conjugate") {
        const auto a = parse_list(gen_alpha);
        if (a.size() != 2) throw UsageError("--alpha needs two coordinates");
        p = conjugated_line(PiecewisePath(2, {{0.0, 0.0}, a}));
      } else
        throw UsageError("unknown path name: " + gen_name);
      emit(path_to_json(p), out_file, out);
      return kExitOk;
    }

    const PiecewisePath p = read_path_file(in_file);
    if (sig->parsed() || logsig->parsed()) {
      check_depth(p, depth);
      emit(tensor_to_json(sig->parsed() ? signature(p, depth) : log_signature(p, depth)), out_file, out);
    } else if (roc->parsed()) {
      check_depth(p, depth);
      const RocProfile r = roc_profile(log_signature(p, depth));
      json norms = json::array(), roots = json::array();
      for (int n = 1; n <= depth; ++n) {
        norms.push_back(r.level_norms[n]);
        roots.push_back(r.roots[n]);
      }
      emit({{"path", p.name()},
            {"depth", depth},
            {"level_norms", norms},
            {"roots", roots},
            {"slope", r.slope},
            {"verdict", to_string(r.verdict)}},
           out_file, out);
    } else if (check->parsed()) {
      if (tol > 0) opt.engine_tol = tol;
      emit(report_to_json(run_battery(battery, p, opt), depth), out_file, out);
    } else if (develop->parsed()) {
      check_depth(p, depth);
      const auto rates = parse_complex_list(dev_rates);
      if (static_cast<int>(rates.size()) != dev_m) throw UsageError("--rates must list m values");
      if (p.dim() != 2) throw UsageError("develop needs a planar path");
      if (std::abs(p.end()[0] - p.start()[0]) <= kEndpointTol) throw UsageError("path has no x-increment");
      const PiecewisePath q = x_normalize(p);
      json rows = json::array();
      if (dev_m == 1) {
        const DevResult r = develop_2d_identity_residual(q, rates[0], parse_complex(dev_mu), depth);
        rows.push_back({{"identity", "two-dim"}, {"residual", r.residual}, {"tail", r.tail}});
      } else {
        for (int k = 1; k <= dev_m; ++k) {
          if (dev_k != 0 && k != dev_k) continue;
          const DevResult r = fdk_residual(q, rates, k, depth);
          rows.push_back({{"identity", "fdk"}, {"k", k}, {"residual", r.residual}, {"tail", r.tail}});
        }
        if (dev_k == 0 || dev_k == dev_m) {
          Word letters(dev_m);
          for (int j = 0; j < dev_m; ++j) letters[j] = j;
          const DevResult r = dm_dev_coeff_residual(q, rates, letters, depth);
          rows.push_back({{"identity", "dm-coefficient"}, {"residual", r.residual}, {"tail", r.tail}});
        }
      }
      json rate_json = json::array();
      for (cplx a : rates) rate_json.push_back(complex_to_json(a));
      emit({{"path", p.name()}, {"m", dev_m}, {"rates", rate_json}, {"depth", depth}, {"rows", rows}}, out_file,
           out);
    } else if (winding->parsed()) {
      const PiecewisePath w = wind_tilde ? tilde(p) : p;
      if (!wind_point.empty()) {
        const auto pt = parse_list(wind_point);
        if (pt.size() != 2) throw UsageError("--point needs x,y");
        emit({{"path", p.name()}, {"point", pt}, {"winding", winding_number(w, pt[0], pt[1])}}, out_file, out);
      } else if (!wind_grid.empty()) {
        const auto g = parse_list(wind_grid);
        if (g.size() != 6) throw UsageError("--grid needs x0,x1,y0,y1,nx,ny");
        const GridSpec spec{g[0], g[1], g[2], g[3], static_cast<int>(g[4]), static_cast<int>(g[5])};
        const WindingGrid field = winding_field(w, spec);
        json rows = json::array();
        for (int j = 0; j < spec.ny; ++j) {
          json row = json::array();
          for (int i = 0; i < spec.nx; ++i) row.push_back(field.is_masked(i, j) ? json(nullptr) : json(field.at(i, j)));
          rows.push_back(std::move(row));
        }
        emit({{"path", p.name()}, {"bounds", {g[0], g[1], g[2], g[3]}}, {"nx", spec.nx}, {"ny", spec.ny}, {"grid", rows}},
             out_file, out);
      } else {
        throw UsageError("winding needs --point or --grid");
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace logsig::cli
