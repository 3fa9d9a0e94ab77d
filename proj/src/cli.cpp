#include "tricheb/cli.hpp"

#include "tricheb/approx.hpp"
#include "tricheb/io.hpp"
#include "tricheb/simplex_basis.hpp"
#include "tricheb/verify.hpp"
#include "tricheb/weighted_ip.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tricheb::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  int n = 0;
  int r = 0;
  std::string gamma = "1";
  int nodes = 16;
  int resolution = 11;
  std::string format = "csv";
  std::string out_path;
  std::string method = "closed";
  std::string function = "exp_u";
  bool quadrature = false;
};

void require_indices(const CommandConfig& c) {
  if (c.n < 0 || c.n > kMaxExactDegree || c.r < 0 || c.r > c.n) {
    throw UsageError("need 0 <= r <= n <= " + std::to_string(kMaxExactDegree) + " (got n=" +
                     std::to_string(c.n) + ", r=" + std::to_string(c.r) + ")");
  }
}

const std::map<std::string, TriangleFunction>& builtin_functions() {
  static const std::map<std::string, TriangleFunction> fns = {
      {"one", [](const BaryPointF&) { return 1.0; }},
      {"exp_u", [](const BaryPointF& p) { return std::exp(p.u()); }},
      {"sin_pi_v", [](const BaryPointF& p) { return std::sin(std::numbers::pi * p.v()); }},
      {"uv", [](const BaryPointF& p) { return p.u() * p.v(); }},
      {"uvw", [](const BaryPointF& p) { return p.u() * p.v() * p.w(); }},
  };
  return fns;
}

void cmd_coeffs(const CommandConfig& c, std::ostream& os) {
  require_indices(c);
  const SimplexOrthoPoly p = c.method == "recursive" ? coeffs_recursive(c.n, c.r) : coeffs_closed_form(c.n, c.r);
  if (c.format == "json") {
    Json j{{"n", c.n}, {"r", c.r}, {"method", c.method}};
    const Json body = to_json(p.bb);
    for (const auto& [key, value] : body.items()) j[key] = value;
    os << j.dump(2) << '\n';
  } else {
    write_coeffs_csv(os, p.bb);
  }
}

void cmd_gram(const CommandConfig& c, std::ostream& os) {
  if (c.n < 0 || c.n > kMaxExactDegree) throw UsageError("need 0 <= n <= " + std::to_string(kMaxExactDegree));
  const WeightParams gamma = WeightParams::parse(c.gamma);
  const bool exact = !c.quadrature && gamma.exact_integer().has_value();
  if (!exact && c.nodes < 1) throw UsageError("--nodes must be positive");
  const GramMatrix g = gram_matrix(c.n, gamma, exact ? GramMode::kExact : GramMode::kQuadrature, c.nodes);
  if (c.format == "json") {
    os << to_json(g).dump(2) << '\n';
  } else {
    write_gram_csv(os, g);
  }
}

void cmd_eval_grid(const CommandConfig& c, std::ostream& os) {
  require_indices(c);
  if (c.resolution < 2) throw UsageError("--resolution must be at least 2");
  const BBPolyF p = to_float(coeffs_closed_form(c.n, c.r).bb);
  const int steps = c.resolution - 1;
  Json rows = Json::array();
  if (c.format == "csv") os << "u,v,w,value\n";
  for (int i = steps; i >= 0; --i) {
    for (int j = steps - i; j >= 0; --j) {
      const int k = steps - i - j;
      const BaryPointF pt = BaryPointF::make(static_cast<double>(i) / steps, static_cast<double>(j) / steps,
                                             static_cast<double>(k) / steps);
      const double value = p(pt);
      if (c.format == "json") {
        rows.push_back({{"u", pt.u()}, {"v", pt.v()}, {"w", pt.w()}, {"value", value}});
      } else {
        os << format_double(pt.u()) << ',' << format_double(pt.v()) << ',' << format_double(pt.w()) << ','
           << format_double(value) << '\n';
      }
    }
  }
  if (c.format == "json") {
    os << Json{{"n", c.n}, {"r", c.r}, {"resolution", c.resolution}, {"points", std::move(rows)}}.dump(2)
       << '\n';
  }
}

int cmd_verify(const CommandConfig& c, std::ostream& os) {
  if (c.n < 0 || c.n > kMaxExactDegree) {
    throw UsageError("exact verification supports 0 <= n <= " + std::to_string(kMaxExactDegree));
  }
  const WeightParams gamma = WeightParams::parse(c.gamma);
  const auto g = gamma.exact_integer();
  if (!g) throw UsageError("verify needs a non-negative integer --gamma (exact mode)");
  const VerificationReport report = run_verification(c.n, *g);
  Json claims = Json::array();
  for (const ClaimReport& claim : report.claims) {
    claims.push_back({{"claim", claim.name},
                      {"hypothesis", claim.hypothesis},
                      {"instances", claim.instances},
                      {"passed", claim.passed},
                      {"failed", claim.failed},
                      {"outside_hypothesis", claim.outside_hypothesis},
                      {"status", to_string(claim.status())}});
  }
  const Json j{{"max_degree", report.max_degree},
               {"gamma", report.gamma},
               {"passed", report.passed()},
               {"claims", std::move(claims)}};
  os << j.dump(2) << '\n';
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

void cmd_project(const CommandConfig& c, std::ostream& os) {
  if (c.n < 0 || c.n > kMaxExactDegree) throw UsageError("need 0 <= n <= " + std::to_string(kMaxExactDegree));
  const auto& fns = builtin_functions();
  const auto it = fns.find(c.function);
  if (it == fns.end()) throw UsageError("unknown --function '" + c.function + "'");
  if (c.nodes < 1) throw UsageError("--nodes must be positive");
  const ProjectionResult pr = project(it->second, c.n, WeightParams::parse(c.gamma), c.nodes);
  if (c.format == "json") {
    os << to_json(pr).dump(2) << '\n';
  } else {
    write_projection_csv(os, pr);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev-weighted orthogonal polynomials on the triangle"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "Output file (default stdout)"); };

  CLI::App* coeffs = app.add_subcommand("coeffs", "Bernstein-Bezier coefficients of T_{n,r}");
  coeffs->add_option("--n", cfg.n, "Degree")->required();
  coeffs->add_option("--r", cfg.r, "Index 0 <= r <= n")->required();
  coeffs->add_option("--method", cfg.method, "closed or recursive")->check(CLI::IsMember({"closed", "recursive"}));
  add_format(coeffs);
  add_out(coeffs);

  CLI::App* gram = app.add_subcommand("gram", "Weighted Gram matrix of all members up to degree n");
  gram->add_option("--n", cfg.n, "Maximum degree")->required();
  gram->add_option("--gamma", cfg.gamma, "Weight exponent (integer or p/q for exact, decimal for quadrature)");
  gram->add_option("--nodes", cfg.nodes, "Quadrature nodes per direction");
  gram->add_flag("--quadrature", cfg.quadrature, "Force the quadrature path");
  add_format(gram);
  add_out(gram);

  CLI::App* grid = app.add_subcommand("eval-grid", "Sample T_{n,r} on a barycentric lattice");
  grid->add_option("--n", cfg.n, "Degree")->required();
  grid->add_option("--r", cfg.r, "Index 0 <= r <= n")->required();
  grid->add_option("--resolution", cfg.resolution, "Lattice points per edge (>= 2)");
  add_format(grid);
  add_out(grid);

  CLI::App* verify = app.add_subcommand("verify", "Exact verification suite up to degree n (JSON report)");
  verify->add_option("--n", cfg.n, "Maximum degree")->required();
  verify->add_option("--gamma", cfg.gamma, "Non-negative integer weight exponent");
  add_out(verify);

  CLI::App* proj = app.add_subcommand("project", "Weighted least-squares projection of a built-in function");
  proj->add_option("--n", cfg.n, "Projection degree")->required();
  proj->add_option("--gamma", cfg.gamma, "Weight exponent >= 1");
  proj->add_option("--nodes", cfg.nodes, "Quadrature nodes per direction");
  proj->add_option("--function", cfg.function, "one, exp_u, sin_pi_v, uv or uvw");
  add_format(proj);
  add_out(proj);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (coeffs->parsed()) {
      cmd_coeffs(cfg, buffer);
    } else if (gram->parsed()) {
      cmd_gram(cfg, buffer);
    } else if (grid->parsed()) {
      cmd_eval_grid(cfg, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(cfg, buffer);
    } else {
      cmd_project(cfg, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.out_path << "' for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace tricheb::cli
