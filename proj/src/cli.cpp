// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/cli.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mrenewal/error.hpp"
#include "mrenewal/hyperg.hpp"
#include "mrenewal/invert.hpp"
#include "mrenewal/mcsim.hpp"
#include "mrenewal/sweep.hpp"
#include "mrenewal/validate.hpp"

namespace mrenewal::cli {

std::vector<double> parse_grid(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos) {
    throw std::invalid_argument("grid must look like A:B:N, got '" + std::string(spec) + "'");
  }
  auto number = [&](std::string_view part) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad grid endpoint '" + std::string(part) + "'");
    }
    return v;
  };
  const double a = number(spec.substr(0, c1));
  const double b = number(spec.substr(c1 + 1, c2 - c1 - 1));
  const std::string_view count_part = spec.substr(c2 + 1);
  long long n = 0;
  const auto [ptr, ec] =
      std::from_chars(count_part.data(), count_part.data() + count_part.size(), n);
  if (ec != std::errc() || ptr != count_part.data() + count_part.size() || n < 1) {
    throw std::invalid_argument("grid point count must be a positive integer, got '" +
                                std::string(count_part) + "'");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    grid[k] = n == 1 ? a : a + (b - a) * (static_cast<double>(k) / static_cast<double>(n - 1));
  }
  if (n > 1) grid.back() = b;
  return grid;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string shortest(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : format_number(v);
}

struct TransformArgs {
  int i = 0, j = 0;
  std::string s_grid;
  double lambda = 0.0, alpha = 1.0;
  std::string solver = "both";
};

struct RenewalArgs {
  int i = 0, j = 0;
  std::string t_grid;
  double lambda = 0.0, alpha = 1.0;
  std::string method = "gs";
  int order = 18;
  std::string solver = "oracle";
};

struct SimulateArgs {
  int i = 0, j = 0;
  std::string t_grid;
  double lambda = 0.0, alpha = 1.0;
  std::int64_t paths = 100'000;
  std::uint64_t seed = 1;
  int workers = 0;
  std::int64_t max_events = 10'000'000;
};

struct HypergArgs {
  double a = 0.0, b = 1.0, z = 0.0;
};

void cmd_transform(const TransformArgs& a, std::ostream& out) {
  const auto grid = parse_grid(a.s_grid);
  const QueueParams p(a.lambda, a.alpha);
  const TransformSolver solver = a.solver == "oracle"       ? TransformSolver::oracle
                                 : a.solver == "closedform" ? TransformSolver::closedform
                                                            : TransformSolver::both;
  const auto pts = transform_sweep(a.i, a.j, grid, p, solver);
  out << "s";
  if (solver != TransformSolver::closedform) out << ",rbar_oracle";
  if (solver != TransformSolver::oracle) out << ",rbar_closedform";
  if (solver == TransformSolver::both) out << ",rel_diff";
  out << '\n';
  for (const auto& pt : pts) {
    out << format_number(pt.s);
    if (pt.oracle) out << ',' << format_number(*pt.oracle);
    if (pt.closedform) out << ',' << format_number(*pt.closedform);
    if (pt.rel_diff) out << ',' << format_number(*pt.rel_diff);
    out << '\n';
  }
}

void cmd_renewal(const RenewalArgs& a, std::ostream& out) {
  const auto grid = parse_grid(a.t_grid);
  const QueueParams p(a.lambda, a.alpha);
  InversionConfig cfg;
  cfg.method = a.method == "euler" ? InversionMethod::euler : InversionMethod::gaver_stehfest;
  cfg.order = a.order;
  const Solver solver = a.solver == "closedform" ? Solver::closedform : Solver::oracle;
  const auto values = renewal_function(a.i, a.j, grid, p, solver, cfg);
  out << "t,R\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out << format_number(grid[k]) << ',' << format_number(values[k]) << '\n';
  }
}

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const auto grid = parse_grid(a.t_grid);
  const QueueParams p(a.lambda, a.alpha);
  SimConfig cfg;
  cfg.n_paths = a.paths;
  cfg.seed = a.seed;
  cfg.t_max = grid.back();
  cfg.workers = a.workers;
  cfg.max_events = a.max_events;
  const int targets[] = {a.j};
  const auto est = simulate_renewal_counts(a.i, targets, grid, p, cfg);
  out << "t,mean,std_error\n";
  for (const auto& e : est) {
    out << format_number(e.t) << ',' << format_number(e.mean) << ',' << format_number(e.std_error)
        << '\n';
  }
}

bool cmd_validate(bool quick, std::ostream& out) {
  const auto results = run_validation(quick);
  bool all = true;
  out << std::left << std::setw(26) << "suite" << std::setw(56) << "case" << std::setw(14)
      << "observed" << std::setw(12) << "threshold"
      << "result\n";
  for (const auto& r : results) {
    char obs[32], thr[32];
    std::snprintf(obs, sizeof obs, "%.3e", r.observed);
    std::snprintf(thr, sizeof thr, "%.1e", r.threshold);
    out << std::setw(26) << r.suite << std::setw(56) << r.case_label << std::setw(14) << obs
        << std::setw(12) << thr << (r.passed ? "PASS" : "FAIL") << '\n';
    all = all && r.passed;
  }
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all;
}

template <typename T>
void add_state_options(CLI::App* sub, T& a) {
  sub->add_option("--i", a.i, "start state")->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--j", a.j, "target state")->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--lambda", a.lambda, "arrival rate")->required();
  sub->add_option("--alpha", a.alpha, "mean service time")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov renewal matrix for immigration-and-death kernels (M|M|inf queue)",
               "mrenewal"};
  app.require_subcommand(1, 1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "r̄_ij(s) on an s grid (CSV)");
  add_state_options(transform, ta);
  transform->add_option("--s-grid", ta.s_grid, "A:B:N")->required();
  transform->add_option("--solver", ta.solver)
      ->check(CLI::IsMember({"oracle", "closedform", "both"}));

  RenewalArgs ra;
  auto* renewal = app.add_subcommand("renewal", "R_ij(t) by Laplace inversion (CSV)");
  add_state_options(renewal, ra);
  renewal->add_option("--t-grid", ra.t_grid, "A:B:N")->required();
  renewal->add_option("--method", ra.method)->check(CLI::IsMember({"gs", "euler"}));
  renewal->add_option("--order", ra.order, "Gaver-Stehfest order (even, 4..18)");
  renewal->add_option("--solver", ra.solver)->check(CLI::IsMember({"oracle", "closedform"}));

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo R_ij(t) (CSV)");
  add_state_options(simulate, sa);
  simulate->add_option("--t-grid", sa.t_grid, "A:B:N")->required();
  simulate->add_option("--paths", sa.paths)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sa.seed);
  simulate->add_option("--workers", sa.workers, "OpenMP threads, 0 = default")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--max-events", sa.max_events)->check(CLI::PositiveNumber);

  HypergArgs ha;
  auto* hyperg = app.add_subcommand("hyperg", "Kummer M(a, b; z)");
  hyperg->add_option("--a", ha.a)->required();
  hyperg->add_option("--b", ha.b)->required();
  hyperg->add_option("--z", ha.z)->required();

  bool quick = false;
  auto* validate = app.add_subcommand("validate", "run the cross-check suites");
  validate->add_flag("--quick", quick, "smaller grids and path counts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*transform) {
      cmd_transform(ta, out);
    } else if (*renewal) {
      cmd_renewal(ra, out);
    } else if (*simulate) {
      cmd_simulate(sa, out);
    } else if (*hyperg) {
      out << shortest(kummer_m({ha.a, ha.b, ha.z})) << '\n';
    } else if (*validate) {
      return cmd_validate(quick, out) ? kExitOk : kExitNumerical;
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::logic_error& e) {
    // DomainError, InvalidParameter, malformed grids.
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace mrenewal::cli
