#pragma once

// Command-line front end. run() is the whole program; main() only forwards.
//
// Exit codes: 0 success, 1 verify mismatch, 2 infeasible instance,
// 64 bad input or usage, 65 guard exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lsdc/lsdc.hpp"

namespace lsdc::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kBadInput = 64;
inline constexpr int kGuard = 65;

inline int exit_code(const Error& e) { return e.code() == ErrorCode::guard_exceeded ? kGuard : kBadInput; }

namespace detail {

struct Args {
  std::string variant = "unit-disk";
  std::size_t n = 10;
  std::size_t m = 10;
  std::uint64_t seed = 1;
  double span = 0.0;
  bool allow_uncovered = false;
  std::string in;
  std::string out;
  std::string solution;
  std::string svg;
  std::string algo = "auto";
  std::string sigma = "binary";
  std::string prune;
  std::string ladder = "14:17";
  std::size_t reps = 5;
};

inline Variant need_variant(const std::string& s) {
  if (auto v = parse_variant(s)) return *v;
  throw Error(ErrorCode::bad_schema, "unknown variant '" + s + "'");
}

inline SolveOptions solve_options(const Args& a) {
  SolveOptions opt;
  const auto algo = parse_algo(a.algo);
  if (!algo) throw Error(ErrorCode::bad_schema, "unknown --algo '" + a.algo + "'");
  opt.algo = *algo;
  const auto sigma = parse_sigma_backend(a.sigma);
  if (!sigma) throw Error(ErrorCode::bad_schema, "unknown --sigma '" + a.sigma + "'");
  opt.sigma = *sigma;
  if (!a.prune.empty()) {
    opt.prune = parse_prune_backend(a.prune);
    if (!opt.prune) throw Error(ErrorCode::bad_schema, "unknown --prune '" + a.prune + "'");
  }
  return opt;
}

inline std::vector<std::size_t> ladder_sizes(const std::string& spec) {
  const auto colon = spec.find(':');
  try {
    const int lo = std::stoi(spec.substr(0, colon));
    const int hi = colon == std::string::npos ? lo : std::stoi(spec.substr(colon + 1));
    if (lo < 0 || hi < lo || hi > 30) throw std::out_of_range("ladder");
    std::vector<std::size_t> out;
    for (int e = lo; e <= hi; ++e) out.push_back(std::size_t{1} << e);
    return out;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::bad_schema, "--ladder expects LO:HI exponents of two, got '" + spec + "'");
  }
}

inline int cmd_gen(const Args& a, std::ostream& out) {
  GenParams gp;
  gp.variant = need_variant(a.variant);
  gp.n = a.n;
  gp.m = a.m;
  gp.seed = a.seed;
  gp.span = a.span;
  gp.feasible_only = !a.allow_uncovered;
  const Instance inst = gen_instance(gp);
  if (a.out.empty())
    out << instance_to_json(inst).dump(2) << "\n";
  else
    save_instance(a.out, inst);
  return kOk;
}

inline int cmd_solve(const Args& a, std::ostream& out) {
  const Instance inst = load_instance(a.in);
  const SolveOptions opt = solve_options(a);
  Solution sol;
  if (opt.algo == Algo::oracle) {
    const ValidationReport report = validate(normalize(inst));
    if (!report.ok()) throw Error(ErrorCode::family_violation, report.violations.front());
    sol = oracle::brute_min_cover(inst);
  } else {
    sol = solve(inst, opt);
  }
  if (a.out.empty())
    out << solution_to_json(sol).dump() << "\n";
  else
    save_solution(a.out, sol);
  if (!a.svg.empty()) write_file_atomic(a.svg, render_svg(inst, &sol));
  return sol.status == Status::optimal ? kOk : kInfeasible;
}

// An optimal solution must cover every point; an infeasible one must name a
// point that no region covers.
inline int cmd_verify(const Args& a, std::ostream& out) {
  const Instance inst = load_instance(a.in);
  const Solution sol = load_solution(a.solution);
  bool ok;
  if (sol.status == Status::optimal) {
    ok = oracle::verify_cover(inst, sol.chosen);
  } else {
    std::vector<std::size_t> all;
    for (const Region& s : inst.regions) all.push_back(s.id);
    ok = sol.witness && *sol.witness < inst.points.size();
    if (ok) {
      Instance one = inst;
      one.points = {inst.points[*sol.witness]};
      ok = !oracle::verify_cover(one, all);
    }
  }
  out << (ok ? "ok" : "mismatch") << "\n";
  return ok ? kOk : kMismatch;
}

inline int cmd_bench(const Args& a, std::ostream& out) {
  BenchSpec spec;
  spec.variant = need_variant(a.variant);
  spec.sizes = ladder_sizes(a.ladder);
  spec.reps = a.reps;
  spec.seed = a.seed;
  const SolveOptions opt = solve_options(a);
  spec.sigma = {opt.sigma};
  spec.prune = {resolve_backend(spec.variant, opt)};
  const std::string csv = bench_csv(run_bench(spec));
  if (a.out.empty())
    out << csv;
  else
    write_file_atomic(a.out, csv);
  return kOk;
}

inline int cmd_render(const Args& a, std::ostream& out) {
  const Instance inst = load_instance(a.in);
  std::optional<Solution> sol;
  if (!a.solution.empty()) sol = load_solution(a.solution);
  const std::string svg = render_svg(inst, sol ? &*sol : nullptr);
  const std::string& target = a.svg.empty() ? a.out : a.svg;
  if (target.empty())
    out << svg;
  else
    write_file_atomic(target, svg);
  return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact minimum covers of points by regions across a separating line"};
  app.require_subcommand(1);
  detail::Args a;

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--variant", a.variant, "unit-disk | line-constrained | line-separable | lower-halfplane");
  gen->add_option("--n", a.n, "number of points");
  gen->add_option("--m", a.m, "number of regions");
  gen->add_option("--seed", a.seed, "random seed");
  gen->add_option("--span", a.span, "width of the x-range (0 = automatic)");
  gen->add_flag("--allow-uncovered", a.allow_uncovered, "do not resample points outside every region");
  gen->add_option("--out", a.out, "instance file (stdout if omitted)");

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  solve_cmd->add_option("--in", a.in, "instance file")->required();
  solve_cmd->add_option("--out", a.out, "solution file (stdout if omitted)");
  solve_cmd->add_option("--algo", a.algo, "auto | general | unit | halfplane | oracle");
  solve_cmd->add_option("--sigma", a.sigma, "binary | cascade");
  solve_cmd->add_option("--prune", a.prune, "fvd | cap | dual | naive");
  solve_cmd->add_option("--svg", a.svg, "also draw the result");

  auto* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("--in", a.in, "instance file")->required();
  verify->add_option("--solution", a.solution, "solution file")->required();

  auto* bench = app.add_subcommand("bench", "time the pipeline over a size ladder");
  bench->add_option("--variant", a.variant, "instance variant");
  bench->add_option("--ladder", a.ladder, "LO:HI, sizes 2^LO..2^HI");
  bench->add_option("--reps", a.reps, "repetitions per size");
  bench->add_option("--seed", a.seed, "base seed");
  bench->add_option("--algo", a.algo, "auto | general | unit | halfplane");
  bench->add_option("--sigma", a.sigma, "binary | cascade");
  bench->add_option("--prune", a.prune, "fvd | cap | dual | naive");
  bench->add_option("--out", a.out, "CSV file (stdout if omitted)");

  auto* render = app.add_subcommand("render", "draw an instance as SVG");
  render->add_option("--in", a.in, "instance file")->required();
  render->add_option("--solution", a.solution, "solution to highlight");
  render->add_option("--svg,--out", a.svg, "SVG file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*gen) return detail::cmd_gen(a, out);
    if (*solve_cmd) return detail::cmd_solve(a, out);
    if (*verify) return detail::cmd_verify(a, out);
    if (*bench) return detail::cmd_bench(a, out);
    if (*render) return detail::cmd_render(a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace lsdc::cli
