#include "qrec/cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrec/bounds.hpp"
#include "qrec/errors.hpp"
#include "qrec/io.hpp"
#include "qrec/regularize.hpp"
#include "qrec/solve.hpp"

namespace qrec {

namespace {

using nlohmann::json;

struct Style {
  bool on = false;
  std::string green(const std::string& s) const { return on ? "\033[32m" + s + "\033[0m" : s; }
  std::string red(const std::string& s) const { return on ? "\033[31m" + s + "\033[0m" : s; }
};

bool color_enabled(const std::ostream& out) {
  if (&out != static_cast<const std::ostream*>(&std::cout)) return false;
  if (const char* e = std::getenv("QREC_COLOR"); e && std::string(e) == "0") return false;
  return isatty(fileno(stdout)) != 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json rational_function_json(const RationalFunction& f) {
  return json{{"num", coeff_strings(f.num())}, {"den", coeff_strings(f.den())}};
}

json vector_json(const std::vector<RationalFunction>& v) {
  json arr = json::array();
  for (const auto& f : v) arr.push_back(rational_function_json(f));
  return arr;
}

json sigma_matrix_json(const SigmaMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(render_sigma_poly(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json trace_json(const RegularizationTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step;
    step["rank"] = s.rank;
    switch (s.kind) {
      case TraceStep::Kind::Popov:
        step["kind"] = "popov";
        step["transform"] = sigma_matrix_json(s.transform);
        step["popov_block"] = sigma_matrix_json(s.popov_block);
        break;
      case TraceStep::Kind::Scale:
        step["kind"] = "scale";
        break;
      case TraceStep::Kind::Reduce:
        step["kind"] = "reduce";
        step["transform"] = sigma_matrix_json(s.transform);
        break;
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

json system_json(const QRecSystem& sys) {
  const SystemDocument doc = document_from_system(sys);
  json j;
  j["q"] = doc.q.str();
  j["nu"] = doc.nu;
  j["m"] = doc.dim;
  j["s"] = doc.order;
  j["A"] = doc.matrices;
  j["b"] = doc.rhs;
  return j;
}

void print_trace_text(std::ostream& out, const RegularizationTrace& trace) {
  const char* scale_label = trace.direction == Direction::Tail ? "t^-1" : "t";
  out << "trace (" << trace.steps.size() << " steps):\n";
  int i = 1;
  for (const auto& s : trace.steps) {
    out << "  " << i++ << ". ";
    switch (s.kind) {
      case TraceStep::Kind::Popov:
        out << "popov transform of the target block (rank " << s.rank << ")";
        break;
      case TraceStep::Kind::Scale:
        out << "scale rows below " << s.rank << " by " << scale_label;
        break;
      case TraceStep::Kind::Reduce:
        out << "reduce lower rows against the popov block (rank " << s.rank << ")";
        break;
    }
    out << "\n";
  }
}

void print_system_text(std::ostream& out, const QRecSystem& sys) {
  const SystemDocument doc = document_from_system(sys);
  out << "q = " << doc.q.str() << "\nm = " << doc.dim << ", s = " << doc.order << ", nu = " << doc.nu << "\n";
  for (int j = 0; j <= doc.order; ++j) {
    out << "A[" << j << "] =\n";
    std::vector<size_t> width(static_cast<size_t>(doc.dim), 0);
    for (int c = 0; c < doc.dim; ++c)
      for (int r = 0; r < doc.dim; ++r)
        width[static_cast<size_t>(c)] =
            std::max(width[static_cast<size_t>(c)],
                     doc.matrices[static_cast<size_t>(j)][static_cast<size_t>(r)][static_cast<size_t>(c)].size());
    for (int r = 0; r < doc.dim; ++r) {
      out << "  [ ";
      for (int c = 0; c < doc.dim; ++c) {
        const std::string& e = doc.matrices[static_cast<size_t>(j)][static_cast<size_t>(r)][static_cast<size_t>(c)];
        out << e << std::string(width[static_cast<size_t>(c)] - e.size(), ' ');
        out << (c + 1 < doc.dim ? "  " : " ");
      }
      out << "]\n";
    }
  }
  out << "b = [ ";
  for (int i = 0; i < doc.dim; ++i) out << doc.rhs[static_cast<size_t>(i)] << (i + 1 < doc.dim ? ", " : " ");
  out << "]\n";
}

std::string vector_text(const std::vector<RationalFunction>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

std::string candidates_text(const std::vector<int>& cs) {
  std::string s = "{";
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(cs[i]);
  }
  return s + "}";
}

struct Options {
  std::string file;
  std::string format = "text";
  bool trace = false;
  bool verify = false;
  int max_degree = 0;
  int max_steps = 0;
  std::string aperiodic = "1";
};

int cmd_check(const Options& opt, std::ostream& out) {
  const QRecSystem sys = parse_system(read_file(opt.file));
  const Style style{color_enabled(out)};
  const int rank = ore_row_rank(sys.A);
  const SigmaPoly lambda = lambda_poly(sys);
  const SigmaPoly rho = rho_poly(sys);
  const int tdeg = sys.A.t_degree().value_or(0);

  if (opt.format == "json") {
    json j;
    j["m"] = sys.dim();
    j["s"] = sys.order();
    j["t_degree"] = tdeg;
    j["nu"] = sys.nu;
    j["rank"] = rank;
    j["regular"] = rank == sys.dim();
    j["t_tail_regular"] = !lambda.is_zero();
    j["t_head_regular"] = !rho.is_zero();
    j["lambda"] = coeff_strings(lambda);
    j["rho"] = coeff_strings(rho);
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "m = " << sys.dim() << "\n";
  out << "s = " << sys.order() << "\n";
  out << "t-degree (l) = " << tdeg << "\n";
  out << "nu = " << sys.nu << "\n";
  out << "rank = " << rank << (rank == sys.dim() ? " (regular)" : " (rank-deficient)") << "\n";
  out << "t-tail regular: " << (!lambda.is_zero() ? style.green("yes") : style.red("no"))
      << "   lambda = " << render_sigma_poly(lambda) << "\n";
  out << "t-head regular: " << (!rho.is_zero() ? style.green("yes") : style.red("no"))
      << "   rho = " << render_sigma_poly(rho) << "\n";
  return 0;
}

int cmd_regularize(const Options& opt, Direction dir, std::ostream& out) {
  const QRecSystem sys = parse_system(read_file(opt.file));
  RegularizeOptions ropts;
  ropts.max_steps = opt.max_steps;
  const auto [result, trace] = dir == Direction::Tail ? tail_regularize(sys, ropts) : head_regularize(sys, ropts);

  if (opt.format == "json") {
    json j;
    j["system"] = system_json(result);
    j["steps"] = trace.steps.size();
    if (opt.trace) j["trace"] = trace_json(trace);
    out << j.dump(2) << "\n";
    return 0;
  }
  print_system_text(out, result);
  const SigmaPoly det = dir == Direction::Tail ? lambda_poly(result) : rho_poly(result);
  out << (dir == Direction::Tail ? "lambda = " : "rho = ") << render_sigma_poly(det) << "\n";
  if (opt.trace) print_trace_text(out, trace);
  return 0;
}

int cmd_denbound(const Options& opt, std::ostream& out) {
  const QRecSystem sys = parse_system(read_file(opt.file));
  const BoundReport rep = denominator_t_bound(sys);
  if (opt.format == "json") {
    json j;
    j["lambda"] = coeff_strings(rep.det_poly);
    j["candidates"] = rep.candidates;
    j["structural_bound"] = *rep.structural_bound;
    j["bound"] = *rep.bound;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "lambda = " << render_sigma_poly(rep.det_poly) << "\n";
  out << "q-power root exponents: " << candidates_text(rep.candidates) << "\n";
  out << "structural bound (nu): " << *rep.structural_bound << "\n";
  out << "denominator t-power bound: " << *rep.bound << "\n";
  return 0;
}

int cmd_degbound(const Options& opt, std::ostream& out) {
  const QRecSystem sys = parse_system(read_file(opt.file));
  const BoundReport rep = degree_bound(sys);
  if (opt.format == "json") {
    json j;
    j["rho"] = coeff_strings(rep.det_poly);
    j["candidates"] = rep.candidates;
    j["structural_bound"] = rep.structural_bound ? json(*rep.structural_bound) : json(nullptr);
    j["bound"] = rep.bound ? json(*rep.bound) : json(nullptr);
    j["no_nonzero_solution"] = !rep.bound.has_value();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "rho = " << render_sigma_poly(rep.det_poly) << "\n";
  out << "q-power root exponents: " << candidates_text(rep.candidates) << "\n";
  out << "structural bound (kappa - nu - l): ";
  if (rep.structural_bound)
    out << *rep.structural_bound << "\n";
  else
    out << "none\n";
  if (rep.bound)
    out << "degree bound: " << *rep.bound << "\n";
  else
    out << "degree bound: no nonzero polynomial solution\n";
  return 0;
}

void print_solutions_text(std::ostream& out, const SolutionSet& sol, bool homogeneous_rhs) {
  if (sol.particular)
    out << "particular solution: " << vector_text(*sol.particular) << "\n";
  else if (homogeneous_rhs)
    out << "particular solution: none needed (homogeneous right hand side)\n";
  else
    out << "particular solution: none (no solution of this shape)\n";
  out << "homogeneous basis (dimension " << sol.homogeneous_basis.size() << "):\n";
  for (const auto& v : sol.homogeneous_basis) out << "  " << vector_text(v) << "\n";
}

json solutions_json(const SolutionSet& sol) {
  json j;
  j["particular"] = sol.particular ? vector_json(*sol.particular) : json(nullptr);
  json basis = json::array();
  for (const auto& v : sol.homogeneous_basis) basis.push_back(vector_json(v));
  j["homogeneous_basis"] = std::move(basis);
  return j;
}

int cmd_polysolve(const Options& opt, std::ostream& out) {
  const QRecSystem sys = parse_system(read_file(opt.file));
  const SolutionSet sol = polynomial_solutions(sys, opt.max_degree);

  bool verified = true;
  if (opt.verify) {
    const std::vector<RationalFunction> zero(static_cast<size_t>(sys.dim()));
    for (const auto& v : sol.homogeneous_basis) verified = verified && apply_matrix(sys.A, v) == zero;
    if (sol.particular) verified = verified && verify_solution(sys, *sol.particular);
  }

  const bool b_zero =
      std::all_of(sys.b.begin(), sys.b.end(), [](const TPoly& p) { return p.is_zero(); });
  if (opt.format == "json") {
    json j = solutions_json(sol);
    j["max_degree"] = opt.max_degree;
    if (opt.verify) j["verified"] = verified;
    out << j.dump(2) << "\n";
  } else {
    out << "max degree = " << opt.max_degree << "\n";
    print_solutions_text(out, sol, b_zero);
    if (opt.verify) out << "verified: " << (verified ? "yes" : "NO") << "\n";
  }
  return verified ? 0 : 1;
}

int cmd_ratsolve(const Options& opt, std::ostream& out) {
  const QRecSystem sys = parse_system(read_file(opt.file));
  TPoly aperiodic;
  try {
    aperiodic = parse_poly(opt.aperiodic);
  } catch (const ParseError& e) {
    throw ParseError("--aperiodic-denominator: " + e.raw(), e.line(), e.column());
  }

  RationalSolvePipeline pipeline;
  const SolutionSet sol = rational_t_solutions(sys, aperiodic, &pipeline);

  bool verified = true;
  if (opt.verify) {
    const std::vector<RationalFunction> zero(static_cast<size_t>(sys.dim()));
    for (const auto& v : sol.homogeneous_basis) verified = verified && apply_matrix(sys.A, v) == zero;
    if (sol.particular) verified = verified && verify_solution(sys, *sol.particular);
  }

  const bool b_zero =
      std::all_of(sys.b.begin(), sys.b.end(), [](const TPoly& p) { return p.is_zero(); });
  const bool have_deg = pipeline.degree_report && pipeline.degree_report->bound;
  if (opt.format == "json") {
    json j = solutions_json(sol);
    j["denominator_exponent"] = sol.denominator_exponent;
    j["degree_bound"] = have_deg ? json(*pipeline.degree_report->bound) : json(nullptr);
    if (opt.verify) j["verified"] = verified;
    out << j.dump(2) << "\n";
  } else {
    out << "denominator exponent n* = " << sol.denominator_exponent << "\n";
    if (have_deg)
      out << "degree bound N* = " << *pipeline.degree_report->bound << "\n";
    else
      out << "degree bound N*: no nonzero polynomial part\n";
    print_solutions_text(out, sol, b_zero);
    if (opt.verify) out << "verified: " << (verified ? "yes" : "NO") << "\n";
  }
  return verified ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact denominator/degree bounds and rational solutions for q-recurrence systems"};
  app.name("qrec");
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "system document (JSON)")->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    return sub;
  };

  CLI::App* c_check = add_common(app.add_subcommand("check", "report shape, rank and regularity"));
  CLI::App* c_tail = add_common(app.add_subcommand("tail-regularize", "make the t-trailing matrix regular"));
  CLI::App* c_head = add_common(app.add_subcommand("head-regularize", "make the t-leading matrix regular"));
  CLI::App* c_den = add_common(app.add_subcommand("denbound", "bound the t-power of solution denominators"));
  CLI::App* c_deg = add_common(app.add_subcommand("degbound", "bound the degree of polynomial solutions"));
  CLI::App* c_poly = add_common(app.add_subcommand("polysolve", "compute polynomial solutions up to a degree"));
  CLI::App* c_rat = add_common(app.add_subcommand("ratsolve", "compute all solutions with t-power denominators"));

  for (CLI::App* sub : {c_tail, c_head}) {
    sub->add_flag("--trace", opt.trace, "emit the transformation steps");
    sub->add_option("--max-steps", opt.max_steps, "override the iteration cap");
  }
  c_poly->add_option("--max-degree", opt.max_degree, "ansatz degree bound")->required();
  c_poly->add_flag("--verify", opt.verify, "re-verify the returned solutions");
  c_rat->add_option("--aperiodic-denominator", opt.aperiodic,
                    "extra denominator part d(t) with d(0) != 0");
  bool rat_verify = true;
  c_rat->add_flag("--verify,!--no-verify", rat_verify, "re-verify the returned solutions (default on)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (c_check->parsed()) return cmd_check(opt, out);
    if (c_tail->parsed()) return cmd_regularize(opt, Direction::Tail, out);
    if (c_head->parsed()) return cmd_regularize(opt, Direction::Head, out);
    if (c_den->parsed()) return cmd_denbound(opt, out);
    if (c_deg->parsed()) return cmd_degbound(opt, out);
    if (c_poly->parsed()) return cmd_polysolve(opt, out);
    if (c_rat->parsed()) {
      opt.verify = rat_verify;
      return cmd_ratsolve(opt, out);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
}

}  // namespace qrec
