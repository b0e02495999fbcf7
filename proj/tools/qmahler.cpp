// qmahler: verify identities, evaluate the special functions, print series.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmahler/eta_product.hpp"
#include "qmahler/hfun.hpp"
#include "qmahler/hyper.hpp"
#include "qmahler/lfun.hpp"
#include "qmahler/mahler.hpp"
#include "qmahler/qseries.hpp"
#include "qmahler/report.hpp"
#include "qmahler/runner.hpp"

namespace {

using qm::qseries::Exponent;
using qm::verify::format_number;

Exponent parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  const long long num = std::stoll(text.substr(0, slash), &used);
  if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument("bad number: " + text);
  long long den = 1;
  if (slash != std::string::npos) {
    const std::string tail = text.substr(slash + 1);
    den = std::stoll(tail, &used);
    if (used != tail.size() || den == 0) throw std::invalid_argument("bad number: " + text);
  }
  return Exponent(num, den);
}

qm::Real to_real(Exponent e) { return static_cast<qm::Real>(e.numerator()) / static_cast<qm::Real>(e.denominator()); }

void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
  if (args.size() != n) throw std::invalid_argument(std::string("usage: eval ") + usage);
}

int run_eval(const std::string& what, const std::vector<std::string>& args) {
  if (what == "H") {
    need(args, 1, "H <x>");
    std::cout << format_number(qm::hfun::H_q(parse_fraction(args[0]))) << "\n";
  } else if (what == "F") {
    need(args, 2, "F <B> <C>");
    std::cout << format_number(qm::lfun::F_lattice(parse_fraction(args[0]), parse_fraction(args[1]))) << "\n";
  } else if (what == "Lcusp") {
    need(args, 1, "Lcusp <scale^power,...>");
    std::cout << format_number(qm::lfun::L_eta_cusp(qm::qseries::EtaProduct::parse(args[0]))) << "\n";
  } else if (what == "I") {
    need(args, 1, "I <y>");
    std::cout << format_number(qm::hyper::I_integral(to_real(parse_fraction(args[0])))) << "\n";
  } else if (what == "malpha") {
    need(args, 1, "malpha <alpha>");
    std::cout << format_number(qm::hyper::m_alpha(to_real(parse_fraction(args[0])))) << "\n";
  } else if (what == "L3") {
    need(args, 1, "L3 <s>");
    std::cout << format_number(qm::hyper::dirichlet_L3(std::stoi(args[0]))) << "\n";
  } else if (what == "mahler") {
    need(args, 1, "mahler \"<poly>\"");
    const auto r = qm::mahler::mahler_2var_detailed(qm::mahler::parse_poly(args[0]));
    std::cout << format_number(r.value) << " " << format_number(r.err_estimate) << "\n";
  } else {
    throw std::invalid_argument("unknown eval target: " + what);
  }
  return 0;
}

int run_series(const std::string& what, const std::string& scale_text, long long order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const Exponent scale = parse_fraction(scale_text);
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  const Exponent n(order);
  if (what == "eta") {
    const auto grid = qm::qseries::common_grid(qm::qseries::kDefaultGrid, 24 * scale.denominator());
    std::cout << qm::qseries::render_tsv(qm::qseries::eta_series(scale, grid, n));
  } else if (what == "a") {
    std::cout << qm::qseries::render_tsv(qm::qseries::a_at(scale, n));
  } else if (what == "b") {
    std::cout << qm::qseries::render_tsv(qm::qseries::b_at(scale, n));
  } else if (what == "c") {
    std::cout << qm::qseries::render_tsv(qm::qseries::c_at(scale, n));
  } else {
    throw std::invalid_argument("unknown series: " + what);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eta products, H(x), lattice sums, L-values and Mahler measures"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the identity registry");
  std::optional<std::string> filter;
  std::optional<double> tol;
  std::string format = "table";
  std::string out_path;
  bool proved_only = false;
  int jobs = qm::verify::default_jobs();
  verify->add_option("--filter", filter, "glob on check ids");
  verify->add_option("--tol", tol, "tolerance for every numeric check");
  verify->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_flag("--proved-only", proved_only, "skip conjectural checks");
  verify->add_option("--jobs", jobs, "worker threads (default: VERIFY_JOBS or all cores)")->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  std::string eval_what;
  std::vector<std::string> eval_args;
  eval->add_option("what", eval_what, "H | F | Lcusp | I | malpha | L3 | mahler")->required();
  eval->add_option("args", eval_args, "arguments");

  auto* series = app.add_subcommand("series", "print an exact q-expansion");
  std::string series_what;
  std::string scale = "1";
  long long order = qm::qseries::kDefaultOrder;
  series->add_option("what", series_what, "eta | a | b | c")->required()->check(CLI::IsMember({"eta", "a", "b", "c"}));
  series->add_option("--scale", scale, "q -> q^scale, rational");
  series->add_option("--order", order, "truncation order in q");

  app.add_subcommand("list", "print the check ids in registry order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      qm::verify::RunOptions options;
      options.filter = filter;
      options.tol_override = tol;
      options.proved_only = proved_only;
      options.jobs = jobs;
      const auto results = qm::verify::run_all(options);
      const std::string text = qm::verify::render_report(results, qm::verify::parse_format(format));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
      }
      for (const auto& r : results) {
        if (r.status == qm::verify::Status::conjectural && !r.pass) {
          std::cerr << "warning: conjectural check " << r.id << " did not pass\n";
        }
      }
      return qm::verify::exit_code(results);
    }
    if (eval->parsed()) return run_eval(eval_what, eval_args);
    if (series->parsed()) return run_series(series_what, scale, order);
    for (const auto& def : qm::verify::registry()) {
      std::cout << def.id << "\t" << qm::verify::to_string(def.status) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
