// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qmahler/curve15.hpp"
#include "qmahler/eta_num.hpp"
#include "qmahler/hfun.hpp"
#include "qmahler/hyper.hpp"
#include "qmahler/lfun.hpp"
#include "qmahler/mahler.hpp"
#include "qmahler/qseries.hpp"
#include "qmahler/quad.hpp"
#include "qmahler/runner.hpp"

using namespace qm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void within(Outcome& o, double a, double b, double tol, const std::string& label) {
  const double err = std::abs(a - b);
  require(o, err < tol, label + " err " + fmt(err));
}

const double kL3 = hyper::dirichlet_L3(2);
const double kLog3 = std::log(3.0);
const double kSqrt3 = std::sqrt(3.0);
const double kPi2 = kPi * kPi;

double m1_torus() { return mahler::mahler_2var(mahler::parse_poly("1+x+1/x+y+1/y")); }

std::vector<verify::CheckResult> run(const std::string& glob) {
  verify::RunOptions o;
  o.filter = glob;
  return verify::run_all(o);
}

Outcome c1() {
  Outcome o;
  const auto t0 = Clock::now();
  const double L = lfun::L_eta_cusp(qseries::EtaProduct::parse("1,3,5,15"));
  within(o, L, 4 * kPi2 / 15 * m1_torus(), 1e-8, "L vs measure");
  require(o, seconds_since(t0) < 60, "runtime");
  return o;
}

Outcome c2() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto rs = run("qs-*");
  require(o, rs.size() == 10, "expected 10 checks");
  for (const auto& r : rs) require(o, r.pass && r.lhs == 0, r.id);
  require(o, seconds_since(t0) < 30, "runtime");
  return o;
}

Outcome c3() {
  Outcome o;
  for (auto [r, j] : {std::pair{2.0, 1.0}, {3.0, 2.0}, {5.0, 3.0}}) {
    within(o, hfun::telescope_integral(r, j), 4 * kPi2 / (3 * j) * std::log(r), 1e-8,
           "(" + fmt(r) + "," + fmt(j) + ")");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  auto prop2 = run("prop2-*");
  const auto h = run("h-16-23");
  prop2.insert(prop2.end(), h.begin(), h.end());
  require(o, prop2.size() == 13, "expected 13 proved checks");
  for (const auto& r : prop2) {
    const bool non_integer_a = r.id == "prop2-F37" || r.id == "prop2-F67" || r.id == "prop2-F327";
    require(o, r.pass && r.abs_err < (non_integer_a ? 1e-6 : 1e-7), r.id + " err " + fmt(r.abs_err));
  }
  const auto conj = run("conj-*");
  require(o, conj.size() == 4, "expected 4 conjectural checks");
  for (const auto& r : conj) {
    require(o, r.pass && r.abs_err < 1e-5, r.id);
    require(o, r.status == verify::Status::conjectural, r.id + " not reported conjectural");
  }
  return o;
}

Outcome c5() {
  Outcome o;
  for (double q : {0.1, 0.2, 0.35, 0.5, 0.65}) {
    for (int x : {2, 5, 8, 11}) {
      const double res = std::abs(hfun::table_residual(hfun::signature_params(q, x), x));
      require(o, res < 1e-10, "q=" + fmt(q) + " x=" + std::to_string(x) + " res " + fmt(res));
    }
  }
  return o;
}

Outcome c6() {
  Outcome o;
  const double rhs = hfun::rhs_main_theorem(2);
  within(o, rhs, -4 * kPi2 / 3 * kLog3 - 2 * kPi * kSqrt3 * kL3, 1e-7, "closed form");
  within(o, rhs, hfun::H_combination(2), 1e-7, "H-combination");
  return o;
}

Outcome c7() {
  Outcome o;
  const double target = 45 * lfun::F_lattice(qseries::Exponent(3), qseries::Exponent(5)) + 2 * kPi * kSqrt3 * kL3 +
                        4 * kPi2 / 3 * kLog3;
  within(o, hfun::conductor15_integral(), target, 1e-6, "conductor-15 integral");
  return o;
}

Outcome c8() {
  Outcome o;
  const auto P = hfun::four_piece_split();
  const double m1 = m1_torus();
  within(o, P.P1, -kSqrt3 * kL3 - 2 * kPi / 3 * kLog3, 1e-7, "P1");
  within(o, P.P2, -2 * kPi * m1, 1e-7, "P2");
  within(o, P.P3, 2 * kPi * mahler::mahler_2var(mahler::knot_a_poly()), 1e-7, "P3");
  within(o, P.P4, 2 * kPi * kLog3 + kPi * hyper::I_integral(4), 1e-7, "P4");
  const double L15 = (P.assembled() - 2 * kPi * kSqrt3 * kL3 - 4 * kPi2 / 3 * kLog3) / 45;
  within(o, L15, 4 * kPi2 / 15 * m1, 1e-7, "assembly");
  return o;
}

Outcome c9() {
  Outcome o;
  for (double y : {1.0, 1.5, 4.0, 25.0}) {
    const double i = hyper::I_integral(y);
    within(o, i, hyper::I_hyper(y), 1e-9, "hyper y=" + fmt(y));
    within(o, i, hyper::I_mahler(y), 1e-9, "mahler y=" + fmt(y));
  }
  within(o, hyper::I_integral(4), 10 * hyper::m_alpha(1), 1e-9, "I(4)");
  for (double y : {1.5, 2.0, 4.0, 10.0}) {
    const double h = 1e-4;
    const auto central = [y](double d) { return (hyper::I_integral(y + d) - hyper::I_integral(y - d)) / (2 * d); };
    const double dI = (4 * central(h / 2) - central(h)) / 3;
    const double f = hyper::pfq({{0.5, 0.5}, {1.0}, 1 / (y * y)});
    within(o, (y + 1) / y * f - y * dI, 1, 1e-5, "derivative y=" + fmt(y));
  }
  return o;
}

Outcome c10() {
  Outcome o;
  within(o, kPi * mahler::mahler_2var(mahler::knot_a_poly()), 1.5 * kSqrt3 * kL3, 1e-8, "knot");
  return o;
}

Outcome c11() {
  Outcome o;
  const std::pair<std::pair<int, int>, const char*> pairs[] = {
      {{1, 1}, "6^4"},      {{1, 3}, "3^2,9^2"},  {{2, 3}, "2,4,6,12"}, {{3, 5}, "1,3,5,15"},
      {{2, 7}, "1,2,7,14"}, {{1, 5}, "2^2,10^2"}, {{1, 11}, "1^2,11^2"},
  };
  for (const auto& [bc, spec] : pairs) {
    within(o, lfun::F_lattice(qseries::Exponent(bc.first), qseries::Exponent(bc.second)),
           lfun::L_eta_cusp(qseries::EtaProduct::parse(spec)), 1e-8, spec);
  }
  return o;
}

mahler::LaurentPoly2 random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(2, 4);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> coef(-5, 5);
  mahler::LaurentPoly2 p;
  while (!p.depends_on_x() || !p.depends_on_y()) {
    p = mahler::LaurentPoly2();
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
      int c = 0;
      while (c == 0) c = coef(rng);
      p += mahler::LaurentPoly2::monomial(c, expo(rng), expo(rng));
    }
  }
  return p;
}

Outcome c12() {
  Outcome o;
  // Mahler-measure invariances.
  std::mt19937 rng(12345);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const double mp = mahler::mahler_2var(p);
    const double mq = mahler::mahler_2var(q);
    const double errs[] = {
        std::abs(mahler::mahler_2var(p.shifted(2, -1)) - mp),
        std::abs(mahler::mahler_2var(p.x_inverted()) - mp),
        std::abs(mahler::mahler_2var(p.swapped()) - mp),
        std::abs(mahler::mahler_2var(mahler::LaurentPoly2(3) * p) - std::log(3.0) - mp),
        std::abs(mahler::mahler_2var(p * q) - mp - mq),
    };
    if (*std::max_element(std::begin(errs), std::end(errs)) >= 1e-9) ++bad;
  }
  require(o, bad == 0, std::to_string(bad) + " invariance failures");

  // q-series integrality and numeric consistency.
  const qseries::Exponent order(60);
  const auto a = qseries::a_at(qseries::Exponent(1), order);
  const auto b = qseries::b_at(qseries::Exponent(1), order);
  const auto c = qseries::c_at(qseries::Exponent(1), order);
  require(o, a.is_integral() && b.is_integral() && c.is_integral(), "a, b, c integrality");
  require(o, qseries::eta_series(qseries::Exponent(1)).is_integral(), "eta integrality");
  for (double h : {6.0, 8.0}) {
    const double qv = std::exp(-h);
    const auto t = qseries::abc_num(qv);
    within(o, a.evaluate(qv), t.a, 1e-14, "a at e^-" + fmt(h));
    within(o, b.evaluate(qv), t.b, 1e-14, "b at e^-" + fmt(h));
    within(o, c.evaluate(qv), t.c, 1e-14, "c at e^-" + fmt(h));
  }

  // Quadrature closed forms.
  struct Case {
    std::function<Real(Real)> f;
    Real a, b, exact;
    bool singular;
  };
  const Case cases[] = {
      {[](Real t) { return std::exp(t); }, 0, 1, std::exp(1.0) - 1, false},
      {[](Real t) { return 1 / (1 + t * t); }, 0, 1, kPi / 4, false},
      {[](Real t) { return std::sin(t); }, 0, kPi, 2, false},
      {[](Real t) { return std::log(t); }, 0, 1, -1, true},
      {[](Real t) { return 1 / std::sqrt(t); }, 0, 1, 2, true},
      {[](Real t) { return std::log(t) * std::log(t); }, 0, 1, 2, true},
  };
  for (const auto& k : cases) {
    const auto r = k.singular ? quad::integrate_de(k.f, k.a, k.b) : quad::integrate(k.f, k.a, k.b);
    within(o, r.value, k.exact, 1e-11, "closed form");
  }
  require(o, std::abs(quad::integrate_halfline([](Real t) { return std::exp(-t * t); }).value - std::sqrt(kPi) / 2) <
                 1e-12,
          "halfline");

  // Full verify run.
  const auto t0 = Clock::now();
  verify::RunOptions all;
  all.jobs = verify::default_jobs();
  const auto results = verify::run_all(all);
  const double secs = seconds_since(t0);
  for (const auto& r : results) require(o, r.pass, "verify " + r.id);
  require(o, secs < 600, "verify runtime " + fmt(secs) + " s");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"main theorem L15 = (4pi^2/15) m(1+X+1/X+Y+1/Y)", c1},
      {"exact q-series checks", c2},
      {"telescoping integrals", c3},
      {"H/F relations and conjectural checks", c4},
      {"signature-3 table residuals", c5},
      {"degree-2 evaluation chain", c6},
      {"conductor-15 elementary integral", c7},
      {"four-piece split", c8},
      {"I(y) three routes, I(4), derivative relation", c9},
      {"figure-eight knot measure", c10},
      {"F = L for integer A", c11},
      {"property suites and full verify run", c12},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", n, name, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
