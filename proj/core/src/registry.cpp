#include "qmahler/registry.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "qmahler/curve15.hpp"
#include "qmahler/eta_product.hpp"
#include "qmahler/hfun.hpp"
#include "qmahler/hyper.hpp"
#include "qmahler/lfun.hpp"
#include "qmahler/mahler.hpp"
#include "qmahler/qseries.hpp"

namespace qm::verify {

namespace {

using qseries::EtaProduct;
using qseries::Exponent;
using qseries::QExpansion;

constexpr std::int64_t kOrder = 40;
constexpr std::int64_t kOrderDeg11 = 60;

// ---- exact helpers ----------------------------------------------------------

Evaluation exact(const QExpansion& lhs, const QExpansion& rhs, std::int64_t order) {
  const auto check = qseries::assert_series_identity(lhs, rhs, Exponent(order));
  Evaluation e{static_cast<Real>(check.discrepancies), 0, ""};
  if (!check.holds) {
    e.note = "first mismatch at q^" + qseries::to_string(*check.first_exponent) + ": " +
             check.lhs_coefficient.get_str() + " vs " + check.rhs_coefficient.get_str();
  }
  return e;
}

QExpansion a(Exponent r, std::int64_t n) { return qseries::a_at(r, Exponent(n)); }
QExpansion b(Exponent r, std::int64_t n) { return qseries::b_at(r, Exponent(n)); }
QExpansion c(Exponent r, std::int64_t n) { return qseries::c_at(r, Exponent(n)); }
QExpansion eta(const char* spec, std::int64_t n) { return EtaProduct::parse(spec).series(Exponent(n)); }

// a(q)a(q^x) - b(q)b(q^x) - c(q)c(q^x).
QExpansion degree_form(std::int64_t x, std::int64_t n) {
  const Exponent r(x);
  return a(1, n) * a(r, n) - b(1, n) * b(r, n) - c(1, n) * c(r, n);
}

int chi3(std::int64_t m) {
  switch (m % 3) {
    case 1:
      return 1;
    case 2:
      return -1;
    default:
      return 0;
  }
}

// sum_{n,k >= 1} k chi(nk) q^{nk}
QExpansion lambert_series(std::int64_t n) {
  QExpansion s(1, Exponent(n));
  for (std::int64_t m = 1; m <= n; ++m) {
    mpq_class coeff = 0;
    for (std::int64_t k = 1; k <= m; ++k) {
      if (m % k == 0) coeff += k * chi3(m);
    }
    s.set_coefficient(Exponent(m), coeff);
  }
  return s;
}

Evaluation prop2_proof_identity() {
  Evaluation total{0, 0, ""};
  for (std::int64_t x : {1, 2}) {
    const std::int64_t n = kOrder;
    const Exponent xr(x);
    const QExpansion lhs =
        (b(Exponent(1, 9), n) - b(Exponent(1, 3), n)) * c(xr, n) +
        mpq_class(3) * (b(xr / 3, n) - b(xr, n)) * c(1, n);
    const QExpansion rhs = mpq_class(9) * c(3 * xr, n) * c(1, n) - c(xr, n) * c(Exponent(1, 3), n);
    const Evaluation e = exact(lhs, rhs, n);
    total.lhs += e.lhs;
    if (!e.note.empty()) total.note += "x=" + std::to_string(x) + ": " + e.note + "; ";
  }
  return total;
}

// ---- numeric helpers --------------------------------------------------------

Real H(Real x) { return hfun::H_q(x); }
Real F(Real B, Real C) { return lfun::F_lattice(B, C); }
Real L3() { return hyper::dirichlet_L3(2); }
Real log3() { return std::log(Real(3)); }
Real pi2() { return kPi * kPi; }

Real m1_torus() { return mahler::mahler_2var(mahler::parse_poly("1+x+1/x+y+1/y")); }

Real L15() { return lfun::L_eta_cusp(EtaProduct::parse("1,3,5,15")); }

// 45 L(E15, 2) + 2 pi sqrt3 L(chi, 2) + (4 pi^2 / 3) log 3 with L(E15, 2) = F(3, 5).
Real conductor15_target() { return 45 * F(3, 5) + 2 * kPi * kSqrt3 * L3() + 4 * pi2() / 3 * log3(); }

template <typename Fn>
Real max_abs_over(std::initializer_list<Real> points, Fn fn) {
  Real worst = 0;
  for (Real p : points) worst = std::max(worst, std::abs(fn(p)));
  return worst;
}

Evaluation residual(Real r) { return {r, 0, ""}; }

// I'(y) by central differences with one Richardson step.
Real I_prime(Real y) {
  const Real h = Real(1e-4);
  const auto central = [y](Real d) { return (hyper::I_integral(y + d) - hyper::I_integral(y - d)) / (2 * d); };
  return (4 * central(h / 2) - central(h)) / 3;
}

// ---- registry ---------------------------------------------------------------

std::vector<CheckDef> build() {
  std::vector<CheckDef> r;
  const auto add = [&r](std::string id, std::string description, std::string anchor, Status status,
                        Real tol, std::function<Evaluation()> fn) {
    r.push_back({std::move(id), std::move(description), std::move(anchor), status, tol, false, std::move(fn)});
  };
  const auto add_exact = [&r](std::string id, std::string description, std::string anchor,
                              std::function<Evaluation()> fn) {
    r.push_back({std::move(id), std::move(description), std::move(anchor), Status::proved, kTolExact, true,
                 std::move(fn)});
  };
  const auto proved = Status::proved;
  const auto conj = Status::conjectural;

  // q-series, exact through q^40 (q^60 for degree 11 and the Lambert series).
  add_exact("qs-cubic", "a^3 = b^3 + c^3", "cubic relation of the theta functions", [] {
    return exact(a(1, kOrder).pow(3), b(1, kOrder).pow(3) + c(1, kOrder).pow(3), kOrder);
  });
  add_exact("qs-a-bc", "a(q) = b(q) + 3c(q^3)", "standard a-b-c relation", [] {
    return exact(a(1, kOrder), b(1, kOrder) + mpq_class(3) * c(3, kOrder), kOrder);
  });
  add_exact("qs-b13", "b(q^(1/3)) - b(q) = 3c(q^3) - c(q)", "b-c relation used to eliminate b", [] {
    return exact(b(Exponent(1, 3), kOrder) - b(1, kOrder), mpq_class(3) * c(3, kOrder) - c(1, kOrder), kOrder);
  });
  add_exact("qs-deg2", "a(q)a(q^2) - b(q)b(q^2) - c(q)c(q^2) = 0", "degree-2 modular equation",
            [] { return exact(degree_form(2, kOrder), QExpansion(1, Exponent(kOrder)), kOrder); });
  add_exact("qs-deg5", "degree-5 form = 9 eta(q)eta(q^3)eta(q^5)eta(q^15)", "degree-5 modular equation",
            [] { return exact(degree_form(5, kOrder), mpq_class(9) * eta("1,3,5,15", kOrder), kOrder); });
  add_exact("qs-deg8", "degree-8 form = 9 eta(q^2)eta(q^4)eta(q^6)eta(q^12)", "degree-8 modular equation",
            [] { return exact(degree_form(8, kOrder), mpq_class(9) * eta("2,4,6,12", kOrder), kOrder); });
  add_exact("qs-deg11", "degree-11 form = 9 eta^2(q)eta^2(q^11) + 27 eta^2(q^3)eta^2(q^33) + 18 eta(q)eta(q^3)eta(q^11)eta(q^33)",
            "degree-11 modular equation", [] {
              const std::int64_t n = kOrderDeg11;
              const QExpansion rhs = mpq_class(9) * eta("1^2,11^2", n) + mpq_class(27) * eta("3^2,33^2", n) +
                                     mpq_class(18) * eta("1,3,11,33", n);
              return exact(degree_form(11, n), rhs, n);
            });
  add_exact("qs-e36", "3 eta^4(q^6) = b(q^4)c(q^3) - b(q)c(q^12)", "conductor-36 modular equation", [] {
    return exact(mpq_class(3) * eta("6^4", kOrder), b(4, kOrder) * c(3, kOrder) - b(1, kOrder) * c(12, kOrder),
                 kOrder);
  });
  add_exact("qs-lambert", "(1/3) b(q)c(q^3) = sum k chi(nk) q^(nk)", "Lambert series for b(q)c(q^3)", [] {
    const std::int64_t n = kOrderDeg11;
    return exact(mpq_class(1, 3) * b(1, n) * c(3, n), lambert_series(n), n);
  });
  add_exact("qs-prop2-proof", "(b(q^(1/9))-b(q^(1/3)))c(q^x) + 3(b(q^(x/3))-b(q^x))c(q) = 9c(q^(3x))c(q) - c(q^x)c(q^(1/3)), x in {1,2}",
            "series identity behind the H functional relation", prop2_proof_identity);

  // Telescoping.
  for (auto [rr, jj] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{5, 3}}) {
    const Real rv = rr;
    const Real jv = jj;
    add("tele-" + std::to_string(rr) + "-" + std::to_string(jj),
        "telescoping integral at r=" + std::to_string(rr) + ", j=" + std::to_string(jj) + " vs (4 pi^2/(3j)) log r",
        "telescoping integral", proved, kTolSingle, [rv, jv] {
          return Evaluation{hfun::telescope_integral(rv, jv), 4 * pi2() / (3 * jv) * std::log(rv), ""};
        });
  }

  add("h-16-23", "H(1/6)/2 + 2H(2/3) = -(4 pi^2/3) log 3", "H(1/6)-H(2/3) relation", proved, kTolSingle, [] {
    return Evaluation{H(1.0 / 6) / 2 + 2 * H(2.0 / 3), -4 * pi2() / 3 * log3(), ""};
  });
  for (int x : {1, 2}) {
    const Real xv = x;
    add("prop2-funcrel-" + std::to_string(x),
        "-(1/x)H(1/(3x)) + 3xH(x/3) - 3xH(x) + (1/x)H(1/(9x)) = (4 pi^2/3) log 3 at x=" + std::to_string(x),
        "H functional relation", proved, kTolChained, [xv] {
          return Evaluation{-H(1 / (3 * xv)) / xv + 3 * xv * H(xv / 3) - 3 * xv * H(xv) + H(1 / (9 * xv)) / xv,
                            4 * pi2() / 3 * log3(), ""};
        });
  }
  add("prop2-H13", "H(1/3) = -pi sqrt3 L(chi_-3, 2)", "evaluation of H(1/3)", proved, kTolSingle,
      [] { return Evaluation{H(1.0 / 3), -kPi * kSqrt3 * L3(), ""}; });
  add("prop2-F27",
      "12F(2,7) = -H(1/42)/196 - H(14/3) + H(2/21)/49 + H(7/6)/4 (stated without proof; registered as proved)",
      "F(2,7) in terms of H", proved, kTolChained, [] {
        return Evaluation{12 * F(2, 7), -H(1.0 / 42) / 196 - H(14.0 / 3) + H(2.0 / 21) / 49 + H(7.0 / 6) / 4, ""};
      });
  add("prop2-F35", "9F(3,5) = -H(1/15)/25 - H(5/3) - (4 pi^2/15) log 3", "F(3,5) in terms of H", proved,
      kTolChained, [] {
        return Evaluation{9 * F(3, 5), -H(1.0 / 15) / 25 - H(5.0 / 3) - 4 * pi2() / 15 * log3(), ""};
      });
  add("prop2-F23", "9F(2,3) = -H(1/24)/64 - H(8/3) - (pi^2/6) log 3", "F(2,3) in terms of H", proved,
      kTolChained, [] {
        return Evaluation{9 * F(2, 3), -H(1.0 / 24) / 64 - H(8.0 / 3) - pi2() / 6 * log3(), ""};
      });
  add("prop2-F13", "9F(1,3) = -H(1)", "F(1,3) in terms of H", proved, kTolSingle,
      [] { return Evaluation{9 * F(1, 3), -H(1), ""}; });
  add("prop2-F11a", "9F(1,1) = -H(4/3) + H(1/12)/16", "F(1,1) in terms of H", proved, kTolChained,
      [] { return Evaluation{9 * F(1, 1), -H(4.0 / 3) + H(1.0 / 12) / 16, ""}; });
  add("prop2-F111-311", "12F(1,11) + (9/2)F(3,11) = -H(1/33)/121 - H(11/3) - (4 pi^2/33) log 3",
      "F(1,11) and F(3,11) in terms of H", proved, kTolChained, [] {
        return Evaluation{12 * F(1, 11) + Real(4.5) * F(3, 11),
                          -H(1.0 / 33) / 121 - H(11.0 / 3) - 4 * pi2() / 33 * log3(), ""};
      });
  add("prop2-F37", "(27/16)F(3,7) = (8/7)H(1) - H(7) - H(1/7)/49", "F(3,7) in terms of H", proved,
      kTolNonIntegerA, [] {
        return Evaluation{Real(27) / 16 * F(3, 7), Real(8) / 7 * H(1) - H(7) - H(1.0 / 7) / 49, ""};
      });
  add("prop2-F67", "(27/49)F(6,7) = H(2/7)/49 + H(14) - (8/7)H(2)", "F(6,7) in terms of H", proved,
      kTolNonIntegerA, [] {
        return Evaluation{Real(27) / 49 * F(6, 7), H(2.0 / 7) / 49 + H(14) - Real(8) / 7 * H(2), ""};
      });
  add("prop2-F327", "(27/25)F(3/2,7) = (2/7)H(1/2) - H(7/2)/4 - H(1/14)/196", "F(3/2,7) in terms of H", proved,
      kTolNonIntegerA, [] {
        return Evaluation{Real(27) / 25 * lfun::F_lattice(Exponent(3, 2), Exponent(7)),
                          Real(2) / 7 * H(0.5) - H(3.5) / 4 - H(1.0 / 14) / 196, ""};
      });

  // Signature-3 table.
  for (int x : {2, 5, 8, 11}) {
    add("sig3-table-" + std::to_string(x),
        "max |degree-" + std::to_string(x) + " u-v relation| over q in {0.1, 0.2, 0.35, 0.5, 0.65}",
        "signature-3 degree table", proved, kTolResidual, [x] {
          return residual(max_abs_over({0.1, 0.2, 0.35, 0.5, 0.65}, [x](Real q) {
            return hfun::table_residual(hfun::signature_params(q, x), x);
          }));
        });
  }

  // Degree 2 and degree 5 chains.
  add("mainthm-x2", "degree-2 elementary integral = -(4 pi^2/3) log 3 - 2 pi sqrt3 L(chi_-3, 2)",
      "degree-2 evaluation chain", proved, kTolChained, [] {
        return Evaluation{hfun::rhs_main_theorem(2), -4 * pi2() / 3 * log3() - 2 * kPi * kSqrt3 * L3(), ""};
      });
  add("hmain-x2", "2H(2/3) + H(1/6)/2 + 2H(1/3) = degree-2 elementary integral", "H main theorem at x=2", proved,
      kTolChained, [] { return Evaluation{hfun::H_combination(2), hfun::rhs_main_theorem(2), ""}; });
  add("hmain-x5", "5H(5/3) + H(1/15)/5 + 2H(1/3) = degree-5 elementary integral", "H main theorem at x=5", proved,
      kTolChained, [] { return Evaluation{hfun::H_combination(5), hfun::rhs_main_theorem(5), ""}; });
  for (int x : {1, 2, 5}) {
    const Real xv = x;
    add("hred-x" + std::to_string(x),
        "alpha-integral route vs x H(x/3) at x=" + std::to_string(x), "H reduction integral", proved,
        kTolAlphaRoute, [xv] { return Evaluation{hfun::H_alpha(xv), xv * H(xv / 3), ""}; });
  }

  // Conductor-15 curve.
  add("quartic-param", "max relative quartic residual of the parametrized (x(t), y(t))", "x-y quartic relation",
      proved, kTolResidual, [] {
        return residual(max_abs_over({1.25, 1.5, 2.0, 2.5, 2.9, 3.5, 5.0, 10.0, 50.0}, [](Real t) {
          const auto p = hfun::curve_point(t);
          return hfun::curve_quartic_relative_residual(p.x, p.y);
        }));
      });
  add("dsplit", "max |Phi' - 2 psi1' - psi2'| over sample t", "splitting of the differential", proved, Real(1e-9),
      [] {
        return residual(max_abs_over({1.5, 2.0, 2.5, 4.0, 6.0, 10.0}, [](Real t) { return hfun::dsplit_residual(t); }));
      });
  add("prop4", "4 pi int log x dPhi = 45 F(3,5) + 2 pi sqrt3 L(chi_-3, 2) + (4 pi^2/3) log 3",
      "conductor-15 elementary integral", proved, kTolChained,
      [] { return Evaluation{hfun::conductor15_integral(), conductor15_target(), ""}; });
  add("split4-p1", "int log(x xbar) dpsi1 = -sqrt3 L(chi_-3, 2) - (2 pi/3) log 3", "first piece", proved, kTolSingle,
      [] {
        return Evaluation{hfun::four_piece_split().P1, -kSqrt3 * L3() - 2 * kPi / 3 * log3(), ""};
      });
  add("split4-p2", "int log(x/xbar) dpsi1 = -2 pi m(1+X+1/X+Y+1/Y)", "second piece", proved, kTolSingle,
      [] { return Evaluation{hfun::four_piece_split().P2, -2 * kPi * m1_torus(), ""}; });
  add("split4-p3", "int log(x/xbar) dpsi2 = 2 pi m(A), A the figure-eight A-polynomial", "third piece", proved,
      kTolSingle,
      [] { return Evaluation{hfun::four_piece_split().P3, 2 * kPi * mahler::mahler_2var(mahler::knot_a_poly()), ""}; });
  add("split4-p4", "int log(x xbar) dpsi2 = 2 pi log 3 + pi I(4)", "fourth piece", proved, kTolSingle, [] {
    return Evaluation{hfun::four_piece_split().P4, 2 * kPi * log3() + kPi * hyper::I_integral(4), ""};
  });
  add("split4-assembly", "(assembled pieces - 2 pi sqrt3 L(chi_-3,2) - (4 pi^2/3) log 3)/45 = (4 pi^2/15) m(1+X+1/X+Y+1/Y)",
      "four-piece reduction", proved, kTolChained, [] {
        const Real assembled = hfun::four_piece_split().assembled();
        return Evaluation{(assembled - 2 * kPi * kSqrt3 * L3() - 4 * pi2() / 3 * log3()) / 45,
                          4 * pi2() / 15 * m1_torus(), ""};
      });
  add("trig-xxbar", "max residual of x xbar and x + xbar in the t = sqrt3 tan(theta) forms", "x xbar and x + xbar",
      proved, Real(1e-12), [] {
        return residual(max_abs_over({0.6, 0.8, 1.0, 1.2, 1.4, 1.5}, [](Real theta) {
          const Real t = kSqrt3 * std::tan(theta);
          const auto p = hfun::curve_point(t);
          const Real s = std::sin(theta - kPi / 6);
          const Real prod = p.x * p.xbar - Real(16) / 9 * s * s * s * s;
          const Real sum = p.x + p.xbar - Real(16) / 3 * s * s * std::cos(theta - kPi / 6) * std::sin(theta);
          return std::max(std::abs(prod), std::abs(sum));
        }));
      });

  // I(y).
  add("iy-threeway", "max over y in {1, 1.5, 4, 25} of the spread between the integral, 4F3/3F2 and m(alpha) forms",
      "I(y) closed forms", proved, kTolSingle, [] {
        return residual(max_abs_over({1.0, 1.5, 4.0, 25.0}, [](Real y) {
          const Real i = hyper::I_integral(y);
          return std::max(std::abs(i - hyper::I_hyper(y)), std::abs(i - hyper::I_mahler(y)));
        }));
      });
  add("iy-deriv", "max over y in {1.5, 2, 4, 10} of |((y+1)/y) 2F1(1/2,1/2;1;1/y^2) - y I'(y) - 1|",
      "derivative of I(y)", proved, Real(1e-5), [] {
        return residual(max_abs_over({1.5, 2.0, 4.0, 10.0}, [](Real y) {
          const Real f = hyper::pfq({{0.5, 0.5}, {1.0}, 1 / (y * y)});
          return (y + 1) / y * f - y * I_prime(y) - 1;
        }));
      });
  add("i4-lalin", "I(4) = m(16) - m(1) = 10 m(1)", "I(4) and the m(1)-m(16) relation", proved, kTolSingle,
      [] { return Evaluation{hyper::I_integral(4), 10 * hyper::m_alpha(1), ""}; });
  add("knot", "pi m(A) = (3 sqrt3/2) L(chi_-3, 2), A the figure-eight A-polynomial", "figure-eight knot measure",
      proved, kTolSingle, [] {
        return Evaluation{kPi * mahler::mahler_2var(mahler::knot_a_poly()), Real(1.5) * kSqrt3 * L3(), ""};
      });

  // F = L for integer A.
  const std::pair<std::pair<int, int>, const char*> pairs[] = {
      {{1, 1}, "6^4"},    {{1, 3}, "3^2,9^2"},  {{2, 3}, "2,4,6,12"}, {{3, 5}, "1,3,5,15"},
      {{2, 7}, "1,2,7,14"}, {{1, 5}, "2^2,10^2"}, {{1, 11}, "1^2,11^2"},
  };
  for (const auto& [bc, spec] : pairs) {
    const int B = bc.first;
    const int C = bc.second;
    const std::string product = spec;
    add("FeqL-" + std::to_string(B) + "-" + std::to_string(C),
        "F(" + std::to_string(B) + "," + std::to_string(C) + ") = L(f,2) for the eta product " + product,
        "lattice sum equals L-value for integer A", proved, kTolSingle, [B, C, product] {
          return Evaluation{F(B, C), lfun::L_eta_cusp(EtaProduct::parse(product)), ""};
        });
  }

  add("main-theorem", "L(eta(q)eta(q^3)eta(q^5)eta(q^15), 2) = (4 pi^2/15) m(1+X+1/X+Y+1/Y)", "main theorem", proved,
      kTolSingle, [] { return Evaluation{L15(), 4 * pi2() / 15 * m1_torus(), ""}; });
  add("deninger", "m(1+X+1/X+Y+1/Y) = (15/(4 pi^2)) F(3,5)", "conductor-15 Mahler measure identity", proved,
      kTolSingle, [] { return Evaluation{m1_torus(), 15 / (4 * pi2()) * F(3, 5), ""}; });

  // Conjectures.
  add("conj-F15", "24F(1,5) = -2H(1/15)/25 + 2H(5/3) + 4H(4/15)/25 - 4H(20/3) + (3/5)H(1/3)",
      "F(1,5) in terms of H (numerical)", conj, kTolConjectural, [] {
        return Evaluation{24 * F(1, 5), -2 * H(1.0 / 15) / 25 + 2 * H(5.0 / 3) + 4 * H(4.0 / 15) / 25 -
                                            4 * H(20.0 / 3) + Real(0.6) * H(1.0 / 3),
                          ""};
      });
  add("conj-F11b", "9F(1,1) = 2H(1/3) - 2H(4/3)", "second F(1,1) form (numerical)", conj, kTolConjectural,
      [] { return Evaluation{9 * F(1, 1), 2 * H(1.0 / 3) - 2 * H(4.0 / 3), ""}; });
  add("conj-5H1", "5H(1) = 4H(4) + H(1/4)/4", "H(1) relation (numerical)", conj, kTolConjectural,
      [] { return Evaluation{5 * H(1), 4 * H(4) + H(0.25) / 4, ""}; });
  add("conj-3H2", "3H(2) = 4H(2/3) + H(1/18)/4", "H(2) relation (numerical)", conj, kTolConjectural,
      [] { return Evaluation{3 * H(2), 4 * H(2.0 / 3) + H(1.0 / 18) / 4, ""}; });

  return r;
}

}  // namespace

std::string to_string(Status s) { return s == Status::proved ? "proved" : "conjectural"; }

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = build();
  return checks;
}

std::vector<std::string> list_checks() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

const CheckDef* find_check(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace qm::verify
