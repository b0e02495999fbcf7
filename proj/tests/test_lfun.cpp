#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "qmahler/errors.hpp"
#include "qmahler/hfun.hpp"
#include "qmahler/hyper.hpp"
#include "qmahler/lfun.hpp"

using namespace qm;
using namespace qm::lfun;

namespace {

Exponent E(std::int64_t n, std::int64_t d = 1) { return Exponent(n, d); }

// Abel-smoothed quadruple sum over |6n_i + 1| <= 301 of
// (-1)^{sum n_i} e^{-eps Q} / Q^2, Q = a^2 + 3b^2 + 5c^2 + 15d^2, grouped as
// u + 5v with u, v running over the weighted values of a^2 + 3b^2.
double smoothed_sum_35(double eps) {
  std::map<long, long> weight;
  for (int n1 = -50; n1 <= 50; ++n1) {
    for (int n2 = -50; n2 <= 50; ++n2) {
      const long a = 6 * n1 + 1;
      const long b = 6 * n2 + 1;
      weight[a * a + 3 * b * b] += ((n1 + n2) & 1) ? -1 : 1;
    }
  }
  std::vector<std::pair<double, double>> w;
  for (const auto& [u, c] : weight) {
    if (c != 0) w.emplace_back(static_cast<double>(u), static_cast<double>(c));
  }
  double s = 0;
  for (const auto& [u, cu] : w) {
    for (const auto& [v, cv] : w) {
      const double Q = u + 5 * v;
      s += cu * cv * std::exp(-eps * Q) / (Q * Q);
    }
  }
  return s;
}

// Recorded from 2 S(4e-4) - S(8e-4).
constexpr double kBruteSum35 = 0.0011483944;

// Coefficients of eta^4(q^6) = q prod (1 - q^{6n})^4 for n = 6m + 1 <= N, by
// multiplying the Jacobi cube series with the pentagonal series.
std::vector<double> conductor36_coeffs(int N) {
  const int M = (N - 1) / 6;
  std::vector<double> p3(M + 1, 0);
  std::vector<double> p1(M + 1, 0);
  std::vector<double> p4(M + 1, 0);
  for (long k = 0; k * (k + 1) / 2 <= M; ++k) p3[k * (k + 1) / 2] += ((k & 1) ? -1 : 1) * (2 * k + 1);
  for (long k = -2000; k <= 2000; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e <= M) p1[e] += (k & 1) ? -1 : 1;
  }
  for (int i = 0; i <= M; ++i) {
    if (p3[i] == 0) continue;
    for (int j = 0; i + j <= M; ++j) {
      if (p1[j] != 0) p4[i + j] += p3[i] * p1[j];
    }
  }
  return p4;  // p4[m] is a_{6m+1}
}

const std::pair<std::pair<int, int>, const char*> kPairs[] = {
    {{1, 1}, "6^4"},      {{1, 3}, "3^2,9^2"},  {{2, 3}, "2,4,6,12"}, {{3, 5}, "1,3,5,15"},
    {{2, 7}, "1,2,7,14"}, {{1, 5}, "2^2,10^2"}, {{1, 11}, "1^2,11^2"},
};

}  // namespace

TEST(LatticeSpec, DerivedA) {
  const auto s = lattice_spec(E(3), E(5));
  EXPECT_EQ(s.A, E(1));
  EXPECT_TRUE(s.integer_A);
  ASSERT_TRUE(s.cusp_form().has_value());
  EXPECT_EQ(*s.cusp_form(), EtaProduct::parse("1,3,5,15"));
  const auto t = lattice_spec(E(3), E(7));
  EXPECT_EQ(t.A, E(3, 4));
  EXPECT_FALSE(t.integer_A);
  EXPECT_FALSE(t.cusp_form().has_value());
  EXPECT_EQ(lattice_spec(E(3, 2), E(7)).A, E(6, 5));
  EXPECT_EQ(lattice_spec(E(6), E(7)).A, E(3, 7));
  EXPECT_THROW(lattice_spec(E(0), E(1)), DomainError);
  for (const auto& [bc, spec] : kPairs) {
    const auto p = lattice_spec(E(bc.first), E(bc.second));
    ASSERT_TRUE(p.integer_A);
    EXPECT_EQ(*p.cusp_form(), EtaProduct::parse(spec)) << spec;
  }
}

TEST(LEtaCusp, Conductor27IsHOfOne) {
  EXPECT_NEAR(L_eta_cusp(EtaProduct::parse("3^2,9^2")), -hfun::H_q(1.0) / 9, 1e-8);
}

TEST(LEtaCusp, Conductor36IsF11) { EXPECT_NEAR(L_eta_cusp(EtaProduct::parse("6^4")), F_lattice(E(1), E(1)), 1e-8); }

TEST(LEtaCusp, Conductor15IsMahlerM1) {
  EXPECT_NEAR(L_eta_cusp(EtaProduct::parse("1,3,5,15")), 4 * kPi * kPi / 15 * hyper::m_alpha(1), 1e-8);
}

TEST(LEtaCusp, Preconditions) {
  EXPECT_THROW(L_eta_cusp(EtaProduct::parse("1^3")), DomainError);
  EXPECT_THROW(L_eta_cusp(EtaProduct::parse("1^8,2^-4")), DomainError);
}

TEST(FLattice, Examples) {
  EXPECT_NEAR(F_lattice(E(1), E(3)), -hfun::H_q(1.0) / 9, 1e-8);
  const double rhs = -hfun::H_q(1.0 / 15) / 25 - hfun::H_q(5.0 / 3) - 4 * kPi * kPi / 15 * std::log(3.0);
  EXPECT_NEAR(9 * F_lattice(E(3), E(5)), rhs, 1e-7);
}

TEST(FLattice, BruteForceOracle) {
  const double s1 = smoothed_sum_35(4e-4);
  const double s2 = smoothed_sum_35(8e-4);
  EXPECT_NEAR(2 * s1 - s2, kBruteSum35, 1e-9);
  // F carries the normalisation (B+1)^2 (C+1)^2 = 576.
  EXPECT_NEAR(F_lattice(E(3), E(5)), 576 * kBruteSum35, 1e-2);
}

TEST(FLattice, EqualsLForIntegerA) {
  for (const auto& [bc, spec] : kPairs) {
    EXPECT_NEAR(F_lattice(E(bc.first), E(bc.second)), L_eta_cusp(EtaProduct::parse(spec)), 1e-8) << spec;
  }
}

TEST(FLattice, Symmetric) {
  EXPECT_NEAR(F_lattice(E(3), E(5)), F_lattice(E(5), E(3)), 1e-10);
  EXPECT_NEAR(F_lattice(E(3, 2), E(7)), F_lattice(E(7), E(3, 2)), 1e-10);
  EXPECT_NEAR(F_lattice(E(6), E(7)), F_lattice(E(7), E(6)), 1e-10);
}

TEST(FLattice, RealOverloadMatches) {
  EXPECT_NEAR(F_lattice(1.5, 7.0), F_lattice(E(3, 2), E(7)), 1e-13);
  EXPECT_THROW(F_lattice(-1.0, 2.0), DomainError);
}

TEST(EtaCoeffs, Conductor11) {
  const auto c = eta_coeffs(EtaProduct::parse("1^2,11^2"), 6);
  ASSERT_EQ(c.size(), 6U);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], -2);
  EXPECT_EQ(c[2], -1);
}

TEST(EtaCoeffs, Conductor36) {
  const auto c = eta_coeffs(EtaProduct::parse("6^4"), 6);
  EXPECT_EQ(c[0], 1);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(c[n - 1], 0) << n;
}

TEST(EtaCoeffs, Conductor15Leading) { EXPECT_EQ(eta_coeffs(EtaProduct::parse("1,3,5,15"), 1)[0], 1); }

TEST(EtaCoeffs, MatchesProductOracle) {
  const auto exact = eta_coeffs(EtaProduct::parse("6^4"), 301);
  const auto oracle = conductor36_coeffs(301);
  for (int n = 1; n <= 301; ++n) {
    const double expected = (n % 6 == 1) ? oracle[(n - 1) / 6] : 0;
    EXPECT_EQ(exact[n - 1].get_d(), expected) << n;
  }
}

TEST(EtaCoeffs, NonIntegralRejected) { EXPECT_THROW(eta_coeffs(EtaProduct::parse("1^4"), 5), DomainError); }

TEST(LEtaCusp, CesaroPartialSumConductor36) {
  const int N = 100000;
  const auto a = conductor36_coeffs(N);
  double s = 0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    const double n = 6.0 * static_cast<double>(m) + 1;
    s += a[m] / (n * n) * (1 - n / N);
  }
  EXPECT_NEAR(s, L_eta_cusp(EtaProduct::parse("6^4")), 1e-3);
}
