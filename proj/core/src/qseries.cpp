#include "qmahler/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <type_traits>

#include "qmahler/errors.hpp"

namespace qm::qseries {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_of(Exponent e) { return floor_div(e.numerator(), e.denominator()); }

Exponent key_to_exponent(std::int64_t k, std::int64_t den) { return Exponent(k, den); }

// Key of exponent e on grid den, or nullopt when e is off-grid.
std::optional<std::int64_t> exponent_to_key(Exponent e, std::int64_t den) {
  const Exponent scaled = e * den;
  if (scaled.denominator() != 1) return std::nullopt;
  return scaled.numerator();
}

}  // namespace

std::int64_t common_grid(std::int64_t d1, std::int64_t d2) {
  const std::int64_t l = std::lcm(d1, d2);
  if (l > kMaxGrid) {
    throw GridError("grid denominator " + std::to_string(l) + " exceeds bound " +
                    std::to_string(kMaxGrid));
  }
  return l;
}

QExpansion::QExpansion(std::int64_t den, Exponent order) : den_(den), order_(order) {
  if (den <= 0) throw GridError("grid denominator must be positive");
  if (den > kMaxGrid) throw GridError("grid denominator exceeds bound");
}

QExpansion QExpansion::monomial(const mpq_class& c, Exponent exponent, Exponent order,
                                std::int64_t den) {
  const std::int64_t d = common_grid(den, exponent.denominator());
  QExpansion s(d, order);
  if (exponent <= order && c != 0) s.terms_.emplace(*exponent_to_key(exponent, d), c);
  return s;
}

std::int64_t QExpansion::key_bound() const { return floor_of(order_ * den_); }

std::optional<Exponent> QExpansion::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return key_to_exponent(terms_.begin()->first, den_);
}

mpq_class QExpansion::coefficient(Exponent e) const {
  if (e > order_) {
    throw GridError("coefficient of q^" + to_string(e) + " requested above truncation order " +
                    to_string(order_));
  }
  const auto key = exponent_to_key(e, den_);
  if (!key) return 0;
  const auto it = terms_.find(*key);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void QExpansion::set_coefficient(Exponent e, const mpq_class& c) {
  if (e > order_) throw GridError("cannot set a coefficient above the truncation order");
  if (!exponent_to_key(e, den_)) *this = regrid(common_grid(den_, e.denominator()));
  const std::int64_t key = *exponent_to_key(e, den_);
  if (c == 0) {
    terms_.erase(key);
  } else {
    terms_[key] = c;
  }
}

QExpansion QExpansion::regrid(std::int64_t den) const {
  if (den % den_ != 0) throw GridError("regrid target is not a multiple of the current grid");
  if (den > kMaxGrid) throw GridError("grid denominator exceeds bound");
  const std::int64_t f = den / den_;
  QExpansion out(den, order_);
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k * f, c);
  return out;
}

void QExpansion::reduce_grid() {
  std::int64_t g = den_;
  for (const auto& [k, c] : terms_) {
    g = std::gcd(g, k);
    if (g == 1) return;
  }
  if (g <= 1) return;
  Terms reduced;
  for (auto& [k, c] : terms_) reduced.emplace_hint(reduced.end(), k / g, std::move(c));
  terms_ = std::move(reduced);
  den_ /= g;
}

QExpansion QExpansion::truncated(Exponent n) const {
  QExpansion out(den_, std::min(order_, n));
  const std::int64_t bound = out.key_bound();
  for (const auto& [k, c] : terms_) {
    if (k > bound) break;
    out.terms_.emplace_hint(out.terms_.end(), k, c);
  }
  return out;
}

QExpansion QExpansion::substitute(Exponent r) const {
  if (r <= 0) throw GridError("substitution exponent must be positive");
  // k/den * p/s = (k p)/(den s)
  const std::int64_t p = r.numerator();
  const std::int64_t s = r.denominator();
  std::int64_t den = den_ * s;
  std::int64_t g = std::gcd(den, p);
  for (const auto& [k, c] : terms_) {
    if (g == 1) break;
    g = std::gcd(g, k * p);
  }
  den /= g;
  if (den > kMaxGrid) throw GridError("substitution leaves the representable grid");
  QExpansion out(den, order_ * r);
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k * p / g, c);
  return out;
}

QExpansion QExpansion::pow(int n) const {
  if (n < 0) return constant(1, order_) / pow(-n);
  QExpansion result = constant(1, order_);
  QExpansion base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Real QExpansion::evaluate(Real q) const {
  const Real lq = std::log(q);
  Real sum = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    sum += to_real(it->second) * std::exp(lq * static_cast<Real>(it->first) / static_cast<Real>(den_));
  }
  return sum;
}

bool QExpansion::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

QExpansion& QExpansion::operator+=(const QExpansion& rhs) {
  const std::int64_t d = common_grid(den_, rhs.den_);
  if (d != den_) *this = regrid(d);
  const std::int64_t f = d / rhs.den_;
  order_ = std::min(order_, rhs.order_);
  const std::int64_t bound = key_bound();
  while (!terms_.empty() && terms_.rbegin()->first > bound) terms_.erase(std::prev(terms_.end()));
  for (const auto& [k, c] : rhs.terms_) {
    const std::int64_t key = k * f;
    if (key > bound) break;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  reduce_grid();
  return *this;
}

QExpansion& QExpansion::operator-=(const QExpansion& rhs) { return *this += -rhs; }

QExpansion& QExpansion::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

QExpansion operator*(const QExpansion& lhs, const QExpansion& rhs) {
  const std::int64_t d = common_grid(lhs.den_, rhs.den_);
  Exponent order = std::min(lhs.order_, rhs.order_);
  const auto l1 = lhs.leading_exponent();
  const auto l2 = rhs.leading_exponent();
  if (l1 && l2) order = std::min({order, lhs.order_ + *l2, rhs.order_ + *l1});
  QExpansion out(d, order);
  const std::int64_t bound = out.key_bound();
  const std::int64_t f1 = d / lhs.den_;
  const std::int64_t f2 = d / rhs.den_;
  mpq_class prod;
  for (const auto& [k1, c1] : lhs.terms_) {
    const std::int64_t a = k1 * f1;
    for (const auto& [k2, c2] : rhs.terms_) {
      const std::int64_t key = a + k2 * f2;
      if (key > bound) break;
      prod = c1 * c2;
      auto [it, inserted] = out.terms_.try_emplace(key, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  }
  out.reduce_grid();
  return out;
}

QExpansion operator/(const QExpansion& lhs, const QExpansion& rhs) {
  const auto lead_g = rhs.leading_exponent();
  if (!lead_g) throw DivisionError("division by a series with no trusted leading coefficient");
  const std::int64_t d = common_grid(lhs.den_, rhs.den_);
  const QExpansion num = lhs.regrid(d);
  const QExpansion div = rhs.regrid(d);

  Exponent order = std::min(lhs.order_, rhs.order_);
  order = std::min(order, lhs.order_ - *lead_g);
  if (const auto lead_f = lhs.leading_exponent()) {
    order = std::min(order, rhs.order_ - *lead_g + (*lead_f - *lead_g));
  }
  QExpansion out(d, order);
  if (num.terms_.empty()) return out;

  const std::int64_t g0_key = div.terms_.begin()->first;
  const mpq_class& g0 = div.terms_.begin()->second;
  const std::int64_t q_bound = out.key_bound();

  QExpansion::Terms rem;
  for (const auto& [k, c] : num.terms_) {
    if (k - g0_key > q_bound) break;
    rem.emplace_hint(rem.end(), k, c);
  }
  mpq_class t;
  while (!rem.empty()) {
    const auto first = rem.begin();
    const std::int64_t qk = first->first - g0_key;
    if (qk > q_bound) break;
    t = first->second / g0;
    rem.erase(first);
    for (auto it = std::next(div.terms_.begin()); it != div.terms_.end(); ++it) {
      const std::int64_t key = qk + it->first;
      if (key - g0_key > q_bound) break;
      auto [r, inserted] = rem.try_emplace(key, -t * it->second);
      if (!inserted) {
        r->second -= t * it->second;
        if (r->second == 0) rem.erase(r);
      }
    }
    out.terms_.emplace_hint(out.terms_.end(), qk, t);
  }
  out.reduce_grid();
  return out;
}

QExpansion eta_series(Exponent scale, std::int64_t den, Exponent order) {
  if (scale <= 0) throw GridError("eta scale must be positive");
  QExpansion s(den, order);
  // (6n+1)^2 runs over 1, 25, 49, 121, ... for n = 0, -1, 1, -2, ...
  for (std::int64_t n = 0;; ++n) {
    bool any = false;
    for (const std::int64_t m : {n, -n - 1}) {
      const std::int64_t odd = 6 * m + 1;
      const Exponent e = scale * Exponent(odd * odd, 24);
      if (e > order) continue;
      any = true;
      if (!exponent_to_key(e, den)) {
        throw GridError("eta exponent " + to_string(e) + " is not on grid 1/" + std::to_string(den));
      }
      s.set_coefficient(e, (m % 2 == 0) ? 1 : -1);
    }
    if (!any) break;
  }
  return s;
}

QExpansion theta_a_series(std::int64_t order) {
  QExpansion s(1, Exponent(order));
  const auto bound = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(order))));
  std::vector<std::int64_t> counts(order + 1, 0);
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      const std::int64_t e = m * m + m * n + n * n;
      if (e <= order) ++counts[e];
    }
  }
  for (std::int64_t e = 0; e <= order; ++e) {
    if (counts[e] != 0) s.set_coefficient(Exponent(e), counts[e]);
  }
  return s;
}

QExpansion b_lattice_series(std::int64_t order) {
  // Re of omega^(m-n) is 1 when m = n (mod 3) and -1/2 otherwise; the
  // imaginary parts cancel under (m,n) -> (n,m).
  const auto bound = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(order)))) + 1;
  std::vector<std::int64_t> twice(order + 1, 0);
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      const std::int64_t e = m * m + m * n + n * n;
      if (e > order) continue;
      twice[e] += (((m - n) % 3) == 0) ? 2 : -1;
    }
  }
  QExpansion s(1, Exponent(order));
  for (std::int64_t e = 0; e <= order; ++e) {
    if (twice[e] != 0) s.set_coefficient(Exponent(e), mpq_class(twice[e], 2));
  }
  return s;
}

QExpansion c_lattice_series(std::int64_t order) {
  // (m+1/3)^2 + (m+1/3)(n+1/3) + (n+1/3)^2 = m^2 + mn + n^2 + m + n + 1/3
  const auto bound = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(order + 1)))) + 2;
  std::vector<std::int64_t> counts(order + 1, 0);
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      const std::int64_t e = m * m + m * n + n * n + m + n;
      if (e >= 0 && e < order) ++counts[e];
    }
  }
  QExpansion s(3, Exponent(order));
  for (std::int64_t e = 0; e <= order; ++e) {
    if (counts[e] != 0) s.set_coefficient(Exponent(e) + Exponent(1, 3), counts[e]);
  }
  return s;
}

QExpansion b_series(std::int64_t order) {
  const Exponent n(order + 1);
  const QExpansion e1 = eta_series(Exponent(1), n);
  const QExpansion e3 = eta_series(Exponent(3), n);
  return (e1.pow(3) / e3).truncated(Exponent(order));
}

QExpansion c_series(std::int64_t order) {
  const Exponent n(order + 1);
  const QExpansion e1 = eta_series(Exponent(1), n);
  const QExpansion e3 = eta_series(Exponent(3), n);
  return (mpq_class(3) * e3.pow(3) / e1).truncated(Exponent(order));
}

namespace {

std::int64_t inner_order(Exponent r, Exponent order) {
  return floor_of(order / r) + 1;
}

}  // namespace

QExpansion a_at(Exponent r, Exponent order) {
  return theta_a_series(inner_order(r, order)).substitute(r).truncated(order);
}

QExpansion b_at(Exponent r, Exponent order) {
  return b_series(inner_order(r, order)).substitute(r).truncated(order);
}

QExpansion c_at(Exponent r, Exponent order) {
  return c_series(inner_order(r, order)).substitute(r).truncated(order);
}

IdentityCheck assert_series_identity(const QExpansion& lhs, const QExpansion& rhs, Exponent n) {
  if (lhs.order() < n || rhs.order() < n) {
    throw GridError("identity check to q^" + to_string(n) + " needs both sides truncated at least there");
  }
  const QExpansion diff = (lhs - rhs).truncated(n);
  IdentityCheck result;
  for (const auto& [k, c] : diff.terms()) {
    if (c == 0) continue;
    ++result.discrepancies;
    if (!result.first_exponent) {
      const Exponent e(k, diff.den());
      result.first_exponent = e;
      result.lhs_coefficient = lhs.coefficient(e);
      result.rhs_coefficient = rhs.coefficient(e);
    }
  }
  result.holds = result.discrepancies == 0;
  return result;
}

std::string to_string(Exponent e) {
  if (e.denominator() == 1) return std::to_string(e.numerator());
  return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

Real to_real(const mpq_class& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return q.get_d();
  } else {
    mpf_class f(q, 256);
    std::ostringstream os;
    mp_exp_t exp10 = 0;
    const std::string digits = f.get_str(exp10, 10, 40);
    if (digits.empty()) return 0;
    const bool neg = digits.front() == '-';
    os << (neg ? "-0." : "0.") << (neg ? digits.substr(1) : digits) << "e" << exp10;
    return std::stold(os.str());
  }
}

std::string render_tsv(const QExpansion& s) {
  std::ostringstream os;
  for (const auto& [k, c] : s.terms()) {
    os << to_string(Exponent(k, s.den())) << '\t' << c.get_str() << '\n';
  }
  return os.str();
}

}  // namespace qm::qseries
