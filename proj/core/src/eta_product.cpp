#include "qmahler/eta_product.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "qmahler/errors.hpp"
#include "qmahler/eta_num.hpp"

namespace qm::qseries {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("bad eta-product spec '" + whole + "': '" + s + "' is not an integer");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

EtaProduct::EtaProduct(std::vector<EtaFactor> factors) {
  for (const EtaFactor& f : factors) {
    if (f.scale <= 0) throw DomainError("eta product: scales must be positive");
  }
  std::sort(factors.begin(), factors.end(),
            [](const EtaFactor& a, const EtaFactor& b) { return a.scale < b.scale; });
  for (const EtaFactor& f : factors) {
    if (!factors_.empty() && factors_.back().scale == f.scale) {
      factors_.back().power += f.power;
    } else {
      factors_.push_back(f);
    }
  }
  std::erase_if(factors_, [](const EtaFactor& f) { return f.power == 0; });
}

EtaProduct EtaProduct::parse(const std::string& text) {
  std::vector<EtaFactor> factors;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw DomainError("bad eta-product spec '" + text + "': empty factor");
    const auto caret = item.find('^');
    const std::string scale_text = trim(item.substr(0, caret));
    const int power = caret == std::string::npos
                          ? 1
                          : static_cast<int>(parse_int(trim(item.substr(caret + 1)), text));
    const auto slash = scale_text.find('/');
    const std::int64_t num = parse_int(trim(scale_text.substr(0, slash)), text);
    const std::int64_t den =
        slash == std::string::npos ? 1 : parse_int(trim(scale_text.substr(slash + 1)), text);
    if (num <= 0 || den <= 0) throw DomainError("bad eta-product spec '" + text + "': scale <= 0");
    factors.push_back({Exponent(num, den), power});
  }
  if (factors.empty()) throw DomainError("bad eta-product spec: no factors");
  return EtaProduct(std::move(factors));
}

int EtaProduct::total_power() const {
  int w = 0;
  for (const EtaFactor& f : factors_) w += f.power;
  return w;
}

Exponent EtaProduct::leading_exponent() const {
  Exponent e(0);
  for (const EtaFactor& f : factors_) e += f.scale * f.power / 24;
  return e;
}

bool EtaProduct::is_cusp_shape() const { return total_power() == 4 && leading_exponent() > 0; }

QExpansion EtaProduct::series(Exponent order) const {
  std::int64_t den = 24;
  Exponent margin(1);
  for (const EtaFactor& f : factors_) {
    den = common_grid(den, 24 * f.scale.denominator());
    margin += 2 * std::abs(f.power) * f.scale / 24;
  }
  QExpansion result = QExpansion::constant(1, order + margin);
  for (const EtaFactor& f : factors_) {
    result = result * eta_series(f.scale, den, order + margin).pow(f.power);
  }
  if (result.order() < order) throw GridError("eta product: truncation margin too small");
  return result.truncated(order);
}

Real EtaProduct::log_value(Real h) const {
  Real s = 0;
  for (const EtaFactor& f : factors_) {
    const Real scale = static_cast<Real>(f.scale.numerator()) / static_cast<Real>(f.scale.denominator());
    s += f.power * log_eta(scale * h);
  }
  return s;
}

std::string EtaProduct::to_string() const {
  std::string out;
  for (const EtaFactor& f : factors_) {
    if (!out.empty()) out += ',';
    out += qseries::to_string(f.scale);
    if (f.power != 1) out += '^' + std::to_string(f.power);
  }
  return out;
}

}  // namespace qm::qseries
