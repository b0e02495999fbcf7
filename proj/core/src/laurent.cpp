#include "qmahler/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "qmahler/errors.hpp"

namespace qm::mahler {

namespace {

void check_exponent(long long e, std::size_t offset) {
  if (e > kMaxExponent || e < -kMaxExponent) {
    throw SyntaxError("exponent " + std::to_string(e) + " exceeds the bound " +
                          std::to_string(kMaxExponent),
                      offset);
  }
}

}  // namespace

LaurentPoly2::LaurentPoly2(const mpq_class& c) { add_term({0, 0}, c); }

LaurentPoly2 LaurentPoly2::monomial(const mpq_class& c, int i, int j) {
  LaurentPoly2 p;
  p.add_term({i, j}, c);
  return p;
}

void LaurentPoly2::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class LaurentPoly2::coefficient(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool LaurentPoly2::depends_on_x() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.first != 0; });
}

bool LaurentPoly2::depends_on_y() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.second != 0; });
}

int LaurentPoly2::min_x() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) m = std::min(m, k.first);
  return m;
}
int LaurentPoly2::max_x() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}
int LaurentPoly2::min_y() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}
int LaurentPoly2::max_y() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

std::complex<Real> LaurentPoly2::evaluate(std::complex<Real> x, std::complex<Real> y) const {
  std::complex<Real> sum = 0;
  for (const auto& [k, c] : terms_) sum += static_cast<Real>(c.get_d()) * std::pow(x, k.first) * std::pow(y, k.second);
  return sum;
}

LaurentPoly2 LaurentPoly2::swapped() const {
  LaurentPoly2 p;
  for (const auto& [k, c] : terms_) p.add_term({k.second, k.first}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::x_inverted() const {
  LaurentPoly2 p;
  for (const auto& [k, c] : terms_) p.add_term({-k.first, k.second}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::shifted(int a, int b) const {
  LaurentPoly2 p;
  for (const auto& [k, c] : terms_) p.add_term({k.first + a, k.second + b}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::reciprocal() const {
  if (terms_.size() != 1) throw DomainError("only a single-term Laurent polynomial can be inverted");
  const auto& [k, c] = *terms_.begin();
  return monomial(1 / c, -k.first, -k.second);
}

LaurentPoly2 LaurentPoly2::pow(int n) const {
  if (n < 0) return reciprocal().pow(-n);
  LaurentPoly2 result(1);
  LaurentPoly2 base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly2 operator-(const LaurentPoly2& a) {
  LaurentPoly2 p;
  for (const auto& [k, c] : a.terms_) p.add_term(k, -c);
  return p;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 p;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) p.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return p;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto var = [](char name, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return std::string(1, name);
    return std::string(1, name) + "^" + std::to_string(e);
  };
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    std::string mono = var('x', k.first);
    const std::string ypart = var('y', k.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    std::string coeff;
    if (mag.get_den() != 1) {
      coeff = "(" + mag.get_num().get_str() + "/" + mag.get_den().get_str() + ")";
    } else if (mag != 1 || mono.empty()) {
      coeff = mag.get_num().get_str();
    }
    std::string term = coeff;
    if (!coeff.empty() && !mono.empty()) term += "*";
    term += mono;
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---- parser ----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  LaurentPoly2 parse() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError("empty polynomial", pos_);
    LaurentPoly2 p = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly2 expr() {
    LaurentPoly2 p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  LaurentPoly2 term() {
    LaurentPoly2 p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        const LaurentPoly2 d = unary();
        if (d.is_zero()) throw SyntaxError("division by zero", at);
        if (d.size() != 1) throw SyntaxError("division by a non-monomial", at);
        p = p * d.reciprocal();
      } else {
        return p;
      }
    }
  }

  LaurentPoly2 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly2 power() {
    skip();
    const std::size_t base_at = pos_;
    LaurentPoly2 b = base();
    if (!accept('^')) return b;
    skip();
    const std::size_t exp_at = pos_;
    const long long e = signed_int();
    check_exponent(e, exp_at);
    if (e < 0 && b.size() != 1) throw SyntaxError("negative power of a non-monomial", base_at);
    LaurentPoly2 r = b.pow(static_cast<int>(e));
    for (const auto& [k, c] : r.terms()) {
      if (std::abs(k.first) > kMaxExponent || std::abs(k.second) > kMaxExponent) {
        throw SyntaxError("resulting exponent exceeds the bound " + std::to_string(kMaxExponent), exp_at);
      }
    }
    return r;
  }

  long long signed_int() {
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw SyntaxError("expected an integer exponent", pos_ < s_.size() ? pos_ : start);
    }
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) throw SyntaxError("exponent too large", start);
      ++pos_;
    }
    return negative ? -v : v;
  }

  LaurentPoly2 base() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly2(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return LaurentPoly2::monomial(1, 1, 0);
    }
    if (c == 'y' || c == 'Y') {
      ++pos_;
      return LaurentPoly2::monomial(1, 0, 1);
    }
    if (c == '(') {
      ++pos_;
      LaurentPoly2 p = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return p;
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

LaurentPoly2 parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace qm::mahler
