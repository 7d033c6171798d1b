#include "whakit/scalar.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace whakit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::IdempotentFailure: return "IdempotentFailure";
    case ErrorKind::Uncertified: return "Uncertified";
    case ErrorKind::ComultiplicationEscapesCarrier: return "ComultiplicationEscapesCarrier";
    case ErrorKind::CoactionEscapesCarrier: return "CoactionEscapesCarrier";
    case ErrorKind::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case ErrorKind::XiNotBijective: return "XiNotBijective";
    case ErrorKind::InverseConstructionFailed: return "InverseConstructionFailed";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::BlockDecompositionFailed: return "BlockDecompositionFailed";
    case ErrorKind::GeneratorNotFound: return "GeneratorNotFound";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division by a monic divisor; the remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  Poly q(num.size() - dn, Integer(0));
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    if (c == 0) continue;
    q[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error(ErrorKind::InvalidInput, "cyclotomic division left a remainder");
  trim(q);
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclotomic_polynomial requires N >= 1");
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  Poly den{Integer(1)};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  Poly phi = poly_div_exact(num, den);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, phi);
  return phi;
}

unsigned totient(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

/// Per-order reduction data: x^k mod Phi_N for k < 2 deg - 1.
class CyclotomicData {
 public:
  explicit CyclotomicData(unsigned order) : order_(order) {
    Poly phi = cyclotomic_polynomial(order);
    degree_ = static_cast<unsigned>(phi.size() - 1);
    const std::size_t powers = std::max<std::size_t>(2 * degree_, order_ + 1);
    reduced_.assign(powers, std::vector<Rational>(degree_, Rational(0)));
    std::vector<Rational> cur(degree_, Rational(0));
    cur[0] = 1;
    if (degree_ == 1 && order_ == 1) cur[0] = 1;
    for (std::size_t k = 0; k < powers; ++k) {
      reduced_[k] = cur;
      // multiply by x, then fold the x^degree term
      Rational top = cur[degree_ - 1];
      for (unsigned i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (unsigned i = 0; i < degree_; ++i) cur[i] -= top * Rational(phi[i]);
    }
  }

  static const CyclotomicData& get(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CyclotomicData>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[order];
    if (!slot) slot = std::make_unique<CyclotomicData>(order);
    return *slot;
  }

  unsigned order() const { return order_; }
  unsigned degree() const { return degree_; }
  const std::vector<Rational>& power(std::size_t k) const { return reduced_[k]; }

 private:
  unsigned order_;
  unsigned degree_ = 1;
  std::vector<std::vector<Rational>> reduced_;
};

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs)
    : data_(&CyclotomicData::get(order)) {
  const unsigned deg = data_->degree();
  std::vector<Rational> out(deg, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();
    if (coeffs[k] == 0) continue;
    if (k < deg) {
      out[k] += coeffs[k];
    } else {
      // x^k = x^(k mod N) since Phi_N divides x^N - 1
      const auto& red = data_->power(k % order);
      for (unsigned i = 0; i < deg; ++i)
        if (red[i] != 0) out[i] += coeffs[k] * red[i];
    }
  }
  coeffs_ = std::move(out);
}

Cyclotomic Cyclotomic::root_power(unsigned order, std::int64_t k) {
  const auto& data = CyclotomicData::get(order);
  std::int64_t r = k % static_cast<std::int64_t>(order);
  if (r < 0) r += order;
  return Cyclotomic(&data, data.power(static_cast<std::size_t>(r)));
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const Rational& r) {
  const auto& data = CyclotomicData::get(order);
  std::vector<Rational> c(data.degree(), Rational(0));
  c[0] = r;
  return Cyclotomic(&data, std::move(c));
}

unsigned Cyclotomic::order() const { return data_->order(); }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
  if (data_ != o.data_)
    throw Error(ErrorKind::FieldMismatch, "cyclotomic orders " + std::to_string(order()) + " and " +
                                              std::to_string(o.order()) + " do not mix");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same_field(o);
  std::vector<Rational> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Cyclotomic(data_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  check_same_field(o);
  std::vector<Rational> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Cyclotomic(data_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(data_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same_field(o);
  const unsigned deg = data_->degree();
  std::vector<Rational> wide(2 * deg - 1, Rational(0));
  for (unsigned i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < deg; ++j)
      if (o.coeffs_[j] != 0) wide[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  std::vector<Rational> out(wide.begin(), wide.begin() + deg);
  for (unsigned k = deg; k < wide.size(); ++k) {
    if (wide[k] == 0) continue;
    const auto& red = data_->power(k);
    for (unsigned i = 0; i < deg; ++i)
      if (red[i] != 0) out[i] += wide[k] * red[i];
  }
  return Cyclotomic(data_, std::move(out));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return data_ == o.data_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // Solve (multiplication by this) * y = 1 over Q.
  const unsigned deg = data_->degree();
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
  for (unsigned j = 0; j < deg; ++j) {
    std::vector<Rational> basis(deg, Rational(0));
    basis[j] = 1;
    Cyclotomic col = *this * Cyclotomic(data_, std::move(basis));
    for (unsigned i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][deg] = 1;
  for (unsigned c = 0; c < deg; ++c) {
    unsigned p = c;
    while (p < deg && m[p][c] == 0) ++p;
    std::swap(m[c], m[p]);
    Rational inv = 1 / m[c][c];
    for (unsigned k = c; k <= deg; ++k) m[c][k] *= inv;
    for (unsigned r = 0; r < deg; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (unsigned k = c; k <= deg; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> y(deg);
  for (unsigned i = 0; i < deg; ++i) y[i] = m[i][deg];
  return Cyclotomic(data_, std::move(y));
}

// ---------------------------------------------------------------------------

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(std::move(r));
}

Scalar Scalar::root_power(const Field& field, std::int64_t k) {
  if (field.is_rational()) return Scalar(1);
  return Scalar(Cyclotomic::root_power(field.order, k));
}

bool Scalar::is_zero() const {
  return is_rational() ? rational() == 0 : cyclotomic().is_zero();
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  const auto& c = cyclotomic().coeffs();
  if (c[0] != 1) return false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

namespace {

Cyclotomic promote(const Scalar& s, unsigned order) {
  return s.is_rational() ? Cyclotomic::from_rational(order, s.rational()) : s.cyclotomic();
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(Rational(rational() + o.rational()));
  const unsigned n = is_rational() ? o.order() : order();
  return Scalar(promote(*this, n) + promote(o, n));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(Rational(rational() - o.rational()));
  const unsigned n = is_rational() ? o.order() : order();
  return Scalar(promote(*this, n) - promote(o, n));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(Rational(rational() * o.rational()));
  if (is_rational()) {
    if (rational() == 0) return Scalar();
    if (rational() == 1) return o;
  }
  if (o.is_rational()) {
    if (o.rational() == 0) return Scalar();
    if (o.rational() == 1) return *this;
  }
  const unsigned n = is_rational() ? o.order() : order();
  return Scalar(promote(*this, n) * promote(o, n));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rational()));
  return Scalar(-cyclotomic());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) += o.rational();
    return *this;
  }
  return *this = *this + o;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) -= o.rational();
    return *this;
  }
  return *this = *this - o;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return Scalar(Rational(1 / rational()));
  return Scalar(cyclotomic().inverse());
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return rational() == o.rational();
  if (!is_rational() && !o.is_rational()) {
    if (order() != o.order())
      throw Error(ErrorKind::FieldMismatch, "comparison across cyclotomic orders");
    return cyclotomic() == o.cyclotomic();
  }
  const Scalar& r = is_rational() ? *this : o;
  const Scalar& c = is_rational() ? o : *this;
  return c.cyclotomic().is_rational() && c.cyclotomic().coeffs()[0] == r.rational();
}

Scalar Scalar::in_field(const Field& field) const {
  if (field.is_rational()) {
    if (is_rational()) return *this;
    if (cyclotomic().is_rational()) return Scalar(cyclotomic().coeffs()[0]);
    throw Error(ErrorKind::FieldMismatch, "irrational value in the rational field");
  }
  if (is_rational()) return Scalar(Cyclotomic::from_rational(field.order, rational()));
  if (order() != field.order) {
    if (cyclotomic().is_rational())
      return Scalar(Cyclotomic::from_rational(field.order, cyclotomic().coeffs()[0]));
    throw Error(ErrorKind::FieldMismatch, "value lives in a different cyclotomic field");
  }
  return *this;
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar* b) {
  auto need_b = [&]() -> const Scalar& {
    if (!b) throw Error(ErrorKind::InvalidInput, "binary operation needs two operands");
    return *b;
  };
  switch (op) {
    case ScalarOp::Add: return a + need_b();
    case ScalarOp::Mul: return a * need_b();
    case ScalarOp::Neg: return -a;
    case ScalarOp::Inv: return a.inverse();
    case ScalarOp::Eq: return Scalar(a == need_b() ? 1 : 0);
  }
  return Scalar();
}

// ---------------------------------------------------------------------------
// Text form:  scalar := term (('+'|'-') term)*
//             term   := rational ('*' 'w' ('^' int)?)? | 'w' ('^' int)?

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  Scalar parse() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    Scalar total;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        if (at_end()) break;
        fail("expected '+' or '-'");
      }
      skip_ws();
      Scalar t = term();
      total += sign > 0 ? t : -t;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return total;
  }

 private:
  Scalar term() {
    if (at_end()) fail("missing term");
    if (peek() == 'w') return power();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number or 'w'");
    Integer num = integer();
    Integer den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a positive denominator");
      den = integer();
      if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in scalar literal");
    }
    Rational r(num, den);
    r.canonicalize();
    Scalar value(r);
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'w') fail("expected 'w' after '*'");
      value = value * power();
    }
    return value;
  }

  Scalar power() {
    ++pos_;  // 'w'
    std::int64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      Integer e = integer();
      if (field_.order > 1) e %= field_.order;  // reduce before range check
      if (!e.fits_slong_p())
        throw Error(ErrorKind::ExponentOutOfRange, "exponent does not fit in 64 bits");
      exponent = e.get_si();
      if (neg) exponent = -exponent;
    }
    if (field_.is_rational())
      throw Error(ErrorKind::FieldMismatch, "'w' is not available in the rational field");
    return Scalar::root_power(field_, exponent);
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError,
                msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Field& field) {
  Scalar s = ScalarParser(text, field).parse();
  return field.is_rational() ? s : s.in_field(field);
}

std::string render_scalar(const Scalar& s) {
  if (s.is_rational()) return s.rational().get_str();
  const auto& c = s.cyclotomic().coeffs();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    const bool negative = c[k] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "w";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace whakit
