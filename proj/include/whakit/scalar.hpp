#pragma once

// Exact coefficient arithmetic: the rationals and cyclotomic fields Q(w),
// w a primitive N-th root of unity, stored as residues modulo Phi_N.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "whakit/error.hpp"

namespace whakit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

/// Euler's totient, i.e. deg(Phi_N).
unsigned totient(unsigned n);

/// Field descriptor shared by every scalar of one algebra. order 1 means Q.
struct Field {
  unsigned order = 1;

  static Field rational() { return Field{1}; }
  static Field cyclotomic(unsigned n) { return Field{n}; }

  bool is_rational() const { return order == 1; }
  unsigned degree() const { return totient(order); }
  bool operator==(const Field&) const = default;
};

class CyclotomicData;

/// Residue of Q[x] modulo Phi_N; always reduced.
class Cyclotomic {
 public:
  Cyclotomic(unsigned order, std::vector<Rational> coeffs);

  /// w^k for any integer k (reduced mod N).
  static Cyclotomic root_power(unsigned order, std::int64_t k);
  static Cyclotomic from_rational(unsigned order, const Rational& r);

  unsigned order() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when the residue is a constant (lies in Q).
  bool is_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  bool operator==(const Cyclotomic& o) const;

 private:
  Cyclotomic(const CyclotomicData* data, std::vector<Rational> coeffs)
      : data_(data), coeffs_(std::move(coeffs)) {}
  void check_same_field(const Cyclotomic& o) const;

  const CyclotomicData* data_;
  std::vector<Rational> coeffs_;
};

/// Tagged union Rational | Cyclotomic. Rationals embed into any cyclotomic
/// field; two cyclotomic values of different order never mix.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : value_(std::move(v)) { std::get<Rational>(value_).canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(Cyclotomic v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static Scalar fraction(long num, long den);
  /// w^k in the given field; for the rational field only k = 0 is allowed.
  static Scalar root_power(const Field& field, std::int64_t k);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const Cyclotomic& cyclotomic() const { return std::get<Cyclotomic>(value_); }
  /// Order of the field the value lives in (1 for plain rationals).
  unsigned order() const { return is_rational() ? 1 : cyclotomic().order(); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Re-express in the given field (rationals are embedded, cyclotomic values
  /// must already match the field order or be constant).
  Scalar in_field(const Field& field) const;

 private:
  std::variant<Rational, Cyclotomic> value_;
};

enum class ScalarOp { Add, Mul, Neg, Inv, Eq };

/// Uniform entry point over the field operations; Eq yields 1 or 0.
Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar* b = nullptr);

Scalar parse_scalar(std::string_view text, const Field& field);
std::string render_scalar(const Scalar& s);

}  // namespace whakit
