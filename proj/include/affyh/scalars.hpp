#pragma once

// Exact coefficient arithmetic: Laurent polynomials in q whose coefficients
// live in the cyclotomic field Q(zeta_r), stored modulo the r-th cyclotomic
// polynomial so that every nonzero value is invertible.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace affyh {

using Rational = mpq_class;

std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);

int euler_phi(int r);

// Integer coefficients of the r-th cyclotomic polynomial, lowest degree
// first; the leading coefficient is 1.
const std::vector<long>& cyclotomic_polynomial(int r);

/// An element of Q(zeta_r) as a polynomial in zeta of degree < phi(r).
class CycRational {
 public:
  CycRational() : CycRational(1) {}
  explicit CycRational(int r);
  CycRational(int r, const Rational& value);

  /// zeta^k for any integer k (reduced mod r first).
  static CycRational zeta_power(int r, long k);

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  CycRational operator-() const;
  CycRational& operator+=(const CycRational& other);
  CycRational& operator-=(const CycRational& other);
  CycRational& operator*=(const CycRational& other);
  CycRational& operator*=(const Rational& other);

  friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
  friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
  friend CycRational operator*(const CycRational& a, const CycRational& b);

  friend bool operator==(const CycRational& a, const CycRational& b);

  std::string to_string() const;

 private:
  friend CycRational cyclotomic_reduce(std::span<const Rational> p, int r);

  void check_same(const CycRational& other) const;

  int order_;
  std::vector<Rational> coeffs_;
};

/// Residue of sum_k p[k] zeta^k modulo the r-th cyclotomic polynomial.
CycRational cyclotomic_reduce(std::span<const Rational> p, int r);

/// Field inverse via extended gcd against the cyclotomic polynomial.
/// Throws Error(DivisionByZero) on zero.
CycRational cyc_invert(const CycRational& a);

/// Laurent polynomial in q over Q(zeta_m).  Zero coefficients are never
/// stored, so structural equality is ring equality.
class Scalar {
 public:
  using Term = std::pair<int, CycRational>;

  Scalar() : Scalar(1) {}
  explicit Scalar(int field) : field_(field) {}
  Scalar(int field, const Rational& value);
  explicit Scalar(const CycRational& value);

  static Scalar q_power(int field, int exponent);
  /// The distinguished constant q - q^{-1}.
  static Scalar q_minus_qinv(int field);

  int field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of q^exponent (zero when absent).
  CycRational coefficient(int exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator*=(const CycRational& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const CycRational& b) { return a *= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Builds from raw (exponent, coefficient) pairs; merges and prunes.
  static Scalar from_terms(int field, std::vector<Term> terms);

  std::string to_string() const;

 private:
  void check_same(const Scalar& other) const;

  int field_;
  std::vector<Term> terms_;
};

}  // namespace affyh
