#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals
// (a + b i with a, b rational). Every zero test in the library is a
// membership test on an algebraic variety, so nothing here ever rounds.

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace slocc {

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  /// `[-]digits[/digits]`
  std::string to_string() const;

 private:
  mpq_class value_;
};

class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I value) : re_(value) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational abs_squared() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws ArithmeticError when `o` is zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }

  friend bool operator==(const GaussianRational& a,
                         const GaussianRational& b) = default;

  /// `R`, `R+Ri` or `R-Ri`; the real form is used whenever im == 0.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

using Complex = GaussianRational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline Rational abs_squared(const GaussianRational& z) {
  return z.abs_squared();
}

/// Integer power by repeated squaring; exponent >= 0.
template <typename Scalar>
Scalar pow(Scalar base, unsigned exponent) {
  Scalar result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

/// Parses the whitespace-free scalar token grammar
///   `R` | `R+Ri` | `R-Ri`,  R = `[-]digits[/digits]`.
/// Throws ParseError carrying the 1-based position of the offending character.
GaussianRational parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace slocc

namespace Eigen {

template <>
struct NumTraits<slocc::Rational> : GenericNumTraits<slocc::Rational> {
  using Real = slocc::Rational;
  using NonInteger = slocc::Rational;
  using Literal = slocc::Rational;
  using Nested = slocc::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real dummy_precision() { return Real(0); }
  static inline Real epsilon() { return Real(0); }
  static inline int digits10() { return 0; }
};

// Declared non-complex on purpose: the bilinear pairing never conjugates, and
// Eigen must not route products through its std::complex kernels.
template <>
struct NumTraits<slocc::GaussianRational>
    : GenericNumTraits<slocc::GaussianRational> {
  using Real = slocc::GaussianRational;
  using NonInteger = slocc::GaussianRational;
  using Literal = slocc::GaussianRational;
  using Nested = slocc::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
  static inline Real dummy_precision() { return Real(0); }
  static inline Real epsilon() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
