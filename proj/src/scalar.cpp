#include "slocc/scalar.hpp"

#include <cctype>
#include <ostream>

#include "slocc/errors.hpp"

namespace slocc {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  const Rational norm = o.abs_squared();
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string out = re_.to_string();
  if (im_.sign() < 0) {
    out += '-';
    out += (-im_).to_string();
  } else {
    out += '+';
    out += im_.to_string();
  }
  out += 'i';
  return out;
}

namespace {

// Recursive-descent reader over a single token.
class ScalarReader {
 public:
  explicit ScalarReader(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ == text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 0, column());
  }

  Rational rational(bool allow_sign) {
    bool negative = false;
    if (allow_sign && peek() == '-') {
      negative = true;
      ++pos_;
    }
    mpz_class num = digits("numerator");
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_column = column();
      den = digits("denominator");
      if (den == 0) throw ParseError("zero denominator", 0, den_column);
    }
    if (negative) num = -num;
    return Rational(num, den);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char take() { return text_[pos_++]; }

 private:
  mpz_class digits(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail(std::string("expected digits for ") + what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  ScalarReader reader(text);
  Rational r = reader.rational(true);
  if (!reader.at_end()) reader.fail("unexpected trailing character");
  return r;
}

GaussianRational parse_scalar(std::string_view text) {
  ScalarReader reader(text);
  if (reader.at_end()) reader.fail("empty scalar");
  Rational re = reader.rational(true);
  if (reader.at_end()) return GaussianRational(std::move(re));
  const char sign = reader.peek();
  if (sign != '+' && sign != '-') reader.fail("expected '+', '-' or end");
  reader.take();
  Rational im = reader.rational(false);
  reader.expect('i');
  if (!reader.at_end()) reader.fail("unexpected trailing character");
  if (sign == '-') im = -im;
  return {std::move(re), std::move(im)};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

}  // namespace slocc
