#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.
// Coefficient 0 is the constant term; the representation never carries
// trailing zero coefficients, so degree() is just size-1 (-1 for the zero
// polynomial).

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

#include "ppos/errors.hpp"

#include <json.hpp>

namespace ppos {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(int n, int k);
// n^e with e possibly negative is not representable in Int; pow_int requires e >= 0.
Int pow_int(const Int& base, int e);
// throws NonIntegerCoefficient unless the denominator is 1
Int to_integer(const Rat& r);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<int> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int c);
  static IntPolynomial x();             // the monomial x
  static IntPolynomial x_minus(const Int& c);  // x - c

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // coefficient of x^k, zero outside the stored range
  const Int& coeff(int k) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Int& s) const;
  IntPolynomial pow(int e) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  Int eval(const Int& v) const;

  // Exact division: throws NotDivisible unless o divides *this with zero
  // remainder over the integers.  There is deliberately no remainder API.
  IntPolynomial exact_div(const IntPolynomial& o) const;

  // "x^2-6x+9" style; "0" for the zero polynomial.
  std::string str() const;

  // JSON form: array of decimal strings, constant term first.
  nlohmann::ordered_json to_json() const;
  static IntPolynomial from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<Int> c_;
};

}  // namespace ppos
