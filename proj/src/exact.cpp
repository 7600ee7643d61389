#include "ppos/exact.hpp"

#include <sstream>

namespace ppos {

Int factorial(int n) {
  if (n < 0) throw OutOfRange("factorial of negative argument");
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact at every step
  }
  return r;
}

Int pow_int(const Int& base, int e) {
  if (e < 0) throw OutOfRange("pow_int with negative exponent");
  Int r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Int to_integer(const Rat& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw NonIntegerCoefficient("not an integer: " + r.str());
  return boost::multiprecision::numerator(r);
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<int> coeffs) {
  c_.reserve(coeffs.size());
  for (int v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::x() {
  IntPolynomial p;
  p.c_ = {Int(0), Int(1)};
  return p;
}

IntPolynomial IntPolynomial::x_minus(const Int& c) {
  IntPolynomial p;
  p.c_ = {-c, Int(1)};
  return p;
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPolynomial::coeff(int k) const {
  static const Int kZero = 0;
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < r.c_.size(); ++k) {
    if (k < c_.size()) r.c_[k] += c_[k];
    if (k < o.c_.size()) r.c_[k] += o.c_[k];
  }
  r.normalize();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  return *this + (-o);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  IntPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
  r.normalize();
  return r;
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
  if (s == 0) return IntPolynomial();
  IntPolynomial r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw OutOfRange("negative polynomial power");
  IntPolynomial r = constant(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Int IntPolynomial::eval(const Int& v) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& o) const {
  if (o.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < o.degree()) throw NotDivisible("degree of divisor exceeds dividend");
  std::vector<Int> rem = c_;
  std::vector<Int> quo(degree() - o.degree() + 1, Int(0));
  const Int& lead = o.c_.back();
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    Int top = rem[k + o.degree()];
    if (top == 0) continue;
    if (top % lead != 0) throw NotDivisible("leading coefficient does not divide");
    Int q = top / lead;
    quo[k] = q;
    for (int j = 0; j <= o.degree(); ++j) rem[k + j] -= q * o.c_[j];
  }
  for (const auto& v : rem)
    if (v != 0) throw NotDivisible("nonzero remainder");
  return IntPolynomial(std::move(quo));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& a = c_[k];
    if (a == 0) continue;
    Int mag = a < 0 ? Int(-a) : a;
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? "-" : "+");
    }
    if (k == 0 || mag != 1) out << mag.str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

nlohmann::ordered_json IntPolynomial::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : c_) arr.push_back(v.str());
  return arr;
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array", 0);
  std::vector<Int> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("polynomial coefficient must be a decimal string", c.size());
    c.emplace_back(e.get<std::string>());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace ppos
