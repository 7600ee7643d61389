#pragma once

// Truncated power series with exact rational coefficients, sparse over
// exponent tuples.  At most two variables; by convention the generating
// functions here use "u" (size marker) and "x" (block marker).  Orders are
// per-variable truncation bounds: exponents above the bound are dropped by
// every operation.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ppos/exact.hpp"

namespace ppos {

class RationalSeries {
 public:
  RationalSeries(std::vector<std::string> vars, std::vector<int> orders);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& orders() const { return ord_; }
  bool same_universe(const RationalSeries& o) const {
    return vars_ == o.vars_ && ord_ == o.ord_;
  }

  // exps lists one exponent per variable, in vars() order
  void add_term(const std::vector<int>& exps, const Rat& c);
  Rat coeff(const std::vector<int>& exps) const;
  Rat constant_term() const;
  size_t term_count() const { return terms_.size(); }
  const std::map<std::array<int, 2>, Rat>& terms() const { return terms_; }

  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator-(const RationalSeries& o) const;
  RationalSeries operator*(const RationalSeries& o) const;
  RationalSeries operator*(const Rat& s) const;
  bool operator==(const RationalSeries& o) const {
    return same_universe(o) && terms_ == o.terms_;
  }

  // Divides every term by the named variable; requires a positive exponent
  // in that variable throughout (throws NotDivisible).
  RationalSeries div_by_var(const std::string& v) const;

  friend RationalSeries series_exp(const RationalSeries& f);
  friend RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g);
  friend RationalSeries series_reversion(const RationalSeries& f);

 private:
  int var_index(const std::string& v) const;
  bool within(const std::array<int, 2>& e) const;
  std::vector<std::string> vars_;
  std::vector<int> ord_;
  std::map<std::array<int, 2>, Rat> terms_;  // exponent tuple -> coefficient
};

// exp(f) for a series with zero constant term (else NonzeroConstantTerm).
RationalSeries series_exp(const RationalSeries& f);

// f(g) for univariate f, g in the same variable; g must have zero constant
// term (else NonzeroConstantTerm).
RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g);

// Compositional inverse of a univariate series with f(0) = 0 and linear
// coefficient exactly 1 (else NotReversible).
RationalSeries series_reversion(const RationalSeries& f);

}  // namespace ppos
