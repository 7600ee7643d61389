#include "ppos/series.hpp"

#include <algorithm>

namespace ppos {

RationalSeries::RationalSeries(std::vector<std::string> vars, std::vector<int> orders)
    : vars_(std::move(vars)), ord_(std::move(orders)) {
  if (vars_.empty() || vars_.size() > 2)
    throw OutOfRange("series support exactly one or two variables");
  if (vars_.size() != ord_.size()) throw OutOfRange("one truncation order per variable");
  if (vars_.size() == 2 && vars_[0] == vars_[1])
    throw OutOfRange("duplicate variable name");
  for (int o : ord_)
    if (o < 0) throw OutOfRange("negative truncation order");
}

int RationalSeries::var_index(const std::string& v) const {
  for (size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k] == v) return static_cast<int>(k);
  throw OutOfRange("unknown series variable: " + v);
}

bool RationalSeries::within(const std::array<int, 2>& e) const {
  for (size_t k = 0; k < vars_.size(); ++k)
    if (e[k] > ord_[k]) return false;
  return true;
}

void RationalSeries::add_term(const std::vector<int>& exps, const Rat& c) {
  if (exps.size() != vars_.size()) throw OutOfRange("exponent tuple arity mismatch");
  std::array<int, 2> key = {0, 0};
  for (size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0) throw OutOfRange("negative exponent");
    key[k] = exps[k];
  }
  if (!within(key) || c == 0) return;
  Rat& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
}

Rat RationalSeries::coeff(const std::vector<int>& exps) const {
  if (exps.size() != vars_.size()) throw OutOfRange("exponent tuple arity mismatch");
  std::array<int, 2> key = {0, 0};
  for (size_t k = 0; k < exps.size(); ++k) key[k] = exps[k];
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat RationalSeries::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Rat(0) : it->second;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  if (!same_universe(o)) throw OutOfRange("series universes differ");
  RationalSeries r = *this;
  for (const auto& [e, c] : o.terms_) {
    Rat& slot = r.terms_[e];
    slot += c;
    if (slot == 0) r.terms_.erase(e);
  }
  return r;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
  return *this + o * Rat(-1);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  if (!same_universe(o)) throw OutOfRange("series universes differ");
  RationalSeries r(vars_, ord_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::array<int, 2> e = {ea[0] + eb[0], ea[1] + eb[1]};
      if (!r.within(e)) continue;
      Rat& slot = r.terms_[e];
      slot += ca * cb;
      if (slot == 0) r.terms_.erase(e);
    }
  return r;
}

RationalSeries RationalSeries::operator*(const Rat& s) const {
  RationalSeries r(vars_, ord_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

RationalSeries RationalSeries::div_by_var(const std::string& v) const {
  int idx = var_index(v);
  RationalSeries r(vars_, ord_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] < 1) throw NotDivisible("term with zero exponent in " + v);
    std::array<int, 2> e2 = e;
    e2[idx] -= 1;
    r.terms_[e2] = c;
  }
  return r;
}

RationalSeries series_exp(const RationalSeries& f) {
  if (f.constant_term() != 0)
    throw NonzeroConstantTerm("series_exp needs a zero constant term");
  int kmax = 0;
  for (int o : f.ord_) kmax += o;
  RationalSeries result(f.vars_, f.ord_);
  result.add_term(std::vector<int>(f.vars_.size(), 0), 1);
  RationalSeries term = result;  // f^k / k!, starting at k = 0
  for (int k = 1; k <= kmax; ++k) {
    term = term * f * Rat(Int(1), Int(k));
    if (term.terms_.empty()) break;
    for (const auto& [e, c] : term.terms_) {
      Rat& slot = result.terms_[e];
      slot += c;
      if (slot == 0) result.terms_.erase(e);
    }
  }
  return result;
}

RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g) {
  if (f.vars_.size() != 1 || !f.same_universe(g))
    throw OutOfRange("series_compose needs univariate series over one universe");
  if (g.constant_term() != 0)
    throw NonzeroConstantTerm("series_compose needs g(0) = 0");
  // Horner from the top coefficient down
  RationalSeries r(f.vars_, f.ord_);
  for (int d = f.ord_[0]; d >= 0; --d) {
    r = r * g;
    auto it = f.terms_.find({d, 0});
    if (it != f.terms_.end()) {
      Rat& slot = r.terms_[{0, 0}];
      slot += it->second;
      if (slot == 0) r.terms_.erase({0, 0});
    }
  }
  return r;
}

RationalSeries series_reversion(const RationalSeries& f) {
  if (f.vars_.size() != 1) throw OutOfRange("series_reversion is univariate");
  if (f.constant_term() != 0) throw NotReversible("constant term must vanish");
  if (f.coeff({1}) != 1) throw NotReversible("linear coefficient must be 1");
  RationalSeries g(f.vars_, f.ord_);
  g.add_term({1}, 1);
  // fix coefficients degree by degree: with g correct below degree d, the
  // degree-d defect of f(g) is linear in g_d with unit slope
  for (int d = 2; d <= f.ord_[0]; ++d) {
    Rat defect = series_compose(f, g).coeff({d});
    if (defect != 0) g.add_term({d}, -defect);
  }
  return g;
}

}  // namespace ppos
