#include "ppos/hopf.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "ppos/partitions.hpp"
#include "ppos/series.hpp"

namespace ppos {

namespace {

Int rat_to_int(const Rat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw NonIntegerCoefficient(std::string(what) + " is not an integer: " + r.str());
  return boost::multiprecision::numerator(r);
}

Monomial merged(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Monomial generator_monomial(int k) {
  return k >= 2 ? Monomial{k} : Monomial{};
}

}  // namespace

std::map<TensorKey, Int> coproduct_structural(int n) {
  FamilySpec spec;
  spec.family = Family::A_fixed;
  spec.n = n;
  spec.i = 1;
  FamilyElements fe = enumerate_family(spec);
  std::map<TensorKey, Int> out;
  for (const auto& p : fe.elems) {
    Monomial left;
    for (const auto& b : p.blocks)
      if (b.size() >= 2) left.push_back(static_cast<int>(b.size()));
    std::sort(left.begin(), left.end());
    out[{std::move(left), static_cast<int>(p.blocks.size())}] += 1;
  }
  return out;
}

std::map<TensorKey, Int> coproduct_series(int n) {
  // composition coefficient of a partition of n with parts p_1..p_k:
  // (n-1)!/(k-1)! * #orderings * prod 1/(p_t - 1)!
  std::map<TensorKey, Int> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      const int k = static_cast<int>(parts.size());
      Rat c = Rat(factorial(n - 1)) / Rat(factorial(k - 1));
      Int mults = 1;
      int run = 1;
      for (int t = 1; t <= k; ++t) {
        if (t < k && parts[t] == parts[t - 1]) {
          ++run;
        } else {
          mults *= factorial(run);
          run = 1;
        }
      }
      c *= Rat(factorial(k)) / Rat(mults);
      for (int p : parts) c /= Rat(factorial(p - 1));
      Monomial left;
      for (int p : parts)
        if (p >= 2) left.push_back(p);
      std::sort(left.begin(), left.end());
      out[{std::move(left), k}] += rat_to_int(c, "coproduct coefficient");
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

using TensorPair = std::pair<Monomial, Monomial>;

std::map<TensorPair, Int> delta_monomial(
    const Monomial& m, const std::vector<std::map<TensorKey, Int>>& delta) {
  std::map<TensorPair, Int> acc{{{Monomial{}, Monomial{}}, Int(1)}};
  for (int f : m) {
    std::map<TensorPair, Int> next;
    for (const auto& [lr, c] : acc)
      for (const auto& [key, c2] : delta[f]) {
        TensorPair mk{merged(lr.first, key.first),
                      merged(lr.second, generator_monomial(key.second))};
        next[std::move(mk)] += c * c2;
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

bool check_coassociative(int n) {
  std::vector<std::map<TensorKey, Int>> delta(n + 1);
  for (int m = 1; m <= n; ++m) delta[m] = coproduct_structural(m);
  using Triple = std::tuple<Monomial, Monomial, int>;
  std::map<Triple, Int> lhs, rhs;
  for (const auto& [key, c] : delta[n]) {
    const auto& [left, r] = key;
    for (const auto& [xy, c2] : delta_monomial(left, delta))
      lhs[{xy.first, xy.second, r}] += c * c2;
    for (const auto& [key2, c2] : delta[r])
      rhs[{left, key2.first, key2.second}] += c * c2;
  }
  return lhs == rhs;
}

bool check_counit(int n) {
  auto delta = coproduct_structural(n);
  // unit on the left: the only term with an empty left monomial is 1 (x) a_n
  // unit on the right: the only one-block term is a_n (x) 1
  Int left_hits = 0, right_hits = 0;
  for (const auto& [key, c] : delta) {
    const auto& [left, r] = key;
    if (left.empty()) {
      if (r != n || c != 1) return false;
      ++left_hits;
    }
    if (r == 1) {
      if (left != generator_monomial(n) || c != 1) return false;
      ++right_hits;
    }
  }
  return left_hits == 1 && right_hits == 1;
}

std::vector<Int> mobius_generators(int maxn) {
  RationalSeries f({"x"}, {maxn});
  for (int k = 1; k <= maxn; ++k) f.add_term({k}, Rat(1) / Rat(factorial(k - 1)));
  RationalSeries g = series_reversion(f);
  std::vector<Int> mu(maxn + 1, Int(0));
  for (int k = 1; k <= maxn; ++k)
    mu[k] = rat_to_int(g.coeff({k}) * Rat(factorial(k - 1)), "inverse-series value");
  return mu;
}

nlohmann::ordered_json coproduct_json(int n) {
  auto delta = coproduct_structural(n);
  nlohmann::ordered_json j;
  j["generator"] = std::to_string(n);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, c] : delta) {
    nlohmann::ordered_json term;
    auto left = nlohmann::ordered_json::array();
    for (int v : key.first) left.push_back(std::to_string(v));
    term["left"] = std::move(left);
    term["right"] = std::to_string(key.second);
    term["coeff"] = c.str();
    arr.push_back(std::move(term));
  }
  j["terms"] = std::move(arr);
  return j;
}

}  // namespace ppos
