#include "ppos/poset.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace ppos {

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (size_t x = 0; x < size(); ++x)
    if (up_covers[x].empty()) out.push_back(static_cast<int>(x));
  return out;
}

size_t FinitePoset::cover_count() const {
  size_t total = 0;
  for (const auto& c : up_covers) total += c.size();
  return total;
}

nlohmann::ordered_json FinitePoset::to_json() const {
  nlohmann::ordered_json j;
  j["size"] = std::to_string(size());
  j["names"] = names;
  j["ranks"] = nlohmann::ordered_json::array();
  for (int r : ranks) j["ranks"].push_back(std::to_string(r));
  j["bottom"] = std::to_string(bottom);
  j["max_rank"] = std::to_string(max_rank);
  auto edges = nlohmann::ordered_json::array();
  for (size_t x = 0; x < size(); ++x)
    for (int y : up_covers[x])
      edges.push_back({std::to_string(x), std::to_string(y)});
  j["covers"] = std::move(edges);
  return j;
}

FinitePoset build_poset(std::vector<std::string> names,
                        const std::function<bool(size_t, size_t)>& leq_fn,
                        Exec exec) {
  const size_t m = names.size();
  if (m == 0) throw NoMinimum("empty poset");
  FinitePoset p;
  p.names = std::move(names);
  p.up = BitMatrix(m, m);
  p.down = BitMatrix(m, m);

  std::atomic<bool> failed{false};
  std::string failmsg;
#pragma omp parallel for if (exec == Exec::parallel) schedule(dynamic, 16)
  for (long long a = 0; a < static_cast<long long>(m); ++a) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      for (size_t b = 0; b < m; ++b)
        if (leq_fn(a, b)) p.up.set(a, b);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        failmsg = e.what();
      }
    }
  }
  if (failed) throw Error("order relation failed: " + failmsg);

  for (size_t a = 0; a < m; ++a) {
    if (!p.up.get(a, a)) throw Error("relation is not reflexive at " + p.names[a]);
    p.up.for_each_in_row(a, [&](size_t b) { p.down.set(b, a); });
  }
  for (size_t a = 0; a < m; ++a) {
    bool bad = false;
    p.up.for_each_in_row(a, [&](size_t b) {
      if (b != a && p.up.get(b, a)) bad = true;
      if (!row_subset(p.up, b, p.up, a)) bad = true;
    });
    if (bad) throw Error("relation is not a partial order near " + p.names[a]);
  }

  std::vector<size_t> minimals;
  for (size_t a = 0; a < m; ++a) {
    bool minimal = true;
    p.down.for_each_in_row(a, [&](size_t b) {
      if (b != a) minimal = false;
    });
    if (minimal) minimals.push_back(a);
  }
  if (minimals.size() != 1)
    throw NoMinimum("poset has " + std::to_string(minimals.size()) + " minimal elements");
  p.bottom = static_cast<int>(minimals[0]);

  // strict order with the diagonal removed, for the cover test
  BitMatrix sup = p.up, sdown = p.down;
  for (size_t a = 0; a < m; ++a) {
    sup.clear(a, a);
    sdown.clear(a, a);
  }
  p.cover_up = BitMatrix(m, m);
  p.up_covers.assign(m, {});
  p.down_covers.assign(m, {});
#pragma omp parallel for if (exec == Exec::parallel) schedule(dynamic, 16)
  for (long long a = 0; a < static_cast<long long>(m); ++a)
    sup.for_each_in_row(a, [&](size_t b) {
      if (!rows_intersect(sup, a, sdown, b)) p.cover_up.set(a, b);
    });
  for (size_t a = 0; a < m; ++a)
    p.cover_up.for_each_in_row(a, [&](size_t b) {
      p.up_covers[a].push_back(static_cast<int>(b));
      p.down_covers[b].push_back(static_cast<int>(a));
    });

  // grade by covers from the bottom; every cover must climb exactly one step
  p.ranks.assign(m, -1);
  p.ranks[p.bottom] = 0;
  std::vector<size_t> indeg(m);
  for (size_t a = 0; a < m; ++a) indeg[a] = p.down_covers[a].size();
  std::deque<size_t> queue{static_cast<size_t>(p.bottom)};
  size_t seen = 0;
  while (!queue.empty()) {
    size_t x = queue.front();
    queue.pop_front();
    ++seen;
    for (int y : p.up_covers[x]) {
      if (p.ranks[y] == -1)
        p.ranks[y] = p.ranks[x] + 1;
      else if (p.ranks[y] != p.ranks[x] + 1)
        throw NotPure("covers of " + p.names[y] + " sit at different ranks");
      if (--indeg[y] == 0) queue.push_back(y);
    }
  }
  if (seen != m) throw NotPure("cover graph is not reachable from the bottom");
  p.max_rank = *std::max_element(p.ranks.begin(), p.ranks.end());
  return p;
}

FinitePoset family_poset(const FamilySpec& spec, Exec exec) {
  FamilyElements fe = enumerate_family(spec);
  return build_poset(fe.names, [&fe](size_t a, size_t b) { return fe.leq_idx(a, b); },
                     exec);
}

std::vector<Int> mobius_from(const FinitePoset& p, size_t a, Exec exec) {
  if (a >= p.size()) throw OutOfRange("element index out of range");
  std::vector<Int> mu(p.size(), 0);
  mu[a] = 1;
  std::vector<std::vector<long long>> levels(p.max_rank + 1);
  p.up.for_each_in_row(a, [&](size_t x) {
    if (x != a) levels[p.ranks[x]].push_back(static_cast<long long>(x));
  });
  const size_t words = p.up.words();
  for (const auto& level : levels) {
#pragma omp parallel for if (exec == Exec::parallel) schedule(dynamic, 16)
    for (long long idx = 0; idx < static_cast<long long>(level.size()); ++idx) {
      const size_t x = level[idx];
      Int s = 0;
      const uint64_t* ua = p.up.row(a);
      const uint64_t* dx = p.down.row(x);
      for (size_t k = 0; k < words; ++k) {
        uint64_t w = ua[k] & dx[k];
        while (w) {
          size_t y = k * 64 + static_cast<unsigned>(std::countr_zero(w));
          w &= w - 1;
          if (y != x) s += mu[y];
        }
      }
      mu[x] = -s;
    }
  }
  return mu;
}

Int mobius(const FinitePoset& p, size_t a, size_t b) {
  if (a >= p.size() || b >= p.size()) throw OutOfRange("element index out of range");
  if (!p.leq(a, b)) return 0;
  std::vector<Int> memo(p.size());
  std::vector<char> have(p.size(), 0);
  std::function<Int(size_t)> rec = [&](size_t x) -> Int {
    if (have[x]) return memo[x];
    Int s = 0;
    if (x == a) {
      s = 1;
    } else {
      p.down.for_each_in_row(x, [&](size_t y) {
        if (y != x && p.leq(a, y)) s -= rec(y);
      });
    }
    have[x] = 1;
    memo[x] = s;
    return memo[x];
  };
  return rec(b);
}

IntPolynomial characteristic_polynomial(const FinitePoset& p, Exec exec) {
  auto maxs = p.maximal_elements();
  const int mr = p.ranks[maxs.front()];
  for (int x : maxs)
    if (p.ranks[x] != mr)
      throw UnequalMaxRanks("maximal elements at ranks " + std::to_string(mr) +
                            " and " + std::to_string(p.ranks[x]));
  auto mu = mobius_from(p, p.bottom, exec);
  std::vector<Int> coeffs(mr + 1, Int(0));
  for (size_t x = 0; x < p.size(); ++x) coeffs[mr - p.ranks[x]] += mu[x];
  return IntPolynomial(coeffs);
}

FinitePoset interval(const FinitePoset& p, size_t a, size_t b) {
  if (a >= p.size() || b >= p.size()) throw OutOfRange("element index out of range");
  if (!p.leq(a, b))
    throw NotComparable(p.names[a] + " is not below " + p.names[b]);
  std::vector<size_t> ids;
  p.up.for_each_in_row(a, [&](size_t x) {
    if (p.leq(x, b)) ids.push_back(x);
  });
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (size_t id : ids) names.push_back(p.names[id]);
  return build_poset(std::move(names),
                     [&p, &ids](size_t x, size_t y) { return p.leq(ids[x], ids[y]); });
}

FinitePoset poset_product(const FinitePoset& p, const FinitePoset& q) {
  const size_t qs = q.size();
  const size_t m = p.size() * qs;
  if (m > 200000)
    throw SizeLimitExceeded("product would have " + std::to_string(m) + " elements");
  std::vector<std::string> names;
  names.reserve(m);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < qs; ++j)
      names.push_back("(" + p.names[i] + "," + q.names[j] + ")");
  return build_poset(std::move(names), [&p, &q, qs](size_t x, size_t y) {
    return p.leq(x / qs, y / qs) && q.leq(x % qs, y % qs);
  });
}

namespace {

// iterated neighborhood refinement over the cover digraph; colors live in a
// dictionary shared by both posets so they stay comparable
std::pair<std::vector<int>, std::vector<int>> refine_colors(const FinitePoset& p,
                                                            const FinitePoset& q) {
  using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
  std::vector<int> cp(p.size()), cq(q.size());
  {
    std::map<std::tuple<int, size_t, size_t>, int> dict;
    auto assign = [&](const FinitePoset& ps, std::vector<int>& colors) {
      for (size_t x = 0; x < ps.size(); ++x) {
        auto key = std::make_tuple(ps.ranks[x], ps.up_covers[x].size(),
                                   ps.down_covers[x].size());
        auto [it, _] = dict.emplace(key, static_cast<int>(dict.size()));
        colors[x] = it->second;
      }
    };
    assign(p, cp);
    assign(q, cq);
  }
  for (size_t round = 0; round < p.size(); ++round) {
    std::map<Key, int> dict;
    auto next = [&](const FinitePoset& ps, const std::vector<int>& colors,
                    std::vector<int>& out) {
      for (size_t x = 0; x < ps.size(); ++x) {
        std::vector<int> upc, downc;
        for (int y : ps.up_covers[x]) upc.push_back(colors[y]);
        for (int y : ps.down_covers[x]) downc.push_back(colors[y]);
        std::sort(upc.begin(), upc.end());
        std::sort(downc.begin(), downc.end());
        Key key{colors[x], std::move(upc), std::move(downc)};
        auto [it, _] = dict.emplace(std::move(key), static_cast<int>(dict.size()));
        out[x] = it->second;
      }
    };
    std::vector<int> np(p.size()), nq(q.size());
    next(p, cp, np);
    next(q, cq, nq);
    auto distinct = [](const std::vector<int>& v) {
      return std::set<int>(v.begin(), v.end()).size();
    };
    bool stable = distinct(cp) == distinct(np) && distinct(cq) == distinct(nq);
    cp = std::move(np);
    cq = std::move(nq);
    if (stable) break;
  }
  return {cp, cq};
}

}  // namespace

bool are_isomorphic(const FinitePoset& p, const FinitePoset& q, size_t limit) {
  if (p.size() != q.size()) return false;
  if (p.size() > limit)
    throw SizeLimitExceeded("isomorphism test limited to " + std::to_string(limit) +
                            " elements");
  auto [cp, cq] = refine_colors(p, q);
  std::map<int, std::vector<int>> classes_q;
  for (size_t x = 0; x < q.size(); ++x) classes_q[cq[x]].push_back(static_cast<int>(x));
  {
    std::map<int, size_t> hist;
    for (int c : cp) ++hist[c];
    for (auto& [c, members] : classes_q) {
      auto it = hist.find(c);
      if (it == hist.end() || it->second != members.size()) return false;
      hist.erase(it);
    }
    if (!hist.empty()) return false;
  }
  // match rare colors first
  std::map<int, size_t> freq;
  for (int c : cp) ++freq[c];
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (freq[cp[a]] != freq[cp[b]]) return freq[cp[a]] < freq[cp[b]];
    return a < b;
  });
  std::vector<int> pm(p.size(), -1), qm(q.size(), -1);
  std::function<bool(size_t)> match = [&](size_t pos) -> bool {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int v : classes_q[cp[u]]) {
      if (qm[v] != -1) continue;
      bool ok = true;
      for (int w : p.up_covers[u])
        if (pm[w] != -1 && !q.cover_up.get(v, pm[w])) ok = false;
      for (int w : p.down_covers[u])
        if (ok && pm[w] != -1 && !q.cover_up.get(pm[w], v)) ok = false;
      for (int w : q.up_covers[v])
        if (ok && qm[w] != -1 && !p.cover_up.get(u, qm[w])) ok = false;
      for (int w : q.down_covers[v])
        if (ok && qm[w] != -1 && !p.cover_up.get(qm[w], u)) ok = false;
      if (!ok) continue;
      pm[u] = v;
      qm[v] = u;
      if (match(pos + 1)) return true;
      pm[u] = -1;
      qm[v] = -1;
    }
    return false;
  };
  return match(0);
}

bool is_semimodular(const FinitePoset& p) {
  for (size_t t = 0; t < p.size(); ++t) {
    const auto& cov = p.up_covers[t];
    for (size_t a = 0; a < cov.size(); ++a)
      for (size_t b = a + 1; b < cov.size(); ++b)
        if (!rows_intersect(p.cover_up, cov[a], p.cover_up, cov[b])) return false;
  }
  return true;
}

bool is_totally_semimodular(const FinitePoset& p, Exec exec) {
  const size_t words = p.up.words();
  std::atomic<bool> ok{true};
#pragma omp parallel for if (exec == Exec::parallel) schedule(dynamic)
  for (long long t = 0; t < static_cast<long long>(p.size()); ++t) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    const auto& cov = p.up_covers[t];
    std::vector<uint64_t> common(words), bounds(words);
    bool good = true;
    for (size_t a = 0; a < cov.size() && good; ++a)
      for (size_t b = a + 1; b < cov.size() && good; ++b) {
        const uint64_t *ca = p.cover_up.row(cov[a]), *cb = p.cover_up.row(cov[b]);
        const uint64_t *ua = p.up.row(cov[a]), *ub = p.up.row(cov[b]);
        for (size_t k = 0; k < words; ++k) {
          common[k] = ca[k] & cb[k];
          bounds[k] = ua[k] & ub[k];
        }
        // every common upper bound must dominate a common upper cover
        for (size_t k = 0; k < words && good; ++k) {
          uint64_t w = bounds[k];
          while (w && good) {
            size_t ub_elem = k * 64 + static_cast<unsigned>(std::countr_zero(w));
            w &= w - 1;
            const uint64_t* dz = p.down.row(ub_elem);
            bool found = false;
            for (size_t kk = 0; kk < words; ++kk)
              if (common[kk] & dz[kk]) {
                found = true;
                break;
              }
            if (!found) good = false;
          }
        }
      }
    if (!good) ok = false;
  }
  return ok;
}

}  // namespace ppos
