#pragma once

// Shared property checks: the structural invariants that several suites (and
// the acceptance harness) exercise on top of the plain unit oracles.

#include <algorithm>
#include <string>
#include <vector>

#include "ppos/homology.hpp"
#include "ppos/partitions.hpp"
#include "ppos/poset.hpp"

namespace testsupport {

using namespace ppos;

inline FinitePoset fam(Family f, int n, int i = -1, long long cap = 200000) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.i = i;
  s.cap = cap;
  return family_poset(s, Exec::parallel);
}

inline FinitePoset trivial_poset() {
  return build_poset({"e"}, [](size_t, size_t) { return true; });
}

inline FinitePoset fold_product(const std::vector<FinitePoset>& fs) {
  FinitePoset acc = trivial_poset();
  for (const auto& f : fs) acc = poset_product(acc, f);
  return acc;
}

// indices of u-blocks contained in one block of a coarser partition
inline std::vector<size_t> blocks_inside(const PointedPartition& u, const std::vector<int>& vblock) {
  std::vector<size_t> out;
  for (size_t k = 0; k < u.blocks.size(); ++k) {
    bool in = std::all_of(u.blocks[k].begin(), u.blocks[k].end(), [&](int e) {
      return std::binary_search(vblock.begin(), vblock.end(), e, elem_less);
    });
    if (in) out.push_back(k);
  }
  return out;
}

// Every interval of the plain pointed-partition poset factors into maximal
// intervals, one per block of the coarser element.  Returns the number of
// intervals checked, -1 on the first mismatch.
inline long long decomposition_intervals_plain(int n) {
  FamilySpec spec;
  spec.family = Family::A;
  spec.n = n;
  FamilyElements E = enumerate_family(spec);
  FinitePoset P = family_poset(spec, Exec::parallel);
  long long checked = 0;
  for (size_t a = 0; a < P.size(); ++a)
    for (size_t b = 0; b < P.size(); ++b) {
      if (!P.leq(a, b) || a == b) continue;
      const PointedPartition& u = E.elems[a];
      const PointedPartition& v = E.elems[b];
      std::vector<FinitePoset> factors;
      for (const auto& vb : v.blocks) {
        size_t lambda = blocks_inside(u, vb).size();
        if (lambda >= 2) factors.push_back(fam(Family::A_fixed, static_cast<int>(lambda), 1));
      }
      FinitePoset I = interval(P, a, b);
      FinitePoset Q = fold_product(factors);
      if (I.size() != Q.size() || !are_isomorphic(I, Q)) return -1;
      ++checked;
    }
  return checked;
}

// Multi-pointed analogue: factors are the bounded multi-pointed intervals,
// one per block, indexed by how many fine blocks keep their pointed set.
inline long long decomposition_intervals_multi(int n) {
  FamilySpec spec;
  spec.family = Family::MA;
  spec.n = n;
  FamilyElements E = enumerate_family(spec);
  FinitePoset P = family_poset(spec, Exec::parallel);
  long long checked = 0;
  for (size_t a = 0; a < P.size(); ++a)
    for (size_t b = 0; b < P.size(); ++b) {
      if (!P.leq(a, b) || a == b) continue;
      const PointedPartition& u = E.elems[a];
      const PointedPartition& v = E.elems[b];
      std::vector<FinitePoset> factors;
      for (size_t j = 0; j < v.blocks.size(); ++j) {
        std::vector<size_t> inside = blocks_inside(u, v.blocks[j]);
        size_t nu = 0;
        for (size_t k : inside) {
          bool sub = std::all_of(u.pointed[k].begin(), u.pointed[k].end(), [&](int e) {
            return std::binary_search(v.pointed[j].begin(), v.pointed[j].end(), e, elem_less);
          });
          if (sub) ++nu;
        }
        if (nu < 1 || nu > inside.size()) return -1;
        if (inside.size() >= 2)
          factors.push_back(
              fam(Family::MA_interval, static_cast<int>(inside.size()), static_cast<int>(nu)));
      }
      FinitePoset I = interval(P, a, b);
      FinitePoset Q = fold_product(factors);
      if (I.size() != Q.size() || !are_isomorphic(I, Q)) return -1;
      ++checked;
    }
  return checked;
}

// Signed intervals factor into one zero-block poset and plain maximal
// intervals.  The zero factor comes in three shapes, depending on where the
// coarse zero block's pointed element sits relative to the fine zero block:
// same element -> unpointed-zero variant; different, fine zero nonempty ->
// at-most-once-pointed interval; fine zero absent -> signed maximal interval.
inline long long decomposition_intervals_signed(int n) {
  FamilySpec spec;
  spec.family = Family::B;
  spec.n = n;
  FamilyElements E = enumerate_family(spec);
  FinitePoset P = family_poset(spec, Exec::parallel);
  long long checked = 0;
  for (size_t a = 0; a < P.size(); ++a)
    for (size_t b = 0; b < P.size(); ++b) {
      if (!P.leq(a, b) || a == b) continue;
      const PointedPartition& u = E.elems[a];
      const PointedPartition& v = E.elems[b];
      std::vector<FinitePoset> factors;
      for (size_t j = 0; j < v.blocks.size(); ++j) {
        if (static_cast<int>(j) == v.zero) continue;
        if (v.blocks[j].front() < 0) continue;  // one factor per opposite pair
        size_t lambda = blocks_inside(u, v.blocks[j]).size();
        if (lambda >= 2) factors.push_back(fam(Family::A_fixed, static_cast<int>(lambda), 1));
      }
      if (v.zero >= 0) {
        const std::vector<int>& Z = v.blocks[v.zero];
        size_t inside = 0;
        for (size_t k = 0; k < u.blocks.size(); ++k) {
          if (static_cast<int>(k) == u.zero) continue;
          bool in = std::all_of(u.blocks[k].begin(), u.blocks[k].end(), [&](int e) {
            return std::binary_search(Z.begin(), Z.end(), e, elem_less);
          });
          if (in) ++inside;
        }
        size_t lambda = inside / 2;
        if (lambda >= 1) {
          int q = v.pointed[v.zero].front();
          bool q_in_uzero =
              u.zero >= 0 && std::binary_search(u.blocks[u.zero].begin(),
                                                u.blocks[u.zero].end(), q, elem_less);
          Family zf = q_in_uzero        ? Family::beta
                      : (u.zero >= 0)   ? Family::betaB_interval
                                        : Family::B_interval;
          factors.push_back(fam(zf, static_cast<int>(lambda)));
        }
      }
      FinitePoset I = interval(P, a, b);
      FinitePoset Q = fold_product(factors);
      if (I.size() != Q.size() || !are_isomorphic(I, Q)) return -1;
      ++checked;
    }
  return checked;
}

// sum of mu(a, x) over every closed interval [a, b] is zero unless a == b
inline bool mobius_sum_zero(const FinitePoset& p) {
  for (size_t a = 0; a < p.size(); ++a) {
    std::vector<Int> mu = mobius_from(p, a, Exec::parallel);
    for (size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      Int s = 0;
      for (size_t x = 0; x < p.size(); ++x)
        if (p.leq(a, x) && p.leq(x, b)) s += mu[x];
      if (a == b ? s != 1 : s != 0) return false;
    }
  }
  return true;
}

// mu equals the reduced Euler characteristic of the open interval
inline bool philip_hall(const FinitePoset& p) {
  for (size_t a = 0; a < p.size(); ++a) {
    std::vector<Int> mu = mobius_from(p, a, Exec::parallel);
    for (size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b) || p.ranks[b] <= p.ranks[a]) continue;
      HomologyResult h = interval_homology(p, a, b);
      if (h.reduced_euler() != mu[b]) return false;
    }
  }
  return true;
}

// mu of a product poset is the product of the factor mu values
inline bool product_mobius_multiplicative(const FinitePoset& p, const FinitePoset& q) {
  FinitePoset pq = poset_product(p, q);
  const size_t qs = q.size();
  for (size_t a = 0; a < p.size(); ++a) {
    std::vector<Int> mup = mobius_from(p, a);
    for (size_t c = 0; c < qs; ++c) {
      std::vector<Int> muq = mobius_from(q, c);
      std::vector<Int> mupq = mobius_from(pq, a * qs + c, Exec::parallel);
      for (size_t b = 0; b < p.size(); ++b)
        for (size_t d = 0; d < qs; ++d)
          if (mupq[b * qs + d] != mup[b] * muq[d]) return false;
    }
  }
  return true;
}

}  // namespace testsupport
