#include "ppos/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ppos {

SimplicialComplex order_complex(const FinitePoset& p) {
  auto maxs = p.maximal_elements();
  if (maxs.size() != 1)
    throw NotBounded("poset has " + std::to_string(maxs.size()) + " maximal elements");
  const size_t top = maxs.front(), bot = p.bottom;
  std::vector<size_t> proper;
  for (size_t x = 0; x < p.size(); ++x)
    if (x != top && x != bot) proper.push_back(x);
  std::vector<int> vertex_of(p.size(), -1);
  for (size_t k = 0; k < proper.size(); ++k) vertex_of[proper[k]] = static_cast<int>(k);

  SimplicialComplex c;
  std::vector<int> chain;
  // indices are rank-monotone, so extending by larger poset elements emits
  // every chain exactly once, in lexicographic order per dimension
  std::function<void(size_t)> grow = [&](size_t x) {
    chain.push_back(vertex_of[x]);
    int d = static_cast<int>(chain.size()) - 1;
    if (c.dim() < d) c.faces.resize(d + 1);
    c.faces[d].push_back(chain);
    p.up.for_each_in_row(x, [&](size_t y) {
      if (y != x && y != top) grow(y);
    });
    chain.pop_back();
  };
  for (size_t x : proper) grow(x);
  return c;
}

namespace {

class SmithSolver {
 public:
  SmithSolver(int nrows, int ncols)
      : rows_(nrows), cols_(ncols) {}

  void set(int r, int c, Int v) {
    if (v == 0) return;
    rows_[r][c] = std::move(v);
    cols_[c].insert(r);
  }

  std::vector<Int> run() {
    size_t units = 0;
    while (true) {
      auto [r, c] = find_unit_pivot();
      if (r < 0) break;
      eliminate_unit(r, c);
      ++units;
    }
    std::vector<Int> out(units, Int(1));
    for (const Int& f : dense_residual()) out.push_back(f);
    return out;
  }

 private:
  std::vector<std::map<int, Int>> rows_;
  std::vector<std::set<int>> cols_;

  std::pair<int, int> find_unit_pivot() const {
    long long best = -1;
    int br = -1, bc = -1;
    for (size_t c = 0; c < cols_.size(); ++c)
      for (int r : cols_[c]) {
        const Int& v = rows_[r].at(static_cast<int>(c));
        if (v != 1 && v != -1) continue;
        long long score = static_cast<long long>(rows_[r].size() - 1) *
                          static_cast<long long>(cols_[c].size() - 1);
        if (best < 0 || score < best) {
          best = score;
          br = r;
          bc = static_cast<int>(c);
          if (best == 0) return {br, bc};
        }
      }
    return {br, bc};
  }

  void eliminate_unit(int r0, int c0) {
    if (rows_[r0][c0] == -1)
      for (auto& [c, v] : rows_[r0]) v = -v;
    std::vector<int> victims(cols_[c0].begin(), cols_[c0].end());
    for (int r : victims) {
      if (r == r0) continue;
      Int f = rows_[r][c0];
      for (const auto& [c, v] : rows_[r0]) {
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) {
          rows_[r][c] = -f * v;
          cols_[c].insert(r);
        } else {
          it->second -= f * v;
          if (it->second == 0) {
            rows_[r].erase(it);
            cols_[c].erase(r);
          }
        }
      }
    }
    for (const auto& [c, v] : rows_[r0]) cols_[c].erase(r0);
    rows_[r0].clear();
  }

  std::vector<Int> dense_residual() {
    std::vector<int> live_rows;
    std::set<int> live_col_set;
    for (size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) {
        live_rows.push_back(static_cast<int>(r));
        for (const auto& [c, v] : rows_[r]) live_col_set.insert(c);
      }
    if (live_rows.empty()) return {};
    std::vector<int> live_cols(live_col_set.begin(), live_col_set.end());
    std::map<int, int> col_id;
    for (size_t k = 0; k < live_cols.size(); ++k) col_id[live_cols[k]] = static_cast<int>(k);
    std::vector<std::vector<Int>> a(live_rows.size(),
                                    std::vector<Int>(live_cols.size(), Int(0)));
    for (size_t k = 0; k < live_rows.size(); ++k)
      for (const auto& [c, v] : rows_[live_rows[k]]) a[k][col_id[c]] = v;
    return dense_snf(std::move(a));
  }

  static std::vector<Int> dense_snf(std::vector<std::vector<Int>> a) {
    const size_t nr = a.size(), nc = a.front().size();
    std::vector<Int> out;
    for (size_t t = 0; t < std::min(nr, nc); ++t) {
      while (true) {
        // smallest nonzero entry of the trailing block moves to (t, t)
        size_t pr = nr, pc = nc;
        for (size_t r = t; r < nr; ++r)
          for (size_t c = t; c < nc; ++c)
            if (a[r][c] != 0 &&
                (pr == nr || abs(a[r][c]) < abs(a[pr][pc])))
              pr = r, pc = c;
        if (pr == nr) return out;
        std::swap(a[t], a[pr]);
        for (size_t r = 0; r < nr; ++r) std::swap(a[r][t], a[r][pc]);

        bool again = false;
        for (size_t r = t + 1; r < nr; ++r) {
          if (a[r][t] == 0) continue;
          Int q = a[r][t] / a[t][t];
          if (q != 0)
            for (size_t c = t; c < nc; ++c) a[r][c] -= q * a[t][c];
          if (a[r][t] != 0) again = true;
        }
        for (size_t c = t + 1; c < nc; ++c) {
          if (a[t][c] == 0) continue;
          Int q = a[t][c] / a[t][t];
          if (q != 0)
            for (size_t r = t; r < nr; ++r) a[r][c] -= q * a[r][t];
          if (a[t][c] != 0) again = true;
        }
        if (again) continue;

        // pivot must divide the rest of the block
        bool fixed = false;
        for (size_t r = t + 1; r < nr && !fixed; ++r)
          for (size_t c = t + 1; c < nc && !fixed; ++c)
            if (a[r][c] % a[t][t] != 0) {
              for (size_t cc = t; cc < nc; ++cc) a[t][cc] += a[r][cc];
              fixed = true;
            }
        if (!fixed) break;
      }
      out.push_back(abs(a[t][t]));
    }
    return out;
  }
};

}  // namespace

std::vector<Int> smith_invariants(int nrows, int ncols,
                                  const std::vector<std::vector<std::pair<int, Int>>>& entries) {
  SmithSolver solver(nrows, ncols);
  for (int c = 0; c < ncols; ++c)
    for (const auto& [r, v] : entries[c]) solver.set(r, c, v);
  return solver.run();
}

HomologyResult reduced_homology(const SimplicialComplex& c) {
  const int dim = c.dim();
  std::vector<long long> rank(dim + 3, 0);          // rank[k] = rank of boundary_{k}
  std::vector<std::vector<Int>> factors(dim + 2);   // of boundary_k, k = 0..dim+1
  for (int d = 0; d <= dim; ++d) {
    const long long cols = c.face_count(d);
    if (cols == 0) continue;
    std::vector<std::vector<std::pair<int, Int>>> entries(cols);
    long long nrows;
    if (d == 0) {
      nrows = 1;
      for (long long j = 0; j < cols; ++j) entries[j] = {{0, Int(1)}};
    } else {
      nrows = c.face_count(d - 1);
      const auto& below = c.faces[d - 1];
      for (long long j = 0; j < cols; ++j) {
        const auto& face = c.faces[d][j];
        std::vector<int> sub(face.size() - 1);
        for (size_t t = 0; t < face.size(); ++t) {
          size_t w = 0;
          for (size_t s = 0; s < face.size(); ++s)
            if (s != t) sub[w++] = face[s];
          auto it = std::lower_bound(below.begin(), below.end(), sub);
          entries[j].push_back({static_cast<int>(it - below.begin()),
                                t % 2 ? Int(-1) : Int(1)});
        }
      }
    }
    auto inv = smith_invariants(static_cast<int>(nrows), static_cast<int>(cols), entries);
    rank[d] = static_cast<long long>(inv.size());
    factors[d] = std::move(inv);
  }
  HomologyResult h;
  h.betti.resize(dim + 2);
  h.torsion.resize(dim + 2);
  for (int d = -1; d <= dim; ++d) {
    h.betti[d + 1] = c.face_count(d) - rank[d + 1] - (d >= 0 ? rank[d] : 0);
    for (const Int& f : factors[d + 1])
      if (f > 1) h.torsion[d + 1].push_back(f);
  }
  return h;
}

HomologyResult interval_homology(const FinitePoset& p, size_t a, size_t b) {
  return reduced_homology(order_complex(interval(p, a, b)));
}

nlohmann::ordered_json CMReport::to_json() const {
  nlohmann::ordered_json j;
  j["cohen_macaulay"] = cohen_macaulay;
  j["intervals"] = std::to_string(intervals);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["a"] = row.a;
    r["b"] = row.b;
    r["length"] = std::to_string(row.length);
    auto bt = nlohmann::ordered_json::array();
    for (long long v : row.betti) bt.push_back(std::to_string(v));
    r["betti"] = std::move(bt);
    r["torsion_free"] = row.torsion_free;
    r["concentrated"] = row.concentrated;
    r["mu"] = row.mu.str();
    r["euler_matches"] = row.euler_matches;
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  return j;
}

CMReport cohen_macaulay_report(const FinitePoset& p, Exec exec, bool keep_rows) {
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < p.size(); ++a)
    p.up.for_each_in_row(a, [&](size_t b) {
      if (b != a) pairs.push_back({a, b});
    });
  std::vector<IntervalHomologyRow> rows(pairs.size());
#pragma omp parallel for if (exec == Exec::parallel) schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) {
    auto [a, b] = pairs[k];
    IntervalHomologyRow row;
    row.a = p.names[a];
    row.b = p.names[b];
    row.length = p.ranks[b] - p.ranks[a];
    HomologyResult h = interval_homology(p, a, b);
    for (int d = -1; d <= row.length - 2; ++d) row.betti.push_back(h.betti_of(d));
    row.torsion_free = h.torsion_free();
    row.concentrated = h.concentrated_in(row.length - 2);
    row.mu = mobius(p, a, b);
    row.euler_matches = (h.reduced_euler() == row.mu);
    rows[k] = std::move(row);
  }
  CMReport report;
  report.intervals = static_cast<long long>(rows.size());
  for (auto& row : rows) {
    if (!(row.torsion_free && row.concentrated && row.euler_matches))
      report.cohen_macaulay = false;
    if (keep_rows) report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ppos
