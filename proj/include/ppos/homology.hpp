#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ppos/exact.hpp"
#include "ppos/parallel.hpp"
#include "ppos/poset.hpp"

namespace ppos {

// faces[d] lists the d-dimensional faces as sorted vertex vectors in
// lexicographic order; the empty face is implicit
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> faces;
  int dim() const { return static_cast<int>(faces.size()) - 1; }
  long long face_count(int d) const {
    if (d == -1) return 1;
    if (d < -1 || d > dim()) return 0;
    return static_cast<long long>(faces[d].size());
  }
};

// chains of the proper part of a bounded poset; vertices are renumbered
// 0..k-1 following poset indices
SimplicialComplex order_complex(const FinitePoset& p);  // NotBounded without a top

// invariant factors d1 | d2 | ... of an integer matrix given as sparse
// columns; entries[c] holds (row, value) pairs
std::vector<Int> smith_invariants(int nrows, int ncols,
                                  const std::vector<std::vector<std::pair<int, Int>>>& entries);

struct HomologyResult {
  // index k describes reduced homology in degree k-1
  std::vector<long long> betti;
  std::vector<std::vector<Int>> torsion;

  long long betti_of(int d) const {
    size_t k = static_cast<size_t>(d + 1);
    return k < betti.size() ? betti[k] : 0;
  }
  std::vector<Int> torsion_of(int d) const {
    size_t k = static_cast<size_t>(d + 1);
    return k < torsion.size() ? torsion[k] : std::vector<Int>{};
  }
  bool torsion_free() const {
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
  bool concentrated_in(int d) const {
    if (!torsion_free()) return false;
    for (size_t k = 0; k < betti.size(); ++k)
      if (betti[k] != 0 && static_cast<int>(k) - 1 != d) return false;
    return true;
  }
  Int reduced_euler() const {
    Int s = 0;
    for (size_t k = 0; k < betti.size(); ++k)
      s += (k % 2 ? Int(betti[k]) : Int(-betti[k]));  // k=0 is degree -1
    return s;
  }
};

HomologyResult reduced_homology(const SimplicialComplex& c);

// homology of the open interval (a, b)
HomologyResult interval_homology(const FinitePoset& p, size_t a, size_t b);

struct IntervalHomologyRow {
  std::string a, b;
  int length = 0;
  std::vector<long long> betti;  // degrees -1 .. length-2
  bool torsion_free = true;
  bool concentrated = true;  // in degree length-2
  Int mu;                    // order-theoretic value
  bool euler_matches = true;
};

struct CMReport {
  bool cohen_macaulay = true;
  long long intervals = 0;
  std::vector<IntervalHomologyRow> rows;
  nlohmann::ordered_json to_json() const;
};

// checks every interval of length >= 1: homology concentrated in the top
// degree, torsion-free, Euler characteristic equal to the Moebius value
CMReport cohen_macaulay_report(const FinitePoset& p, Exec exec = Exec::serial,
                               bool keep_rows = true);

}  // namespace ppos
