#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppos/errors.hpp"
#include "ppos/exact.hpp"
#include "ppos/parallel.hpp"
#include "ppos/partitions.hpp"

namespace ppos {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words() const { return words_; }
  bool get(size_t r, size_t c) const {
    return bits_[r * words_ + (c >> 6)] >> (c & 63) & 1u;
  }
  void set(size_t r, size_t c) {
    bits_[r * words_ + (c >> 6)] |= uint64_t{1} << (c & 63);
  }
  void clear(size_t r, size_t c) {
    bits_[r * words_ + (c >> 6)] &= ~(uint64_t{1} << (c & 63));
  }
  const uint64_t* row(size_t r) const { return bits_.data() + r * words_; }
  template <class Fn>
  void for_each_in_row(size_t r, Fn fn) const {
    const uint64_t* w = row(r);
    for (size_t k = 0; k < words_; ++k) {
      uint64_t x = w[k];
      while (x) {
        fn(k * 64 + static_cast<unsigned>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

 private:
  size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> bits_;
};

inline bool rows_intersect(const BitMatrix& a, size_t ra, const BitMatrix& b, size_t rb) {
  const uint64_t* x = a.row(ra);
  const uint64_t* y = b.row(rb);
  for (size_t k = 0; k < a.words(); ++k)
    if (x[k] & y[k]) return true;
  return false;
}

inline bool row_subset(const BitMatrix& a, size_t ra, const BitMatrix& b, size_t rb) {
  const uint64_t* x = a.row(ra);
  const uint64_t* y = b.row(rb);
  for (size_t k = 0; k < a.words(); ++k)
    if (x[k] & ~y[k]) return false;
  return true;
}

// A finite graded poset with a unique minimum.  build_poset validates the
// relation (reflexive, antisymmetric, transitive), finds the minimum,
// extracts cover edges and checks that every cover raises the rank by one.
struct FinitePoset {
  std::vector<std::string> names;
  BitMatrix up;        // up.get(a, b) == (a <= b)
  BitMatrix down;      // transpose of up
  BitMatrix cover_up;  // cover_up.get(a, b) == (b covers a)
  std::vector<std::vector<int>> up_covers, down_covers;
  std::vector<int> ranks;
  int bottom = -1;
  int max_rank = 0;

  size_t size() const { return names.size(); }
  bool leq(size_t a, size_t b) const { return up.get(a, b); }
  std::vector<int> maximal_elements() const;
  size_t cover_count() const;
  nlohmann::ordered_json to_json() const;
};

FinitePoset build_poset(std::vector<std::string> names,
                        const std::function<bool(size_t, size_t)>& leq_fn,
                        Exec exec = Exec::serial);

FinitePoset family_poset(const FamilySpec& spec, Exec exec = Exec::serial);

// all values mu(a, x); zero where a <= x fails
std::vector<Int> mobius_from(const FinitePoset& p, size_t a, Exec exec = Exec::serial);

// single-value recursive evaluation, kept as an independent reference
Int mobius(const FinitePoset& p, size_t a, size_t b);

// sum over x of mu(bottom, x) * t^(max_rank - rank(x)); maximal elements must
// share one rank
IntPolynomial characteristic_polynomial(const FinitePoset& p, Exec exec = Exec::serial);

FinitePoset interval(const FinitePoset& p, size_t a, size_t b);
FinitePoset poset_product(const FinitePoset& p, const FinitePoset& q);

bool are_isomorphic(const FinitePoset& p, const FinitePoset& q, size_t limit = 5000);

// every pair of distinct covers of one element has a common upper cover
bool is_semimodular(const FinitePoset& p);
// is_semimodular holds in every interval
bool is_totally_semimodular(const FinitePoset& p, Exec exec = Exec::serial);

}  // namespace ppos
