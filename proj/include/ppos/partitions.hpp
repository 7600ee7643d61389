#pragma once

// Pointed set partitions.
//
// Plain families live on {1..n}; signed families live on {±1..±n} where
// blocks come in opposite pairs around an optional self-opposite "zero"
// block.  A pointed partition carries, per block, a nonempty pointed subset
// (a single element for the simple families, any nonempty subset for the
// multi-pointed ones, and for signed families the zero block may instead be
// pointed at most once or not at all depending on the family).

#include <string>
#include <vector>

#include "ppos/errors.hpp"

namespace ppos {

enum class Family {
  A,            // simple pointed partitions of [n]
  A_fixed,      // subposet of A where 1..i stay pointed
  A_extended,   // A plus one synthetic top element
  MA,           // multi-pointed partitions (optional i: 1..i stay pointed)
  MA_interval,  // interval below the one-block element pointed at 1..i
  B,            // signed pointed partitions, zero block pointed when nonempty
  B_fixed,      // subposet of B where ±1..±i stay pointed
  B_interval,   // maximal interval of B (top: everything zero, pointed at +1)
  beta,         // signed, zero block never pointed
  betaB,        // signed, zero block pointed at most once
  betaB_interval  // maximal interval of betaB with pointed top (+1)
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws OutOfRange

bool family_signed(Family f);
bool family_multi(Family f);  // multi-pointed order relation

struct FamilySpec {
  Family family = Family::A;
  int n = 0;
  int i = -1;          // -1 = absent
  long long cap = 200000;
  void validate() const;  // throws OutOfRange
};

// ordering of signed labels: by absolute value, negative before positive
inline bool elem_less(int a, int b) {
  int aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
  return aa != ab ? aa < ab : a < b;
}

struct PointedPartition {
  int n = 0;
  bool signed_ground = false;
  int zero = -1;  // index of the self-opposite block, -1 if none
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<int>> pointed;  // pointed[k] subset of blocks[k]

  int pair_count() const;
  int rank() const;  // plain: n - #blocks; signed: n - #opposite pairs
  int zero_pointed_count() const { return zero < 0 ? 0 : static_cast<int>(pointed[zero].size()); }
  bool pointed_contains(int v) const;

  // sorts elements, pointed sets and blocks into canonical order and
  // locates the zero block
  void normalize();
  void check_structure() const;         // ground coverage, opposite pairs, ...
  void check_family(Family f) const;    // per-family pointedness shape

  std::string str() const;
  bool operator==(const PointedPartition& o) const = default;
};

// Inverse of PointedPartition::str.  The one-argument form checks only the
// generic structure; the family form also validates pointedness shape.
PointedPartition parse_partition(const std::string& text);
PointedPartition parse_partition(const std::string& text, Family f);

// Order relation of the family that both partitions belong to.  Throws
// GroundMismatch when the two partitions live on different grounds.
bool leq(const PointedPartition& p, const PointedPartition& q, Family f);

struct FamilyElements {
  FamilySpec spec;
  std::vector<PointedPartition> elems;  // rank-major, canonical-string-minor
  bool has_top = false;                 // A_extended synthetic top, last index
  std::vector<std::string> names;
  std::vector<int> ranks;
  size_t size() const { return names.size(); }
  bool leq_idx(size_t a, size_t b) const;
};

FamilyElements enumerate_family(const FamilySpec& spec);  // LimitExceeded past cap

// element counts per rank 0..max
std::vector<long long> graded_counts(const FamilySpec& spec);

}  // namespace ppos
