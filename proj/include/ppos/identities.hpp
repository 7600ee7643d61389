#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ppos/exact.hpp"
#include "ppos/parallel.hpp"
#include "ppos/partitions.hpp"

namespace ppos {

// falling product prod_{j=1}^{n} (x - j); bracket(0) == 1
IntPolynomial bracket(int n);
// (x - c) * bracket(a) / bracket(b), which is always an exact division here
IntPolynomial bracket_quot(int c, int a, int b);

// closed characteristic polynomial of the family poset, when one exists;
// throws OutOfRange for families without one
IntPolynomial closed_form(Family f, int n, int i = -1);
// value of the closed form at 0, computed independently of closed_form
Int expected_constant(Family f, int n, int i = -1);
// |expected_constant|: rank of the single nonvanishing reduced homology
// group, summed over maximal intervals when the poset has several tops
Int expected_top_rank(Family f, int n, int i = -1);
// rank of the maximal elements of the poset
int expected_height(Family f, int n, int i = -1);

struct LemmaReport {
  std::string lemma;
  bool holds = true;
  long long cases = 0;
  std::vector<std::string> failures;  // one entry per failing case or point
};

std::vector<std::string> lemma_names();
// checks one polynomial/series identity over its whole parameter grid; with
// perturb set, one side is shifted by 1 and the check must fail
LemmaReport verify_lemma(const std::string& name, bool perturb = false);

// counts[n][k] = number of elements on ground size n with k blocks, read off
// the exponential generating function; defined for families A and MA
std::vector<std::vector<Int>> egf_counts(Family f, int maxn);

struct TheoremRow {
  std::string family;
  int n = 0;
  int i = -1;  // -1 when the family takes no index
  std::string kind;  // height | charpoly | constant
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct TheoremReport {
  std::string family;
  bool all_ok = true;
  std::vector<TheoremRow> rows;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

// builds every poset of the family up to maxn and compares height,
// characteristic polynomial and constant term against the closed forms;
// perturb shifts each expectation so every comparison must come out false
TheoremReport verify_theorems(Family f, int maxn, long long cap,
                              Exec exec = Exec::serial, bool perturb = false);

}  // namespace ppos
