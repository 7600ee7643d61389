#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "ppos/identities.hpp"
#include "ppos/poset.hpp"

using namespace ppos;

TEST_CASE("bracket products") {
  CHECK(bracket(0) == IntPolynomial::constant(1));
  CHECK(bracket(1).str() == "x-1");
  CHECK(bracket(3).str() == "x^3-6x^2+11x-6");
  CHECK(bracket_quot(2, 5, 4).str() == "x^2-7x+10");
  CHECK(bracket_quot(0, 3, 3).str() == "x");
}

TEST_CASE("closed characteristic polynomials") {
  CHECK(closed_form(Family::A, 3).str() == "x^2-6x+9");
  CHECK(closed_form(Family::A, 1).str() == "1");
  CHECK(closed_form(Family::A_fixed, 4, 1) ==
        IntPolynomial::x_minus(1) * IntPolynomial::x_minus(4).pow(2));
  CHECK(closed_form(Family::A_fixed, 3, 3).str() == "1");
  CHECK(closed_form(Family::B, 2).str() == "x^2-8x+16");
  CHECK(closed_form(Family::B_fixed, 3, 1).str() == "x^2-12x+36");
  CHECK(closed_form(Family::B_interval, 2).str() == "x^2-5x+4");
  CHECK(closed_form(Family::beta, 2).str() == "x^2-6x+5");
  CHECK(closed_form(Family::MA, 3).str() == "x^2-9x+20");
  CHECK(closed_form(Family::MA, 3, 1).str() == "x^2-7x+10");
  CHECK(closed_form(Family::MA_interval, 2, 1).str() == "x-1");

  CHECK_THROWS_AS(closed_form(Family::A_extended, 3), OutOfRange);
  CHECK_THROWS_AS(closed_form(Family::betaB, 2), OutOfRange);
  CHECK_THROWS_AS(closed_form(Family::betaB_interval, 2), OutOfRange);
}

TEST_CASE("closed forms share the multi-pointed boundary case") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(closed_form(Family::MA, n, n) == bracket(n - 1));
    CHECK(closed_form(Family::MA_interval, n, n) == bracket(n - 1));
  }
}

TEST_CASE("bounded closed forms vanish at one") {
  for (int n = 2; n <= 6; ++n) CHECK(closed_form(Family::A_fixed, n, 1).eval(1) == 0);
  for (int n = 2; n <= 4; ++n) {
    CHECK(closed_form(Family::B_interval, n).eval(1) == 0);
    CHECK(closed_form(Family::beta, n).eval(1) == 0);
    for (int i = 1; i <= n; ++i)
      CHECK(closed_form(Family::MA_interval, n, i).eval(1) == 0);
  }
}

TEST_CASE("expected constants") {
  CHECK(expected_constant(Family::A_fixed, 4, 1) == -16);
  CHECK(expected_constant(Family::A_extended, 3) == -4);
  CHECK(expected_constant(Family::B_interval, 2) == 4);
  CHECK(expected_constant(Family::beta, 2) == 5);
  CHECK(expected_constant(Family::MA, 3) == 20);
  CHECK(expected_constant(Family::MA, 3, 1) == 10);
  CHECK(expected_constant(Family::MA_interval, 3, 2) == 2);
  CHECK(expected_top_rank(Family::A, 3) == 9);
  CHECK(expected_top_rank(Family::A_extended, 2) == 1);
  CHECK(expected_top_rank(Family::A_fixed, 4, 1) == 16);
}

TEST_CASE("expected heights") {
  CHECK(expected_height(Family::A, 3) == 2);
  CHECK(expected_height(Family::A_fixed, 4, 1) == 3);
  CHECK(expected_height(Family::A_fixed, 4, 0) == 3);
  CHECK(expected_height(Family::A_extended, 3) == 3);
  CHECK(expected_height(Family::MA, 4) == 3);
  CHECK(expected_height(Family::MA_interval, 4, 2) == 3);
  CHECK(expected_height(Family::B, 3) == 3);
  CHECK(expected_height(Family::B_fixed, 3, 2) == 1);
  CHECK(expected_height(Family::B_interval, 3) == 3);
  CHECK(expected_height(Family::beta, 3) == 3);
  CHECK(expected_height(Family::betaB, 3) == 3);
  CHECK(expected_height(Family::betaB_interval, 3) == 3);
}

TEST_CASE("constants agree with the closed forms") {
  auto sweep = [](Family f, int n, int i) {
    CHECK(expected_constant(f, n, i) == closed_form(f, n, i).coeff(0));
  };
  for (int n = 1; n <= 6; ++n) sweep(Family::A, n, -1);
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= n; ++i) sweep(Family::A_fixed, n, i);
  for (int n = 1; n <= 4; ++n) {
    sweep(Family::B, n, -1);
    sweep(Family::B_interval, n, -1);
    sweep(Family::beta, n, -1);
    for (int i = 0; i <= n; ++i) sweep(Family::B_fixed, n, i);
  }
  for (int n = 1; n <= 5; ++n) {
    sweep(Family::MA, n, -1);
    for (int i = 1; i <= n; ++i) {
      sweep(Family::MA, n, i);
      sweep(Family::MA_interval, n, i);
    }
  }
}

TEST_CASE("polynomial lemmas hold on their grids") {
  const std::map<std::string, long long> cases = {
      {"induction_step", 65}, {"dominantA", 55},  {"usefulB", 2024},
      {"dominantB", 55},      {"convolution", 150}, {"facteur", 10},
      {"Mdominant", 65},      {"f32_vanishing", 8}};
  auto names = lemma_names();
  CHECK(names.size() == 8);
  for (const auto& name : names) {
    LemmaReport rep = verify_lemma(name);
    CHECK(rep.lemma == name);
    CHECK(rep.holds);
    CHECK(rep.failures.empty());
    CHECK(rep.cases == cases.at(name));
  }
  CHECK_THROWS_AS(verify_lemma("no_such_lemma"), OutOfRange);
}

TEST_CASE("perturbed lemmas fail") {
  for (const auto& name : lemma_names()) {
    LemmaReport rep = verify_lemma(name, true);
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(rep.failures.empty());
  }
}

TEST_CASE("generating function counts") {
  auto a = egf_counts(Family::A, 6);
  CHECK(a[0] == std::vector<Int>({1}));
  CHECK(a[3] == std::vector<Int>({0, 3, 6, 1}));
  auto ma = egf_counts(Family::MA, 5);
  CHECK(ma[3] == std::vector<Int>({0, 7, 9, 1}));
  CHECK_THROWS_AS(egf_counts(Family::B, 4), OutOfRange);
  CHECK_THROWS_AS(egf_counts(Family::A, 0), OutOfRange);
  CHECK_THROWS_AS(egf_counts(Family::A, 61), OutOfRange);

  // series counts match brute-force enumeration: k blocks sit at rank n-k
  for (Family f : {Family::A, Family::MA}) {
    auto counts = egf_counts(f, 5);
    for (int n = 1; n <= 5; ++n) {
      FamilySpec spec;
      spec.family = f;
      spec.n = n;
      auto graded = graded_counts(spec);
      for (int k = 1; k <= n; ++k) CHECK(counts[n][k] == Int(graded[n - k]));
    }
  }
}

TEST_CASE("poset reports") {
  TheoremReport rep = verify_theorems(Family::A, 4, 200000);
  CHECK(rep.family == "A");
  CHECK(rep.all_ok);
  CHECK(rep.rows.size() == 12);
  for (const auto& row : rep.rows) CHECK(row.ok);

  TheoremReport bad = verify_theorems(Family::A, 4, 200000, Exec::serial, true);
  CHECK_FALSE(bad.all_ok);
  for (const auto& row : bad.rows) CHECK_FALSE(row.ok);

  TheoremReport bf = verify_theorems(Family::B_fixed, 3, 200000);
  CHECK(bf.all_ok);
  CHECK(bf.rows.size() == 18);

  TheoremReport bb = verify_theorems(Family::betaB, 3, 200000);
  CHECK(bb.all_ok);
  for (const auto& row : bb.rows) CHECK(row.kind == "height");
  CHECK(bb.rows.size() == 3);

  std::string csv = rep.to_csv();
  CHECK(csv.rfind("family,n,i,kind,expected,computed,verdict\n", 0) == 0);
  CHECK(csv.find("A,3,,charpoly,x^2-6x+9,x^2-6x+9,ok") != std::string::npos);

  auto j = rep.to_json();
  CHECK(j["family"] == "A");
  CHECK(j["all_ok"] == true);
  CHECK(j["rows"].size() == 12);
  CHECK(j["rows"][0]["n"] == "1");
  CHECK(j["rows"][0]["i"] == "");
}
