#include "ppos/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppos/homology.hpp"
#include "ppos/hopf.hpp"
#include "ppos/identities.hpp"
#include "ppos/partitions.hpp"
#include "ppos/poset.hpp"

namespace ppos {
namespace {

using njson = nlohmann::ordered_json;

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + path);
    f << text;
  }
  void emit_json(const njson& j) const { emit(j.dump(2) + "\n"); }
};

std::string index_str(int i) { return i < 0 ? std::string() : std::to_string(i); }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

njson spec_header(const FamilySpec& spec) {
  njson j;
  j["family"] = family_name(spec.family);
  j["n"] = std::to_string(spec.n);
  j["i"] = index_str(spec.i);
  return j;
}

std::string spec_label(const FamilySpec& spec) {
  std::string s = std::string(family_name(spec.family)) + " n=" + std::to_string(spec.n);
  if (spec.i >= 0) s += " i=" + std::to_string(spec.i);
  return s;
}

FamilySpec make_spec(const std::string& family, int n, int i, long long cap) {
  FamilySpec spec;
  spec.family = family_from_name(family);
  spec.n = n;
  spec.i = i;
  spec.cap = cap;
  spec.validate();
  return spec;
}

size_t find_element(const FinitePoset& P, const std::string& name) {
  for (size_t k = 0; k < P.size(); ++k)
    if (P.names[k] == name) return k;
  throw OutOfRange("no element named " + name);
}

std::vector<Family> all_families() {
  return {Family::A,      Family::A_fixed,    Family::A_extended, Family::MA,
          Family::MA_interval, Family::B,     Family::B_fixed,    Family::B_interval,
          Family::beta,   Family::betaB,      Family::betaB_interval};
}

// bounds keeping a full sweep within a few minutes
int default_verify_maxn(Family f) {
  switch (f) {
    case Family::A:
    case Family::A_fixed:
    case Family::A_extended:
      return 6;
    case Family::MA:
    case Family::MA_interval:
      return 5;
    default:
      return 4;
  }
}

int cmd_enumerate(const FamilySpec& spec, Exec exec, const Output& out) {
  FinitePoset P = family_poset(spec, exec);
  if (out.format == "json") {
    njson j = spec_header(spec);
    njson pj = P.to_json();
    for (auto& kv : pj.items()) j[kv.key()] = kv.value();
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "name,rank\n";
    for (size_t k = 0; k < P.size(); ++k)
      s += csv_cell(P.names[k]) + "," + std::to_string(P.ranks[k]) + "\n";
    out.emit(s);
  } else {
    std::string s = spec_label(spec) + ": " + std::to_string(P.size()) +
                    " elements, height " + std::to_string(P.max_rank) + ", " +
                    std::to_string(P.cover_count()) + " cover edges\n";
    for (size_t k = 0; k < P.size(); ++k)
      s += std::to_string(P.ranks[k]) + " " + P.names[k] + "\n";
    out.emit(s);
  }
  return 0;
}

int cmd_counts(Family f, int maxn, long long cap, const Output& out) {
  bool has_egf = f == Family::A || f == Family::MA;
  std::vector<std::vector<Int>> egf;
  if (has_egf) egf = egf_counts(f, maxn);
  struct Row {
    int n;
    std::vector<long long> by_rank;
    long long total;
    bool ok;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (int n = 1; n <= maxn; ++n) {
    FamilySpec spec;
    spec.family = f;
    spec.n = n;
    spec.cap = cap;
    spec.validate();
    std::vector<long long> gc = graded_counts(spec);
    long long total = 0;
    for (long long v : gc) total += v;
    bool ok = true;
    if (has_egf) {
      ok = static_cast<int>(gc.size()) == n;
      for (int r = 0; ok && r < n; ++r) ok = Int(gc[r]) == egf[n][n - r];
      all_ok = all_ok && ok;
    }
    rows.push_back({n, std::move(gc), total, ok});
  }
  if (out.format == "json") {
    njson j;
    j["family"] = family_name(f);
    j["max_n"] = std::to_string(maxn);
    j["all_ok"] = all_ok;
    njson jr = njson::array();
    for (const auto& r : rows) {
      njson row;
      row["n"] = std::to_string(r.n);
      row["total"] = std::to_string(r.total);
      njson br = njson::array();
      for (long long v : r.by_rank) br.push_back(std::to_string(v));
      row["by_rank"] = std::move(br);
      if (has_egf) {
        njson eg = njson::array();
        for (int rk = 0; rk < r.n; ++rk) eg.push_back(egf[r.n][r.n - rk].str());
        row["egf_by_rank"] = std::move(eg);
        row["ok"] = r.ok;
      }
      jr.push_back(std::move(row));
    }
    j["rows"] = std::move(jr);
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "family,n,rank,count,egf,verdict\n";
    for (const auto& r : rows)
      for (size_t rk = 0; rk < r.by_rank.size(); ++rk) {
        s += std::string(family_name(f)) + "," + std::to_string(r.n) + "," +
             std::to_string(rk) + "," + std::to_string(r.by_rank[rk]) + ",";
        if (has_egf && static_cast<int>(rk) < r.n) {
          const Int& e = egf[r.n][r.n - static_cast<int>(rk)];
          s += e.str();
          s += Int(r.by_rank[rk]) == e ? ",ok" : ",fail";
        } else {
          s += ",";
        }
        s += "\n";
      }
    out.emit(s);
  } else {
    std::string s;
    for (const auto& r : rows) {
      s += std::string(family_name(f)) + " n=" + std::to_string(r.n) + ": total " +
           std::to_string(r.total) + ", by rank [";
      for (size_t rk = 0; rk < r.by_rank.size(); ++rk) {
        if (rk) s += ' ';
        s += std::to_string(r.by_rank[rk]);
      }
      s += "]";
      if (has_egf) s += r.ok ? ", egf ok" : ", EGF MISMATCH";
      s += "\n";
    }
    out.emit(s);
  }
  return all_ok ? 0 : 1;
}

int cmd_charpoly(const FamilySpec& spec, Exec exec, const Output& out) {
  FinitePoset P = family_poset(spec, exec);
  IntPolynomial cp = characteristic_polynomial(P, exec);
  bool have_cf = true;
  IntPolynomial cf;
  try {
    cf = closed_form(spec.family, spec.n, spec.i);
  } catch (const OutOfRange&) {
    have_cf = false;
  }
  bool match = !have_cf || cp == cf;
  if (out.format == "json") {
    njson j = spec_header(spec);
    j["computed"] = cp.str();
    j["closed_form"] = have_cf ? njson(cf.str()) : njson(nullptr);
    j["match"] = match;
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "family,n,i,computed,closed_form,verdict\n";
    s += std::string(family_name(spec.family)) + "," + std::to_string(spec.n) + "," +
         index_str(spec.i) + "," + cp.str() + "," + (have_cf ? cf.str() : "") + "," +
         (match ? "ok" : "fail") + "\n";
    out.emit(s);
  } else {
    std::string s = "computed:    " + cp.str() + "\n";
    s += "closed form: " + (have_cf ? cf.str() : "(none)") + "\n";
    if (have_cf) s += std::string("match: ") + (match ? "yes" : "no") + "\n";
    out.emit(s);
  }
  return match ? 0 : 1;
}

int cmd_verify(const std::string& family, int maxn, long long cap, bool negative,
               Exec exec, const Output& out) {
  std::vector<Family> fams =
      family.empty() ? all_families() : std::vector<Family>{family_from_name(family)};
  std::vector<TheoremReport> reports;
  bool all_ok = true;
  for (Family f : fams) {
    int m = maxn > 0 ? maxn : default_verify_maxn(f);
    reports.push_back(verify_theorems(f, m, cap, exec, negative));
    all_ok = all_ok && reports.back().all_ok;
  }
  if (out.format == "json") {
    njson j;
    j["all_ok"] = all_ok;
    njson jf = njson::array();
    for (const auto& rep : reports) jf.push_back(rep.to_json());
    j["families"] = std::move(jf);
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "family,n,i,kind,expected,computed,verdict\n";
    for (const auto& rep : reports) {
      std::string full = rep.to_csv();
      s += full.substr(full.find('\n') + 1);
    }
    out.emit(s);
  } else {
    std::string s;
    for (const auto& rep : reports) {
      size_t fails = 0;
      for (const auto& r : rep.rows)
        if (!r.ok) ++fails;
      s += rep.family + ": " + std::to_string(rep.rows.size()) + " checks, " +
           (fails ? std::to_string(fails) + " failed" : "all ok") + "\n";
      for (const auto& r : rep.rows)
        if (!r.ok)
          s += "  FAIL n=" + std::to_string(r.n) +
               (r.i >= 0 ? " i=" + std::to_string(r.i) : "") + " " + r.kind +
               ": expected " + r.expected + ", computed " + r.computed + "\n";
    }
    out.emit(s);
  }
  return all_ok ? 0 : 1;
}

int cmd_semimodularity(const FamilySpec& spec, Exec exec, const Output& out) {
  FinitePoset P = family_poset(spec, exec);
  bool sm = is_semimodular(P);
  bool tsm = is_totally_semimodular(P, exec);
  if (out.format == "json") {
    njson j = spec_header(spec);
    j["semimodular"] = sm;
    j["totally_semimodular"] = tsm;
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "family,n,i,semimodular,totally_semimodular\n";
    s += std::string(family_name(spec.family)) + "," + std::to_string(spec.n) + "," +
         index_str(spec.i) + "," + (sm ? "true" : "false") + "," +
         (tsm ? "true" : "false") + "\n";
    out.emit(s);
  } else {
    std::string s = std::string("semimodular: ") + (sm ? "yes" : "no") + "\n";
    s += std::string("totally semimodular: ") + (tsm ? "yes" : "no") + "\n";
    out.emit(s);
  }
  return 0;
}

int cmd_homology(const FamilySpec& spec, const std::string& a, const std::string& b,
                 Exec exec, const Output& out) {
  FinitePoset P = family_poset(spec, exec);
  if (!a.empty() || !b.empty()) {
    size_t ai = a.empty() ? static_cast<size_t>(P.bottom) : find_element(P, a);
    size_t bi;
    if (b.empty()) {
      std::vector<int> tops = P.maximal_elements();
      if (tops.size() != 1)
        throw OutOfRange("poset has several maximal elements; pass --b");
      bi = static_cast<size_t>(tops[0]);
    } else {
      bi = find_element(P, b);
    }
    if (!P.leq(ai, bi))
      throw NotComparable(P.names[ai] + " is not below " + P.names[bi]);
    HomologyResult H = interval_homology(P, ai, bi);
    Int mu = mobius(P, ai, bi);
    bool euler_ok = H.reduced_euler() == mu;
    if (out.format == "json") {
      njson j = spec_header(spec);
      j["a"] = P.names[ai];
      j["b"] = P.names[bi];
      njson hb = njson::array();
      for (size_t k = 0; k < H.betti.size(); ++k) {
        njson row;
        row["degree"] = std::to_string(static_cast<int>(k) - 1);
        row["rank"] = std::to_string(H.betti[k]);
        njson tor = njson::array();
        for (const auto& t : H.torsion_of(static_cast<int>(k) - 1))
          tor.push_back(t.str());
        row["torsion"] = std::move(tor);
        hb.push_back(std::move(row));
      }
      j["homology"] = std::move(hb);
      j["mu"] = mu.str();
      j["euler_matches"] = euler_ok;
      out.emit_json(j);
    } else if (out.format == "csv") {
      std::string s = "a,b,degree,rank,torsion,mu,euler_matches\n";
      for (size_t k = 0; k < H.betti.size(); ++k) {
        std::string tor;
        for (const auto& t : H.torsion_of(static_cast<int>(k) - 1)) {
          if (!tor.empty()) tor += ' ';
          tor += t.str();
        }
        s += csv_cell(P.names[ai]) + "," + csv_cell(P.names[bi]) + "," +
             std::to_string(static_cast<int>(k) - 1) + "," +
             std::to_string(H.betti[k]) + "," + tor + "," + mu.str() + "," +
             (euler_ok ? "true" : "false") + "\n";
      }
      out.emit(s);
    } else {
      std::string s = "interval [" + P.names[ai] + ", " + P.names[bi] + "]\n";
      for (size_t k = 0; k < H.betti.size(); ++k) {
        int d = static_cast<int>(k) - 1;
        s += "degree " + std::to_string(d) + ": rank " + std::to_string(H.betti[k]);
        auto tor = H.torsion_of(d);
        if (!tor.empty()) {
          s += ", torsion";
          for (const auto& t : tor) s += " " + t.str();
        }
        s += "\n";
      }
      s += "mu: " + mu.str() + "\n";
      s += std::string("euler matches mu: ") + (euler_ok ? "yes" : "no") + "\n";
      out.emit(s);
    }
    return euler_ok ? 0 : 1;
  }
  CMReport R = cohen_macaulay_report(P, exec, true);
  if (out.format == "json") {
    njson j = spec_header(spec);
    njson rj = R.to_json();
    for (auto& kv : rj.items()) j[kv.key()] = kv.value();
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "a,b,length,betti,concentrated,torsion_free,mu,euler_matches\n";
    for (const auto& r : R.rows) {
      std::string bt;
      for (size_t k = 0; k < r.betti.size(); ++k) {
        if (k) bt += ' ';
        bt += std::to_string(r.betti[k]);
      }
      s += csv_cell(r.a) + "," + csv_cell(r.b) + "," + std::to_string(r.length) +
           "," + bt + "," + (r.concentrated ? "true" : "false") + "," +
           (r.torsion_free ? "true" : "false") + "," + r.mu.str() + "," +
           (r.euler_matches ? "true" : "false") + "\n";
    }
    out.emit(s);
  } else {
    std::string s = spec_label(spec) + ": cohen_macaulay " +
                    (R.cohen_macaulay ? "yes" : "no") + " (" +
                    std::to_string(R.intervals) + " intervals of length >= 1)\n";
    for (const auto& r : R.rows)
      if (!(r.concentrated && r.torsion_free && r.euler_matches))
        s += "  FAIL [" + r.a + ", " + r.b + "] length " + std::to_string(r.length) +
             (r.concentrated ? "" : " not-concentrated") +
             (r.torsion_free ? "" : " torsion") +
             (r.euler_matches ? "" : " euler-mismatch") + "\n";
    out.emit(s);
  }
  return R.cohen_macaulay ? 0 : 1;
}

int cmd_hopf(int maxn, const Output& out) {
  struct HRow {
    int n;
    size_t terms;
    bool eq, counit;
    int coassoc;  // 1 yes, 0 no, -1 not checked
  };
  std::vector<HRow> hrows;
  std::vector<njson> coj;
  bool all_ok = true;
  for (int n = 1; n <= maxn; ++n) {
    auto st = coproduct_structural(n);
    auto se = coproduct_series(n);
    bool eq = st == se;
    bool cu = check_counit(n);
    int coa = n <= 5 ? (check_coassociative(n) ? 1 : 0) : -1;
    all_ok = all_ok && eq && cu && coa != 0;
    hrows.push_back({n, st.size(), eq, cu, coa});
    coj.push_back(coproduct_json(n));
  }
  std::vector<Int> mu = mobius_generators(maxn);
  std::vector<Int> muexp(maxn + 1);
  std::vector<bool> muok(maxn + 1, true);
  for (int n = 1; n <= maxn; ++n) {
    muexp[n] = n == 1 ? Int(1)
                      : (n % 2 ? pow_int(Int(n), n - 2) : -pow_int(Int(n), n - 2));
    muok[n] = mu[n] == muexp[n];
    all_ok = all_ok && muok[n];
  }
  if (out.format == "json") {
    njson j;
    j["max_n"] = std::to_string(maxn);
    j["all_ok"] = all_ok;
    njson jc = njson::array();
    for (size_t k = 0; k < hrows.size(); ++k) {
      const HRow& h = hrows[k];
      njson row;
      row["n"] = std::to_string(h.n);
      row["structural_equals_series"] = h.eq;
      row["counit_ok"] = h.counit;
      row["coassociative"] = h.coassoc < 0 ? njson(nullptr) : njson(h.coassoc == 1);
      for (auto& kv : coj[k].items())
        if (kv.key() != "generator") row[kv.key()] = kv.value();
      jc.push_back(std::move(row));
    }
    j["coproducts"] = std::move(jc);
    njson jm = njson::array();
    for (int n = 1; n <= maxn; ++n) {
      njson row;
      row["n"] = std::to_string(n);
      row["value"] = mu[n].str();
      row["expected"] = muexp[n].str();
      row["ok"] = static_cast<bool>(muok[n]);
      jm.push_back(std::move(row));
    }
    j["mobius"] = std::move(jm);
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "check,n,ok\n";
    for (const HRow& h : hrows) {
      s += "structural_vs_series," + std::to_string(h.n) + "," + (h.eq ? "ok" : "fail") + "\n";
      s += "counit," + std::to_string(h.n) + "," + (h.counit ? "ok" : "fail") + "\n";
      if (h.coassoc >= 0)
        s += "coassociative," + std::to_string(h.n) + "," + (h.coassoc ? "ok" : "fail") + "\n";
    }
    for (int n = 1; n <= maxn; ++n)
      s += "mobius," + std::to_string(n) + "," + (muok[n] ? "ok" : "fail") + "\n";
    out.emit(s);
  } else {
    std::string s;
    for (const HRow& h : hrows) {
      s += "n=" + std::to_string(h.n) + ": " + std::to_string(h.terms) +
           " coproduct terms, structural == series: " + (h.eq ? "yes" : "NO") +
           ", counit: " + (h.counit ? "ok" : "FAIL");
      if (h.coassoc >= 0)
        s += std::string(", coassociative: ") + (h.coassoc ? "yes" : "NO");
      s += "\n";
    }
    s += "mobius:";
    for (int n = 1; n <= maxn; ++n) s += " " + mu[n].str();
    s += all_ok ? " (all match)\n" : " (MISMATCH)\n";
    out.emit(s);
  }
  return all_ok ? 0 : 1;
}

int cmd_identities(const std::string& lemma, bool negative, const Output& out) {
  std::vector<std::string> names =
      lemma.empty() ? lemma_names() : std::vector<std::string>{lemma};
  std::vector<LemmaReport> reports;
  bool all_ok = true;
  for (const auto& nm : names) {
    reports.push_back(verify_lemma(nm, negative));
    all_ok = all_ok && reports.back().holds;
  }
  if (out.format == "json") {
    njson j;
    j["all_ok"] = all_ok;
    njson jl = njson::array();
    for (const auto& rep : reports) {
      njson row;
      row["lemma"] = rep.lemma;
      row["holds"] = rep.holds;
      row["cases"] = std::to_string(rep.cases);
      njson fl = njson::array();
      for (const auto& w : rep.failures) fl.push_back(w);
      row["failures"] = std::move(fl);
      jl.push_back(std::move(row));
    }
    j["lemmas"] = std::move(jl);
    out.emit_json(j);
  } else if (out.format == "csv") {
    std::string s = "lemma,cases,verdict\n";
    for (const auto& rep : reports)
      s += rep.lemma + "," + std::to_string(rep.cases) + "," +
           (rep.holds ? "ok" : "fail") + "\n";
    out.emit(s);
  } else {
    std::string s;
    for (const auto& rep : reports) {
      s += rep.lemma + ": " + std::to_string(rep.cases) + " cases, " +
           (rep.holds ? "pass" : "FAIL") + "\n";
      size_t show = std::min<size_t>(rep.failures.size(), 5);
      for (size_t k = 0; k < show; ++k) s += "  at " + rep.failures[k] + "\n";
      if (rep.failures.size() > show)
        s += "  ... and " + std::to_string(rep.failures.size() - show) + " more\n";
    }
    out.emit(s);
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact pointed-partition poset toolkit"};
  app.require_subcommand(1);

  std::string family, format = "text", outpath, a_name, b_name, lemma;
  int n = 0, i = -1, maxn = 0;
  long long cap = 200000;
  bool serial = false, negative = false;

  auto add_family = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--family", family, "partition family")
                  ->check(CLI::IsMember({"A", "A_fixed", "A_extended", "MA",
                                         "MA_interval", "B", "B_fixed", "B_interval",
                                         "beta", "betaB", "betaB_interval"}));
    if (required) o->required();
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--out", outpath, "write to a file instead of stdout");
  };
  auto add_n = [&](CLI::App* c) {
    c->add_option("--n", n, "ground-set size")->required()->check(CLI::PositiveNumber);
  };
  auto add_i = [&](CLI::App* c) {
    c->add_option("--i", i, "family index")->check(CLI::NonNegativeNumber);
  };
  auto add_cap = [&](CLI::App* c) {
    c->add_option("--cap", cap, "element-count limit")->check(CLI::PositiveNumber);
  };
  auto add_serial = [&](CLI::App* c) {
    c->add_flag("--serial", serial, "disable parallel kernels");
  };

  CLI::App* c_enum =
      app.add_subcommand("enumerate", "list the elements and covers of one poset");
  add_family(c_enum, true);
  add_n(c_enum);
  add_i(c_enum);
  add_cap(c_enum);
  add_out(c_enum);
  add_serial(c_enum);

  CLI::App* c_counts = app.add_subcommand(
      "counts", "graded counts, cross-checked against the generating function");
  add_family(c_counts, true);
  c_counts->add_option("--max-n", maxn, "largest ground-set size")
      ->check(CLI::PositiveNumber);
  add_cap(c_counts);
  add_out(c_counts);

  CLI::App* c_charpoly = app.add_subcommand(
      "charpoly", "characteristic polynomial, computed and closed form");
  add_family(c_charpoly, true);
  add_n(c_charpoly);
  add_i(c_charpoly);
  add_cap(c_charpoly);
  add_out(c_charpoly);
  add_serial(c_charpoly);

  CLI::App* c_verify =
      app.add_subcommand("verify", "sweep the theorem claims for one or all families");
  add_family(c_verify, false);
  c_verify->add_option("--max-n", maxn, "largest ground-set size (default per family)")
      ->check(CLI::PositiveNumber);
  add_cap(c_verify);
  add_out(c_verify);
  add_serial(c_verify);
  c_verify->add_flag("--self-test-negative", negative,
                     "perturb every expectation; the run must fail");

  CLI::App* c_semi = app.add_subcommand(
      "semimodularity", "semimodularity and total semimodularity of one poset");
  add_family(c_semi, true);
  add_n(c_semi);
  add_i(c_semi);
  add_cap(c_semi);
  add_out(c_semi);
  add_serial(c_semi);

  CLI::App* c_hom = app.add_subcommand(
      "homology", "interval homology or a full Cohen-Macaulay report");
  add_family(c_hom, true);
  add_n(c_hom);
  add_i(c_hom);
  add_cap(c_hom);
  add_out(c_hom);
  add_serial(c_hom);
  c_hom->add_option("--a", a_name, "lower endpoint (default: bottom)");
  c_hom->add_option("--b", b_name, "upper endpoint (default: the unique top)");

  CLI::App* c_hopf = app.add_subcommand(
      "hopf", "coproduct both ways, coassociativity, and the inverse-series table");
  c_hopf->add_option("--max-n", maxn, "largest generator index")
      ->check(CLI::PositiveNumber);
  add_out(c_hopf);

  CLI::App* c_ident =
      app.add_subcommand("identities", "verify the polynomial and series identities");
  c_ident->add_option("--lemma", lemma, "check a single identity")
      ->check(CLI::IsMember(lemma_names()));
  c_ident->add_flag("--self-test-negative", negative,
                    "perturb one side; the run must fail");
  add_out(c_ident);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ppos");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Exec exec = serial ? Exec::serial : Exec::parallel;
  Output out{format, outpath};
  try {
    if (c_enum->parsed()) return cmd_enumerate(make_spec(family, n, i, cap), exec, out);
    if (c_counts->parsed())
      return cmd_counts(family_from_name(family), maxn ? maxn : 6, cap, out);
    if (c_charpoly->parsed())
      return cmd_charpoly(make_spec(family, n, i, cap), exec, out);
    if (c_verify->parsed()) return cmd_verify(family, maxn, cap, negative, exec, out);
    if (c_semi->parsed())
      return cmd_semimodularity(make_spec(family, n, i, cap), exec, out);
    if (c_hom->parsed())
      return cmd_homology(make_spec(family, n, i, cap), a_name, b_name, exec, out);
    if (c_hopf->parsed()) return cmd_hopf(maxn ? maxn : 6, out);
    if (c_ident->parsed()) return cmd_identities(lemma, negative, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ppos
