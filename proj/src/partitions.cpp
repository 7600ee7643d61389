#include "ppos/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

namespace ppos {

namespace {

struct FamilyInfo {
  Family f;
  const char* name;
  bool is_signed;
  bool is_multi;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A, "A", false, false},
    {Family::A_fixed, "A_fixed", false, false},
    {Family::A_extended, "A_extended", false, false},
    {Family::MA, "MA", false, true},
    {Family::MA_interval, "MA_interval", false, true},
    {Family::B, "B", true, false},
    {Family::B_fixed, "B_fixed", true, false},
    {Family::B_interval, "B_interval", true, false},
    {Family::beta, "beta", true, false},
    {Family::betaB, "betaB", true, false},
    {Family::betaB_interval, "betaB_interval", true, false},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.f == f) return fi;
  throw OutOfRange("unknown family value");
}

}  // namespace

const char* family_name(Family f) { return info(f).name; }

Family family_from_name(const std::string& name) {
  for (const auto& fi : kFamilies)
    if (name == fi.name) return fi.f;
  throw OutOfRange("unknown family name: " + name);
}

bool family_signed(Family f) { return info(f).is_signed; }
bool family_multi(Family f) { return info(f).is_multi; }

void FamilySpec::validate() const {
  if (n < 1) throw OutOfRange("n must be at least 1, got " + std::to_string(n));
  if (cap < 1) throw OutOfRange("cap must be positive, got " + std::to_string(cap));
  switch (family) {
    case Family::A_fixed:
    case Family::B_fixed:
    case Family::MA_interval:
      // i = 0 degenerates to the unconstrained parent family
      if (i < 0 || i > n)
        throw OutOfRange(std::string(family_name(family)) +
                         " needs 0 <= i <= n, got i=" + std::to_string(i));
      break;
    case Family::MA:
      if (i > n)
        throw OutOfRange("MA needs i <= n, got i=" + std::to_string(i));
      break;
    default:
      if (i != -1)
        throw OutOfRange(std::string(family_name(family)) + " takes no index i");
  }
}

int PointedPartition::pair_count() const {
  if (!signed_ground) return 0;
  return static_cast<int>(blocks.size() - (zero >= 0 ? 1 : 0)) / 2;
}

int PointedPartition::rank() const {
  return signed_ground ? n - pair_count() : n - static_cast<int>(blocks.size());
}

bool PointedPartition::pointed_contains(int v) const {
  for (const auto& ps : pointed)
    if (std::binary_search(ps.begin(), ps.end(), v, elem_less)) return true;
  return false;
}

void PointedPartition::normalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end(), elem_less);
  for (auto& p : pointed) std::sort(p.begin(), p.end(), elem_less);
  std::vector<char> zflag(blocks.size(), 0);
  if (signed_ground) {
    for (size_t k = 0; k < blocks.size(); ++k)
      for (int v : blocks[k])
        if (v > 0 && std::binary_search(blocks[k].begin(), blocks[k].end(), -v, elem_less)) {
          zflag[k] = 1;
          break;
        }
  }
  std::vector<size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (zflag[a] != zflag[b]) return zflag[a] > zflag[b];
    return elem_less(blocks[a].front(), blocks[b].front());
  });
  std::vector<std::vector<int>> nb(blocks.size()), np(blocks.size());
  zero = -1;
  for (size_t k = 0; k < order.size(); ++k) {
    if (zflag[order[k]]) zero = static_cast<int>(k);
    nb[k] = std::move(blocks[order[k]]);
    np[k] = std::move(pointed[order[k]]);
  }
  blocks = std::move(nb);
  pointed = std::move(np);
}

void PointedPartition::check_structure() const {
  if (n < 1) throw OutOfRange("partition ground must have n >= 1");
  std::vector<char> seen(2 * static_cast<size_t>(n) + 1, 0);
  size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw Error("empty block");
    for (int v : b) {
      if (v == 0 || v < -n || v > n)
        throw OutOfRange("element out of range: " + std::to_string(v));
      if (!signed_ground && v < 0)
        throw Error("negative element on a plain ground");
      if (seen[v + n]++) throw Error("repeated element: " + std::to_string(v));
      ++total;
    }
  }
  if (total != (signed_ground ? 2 * static_cast<size_t>(n) : static_cast<size_t>(n)))
    throw Error("ground not fully covered");
  if (pointed.size() != blocks.size())
    throw Error("pointed sets do not match blocks");
  for (size_t k = 0; k < blocks.size(); ++k) {
    for (size_t j = 0; j < pointed[k].size(); ++j) {
      if (j && pointed[k][j] == pointed[k][j - 1])
        throw Error("repeated pointed element");
      if (!std::binary_search(blocks[k].begin(), blocks[k].end(), pointed[k][j], elem_less))
        throw Error("pointed element outside its block");
    }
  }
  if (!signed_ground) {
    if (zero != -1) throw Error("zero block on a plain ground");
    return;
  }
  std::map<std::vector<int>, size_t> index;
  for (size_t k = 0; k < blocks.size(); ++k) index[blocks[k]] = k;
  int zcount = 0;
  for (size_t k = 0; k < blocks.size(); ++k) {
    bool self = false;
    for (int v : blocks[k])
      if (v > 0 && std::binary_search(blocks[k].begin(), blocks[k].end(), -v, elem_less)) {
        self = true;
        break;
      }
    if (self) {
      ++zcount;
      if (static_cast<int>(k) != zero) throw Error("zero block out of position");
      for (int v : blocks[k])
        if (!std::binary_search(blocks[k].begin(), blocks[k].end(), -v, elem_less))
          throw Error("zero block not closed under negation");
    } else {
      std::vector<int> neg(blocks[k].size()), negp(pointed[k].size());
      std::transform(blocks[k].begin(), blocks[k].end(), neg.begin(), std::negate<int>());
      std::transform(pointed[k].begin(), pointed[k].end(), negp.begin(), std::negate<int>());
      std::sort(neg.begin(), neg.end(), elem_less);
      std::sort(negp.begin(), negp.end(), elem_less);
      auto it = index.find(neg);
      if (it == index.end()) throw Error("missing opposite block");
      if (pointed[it->second] != negp) throw Error("pointing not sign-symmetric");
    }
  }
  if (zcount > 1) throw Error("more than one sign-symmetric block");
  if (zcount == 0 && zero != -1) throw Error("zero index set without a zero block");
}

void PointedPartition::check_family(Family f) const {
  if (signed_ground != family_signed(f))
    throw GroundMismatch(std::string("family ") + family_name(f) + " expects a " +
                         (family_signed(f) ? "signed" : "plain") + " ground");
  bool multi = family_multi(f);
  for (size_t k = 0; k < blocks.size(); ++k) {
    size_t np = pointed[k].size();
    if (static_cast<int>(k) == zero) {
      switch (f) {
        case Family::B:
        case Family::B_fixed:
        case Family::B_interval:
          if (np != 1) throw Error("zero block needs exactly one pointed element");
          break;
        case Family::beta:
          if (np != 0) throw Error("zero block must be unpointed");
          break;
        default:  // betaB, betaB_interval
          if (np > 1) throw Error("zero block needs at most one pointed element");
          break;
      }
    } else if (multi) {
      if (np == 0) throw Error("block needs a nonempty pointed set");
    } else if (np != 1) {
      throw Error("block needs exactly one pointed element");
    }
  }
}

std::string PointedPartition::str() const {
  const char* sep = n >= 10 ? "," : "";
  std::string out = "{";
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += '|';
    bool first = true;
    for (int v : blocks[k]) {
      if (!first) out += sep;
      first = false;
      if (v < 0) out += '-';
      out += std::to_string(v < 0 ? -v : v);
      if (std::binary_search(pointed[k].begin(), pointed[k].end(), v, elem_less)) out += '*';
    }
  }
  out += '}';
  return out;
}

namespace {

// comma: elements are comma-separated digit runs.  juxtaposed: one digit per
// element, no separator inside a block.  whole_runs: like juxtaposed, except
// that a run filling a whole block is one element -- the form taken by
// singleton blocks of elements >= 10 (multi-element blocks with such elements
// always carry commas, so only singletons need the fallback).
enum class ParseMode { comma, juxtaposed, whole_runs };

PointedPartition parse_impl(const std::string& text, ParseMode mode) {
  size_t pos = 0;
  auto fail = [&pos](const std::string& msg) { throw ParseError(msg, pos); };
  if (text == "TOP") fail("the synthetic top is not a partition");
  if (text.empty() || text[0] != '{') fail("expected '{'");
  pos = 1;
  std::vector<std::vector<int>> blocks, pointed;
  std::vector<int> cur, curp;
  bool any_neg = false;
  int maxabs = 0;
  auto flush = [&]() {
    if (cur.empty()) fail("empty block");
    blocks.push_back(std::move(cur));
    pointed.push_back(std::move(curp));
    cur.clear();
    curp.clear();
  };
  bool done = false;
  while (!done) {
    if (pos >= text.size()) fail("unterminated partition");
    bool neg = false;
    if (text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a digit");
    size_t dstart = pos;
    size_t rend = pos;
    while (rend < text.size() && std::isdigit(static_cast<unsigned char>(text[rend])))
      ++rend;
    bool whole = mode == ParseMode::comma;
    if (mode == ParseMode::whole_runs && rend - dstart > 1) {
      char before = text[dstart - (neg ? 2 : 1)];
      size_t after = rend < text.size() && text[rend] == '*' ? rend + 1 : rend;
      whole = (before == '{' || before == '|') && after < text.size() &&
              (text[after] == '|' || text[after] == '}');
    }
    long val = 0;
    if (whole) {
      while (pos < rend) {
        val = val * 10 + (text[pos] - '0');
        if (val > 1000000) {
          pos = dstart;
          fail("element too large");
        }
        ++pos;
      }
    } else {
      val = text[pos] - '0';
      ++pos;
    }
    if (val == 0) {
      pos = dstart;
      if (std::isdigit(static_cast<unsigned char>(text[dstart - 1])))
        fail("multi-digit elements need the comma-separated form");
      fail("element must be nonzero");
    }
    int v = neg ? -static_cast<int>(val) : static_cast<int>(val);
    if (pos < text.size() && text[pos] == '*') {
      curp.push_back(v);
      ++pos;
    }
    cur.push_back(v);
    any_neg = any_neg || neg;
    maxabs = std::max(maxabs, static_cast<int>(val));
    if (pos >= text.size()) fail("unterminated partition");
    char c = text[pos];
    if (c == ',' && mode == ParseMode::comma) {
      ++pos;
    } else if (mode != ParseMode::comma &&
               (c == '-' || std::isdigit(static_cast<unsigned char>(c)))) {
      // the next element of the block starts immediately
    } else if (c == '|') {
      flush();
      ++pos;
    } else if (c == '}') {
      flush();
      ++pos;
      done = true;
    } else {
      fail("unexpected character");
    }
  }
  if (pos != text.size()) fail("trailing characters");
  PointedPartition p;
  p.n = maxabs;
  p.signed_ground = any_neg;
  p.blocks = std::move(blocks);
  p.pointed = std::move(pointed);
  p.normalize();
  p.check_structure();
  return p;
}

}  // namespace

PointedPartition parse_partition(const std::string& text) {
  if (text.find(',') != std::string::npos) return parse_impl(text, ParseMode::comma);
  // without commas a digit run is normally one element per digit; when that
  // reading is invalid, retry with whole-block runs as single elements so the
  // all-singleton form of grounds past 9 still parses
  try {
    return parse_impl(text, ParseMode::juxtaposed);
  } catch (const Error&) {
    std::exception_ptr first = std::current_exception();
    try {
      return parse_impl(text, ParseMode::whole_runs);
    } catch (const Error&) {
      std::rethrow_exception(first);
    }
  }
}

PointedPartition parse_partition(const std::string& text, Family f) {
  PointedPartition p = parse_partition(text);
  p.check_family(f);
  return p;
}

bool leq(const PointedPartition& p, const PointedPartition& q, Family f) {
  if (p.n != q.n || p.signed_ground != q.signed_ground ||
      p.signed_ground != family_signed(f))
    throw GroundMismatch("order relation needs matching grounds");
  const int n = p.n;
  const int off = p.signed_ground ? n : 0;
  const size_t m = p.signed_ground ? 2 * static_cast<size_t>(n) + 1
                                   : static_cast<size_t>(n) + 1;
  std::vector<int> qblock(m, -1);
  for (size_t k = 0; k < q.blocks.size(); ++k)
    for (int v : q.blocks[k]) qblock[v + off] = static_cast<int>(k);
  std::vector<int> target(p.blocks.size());
  for (size_t k = 0; k < p.blocks.size(); ++k) {
    int tb = qblock[p.blocks[k].front() + off];
    for (int v : p.blocks[k])
      if (qblock[v + off] != tb) return false;
    target[k] = tb;
  }
  if (!family_multi(f)) {
    std::vector<char> ppointed(m, 0);
    for (const auto& ps : p.pointed)
      for (int v : ps) ppointed[v + off] = 1;
    for (const auto& qs : q.pointed)
      for (int v : qs)
        if (!ppointed[v + off]) return false;
    if (p.signed_ground && q.zero_pointed_count() < p.zero_pointed_count())
      return false;
    return true;
  }
  // multi-pointed: inside each q-block the pointed sets of the p-blocks that
  // meet its pointed set must partition it
  std::vector<char> qpointed(m, 0);
  for (const auto& qs : q.pointed)
    for (int v : qs) qpointed[v + off] = 1;
  std::vector<size_t> covered(q.blocks.size(), 0);
  for (size_t k = 0; k < p.blocks.size(); ++k) {
    size_t inter = 0;
    for (int v : p.pointed[k])
      if (qpointed[v + off]) ++inter;
    if (inter == 0) continue;
    if (inter != p.pointed[k].size()) return false;
    covered[target[k]] += inter;
  }
  for (size_t k = 0; k < q.blocks.size(); ++k)
    if (covered[k] != q.pointed[k].size()) return false;
  return true;
}

namespace {

// visits every set partition of elems; blocks are sorted lists, ordered by
// their minima (elems must be sorted ascending)
void for_each_set_partition(const std::vector<int>& elems,
                            const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> blocks;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == elems.size()) {
      fn(blocks);
      return;
    }
    size_t kcur = blocks.size();  // recursion below grows the vector
    for (size_t j = 0; j < kcur; ++j) {
      blocks[j].push_back(elems[idx]);
      rec(idx + 1);
      blocks[j].pop_back();
    }
    blocks.push_back({elems[idx]});
    rec(idx + 1);
    blocks.pop_back();
  };
  rec(0);
}

using Sink = std::function<void(PointedPartition&&)>;

void enumerate_plain(int n, bool multi, const Sink& sink) {
  std::vector<int> ground(n);
  std::iota(ground.begin(), ground.end(), 1);
  for_each_set_partition(ground, [&](const std::vector<std::vector<int>>& blocks) {
    size_t k = blocks.size();
    if (!multi) {
      std::vector<size_t> choice(k, 0);
      while (true) {
        PointedPartition pp;
        pp.n = n;
        pp.blocks = blocks;
        pp.pointed.resize(k);
        for (size_t j = 0; j < k; ++j) pp.pointed[j] = {blocks[j][choice[j]]};
        sink(std::move(pp));
        size_t j = 0;
        while (j < k && ++choice[j] == blocks[j].size()) choice[j++] = 0;
        if (j == k) break;
      }
    } else {
      std::vector<unsigned> sub(k, 1);
      while (true) {
        PointedPartition pp;
        pp.n = n;
        pp.blocks = blocks;
        pp.pointed.resize(k);
        for (size_t j = 0; j < k; ++j)
          for (size_t t = 0; t < blocks[j].size(); ++t)
            if (sub[j] >> t & 1u) pp.pointed[j].push_back(blocks[j][t]);
        sink(std::move(pp));
        size_t j = 0;
        while (j < k && ++sub[j] == (1u << blocks[j].size())) sub[j++] = 1;
        if (j == k) break;
      }
    }
  });
}

// zero_choices: the allowed pointed sets of a nonempty zero block
void enumerate_signed(int n,
                      const std::function<std::vector<std::vector<int>>(const std::vector<int>&)>& zero_choices,
                      const Sink& sink) {
  if (n > 25) throw LimitExceeded("signed ground too large: n=" + std::to_string(n));
  for (unsigned smask = 0; smask < (1u << n); ++smask) {
    std::vector<int> zelems, rest;
    for (int v = 1; v <= n; ++v)
      ((smask >> (v - 1)) & 1u ? zelems : rest).push_back(v);
    std::vector<int> zblock;
    for (int v : zelems) {
      zblock.push_back(-v);
      zblock.push_back(v);
    }
    auto zpointed = zelems.empty() ? std::vector<std::vector<int>>{{}}
                                   : zero_choices(zelems);
    for_each_set_partition(rest, [&](const std::vector<std::vector<int>>& absblocks) {
      size_t k = absblocks.size();
      // per block: a sign pattern (minimum stays positive) and a pointed slot
      std::vector<size_t> radix(k), choice(k, 0);
      for (size_t j = 0; j < k; ++j)
        radix[j] = absblocks[j].size() << (absblocks[j].size() - 1);
      while (true) {
        std::vector<std::vector<int>> pairblocks, pairpointed;
        for (size_t j = 0; j < k; ++j) {
          size_t sz = absblocks[j].size();
          size_t signs = choice[j] & ((size_t{1} << (sz - 1)) - 1);
          size_t t = choice[j] >> (sz - 1);
          std::vector<int> b1(sz);
          for (size_t s = 0; s < sz; ++s) {
            int sign = (s > 0 && (signs >> (s - 1) & 1u)) ? -1 : 1;
            b1[s] = sign * absblocks[j][s];
          }
          std::vector<int> b2(sz);
          std::transform(b1.begin(), b1.end(), b2.begin(), std::negate<int>());
          int pelem = b1[t];
          pairblocks.push_back(std::move(b1));
          pairpointed.push_back({pelem});
          pairblocks.push_back(std::move(b2));
          pairpointed.push_back({-pelem});
        }
        for (const auto& zp : zpointed) {
          PointedPartition pp;
          pp.n = n;
          pp.signed_ground = true;
          pp.blocks = pairblocks;
          pp.pointed = pairpointed;
          if (!zblock.empty()) {
            pp.blocks.push_back(zblock);
            pp.pointed.push_back(zp);
          }
          sink(std::move(pp));
        }
        size_t j = 0;
        while (j < k && ++choice[j] == radix[j]) choice[j++] = 0;
        if (j == k) break;
      }
    });
  }
}

PointedPartition one_block_top(int n, int i) {
  PointedPartition top;
  top.n = n;
  top.blocks.resize(1);
  top.pointed.resize(1);
  for (int v = 1; v <= n; ++v) top.blocks[0].push_back(v);
  for (int v = 1; v <= i; ++v) top.pointed[0].push_back(v);
  return top;
}

PointedPartition all_zero_top(int n) {
  PointedPartition top;
  top.n = n;
  top.signed_ground = true;
  top.zero = 0;
  top.blocks.resize(1);
  for (int v = 1; v <= n; ++v) {
    top.blocks[0].push_back(-v);
    top.blocks[0].push_back(v);
  }
  top.pointed = {{1}};
  return top;
}

}  // namespace

FamilyElements enumerate_family(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int i = spec.i;
  FamilyElements out;
  out.spec = spec;
  auto add = [&](PointedPartition&& pp) {
    pp.normalize();
    out.elems.push_back(std::move(pp));
    if (static_cast<long long>(out.elems.size()) > spec.cap)
      throw LimitExceeded("family " + std::string(family_name(spec.family)) +
                          " with n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(spec.cap));
  };
  switch (spec.family) {
    case Family::A:
    case Family::A_extended:
      enumerate_plain(n, false, add);
      break;
    case Family::A_fixed:
      enumerate_plain(n, false, [&](PointedPartition&& pp) {
        for (int v = 1; v <= i; ++v)
          if (!pp.pointed_contains(v)) return;
        add(std::move(pp));
      });
      break;
    case Family::MA:
      enumerate_plain(n, true, [&](PointedPartition&& pp) {
        for (int v = 1; v <= i; ++v)
          if (!pp.pointed_contains(v)) return;
        add(std::move(pp));
      });
      break;
    case Family::MA_interval: {
      if (i == 0) {
        enumerate_plain(n, true, add);
        break;
      }
      PointedPartition top = one_block_top(n, i);
      enumerate_plain(n, true, [&](PointedPartition&& pp) {
        if (leq(pp, top, Family::MA)) add(std::move(pp));
      });
      break;
    }
    case Family::B:
    case Family::B_fixed:
    case Family::B_interval: {
      auto zc = [](const std::vector<int>& zelems) {
        std::vector<std::vector<int>> out;
        for (int v : zelems) {
          out.push_back({v});
          out.push_back({-v});
        }
        return out;
      };
      if (spec.family == Family::B || (spec.family == Family::B_fixed && i == 0)) {
        enumerate_signed(n, zc, add);
      } else if (spec.family == Family::B_fixed) {
        enumerate_signed(n, zc, [&](PointedPartition&& pp) {
          pp.normalize();
          for (int v = 1; v <= i; ++v)
            if (!pp.pointed_contains(v) || !pp.pointed_contains(-v)) return;
          add(std::move(pp));
        });
      } else {
        PointedPartition top = all_zero_top(n);
        enumerate_signed(n, zc, [&](PointedPartition&& pp) {
          pp.normalize();
          if (leq(pp, top, Family::B)) add(std::move(pp));
        });
      }
      break;
    }
    case Family::beta:
      enumerate_signed(n, [](const std::vector<int>&) {
        return std::vector<std::vector<int>>{{}};
      }, add);
      break;
    case Family::betaB:
    case Family::betaB_interval: {
      auto zc = [](const std::vector<int>& zelems) {
        std::vector<std::vector<int>> out{{}};
        for (int v : zelems) {
          out.push_back({v});
          out.push_back({-v});
        }
        return out;
      };
      if (spec.family == Family::betaB) {
        enumerate_signed(n, zc, add);
      } else {
        PointedPartition top = all_zero_top(n);
        enumerate_signed(n, zc, [&](PointedPartition&& pp) {
          pp.normalize();
          if (leq(pp, top, Family::betaB)) add(std::move(pp));
        });
      }
      break;
    }
  }
  std::vector<size_t> order(out.elems.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::vector<std::pair<int, std::string>> keys(out.elems.size());
  for (size_t k = 0; k < out.elems.size(); ++k)
    keys[k] = {out.elems[k].rank(), out.elems[k].str()};
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return keys[a] < keys[b]; });
  std::vector<PointedPartition> sorted;
  sorted.reserve(out.elems.size());
  for (size_t k : order) {
    sorted.push_back(std::move(out.elems[k]));
    out.names.push_back(std::move(keys[k].second));
    out.ranks.push_back(keys[k].first);
  }
  out.elems = std::move(sorted);
  if (spec.family == Family::A_extended) {
    out.has_top = true;
    out.names.push_back("TOP");
    out.ranks.push_back(n);
  }
  return out;
}

bool FamilyElements::leq_idx(size_t a, size_t b) const {
  if (has_top) {
    size_t top = names.size() - 1;
    if (b == top) return true;
    if (a == top) return false;
  }
  return leq(elems[a], elems[b], spec.family);
}

std::vector<long long> graded_counts(const FamilySpec& spec) {
  FamilyElements fe = enumerate_family(spec);
  int maxrank = 0;
  for (int r : fe.ranks) maxrank = std::max(maxrank, r);
  std::vector<long long> counts(maxrank + 1, 0);
  for (int r : fe.ranks) ++counts[r];
  return counts;
}

}  // namespace ppos
