#include "gcmlab/patterns.hpp"

#include <limits>
#include <map>
#include <numeric>

#include "gcmlab/errors.hpp"

namespace gcm {

namespace {

void require_nonincreasing(const PatternRow& r, const char* who) {
  if (r.empty()) throw InvalidArgument(std::string(who) + ": top row must be nonempty");
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (r[i] < r[i + 1]) throw InvalidArgument(std::string(who) + ": top row must be nonincreasing");
}

// Enumerates rows v with lo_i <= v_i <= hi_i and v nonincreasing by
// construction of the bounds; visit(v) for each.
template <typename F>
void enumerate_boxed(const PatternRow& lo, const PatternRow& hi, PatternRow& v, std::size_t i,
                     const F& visit) {
  if (i == lo.size()) {
    visit(v);
    return;
  }
  for (long long x = hi[i]; x >= lo[i]; --x) {
    v[i] = x;
    enumerate_boxed(lo, hi, v, i + 1, visit);
  }
}

// gl interleaving bounds for the row under `upper`: upper_i >= v_i >= upper_{i+1}.
void gl_bounds(const PatternRow& upper, PatternRow& lo, PatternRow& hi) {
  const std::size_t l = upper.size() - 1;
  lo.resize(l);
  hi.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    hi[i] = upper[i];
    lo[i] = upper[i + 1];
  }
}

// sp step 1 (unprimed a -> primed p, same length): p interleaves (0, a_1...a_L).
void sp_primed_bounds(const PatternRow& a, PatternRow& lo, PatternRow& hi) {
  const std::size_t l = a.size();
  lo.resize(l);
  hi.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    hi[i] = (i == 0) ? 0 : a[i - 1];
    lo[i] = a[i];
  }
}

// sp step 2 (primed p -> next unprimed b, one shorter): p_i >= b_i >= p_{i+1}.
void sp_unprimed_bounds(const PatternRow& p, PatternRow& lo, PatternRow& hi) {
  const std::size_t l = p.size() - 1;
  lo.resize(l);
  hi.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    hi[i] = p[i];
    lo[i] = p[i + 1];
  }
}

struct GlCounter {
  std::map<PatternRow, unsigned long long> memo;

  unsigned long long count(const PatternRow& row) {
    if (row.size() == 1) return 1;
    auto it = memo.find(row);
    if (it != memo.end()) return it->second;
    PatternRow lo, hi;
    gl_bounds(row, lo, hi);
    PatternRow v(lo.size());
    unsigned long long total = 0;
    enumerate_boxed(lo, hi, v, 0, [&](const PatternRow& next) { total += count(next); });
    memo[row] = total;
    return total;
  }
};

struct SpCounter {
  std::map<PatternRow, unsigned long long> memo_unprimed;  // keyed by the unprimed row
  std::map<PatternRow, unsigned long long> memo_primed;

  unsigned long long from_unprimed(const PatternRow& a) {
    auto it = memo_unprimed.find(a);
    if (it != memo_unprimed.end()) return it->second;
    PatternRow lo, hi;
    sp_primed_bounds(a, lo, hi);
    PatternRow v(lo.size());
    unsigned long long total = 0;
    enumerate_boxed(lo, hi, v, 0, [&](const PatternRow& p) { total += from_primed(p); });
    memo_unprimed[a] = total;
    return total;
  }

  unsigned long long from_primed(const PatternRow& p) {
    if (p.size() == 1) return 1;
    auto it = memo_primed.find(p);
    if (it != memo_primed.end()) return it->second;
    PatternRow lo, hi;
    sp_unprimed_bounds(p, lo, hi);
    PatternRow v(lo.size());
    unsigned long long total = 0;
    enumerate_boxed(lo, hi, v, 0, [&](const PatternRow& b) { total += from_unprimed(b); });
    memo_primed[p] = total;
    return total;
  }
};

void list_gl_rec(const PatternRow& row, Pattern& acc, std::vector<Pattern>& out) {
  if (row.size() == 1) {
    out.push_back(acc);
    return;
  }
  PatternRow lo, hi;
  gl_bounds(row, lo, hi);
  PatternRow v(lo.size());
  enumerate_boxed(lo, hi, v, 0, [&](const PatternRow& next) {
    acc.push_back(next);
    list_gl_rec(next, acc, out);
    acc.pop_back();
  });
}

void list_sp_unprimed(const PatternRow& a, Pattern& acc, std::vector<Pattern>& out);

void list_sp_primed(const PatternRow& p, Pattern& acc, std::vector<Pattern>& out) {
  if (p.size() == 1) {
    out.push_back(acc);
    return;
  }
  PatternRow lo, hi;
  sp_unprimed_bounds(p, lo, hi);
  PatternRow v(lo.size());
  enumerate_boxed(lo, hi, v, 0, [&](const PatternRow& b) {
    acc.push_back(b);
    list_sp_unprimed(b, acc, out);
    acc.pop_back();
  });
}

void list_sp_unprimed(const PatternRow& a, Pattern& acc, std::vector<Pattern>& out) {
  PatternRow lo, hi;
  sp_primed_bounds(a, lo, hi);
  PatternRow v(lo.size());
  enumerate_boxed(lo, hi, v, 0, [&](const PatternRow& p) {
    acc.push_back(p);
    list_sp_primed(p, acc, out);
    acc.pop_back();
  });
}

// Running exact rational product of positive integer factors.
struct RationalProduct {
  unsigned long long num = 1, den = 1;

  void mul_num(unsigned long long f) {
    unsigned long long g = std::gcd(f, den);
    f /= g;
    den /= g;
    if (f != 0 && num > std::numeric_limits<unsigned long long>::max() / f)
      throw InvalidArgument("weyl_dim: dimension overflows 64 bits");
    num *= f;
  }
  void mul_den(unsigned long long f) {
    unsigned long long g = std::gcd(f, num);
    f /= g;
    num /= g;
    den *= f;
  }
  unsigned long long value() const {
    if (den != 1) throw InvalidArgument("weyl_dim: product is not integral");
    return num;
  }
};

}  // namespace

void PatternSpec::validate() const {
  if (kind != "gl" && kind != "sp") throw InvalidArgument("pattern spec: kind must be gl or sp");
  require_nonincreasing(top, "pattern spec");
  if (kind == "sp" && top.front() > 0)
    throw InvalidArgument("pattern spec: sp top row must be nonpositive (chamber order)");
}

unsigned long long count_gl_patterns(const PatternRow& top) {
  require_nonincreasing(top, "count_gl_patterns");
  return GlCounter{}.count(top);
}

unsigned long long count_sp_patterns(const PatternRow& top) {
  PatternSpec{"sp", top}.validate();
  return SpCounter{}.from_unprimed(top);
}

std::vector<Pattern> list_gl_patterns(const PatternRow& top) {
  require_nonincreasing(top, "list_gl_patterns");
  std::vector<Pattern> out;
  Pattern acc{top};
  list_gl_rec(top, acc, out);
  return out;
}

std::vector<Pattern> list_sp_patterns(const PatternRow& top) {
  PatternSpec{"sp", top}.validate();
  std::vector<Pattern> out;
  Pattern acc{top};
  list_sp_unprimed(top, acc, out);
  return out;
}

unsigned long long count_patterns(const PatternSpec& spec) {
  spec.validate();
  return spec.kind == "gl" ? count_gl_patterns(spec.top) : count_sp_patterns(spec.top);
}

std::vector<Pattern> list_patterns(const PatternSpec& spec) {
  spec.validate();
  return spec.kind == "gl" ? list_gl_patterns(spec.top) : list_sp_patterns(spec.top);
}

unsigned long long weyl_dim_gl(const PatternRow& lam) {
  require_nonincreasing(lam, "weyl_dim_gl");
  const std::size_t n = lam.size();
  RationalProduct r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      r.mul_num(static_cast<unsigned long long>(lam[i] - lam[j] + static_cast<long long>(j - i)));
      r.mul_den(static_cast<unsigned long long>(j - i));
    }
  return r.value();
}

unsigned long long weyl_dim_sp(const PatternRow& lam) {
  PatternSpec{"sp", lam}.validate();
  const std::size_t n = lam.size();
  std::vector<unsigned long long> l(n), m(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned long long nu = static_cast<unsigned long long>(-lam[n - 1 - i]);
    l[i] = nu + static_cast<unsigned long long>(n - i);
    m[i] = static_cast<unsigned long long>(n - i);
  }
  RationalProduct r;
  for (std::size_t i = 0; i < n; ++i) {
    r.mul_num(l[i]);
    r.mul_den(m[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      r.mul_num(l[i] * l[i] - l[j] * l[j]);
      r.mul_den(m[i] * m[i] - m[j] * m[j]);
    }
  return r.value();
}

unsigned long long weyl_dim(const PatternSpec& spec) {
  spec.validate();
  return spec.kind == "gl" ? weyl_dim_gl(spec.top) : weyl_dim_sp(spec.top);
}

}  // namespace gcm
