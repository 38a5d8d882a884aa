#pragma once

#include <string>
#include <vector>

namespace gcm {

using PatternRow = std::vector<long long>;
using Pattern = std::vector<PatternRow>;  // rows top to bottom

// kind "gl": top row is any nonincreasing integer vector; rows of lengths
// n, n-1, ..., 1 with the interleaving upper_i >= lower_i >= upper_{i+1}.
//
// kind "sp": top row in the nonpositive chamber 0 >= l1 >= ... >= ln; rows of
// lengths n, n, n-1, n-1, ..., 1, 1. Each unprimed row a is followed by a
// primed row p of the same length interleaving the zero-extended row
// (0, a_1, ..., a_L):  0 >= p_1 >= a_1 >= p_2 >= ... >= p_L >= a_L  (the
// pinned zero corner); each primed row is followed by the next unprimed row
// with the standard interleaving.
struct PatternSpec {
  std::string kind;  // "gl" | "sp"
  PatternRow top;

  void validate() const;  // throws InvalidArgument
};

unsigned long long count_gl_patterns(const PatternRow& top);
unsigned long long count_sp_patterns(const PatternRow& top);
std::vector<Pattern> list_gl_patterns(const PatternRow& top);
std::vector<Pattern> list_sp_patterns(const PatternRow& top);

unsigned long long count_patterns(const PatternSpec& spec);
std::vector<Pattern> list_patterns(const PatternSpec& spec);

// dim of the gl(n,C) irreducible with highest weight lam (nonincreasing):
// prod_{i<j} (lam_i - lam_j + j - i) / (j - i), evaluated in exact rationals.
unsigned long long weyl_dim_gl(const PatternRow& lam);

// dim of the sp(2n,C) irreducible whose nonpositive chamber weight is lam:
// with nu_i = |lam_{n+1-i}|, l_i = nu_i + n - i + 1, m_i = n - i + 1,
// prod_i (l_i/m_i) * prod_{i<j} (l_i^2 - l_j^2)/(m_i^2 - m_j^2).
unsigned long long weyl_dim_sp(const PatternRow& lam);

unsigned long long weyl_dim(const PatternSpec& spec);

}  // namespace gcm
