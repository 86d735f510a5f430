#include "earkit/weak_order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

// Bit position of the value pair (i, j), 1 <= i < j.
int pair_bit(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

std::string set_to_string(ColorSet mask) {
  std::string s = "{";
  bool first = true;
  for (int g : generators_of(mask)) {
    if (!first) s += ",";
    s += std::to_string(g);
    first = false;
  }
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  if (n > kMaxPermutationSize) throw InputError("permutation too large");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InputError("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const int left = one_line_[static_cast<std::size_t>(p)];
      const int right = one_line_[static_cast<std::size_t>(q)];
      if (left > right) inv_ |= std::uint64_t{1} << pair_bit(right, left);
    }
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 2; j <= size(); ++j) {
    for (int i = 1; i < j; ++i) {
      if (inv_ >> pair_bit(i, j) & 1U) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Permutation::length() const { return std::popcount(inv_); }

std::vector<int> Permutation::descents() const { return generators_of(descent_mask()); }

ColorSet Permutation::descent_mask() const {
  ColorSet mask = 0;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) mask |= ColorSet{1} << (i - 1);
  }
  return mask;
}

bool weak_le(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InputError("weak_le: permutations of different sizes");
  return (a.inversion_mask() & ~b.inversion_mask()) == 0;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0 || n > kMaxPermutationSize) throw InputError("all_permutations: n out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

ColorSet mask_of(const std::vector<int>& generators) {
  ColorSet mask = 0;
  for (int g : generators) {
    if (g < 1 || g > 31) throw InputError("generator index out of range");
    mask |= ColorSet{1} << (g - 1);
  }
  return mask;
}

std::vector<int> generators_of(ColorSet mask) {
  std::vector<int> out;
  for (int g = 1; g <= 32; ++g) {
    if (mask >> (g - 1) & 1U) out.push_back(g);
  }
  return out;
}

DescentClass descent_class(ColorSet a, int n, int bound) {
  if (n > bound) {
    throw GuardRefusal("descent class refused: n = " + std::to_string(n), static_cast<std::size_t>(bound));
  }
  if (n < 1) throw InputError("descent_class: n must be >= 1");
  if (n - 1 < 32 && (a >> (n - 1)) != 0) throw InputError("descent set not contained in [n-1]");
  DescentClass out{a, n, {}};
  for (const Permutation& p : all_permutations(n)) {
    if (p.descent_mask() == a) out.members.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------- CoxeterGroup

CoxeterGroup CoxeterGroup::symmetric(int n, int bound) {
  if (n > bound) {
    throw GuardRefusal("symmetric group refused: n = " + std::to_string(n), static_cast<std::size_t>(bound));
  }
  if (n < 1) throw InputError("symmetric group needs n >= 1");
  CoxeterGroup g;
  g.kind_ = Kind::kSymmetric;
  g.name_ = "S_" + std::to_string(n);
  g.rank_ = n - 1;
  for (const Permutation& p : all_permutations(n)) {
    g.lengths_.push_back(p.length());
    g.descents_.push_back(p.descent_mask());
    g.labels_.push_back(p.one_line());
    g.inv_.push_back(p.inversion_mask());
  }
  g.classes_.resize(std::size_t{1} << g.rank_);
  for (std::size_t w = 0; w < g.size(); ++w) g.classes_[g.descents_[w]].push_back(w);
  return g;
}

CoxeterGroup CoxeterGroup::dihedral(int m) {
  if (m < 2) throw InputError("dihedral group needs m >= 2");
  CoxeterGroup g;
  g.kind_ = Kind::kDihedral;
  g.name_ = "I2(" + std::to_string(m) + ")";
  g.rank_ = 2;
  g.m_ = m;
  auto add = [&g](int first, int len) {
    std::vector<int> word;
    for (int t = 0; t < len; ++t) word.push_back((t % 2 == 0) ? first : 3 - first);
    ColorSet des = 0;
    if (len > 0) des = ColorSet{1} << (word.back() - 1);
    g.lengths_.push_back(len);
    g.descents_.push_back(des);
    g.labels_.push_back(std::move(word));
    g.first_letter_.push_back(first);
  };
  add(0, 0);
  for (int first = 1; first <= 2; ++first) {
    for (int len = 1; len < m; ++len) add(first, len);
  }
  add(1, m);
  g.descents_.back() = 3;
  g.first_letter_.back() = 0;
  g.classes_.resize(4);
  for (std::size_t w = 0; w < g.size(); ++w) g.classes_[g.descents_[w]].push_back(w);
  return g;
}

bool CoxeterGroup::le(std::size_t a, std::size_t b) const {
  if (kind_ == Kind::kSymmetric) return (inv_[a] & ~inv_[b]) == 0;
  if (a == b || lengths_[a] == 0 || lengths_[b] == m_) return true;
  if (lengths_[a] == m_) return false;
  return first_letter_[a] == first_letter_[b] && lengths_[a] <= lengths_[b];
}

const std::vector<std::size_t>& CoxeterGroup::descent_class(ColorSet a) const {
  if (a >= classes_.size()) throw InputError("descent set not contained in the generators");
  return classes_[a];
}

std::vector<std::size_t> CoxeterGroup::descent_union(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w) {
    if (std::popcount(descents_[w]) == k) out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------- dominance

namespace {

Matching match_elements(const CoxeterGroup& group, const std::vector<std::size_t>& left,
                        const std::vector<std::size_t>& right, bool strict, std::uint64_t cap) {
  std::vector<std::vector<int>> adjacency(left.size());
  for (std::size_t l = 0; l < left.size(); ++l) {
    for (std::size_t r = 0; r < right.size(); ++r) {
      if (strict && left[l] == right[r]) continue;
      if (group.le(left[l], right[r])) adjacency[l].push_back(static_cast<int>(r));
    }
  }
  return maximum_matching(adjacency, right.size(), cap);
}

std::vector<std::pair<std::size_t, std::size_t>> element_pairs(const Matching& m,
                                                               const std::vector<std::size_t>& left,
                                                               const std::vector<std::size_t>& right) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t l = 0; l < left.size(); ++l) {
    const int r = m.left_to_right[l];
    if (r >= 0) out.emplace_back(left[l], right[static_cast<std::size_t>(r)]);
  }
  return out;
}

std::vector<ColorSet> subsets_of_size(int rank, int k) {
  std::vector<ColorSet> out;
  for (ColorSet s = 0; s < (ColorSet{1} << rank); ++s) {
    if (std::popcount(s) == k) out.push_back(s);
  }
  return out;
}

}  // namespace

Dominance dominates(const CoxeterGroup& group, ColorSet a, ColorSet b, bool strict,
                    std::uint64_t edge_cap) {
  const auto& da = group.descent_class(a);
  const auto& db = group.descent_class(b);
  Dominance out;
  out.class_a = da.size();
  out.class_b = db.size();
  if (db.size() > da.size()) return out;
  const Matching m = match_elements(group, db, da, strict, edge_cap);
  out.dominates = m.saturates_left();
  if (out.dominates) out.injection = element_pairs(m, db, da);
  return out;
}

Dominance dominates(ColorSet a, ColorSet b, int n, bool strict) {
  return dominates(CoxeterGroup::symmetric(n), a, b, strict);
}

ProblemReport solve_problem(const CoxeterGroup& group, int kind, int i, bool strict,
                            std::uint64_t edge_cap) {
  ProblemReport out;
  out.kind = kind;
  out.i = i;
  const int r = group.rank();
  switch (kind) {
    case 1: {
      for (ColorSet a = 0; a < (ColorSet{1} << r); ++a) {
        for (ColorSet b = 0; b < (ColorSet{1} << r); ++b) {
          if (dominates(group, a, b, strict, edge_cap).dominates) out.pairs.emplace_back(a, b);
        }
      }
      out.answer = true;
      out.detail = std::to_string(out.pairs.size()) + " dominating pairs";
      return out;
    }
    case 2: {
      if (i < 0 || i + 1 > r) throw InputError("problem 2 needs 0 <= i < rank");
      const auto small = subsets_of_size(r, i);
      const auto large = subsets_of_size(r, i + 1);
      std::vector<std::vector<int>> adjacency(small.size());
      for (std::size_t l = 0; l < small.size(); ++l) {
        for (std::size_t t = 0; t < large.size(); ++t) {
          if (dominates(group, large[t], small[l], strict, edge_cap).dominates) {
            adjacency[l].push_back(static_cast<int>(t));
          }
        }
      }
      const Matching m = maximum_matching(adjacency, large.size(), edge_cap);
      out.left_size = small.size();
      out.right_size = large.size();
      out.matched = m.size;
      out.answer = m.saturates_left();
      for (std::size_t l = 0; l < small.size() && out.answer; ++l) {
        out.pairs.emplace_back(small[l], large[static_cast<std::size_t>(m.left_to_right[l])]);
      }
      if (!out.answer) {
        for (std::size_t l = 0; l < small.size(); ++l) {
          if (m.left_to_right[l] == -1) {
            out.detail = "no injection; " + set_to_string(small[l]) + " left unmatched";
            break;
          }
        }
      }
      return out;
    }
    case 3:
    case 4: {
      if (i < 0 || i > r) throw InputError("problem needs 0 <= i <= rank");
      const int target = (kind == 3) ? i + 1 : r - i;
      const auto left = group.descent_union(i);
      const auto right = group.descent_union(target);
      out.left_size = left.size();
      out.right_size = right.size();
      if (left.size() > right.size() || (kind == 4 && left.size() != right.size())) {
        out.detail = "cardinality obstruction: " + std::to_string(left.size()) + " vs " +
                     std::to_string(right.size());
        return out;
      }
      const Matching m = match_elements(group, left, right, strict, edge_cap);
      out.matched = m.size;
      out.answer = (kind == 3) ? m.saturates_left() : m.perfect();
      if (out.answer) {
        out.element_map = element_pairs(m, left, right);
      } else {
        out.detail = "maximum matching has size " + std::to_string(m.size);
      }
      return out;
    }
    default:
      throw InputError("problem kind must be 1, 2, 3 or 4");
  }
}

}  // namespace earkit
