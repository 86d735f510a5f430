#pragma once

// Right weak order on type-A and dihedral Coxeter groups, descent classes,
// dominance between descent classes and the four matching problems on them.
//
// Generators are numbered 1..r; a descent set is a ColorSet with bit i-1 for
// generator i, the same convention as building flag vectors.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "earkit/flags.hpp"
#include "earkit/matching.hpp"

namespace earkit {

inline constexpr int kDefaultGroupBound = 9;
inline constexpr int kMaxPermutationSize = 11;  // inversion pairs fit in 64 bits

class Permutation {
 public:
  /// One-line notation π(1) .. π(n). Throws InputError unless a bijection of [n].
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(one_line_.size()); }
  /// π(i) for 1 <= i <= n.
  int operator()(int i) const { return one_line_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const { return one_line_; }

  /// Value pairs (i, j), i < j, with j left of i.
  std::vector<std::pair<int, int>> inversions() const;
  std::uint64_t inversion_mask() const { return inv_; }
  int length() const;
  /// {i : π(i) > π(i+1)}
  std::vector<int> descents() const;
  ColorSet descent_mask() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> one_line_;
  std::uint64_t inv_ = 0;
};

/// Containment of inversion sets. Throws InputError on a size mismatch.
bool weak_le(const Permutation& a, const Permutation& b);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

ColorSet mask_of(const std::vector<int>& generators);
std::vector<int> generators_of(ColorSet mask);

struct DescentClass {
  ColorSet set = 0;
  int n = 0;
  std::vector<Permutation> members;
};

/// D(A) in S_n. Throws GuardRefusal when n exceeds `bound`.
DescentClass descent_class(ColorSet a, int n, int bound = kDefaultGroupBound);

/// A finite Coxeter group with its right weak order, element by element.
class CoxeterGroup {
 public:
  static CoxeterGroup symmetric(int n, int bound = kDefaultGroupBound);
  /// I_2(m), m >= 2.
  static CoxeterGroup dihedral(int m);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  std::size_t size() const { return lengths_.size(); }

  int length(std::size_t w) const { return lengths_[w]; }
  ColorSet descents(std::size_t w) const { return descents_[w]; }
  bool le(std::size_t a, std::size_t b) const;
  /// One-line notation in type A, a reduced word otherwise.
  const std::vector<int>& label(std::size_t w) const { return labels_[w]; }

  /// Elements with descent set exactly `a`.
  const std::vector<std::size_t>& descent_class(ColorSet a) const;
  /// Union of D(A) over |A| = k, in increasing element order.
  std::vector<std::size_t> descent_union(int k) const;

 private:
  enum class Kind { kSymmetric, kDihedral };
  Kind kind_ = Kind::kSymmetric;
  std::string name_;
  int rank_ = 0;
  int m_ = 0;
  std::vector<int> lengths_;
  std::vector<ColorSet> descents_;
  std::vector<std::vector<int>> labels_;
  std::vector<std::uint64_t> inv_;    // type A
  std::vector<int> first_letter_;     // dihedral: 0 for e and w0
  std::vector<std::vector<std::size_t>> classes_;
};

struct Dominance {
  bool dominates = false;
  std::size_t class_a = 0;
  std::size_t class_b = 0;
  /// Pairs (w, ψ(w)) for w in D(B), element indices into the group.
  std::vector<std::pair<std::size_t, std::size_t>> injection;
};

/// A dominates B: an injection ψ : D(B) -> D(A) with w <= ψ(w), or with
/// w < ψ(w) when `strict`.
Dominance dominates(const CoxeterGroup& group, ColorSet a, ColorSet b, bool strict = false,
                    std::uint64_t edge_cap = kDefaultMatchingEdgeCap);
Dominance dominates(ColorSet a, ColorSet b, int n, bool strict = false);

struct ProblemReport {
  int kind = 0;
  int i = 0;
  bool answer = false;
  std::string detail;
  /// Kind 1: every dominating pair (A, B). Kind 2: the injection B -> ι(B).
  std::vector<std::pair<ColorSet, ColorSet>> pairs;
  /// Kinds 3 and 4: (w, α(w)) or (w, β(w)) as element indices.
  std::vector<std::pair<std::size_t, std::size_t>> element_map;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::size_t matched = 0;
};

/// Decides one instance of the four problems. `i` is ignored for kind 1.
ProblemReport solve_problem(const CoxeterGroup& group, int kind, int i, bool strict = false,
                            std::uint64_t edge_cap = kDefaultMatchingEdgeCap);

}  // namespace earkit
