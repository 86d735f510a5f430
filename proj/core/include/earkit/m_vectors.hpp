#pragma once

// Macaulay's M-vectors, g-vectors, the Chari inequalities and complementary
// h-vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "earkit/complex.hpp"

namespace earkit {

/// h^{<i>} via the greedy binomial expansion h = C(a_i,i) + ... + C(a_j,j).
/// Throws InputError unless h >= 1 and i >= 1.
Count macaulay_power(Count h, int i);

/// The a_i > a_{i-1} > ... > a_j >= j >= 1 of the expansion, top term first.
std::vector<Count> binomial_expansion(Count h, int i);

struct MVectorReport {
  std::vector<Count> input;
  /// bounds[i] = input[i]^{<i>} for i >= 1 (0 when input[i] <= 0); bounds[0] = 0.
  std::vector<Count> bounds;
  bool pass = false;
  std::optional<int> fail_index;
  std::string reason;
};

MVectorReport is_m_vector(const std::vector<Count>& v);

/// g_0 .. g_{ceil(d/2)} with g_0 = h_0 and g_i = h_i - h_{i-1}.
std::vector<Count> g_vector(const HVector& h);

/// h̄_i = h_{d-i} - h_i for i = 0 .. floor(d/2).
std::vector<Count> complementary_h(const HVector& h);

struct ChariReport {
  std::vector<Count> g;
  MVectorReport g_report;
  bool symmetric_ok = true;  // h_i <= h_{d-i}, i <= floor(d/2)
  std::optional<int> symmetric_fail;
  bool ascent_ok = true;  // h_i <= h_{i+1}, i < d/2
  std::optional<int> ascent_fail;
  /// Ascent read as i <= floor(d/2); reported only, never part of `pass`.
  bool literal_ascent_ok = true;
  std::optional<int> literal_ascent_fail;
  bool pass = false;
};

ChariReport chari_check(const HVector& h);

inline constexpr std::uint64_t kDefaultDecompositionBound = 100000;

struct MDecomposition {
  bool found = false;  // false: the search space was exhausted
  std::vector<std::vector<Count>> parts;
  std::uint64_t nodes = 0;
};

/// Searches for `count` M-vectors (leading 1, padded with zeros) summing to v.
/// Throws GuardRefusal after `bound` candidate nodes.
MDecomposition m_decomposition_search(const std::vector<Count>& v, int count,
                                      std::uint64_t bound = kDefaultDecompositionBound);

}  // namespace earkit
