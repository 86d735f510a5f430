#pragma once

// Maximum bipartite matching (Hopcroft-Karp).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace earkit {

inline constexpr std::uint64_t kDefaultMatchingEdgeCap = 200'000'000;

struct Matching {
  std::vector<int> left_to_right;  // -1 when unmatched
  std::vector<int> right_to_left;
  std::size_t size = 0;

  bool saturates_left() const { return size == left_to_right.size(); }
  bool perfect() const { return saturates_left() && size == right_to_left.size(); }
};

/// adjacency[l] lists the right vertices adjacent to left vertex l. Throws
/// GuardRefusal once more than `edge_cap` edge visits have been made.
Matching maximum_matching(const std::vector<std::vector<int>>& adjacency, std::size_t right_size,
                          std::uint64_t edge_cap = kDefaultMatchingEdgeCap);

}  // namespace earkit
