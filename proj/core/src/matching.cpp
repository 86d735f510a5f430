#include "earkit/matching.hpp"

#include <limits>
#include <queue>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<int>>& adjacency, std::size_t right_size,
               std::uint64_t cap)
      : adj_(adjacency), cap_(cap) {
    m_.left_to_right.assign(adj_.size(), -1);
    m_.right_to_left.assign(right_size, -1);
    dist_.assign(adj_.size(), 0);
  }

  Matching run() {
    while (layer()) {
      next_.assign(adj_.size(), 0);
      for (std::size_t l = 0; l < adj_.size(); ++l) {
        if (m_.left_to_right[l] == -1 && augment(static_cast<int>(l))) ++m_.size;
      }
    }
    return m_;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  void visit() {
    if (++visits_ > cap_) throw GuardRefusal("bipartite matching exceeded its edge-visit cap", cap_);
  }

  bool layer() {
    std::queue<int> queue;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (m_.left_to_right[l] == -1) {
        dist_[l] = 0;
        queue.push(static_cast<int>(l));
      } else {
        dist_[l] = kInf;
      }
    }
    bool reachable_free = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop();
      for (int r : adj_[static_cast<std::size_t>(l)]) {
        visit();
        const int back = m_.right_to_left[static_cast<std::size_t>(r)];
        if (back == -1) {
          reachable_free = true;
        } else if (dist_[static_cast<std::size_t>(back)] == kInf) {
          dist_[static_cast<std::size_t>(back)] = dist_[static_cast<std::size_t>(l)] + 1;
          queue.push(back);
        }
      }
    }
    return reachable_free;
  }

  bool augment(int l) {
    const auto li = static_cast<std::size_t>(l);
    auto& edges = adj_[li];
    for (std::size_t& k = next_[li]; k < edges.size(); ++k) {
      visit();
      const int r = edges[k];
      const int back = m_.right_to_left[static_cast<std::size_t>(r)];
      if (back == -1 ||
          (dist_[static_cast<std::size_t>(back)] == dist_[li] + 1 && augment(back))) {
        m_.left_to_right[li] = r;
        m_.right_to_left[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    dist_[li] = kInf;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::uint64_t cap_;
  std::uint64_t visits_ = 0;
  Matching m_;
  std::vector<int> dist_;
  std::vector<std::size_t> next_;
};

}  // namespace

Matching maximum_matching(const std::vector<std::vector<int>>& adjacency, std::size_t right_size,
                          std::uint64_t edge_cap) {
  for (const auto& edges : adjacency) {
    for (int r : edges) {
      if (r < 0 || static_cast<std::size_t>(r) >= right_size) {
        throw InputError("matching: right vertex out of range");
      }
    }
  }
  return HopcroftKarp(adjacency, right_size, edge_cap).run();
}

}  // namespace earkit
