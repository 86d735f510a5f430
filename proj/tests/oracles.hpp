#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "earkit/complex.hpp"

namespace oracle {

using earkit::Count;
using earkit::Face;
using FaceSet = std::set<Face>;

inline FaceSet all_faces(const std::vector<Face>& facets) {
  FaceSet out;
  for (const Face& f : facets) {
    const auto n = static_cast<unsigned>(f.size());
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      Face sub;
      for (unsigned t = 0; t < n; ++t) {
        if (mask >> t & 1U) sub.push_back(f[t]);
      }
      out.insert(sub);
    }
  }
  return out;
}

inline int rank_of(const FaceSet& faces) {
  std::size_t top = 0;
  for (const Face& f : faces) top = std::max(top, f.size());
  return static_cast<int>(top);
}

inline std::vector<Count> f_vector(const FaceSet& faces) {
  std::vector<Count> f(static_cast<std::size_t>(rank_of(faces)) + 1, 0);
  for (const Face& s : faces) ++f[s.size()];
  return f;
}

// Σ h_i x^{d-i} = Σ f_i (x-1)^{d-i}, expanded coefficient by coefficient.
inline std::vector<Count> h_from_f(const std::vector<Count>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<Count> poly(static_cast<std::size_t>(d) + 1, 0);  // poly[k] = coeff of x^k
  for (int i = 0; i <= d; ++i) {
    std::vector<Count> term{1};
    for (int t = 0; t < d - i; ++t) {
      std::vector<Count> next(term.size() + 1, 0);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k + 1] += term[k];
        next[k] -= term[k];
      }
      term = next;
    }
    for (std::size_t k = 0; k < term.size(); ++k) poly[k] += f[static_cast<std::size_t>(i)] * term[k];
  }
  std::vector<Count> h(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) h[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(d - i)];
  return h;
}

inline FaceSet link(const FaceSet& faces, const Face& sigma) {
  FaceSet out;
  for (const Face& t : faces) {
    bool disjoint = true;
    for (int v : t) disjoint = disjoint && !std::binary_search(sigma.begin(), sigma.end(), v);
    if (!disjoint) continue;
    Face u = t;
    u.insert(u.end(), sigma.begin(), sigma.end());
    std::sort(u.begin(), u.end());
    if (faces.count(u)) out.insert(t);
  }
  return out;
}

inline FaceSet deletion(const FaceSet& faces, const std::vector<int>& removed) {
  FaceSet out;
  for (const Face& t : faces) {
    bool keep = true;
    for (int v : t) keep = keep && std::find(removed.begin(), removed.end(), v) == removed.end();
    if (keep) out.insert(t);
  }
  return out;
}

inline std::vector<int> vertices(const FaceSet& faces) {
  std::set<int> vs;
  for (const Face& f : faces) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

// Reduced Betti numbers over GF(2) by bitset elimination; index j + 1 holds β̃_j.
inline std::vector<Count> betti_gf2(const FaceSet& faces) {
  const int d = rank_of(faces);
  std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(d) + 1);
  for (const Face& f : faces) by_size[f.size()].push_back(f);
  std::vector<Count> ranks(static_cast<std::size_t>(d) + 2, 0);
  for (int k = 1; k <= d; ++k) {
    const auto& lower = by_size[static_cast<std::size_t>(k - 1)];
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    std::vector<std::vector<bool>> rows;
    for (const Face& f : by_size[static_cast<std::size_t>(k)]) {
      std::vector<bool> row(lower.size(), false);
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face g;
        for (std::size_t t = 0; t < f.size(); ++t) {
          if (t != skip) g.push_back(f[t]);
        }
        row[index.at(g)] = true;
      }
      rows.push_back(row);
    }
    Count r = 0;
    for (std::size_t col = 0; col < lower.size(); ++col) {
      std::size_t pivot = static_cast<std::size_t>(r);
      while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
      for (std::size_t t = 0; t < rows.size(); ++t) {
        if (t != static_cast<std::size_t>(r) && rows[t][col]) {
          for (std::size_t c = 0; c < lower.size(); ++c) {
            rows[t][c] = rows[t][c] != rows[static_cast<std::size_t>(r)][c];
          }
        }
      }
      ++r;
    }
    ranks[static_cast<std::size_t>(k)] = r;
  }
  std::vector<Count> betti;
  for (int k = 0; k <= d; ++k) {
    betti.push_back(static_cast<Count>(by_size[static_cast<std::size_t>(k)].size()) -
                    ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1]);
  }
  return betti;
}

// Reisner's criterion with GF(2) homology.
inline bool is_cm(const FaceSet& faces) {
  const int d = rank_of(faces);
  for (const Face& s : faces) {
    const FaceSet lk = link(faces, s);
    const auto b = betti_gf2(lk);
    const int limit = d - static_cast<int>(s.size()) - 1;
    for (int j = -1; j < limit; ++j) {
      const auto k = static_cast<std::size_t>(j + 1);
      if (k < b.size() && b[k] != 0) return false;
    }
    if (rank_of(lk) != d - static_cast<int>(s.size())) return false;  // purity
  }
  return true;
}

inline int cm_connectivity(const FaceSet& faces) {
  if (!is_cm(faces)) return 0;
  const auto vs = vertices(faces);
  const int d = rank_of(faces);
  const auto n = static_cast<unsigned>(vs.size());
  for (unsigned s = 1; s <= n; ++s) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != s) continue;
      std::vector<int> removed;
      for (unsigned t = 0; t < n; ++t) {
        if (mask >> t & 1U) removed.push_back(vs[t]);
      }
      const FaceSet rest = deletion(faces, removed);
      if (rank_of(rest) != d || !is_cm(rest)) return static_cast<int>(s);
    }
  }
  return static_cast<int>(n) + 1;
}

// h̃^{(m)}: Σ over faces of size m of the h-vector of their links.
inline std::vector<Count> short_h(const FaceSet& faces, int m) {
  const int d = rank_of(faces);
  std::vector<Count> out(static_cast<std::size_t>(d - m) + 1, 0);
  for (const Face& s : faces) {
    if (static_cast<int>(s.size()) != m) continue;
    const auto h = h_from_f(f_vector(link(faces, s)));
    for (std::size_t i = 0; i < h.size() && i < out.size(); ++i) out[i] += h[i];
  }
  return out;
}

// ---------------------------------------------------------------- monomials

using Monomial = std::vector<int>;  // exponent vector

inline std::vector<Monomial> monomials(int vars, int degree) {
  std::vector<Monomial> out;
  Monomial m(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      m[static_cast<std::size_t>(pos)] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (vars > 0) rec(rec, 0, degree);
  return out;  // lexicographically decreasing with x_1 > x_2 > ...
}

// Degree-(i+1) monomials all of whose degree-i divisors lie in `chosen`.
inline Count closed_extensions(const std::set<Monomial>& chosen, int vars, int i) {
  Count count = 0;
  for (const Monomial& m : monomials(vars, i + 1)) {
    bool ok = true;
    for (int v = 0; v < vars && ok; ++v) {
      if (m[static_cast<std::size_t>(v)] == 0) continue;
      Monomial div = m;
      --div[static_cast<std::size_t>(v)];
      ok = chosen.count(div) != 0;
    }
    if (ok) ++count;
  }
  return count;
}

// Max of h_{i+1} over order ideals with h_i = h, by trying every h-set of
// degree-i monomials in `vars` variables. Exponential; keep vars small.
inline Count macaulay_exhaustive(Count h, int i, int vars) {
  const auto all = monomials(vars, i);
  const auto n = static_cast<unsigned>(all.size());
  Count best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != h) continue;
    std::set<Monomial> chosen;
    for (unsigned t = 0; t < n; ++t) {
      if (mask >> t & 1U) chosen.insert(all[t]);
    }
    best = std::max(best, closed_extensions(chosen, vars, i));
  }
  return best;
}

// The final lex segment of size h realizes the maximum.
inline Count macaulay_lex_segment(Count h, int i) {
  int vars = 1;
  while (static_cast<Count>(monomials(vars, i).size()) < h) ++vars;
  const auto all = monomials(vars, i);
  std::set<Monomial> chosen(all.end() - h, all.end());
  return closed_extensions(chosen, vars, i);
}

inline bool m_vector_by_lex(const std::vector<Count>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Count bound = v[i] == 0 ? 0 : macaulay_lex_segment(v[i], static_cast<int>(i));
    if (v[i + 1] > bound) return false;
  }
  return true;
}

// ---------------------------------------------------------------- permutations

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int inversions(const std::vector<int>& p) {
  int count = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) count += p[a] > p[b] ? 1 : 0;
  }
  return count;
}

inline std::uint32_t descents(const std::vector<int>& p) {
  std::uint32_t mask = 0;
  for (std::size_t a = 0; a + 1 < p.size(); ++a) {
    if (p[a] > p[a + 1]) mask |= 1U << a;
  }
  return mask;
}

// Value-pair inversion sets compared directly.
inline bool weak_le(const std::vector<int>& a, const std::vector<int>& b) {
  auto pos = [](const std::vector<int>& p) {
    std::vector<int> out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) out[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
    return out;
  };
  const auto pa = pos(a);
  const auto pb = pos(b);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = i + 1; j <= a.size(); ++j) {
      if (pa[i] > pa[j] && !(pb[i] > pb[j])) return false;
    }
  }
  return true;
}

// Hall's condition for an injection left -> right along `edge`.
template <class Edge>
bool hall_injection(std::size_t left, std::size_t right, Edge&& edge) {
  if (left > 20) return false;
  for (std::uint32_t mask = 1; mask < (1U << left); ++mask) {
    std::set<std::size_t> nbrs;
    for (std::size_t l = 0; l < left; ++l) {
      if (!(mask >> l & 1U)) continue;
      for (std::size_t r = 0; r < right; ++r) {
        if (edge(l, r)) nbrs.insert(r);
      }
    }
    if (nbrs.size() < static_cast<std::size_t>(__builtin_popcount(mask))) return false;
  }
  return true;
}

// Number of complete flags in GF(q)^n: Π_k (q^k - 1)/(q - 1).
inline Count complete_flags(int n, int q) {
  Count total = 1;
  for (int k = 1; k <= n; ++k) {
    Count qk = 1;
    for (int t = 0; t < k; ++t) qk *= q;
    total *= (qk - 1) / (q - 1);
  }
  return total;
}

}  // namespace oracle
