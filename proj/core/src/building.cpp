#include "earkit/building.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include "earkit/errors.hpp"
#include "earkit/homology.hpp"
#include "earkit/weak_order.hpp"

namespace earkit {

namespace {

std::vector<int> pivots_of(const Subspace& s) {
  std::vector<int> out;
  for (const auto& row : s.rows) {
    out.push_back(static_cast<int>(std::find_if(row.begin(), row.end(), [](int x) { return x != 0; }) -
                                   row.begin()));
  }
  return out;
}

// All k-dimensional subspaces of GF(q)^n in reduced row-echelon form.
std::vector<Subspace> subspaces_of_dim(int n, int k, const FiniteField& field) {
  std::vector<Subspace> out;
  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  do {
    pivots.clear();
    for (int c = 0; c < n; ++c) {
      if (chosen[static_cast<std::size_t>(c)]) pivots.push_back(c);
    }
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r) {
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
        if (!chosen[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
      }
    }
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Subspace s;
      s.dim = k;
      s.rows.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < k; ++r) {
        s.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
      }
      for (std::size_t t = 0; t < free.size(); ++t) {
        s.rows[static_cast<std::size_t>(free[t].first)][static_cast<std::size_t>(free[t].second)] = digits[t];
      }
      out.push_back(std::move(s));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == field.order()) digits[t++] = 0;
      if (t == digits.size()) break;
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

bool contained_in(const Subspace& small, const Subspace& big, const FiniteField& field) {
  const std::vector<int> pivots = pivots_of(big);
  for (const auto& x : small.rows) {
    std::vector<int> y(x.size(), 0);
    for (std::size_t j = 0; j < big.rows.size(); ++j) {
      const int coeff = x[static_cast<std::size_t>(pivots[j])];
      if (coeff == 0) continue;
      for (std::size_t c = 0; c < y.size(); ++c) y[c] = field.add(y[c], field.mul(coeff, big.rows[j][c]));
    }
    if (y != x) return false;
  }
  return true;
}

Count factorial(int n) {
  Count out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace

Count chamber_count(int n, int q) {
  Count total = 1;
  for (int k = 1; k <= n; ++k) {
    Count bracket = 0;
    Count power = 1;
    for (int t = 0; t < k; ++t) {
      bracket += power;
      power *= q;
    }
    total *= bracket;
  }
  return total;
}

Building Building::build(int n, int q, std::size_t chamber_guard) {
  if (n < 2 || n > 4) throw InputError("building rank: need 2 <= n <= 4");
  const FiniteField field(q);
  const Count expected = chamber_count(n, q);
  if (static_cast<std::size_t>(expected) > chamber_guard) {
    throw GuardRefusal("building A_" + std::to_string(n - 1) + "(" + std::to_string(q) + ") has " +
                           std::to_string(expected) + " chambers",
                       chamber_guard);
  }
  Building b;
  b.n_ = n;
  b.q_ = q;
  for (int k = 1; k < n; ++k) {
    auto level = subspaces_of_dim(n, k, field);
    std::sort(level.begin(), level.end());
    b.subspaces_.insert(b.subspaces_.end(), level.begin(), level.end());
  }
  // Vertex labels are 1-based positions in subspaces_.
  std::vector<std::vector<Vertex>> by_dim(static_cast<std::size_t>(n));
  std::map<Vertex, Color> colors;
  for (std::size_t i = 0; i < b.subspaces_.size(); ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    by_dim[static_cast<std::size_t>(b.subspaces_[i].dim)].push_back(v);
    colors[v] = b.subspaces_[i].dim - 1;
  }
  std::map<Vertex, std::vector<Vertex>> up;
  for (int k = 1; k + 1 < n; ++k) {
    for (Vertex u : by_dim[static_cast<std::size_t>(k)]) {
      for (Vertex w : by_dim[static_cast<std::size_t>(k + 1)]) {
        if (contained_in(b.subspaces_[static_cast<std::size_t>(u - 1)],
                         b.subspaces_[static_cast<std::size_t>(w - 1)], field)) {
          up[u].push_back(w);
        }
      }
    }
  }
  std::vector<Face> chambers;
  Face chain;
  auto extend = [&](auto&& self, Vertex v) -> void {
    chain.push_back(v);
    if (static_cast<int>(chain.size()) == n - 1) {
      chambers.push_back(chain);
    } else {
      for (Vertex w : up[v]) self(self, w);
    }
    chain.pop_back();
  };
  for (Vertex v : by_dim[1]) extend(extend, v);
  if (static_cast<Count>(chambers.size()) != expected) {
    throw VerificationError("chamber count " + std::to_string(chambers.size()) +
                            " disagrees with the Gaussian factorial " + std::to_string(expected));
  }
  b.complex_ = SimplicialComplex::from_facets(chambers);
  b.chambers_ = b.complex_.facets();
  b.coloring_ = Coloring(n - 1, colors);

  std::map<Face, std::vector<ChamberId>> panels;
  for (ChamberId c = 0; c < b.chambers_.size(); ++c) {
    const Face& ch = b.chambers_[c];
    for (std::size_t skip = 0; skip < ch.size(); ++skip) {
      Face panel;
      for (std::size_t t = 0; t < ch.size(); ++t) {
        if (t != skip) panel.push_back(ch[t]);
      }
      panels[panel].push_back(c);
    }
  }
  b.neighbors_.assign(b.chambers_.size(), {});
  for (const auto& [panel, members] : panels) {
    if (static_cast<int>(members.size()) != q + 1) {
      throw VerificationError("a panel lies in " + std::to_string(members.size()) + " chambers, expected q + 1");
    }
    for (ChamberId x : members) {
      for (ChamberId y : members) {
        if (x != y) b.neighbors_[x].push_back(y);
      }
    }
  }
  for (auto& list : b.neighbors_) std::sort(list.begin(), list.end());
  return b;
}

ChamberId Building::chamber_id(const Face& face) const {
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  const auto it = std::lower_bound(chambers_.begin(), chambers_.end(), sorted);
  if (it == chambers_.end() || *it != sorted) throw InputError("face is not a chamber");
  return static_cast<ChamberId>(it - chambers_.begin());
}

std::vector<int> Building::distances_from(ChamberId c) const {
  if (c >= chambers_.size()) throw InputError("chamber index out of range");
  std::vector<int> dist(chambers_.size(), -1);
  std::queue<ChamberId> queue;
  dist[c] = 0;
  queue.push(c);
  while (!queue.empty()) {
    const ChamberId x = queue.front();
    queue.pop();
    for (ChamberId y : neighbors_[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

int Building::distance(ChamberId a, ChamberId b) const {
  if (b >= chambers_.size()) throw InputError("chamber index out of range");
  return distances_from(a)[b];
}

std::vector<std::vector<ChamberId>> Building::geodesics(ChamberId a, ChamberId b,
                                                        std::size_t guard) const {
  const std::vector<int> to_b = distances_from(b);
  if (a >= chambers_.size()) throw InputError("chamber index out of range");
  std::vector<std::vector<ChamberId>> out;
  std::vector<ChamberId> path{a};
  auto walk = [&](auto&& self, ChamberId x) -> void {
    if (x == b) {
      if (out.size() >= guard) throw GuardRefusal("geodesic enumeration exceeded its guard", guard);
      out.push_back(path);
      return;
    }
    for (ChamberId y : neighbors_[x]) {
      if (to_b[y] == to_b[x] - 1) {
        path.push_back(y);
        self(self, y);
        path.pop_back();
      }
    }
  };
  walk(walk, a);
  return out;
}

std::vector<ChamberId> Building::opposite_chambers(ChamberId c) const {
  const std::vector<int> dist = distances_from(c);
  std::vector<ChamberId> out;
  for (ChamberId x = 0; x < dist.size(); ++x) {
    if (dist[x] == diameter()) out.push_back(x);
  }
  return out;
}

SimplicialComplex Building::subcomplex(const std::vector<ChamberId>& chambers) const {
  std::vector<Face> facets;
  for (ChamberId c : chambers) facets.push_back(chamber(c));
  return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<ChamberId> Building::apartment_of(ChamberId a, ChamberId b) const {
  const std::vector<int> from_a = distances_from(a);
  if (b >= chambers_.size() || from_a[b] != diameter()) {
    throw InputError("apartment_of: chambers are not opposite");
  }
  const std::vector<int> from_b = distances_from(b);
  std::vector<ChamberId> out;
  for (ChamberId x = 0; x < chambers_.size(); ++x) {
    if (from_a[x] + from_b[x] == diameter()) out.push_back(x);
  }
  if (static_cast<Count>(out.size()) != factorial(n_)) {
    throw VerificationError("apartment has " + std::to_string(out.size()) + " chambers, expected n!");
  }
  if (!is_homology_sphere(subcomplex(out), Field::rationals())) {
    throw VerificationError("apartment is not a homology sphere");
  }
  return out;
}

ChamberId Building::projection(const Face& rho, ChamberId tau) const {
  if (rho.empty()) throw InputError("projection onto the empty face");
  const std::vector<int> dist = distances_from(tau);
  std::vector<ChamberId> best;
  int best_dist = -1;
  for (ChamberId c = 0; c < chambers_.size(); ++c) {
    if (!is_subset(rho, chambers_[c])) continue;
    if (best_dist < 0 || dist[c] < best_dist) {
      best = {c};
      best_dist = dist[c];
    } else if (dist[c] == best_dist) {
      best.push_back(c);
    }
  }
  if (best.empty()) throw InputError("projection: face is not in the building");
  if (best.size() != 1) throw VerificationError("projection is not unique");
  return best.front();
}

std::vector<ChamberId> opposite_order(const Building& building, ChamberId base, const std::string& spec) {
  std::vector<ChamberId> order = building.opposite_chambers(base);
  if (spec == "lex") return order;
  const std::string prefix = "random:";
  if (spec.rfind(prefix, 0) == 0) {
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(spec.substr(prefix.size()), &used);
      if (used != spec.size() - prefix.size()) throw std::invalid_argument(spec);
    } catch (const std::logic_error&) {
      throw InputError("bad order seed in '" + spec + "'");
    }
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
  }
  throw InputError("order must be 'lex' or 'random:<seed>'");
}

BuildingEars ear_decomposition(const Building& building, ChamberId base, const std::vector<ChamberId>& order) {
  std::vector<ChamberId> expected = building.opposite_chambers(base);
  std::vector<ChamberId> given = order;
  std::sort(given.begin(), given.end());
  if (given != expected) throw InputError("order is not a permutation of the chambers opposite the base");

  BuildingEars out;
  out.base = base;
  out.order = order;
  std::vector<bool> covered(building.num_chambers(), false);
  for (ChamberId opposite : order) {
    std::vector<ChamberId> fresh;
    for (ChamberId c : building.apartment_of(base, opposite)) {
      if (!covered[c]) {
        covered[c] = true;
        fresh.push_back(c);
      }
    }
    out.ears.push_back(building.subcomplex(fresh));
    out.ear_chambers.push_back(std::move(fresh));
  }
  out.report = verify_ears(building.complex(), out.ears);
  const EarReport& r = out.report;
  for (const auto* cond : {&r.condition1, &r.condition2, &r.condition3}) {
    if (!cond->ok) {
      const int which = cond == &r.condition1 ? 1 : cond == &r.condition2 ? 2 : 3;
      throw VerificationError("ear decomposition fails condition " + std::to_string(which) +
                              (cond->ear ? " at ear " + std::to_string(*cond->ear) : "") + ": " + cond->detail);
    }
  }
  return out;
}

FlagVector flag_h_formula(int n, int q) {
  const CoxeterGroup group = CoxeterGroup::symmetric(n);
  FlagVector h(n - 1);
  for (std::size_t w = 0; w < group.size(); ++w) {
    Count power = 1;
    for (int t = 0; t < group.length(w); ++t) power *= q;
    h[group.descents(w)] += power;
  }
  return h;
}

FlagVector flag_h_direct(const Building& building) {
  return flag_h(building.complex(), building.coloring());
}

}  // namespace earkit
