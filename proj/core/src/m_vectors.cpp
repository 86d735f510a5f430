#include "earkit/m_vectors.hpp"

#include <algorithm>
#include <functional>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

// Largest a >= t with C(a, t) <= value (value >= 1).
Count largest_top(Count value, int t) {
  Count lo = t;
  Count hi = t + 1;
  while (binomial(hi, t) <= value) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const Count mid = lo + (hi - lo) / 2;
    (binomial(mid, t) <= value ? lo : hi) = mid;
  }
  return lo;
}

Count bound_or_zero(Count h, int i) { return h <= 0 ? 0 : macaulay_power(h, i); }

}  // namespace

std::vector<Count> binomial_expansion(Count h, int i) {
  if (h < 1 || i < 1) throw InputError("binomial expansion needs h >= 1 and i >= 1");
  std::vector<Count> tops;
  Count rest = h;
  for (int t = i; t >= 1 && rest > 0; --t) {
    const Count a = largest_top(rest, t);
    tops.push_back(a);
    rest -= binomial(a, t);
  }
  return tops;
}

Count macaulay_power(Count h, int i) {
  const std::vector<Count> tops = binomial_expansion(h, i);
  Count total = 0;
  int t = i;
  for (Count a : tops) {
    total += binomial(a + 1, t + 1);
    --t;
  }
  return total;
}

MVectorReport is_m_vector(const std::vector<Count>& v) {
  MVectorReport out;
  out.input = v;
  out.bounds.assign(v.size(), 0);
  for (std::size_t i = 1; i < v.size(); ++i) {
    out.bounds[i] = bound_or_zero(v[i], static_cast<int>(i));
  }
  auto fail = [&](std::size_t i, std::string why) {
    out.fail_index = static_cast<int>(i);
    out.reason = std::move(why);
    return out;
  };
  if (v.empty() || v[0] != 1) return fail(0, "h_0 != 1");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return fail(i, "negative entry");
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i + 1] > out.bounds[i]) {
      return fail(i + 1, "entry exceeds the Macaulay bound " + std::to_string(out.bounds[i]));
    }
  }
  out.pass = true;
  return out;
}

std::vector<Count> g_vector(const HVector& h) {
  const int d = h.d();
  std::vector<Count> g;
  for (int i = 0; i <= (d + 1) / 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    g.push_back(i == 0 ? h[0] : h[k] - h[k - 1]);
  }
  return g;
}

std::vector<Count> complementary_h(const HVector& h) {
  const int d = h.d();
  std::vector<Count> out;
  for (int i = 0; i <= d / 2; ++i) {
    out.push_back(h[static_cast<std::size_t>(d - i)] - h[static_cast<std::size_t>(i)]);
  }
  return out;
}

ChariReport chari_check(const HVector& h) {
  ChariReport out;
  const int d = h.d();
  auto at = [&](int i) { return h[static_cast<std::size_t>(i)]; };
  for (int i = 0; i <= d / 2; ++i) {
    if (at(i) > at(d - i) && out.symmetric_ok) {
      out.symmetric_ok = false;
      out.symmetric_fail = i;
    }
  }
  for (int i = 0; 2 * i < d; ++i) {
    if (at(i) > at(i + 1) && out.ascent_ok) {
      out.ascent_ok = false;
      out.ascent_fail = i;
    }
  }
  for (int i = 0; i <= d / 2 && i + 1 <= d; ++i) {
    if (at(i) > at(i + 1) && out.literal_ascent_ok) {
      out.literal_ascent_ok = false;
      out.literal_ascent_fail = i;
    }
  }
  out.g = g_vector(h);
  out.g_report = is_m_vector(out.g);
  out.pass = out.symmetric_ok && out.ascent_ok && out.g_report.pass;
  return out;
}

MDecomposition m_decomposition_search(const std::vector<Count>& v, int count,
                                      std::uint64_t bound) {
  if (count < 0) throw InputError("decomposition count must be >= 0");
  MDecomposition out;
  const std::size_t len = v.size();
  if (std::any_of(v.begin(), v.end(), [](Count c) { return c < 0; })) return out;
  if (count == 0) {
    out.found = std::all_of(v.begin(), v.end(), [](Count c) { return c == 0; });
    return out;
  }
  if (len == 0 || v[0] != count) return out;

  std::vector<Count> remaining = v;
  std::vector<std::vector<Count>> chosen;
  auto tick = [&] {
    if (++out.nodes > bound) {
      throw GuardRefusal("M-vector decomposition search exceeded its node bound", bound);
    }
  };

  // Parts are chosen lexicographically nonincreasing to avoid permuted repeats.
  std::function<bool(int)> place = [&](int left) -> bool {
    if (left == 0) return std::all_of(remaining.begin(), remaining.end(), [](Count c) { return c == 0; });
    const std::vector<Count>* ceiling = chosen.empty() ? nullptr : &chosen.back();
    std::vector<Count> part(len, 0);
    part[0] = 1;
    // Fill entries 1..len-1, largest values first.
    std::function<bool(std::size_t, bool)> fill = [&](std::size_t k, bool tight) -> bool {
      if (k == len) {
        tick();
        for (std::size_t t = 0; t < len; ++t) remaining[t] -= part[t];
        chosen.push_back(part);
        // Later parts are lexicographically smaller, so their entry 1 is at most part[1].
        const bool feasible = len < 2 || remaining[1] <= static_cast<Count>(left - 1) * part[1];
        if (feasible && place(left - 1)) return true;
        chosen.pop_back();
        for (std::size_t t = 0; t < len; ++t) remaining[t] += part[t];
        return false;
      }
      Count hi = remaining[k];
      if (k >= 2) hi = std::min(hi, bound_or_zero(part[k - 1], static_cast<int>(k - 1)));
      if (tight && ceiling) hi = std::min(hi, (*ceiling)[k]);
      for (Count value = hi; value >= 0; --value) {
        part[k] = value;
        if (fill(k + 1, tight && ceiling && value == (*ceiling)[k])) return true;
      }
      part[k] = 0;
      return false;
    };
    return fill(1, ceiling != nullptr);
  };

  if (place(count)) {
    out.found = true;
    out.parts = chosen;
  }
  return out;
}

}  // namespace earkit
