#include "earkit/galois.hpp"

#include "earkit/errors.hpp"
#include "earkit/linalg.hpp"

namespace earkit {

namespace {

struct Extension {
  int q;
  int p;
  int k;
  std::vector<int> modulus;  // monic, low degree first, degree k
};

const Extension* extension_for(int q) {
  static const std::vector<Extension> table = {
      {4, 2, 2, {1, 1, 1}},
      {8, 2, 3, {1, 1, 0, 1}},
      {9, 3, 2, {1, 0, 1}},
  };
  for (const auto& e : table) {
    if (e.q == q) return &e;
  }
  return nullptr;
}

std::vector<int> digits(int a, const Extension& e) {
  std::vector<int> out(static_cast<std::size_t>(e.k));
  for (int t = 0; t < e.k; ++t) {
    out[static_cast<std::size_t>(t)] = a % e.p;
    a /= e.p;
  }
  return out;
}

int encode(const std::vector<int>& coeffs, const Extension& e) {
  int a = 0;
  for (int t = e.k - 1; t >= 0; --t) a = a * e.p + coeffs[static_cast<std::size_t>(t)];
  return a;
}

int poly_mul(int a, int b, const Extension& e) {
  const auto x = digits(a, e);
  const auto y = digits(b, e);
  std::vector<int> prod(static_cast<std::size_t>(2 * e.k - 1), 0);
  for (int s = 0; s < e.k; ++s) {
    for (int t = 0; t < e.k; ++t) {
      auto& c = prod[static_cast<std::size_t>(s + t)];
      c = (c + x[static_cast<std::size_t>(s)] * y[static_cast<std::size_t>(t)]) % e.p;
    }
  }
  // Reduce using x^k = -(modulus without its leading term).
  for (int deg = 2 * e.k - 2; deg >= e.k; --deg) {
    const int c = prod[static_cast<std::size_t>(deg)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(deg)] = 0;
    for (int t = 0; t < e.k; ++t) {
      auto& target = prod[static_cast<std::size_t>(deg - e.k + t)];
      target = ((target - c * e.modulus[static_cast<std::size_t>(t)]) % e.p + e.p) % e.p;
    }
  }
  prod.resize(static_cast<std::size_t>(e.k));
  return encode(prod, e);
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q), p_(q), prime_(q >= 2 && is_prime(static_cast<std::uint64_t>(q))) {
  if (prime_) return;
  const Extension* e = extension_for(q);
  if (e == nullptr) throw InputError("unsupported field order " + std::to_string(q) + " (primes, 4, 8, 9)");
  p_ = e->p;
  const auto n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, *e);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, *e);
      std::vector<int> sum(static_cast<std::size_t>(e->k));
      for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = (da[t] + db[t]) % e->p;
      const auto idx = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      add_[idx] = encode(sum, *e);
      mul_[idx] = poly_mul(a, b, *e);
    }
  }
}

int FiniteField::add(int a, int b) const {
  if (prime_) return (a + b) % q_;
  return add_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b)];
}

int FiniteField::neg(int a) const {
  if (prime_) return a == 0 ? 0 : q_ - a;
  for (int b = 0; b < q_; ++b) {
    if (add(a, b) == 0) return b;
  }
  return 0;
}

int FiniteField::mul(int a, int b) const {
  if (prime_) return static_cast<int>(static_cast<long long>(a) * b % q_);
  return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b)];
}

int FiniteField::inv(int a) const {
  if (a == 0) throw InputError("inverse of zero");
  if (prime_) {
    long long result = 1;
    long long base = a;
    for (int e = q_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % q_;
      base = base * base % q_;
    }
    return static_cast<int>(result);
  }
  for (int b = 1; b < q_; ++b) {
    if (mul(a, b) == 1) return b;
  }
  throw InputError("element has no inverse");
}

}  // namespace earkit
