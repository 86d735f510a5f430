#pragma once

// Small finite fields GF(q): q prime, or q in {4, 8, 9} via fixed tables.

#include <string>
#include <vector>

namespace earkit {

/// Elements are 0..q-1. For prime q they are residues; for q = p^k they
/// encode polynomial coefficients in base p (x^2+x+1, x^3+x+1, x^2+1).
class FiniteField {
 public:
  /// Throws InputError unless q is prime or one of 4, 8, 9.
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const;
  int mul(int a, int b) const;
  /// Throws InputError for a = 0.
  int inv(int a) const;

 private:
  int q_;
  int p_;
  bool prime_;
  std::vector<int> add_;  // q x q tables, prime powers only
  std::vector<int> mul_;
};

}  // namespace earkit
