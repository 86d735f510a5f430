#pragma once

// Exact dense linear algebra over Q (GMP rationals) and prime fields GF(p).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace earkit {

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "q", "Q", "gf:<p>" or "GF(<p>)".
  static Field parse(std::string_view spec);

  bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar(const Field& field, long long value);
  /// Over GF(p) the denominator must be a unit.
  Scalar(const Field& field, const mpq_class& value);

  const Field& field() const { return field_; }
  bool is_zero() const;
  /// Value over Q; throws for prime fields.
  const mpq_class& rational() const;
  /// Residue in [0, p); throws over Q.
  std::uint32_t residue() const;
  std::string to_string() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;

 private:
  void require_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

class ExactMatrix {
 public:
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(const Field& field, std::size_t n);
  static ExactMatrix from_rows(const Field& field, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, long long value);
  /// entry += value
  void add(std::size_t r, std::size_t c, const Scalar& value);
  bool is_zero(std::size_t r, std::size_t c) const;

  ExactMatrix select_columns(std::span<const std::size_t> columns) const;
  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& o) const;

  // Raw storage, row-major; only the one matching the field is populated.
  const std::vector<mpq_class>& rational_data() const { return q_; }
  const std::vector<std::uint32_t>& residue_data() const { return m_; }

 private:
  std::size_t index(std::size_t r, std::size_t c) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> q_;
  std::vector<std::uint32_t> m_;
};

/// Throws InputError when the fields differ.
ExactMatrix hconcat(const ExactMatrix& left, const ExactMatrix& right);
ExactMatrix vconcat(const ExactMatrix& top, const ExactMatrix& bottom);
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
std::vector<Scalar> apply(const ExactMatrix& m, std::span<const Scalar> v);

/// Rank by elimination with first-nonzero pivoting (a unit pivot is preferred
/// over Q, where rows stay integral and are divided by their content).
std::size_t rank(const ExactMatrix& m);

struct RrefResult {
  ExactMatrix matrix;
  std::vector<std::size_t> pivots;
};
RrefResult rref(const ExactMatrix& m);

/// Basis of {v : M v = 0}, one vector per free column of rref(M).
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

/// Reduces a rational matrix mod p. Throws InputError if a denominator is
/// divisible by p.
ExactMatrix reduce_mod(const ExactMatrix& m, const Field& prime);
/// Lifts residues to rationals using representatives in (-p/2, p/2].
ExactMatrix lift_to_rationals(const ExactMatrix& m);

struct RankCrossCheck {
  std::size_t rank_rational = 0;
  std::size_t rank_mod_p = 0;
  std::uint32_t prime = kDefaultPrime;
  bool agree() const { return rank_rational == rank_mod_p; }
};
/// Rank over Q and over GF(p) of the same integer/rational matrix.
RankCrossCheck cross_check_rank(const ExactMatrix& rational, std::uint32_t prime = kDefaultPrime);

}  // namespace earkit
