#include "earkit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) + p - b);
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e) {
    if (e & 1U) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in GF(p)");
  return mod_pow(a, p - 2, p);
}

std::uint32_t reduce_integer(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t reduce_rational(const mpq_class& q, std::uint32_t p) {
  const std::uint32_t den = reduce_integer(q.get_den(), p);
  if (den == 0) throw InputError("rational with denominator divisible by p");
  return mod_mul(reduce_integer(q.get_num(), p), mod_inv(den, p), p);
}

std::uint32_t reduce_ll(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw InputError("mixed-field matrix operation: " + a.name() + " vs " + b.name());
}

// Rank of an integer matrix (row-major, rows x cols). Fraction-free: the
// pivot row is scaled into each target row and rows are divided by their
// content to keep entries small.
std::size_t integer_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  mpz_class g, mul_target, mul_pivot, content;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      if (pivot == rows) pivot = i;
      if (abs(a[i][col]) == 1) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    const auto& prow = a[r];
    support.clear();
    for (std::size_t c = col + 1; c < cols; ++c) {
      if (sgn(prow[c]) != 0) support.push_back(c);
    }
    const bool unit = abs(prow[col]) == 1;
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& row = a[i];
      if (sgn(row[col]) == 0) continue;
      if (unit) {
        // row -= (row[col] / pivot) * prow, exact since pivot = ±1.
        mul_target = row[col] * prow[col];
        for (std::size_t c : support) row[c] -= mul_target * prow[c];
        row[col] = 0;
        continue;
      }
      mpz_gcd(g.get_mpz_t(), row[col].get_mpz_t(), prow[col].get_mpz_t());
      mul_target = prow[col] / g;
      mul_pivot = row[col] / g;
      for (std::size_t c = col + 1; c < cols; ++c) {
        if (sgn(row[c]) != 0) row[c] *= mul_target;
      }
      for (std::size_t c : support) row[c] -= mul_pivot * prow[c];
      row[col] = 0;
      content = 0;
      for (std::size_t c = col + 1; c < cols; ++c) {
        if (sgn(row[c]) != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[c].get_mpz_t());
        if (content == 1) break;
      }
      if (content > 1) {
        for (std::size_t c = col + 1; c < cols; ++c) {
          if (sgn(row[c]) != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), content.get_mpz_t());
        }
      }
    }
    ++r;
  }
  return r;
}

std::size_t modular_rank(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols,
                         std::uint32_t p) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i * cols + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    const std::uint32_t inv = mod_inv(a[r * cols + col], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint32_t factor = mod_mul(a[i * cols + col], inv, p);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        const std::uint32_t pv = a[r * cols + c];
        if (pv != 0) a[i * cols + c] = mod_sub(a[i * cols + c], mod_mul(factor, pv, p), p);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Field

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InputError("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  std::string s(spec);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "q" || s == "rationals") return rationals();
  std::string digits;
  if (s.rfind("gf:", 0) == 0) {
    digits = s.substr(3);
  } else if (s.rfind("gf(", 0) == 0 && s.back() == ')') {
    digits = s.substr(3, s.size() - 4);
  } else {
    throw InputError("unknown field '" + std::string(spec) + "' (use q or gf:<p>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || p > 0xFFFFFFFFULL) {
    throw InputError("bad prime in field spec '" + std::string(spec) + "'");
  }
  return prime(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Field& field, long long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = mpq_class(static_cast<long>(value));
  } else {
    r_ = reduce_ll(value, field_.characteristic());
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
  } else {
    r_ = reduce_rational(value, field_.characteristic());
  }
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw InputError("rational() on a prime-field scalar");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw InputError("residue() on a rational scalar");
  return r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

void Scalar::require_same(const Scalar& o) const { require_same_field(field_, o.field_); }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ += o.q_;
  } else {
    out.r_ = mod_add(r_, o.r_, field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ -= o.q_;
  } else {
    out.r_ = mod_sub(r_, o.r_, field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ *= o.q_;
  } else {
    out.r_ = mod_mul(r_, o.r_, field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ /= o.q_;
  } else {
    out.r_ = mod_mul(r_, mod_inv(o.r_, field_.characteristic()), field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator-() const { return Scalar(field_, 0LL) - *this; }

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && (field_.is_rational() ? q_ == o.q_ : r_ == o.r_);
}

// ---------------------------------------------------------------- ExactMatrix

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_rational()) {
    q_.assign(rows * cols, mpq_class(0));
  } else {
    m_.assign(rows * cols, 0);
  }
}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
  ExactMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

ExactMatrix ExactMatrix::from_rows(const Field& field,
                                   const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix out(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
  }
  return out;
}

std::size_t ExactMatrix::index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return r * cols_ + c;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  const std::size_t i = index(r, c);
  if (field_.is_rational()) return Scalar(field_, q_[i]);
  return Scalar(field_, static_cast<long long>(m_[i]));
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  require_same_field(field_, value.field());
  const std::size_t i = index(r, c);
  if (field_.is_rational()) {
    q_[i] = value.rational();
  } else {
    m_[i] = value.residue();
  }
}

void ExactMatrix::set(std::size_t r, std::size_t c, long long value) {
  const std::size_t i = index(r, c);
  if (field_.is_rational()) {
    q_[i] = mpq_class(static_cast<long>(value));
  } else {
    m_[i] = reduce_ll(value, field_.characteristic());
  }
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  require_same_field(field_, value.field());
  const std::size_t i = index(r, c);
  if (field_.is_rational()) {
    q_[i] += value.rational();
  } else {
    m_[i] = mod_add(m_[i], value.residue(), field_.characteristic());
  }
}

bool ExactMatrix::is_zero(std::size_t r, std::size_t c) const {
  const std::size_t i = index(r, c);
  return field_.is_rational() ? sgn(q_[i]) == 0 : m_[i] == 0;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> columns) const {
  ExactMatrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const std::size_t from = index(r, columns[k]);
      const std::size_t to = r * out.cols_ + k;
      if (field_.is_rational()) {
        out.q_[to] = q_[from];
      } else {
        out.m_[to] = m_[from];
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_rational()) {
        out.q_[c * rows_ + r] = q_[r * cols_ + c];
      } else {
        out.m_[c * rows_ + r] = m_[r * cols_ + c];
      }
    }
  }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && q_ == o.q_ && m_ == o.m_;
}

ExactMatrix hconcat(const ExactMatrix& left, const ExactMatrix& right) {
  require_same_field(left.field(), right.field());
  if (left.rows() != right.rows()) throw InputError("hconcat: row counts differ");
  ExactMatrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) {
      if (!left.is_zero(r, c)) out.set(r, c, left.at(r, c));
    }
    for (std::size_t c = 0; c < right.cols(); ++c) {
      if (!right.is_zero(r, c)) out.set(r, left.cols() + c, right.at(r, c));
    }
  }
  return out;
}

ExactMatrix vconcat(const ExactMatrix& top, const ExactMatrix& bottom) {
  return hconcat(top.transpose(), bottom.transpose()).transpose();
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw InputError("multiply: inner dimensions differ");
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  const std::size_t m = b.cols();
  ExactMatrix out(a.field(), n, m);
  if (a.field().is_rational()) {
    const auto& ad = a.rational_data();
    const auto& bd = b.rational_data();
    std::vector<mpq_class> acc(n * m, mpq_class(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < k; ++t) {
        const mpq_class& av = ad[i * k + t];
        if (sgn(av) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          const mpq_class& bv = bd[t * m + j];
          if (sgn(bv) != 0) acc[i * m + j] += av * bv;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) out.set(i, j, Scalar(a.field(), acc[i * m + j]));
    }
  } else {
    const std::uint32_t p = a.field().characteristic();
    const auto& ad = a.residue_data();
    const auto& bd = b.residue_data();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t sum = 0;
        for (std::size_t t = 0; t < k; ++t) {
          sum = (sum + static_cast<std::uint64_t>(ad[i * k + t]) * bd[t * m + j]) % p;
        }
        out.set(i, j, static_cast<long long>(sum));
      }
    }
  }
  return out;
}

std::vector<Scalar> apply(const ExactMatrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw InputError("apply: vector length mismatch");
  std::vector<Scalar> out(m.rows(), Scalar(m.field(), 0LL));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.is_zero(r, c)) out[r] = out[r] + m.at(r, c) * v[c];
    }
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!m.field().is_rational()) {
    return modular_rank(m.residue_data(), m.rows(), m.cols(), m.field().characteristic());
  }
  // Clear denominators row by row; rank is unchanged by nonzero row scaling.
  const auto& data = m.rational_data();
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpz_class& den = data[r * m.cols() + c].get_den();
      if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& v = data[r * m.cols() + c];
      if (sgn(v) != 0) rows[r][c] = v.get_num() * (lcm / v.get_den());
    }
  }
  return integer_rank(std::move(rows), m.cols());
}

RrefResult rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::vector<std::size_t> pivots;
  const Field& field = m.field();
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (!a.is_zero(i, col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        Scalar tmp = a.at(r, c);
        a.set(r, c, a.at(pivot, c));
        a.set(pivot, c, tmp);
      }
    }
    const Scalar inv = Scalar(field, 1LL) / a.at(r, col);
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (!a.is_zero(r, c)) a.set(r, c, a.at(r, c) * inv);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.is_zero(i, col)) continue;
      const Scalar factor = a.at(i, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a.is_zero(r, c)) a.set(i, c, a.at(i, c) - factor * a.at(r, c));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  const RrefResult reduced = rref(m);
  const Field& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : reduced.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(field, 0LL));
    v[free] = Scalar(field, 1LL);
    for (std::size_t k = 0; k < reduced.pivots.size(); ++k) {
      v[reduced.pivots[k]] = -reduced.matrix.at(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix reduce_mod(const ExactMatrix& m, const Field& prime) {
  if (!m.field().is_rational() || prime.is_rational()) {
    throw InputError("reduce_mod: expects a rational matrix and a prime field");
  }
  ExactMatrix out(prime, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.is_zero(r, c)) out.set(r, c, Scalar(prime, m.at(r, c).rational()));
    }
  }
  return out;
}

ExactMatrix lift_to_rationals(const ExactMatrix& m) {
  if (m.field().is_rational()) return m;
  const long long p = m.field().characteristic();
  ExactMatrix out(Field::rationals(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      long long v = m.residue_data()[r * m.cols() + c];
      if (v > p / 2) v -= p;
      if (v != 0) out.set(r, c, v);
    }
  }
  return out;
}

RankCrossCheck cross_check_rank(const ExactMatrix& rational, std::uint32_t prime) {
  RankCrossCheck out;
  out.prime = prime;
  out.rank_rational = rank(rational);
  out.rank_mod_p = rank(reduce_mod(rational, Field::prime(prime)));
  return out;
}

}  // namespace earkit
