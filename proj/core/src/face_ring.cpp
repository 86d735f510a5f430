#include "earkit/face_ring.hpp"

#include <algorithm>
#include <random>

#include "earkit/errors.hpp"
#include "earkit/homology.hpp"

namespace earkit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

long long sample_coefficient(const Field& field, std::mt19937_64& rng) {
  if (field.is_rational()) {
    std::uniform_int_distribution<long long> magnitude(1, kRationalCoefficientBound);
    std::bernoulli_distribution negative(0.5);
    const long long v = magnitude(rng);
    return negative(rng) ? -v : v;
  }
  std::uniform_int_distribution<long long> residue(1, field.characteristic() - 1);
  return residue(rng);
}

void require_sampling_field(const Field& field) {
  if (!field.is_rational() && field.characteristic() < kMinSamplingPrime) {
    throw InputError("field " + field.name() + " is too small for random sampling (need p >= " +
                     std::to_string(kMinSamplingPrime) + ")");
  }
}

std::vector<std::size_t> vertex_positions(const SimplicialComplex& complex, const Face& face) {
  std::vector<std::size_t> out;
  out.reserve(face.size());
  for (Vertex v : face) {
    const auto it = std::lower_bound(complex.vertices().begin(), complex.vertices().end(), v);
    out.push_back(static_cast<std::size_t>(it - complex.vertices().begin()));
  }
  return out;
}

std::string face_to_string(const Face& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(face[i]);
  }
  return s + "}";
}

// Appends to `out` every multiset of size `degree` over `support` using each
// element at least once.
void expand_support(const std::vector<int>& support, int degree, std::vector<Monomial>& out) {
  const int extra = degree - static_cast<int>(support.size());
  if (extra < 0) return;
  std::vector<int> counts(support.size(), 1);
  // Distribute `extra` additional exponents, nondecreasing position order.
  std::vector<int> picks;
  auto emit = [&] {
    std::vector<int> c = counts;
    for (int p : picks) ++c[static_cast<std::size_t>(p)];
    Monomial m;
    for (std::size_t t = 0; t < support.size(); ++t) {
      m.insert(m.end(), static_cast<std::size_t>(c[t]), support[t]);
    }
    out.push_back(std::move(m));
  };
  auto recurse = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      emit();
      return;
    }
    for (int p = start; p < static_cast<int>(support.size()); ++p) {
      picks.push_back(p);
      self(self, p, left - 1);
      picks.pop_back();
    }
  };
  recurse(recurse, 0, extra);
}

}  // namespace

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MonomialBasis monomial_basis(const SimplicialComplex& complex, int j) {
  if (j < 0) throw InputError("monomial_basis: negative degree");
  if (complex.is_void()) throw InputError("monomial_basis: void complex");
  MonomialBasis out;
  out.degree = j;
  if (j == 0) {
    out.monomials.push_back({});
  } else {
    const auto levels = complex.faces_by_size();
    for (std::size_t k = 1; k < levels.size() && static_cast<int>(k) <= j; ++k) {
      for (const Face& face : levels[k]) {
        std::vector<int> support;
        for (std::size_t p : vertex_positions(complex, face)) support.push_back(static_cast<int>(p));
        expand_support(support, j, out.monomials);
      }
    }
    std::sort(out.monomials.begin(), out.monomials.end());
  }
  for (std::size_t i = 0; i < out.monomials.size(); ++i) out.index_.emplace(out.monomials[i], i);
  return out;
}

Count face_ring_dimension(const FVector& f, int j) {
  if (j == 0) return 1;
  Count total = 0;
  for (int i = 1; i <= f.d() && i <= j; ++i) {
    total += f[static_cast<std::size_t>(i)] * binomial(j - 1, j - i);
  }
  return total;
}

std::optional<Face> lsop_failure(const SimplicialComplex& complex, const ExactMatrix& theta) {
  if (theta.rows() != static_cast<std::size_t>(complex.rank()) ||
      theta.cols() != complex.num_vertices()) {
    throw InputError("l.s.o.p. matrix must be d x n");
  }
  for (const Face& facet : complex.facets()) {
    const auto cols = vertex_positions(complex, facet);
    if (rank(theta.select_columns(cols)) != facet.size()) return facet;
  }
  return std::nullopt;
}

ExactMatrix random_linear_form(std::size_t n, const Field& field, std::uint64_t seed) {
  require_sampling_field(field);
  std::mt19937_64 rng(seed);
  ExactMatrix form(field, 1, n);
  for (std::size_t c = 0; c < n; ++c) form.set(0, c, sample_coefficient(field, rng));
  return form;
}

Lsop random_lsop(const SimplicialComplex& complex, const Field& field, std::uint64_t seed,
                 int max_retries) {
  require_sampling_field(field);
  if (complex.is_void()) throw InputError("random_lsop: void complex");
  std::mt19937_64 rng(seed);
  const auto d = static_cast<std::size_t>(complex.rank());
  const std::size_t n = complex.num_vertices();
  Face last_failure;
  for (int attempt = 0; attempt < std::max(1, max_retries); ++attempt) {
    ExactMatrix theta(field, d, n);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < n; ++c) theta.set(r, c, sample_coefficient(field, rng));
    }
    const auto failure = lsop_failure(complex, theta);
    if (!failure) return Lsop{std::move(theta)};
    last_failure = *failure;
  }
  throw VerificationError("no l.s.o.p. found within the retry budget; facet " +
                          face_to_string(last_failure) + " stayed rank deficient");
}

// ---------------------------------------------------------------- GradedQuotient

GradedQuotient::GradedQuotient(SimplicialComplex complex, Lsop lsop)
    : complex_(std::move(complex)), lsop_(std::move(lsop)) {
  if (complex_.is_void()) throw InputError("graded quotient of the void complex");
  if (const auto bad = lsop_failure(complex_, lsop_.theta)) {
    throw InputError("Θ is not an l.s.o.p.: facet " + face_to_string(*bad) + " is rank deficient");
  }
  const int top = d();
  for (int j = 0; j <= top; ++j) bases_.push_back(monomial_basis(complex_, j));
  theta_images_.emplace_back(field(), 1, 0);
  theta_ranks_.push_back(0);
  for (int j = 1; j <= top; ++j) {
    ExactMatrix image(field(), bases_[static_cast<std::size_t>(j)].size(), 0);
    for (std::size_t a = 0; a < lsop_.theta.rows(); ++a) {
      std::vector<std::size_t> row{a};
      const ExactMatrix form = lsop_.theta.transpose().select_columns(row).transpose();
      image = hconcat(image, multiplication_matrix(form, j - 1));
    }
    theta_ranks_.push_back(static_cast<Count>(rank(image)));
    theta_images_.push_back(std::move(image));
  }
}

ExactMatrix GradedQuotient::multiplication_matrix(const ExactMatrix& form, int j) const {
  if (form.rows() != 1 || form.cols() != complex_.num_vertices()) {
    throw InputError("linear form must be 1 x n");
  }
  if (!(form.field() == field())) throw InputError("linear form over a different field");
  const MonomialBasis& from = basis(j);
  const MonomialBasis& to = basis(j + 1);
  ExactMatrix out(field(), to.size(), from.size());
  for (std::size_t col = 0; col < from.size(); ++col) {
    const Monomial& m = from.monomials[col];
    for (std::size_t v = 0; v < form.cols(); ++v) {
      if (form.is_zero(0, v)) continue;
      Monomial product = m;
      product.insert(std::upper_bound(product.begin(), product.end(), static_cast<int>(v)),
                     static_cast<int>(v));
      // Products whose support is not a face vanish in k[Δ].
      if (const auto row = to.index_of(product)) out.add(*row, col, form.at(0, v));
    }
  }
  return out;
}

Count GradedQuotient::dimension(int j) const {
  if (j < 0 || j > d()) throw InputError("degree out of range");
  return static_cast<Count>(basis(j).size()) - theta_ranks_[static_cast<std::size_t>(j)];
}

std::vector<Count> GradedQuotient::hilbert() const {
  std::vector<Count> out;
  for (int j = 0; j <= d(); ++j) out.push_back(dimension(j));
  return out;
}

Count GradedQuotient::multiplication_rank(const ExactMatrix& omega, int i, int e) const {
  if (i < 0 || e < 1 || i + e > d()) {
    throw InputError("multiplication_rank: need i >= 0, e >= 1, i + e <= d");
  }
  ExactMatrix power = multiplication_matrix(omega, i);
  for (int k = i + 1; k < i + e; ++k) power = multiply(multiplication_matrix(omega, k), power);
  const auto target = static_cast<std::size_t>(i + e);
  const Count combined = static_cast<Count>(rank(hconcat(theta_images_[target], power)));
  return combined - theta_ranks_[target];
}

std::vector<Count> GradedQuotient::weak_lefschetz_profile(const ExactMatrix& omega) const {
  std::vector<Count> out;
  for (int i = 0; i < d(); ++i) out.push_back(multiplication_rank(omega, i, 1));
  return out;
}

std::vector<Count> quotient_hilbert(const SimplicialComplex& complex, const Lsop& lsop) {
  return GradedQuotient(complex, lsop).hilbert();
}

Count multiplication_rank(const SimplicialComplex& complex, const Lsop& lsop,
                          const ExactMatrix& omega, int i, int e) {
  return GradedQuotient(complex, lsop).multiplication_rank(omega, i, e);
}

// ---------------------------------------------------------------- g-elements

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(attempt) + 1));
}

std::pair<ExactMatrix, Lsop> sample_pair(const SimplicialComplex& complex, const Field& field,
                                         std::uint64_t seed) {
  Lsop lsop = random_lsop(complex, field, seed);
  ExactMatrix omega = random_linear_form(complex.num_vertices(), field, splitmix64(seed));
  return {std::move(omega), std::move(lsop)};
}

std::vector<Count> g_element_ranks(const GradedQuotient& quotient, const ExactMatrix& omega) {
  std::vector<Count> ranks;
  const int d = quotient.d();
  for (int i = 0; 2 * i < d; ++i) ranks.push_back(quotient.multiplication_rank(omega, i, d - 2 * i));
  return ranks;
}

namespace {

std::optional<int> first_short_index(const std::vector<Count>& ranks, const HVector& h) {
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] != h[i]) return static_cast<int>(i);
  }
  return std::nullopt;
}

ExactMatrix convert_matrix(const ExactMatrix& m, const Field& target) {
  if (m.field() == target) return m;
  const ExactMatrix lifted = lift_to_rationals(m);
  return target.is_rational() ? lifted : reduce_mod(lifted, target);
}

}  // namespace

GElementSearch find_g_element(const SimplicialComplex& complex, const Field& field, int attempts,
                              std::uint64_t seed) {
  if (attempts < 1) throw InputError("find_g_element: attempts must be >= 1");
  require_sampling_field(field);
  GElementSearch out;
  out.cm_warning = !is_cm(complex, field).cm;
  const HVector h = h_vector(complex);
  for (int t = 0; t < attempts; ++t) {
    AttemptDiagnostic diag;
    diag.seed = attempt_seed(seed, t);
    std::optional<std::pair<ExactMatrix, Lsop>> pair;
    try {
      pair.emplace(sample_pair(complex, field, diag.seed));
    } catch (const VerificationError& e) {
      diag.lsop_error = e.what();
      out.attempts.push_back(std::move(diag));
      continue;
    }
    const GradedQuotient quotient(complex, pair->second);
    diag.ranks = g_element_ranks(quotient, pair->first);
    diag.quotient = quotient.hilbert();
    diag.short_index = first_short_index(diag.ranks, h);
    const bool success = !diag.short_index.has_value();
    out.attempts.push_back(diag);
    if (success) {
      GElementCertificate cert{pair->first, pair->second.theta, diag.seed, diag.ranks, h, false};
      cert.verified = verify_certificate(complex, cert, field);
      out.certificate = std::move(cert);
      break;
    }
  }
  return out;
}

bool verify_certificate(const SimplicialComplex& complex, const GElementCertificate& cert,
                        const Field& field) {
  const HVector h = h_vector(complex);
  if (!(h == cert.h)) return false;
  ExactMatrix omega = convert_matrix(cert.omega, field);
  ExactMatrix theta = convert_matrix(cert.theta, field);
  if (cert.field() == field) {
    const auto regenerated = sample_pair(complex, field, cert.seed);
    if (!(regenerated.first == cert.omega) || !(regenerated.second.theta == cert.theta)) return false;
  }
  if (lsop_failure(complex, theta)) return false;
  const GradedQuotient quotient(complex, Lsop{std::move(theta)});
  const std::vector<Count> ranks = g_element_ranks(quotient, omega);
  if (ranks != cert.ranks) return false;
  return !first_short_index(ranks, h).has_value();
}

}  // namespace earkit
