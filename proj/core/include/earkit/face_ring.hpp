#pragma once

// Stanley-Reisner ring k[Δ], linear systems of parameters, graded quotients
// k(Δ) = k[Δ]/Θ and g-element certificates.
//
// Vertices are addressed by their position in complex.vertices(); linear
// forms are 1 x n matrices and Θ is a d x n matrix over the chosen field.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "earkit/complex.hpp"
#include "earkit/linalg.hpp"

namespace earkit {

/// Sorted multiset of vertex positions; its length is the degree.
using Monomial = std::vector<int>;

struct MonomialBasis {
  int degree = 0;
  std::vector<Monomial> monomials;  // lexicographic

  std::size_t size() const { return monomials.size(); }
  /// Position of `m`, or nullopt if m is not face-supported.
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  friend MonomialBasis monomial_basis(const SimplicialComplex&, int);
  std::map<Monomial, std::size_t> index_;
};

/// Degree-j monomials whose support is a face.
MonomialBasis monomial_basis(const SimplicialComplex& complex, int j);

/// dim k[Δ]_j = Σ_i f_i C(j-1, j-i).
Count face_ring_dimension(const FVector& f, int j);

struct Lsop {
  ExactMatrix theta;  // d x n
};

/// A facet σ whose column block T|_σ has rank below |σ|, if any.
std::optional<Face> lsop_failure(const SimplicialComplex& complex, const ExactMatrix& theta);

/// Smallest prime accepted for random sampling.
inline constexpr std::uint32_t kMinSamplingPrime = kDefaultPrime;
/// Coefficient bound over Q: entries are drawn from {-B..B} \ {0}.
inline constexpr long long kRationalCoefficientBound = 100;

/// Random l.s.o.p., verified; retries with fresh randomness. Throws
/// InputError for a field below kMinSamplingPrime and VerificationError when
/// the retry budget runs out.
Lsop random_lsop(const SimplicialComplex& complex, const Field& field, std::uint64_t seed,
                 int max_retries = 16);

/// Random 1 x n linear form with nonzero coefficients.
ExactMatrix random_linear_form(std::size_t n, const Field& field, std::uint64_t seed);

/// k[Δ]/Θ degree by degree, with the monomial bases of k[Δ]_j as spanning sets.
class GradedQuotient {
 public:
  /// Throws InputError unless Θ is an l.s.o.p. for the complex.
  GradedQuotient(SimplicialComplex complex, Lsop lsop);

  const SimplicialComplex& complex() const { return complex_; }
  const Lsop& lsop() const { return lsop_; }
  const Field& field() const { return lsop_.theta.field(); }
  int d() const { return complex_.rank(); }

  const MonomialBasis& basis(int j) const { return bases_.at(static_cast<std::size_t>(j)); }
  /// dim (k[Δ]/Θ)_j for 0 <= j <= d.
  Count dimension(int j) const;
  std::vector<Count> hilbert() const;

  /// Rank of multiplication by ω^e from degree i to degree i + e of the quotient.
  Count multiplication_rank(const ExactMatrix& omega, int i, int e) const;
  /// Ranks of ω : k(Δ)_i -> k(Δ)_{i+1} for i = 0..d-1.
  std::vector<Count> weak_lefschetz_profile(const ExactMatrix& omega) const;

  /// Matrix of multiplication by a linear form, k[Δ]_j -> k[Δ]_{j+1}.
  ExactMatrix multiplication_matrix(const ExactMatrix& form, int j) const;

 private:
  SimplicialComplex complex_;
  Lsop lsop_;
  std::vector<MonomialBasis> bases_;
  std::vector<ExactMatrix> theta_images_;  // degree j: span of θ_a · k[Δ]_{j-1}
  std::vector<Count> theta_ranks_;
};

std::vector<Count> quotient_hilbert(const SimplicialComplex& complex, const Lsop& lsop);
Count multiplication_rank(const SimplicialComplex& complex, const Lsop& lsop,
                          const ExactMatrix& omega, int i, int e);

struct GElementCertificate {
  ExactMatrix omega;
  ExactMatrix theta;
  std::uint64_t seed = 0;
  /// ranks[i] = rank of ω^{d-2i} : k(Δ)_i -> k(Δ)_{d-i}, for 0 <= i < d/2.
  std::vector<Count> ranks;
  HVector h;
  bool verified = false;

  const Field& field() const { return theta.field(); }
};

struct AttemptDiagnostic {
  std::uint64_t seed = 0;
  std::string lsop_error;          // nonempty when no l.s.o.p. was found
  std::vector<Count> ranks;        // as in GElementCertificate
  std::vector<Count> quotient;     // Hilbert function of k(Δ)
  std::optional<int> short_index;  // first i with rank < h_i
};

struct GElementSearch {
  std::optional<GElementCertificate> certificate;
  std::vector<AttemptDiagnostic> attempts;
  bool cm_warning = false;  // input was not Cohen-Macaulay over the field
};

/// Deterministic (ω, Θ) for a seed.
std::pair<ExactMatrix, Lsop> sample_pair(const SimplicialComplex& complex, const Field& field,
                                         std::uint64_t seed);

/// Per-attempt seed used by find_g_element.
std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

/// Ranks of ω^{d-2i} for 0 <= i < d/2.
std::vector<Count> g_element_ranks(const GradedQuotient& quotient, const ExactMatrix& omega);

GElementSearch find_g_element(const SimplicialComplex& complex, const Field& field,
                              int attempts, std::uint64_t seed);

/// Recomputes every rank from scratch over `field`. When the certificate's
/// field differs, ω and Θ are lifted/reduced first (GF(p) -> Q uses
/// symmetric representatives). For a certificate over its own field the
/// pair is also regenerated from the seed and compared.
bool verify_certificate(const SimplicialComplex& complex, const GElementCertificate& cert,
                        const Field& field);

}  // namespace earkit
