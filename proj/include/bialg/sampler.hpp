#pragma once

#include <cstdint>
#include <random>

#include "bialg/realization.hpp"

namespace bialg {

/// Deterministic seeded randomness. Bounded draws use rejection sampling on
/// the raw 64-bit stream so the sequence depends only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  int bounded(int n);  // uniform in [0, n)

  /// Entry distribution of the instance generator: numerators in [-3, 3],
  /// denominators in {1, 2, 3}.
  Rational rational();
  Rational nonzero_rational();

 private:
  std::mt19937_64 g_;
};

/// Validated coalgebra templates. Free random structure constants are almost
/// never coassociative, so random instances are assembled from these blocks.
Coalgebra grouplike_points(int k);
/// Divided-power chain of length k: basis p_0 (grouplike), p_1, ..., p_{k-1}
/// with Delta(p_i) = sum over a+b=i of p_a (x) p_b.
Coalgebra divided_power_chain(int k);
/// The 2x2 matrix coalgebra: basis e_ij, Delta(e_ij) = sum_k e_ik (x) e_kj.
Coalgebra matrix_coalgebra_2x2();
Coalgebra coalgebra_direct_sum(const Coalgebra& a, const Coalgebra& b);

/// Random coalgebra of dimension in [1, max_dim], assembled from blocks.
Coalgebra random_coalgebra(Rng& rng, int max_dim, bool allow_matrix_block = true);

Matrix random_structure_matrix(Rng& rng, int dim_f, int dim_l);

RealizationMap random_instance(Rng& rng, int max_dim, bool allow_matrix_block = true);

/// Random element of a truncated tensor space: up to max_terms words of
/// degree <= max_degree.
TensorElement random_element(Rng& rng, int dim, int max_degree, int max_terms);

}  // namespace bialg
