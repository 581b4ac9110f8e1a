#include "bialg/sampler.hpp"

#include <stdexcept>

namespace bialg {

int Rng::bounded(int n) {
  if (n <= 0) throw std::invalid_argument("Rng::bounded: n must be positive");
  std::uint64_t un = (std::uint64_t)n;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t r;
  do {
    r = g_();
  } while (r >= limit);
  return (int)(r % un);
}

Rational Rng::rational() {
  long num = bounded(7) - 3;
  long den = 1 + bounded(3);
  return Rational(num, den);
}

Rational Rng::nonzero_rational() {
  Rational r = rational();
  while (r.is_zero()) r = rational();
  return r;
}

Coalgebra grouplike_points(int k) {
  if (k < 1) throw std::invalid_argument("grouplike_points: k must be >= 1");
  Coalgebra c;
  c.dim = k;
  c.delta.resize(k);
  c.counit.assign(k, Rational(1));
  for (int i = 0; i < k; ++i) c.delta[i].push_back({i, i, Rational(1)});
  return c;
}

Coalgebra divided_power_chain(int k) {
  if (k < 1) throw std::invalid_argument("divided_power_chain: k must be >= 1");
  Coalgebra c;
  c.dim = k;
  c.delta.resize(k);
  c.counit.assign(k, Rational(0));
  c.counit[0] = Rational(1);
  for (int i = 0; i < k; ++i)
    for (int a = 0; a <= i; ++a) c.delta[i].push_back({a, i - a, Rational(1)});
  return c;
}

Coalgebra matrix_coalgebra_2x2() {
  // Basis order: e11, e12, e21, e22; index(i,j) = 2*(i-1) + (j-1).
  Coalgebra c;
  c.dim = 4;
  c.delta.resize(4);
  c.counit = {Rational(1), Rational(0), Rational(0), Rational(1)};
  auto id = [](int i, int j) { return 2 * i + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        c.delta[id(i, j)].push_back({id(i, k), id(k, j), Rational(1)});
  return c;
}

Coalgebra coalgebra_direct_sum(const Coalgebra& a, const Coalgebra& b) {
  Coalgebra c;
  c.dim = a.dim + b.dim;
  c.delta.resize(c.dim);
  c.counit.resize(c.dim);
  for (int i = 0; i < a.dim; ++i) {
    c.delta[i] = a.delta[i];
    c.counit[i] = a.counit[i];
  }
  for (int i = 0; i < b.dim; ++i) {
    for (const auto& t : b.delta[i])
      c.delta[a.dim + i].push_back({a.dim + t.left, a.dim + t.right, t.coeff});
    c.counit[a.dim + i] = b.counit[i];
  }
  return c;
}

Coalgebra random_coalgebra(Rng& rng, int max_dim, bool allow_matrix_block) {
  if (max_dim < 1) throw std::invalid_argument("random_coalgebra: max_dim must be >= 1");
  int dim = 1 + rng.bounded(max_dim);
  Coalgebra acc;
  int remaining = dim;
  bool first = true;
  while (remaining > 0) {
    Coalgebra block;
    int kind = rng.bounded(allow_matrix_block && remaining >= 4 ? 3 : 2);
    if (kind == 0) {
      block = grouplike_points(1 + rng.bounded(remaining));
    } else if (kind == 1) {
      block = divided_power_chain(1 + rng.bounded(remaining));
    } else {
      block = matrix_coalgebra_2x2();
    }
    remaining -= block.dim;
    acc = first ? block : coalgebra_direct_sum(acc, block);
    first = false;
  }
  return acc;
}

Matrix random_structure_matrix(Rng& rng, int dim_f, int dim_l) {
  Matrix m(dim_f, dim_l);
  for (int i = 0; i < dim_f; ++i)
    for (int j = 0; j < dim_l; ++j) m.at(i, j) = rng.rational();
  return m;
}

RealizationMap random_instance(Rng& rng, int max_dim, bool allow_matrix_block) {
  Coalgebra l = random_coalgebra(rng, max_dim, allow_matrix_block);
  Coalgebra f = random_coalgebra(rng, max_dim, allow_matrix_block);
  Matrix xt = random_structure_matrix(rng, f.dim, l.dim);
  return make_realization(std::move(l), std::move(f), std::move(xt));
}

TensorElement random_element(Rng& rng, int dim, int max_degree, int max_terms) {
  TensorElement out(dim, max_degree);
  int terms = 1 + rng.bounded(max_terms);
  for (int t = 0; t < terms; ++t) {
    int deg = rng.bounded(max_degree + 1);
    Word w(deg);
    for (int i = 0; i < deg; ++i) w[i] = rng.bounded(dim);
    out.add_term(w, rng.rational());
  }
  return out;
}

}  // namespace bialg
