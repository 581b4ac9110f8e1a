#include "bialg/relations.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace bialg {

namespace {

// Inserts v into an echelon basis kept in reduced row echelon form with
// pivot columns strictly increasing. Returns false when v reduces to zero;
// otherwise optionally hands back the reduced, pivot-normalized row.
bool echelon_insert(std::vector<Vec>& rows, Vec v, Vec* inserted = nullptr) {
  std::size_t cols = v.size();
  for (const Vec& row : rows) {
    std::size_t p = 0;
    while (p < cols && row[p].is_zero()) ++p;
    if (p == cols || v[p].is_zero()) continue;
    Rational f = v[p];
    for (std::size_t j = p; j < cols; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  std::size_t p = 0;
  while (p < cols && v[p].is_zero()) ++p;
  if (p == cols) return false;
  if (v[p] != Rational(1)) {
    Rational inv = Rational(1) / v[p];
    for (std::size_t j = p; j < cols; ++j)
      if (!v[j].is_zero()) v[j] *= inv;
  }
  for (Vec& row : rows) {
    if (row[p].is_zero()) continue;
    Rational f = row[p];
    for (std::size_t j = p; j < cols; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  auto pos = rows.begin();
  for (; pos != rows.end(); ++pos) {
    std::size_t q = 0;
    while (q < cols && (*pos)[q].is_zero()) ++q;
    if (q > p) break;
  }
  if (inserted) *inserted = v;
  rows.insert(pos, std::move(v));
  return true;
}

// Product of T_m(K) elements in flat coordinates: degreewise, letter-position-
// wise expansion through the structure constants with direct index
// arithmetic. Same bilinear map as dual_product, tested against it.
Vec dual_product_coords(const Algebra& k, const TensorShape& shape, const Vec& a,
                        const Vec& b) {
  Vec out(shape.total());
  const int d = k.dim;
  std::vector<int> la(shape.max_degree()), lb(shape.max_degree());
  for (int n = 0; n <= shape.max_degree(); ++n) {
    const long long off = shape.degree_offset(n);
    const long long size = shape.degree_size(n);
    for (long long ia = 0; ia < size; ++ia) {
      const Rational& ca = a[(std::size_t)(off + ia)];
      if (ca.is_zero()) continue;
      {
        long long rem = ia;
        for (int i = n - 1; i >= 0; --i) {
          la[i] = (int)(rem % d);
          rem /= d;
        }
      }
      for (long long ib = 0; ib < size; ++ib) {
        const Rational& cb = b[(std::size_t)(off + ib)];
        if (cb.is_zero()) continue;
        {
          long long rem = ib;
          for (int i = n - 1; i >= 0; --i) {
            lb[i] = (int)(rem % d);
            rem /= d;
          }
        }
        // Depth-first expansion over positions; prunes on empty products.
        auto expand = [&](auto&& self, int pos, long long idx, const Rational& coeff) -> void {
          if (pos == n) {
            out[(std::size_t)(off + idx)] += coeff;
            return;
          }
          for (const auto& t : k.mult[la[pos]][lb[pos]])
            self(self, pos + 1, idx * d + t.out, coeff * t.coeff);
        };
        expand(expand, 0, 0, ca * cb);
      }
    }
  }
  return out;
}

}  // namespace

Subspace minimal_rep_kernel(const RealizationMap& r, int m, MinimalRepConvention conv,
                            long long guard) {
  if (m < 0) throw std::invalid_argument("minimal_rep_kernel: order must be >= 0");
  TensorShape shape(r.L.dim, m, guard);
  std::size_t df = (std::size_t)r.F.dim;
  std::size_t action_rows = df * df;
  std::size_t rows = action_rows + (conv == MinimalRepConvention::kCounitAugmented ? 1 : 0);
  Matrix a(rows, shape.total());

  // Word products of the degree-1 letter operators, memoized by prefix.
  std::vector<Matrix> prods(shape.total());
  prods[0] = Matrix::identity(df);
  for (std::size_t idx = 1; idx < shape.total(); ++idx) {
    Word w = shape.word(idx);
    int n = (int)w.size();
    long long lex = (long long)idx - shape.degree_offset(n);
    std::size_t prefix =
        (std::size_t)(shape.degree_offset(n - 1) + lex / r.L.dim);
    prods[idx] = prods[prefix] * r.generator_on_f[w.back()];
  }
  for (std::size_t idx = 0; idx < shape.total(); ++idx) {
    for (std::size_t i = 0; i < df; ++i)
      for (std::size_t j = 0; j < df; ++j)
        a.at(i * df + j, idx) = prods[idx].at(i, j);
    if (conv == MinimalRepConvention::kCounitAugmented) {
      Rational eps(1);
      for (int letter : shape.word(idx)) eps *= r.L.counit[letter];
      a.at(action_rows, idx) = eps;
    }
  }
  return kernel(a);
}

Subspace subalgebra_closure(const Algebra& k, int m, const std::vector<DualElement>& gens,
                            long long guard) {
  TensorShape shape(k.dim, m, guard);
  std::vector<Vec> rows;
  // The generated subalgebra is the span of all generator words (the empty
  // word being the adjoined unit), so closing the span under left
  // multiplication by the generators alone reaches the fixed point: every
  // word factors as generator * shorter word.
  std::vector<Vec> worklist;
  auto try_insert = [&](Vec v) {
    Vec reduced;
    if (!echelon_insert(rows, std::move(v), &reduced)) return false;
    worklist.push_back(std::move(reduced));
    return true;
  };
  try_insert(to_coords(shape, dual_unit(k, m)));
  std::vector<Vec> gen_coords;
  for (const auto& g : gens) {
    if (g.dim() != k.dim || g.max_degree() > m)
      throw std::invalid_argument("subalgebra_closure: generator shape mismatch");
    DualElement gg(k.dim, m);
    for (const auto& [w, c] : g.terms()) gg.add_term(w, c);
    gen_coords.push_back(to_coords(shape, gg));
    try_insert(gen_coords.back());
  }
  for (std::size_t qi = 0; qi < worklist.size() && rows.size() < shape.total(); ++qi) {
    Vec v = worklist[qi];
    for (const auto& g : gen_coords) {
      try_insert(dual_product_coords(k, shape, g, v));
      if (rows.size() == shape.total()) break;
    }
  }
  return Subspace{shape.total(), std::move(rows)};
}

Subspace relations_via_minimal_rep(const RealizationMap& r, int m, MinimalRepConvention conv,
                                   long long guard) {
  Subspace r1 = minimal_rep_kernel(r, m, conv, guard);
  Subspace w = orthogonal_complement(r1);
  TensorShape shape(r.L.dim, m, guard);
  std::vector<DualElement> gens;
  gens.reserve(w.basis.size());
  for (const Vec& row : w.basis) gens.push_back(from_coords(shape, row));
  Subspace b = subalgebra_closure(r.K, m, gens, guard);
  return orthogonal_complement(b);
}

DualElement dual_generator(const RealizationMap& r, int f_index, int m) {
  if (f_index < 0 || f_index >= r.F.dim)
    throw std::invalid_argument("dual_generator: basis index out of range");
  if (m < 0) throw std::invalid_argument("dual_generator: order must be >= 0");
  DualElement out(r.L.dim, m);
  out.add_term({}, r.F.counit[f_index]);
  Coalgebra fop = opposite_coproduct(r.F);
  Vec f(r.F.dim);
  f[f_index] = Rational(1);
  for (int n = 1; n <= m; ++n) {
    PowerTerms split = iterated_coproduct(fop, f, n - 1);
    for (const auto& [fw, c] : split) {
      // Tensor out the transposed structure map along the word: the K
      // coordinate a of the image of f_i has weight xt[i][a].
      std::vector<std::pair<Word, Rational>> partial{{{}, c}};
      for (int pos = 0; pos < n && !partial.empty(); ++pos) {
        std::vector<std::pair<Word, Rational>> next;
        for (const auto& [w, g] : partial)
          for (int a = 0; a < r.L.dim; ++a) {
            const Rational& e = r.xt.at(fw[pos], a);
            if (e.is_zero()) continue;
            Word ww = w;
            ww.push_back(a);
            next.push_back({std::move(ww), g * e});
          }
        partial = std::move(next);
      }
      for (const auto& [w, g] : partial) out.add_term(w, g);
    }
  }
  return out;
}

Subspace relations_via_dual_generators(const RealizationMap& r, int m, long long guard) {
  std::vector<DualElement> gens;
  gens.reserve(r.F.dim);
  for (int i = 0; i < r.F.dim; ++i) gens.push_back(dual_generator(r, i, m));
  Subspace b = subalgebra_closure(r.K, m, gens, guard);
  return orthogonal_complement(b);
}

CoidealReport coideal_check(const Coalgebra& l, int m, const Subspace& r_space,
                            long long guard) {
  TensorShape shape(l.dim, m, guard);
  if (r_space.ambient != shape.total())
    throw std::invalid_argument("coideal_check: subspace does not live in T_m(L)");
  for (const Vec& row : r_space.basis) {
    GradedElement elem = from_coords(shape, row);
    if (!counit_word(l, elem).is_zero())
      return {false, "counit does not vanish on the subspace", elem};
    // Group the coproduct by left word and reduce the right factors modulo
    // the subspace; the double quotient vanishes iff every resulting column
    // over the left index lies back in the subspace.
    std::map<std::size_t, Vec> by_left;
    for (const auto& [lr, c] : word_coproduct(l, elem)) {
      Vec& v = by_left.try_emplace(shape.index(lr.first), Vec(shape.total())).first->second;
      v[shape.index(lr.second)] += c;
    }
    std::map<std::size_t, Vec> reduced;
    for (auto& [a, v] : by_left) {
      Vec y = reduce_against(r_space, std::move(v));
      bool nonzero = false;
      for (const auto& x : y)
        if (!x.is_zero()) {
          nonzero = true;
          break;
        }
      if (nonzero) reduced.emplace(a, std::move(y));
    }
    std::map<std::size_t, Vec> columns;  // right coordinate -> vector over left index
    for (const auto& [a, y] : reduced)
      for (std::size_t beta = 0; beta < y.size(); ++beta)
        if (!y[beta].is_zero()) {
          Vec& col = columns.try_emplace(beta, Vec(shape.total())).first->second;
          col[a] = y[beta];
        }
    for (const auto& [beta, col] : columns)
      if (!contains(r_space, col))
        return {false, "coproduct escapes R (x) T + T (x) R", elem};
  }
  return {};
}

Subspace smallest_subcoalgebra(const Coalgebra& l, int m, const GradedElement& v,
                               long long guard) {
  if (v.is_zero())
    throw std::invalid_argument("smallest_subcoalgebra: zero element");
  TensorShape shape(l.dim, m, guard);
  if (v.dim() != l.dim || v.top_degree() > m)
    throw std::invalid_argument("smallest_subcoalgebra: element does not live in T_m(L)");
  // Middle slices of the double coproduct, one per (left, right) word pair.
  std::map<std::pair<std::size_t, std::size_t>, Vec> slices;
  for (const auto& [lr, c] : word_coproduct(l, v)) {
    GradedElement left(l.dim, m);
    left.add_term(lr.first, Rational(1));
    std::size_t right_idx = shape.index(lr.second);
    for (const auto& [ab, c2] : word_coproduct(l, left)) {
      Vec& slice =
          slices.try_emplace({shape.index(ab.first), right_idx}, Vec(shape.total()))
              .first->second;
      slice[shape.index(ab.second)] += c * c2;
    }
  }
  std::vector<Vec> rows;
  rows.reserve(slices.size());
  for (auto& [key, slice] : slices) rows.push_back(std::move(slice));
  return row_reduce(shape.total(), std::move(rows));
}

bool is_subcoalgebra(const Coalgebra& l, int m, const Subspace& c, long long guard) {
  TensorShape shape(l.dim, m, guard);
  if (c.ambient != shape.total())
    throw std::invalid_argument("is_subcoalgebra: subspace does not live in T_m(L)");
  for (const Vec& row : c.basis) {
    GradedElement elem = from_coords(shape, row);
    std::map<std::size_t, Vec> by_left, by_right;
    for (const auto& [lr, cc] : word_coproduct(l, elem)) {
      std::size_t a = shape.index(lr.first), b = shape.index(lr.second);
      by_left.try_emplace(a, Vec(shape.total())).first->second[b] += cc;
      by_right.try_emplace(b, Vec(shape.total())).first->second[a] += cc;
    }
    // Delta(c) lies in C (x) C iff it lies in both C (x) T and T (x) C.
    for (const auto& [a, vec] : by_right)
      if (!contains(c, vec)) return false;
    for (const auto& [a, vec] : by_left)
      if (!contains(c, vec)) return false;
  }
  return true;
}

OracleReport relations_action_oracle(const RealizationMap& r, int m, const Subspace& r_space,
                                     int check_degree, long long guard) {
  if (check_degree < m)
    throw std::invalid_argument("relations_action_oracle: check degree below order");
  TensorShape lshape(r.L.dim, m, guard);
  if (r_space.ambient != lshape.total())
    throw std::invalid_argument("relations_action_oracle: subspace does not live in T_m(L)");
  TensorShape fshape(r.F.dim, check_degree, guard);

  std::vector<GradedElement> elems;
  elems.reserve(r_space.basis.size());
  for (const Vec& row : r_space.basis) {
    GradedElement e = from_coords(lshape, row);
    if (!counit_word(r.L, e).is_zero())
      return {false, "counit does not vanish on a claimed relation", e};
    elems.push_back(std::move(e));
  }
  std::vector<Vec> unit_l(r.L.dim, Vec(r.L.dim));
  for (int j = 0; j < r.L.dim; ++j) unit_l[j][j] = Rational(1);

  for (std::size_t idx = 0; idx < fshape.total(); ++idx) {
    GradedElement basis_vec(r.F.dim, check_degree);
    basis_vec.add_term(fshape.word(idx), Rational(1));
    // The composite action of each relation word on this basis vector is
    // shared across relation rows.
    std::map<Word, GradedElement> applied;
    for (std::size_t ri = 0; ri < elems.size(); ++ri) {
      GradedElement acc(r.F.dim, check_degree);
      for (const auto& [u, c] : elems[ri].terms()) {
        auto it = applied.find(u);
        if (it == applied.end()) {
          GradedElement cur = basis_vec;
          for (auto letter = u.rbegin(); letter != u.rend(); ++letter)
            cur = extended_action(r, unit_l[*letter], cur);
          it = applied.emplace(u, std::move(cur)).first;
        }
        GradedElement scaled = it->second;
        scaled.scale(c);
        acc += scaled;
      }
      if (!acc.is_zero())
        return {false,
                "claimed relation acts nontrivially on a basis word of degree " +
                    std::to_string((int)fshape.word(idx).size()),
                elems[ri]};
    }
  }
  return {};
}

SubcoalgebraRelations relations_in_subcoalgebra(const RealizationMap& r,
                                                const GradedElement& v, int m,
                                                long long guard,
                                                const Subspace* precomputed_relations) {
  SubcoalgebraRelations out;
  TensorShape shape(r.L.dim, m, guard);
  out.subcoalgebra = smallest_subcoalgebra(r.L, m, v, guard);
  Subspace rel = precomputed_relations
                     ? *precomputed_relations
                     : relations_via_minimal_rep(r, m, MinimalRepConvention::kEndF, guard);
  out.is_relation = contains(rel, to_coords(shape, v));
  if (!out.is_relation) return out;
  out.intersection = subspace_intersect(rel, out.subcoalgebra);
  out.coideal = coideal_check(r.L, m, out.intersection, guard);
  return out;
}

RelationReport compute_relation_report(const RealizationMap& r, int m, RelationMethod method,
                                       int check_degree, long long guard) {
  RelationReport rep;
  rep.order = m;
  rep.check_degree = check_degree < 0 ? m + 2 : check_degree;
  TensorShape shape(r.L.dim, m, guard);
  rep.dim_t = shape.total();

  if (method == RelationMethod::kMinimalRep || method == RelationMethod::kBoth) {
    Subspace r1 = minimal_rep_kernel(r, m, MinimalRepConvention::kEndF, guard);
    Subspace w = orthogonal_complement(r1);
    std::vector<DualElement> gens;
    for (const Vec& row : w.basis) gens.push_back(from_coords(shape, row));
    Subspace b = subalgebra_closure(r.K, m, gens, guard);
    rep.dim_b_minrep = b.dim();
    rep.relations = orthogonal_complement(b);
    rep.ran_minrep = true;
  }
  if (method == RelationMethod::kDualGenerators || method == RelationMethod::kBoth) {
    std::vector<DualElement> gens;
    for (int i = 0; i < r.F.dim; ++i) gens.push_back(dual_generator(r, i, m));
    Subspace b = subalgebra_closure(r.K, m, gens, guard);
    rep.dim_b_dualgen = b.dim();
    Subspace rel = orthogonal_complement(b);
    if (rep.ran_minrep) {
      rep.constructions_agree = subspace_equal(rep.relations, rel);
      if (!rep.constructions_agree) rep.relations_dualgen = std::move(rel);
    } else {
      rep.relations = std::move(rel);
    }
    rep.ran_dualgen = true;
  }
  if (method == RelationMethod::kBoth && rep.constructions_agree) {
    rep.cross_checks_run = true;
    rep.coideal = coideal_check(r.L, m, rep.relations, guard);
    rep.action = relations_action_oracle(r, m, rep.relations, rep.check_degree, guard);
  }
  return rep;
}

}  // namespace bialg
