#include "bialg/realization.hpp"

#include <stdexcept>
#include <utility>

#include "bialg/relations.hpp"

namespace bialg {

namespace {

Matrix generator_on_f_matrix(const Coalgebra& f, const Matrix& xt, int j) {
  // Column i: image of f_i, namely sum over Delta_F(f_i) of
  // coeff * xt[left][j] * f_right.
  Matrix m(f.dim, f.dim);
  for (int i = 0; i < f.dim; ++i)
    for (const auto& t : f.delta[i]) {
      const Rational& x = xt.at(t.left, j);
      if (!x.is_zero()) m.at(t.right, i) += t.coeff * x;
    }
  return m;
}

}  // namespace

RealizationMap make_realization(Coalgebra L, Coalgebra F, Matrix xt) {
  L.normalize();
  F.normalize();
  ValidationReport vl = validate_coalgebra(L);
  if (!vl.ok)
    throw std::invalid_argument("L fails " + vl.axiom + " at basis index " +
                                std::to_string(vl.basis_index));
  ValidationReport vf = validate_coalgebra(F);
  if (!vf.ok)
    throw std::invalid_argument("F fails " + vf.axiom + " at basis index " +
                                std::to_string(vf.basis_index));
  if ((int)xt.rows() != F.dim || (int)xt.cols() != L.dim)
    throw std::invalid_argument("x_t shape: expected dim(E) x dim(L) = " +
                                std::to_string(F.dim) + " x " + std::to_string(L.dim));
  RealizationMap r;
  r.K = dual_algebra(L);
  r.E = dual_algebra(F);
  r.L = std::move(L);
  r.F = std::move(F);
  r.xt = std::move(xt);
  r.generator_on_f.reserve(r.L.dim);
  for (int j = 0; j < r.L.dim; ++j)
    r.generator_on_f.push_back(generator_on_f_matrix(r.F, r.xt, j));
  return r;
}

RealizationMap transpose_map(const RealizationMap& r) {
  RealizationMap t;
  t.L = r.F;
  t.F = r.L;
  t.K = r.E;
  t.E = r.K;
  t.xt = r.xt.transposed();
  t.generator_on_f.reserve(t.L.dim);
  for (int j = 0; j < t.L.dim; ++j)
    t.generator_on_f.push_back(generator_on_f_matrix(t.F, t.xt, j));
  return t;
}

Matrix generator_matrix(const RealizationMap& r, const Vec& l) {
  if ((int)l.size() != r.L.dim)
    throw std::invalid_argument("generator_matrix: element dimension mismatch");
  Matrix m(r.F.dim, r.F.dim);
  for (int j = 0; j < r.L.dim; ++j)
    if (!l[j].is_zero()) m.add_scaled(r.generator_on_f[j], l[j]);
  return m;
}

GradedElement extended_action(const RealizationMap& r, const Vec& l, const GradedElement& v) {
  if ((int)l.size() != r.L.dim)
    throw std::invalid_argument("extended_action: element dimension mismatch");
  if (v.dim() != r.F.dim)
    throw std::invalid_argument("extended_action: T(F) alphabet mismatch");
  GradedElement out(r.F.dim, v.max_degree());
  for (const auto& [w, coeff] : v.terms()) {
    int n = (int)w.size();
    if (n == 0) {
      Rational eps;
      for (int j = 0; j < r.L.dim; ++j) eps += l[j] * r.L.counit[j];
      out.add_term({}, coeff * eps);
      continue;
    }
    // Closed per-word formula: apply the letter actions along Delta^{n-1}(l).
    PowerTerms split = iterated_coproduct(r.L, l, n - 1);
    for (const auto& [gens, gc] : split) {
      // Tensor out the per-letter image columns.
      std::vector<std::pair<Word, Rational>> partial;
      partial.push_back({{}, coeff * gc});
      for (int pos = 0; pos < n && !partial.empty(); ++pos) {
        const Matrix& gm = r.generator_on_f[gens[pos]];
        std::vector<std::pair<Word, Rational>> next;
        for (const auto& [pw, pc] : partial)
          for (int row = 0; row < r.F.dim; ++row) {
            const Rational& e = gm.at(row, w[pos]);
            if (e.is_zero()) continue;
            Word nw = pw;
            nw.push_back(row);
            next.push_back({std::move(nw), pc * e});
          }
        partial = std::move(next);
      }
      for (const auto& [rw, rc] : partial) out.add_term(rw, rc);
    }
  }
  return out;
}

DualElement form_component(const RealizationMap& r, const Vec& l, int n) {
  if ((int)l.size() != r.L.dim)
    throw std::invalid_argument("form_component: element dimension mismatch");
  if (n < 0) throw std::invalid_argument("form_component: n must be >= 0");
  DualElement out(r.F.dim, n);
  if (n == 0) {
    Rational eps;
    for (int j = 0; j < r.L.dim; ++j) eps += l[j] * r.L.counit[j];
    out.add_term({}, eps);
    return out;
  }
  PowerTerms split = iterated_coproduct(r.L, l, n - 1);
  for (const auto& [gens, gc] : split) {
    std::vector<std::pair<Word, Rational>> partial;
    partial.push_back({{}, gc});
    for (int pos = 0; pos < n && !partial.empty(); ++pos) {
      std::vector<std::pair<Word, Rational>> next;
      for (const auto& [pw, pc] : partial)
        for (int b = 0; b < r.F.dim; ++b) {
          const Rational& e = r.xt.at(b, gens[pos]);
          if (e.is_zero()) continue;
          Word nw = pw;
          nw.push_back(b);
          next.push_back({std::move(nw), pc * e});
        }
      partial = std::move(next);
    }
    for (const auto& [rw, rc] : partial) out.add_term(rw, rc);
  }
  return out;
}

GradedElement RightInvariantOperator::apply(const GradedElement& v) const {
  GradedElement out(v.dim(), v.max_degree());
  for (const auto& [w, c] : v.terms()) {
    int n = (int)w.size();
    if (n > max_degree_)
      throw std::invalid_argument("RightInvariantOperator::apply: degree exceeds carrier");
    const Matrix& b = blocks_[n];
    // Column index of w inside the degree-n block.
    long long col = 0;
    for (int letter : w) col = col * v.dim() + letter;
    // Unrank rows of the same degree.
    for (std::size_t row = 0; row < b.rows(); ++row) {
      const Rational& e = b.at(row, (std::size_t)col);
      if (e.is_zero()) continue;
      Word rw(n);
      long long rem = (long long)row;
      for (int i = n - 1; i >= 0; --i) {
        rw[i] = (int)(rem % v.dim());
        rem /= v.dim();
      }
      out.add_term(rw, c * e);
    }
  }
  return out;
}

bool RightInvariantOperator::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

RightInvariantOperator identity_operator(const RealizationMap& r, int max_degree,
                                         long long guard) {
  TensorShape shape(r.F.dim, max_degree, guard);
  std::vector<Matrix> blocks;
  DualElement form = dual_unit(r.E, max_degree);
  for (int n = 0; n <= max_degree; ++n)
    blocks.push_back(Matrix::identity((std::size_t)shape.degree_size(n)));
  return RightInvariantOperator(max_degree, std::move(form), std::move(blocks));
}

namespace {

// Degree-n block of the extended operator of the j-th generator, columns
// via the closed per-word formula.
Matrix generator_block(const RealizationMap& r, int j, int n, const TensorShape& shape) {
  std::size_t size = (std::size_t)shape.degree_size(n);
  Matrix block(size, size);
  Vec l(r.L.dim);
  l[j] = Rational(1);
  if (n == 0) {
    block.at(0, 0) = r.L.counit[j];
    return block;
  }
  PowerTerms split = iterated_coproduct(r.L, l, n - 1);
  Word w(n, 0);
  for (std::size_t col = 0; col < size; ++col) {
    // Unrank the degree-n column word.
    long long rem = (long long)col;
    for (int i = n - 1; i >= 0; --i) {
      w[i] = (int)(rem % r.F.dim);
      rem /= r.F.dim;
    }
    for (const auto& [gens, gc] : split) {
      std::vector<std::pair<long long, Rational>> partial{{0, gc}};
      for (int pos = 0; pos < n && !partial.empty(); ++pos) {
        const Matrix& gm = r.generator_on_f[gens[pos]];
        std::vector<std::pair<long long, Rational>> next;
        for (const auto& [ri, rc] : partial)
          for (int row = 0; row < r.F.dim; ++row) {
            const Rational& e = gm.at(row, w[pos]);
            if (!e.is_zero()) next.push_back({ri * r.F.dim + row, rc * e});
          }
        partial = std::move(next);
      }
      for (const auto& [ri, rc] : partial) block.at((std::size_t)ri, col) += rc;
    }
  }
  return block;
}

DualElement form_from_blocks(const Coalgebra& f, const std::vector<Matrix>& blocks,
                             const TensorShape& shape) {
  DualElement form(f.dim, shape.max_degree());
  for (int n = 0; n <= shape.max_degree(); ++n) {
    const Matrix& b = blocks[n];
    for (std::size_t col = 0; col < b.cols(); ++col) {
      Rational acc;
      for (std::size_t row = 0; row < b.rows(); ++row) {
        const Rational& e = b.at(row, col);
        if (e.is_zero()) continue;
        // eps of the row word: product of letter counits.
        Rational eps(1);
        long long rem = (long long)row;
        for (int i = 0; i < n; ++i) {
          eps *= f.counit[(int)(rem % f.dim)];
          rem /= f.dim;
        }
        if (!eps.is_zero()) acc += e * eps;
      }
      if (!acc.is_zero()) form.add_term(shape.word(shape.degree_offset(n) + col), acc);
    }
  }
  return form;
}

}  // namespace

RightInvariantOperator realize_operator(const RealizationMap& r, const GradedElement& w,
                                        int max_degree, long long guard) {
  if (w.dim() != r.L.dim)
    throw std::invalid_argument("realize_operator: word alphabet disagrees with L");
  TensorShape shape(r.F.dim, max_degree, guard);
  std::vector<Matrix> acc;
  for (int n = 0; n <= max_degree; ++n) {
    std::size_t size = (std::size_t)shape.degree_size(n);
    acc.emplace_back(size, size);
  }
  // Per-generator blocks are cached across the words of w.
  std::vector<std::vector<Matrix>> gen_blocks(r.L.dim);
  auto blocks_of = [&](int j) -> const std::vector<Matrix>& {
    if (gen_blocks[j].empty())
      for (int n = 0; n <= max_degree; ++n)
        gen_blocks[j].push_back(generator_block(r, j, n, shape));
    return gen_blocks[j];
  };
  for (const auto& [word, coeff] : w.terms()) {
    if (word.empty()) {
      for (int n = 0; n <= max_degree; ++n)
        acc[n].add_scaled(Matrix::identity(acc[n].rows()), coeff);
      continue;
    }
    for (int n = 0; n <= max_degree; ++n) {
      Matrix prod = blocks_of(word[0])[n];
      for (std::size_t i = 1; i < word.size(); ++i)
        prod = prod * blocks_of(word[i])[n];
      acc[n].add_scaled(prod, coeff);
    }
  }
  DualElement form = form_from_blocks(r.F, acc, shape);
  return RightInvariantOperator(max_degree, std::move(form), std::move(acc));
}

std::vector<Matrix> blocks_from_form(const Coalgebra& f, const DualElement& form,
                                     int max_degree, long long guard) {
  TensorShape shape(f.dim, max_degree, guard);
  std::vector<Matrix> blocks;
  for (int n = 0; n <= max_degree; ++n) {
    std::size_t size = (std::size_t)shape.degree_size(n);
    blocks.emplace_back(size, size);
  }
  // X(word) = sum over Delta(word) of form(left) * right.
  for (int n = 0; n <= max_degree; ++n) {
    std::size_t size = (std::size_t)shape.degree_size(n);
    for (std::size_t col = 0; col < size; ++col) {
      Word w = shape.word(shape.degree_offset(n) + col);
      GradedElement e(f.dim, max_degree);
      e.add_term(w, Rational(1));
      for (const auto& [lr, c] : word_coproduct(f, e)) {
        Rational fx = form.coeff(lr.first);
        if (fx.is_zero()) continue;
        long long row = 0;
        for (int letter : lr.second) row = row * f.dim + letter;
        blocks[n].at((std::size_t)row, col) += c * fx;
      }
    }
  }
  return blocks;
}

Rational op_pairing(const RightInvariantOperator& a, const GradedElement& c) {
  return dual_pairing(a.form(), c);
}

bool is_right_invariant(const Coalgebra& f, const RightInvariantOperator& x,
                        long long guard) {
  TensorShape shape(f.dim, x.max_degree(), guard);
  for (std::size_t idx = 0; idx < shape.total(); ++idx) {
    GradedElement e(f.dim, x.max_degree());
    e.add_term(shape.word(idx), Rational(1));
    // Left side: Delta(X e).
    PairTerms lhs = word_coproduct(f, x.apply(e));
    // Right side: (X (x) id)(Delta e).
    PairTerms rhs;
    for (const auto& [lr, c] : word_coproduct(f, e)) {
      GradedElement u(f.dim, x.max_degree());
      u.add_term(lr.first, Rational(1));
      GradedElement xu = x.apply(u);
      for (const auto& [uw, uc] : xu.terms()) {
        auto key = std::make_pair(uw, lr.second);
        auto it = rhs.find(key);
        Rational add = c * uc;
        if (it == rhs.end()) rhs.emplace(std::move(key), std::move(add));
        else {
          it->second += add;
          if (it->second.is_zero()) rhs.erase(it);
        }
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

DualityReport duality_check(const RealizationMap& r, const GradedElement& w,
                            const GradedElement& v, long long guard) {
  DualityReport rep;
  RightInvariantOperator left = realize_operator(r, w, v.top_degree(), guard);
  rep.lhs = op_pairing(left, v);
  RealizationMap rt = transpose_map(r);
  RightInvariantOperator right = realize_operator(rt, tensor_reverse(v), w.top_degree(), guard);
  rep.rhs = op_pairing(right, tensor_reverse(w));
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

std::size_t RealizedBialgebra::image_dimension(int order) const {
  TensorShape shape(r_.L.dim, order, guard_);
  Subspace rel = relations_via_minimal_rep(r_, order, MinimalRepConvention::kEndF, guard_);
  return shape.total() - rel.dim();
}

}  // namespace bialg
