#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bialg/realization.hpp"
#include "bialg/sampler.hpp"
#include "test_fixtures.hpp"

using namespace bialg;
using bialg::fixtures::word_elem;

namespace {

Vec basis_vec(int dim, int i) {
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

Rational pow_rat(const Rational& x, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

Vec random_coalgebra_element(Rng& rng, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.rational();
  return v;
}

}  // namespace

TEST_CASE("construction validates shape and axioms") {
  Coalgebra l = divided_power_chain(2);
  Coalgebra f = grouplike_points(1);
  CHECK_THROWS_WITH_AS(make_realization(l, f, Matrix(2, 2)),
                       doctest::Contains("x_t shape"), std::invalid_argument);
  Coalgebra bad = divided_power_chain(2);
  bad.delta[1] = {{1, 0, Rational(1)}};
  CHECK_THROWS_AS(make_realization(bad, f, Matrix(1, 2)), std::invalid_argument);
}

TEST_CASE("transpose map on fixtures") {
  RealizationMap g = fixtures::g1(Rational(2, 3));
  RealizationMap gt = transpose_map(g);
  CHECK(gt.xt.at(0, 0) == Rational(2, 3));  // y_t(f) = lambda u

  RealizationMap p = fixtures::p2g1();
  RealizationMap pt = transpose_map(p);
  CHECK(pt.xt.rows() == 2);
  CHECK(pt.xt.cols() == 1);
  CHECK(pt.xt.at(0, 0) == Rational(1));  // y_t(f) = u
  CHECK(pt.xt.at(1, 0) == Rational(0));

  RealizationMap m = fixtures::m2();
  CHECK(transpose_map(m).xt == Matrix::identity(4));

  // Involution.
  RealizationMap ptt = transpose_map(pt);
  CHECK(ptt.xt == p.xt);
  CHECK(ptt.L == p.L);
  CHECK(ptt.F == p.F);
}

TEST_CASE("extended action on fixtures") {
  RealizationMap g = fixtures::g1(Rational(2, 3));
  GradedElement ff = word_elem(1, 2, {0, 0});
  GradedElement out = extended_action(g, basis_vec(1, 0), ff);
  GradedElement expect = word_elem(1, 2, {0, 0}, Rational(4, 9));
  CHECK(out == expect);

  RealizationMap p = fixtures::p2g1();
  CHECK(extended_action(p, basis_vec(2, 1), word_elem(1, 2, {0, 0})).is_zero());
}

TEST_CASE("the extended operator fixes the unit slot by the counit") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    Vec l = random_coalgebra_element(rng, r.L.dim);
    GradedElement unit = word_elem(r.F.dim, 2, {});
    GradedElement out = extended_action(r, l, unit);
    Rational eps;
    for (int i = 0; i < r.L.dim; ++i) eps += l[i] * r.L.counit[i];
    GradedElement expect(r.F.dim, 2);
    expect.add_term({}, eps);
    CHECK(out == expect);
  }
}

TEST_CASE("extended action preserves degree and is linear") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    Vec l = random_coalgebra_element(rng, r.L.dim);
    GradedElement v = random_element(rng, r.F.dim, 3, 3);
    GradedElement out = extended_action(r, l, v);
    // Group v by degree; the image of each part stays in that degree.
    for (int n = 0; n <= 3; ++n) {
      GradedElement part(r.F.dim, 3);
      for (const auto& [w, c] : v.terms())
        if ((int)w.size() == n) part.add_term(w, c);
      GradedElement image = extended_action(r, l, part);
      for (const auto& [w, c] : image.terms()) CHECK((int)w.size() == n);
    }
    // Linearity in v against splitting by degree.
    GradedElement sum(r.F.dim, 3);
    for (int n = 0; n <= 3; ++n) {
      GradedElement part(r.F.dim, 3);
      for (const auto& [w, c] : v.terms())
        if ((int)w.size() == n) part.add_term(w, c);
      sum += extended_action(r, l, part);
    }
    CHECK(sum == out);
  }
}

TEST_CASE("product rule of the extension agrees with the closed form") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    Vec l = random_coalgebra_element(rng, r.L.dim);
    GradedElement w1 = random_element(rng, r.F.dim, 2, 2);
    GradedElement w2 = random_element(rng, r.F.dim, 1, 2);
    GradedElement lhs = extended_action(r, l, concat_product(w1, w2, 3));
    GradedElement rhs(r.F.dim, 3);
    for (int i = 0; i < r.L.dim; ++i) {
      if (l[i].is_zero()) continue;
      for (const auto& t : r.L.delta[i]) {
        GradedElement a = extended_action(r, basis_vec(r.L.dim, t.left), w1);
        GradedElement b = extended_action(r, basis_vec(r.L.dim, t.right), w2);
        GradedElement prod = concat_product(a, b, 3);
        prod.scale(l[i] * t.coeff);
        rhs += prod;
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("realized identity and unit word") {
  RealizationMap p = fixtures::p2g1();
  RightInvariantOperator id = realize_operator(p, word_elem(2, 1, {}), 2);
  for (int n = 0; n <= 2; ++n) CHECK(id.block(n) == Matrix::identity(id.block(n).rows()));
  CHECK(op_pairing(id, word_elem(1, 2, {})) == Rational(1));
}

TEST_CASE("grouplike powers compose to lambda^(p*q)") {
  Rational lambda(2, 3);
  RealizationMap g = fixtures::g1(lambda);
  GradedElement ggg = word_elem(1, 3, {0, 0, 0});
  RightInvariantOperator op = realize_operator(g, ggg, 2);
  GradedElement ff = word_elem(1, 2, {0, 0});
  CHECK(op.apply(ff) == word_elem(1, 2, {0, 0}, pow_rat(lambda, 6)));
  CHECK(op_pairing(op, ff) == Rational(64, 729));  // (2/3)^6
}

TEST_CASE("the kernel element of the primitive fixture realizes to zero") {
  RealizationMap p = fixtures::p2g1();
  GradedElement one_minus_g(2, 1);
  one_minus_g.add_term({}, Rational(1));
  one_minus_g.add_term({0}, Rational(-1));
  RightInvariantOperator op = realize_operator(p, one_minus_g, 3);
  CHECK(op.is_zero());
}

TEST_CASE("operator pairing against forms") {
  Rational lambda(5, 7);
  RealizationMap g = fixtures::g1(lambda);
  RightInvariantOperator xg = realize_operator(g, word_elem(1, 1, {0}), 1);
  CHECK(op_pairing(xg, word_elem(1, 1, {0})) == lambda);
}

TEST_CASE("form components of the extended operator") {
  Rational lambda(2, 3);
  RealizationMap g = fixtures::g1(lambda);
  DualElement c0 = form_component(g, basis_vec(1, 0), 0);
  CHECK(c0.coeff({}) == Rational(1));  // eps(g)
  DualElement c2 = form_component(g, basis_vec(1, 0), 2);
  CHECK(c2.coeff({0, 0}) == lambda * lambda);

  RealizationMap p = fixtures::p2g1();
  CHECK(form_component(p, basis_vec(2, 1), 2).is_zero());
  CHECK(form_component(p, basis_vec(2, 1), 0).coeff({}) == Rational(0));
}

TEST_CASE("the form of a generator is the sum of its components") {
  Rng rng(24);
  for (int trial = 0; trial < 15; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    Vec l = random_coalgebra_element(rng, r.L.dim);
    GradedElement lw(r.L.dim, 1);
    for (int i = 0; i < r.L.dim; ++i)
      if (!l[i].is_zero()) lw.add_term({i}, l[i]);
    RightInvariantOperator op = realize_operator(r, lw, 3);
    DualElement expect(r.F.dim, 3);
    for (int n = 0; n <= 3; ++n) {
      DualElement comp = form_component(r, l, n);
      for (const auto& [w, c] : comp.terms()) expect.add_term(w, c);
    }
    CHECK(op.form() == expect);
  }
}

TEST_CASE("realized operators are right invariant and recoverable from forms") {
  Rng rng(25);
  for (int trial = 0; trial < 12; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    GradedElement w = random_element(rng, r.L.dim, 2, 2);
    RightInvariantOperator op = realize_operator(r, w, 2);
    CHECK(is_right_invariant(r.F, op));
    std::vector<Matrix> rebuilt = blocks_from_form(r.F, op.form(), 2);
    for (int n = 0; n <= 2; ++n) CHECK(rebuilt[n] == op.block(n));
  }
}

TEST_CASE("realization is multiplicative and an anti-morphism on forms") {
  Rng rng(26);
  for (int trial = 0; trial < 12; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    GradedElement w1 = random_element(rng, r.L.dim, 2, 2);
    GradedElement w2 = random_element(rng, r.L.dim, 1, 2);
    GradedElement w12 = concat_product(w1, w2, 3);
    RightInvariantOperator a = realize_operator(r, w1, 2);
    RightInvariantOperator b = realize_operator(r, w2, 2);
    RightInvariantOperator ab = realize_operator(r, w12, 2);
    for (int n = 0; n <= 2; ++n) CHECK(ab.block(n) == a.block(n) * b.block(n));
    // Composition reverses under the form map.
    CHECK(ab.form() == dual_product(r.E, b.form(), a.form()));
  }
}

TEST_CASE("the action property of the realized bialgebra") {
  Rng rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    RealizationMap r = random_instance(rng, 2);
    GradedElement z = random_element(rng, r.L.dim, 2, 2);
    GradedElement w1 = random_element(rng, r.F.dim, 1, 2);
    GradedElement w2 = random_element(rng, r.F.dim, 1, 2);
    RightInvariantOperator op = realize_operator(r, z, 2);
    GradedElement lhs = op.apply(concat_product(w1, w2, 2));
    GradedElement rhs(r.F.dim, 2);
    for (const auto& [lr, c] : word_coproduct(r.L, z)) {
      GradedElement zl(r.L.dim, 2), zr(r.L.dim, 2);
      zl.add_term(lr.first, Rational(1));
      zr.add_term(lr.second, Rational(1));
      GradedElement part =
          concat_product(realize_operator(r, zl, 1).apply(w1),
                         realize_operator(r, zr, 1).apply(w2), 2);
      part.scale(c);
      rhs += part;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("realized words fix the unit slot by the word counit") {
  Rng rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    GradedElement w = random_element(rng, r.L.dim, 2, 3);
    RightInvariantOperator op = realize_operator(r, w, 1);
    GradedElement unit = word_elem(r.F.dim, 1, {});
    GradedElement expect(r.F.dim, 1);
    expect.add_term({}, counit_word(r.L, w));
    CHECK(op.apply(unit) == expect);
  }
}

TEST_CASE("duality on units") {
  RealizationMap p = fixtures::p2g1();
  DualityReport rep = duality_check(p, word_elem(2, 1, {}), word_elem(1, 1, {}));
  CHECK(rep.equal);
  CHECK(rep.lhs == Rational(1));
  CHECK(rep.rhs == Rational(1));
}

TEST_CASE("duality closed form on the grouplike fixture") {
  Rational lambda(2, 3);
  RealizationMap g = fixtures::g1(lambda);
  GradedElement w = word_elem(1, 3, {0, 0, 0});
  GradedElement v = word_elem(1, 2, {0, 0});
  DualityReport rep = duality_check(g, w, v);
  CHECK(rep.equal);
  CHECK(rep.lhs == Rational(64, 729));
  CHECK(rep.rhs == Rational(64, 729));
}

TEST_CASE("duality on the matrix fixture with independent sides") {
  RealizationMap m = fixtures::m2();
  Rng rng(28);
  GradedElement w(4, 2);
  w.add_term({1, 2}, Rational(1));  // e12 (x) e21
  for (int trial = 0; trial < 10; ++trial) {
    GradedElement v(4, 2);
    for (int t = 0; t < 3; ++t) {
      Word word(2);
      word[0] = rng.bounded(4);
      word[1] = rng.bounded(4);
      v.add_term(word, rng.rational());
    }
    DualityReport rep = duality_check(m, w, v);
    CHECK(rep.equal);
  }
}

TEST_CASE("duality on random instances and elements") {
  Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    RealizationMap r = random_instance(rng, 3);
    GradedElement w = random_element(rng, r.L.dim, 2, 2);
    GradedElement v = random_element(rng, r.F.dim, 2, 2);
    DualityReport rep = duality_check(r, w, v);
    CHECK(rep.equal);
  }
}

TEST_CASE("realized bialgebra handle") {
  RealizationMap p = fixtures::p2g1();
  RealizedBialgebra u(p, 2);
  CHECK(u.image(word_elem(2, 1, {})).block(1) == Matrix::identity(1));
  CHECK(u.image_dimension(1) == 1);  // dim T_1(L) = 3, dim R_1 = 2

  RealizationMap m = fixtures::m2();
  RealizedBialgebra um(m, 1);
  CHECK(um.image_dimension(1) == 5);  // no order-1 relations
}
