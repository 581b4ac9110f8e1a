// Acceptance suite: one pass/fail line per criterion, all checks exact
// (rational equality). Takes the CLI binary path as argv[1] for the
// determinism criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "bialg/relations.hpp"
#include "bialg/sampler.hpp"

using namespace bialg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Vec random_coalgebra_element(Rng& rng, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.rational();
  return v;
}

GradedElement word_elem(int dim, int cap, const Word& w) {
  GradedElement e(dim, cap);
  e.add_term(w, Rational(1));
  return e;
}

// ---------------------------------------------------------------------------
// 1. Duality identity on seeded random (instance, w, v) triples.

bool criterion_duality(std::string& note) {
  auto start = Clock::now();
  Rng rng(1001);
  int trials = 0;
  for (int i = 0; i < 30; ++i) {
    RealizationMap r = random_instance(rng, 4);
    for (int t = 0; t < 4; ++t) {
      GradedElement w = random_element(rng, r.L.dim, 3, 3);
      GradedElement v = random_element(rng, r.F.dim, 3, 3);
      DualityReport rep = duality_check(r, w, v);
      ++trials;
      if (!rep.equal) {
        note = "counterexample at trial " + std::to_string(trials);
        return false;
      }
    }
  }
  double dt = seconds_since(start);
  note = std::to_string(trials) + " trials, " + std::to_string(dt) + " s";
  return trials >= 100 && dt < 60.0;
}

// ---------------------------------------------------------------------------
// 2-4. Relation computations shared across three criteria: route agreement,
// soundness oracle, coideal property.

struct RelationRun {
  RealizationMap instance;
  int order;
  Subspace relations;
};

bool compute_relation_runs(std::vector<RelationRun>& runs, std::string& note) {
  auto start = Clock::now();
  Rng rng(2002);
  int instances = 0;
  for (int i = 0; i < 20; ++i) {
    RealizationMap r = random_instance(rng, 4);
    ++instances;
    for (int m = 0; m <= 3; ++m) {
      Subspace via_min = relations_via_minimal_rep(r, m);
      Subspace via_dual = relations_via_dual_generators(r, m);
      if (!subspace_equal(via_min, via_dual)) {
        note = "routes disagree (instance " + std::to_string(i) + ", m = " +
               std::to_string(m) + ")";
        return false;
      }
      runs.push_back({r, m, via_min});
    }
  }
  double dt = seconds_since(start);
  note = std::to_string(instances) + " instances x orders 0..3, " + std::to_string(dt) + " s";
  return instances >= 20 && dt < 120.0;
}

bool criterion_soundness(const std::vector<RelationRun>& runs, std::string& note) {
  int relations_checked = 0;
  for (const auto& run : runs) {
    OracleReport rep = relations_action_oracle(run.instance, run.order, run.relations,
                                               run.order + 2);
    if (!rep.ok) {
      note = "oracle failed at order " + std::to_string(run.order) + ": " + rep.reason;
      return false;
    }
    relations_checked += (int)run.relations.dim();
  }
  note = std::to_string(relations_checked) + " relation basis vectors, check degree m+2";
  return true;
}

bool criterion_coideal(const std::vector<RelationRun>& runs, std::string& note) {
  int spaces = 0, intersections = 0;
  for (const auto& run : runs) {
    CoidealReport rep = coideal_check(run.instance.L, run.order, run.relations);
    if (!rep.ok) {
      note = "R_m not a coideal at order " + std::to_string(run.order) + ": " + rep.reason;
      return false;
    }
    ++spaces;
    // Intersections with smallest subcoalgebras of the first few relations.
    TensorShape shape(run.instance.L.dim, run.order);
    std::size_t take = std::min<std::size_t>(run.relations.dim(), 3);
    for (std::size_t b = 0; b < take; ++b) {
      GradedElement v = from_coords(shape, run.relations.basis[b]);
      SubcoalgebraRelations sub = relations_in_subcoalgebra(
          run.instance, v, run.order, kDefaultCoordinateGuard, &run.relations);
      if (!sub.is_relation) {
        note = "claimed relation not recognized in its own space";
        return false;
      }
      if (!sub.coideal.ok) {
        note = "R_m intersected with C_w is not a coideal: " + sub.coideal.reason;
        return false;
      }
      ++intersections;
    }
  }
  note = std::to_string(spaces) + " relation spaces, " + std::to_string(intersections) +
         " smallest-subcoalgebra intersections";
  return true;
}

// ---------------------------------------------------------------------------
// 5. Closed-form fixtures.

bool criterion_fixtures(std::string& note) {
  // Grouplike fixture with lambda = 2/3: both duality sides equal 64/729.
  Coalgebra point = grouplike_points(1);
  Matrix xt(1, 1);
  xt.at(0, 0) = Rational(2, 3);
  RealizationMap g = make_realization(point, point, std::move(xt));
  GradedElement w = word_elem(1, 3, {0, 0, 0});
  GradedElement v = word_elem(1, 2, {0, 0});
  DualityReport rep = duality_check(g, w, v);
  if (!(rep.equal && rep.lhs == Rational(64, 729))) {
    note = "grouplike pairing: lhs " + rep.lhs.str() + ", rhs " + rep.rhs.str();
    return false;
  }

  // Primitive-over-grouplike fixture: R_1 = span{1 - g, p} by both routes.
  Coalgebra l = divided_power_chain(2);
  Coalgebra f = grouplike_points(1);
  Matrix pxt(1, 2);
  pxt.at(0, 0) = Rational(1);
  RealizationMap p = make_realization(std::move(l), std::move(f), std::move(pxt));
  TensorShape shape(2, 1);
  GradedElement one_minus_g(2, 1);
  one_minus_g.add_term({}, Rational(1));
  one_minus_g.add_term({0}, Rational(-1));
  Subspace expect = row_reduce(shape.total(), {to_coords(shape, one_minus_g),
                                               to_coords(shape, word_elem(2, 1, {1}))});
  if (!subspace_equal(relations_via_minimal_rep(p, 1), expect) ||
      !subspace_equal(relations_via_dual_generators(p, 1), expect)) {
    note = "primitive fixture relation space mismatch";
    return false;
  }
  note = "pairing 64/729 on both sides; R_1 = span{1 - g, p} by both routes";
  return true;
}

// ---------------------------------------------------------------------------
// 6. Structural properties on random elements and operators.

bool criterion_structural(std::string& note) {
  Rng rng(3003);
  int reversal_checks = 0, invariance_checks = 0, antimorphism_checks = 0,
      recursion_checks = 0;

  // Reversal: involution and coproduct compatibility, 100 elements.
  for (int t = 0; t < 100; ++t) {
    Coalgebra c = random_coalgebra(rng, 3);
    GradedElement e = random_element(rng, c.dim, 3, 3);
    if (!(tensor_reverse(tensor_reverse(e)) == e)) {
      note = "reversal is not an involution";
      return false;
    }
    PairTerms lhs = word_coproduct(c, tensor_reverse(e));
    PairTerms rhs;
    for (const auto& [lr, coeff] : word_coproduct(c, e)) {
      Word a(lr.first.rbegin(), lr.first.rend());
      Word b(lr.second.rbegin(), lr.second.rend());
      rhs[{std::move(a), std::move(b)}] += coeff;
    }
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs != rhs) {
      note = "coproduct does not commute with reversal";
      return false;
    }
    ++reversal_checks;
  }

  // Right-invariance and degree preservation, 100 operators.
  for (int t = 0; t < 100; ++t) {
    RealizationMap r = random_instance(rng, 3);
    GradedElement w = random_element(rng, r.L.dim, 2, 2);
    RightInvariantOperator op = realize_operator(r, w, 2);
    if (!is_right_invariant(r.F, op)) {
      note = "right-invariance violated";
      return false;
    }
    Vec l = random_coalgebra_element(rng, r.L.dim);
    GradedElement word = random_element(rng, r.F.dim, 2, 1);
    GradedElement image = extended_action(r, l, word);
    int want = word.is_zero() ? -1 : word.top_degree();
    for (const auto& [iw, ic] : image.terms())
      if ((int)iw.size() > 2 || (want >= 0 && word.terms().size() == 1 &&
                                 (int)iw.size() != want)) {
        note = "degree not preserved";
        return false;
      }
    ++invariance_checks;
  }

  // Anti-morphism of composition on forms, 100 pairs.
  for (int t = 0; t < 100; ++t) {
    RealizationMap r = random_instance(rng, 3);
    GradedElement w1 = random_element(rng, r.L.dim, 1, 2);
    GradedElement w2 = random_element(rng, r.L.dim, 1, 2);
    RightInvariantOperator a = realize_operator(r, w1, 2);
    RightInvariantOperator b = realize_operator(r, w2, 2);
    RightInvariantOperator ab = realize_operator(r, concat_product(w1, w2, 2), 2);
    for (int n = 0; n <= 2; ++n)
      if (!(ab.block(n) == a.block(n) * b.block(n))) {
        note = "realization not multiplicative";
        return false;
      }
    if (!(ab.form() == dual_product(r.E, b.form(), a.form()))) {
      note = "composition form is not the reversed product";
      return false;
    }
    ++antimorphism_checks;
  }

  // Recursion rule against the closed-form action, 100 triples.
  for (int t = 0; t < 100; ++t) {
    RealizationMap r = random_instance(rng, 3);
    Vec l = random_coalgebra_element(rng, r.L.dim);
    GradedElement w1 = random_element(rng, r.F.dim, 1, 2);
    GradedElement w2 = random_element(rng, r.F.dim, 2, 2);
    GradedElement lhs = extended_action(r, l, concat_product(w1, w2, 3));
    GradedElement rhs(r.F.dim, 3);
    for (int i = 0; i < r.L.dim; ++i) {
      if (l[i].is_zero()) continue;
      for (const auto& term : r.L.delta[i]) {
        Vec li(r.L.dim), ri(r.L.dim);
        li[term.left] = Rational(1);
        ri[term.right] = Rational(1);
        GradedElement prod = concat_product(extended_action(r, li, w1),
                                            extended_action(r, ri, w2), 3);
        prod.scale(l[i] * term.coeff);
        rhs += prod;
      }
    }
    if (!(lhs == rhs)) {
      note = "recursion rule disagrees with the closed form";
      return false;
    }
    ++recursion_checks;
  }

  note = std::to_string(reversal_checks) + " reversals, " +
         std::to_string(invariance_checks) + " operators, " +
         std::to_string(antimorphism_checks) + " compositions, " +
         std::to_string(recursion_checks) + " recursions";
  return true;
}

// ---------------------------------------------------------------------------
// 7. Linear-algebra kernel at ambient dimension up to 60.

bool criterion_linalg(std::string& note) {
  Rng rng(4004);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = (t % 10 == 0) ? 55 + rng.bounded(6) : 1 + rng.bounded(40);
    std::size_t rows = 1 + rng.bounded((int)n);
    Matrix m(rows, n);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.rational();
    Subspace row_space = row_reduce(m);
    Subspace null_space = kernel(m);
    if (row_space.dim() + null_space.dim() != n) {
      note = "rank-nullity failed at ambient " + std::to_string(n);
      return false;
    }
    if (!subspace_equal(orthogonal_complement(orthogonal_complement(row_space)), row_space)) {
      note = "double orthogonal failed at ambient " + std::to_string(n);
      return false;
    }
    ++checked;
  }
  note = std::to_string(checked) + " random matrices, ambient up to 60";
  return checked >= 200;
}

// ---------------------------------------------------------------------------
// 8. CLI determinism: same seed, byte-identical reports.

std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  *exit_code = WEXITSTATUS(pclose(pipe));
  return out;
}

bool criterion_determinism(const std::string& cli, const std::string& data_dir,
                           std::string& note) {
  if (cli.empty()) {
    note = "CLI path missing (pass as argv[1])";
    return false;
  }
  std::vector<std::string> invocations = {
      "validate " + data_dir + "/fix_m2.json",
      "duality " + data_dir + "/fix_p2g1.json --max-left 3 --max-right 3 --trials 40 --seed 7",
      "duality " + data_dir + "/fix_m2.json --max-left 2 --max-right 2 --trials 15 --seed 99",
      "relations " + data_dir + "/fix_p2g1.json --order 2 --method both",
      "relations " + data_dir + "/fix_m2.json --order 1 --method both",
      "subcoalgebra " + data_dir + "/fix_p2g1.json --element " + data_dir + "/elem_p.json",
  };
  for (const auto& args : invocations) {
    int code_a = 0, code_b = 0;
    std::string a = run_cli(cli, args, &code_a);
    std::string b = run_cli(cli, args, &code_b);
    if (code_a != 0 || code_b != 0) {
      note = "CLI run failed: " + args;
      return false;
    }
    if (a != b || a.empty()) {
      note = "reports differ between runs: " + args;
      return false;
    }
  }
  note = std::to_string(invocations.size()) + " invocations repeated byte-identically";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  std::string data_dir = argc > 2 ? argv[2] : "data";

  int failures = 0;
  auto report = [&](int num, const std::string& name, bool ok, const std::string& note) {
    std::cout << "criterion " << num << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << "  [" << note << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
  };

  std::string note;
  bool ok = criterion_duality(note);
  report(1, "duality identity, exact, 120 seeded triples", ok, note);

  std::vector<RelationRun> runs;
  note.clear();
  ok = compute_relation_runs(runs, note);
  report(2, "route agreement B_m = B^m for m <= 3", ok, note);

  note.clear();
  ok = criterion_soundness(runs, note);
  report(3, "relation soundness: eps = 0 and zero action on T_{m+2}(F)", ok, note);

  note.clear();
  ok = criterion_coideal(runs, note);
  report(4, "coideal property of R_m and R_m within C_w", ok, note);

  note.clear();
  ok = criterion_fixtures(note);
  report(5, "closed-form fixture values", ok, note);

  note.clear();
  ok = criterion_structural(note);
  report(6, "structural properties of the realization", ok, note);

  note.clear();
  ok = criterion_linalg(note);
  report(7, "exact linear-algebra kernel", ok, note);

  note.clear();
  ok = criterion_determinism(cli, data_dir, note);
  report(8, "CLI determinism", ok, note);

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures;
}
