#pragma once

#include <string>
#include <vector>

#include "bialg/coalgebra.hpp"
#include "bialg/linalg.hpp"
#include "bialg/tensor.hpp"

namespace bialg {

/// A realization instance: coalgebras L and F, their dual algebras K and E,
/// and the matrix xt of the structure map L -> E (column j holds the
/// E-coordinates of the image of the j-th L-basis vector). Equivalently the
/// element w of K (x) E with entries xt[b][j] on l_j* (x) e_b.
///
/// generator_on_f[j] caches the degree-1 operator of the j-th generator on
/// F: the right-invariant operator with form xt(:,j), i.e.
/// f_i |-> sum over Delta_F(f_i) of c * xt[left][j] * f_right.
struct RealizationMap {
  Coalgebra L, F;
  Algebra K, E;
  Matrix xt;
  std::vector<Matrix> generator_on_f;
};

/// Builds a realization instance; validates both coalgebra axiom sets and
/// the xt shape. Throws std::invalid_argument / returns through the
/// validation report of the offending side.
RealizationMap make_realization(Coalgebra L, Coalgebra F, Matrix xt);

/// The transposed instance: roles (L, K) <-> (F, E) swapped, matrix
/// transposed. An involution.
RealizationMap transpose_map(const RealizationMap& r);

/// Matrix on F of the degree-1 operator attached to the element l of L
/// (coordinates in the L basis).
Matrix generator_matrix(const RealizationMap& r, const Vec& l);

/// Action of the extended operator of l on an element of T_N(F): on a
/// degree-n word, apply the n-fold letter action along Delta^{n-1}(l); on
/// the unit slot, eps_L(l). Degree-preserving and linear in both arguments.
GradedElement extended_action(const RealizationMap& r, const Vec& l, const GradedElement& v);

/// Degree-n component of the form of the extended operator of l: the n-fold
/// structure-map image of Delta^{n-1}(l) in (x)^n E; for n = 0, eps_L(l).
DualElement form_component(const RealizationMap& r, const Vec& l, int n);

/// A right-invariant operator on T_N(F), carried as its form (a DualElement
/// over the E alphabet) plus the per-degree matrix blocks it was realized
/// from. The form determines the operator: X = (form (x) id) o Delta.
class RightInvariantOperator {
 public:
  RightInvariantOperator(int max_degree, DualElement form, std::vector<Matrix> blocks)
      : max_degree_(max_degree), form_(std::move(form)), blocks_(std::move(blocks)) {}

  int max_degree() const { return max_degree_; }
  const DualElement& form() const { return form_; }
  const Matrix& block(int n) const { return blocks_[n]; }

  GradedElement apply(const GradedElement& v) const;
  bool is_zero() const;

 private:
  int max_degree_;
  DualElement form_;
  std::vector<Matrix> blocks_;
};

/// The word-algebra morphism into right-invariant operators: a word
/// l_1 (x) ... (x) l_p maps to the composition of the extended operators,
/// the empty word to the identity, extended linearly. Blocks are composed
/// per degree; the form is re-extracted as eps o X.
RightInvariantOperator realize_operator(const RealizationMap& r, const GradedElement& w,
                                        int max_degree,
                                        long long guard = kDefaultCoordinateGuard);

RightInvariantOperator identity_operator(const RealizationMap& r, int max_degree,
                                         long long guard = kDefaultCoordinateGuard);

/// Reconstructs the per-degree blocks of a right-invariant operator from its
/// form alone, via (form (x) id) o Delta. Inverse of form extraction.
std::vector<Matrix> blocks_from_form(const Coalgebra& f, const DualElement& form,
                                     int max_degree,
                                     long long guard = kDefaultCoordinateGuard);

/// The duality pairing <A, c> = eps(A(c)) = form_A(c).
Rational op_pairing(const RightInvariantOperator& a, const GradedElement& c);

/// Exact check of Delta o X = (X (x) id) o Delta on every basis word of
/// T_N(F).
bool is_right_invariant(const Coalgebra& f, const RightInvariantOperator& x,
                        long long guard = kDefaultCoordinateGuard);

struct DualityReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// Evaluates both sides of the transpose-duality identity
/// <pi_x(w), v> = <pi_y(reverse v), reverse w> independently: the left via
/// this instance, the right via the transposed instance.
DualityReport duality_check(const RealizationMap& r, const GradedElement& w,
                            const GradedElement& v,
                            long long guard = kDefaultCoordinateGuard);

/// Handle exposing the realized operator algebra of an instance: word images
/// as operators and the image dimension per order.
class RealizedBialgebra {
 public:
  RealizedBialgebra(RealizationMap r, int degree_cap,
                    long long guard = kDefaultCoordinateGuard)
      : r_(std::move(r)), cap_(degree_cap), guard_(guard) {}

  const RealizationMap& instance() const { return r_; }
  int degree_cap() const { return cap_; }

  RightInvariantOperator image(const GradedElement& w) const {
    return realize_operator(r_, w, cap_, guard_);
  }
  /// dim pi_x(T_m(L)) = dim T_m(L) - dim R_m.
  std::size_t image_dimension(int order) const;

 private:
  RealizationMap r_;
  int cap_;
  long long guard_;
};

}  // namespace bialg
