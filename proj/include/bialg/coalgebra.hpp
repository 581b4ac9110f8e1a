#pragma once

#include <map>
#include <string>
#include <vector>

#include "bialg/linalg.hpp"
#include "bialg/rational.hpp"

namespace bialg {

/// One term c * (b_j (x) b_k) of a coproduct.
struct CoproductTerm {
  int left;
  int right;
  Rational coeff;
};

/// A finite-dimensional coalgebra given by structure constants:
/// Delta(b_i) = sum of delta[i] terms, counit[i] = eps(b_i).
/// Terms are kept normalized: merged, zero-free, sorted by (left, right).
struct Coalgebra {
  int dim = 0;
  std::vector<std::vector<CoproductTerm>> delta;
  std::vector<Rational> counit;

  void normalize();
  friend bool operator==(const Coalgebra& a, const Coalgebra& b);
};

/// One term c * b_k of a product b_i b_j.
struct MultTerm {
  int out;
  Rational coeff;
};

/// A finite-dimensional associative unital algebra by structure constants:
/// b_i b_j = sum of mult[i][j] terms; unit[k] = coordinates of 1.
struct Algebra {
  int dim = 0;
  std::vector<std::vector<std::vector<MultTerm>>> mult;
  std::vector<Rational> unit;
};

/// Outcome of an axiom check; on failure carries the first violated axiom,
/// the offending basis index and printable forms of both sides.
struct ValidationReport {
  bool ok = true;
  std::string axiom;
  int basis_index = -1;
  std::string lhs;
  std::string rhs;
};

ValidationReport validate_coalgebra(const Coalgebra& c);
ValidationReport validate_algebra(const Algebra& a);

/// Dual algebra on the dual basis: (b_i* b_j*)(b_k) = (b_i* (x) b_j*)(Delta b_k),
/// unit = counit.
Algebra dual_algebra(const Coalgebra& c);

/// The coalgebra with both tensor slots of every coproduct term swapped.
Coalgebra opposite_coproduct(const Coalgebra& c);

/// Homogeneous element of a tensor power of the coalgebra's carrier space:
/// all keys have the same length, letters index the basis.
using PowerTerms = std::map<std::vector<int>, Rational>;

/// Delta^n(v) in (x)^{n+1} C, with Delta^0 = id. v is a coordinate vector.
PowerTerms iterated_coproduct(const Coalgebra& c, const Vec& v, int n);

/// Printable form of a sparse tensor term map, for reports.
std::string power_terms_str(const PowerTerms& t);

}  // namespace bialg
