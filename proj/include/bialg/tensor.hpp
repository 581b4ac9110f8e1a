#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bialg/coalgebra.hpp"
#include "bialg/linalg.hpp"
#include "bialg/rational.hpp"

namespace bialg {

using Word = std::vector<int>;

inline constexpr long long kDefaultCoordinateGuard = 20000;

/// Flat coordinate layout of the truncated tensor space over an alphabet of
/// size dim: all words of length 0..max_degree, ordered by degree then
/// lexicographically. The empty word (index 0) is the unit slot. Refuses to
/// construct when the coordinate count would exceed the guard.
class TensorShape {
 public:
  TensorShape(int dim, int max_degree, long long guard = kDefaultCoordinateGuard);

  int dim() const { return dim_; }
  int max_degree() const { return max_degree_; }
  std::size_t total() const { return (std::size_t)offsets_.back(); }

  long long degree_offset(int n) const { return offsets_[n]; }
  long long degree_size(int n) const { return offsets_[n + 1] - offsets_[n]; }

  std::size_t index(const Word& w) const;
  Word word(std::size_t idx) const;

 private:
  int dim_;
  int max_degree_;
  std::vector<long long> offsets_;  // offsets_[n] = first index of degree n
};

/// Sparse element of a truncated tensor space: coefficients on words of
/// length <= max_degree over letters < dim. Canonical form stores no zero
/// coefficients. Serves both T_N(C) (coalgebra side) and T_N(K) (dual side);
/// the alphabet indexes the respective basis, which for the dual side is the
/// dual basis, so both sides share one flat coordinate order.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(int dim, int max_degree) : dim_(dim), max_degree_(max_degree) {}

  int dim() const { return dim_; }
  int max_degree() const { return max_degree_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c on w, dropping the entry if it cancels. Checks the shape.
  void add_term(const Word& w, const Rational& c);
  Rational coeff(const Word& w) const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& scale(const Rational& c);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Largest word length carrying a nonzero coefficient (0 for 0 element).
  int top_degree() const;

  std::string str() const;

 private:
  int dim_ = 0;
  int max_degree_ = 0;
  std::map<Word, Rational> terms_;
};

/// Element of the truncated tensor coalgebra T_N(C).
using GradedElement = TensorElement;
/// Element of the truncated dual algebra T_N(K), K = C*.
using DualElement = TensorElement;

/// Element of T_N(C) (x) T_N(C), sparse on word pairs.
using PairTerms = std::map<std::pair<Word, Word>, Rational>;

/// Letter-wise coproduct of the tensor coalgebra: a degree-n word maps into
/// pairs of degree-n words via the Sweedler expansion of each letter;
/// Delta(1) = 1 (x) 1. Degree-preserving on both slots.
PairTerms word_coproduct(const Coalgebra& c, const GradedElement& v);

/// Multiplicative counit: eps(1) = 1, eps of a word is the product of the
/// letter counits, extended linearly.
Rational counit_word(const Coalgebra& c, const GradedElement& v);

/// The tensor-reversal anti-isomorphism: every word reversed in place.
TensorElement tensor_reverse(const TensorElement& v);

/// Concatenation product of the tensor algebra. The result carries the given
/// degree cap (the larger of the operands' caps when omitted); throws
/// GuardExceeded when a resulting word would exceed it.
TensorElement concat_product(const TensorElement& a, const TensorElement& b,
                             int result_cap = -1);

/// Product of the truncated dual algebra T_N(K): degreewise, letter-position-
/// wise product in K; products of unequal degrees vanish.
DualElement dual_product(const Algebra& k, const DualElement& a, const DualElement& b);

/// Unit of T_N(K): the n-th tensor power of the unit of K in each degree n.
DualElement dual_unit(const Algebra& k, int max_degree);

/// Canonical pairing of T_N(K) with T_N(C): dual-basis words pair to 1 on
/// the matching word and to 0 otherwise.
Rational dual_pairing(const DualElement& a, const GradedElement& v);

Vec to_coords(const TensorShape& shape, const TensorElement& v);
TensorElement from_coords(const TensorShape& shape, const Vec& coords);

}  // namespace bialg
