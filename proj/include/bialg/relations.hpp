#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bialg/realization.hpp"

namespace bialg {

/// Reading of the minimal representation underlying the order-m relation
/// constructions. kEndF maps a word to the composition of the degree-1
/// letter operators on F, with the unit slot acting as the identity of F.
/// kCounitAugmented additionally imposes the counit row (the representation
/// on the line plus F), which shrinks the kernel by ker(eps). Both readings
/// produce the same relation space downstream: the counit functional is the
/// unit of T_m(K), which the closure adjoins anyway.
enum class MinimalRepConvention { kEndF, kCounitAugmented };

/// Kernel of the minimal representation on T_m(L), as a canonical subspace
/// in the flat coordinates of T_m(L).
Subspace minimal_rep_kernel(const RealizationMap& r, int m,
                            MinimalRepConvention conv = MinimalRepConvention::kEndF,
                            long long guard = kDefaultCoordinateGuard);

/// Smallest subalgebra of T_m(K) containing the generators and the unit of
/// T_m(K): fixed point of S <- S + span(S * S), canonical basis.
Subspace subalgebra_closure(const Algebra& k, int m, const std::vector<DualElement>& gens,
                            long long guard = kDefaultCoordinateGuard);

/// Order-m relations as the orthogonal of the subalgebra generated by the
/// orthogonal of the minimal-representation kernel (plus the unit).
Subspace relations_via_minimal_rep(const RealizationMap& r, int m,
                                   MinimalRepConvention conv = MinimalRepConvention::kEndF,
                                   long long guard = kDefaultCoordinateGuard);

/// The opposite-coproduct dual generator attached to the f-th basis vector
/// of F: degree-n component is the n-fold transposed structure map along the
/// (n-1)-iterated opposite coproduct of f; degree-0 component is eps_F(f).
DualElement dual_generator(const RealizationMap& r, int f_index, int m);

/// Order-m relations as the orthogonal of the subalgebra generated by the
/// dual generators of all F-basis vectors (plus the unit).
Subspace relations_via_dual_generators(const RealizationMap& r, int m,
                                       long long guard = kDefaultCoordinateGuard);

struct CoidealReport {
  bool ok = true;
  std::string reason;               // set on failure
  std::optional<GradedElement> witness;
};

/// Checks that R is a coideal of T_m(L): every basis vector is killed by the
/// counit and its coproduct lies in R (x) T + T (x) R (equivalently, the
/// double quotient map annihilates it).
CoidealReport coideal_check(const Coalgebra& l, int m, const Subspace& r_space,
                            long long guard = kDefaultCoordinateGuard);

/// Smallest subcoalgebra of T_m(L) containing v: the span of the middle
/// slices of the double coproduct of v against all pairs of dual-basis
/// words. Throws on v = 0.
Subspace smallest_subcoalgebra(const Coalgebra& l, int m, const GradedElement& v,
                               long long guard = kDefaultCoordinateGuard);

/// True iff Delta(C) is contained in C (x) T + ... no wider than C on both
/// slots, i.e. C is a subcoalgebra of T_m(L).
bool is_subcoalgebra(const Coalgebra& l, int m, const Subspace& c,
                     long long guard = kDefaultCoordinateGuard);

struct OracleReport {
  bool ok = true;
  std::string reason;
  std::optional<GradedElement> witness;
};

/// Brute-force soundness oracle: every basis vector of R must be killed by
/// the counit and act as the zero operator on all of T_check(F), evaluated
/// through the element-level action rather than the orthogonality routes.
OracleReport relations_action_oracle(const RealizationMap& r, int m, const Subspace& r_space,
                                     int check_degree,
                                     long long guard = kDefaultCoordinateGuard);

struct SubcoalgebraRelations {
  Subspace subcoalgebra;      // C_v
  bool is_relation = false;   // v in R_m?
  Subspace intersection;      // R_m with C_v (only when is_relation)
  CoidealReport coideal;      // check on the intersection
};

/// Smallest-subcoalgebra intersection report: C_v, membership of v in R_m,
/// the intersection of R_m with C_v and its coideal check. When the caller
/// already holds R_m it can pass it to skip the recomputation.
SubcoalgebraRelations relations_in_subcoalgebra(const RealizationMap& r,
                                                const GradedElement& v, int m,
                                                long long guard = kDefaultCoordinateGuard,
                                                const Subspace* precomputed_relations = nullptr);

enum class RelationMethod { kMinimalRep, kDualGenerators, kBoth };

struct RelationReport {
  int order = 0;
  int check_degree = 0;
  std::size_t dim_t = 0;          // dim T_m(L)
  Subspace relations;             // canonical basis of R_m
  bool ran_minrep = false;
  bool ran_dualgen = false;
  std::size_t dim_b_minrep = 0;   // dim of the subalgebra, minrep route
  std::size_t dim_b_dualgen = 0;  // dim of the subalgebra, dual-generator route
  bool constructions_agree = true;
  Subspace relations_dualgen;     // second route's basis, kept when routes disagree
  bool cross_checks_run = false;  // coideal + action oracle ran
  CoidealReport coideal;
  OracleReport action;

  bool all_ok() const {
    return constructions_agree && (!cross_checks_run || (coideal.ok && action.ok));
  }
};

/// Full relation computation for one order: selected route(s), agreement
/// flag, coideal check and action oracle (method kBoth only).
RelationReport compute_relation_report(const RealizationMap& r, int m, RelationMethod method,
                                       int check_degree = -1,  // default m + 2
                                       long long guard = kDefaultCoordinateGuard);

}  // namespace bialg
