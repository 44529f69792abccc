#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repring/centerlattice.hpp"
#include "repring/rootdata.hpp"

namespace repring {

// D = { m in N^r : sum(m_i w_i) in X(T) }, stored intensionally through the
// congruences that cut X(T) inside the weight lattice. Saturated and closed
// under addition by construction.
struct CongruenceMonoid {
  int rank = 0;
  CharacterLattice lattice;
};

CongruenceMonoid dominant_monoid(const RootDatum& rd, const CenterSubgroup& z);

bool membership(const CongruenceMonoid& d, const Weight& m);

// Empty string if m lies in D; otherwise a description of the first violated
// requirement (dominance or a congruence with its residue).
std::string membership_violation(const CongruenceMonoid& d, const Weight& m);

// Smallest e with e*e_i in the lattice for every i (the exponent of Z);
// every indecomposable of D has all coordinates <= e.
Int monoid_exponent(const CongruenceMonoid& d);

struct HilbertBasis {
  std::vector<Weight> elements;  // graded-lex ascending
  bool operator==(const HilbertBasis&) const = default;
};

// The indecomposables D+ \ (D+ + D+). Scans the box [0,e]^r in graded order
// and keeps the elements not componentwise above a previously kept one;
// those are exactly the minimal elements of D+, i.e. the Hilbert basis.
// The box bound is asserted at runtime, not assumed.
HilbertBasis hilbert_basis(const CongruenceMonoid& d);

// Independent verification oracle: materializes [0,bound]^r intersected with
// D and tests every explicit two-term decomposition m = a + b against the
// enumerated set. Structurally different from hilbert_basis and much slower;
// must agree with it whenever bound >= monoid_exponent(d).
HilbertBasis hilbert_basis_oracle(const CongruenceMonoid& d, Int bound);

// A nonnegative integer combination of the generators summing to target, if
// one exists. First solution in canonical generator order; used both for
// sharp-monomial construction and for minimality/generation checks.
std::optional<std::vector<Int>> monoid_combination(const std::vector<Weight>& generators,
                                                   const Weight& target);

// Toric data of the adjoint quotient at the T-fixed point.
struct QuotientReport {
  SemisimpleType group;
  Int subgroup_order = 1;
  HilbertBasis basis;
  Int tangent_dim = 0;
  bool smooth = false;
  bool theorem_smooth = false;  // independent classification route
  std::vector<Weight> invariant_monomials;  // exponents of the monomial generators of k[A^r]^Z
  std::string classification_note;
};

QuotientReport quotient_report(const RootDatum& rd, const CenterSubgroup& z);

// Classification route: the quotient is smooth iff the group is a direct
// product of factors that are each simply connected or an odd special
// orthogonal group. Covers the B1=A1 and B2=C2 coincidences.
bool theorem_classification_smooth(const SemisimpleType& type, const CenterSubgroup& z);

// Computes both verdicts (|H| == rank vs. the classification above) and
// reports whether they agree. Must hold for every simple type and subgroup.
bool smoothness_matches_theorem(const SimpleType& t, const CenterSubgroup& z);

}  // namespace repring
