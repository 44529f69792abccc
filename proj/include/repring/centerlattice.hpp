#pragma once

#include <vector>

#include "repring/rational.hpp"
#include "repring/rootdata.hpp"

namespace repring {

struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;  // ascending divisibility chain, each >= 2
  Int order() const;
  bool trivial() const { return invariant_factors.empty(); }
};

// Invariant factors (> 1) of the Smith normal form of the Cartan matrix.
FiniteAbelianGroup fundamental_group(const SemisimpleType& type);

// A finite-order point of the maximal torus in the coroot parametrization:
// coordinate i holds q_i with s_i = exp(2*pi*i*q_i), kept exactly as a
// rational in [0, 1). The point pairs with a weight through its
// fundamental-weight coordinates: value of the character = sum(m_i q_i) mod 1.
struct TorusPoint {
  std::vector<Rational> exps;
  bool operator==(const TorusPoint&) const = default;
};

bool torus_point_less(const TorusPoint& a, const TorusPoint& b);
TorusPoint torus_identity(int rank);
TorusPoint torus_add(const TorusPoint& a, const TorusPoint& b);
TorusPoint torus_neg(const TorusPoint& a);
Int torus_order(const TorusPoint& a);
bool torus_is_identity(const TorusPoint& a);
std::string torus_str(const TorusPoint& a);  // "(0,1/2)"

// Exponent of the root of unity c^lambda, as a rational in [0,1).
Rational pairing(const TorusPoint& c, const Weight& lambda);

struct CenterSubgroup {
  SemisimpleType ambient;
  std::vector<TorusPoint> generators;  // canonical minimal generating list
  std::vector<TorusPoint> elements;    // full closure, canonically sorted
  Int order() const { return static_cast<Int>(elements.size()); }
  bool trivial() const { return elements.size() == 1; }
  Int exponent() const;  // lcm of element orders
  bool contains(const TorusPoint& p) const;
  bool operator==(const CenterSubgroup&) const = default;
};

// Closes the generators, validates each against the center system
// x_1^{n_i1} ... x_r^{n_ir} = 1, and canonicalizes.
CenterSubgroup make_center_subgroup(const SemisimpleType& ambient,
                                    const std::vector<TorusPoint>& gens);

CenterSubgroup trivial_center_subgroup(const SemisimpleType& ambient);

// All solutions q (mod 1) of the center system C q = 0 (mod Z^r) for a given
// integer matrix, solved constructively through its Smith decomposition.
// Returned as the sorted element list of the solution group.
std::vector<TorusPoint> solve_center_system(const IntMatrix& cartan);

// All solutions of the center system of the Cartan matrix.
CenterSubgroup center_subgroup(const SimpleType& t);
CenterSubgroup center_subgroup(const SemisimpleType& t);

// The closed-form table of center parametrizations per simple type, with the
// B_r entry given by its generator (1,...,1,-1). Used as the cross-check
// against the system-of-equations computation.
CenterSubgroup center_closed_form(const SimpleType& t);

// Every subgroup of the finite abelian group, trivial and full included,
// canonically ordered by (order, element list).
std::vector<CenterSubgroup> subgroups(const CenterSubgroup& c, Int max_order = 64);

// sum(coeffs_i * m_i) == 0 (mod modulus)
struct Congruence {
  std::vector<Int> coeffs;
  Int modulus;
  bool operator==(const Congruence&) const = default;
};

// X(T) for G = G~/Z inside the weight lattice: one congruence per canonical
// generator of Z. Empty list = full weight lattice.
struct CharacterLattice {
  int rank = 0;
  std::vector<Congruence> congruences;
  bool contains(const Weight& w) const;
  bool operator==(const CharacterLattice&) const = default;
};

CharacterLattice character_lattice(const CenterSubgroup& z);

// Decision predicate for the existence of a cross-section of the adjoint
// quotient fibers in G = G~/Z over a field of the given characteristic:
// true iff Z is trivial, or p > 0 divides the order of the fundamental
// group of G (which is |Z|).
bool cross_section_exists(const CenterSubgroup& z, Int characteristic);

}  // namespace repring
