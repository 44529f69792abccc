#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repring/centerlattice.hpp"
#include "repring/monoidbasis.hpp"
#include "repring/rootdata.hpp"

namespace repring {

// Element of Z[X(T)]^W in the orbit-sum basis: sum of coeff * S(e^mu) over
// dominant mu. Zero coefficients are never stored.
struct SymElement {
  std::map<Weight, Int, GradedLexLess> coeffs;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const SymElement&) const = default;
};

SymElement sym_add(const SymElement& a, const SymElement& b);
SymElement sym_sub(const SymElement& a, const SymElement& b);
SymElement sym_scale(Int c, const SymElement& a);
std::string sym_str(const SymElement& x);

// Virtual representation: integer combination of irreducibles [E(lambda)].
struct RepElement {
  std::map<Weight, Int, GradedLexLess> mults;
  bool operator==(const RepElement&) const = default;
};

std::string rep_str(const RepElement& x);

// Guard for character operations that expand Weyl orbits.
struct CharLimits {
  int max_rank = 6;
  std::size_t max_expanded = 100'000;
};

// Caller-owned memo for characters; confined to one computation thread.
struct CharCache {
  std::map<Weight, SymElement, GradedLexLess> characters;
};

// The basis element S(e^mu), mu dominant.
SymElement orbit_sum(const RootDatum& rd, const Weight& mu);

// Weight multiplicities dim E(lambda)_mu on dominant mu, by the Freudenthal
// recursion in exact integer arithmetic.
std::map<Weight, Int, GradedLexLess> weight_multiplicities(const RootDatum& rd,
                                                           const Weight& lambda,
                                                           const CharLimits& limits = {});

// ch E(lambda) in the orbit-sum basis; lambda-sharp by construction.
SymElement irreducible_character(const RootDatum& rd, const Weight& lambda,
                                 const CharLimits& limits = {}, CharCache* cache = nullptr);

// Product in Z[X(T)]^W: expand to full weight support, convolve, re-collect
// at dominant representatives.
SymElement multiply(const RootDatum& rd, const SymElement& x, const SymElement& y,
                    const CharLimits& limits = {});

// Property (M): e^top is the unique maximal term and has coefficient 1.
bool is_sharp(const RootDatum& rd, const SymElement& x, const Weight& top);

// The unique virtual representation with sum(n_lambda ch E(lambda)) == x,
// found by peeling maximal terms. Negative multiplicities are allowed.
RepElement decompose_into_irreducibles(const RootDatum& rd, SymElement x,
                                       const CharLimits& limits = {},
                                       CharCache* cache = nullptr);

Int orbit_size(const RootDatum& rd, const Weight& mu, const CharLimits& limits = {});
Int irreducible_dimension(const RootDatum& rd, const Weight& lambda,
                          const CharLimits& limits = {}, CharCache* cache = nullptr);
Int rep_dimension(const RootDatum& rd, const RepElement& rep, const CharLimits& limits = {},
                  CharCache* cache = nullptr);

// Integer polynomial in the formal variables {X_w : w in the Hilbert basis}.
struct GeneratorPolynomial {
  std::vector<Weight> generators;             // Hilbert basis, canonical order
  std::map<std::vector<Int>, Int> terms;      // exponent vector -> coefficient
  std::string str() const;
  bool operator==(const GeneratorPolynomial&) const = default;
};

// Substitutes X_w -> ch E(w).
SymElement evaluate_polynomial(const RootDatum& rd, const GeneratorPolynomial& p,
                               const CharLimits& limits = {}, CharCache* cache = nullptr);

// Certificate P with P(ch E(w) : w in H) == ch E(lambda), built through
// sharp monomials and verified by substitution before returning.
GeneratorPolynomial express_in_hilbert_generators(const RootDatum& rd,
                                                  const CenterSubgroup& z,
                                                  const Weight& lambda,
                                                  const CharLimits& limits = {},
                                                  CharCache* cache = nullptr);

// Weight multiset of the adjoint module: all roots plus rank zeros.
std::vector<Weight> adjoint_weights(const RootDatum& rd);

// Eigenvalue exponents {pairing(z, mu)} of rho(z) on a module with the given
// weights, as a sorted multiset of rationals in [0,1). The coefficients of
// the characteristic polynomial are the elementary symmetric functions of
// these roots of unity, so two coefficient tuples are equal exactly when the
// multisets are.
std::vector<Rational> killing_spectrum(const std::vector<Weight>& weights,
                                       const TorusPoint& z);

// Contragredient reflection action on torus exponent vectors.
TorusPoint torus_reflection(const RootDatum& rd, int i, const TorusPoint& z);

// Are z1, z2 in the same W-orbit (in the simply connected torus)?
bool w_conjugate(const RootDatum& rd, const TorusPoint& z1, const TorusPoint& z2,
                 const OrbitLimits& limits = {});

// Same question in the torus of G~/Z: conjugacy up to a shift by Z.
bool w_conjugate_mod(const RootDatum& rd, const CenterSubgroup& z, const TorusPoint& z1,
                     const TorusPoint& z2, const OrbitLimits& limits = {});

enum class CounterexampleKind { Pgl3, Product };

// Machine-checked witness that the Killing coefficients of the adjoint
// representation do not generate the class-function algebra: two torus
// elements with equal adjoint spectra that are not W-conjugate.
struct CounterexampleReport {
  CounterexampleKind kind;
  SemisimpleType group;          // adjoint type
  TorusPoint z1, z2;             // lifts in simply connected torus coordinates
  std::vector<Rational> spectrum1, spectrum2;
  bool spectra_equal = false;
  bool conjugate = true;
  bool inputs_valid = false;     // pairwise-distinct values / distinct orbits
  bool verified() const { return inputs_valid && spectra_equal && !conjugate; }
};

CounterexampleReport grothendieck_counterexample(CounterexampleKind kind,
                                                 std::optional<Rational> a = std::nullopt,
                                                 std::optional<Rational> b = std::nullopt);

// Bivariate polynomial identity over F_p: the trace and the sum of principal
// 2x2 minors of the matrix
//   [ a1  a2  1 ]
//   [ 1   a1^(p^d) - a1  0 ]
//   [ 0   1   0 ]
// equal (a1^(p^d), a1*(a1^(p^d) - a1) - a2).
bool verify_sl3_crosssection_image(Int p, Int d);

}  // namespace repring
