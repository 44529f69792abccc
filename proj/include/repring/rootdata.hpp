#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "repring/rational.hpp"
#include "repring/smith.hpp"

namespace repring {

// A weight is the integer coefficient vector against the fundamental weights.
// A weight is dominant iff all coordinates are >= 0.
using Weight = std::vector<Int>;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Series series;
  int rank;
  bool operator==(const SimpleType&) const = default;
  std::string name() const;
};

// Validates the rank for the series. B1 and C1 normalize to A1; D2 is
// rejected (D needs rank >= 3).
SimpleType make_simple_type(Series series, int rank);
SimpleType parse_simple_type(const std::string& token);

struct SemisimpleType {
  std::vector<SimpleType> factors;
  int rank() const;
  std::string name() const;  // factors joined by 'x', e.g. "D4xA1"
  bool operator==(const SemisimpleType&) const = default;
};

SemisimpleType parse_semisimple_type(const std::string& text);

// Cartan matrix with Bourbaki numbering inside each factor, assembled
// block-diagonally. Row i is the simple root alpha_i written in
// fundamental-weight coordinates.
IntMatrix cartan_matrix(const SemisimpleType& type);

struct RootDatum {
  SemisimpleType type;
  int rank = 0;
  IntMatrix cartan;
  std::vector<Weight> positive_roots;        // fundamental-weight coordinates
  std::vector<Weight> positive_root_coords;  // same roots, simple-root coordinates
  Weight rho;                                // (1, ..., 1)
  std::vector<Int> symmetrizer;              // d_i with cartan[i][j]*d[j] == cartan[j][i]*d[i]
  std::vector<std::vector<Rational>> inv_cartan_transpose;
  std::vector<std::pair<int, int>> blocks;   // (offset, rank) per simple factor
};

RootDatum make_root_datum(const SemisimpleType& type);
RootDatum make_root_datum(const std::string& text);

// Guard for operations that enumerate whole Weyl orbits. Hilbert-basis
// computations do not go through orbits and work at any supported rank.
struct OrbitLimits {
  int max_rank = 9;
  std::size_t max_elements = 20'000'000;
};

Int known_positive_root_count(const SimpleType& t);
Int weyl_order_formula(const SemisimpleType& t);

bool is_dominant(const Weight& w);
// Canonical order used everywhere: total degree first, lex tiebreak.
bool weight_graded_lex_less(const Weight& a, const Weight& b);

struct GradedLexLess {
  bool operator()(const Weight& a, const Weight& b) const {
    return weight_graded_lex_less(a, b);
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int v : w) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(Int c, const Weight& a);
std::string weight_str(const Weight& w);  // "(1,0,2)"

// lambda - lambda_i * alpha_i; an involution. i is a 0-based root index.
Weight simple_reflection(const RootDatum& rd, int i, const Weight& lambda);

// The full orbit W.lambda via breadth-first closure under simple
// reflections, returned in canonical (graded-lex) order.
std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& lambda,
                               const OrbitLimits& limits = {});

// The unique dominant weight in W.lambda.
Weight dominant_representative(const RootDatum& rd, const Weight& lambda);

// |W| as the size of the orbit of the regular weight rho.
Int weyl_group_order(const RootDatum& rd, const OrbitLimits& limits = {});

// lo <= hi in the dominance order: hi - lo is a nonnegative integer
// combination of simple roots, solved exactly against (cartan^T)^{-1}.
bool dominance_leq(const RootDatum& rd, const Weight& lo, const Weight& hi);

// W-invariant inner product normalized by the symmetrizer.
Rational weight_inner_product(const RootDatum& rd, const Weight& a, const Weight& b);

}  // namespace repring
