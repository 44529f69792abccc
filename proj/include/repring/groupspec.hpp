#pragma once

#include <string>
#include <vector>

#include "repring/centerlattice.hpp"
#include "repring/rootdata.hpp"

namespace repring {

// Textual description of a semisimple group: type plus an isogeny selector.
//   "A2"            simply connected (default)
//   "A2 adjoint"    quotient by the full center
//   "B3 so"         SO_{2r+1}; for D_r, "so" is SO_{2r} (kernel of w_1 on the center)
//   "D4 halfspin"   D_r with even r, kernel of w_r on the center
//   "A2 z=1/3,2/3"  explicit center-subgroup generators, ';'-separated tuples
struct GroupSpec {
  enum class Isogeny { SimplyConnected, Adjoint, SpecialOrthogonal, HalfSpin, Explicit };
  SemisimpleType type;
  Isogeny isogeny = Isogeny::SimplyConnected;
  std::vector<TorusPoint> explicit_generators;
  std::string str() const;
};

GroupSpec parse_group_spec(const std::string& text);

// Resolves the selector to the actual subgroup Z of the center.
CenterSubgroup center_of(const GroupSpec& spec);

Weight parse_weight(const std::string& text, int rank);

}  // namespace repring
