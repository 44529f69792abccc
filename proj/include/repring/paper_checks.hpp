#pragma once

#include <string>
#include <vector>

#include "repring/rootdata.hpp"

namespace repring {

struct PaperCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Individual check groups, so callers can time and report them separately.
// `corrupt_cartan` is a negative-control hook that feeds a deliberately
// wrong A2 matrix into the center solver.
std::vector<PaperCheck> check_center_table(bool corrupt_cartan = false);
std::vector<PaperCheck> check_odd_orthogonal_quotients();   // SO_{2r+1}, r = 1..8
std::vector<PaperCheck> check_even_orthogonal_quotients();  // SO_{2r}, r = 3..8
std::vector<PaperCheck> check_halfspin_quotients();         // D_r half-spin, r = 4, 6, 8
std::vector<PaperCheck> check_adjoint_e7_quotient();
std::vector<PaperCheck> check_killing_counterexamples();
std::vector<PaperCheck> check_sl3_crosssection();
std::vector<PaperCheck> check_smoothness_crosscheck();      // all types <= rank 8, all Z
std::vector<PaperCheck> check_cross_section_predicate();

// The deterministic reproduction suite: all of the groups above in order.
std::vector<PaperCheck> run_paper_checks(bool corrupt_cartan = false);

// All simple types of rank <= max_rank (A1.., B2.., C2.., D3.., E, F, G).
std::vector<SimpleType> simple_types_up_to_rank(int max_rank);

}  // namespace repring
