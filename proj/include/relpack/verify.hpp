#pragma once

#include <string>
#include <vector>

#include "relpack/graph.hpp"

namespace relpack {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exhaustive brute-force verification of the library's formula routes.
// Scopes match the acceptance envelope: cycle pairs to 9 vertices,
// everything else on the small-graph catalog.
CheckResult check_cycle_table(int max_n = 9);
CheckResult check_n3_discrepancy();
CheckResult check_reduction_formula(int max_h = 6);
CheckResult check_hales_maximizer(int max_g = 6);
CheckResult check_rosenfeld_identity();
CheckResult check_perfect_complement_closure(int max_n = 7);
CheckResult check_clique_partition_counts(int max_n = 7);
CheckResult check_expand_oracle_agreement(int max_n = 5, int jobs = 1);
CheckResult check_conjecture_scan(int max_vertices = 6, int jobs = 1);
CheckResult check_solver_certificates(int max_n = 7);
CheckResult check_formats_roundtrip();
CheckResult check_monotonicity_spots();
CheckResult check_witness_search_endpoints();

CheckResult check_alpha2_c5();
CheckResult check_superadditivity(int max_n = 6, int max_k = 3);
CheckResult check_generalized_upper_bound(int max_n = 6, int max_k = 6);
CheckResult check_product_inequality(int max_n = 4, int max_k = 2);
CheckResult check_product_inequality_sampled(int pairs, unsigned seed);
CheckResult check_scaling_attainment(int max_n = 6);
CheckResult check_limit_sandwich(int max_n = 6, int max_m = 12);
CheckResult check_fractional_scaling_law(int max_n = 7);
CheckResult check_collection_scaling();

std::vector<CheckResult> main_suite(int jobs, unsigned seed);
std::vector<CheckResult> appendix_suite(int jobs, unsigned seed);

}  // namespace relpack
