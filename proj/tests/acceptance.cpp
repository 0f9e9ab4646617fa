// Acceptance harness: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "relpack/verify.hpp"

using namespace relpack;

namespace {

int jobs_from_env() {
  if (const char* env = std::getenv("RELPACK_JOBS")) {
    int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

struct Criterion {
  std::string name;
  std::vector<CheckResult> results;
  double seconds = 0;

  bool passed() const {
    for (const CheckResult& r : results)
      if (!r.pass) return false;
    return true;
  }
};

}  // namespace

int main() {
  int jobs = jobs_from_env();
  std::vector<Criterion> criteria;

  auto add = [&](const std::string& name, auto&& fn) {
    Criterion c;
    c.name = name;
    auto start = std::chrono::steady_clock::now();
    c.results = fn();
    c.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    criteria.push_back(std::move(c));
  };

  add("cycle table vs brute force (4<=n<=9, 3<=m<=9)", [&] {
    return std::vector<CheckResult>{check_cycle_table(9)};
  });
  add("n=3 discrepancy flagged and only it", [&] {
    return std::vector<CheckResult>{check_n3_discrepancy()};
  });
  add("single-vertex reduction on connected H <= 6", [&] {
    return std::vector<CheckResult>{check_reduction_formula(6)};
  });
  add("k-fold suite: counterexample, superadditivity, bounds, scaling, limit",
      [&] {
        return std::vector<CheckResult>{
            check_alpha2_c5(),
            check_superadditivity(6, 3),
            check_generalized_upper_bound(6, 6),
            check_product_inequality(4, 2),
            check_scaling_attainment(6),
            check_limit_sandwich(6, 12),
        };
      });
  add("packing maximizer attains alpha* on connected G <= 6", [&] {
    return std::vector<CheckResult>{check_hales_maximizer(6)};
  });
  add("perfect machinery: products, complement closure, partitions", [&] {
    return std::vector<CheckResult>{
        check_rosenfeld_identity(),
        check_perfect_complement_closure(7),
        check_clique_partition_counts(7),
    };
  });
  add("expansion oracle agreement on connected pairs <= 5", [&] {
    return std::vector<CheckResult>{check_expand_oracle_agreement(5, jobs)};
  });
  add("conjecture scan at 6 vertices has no critical events", [&] {
    return std::vector<CheckResult>{check_conjecture_scan(6, jobs)};
  });
  add("solver certificates and the perfect sandwich <= 7", [&] {
    return std::vector<CheckResult>{check_solver_certificates(7)};
  });
  add("graph6 round-trip on all graphs <= 5", [&] {
    return std::vector<CheckResult>{check_formats_roundtrip()};
  });

  bool all_ok = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    bool ok = c.passed();
    all_ok = all_ok && ok;
    std::printf("%s  %2zu. %s (%.1fs)\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), c.seconds);
    if (!ok)
      for (const CheckResult& r : c.results)
        if (!r.pass)
          std::printf("      %s: %s\n", r.name.c_str(), r.detail.c_str());
  }
  std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria passed"
                             : "ACCEPTANCE: FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
