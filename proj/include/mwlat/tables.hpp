#pragma once

#include <string>
#include <vector>

#include "mwlat/classification.hpp"
#include "mwlat/cohomology.hpp"

namespace mwlat {

struct SummaryRow {
  ConfigRow row;
  std::vector<long> primes;  // primes at which the row was computed
  std::string model_before;
  std::string model_after;   // at primes.front()
  Configuration config_after;
  long rank_before = 0;
  long rank_after = 0;
  StabilityVerdict verdict;
  H1Result kernel;
  std::string kernel_method;  // "rank-stable", "extremal" or "points"
};

// Realize each configuration-table row, base change, read off both ranks from Shioda-Tate
// (rho = 10 before and after) and compute the Weil-Chatelet kernel. Rows with
// any p >= 5 are computed at every representative prime and must agree.
std::vector<SummaryRow> summary_table(const RationalClassification& c);

std::string format_configuration_table(const RationalClassification& c);
std::string format_summary_table(const std::vector<SummaryRow>& rows);

}  // namespace mwlat
