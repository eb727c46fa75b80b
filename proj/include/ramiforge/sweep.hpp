#pragma once

#include <string>
#include <vector>

#include "ramiforge/cover.hpp"

namespace ramiforge {

std::vector<PrimeVerdict> classify_window_serial(const CoverData& cover, long bound);
std::vector<PrimeVerdict> classify_window(const CoverData& cover, long bound);

struct AgreementCase {
  long p = 0;
  Rat t0;
  std::string predicted;
  std::string oracle;
};

struct AgreementReport {
  long pairs_checked = 0;
  long undecided = 0;
  std::vector<AgreementCase> mismatches;
};

std::vector<Rat> agreement_points(long count);

AgreementReport agreement_window_serial(const CoverData& cover, long prime_bound,
                                        const std::vector<Rat>& points);
AgreementReport agreement_window(const CoverData& cover, long prime_bound,
                                 const std::vector<Rat>& points);

}  // namespace ramiforge
