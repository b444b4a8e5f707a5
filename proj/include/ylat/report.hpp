#pragma once

#include <string>

#include "ylat/identities.hpp"
#include "ylat/sampler.hpp"

namespace ylat {

/// Serialized forms of the convergence and histogram reports. All numeric
/// formatting is deterministic, so identical runs produce byte-identical
/// text. CSV carries floats alongside the exact masses; the structured
/// format carries every rational exactly as "p/q".

std::string to_csv(const ConvergenceReport& report);
std::string to_structured(const ConvergenceReport& report);
std::string to_table(const ConvergenceReport& report);  // human-readable stdout form

std::string to_csv(const EntryHistogram& hist, const std::vector<ComparisonRow>& rows);
std::string to_structured(const EntryHistogram& hist, const std::vector<ComparisonRow>& rows);
std::string to_table(const EntryHistogram& hist, const std::vector<ComparisonRow>& rows);

/// Fixed float rendering used by all reports (shortest round-trip form).
std::string format_double(double x);

}  // namespace ylat
