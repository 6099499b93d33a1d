#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "galecount/polytopes.hpp"

namespace galecount {

enum class TableFormat { Text, Csv, Json };

std::string format_table(const std::vector<CountRow>& rows, TableFormat format);

/// Cross-checks every stage of the engine: automaton vs closed forms,
/// dual routes for W/W+/P/P+, configuration sums, Burnside identities,
/// and the brute-force oracle up to `max_size`. Prints one line per
/// check; returns the number of failed checks. Documented discrepancy
/// findings (the legacy oriented/achiral closed forms) are reported but
/// do not count as failures.
int run_verify(int max_size, int order, int jobs, std::ostream& out);

/// Constants plus the exact-vs-estimate table; `digits` controls printed
/// float precision.
void write_asymptotics_report(int max_d, int digits, std::ostream& out);

/// Doubling-ladder benchmark of the extraction path. Asserts monotone,
/// sub-quadratic growth of the coefficient-operation count; wall-clock
/// timings are printed in a separate, clearly non-deterministic section.
/// Returns false if the scaling assertion fails.
bool run_bench(const std::vector<int>& orders, std::ostream& out);

}  // namespace galecount
