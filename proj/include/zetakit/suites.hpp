// Named verification checks run by `zetakit verify`.

#ifndef ZETAKIT_SUITES_HPP
#define ZETAKIT_SUITES_HPP

#include "zetakit/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zetakit {

struct CheckValue
{
   complex lhs{};
   complex rhs{};
   // exact rational sides as "p/q", when the check is exact
   std::optional<std::string> lhs_exact;
   std::optional<std::string> rhs_exact;
};

struct Check
{
   std::string id;
   std::string anchor;
   // 0 for exact checks, which pass only on equality
   double tolerance = 1e-9;
   std::function<CheckValue(const SeriesConfig&)> run;
};

struct ReportRecord
{
   std::string id;
   std::string anchor;
   complex lhs{};
   complex rhs{};
   std::optional<std::string> lhs_exact;
   std::optional<std::string> rhs_exact;
   double abs_diff = 0.0;
   double tolerance = 0.0;
   bool pass = false;
   std::string error;
   double wall_ms = 0.0;
};

struct RunOptions
{
   std::string pattern = "*";
   std::optional<double> tolerance_override;
   int jobs = 1;
   SeriesConfig series;
};

// Every check, sorted by id; includes the identity registry.
const std::vector<Check>& check_catalogue();

// Ids matching a shell pattern, in catalogue order.
std::vector<std::string> matching_checks(const std::string& pattern);

// Evaluation errors become failing records.  Records are sorted by id.
std::vector<ReportRecord> run_checks(const RunOptions& options);

} // namespace zetakit

#endif
