// Catalogue of closed-form integral identities checked by quadrature.

#ifndef ZETAKIT_REGISTRY_HPP
#define ZETAKIT_REGISTRY_HPP

#include "zetakit/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zetakit {

inline constexpr double registry_default_tol = 1e-9;
inline constexpr double registry_series_tol = 1e-8;

struct IdentityCase
{
   std::string id;
   // the identity in words, for reports
   std::string anchor;
   double tolerance = registry_default_tol;
   std::function<complex()> lhs;
   std::function<complex()> rhs;
};

struct IdentityRow
{
   std::string id;
   std::string anchor;
   complex lhs{};
   complex rhs{};
   double abs_diff = 0.0;
   double tolerance = 0.0;
   bool pass = false;
   // set when evaluation threw; the row then fails
   std::string error;
   double wall_ms = 0.0;
};

// All cases, sorted by id.
const std::vector<IdentityCase>& identity_registry();

// Shell-style match (*, ?, [..]) of id against pattern.
bool id_matches(const std::string& pattern, const std::string& id);

// Evaluates each matching case on up to `jobs` threads.  Errors are
// captured per row.  Rows come back sorted by id.
std::vector<IdentityRow> run_identity_registry(const std::string& pattern,
                                               std::optional<double> tol_override = std::nullopt, int jobs = 1);

// Runs one case.
IdentityRow evaluate_case(const IdentityCase& c, std::optional<double> tol_override = std::nullopt);

} // namespace zetakit

#endif
