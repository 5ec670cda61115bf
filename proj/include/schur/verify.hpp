#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur {

/// Exhaustive cross-check suites behind `verify`:
///   dictionaries: partition <-> (a, J) round trips and agreement with the
///                  stabilizer computation, on every classical space;
///   criteria:     root-level classification against the partition and
///                  quadric criteria, class by class;
///   duality:      Poincaré-dual involution, dimension complement and
///                  rigidity invariance on every space;
///   figures:      the LG(5,10) and S_6 tables and the E6/E7 figure data
///                  against the shipped reference values;
///   all:          everything above.
/// Prints one PASS/FAIL line per check (the first counterexample is shown
/// on failure) and returns whether every check passed.
bool verify_suite(const std::string& name, std::ostream& log);

std::vector<std::string> verify_suite_names();

} // namespace schur
