#pragma once

#include <string>
#include <vector>

#include "qroot3/algebra.hpp"

// Verification suites are views over the module reports.
namespace qroot3::suites {

// hopf, actions, stars, metrics, wz, gauge, diffops, rmatrix, all
const std::vector<std::string>& names();
std::vector<Report> run(const std::string& suite);  // throws std::invalid_argument
bool all_ok(const std::vector<Report>& reports);

}  // namespace qroot3::suites
