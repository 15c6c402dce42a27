#pragma once
// Aggregated verification suite: runs the symbolic identity catalog plus the
// numerical and lattice acceptance checks under one configuration and
// returns machine-readable records.

#include "phasekit/io.hpp"

#include <map>
#include <string>
#include <vector>

namespace pk {

struct SuiteConfig {
	int grid_n = 64;   // power of two
	double extent = 16.0;
	double hbar = 1.0;
	double nu = 1.0;
	unsigned seed = 12345;
	std::map<std::string, double> tol; // per-check overrides

	void validate() const; // throws std::invalid_argument
};

// default tolerance per check name (keys accepted by --tol.<check>);
// composed-pipeline tolerances are relaxed at grid_n < 64.
std::map<std::string, double> default_tolerances(int grid_n);

// every record: {check, value, tolerance, pass}.  For the slope and the
// excited-state-minimum checks "pass" means value <= tolerance with the
// tolerance stored as the signed bound (slope bound is stored negated).
std::vector<CheckRecord> run_suite(const SuiteConfig &cfg);

bool all_pass(const std::vector<CheckRecord> &recs);

} // namespace pk
