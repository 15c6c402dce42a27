#pragma once
// Catalog-driven verifier for the structural identities of the twisted
// algebra, its dual, and the fundamental point maps.  Every entry expands
// both sides over symbolic coordinates; "holds" means the difference is the
// zero polynomial.  Two entries are expected to fail and carry the exact
// discrepancy phase as a witness.

#include <string>
#include <vector>

namespace pk {

struct IdentityReport {
	std::string id;
	std::string statement;
	bool expected_holds = true;
	bool holds = false;
	std::string witness; // discrepancy phase exponent for failing entries
};

const std::vector<std::string> &catalog_ids();
IdentityReport verify_identity(const std::string &id);
std::vector<IdentityReport> verify_all();

} // namespace pk
