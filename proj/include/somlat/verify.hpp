#pragma once

#include <optional>
#include <string>
#include <vector>

#include "somlat/assignment.hpp"
#include "somlat/fixtures.hpp"

namespace somlat {

struct ClaimInfo {
	std::string name;
	std::string title;
	bool finding;  // reports an observation; never fails the run
};

/// Every claim verify_paper knows, in execution order.
const std::vector<ClaimInfo>& claim_catalog();

struct ClaimResult {
	ClaimInfo info;
	bool passed = true;
	std::vector<std::string> details;
	std::vector<std::string> witnesses;  // evidence of failure, or the exhibited example
	double seconds = 0;
};

struct VerifyOptions {
	FixtureSource source;
	/// Run only the claim with this name. Throws Error when unknown.
	std::optional<std::string> filter;
	CoveragePolicy policy;
	std::size_t gap_search_size = 6;
};

struct VerifyReport {
	std::vector<ClaimResult> claims;
	double seconds = 0;

	/// False iff a non-finding claim failed.
	bool passed() const;
};

VerifyReport verify_paper(const VerifyOptions& opts = {});

} // namespace somlat
