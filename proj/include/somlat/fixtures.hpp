#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "somlat/lambda_lattice.hpp"
#include "somlat/poset.hpp"

namespace somlat {

enum class FixtureKind { poset, lambda };

using Structure = std::variant<Poset, LambdaLattice>;

struct FixtureInfo {
	std::string name;
	FixtureKind kind;
	std::string file;  // relative to the fixture directory
	std::string summary;
};

/// fig1..fig5 (posets), fig6..fig8 and the two 2-element algebras.
const std::vector<FixtureInfo>& fixture_catalog();

/// Throws FixtureError for names outside the catalog.
const FixtureInfo& fixture_info(std::string_view name);

/// $SOMLAT_FIXTURES if set, otherwise the directory configured at build time.
std::filesystem::path default_fixture_dir();

struct FactResult {
	std::string fixture;
	std::string fact;
	bool passed;
	std::string detail;
};

/// Parses `text` with the format belonging to the fixture's kind.
Structure parse_fixture(const FixtureInfo& info, std::string_view text);

/// Reads and validates a fixture without evaluating its pinned facts.
Structure read_fixture(std::string_view name, const std::filesystem::path& dir = default_fixture_dir());

/// Evaluates every pinned fact of `name` against `s`.
std::vector<FactResult> check_pinned_facts(std::string_view name, const Structure& s);

/// read_fixture followed by check_pinned_facts; throws FixtureError naming
/// the first failing fact.
Structure load_fixture(std::string_view name, const std::filesystem::path& dir = default_fixture_dir());
Poset load_poset_fixture(std::string_view name, const std::filesystem::path& dir = default_fixture_dir());
LambdaLattice load_lambda_fixture(std::string_view name, const std::filesystem::path& dir = default_fixture_dir());

/// Fixture texts keyed by name; missing entries are read from `dir`.
class FixtureSource {
public:
	FixtureSource() : FixtureSource(default_fixture_dir()) {}
	explicit FixtureSource(std::filesystem::path dir, std::map<std::string, std::string> overrides = {});

	std::string text(std::string_view name) const;
	const std::filesystem::path& dir() const noexcept { return dir_; }

private:
	std::filesystem::path dir_;
	std::map<std::string, std::string> overrides_;
};

} // namespace somlat
