#pragma once

// Shared tokenizer for the poset and lambda-lattice file formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "somlat/error.hpp"
#include "somlat/poset.hpp"

namespace somlat::detail {

struct Line {
	std::size_t number;
	std::vector<std::string> tokens;
};

/// Splits into whitespace-separated tokens, dropping `#` comments and blank lines.
std::vector<Line> tokenize_lines(std::string_view text);

/// Name table built from the `elements` line.
class ElementTable {
public:
	void declare(const Line& line);

	bool declared() const noexcept { return declared_; }
	std::size_t size() const noexcept { return names_.size(); }
	const std::vector<std::string>& names() const noexcept { return names_; }
	Element lookup(const std::string& name, std::size_t line) const;
	/// Index of the reserved constant `0` or `1`; FormatError if not declared.
	Element constant(const char* name) const;

private:
	bool declared_ = false;
	std::vector<std::string> names_;
	std::unordered_map<std::string, Element> index_;
};

void expect_arity(const Line& line, std::size_t args);

} // namespace somlat::detail
