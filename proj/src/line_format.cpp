#include "line_format.hpp"

#include <sstream>

namespace somlat::detail {

std::vector<Line> tokenize_lines(std::string_view text) {
	std::vector<Line> lines;
	std::size_t number = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos) {
			end = text.size();
		}
		++number;
		std::string_view raw = text.substr(pos, end - pos);
		if (auto hash = raw.find('#'); hash != std::string_view::npos) {
			raw = raw.substr(0, hash);
		}
		std::istringstream in{std::string(raw)};
		Line line{number, {}};
		for (std::string tok; in >> tok;) {
			line.tokens.push_back(std::move(tok));
		}
		if (!line.tokens.empty()) {
			lines.push_back(std::move(line));
		}
		pos = end + 1;
	}
	return lines;
}

void ElementTable::declare(const Line& line) {
	if (declared_) {
		throw FormatError(line.number, "second 'elements' line");
	}
	declared_ = true;
	for (std::size_t i = 1; i < line.tokens.size(); ++i) {
		const std::string& name = line.tokens[i];
		if (!index_.emplace(name, names_.size()).second) {
			throw FormatError(line.number, "duplicate element '" + name + "'");
		}
		names_.push_back(name);
	}
	if (names_.empty()) {
		throw FormatError(line.number, "'elements' line declares no elements");
	}
}

Element ElementTable::lookup(const std::string& name, std::size_t line) const {
	if (!declared_) {
		throw FormatError(line, "element referenced before the 'elements' line");
	}
	auto it = index_.find(name);
	if (it == index_.end()) {
		throw FormatError(line, "unknown element '" + name + "'");
	}
	return it->second;
}

Element ElementTable::constant(const char* name) const {
	auto it = index_.find(name);
	if (it == index_.end()) {
		throw FormatError(0, std::string("required element '") + name + "' is not declared");
	}
	return it->second;
}

void expect_arity(const Line& line, std::size_t args) {
	if (line.tokens.size() != args + 1) {
		throw FormatError(line.number, "'" + line.tokens[0] + "' expects " + std::to_string(args) +
		                                   " arguments, got " + std::to_string(line.tokens.size() - 1));
	}
}

} // namespace somlat::detail
