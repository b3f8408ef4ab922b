#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace somlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed poset or lambda-lattice file. `line` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. a missing section).
class FormatError : public Error {
public:
	FormatError(std::size_t line, const std::string& what)
		: Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

/// Syntax error in the term DSL; `offset` is a byte offset into the input.
class SyntaxError : public Error {
public:
	SyntaxError(std::size_t offset, const std::string& what)
		: Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

	std::size_t offset() const noexcept { return offset_; }

private:
	std::size_t offset_;
};

/// A structure violates an invariant required by the requested operation.
class StructureError : public Error {
public:
	using Error::Error;
};

/// Requested enumeration exceeds the configured cap.
class CapExceeded : public Error {
public:
	using Error::Error;
};

/// Unknown fixture name or a fixture whose pinned facts do not hold.
class FixtureError : public Error {
public:
	using Error::Error;
};

} // namespace somlat
