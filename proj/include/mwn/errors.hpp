#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwn {

// Base of all library errors. `code()` is a stable kebab-case identifier that
// the CLI prints as `code: message` and maps to an exit status.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Bad data: malformed input files, broken model invariants, unknown words or
// synset ids. CLI exit status 1.
class validation_error : public error {
public:
    using error::error;
};

// Caller misuse: same-language pairs, invalid flag values, impossible
// generator constraints. CLI exit status 2.
class usage_error : public error {
public:
    using error::error;
};

// An aggregate was requested over zero eligible words. CLI exit status 3.
class empty_population_error : public error {
public:
    explicit empty_population_error(const std::string& message)
        : error("empty-population", message) {}
};

// Validation failure tied to a 1-based line of an input stream.
class parse_error : public validation_error {
public:
    parse_error(std::string code, std::size_t line, const std::string& message)
        : validation_error(std::move(code), "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace mwn
