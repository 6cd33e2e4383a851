#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadeuler {

/// Violation of an operation's precondition (mismatched boxes, wrong
/// codimension, unsupported space, ...). The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in one of the text grammars (bundle, space, GW expression).
/// Carries the byte offset of the failure and the tokens that would have
/// been accepted there. The CLI maps these to exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t offset, std::string expected)
        : std::runtime_error(message + " at byte " + std::to_string(offset) +
                             (expected.empty() ? "" : " (expected " + expected + ")")),
          offset_(offset),
          expected_(std::move(expected)) {}

    [[nodiscard]] std::size_t offset() const { return offset_; }
    [[nodiscard]] const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace quadeuler
