#pragma once

#include <stdexcept>
#include <string>

namespace kimura {

// Malformed input or violated operation precondition.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource ceiling (group degree, enumeration weight) was exceeded.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A formula path was requested without its standing hypotheses.
// The message names the missing assumption.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computation routes disagreed.  Always a bug, never input.
class CrossCheckError : public std::logic_error {
public:
    explicit CrossCheckError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace kimura
