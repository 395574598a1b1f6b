#pragma once

#include <stdexcept>
#include <string>

namespace knotcert {

/// Bad or degenerate input: violated precondition, unparsable file,
/// irregular projection. CLI exit status 3.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A pipeline could not produce a certificate; carries the obstruction.
/// CLI exit status 2.
struct certification_failure : std::runtime_error {
    explicit certification_failure(const std::string& what) : std::runtime_error(what) {}
};

/// Work bound exceeded (e.g. bracket state sum over too many crossings).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace knotcert
