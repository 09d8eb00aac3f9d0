// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace stci {

enum class errc {
    invalid_argument,
    not_in_semigroup,
    not_coprime,
    condition_fails,
    var_count_mismatch,
    rule_conflict,
    shape_mismatch,
    hom_var_occurs,
    does_not_vanish,
    not_bad_extension,
    bound_too_large,
    too_large,
    parse_error,
};

const char* errc_name(errc c);

/// Library-wide exception. The code tells callers (and the CLI exit-code
/// mapping) which contract was violated; the message is human-readable.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace stci
