#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "primegraph/catalog.hpp"

namespace primegraph::cli {

class UnknownGroupToken : public std::runtime_error {
public:
    UnknownGroupToken(const std::string& what, std::vector<std::string> suggestions_)
        : std::runtime_error(what), suggestions(std::move(suggestions_)) {}
    std::vector<std::string> suggestions;
};

// Accepts Lie notation ("A3(19)", "2B2(8)") and classical aliases
// ("L4(19)" -> A3, "U4(q)" -> 2A3, "S4(q)" -> C2, "O7(q)" -> B3,
// "O8+(q)" -> D4, "O8-(q)" -> 2D4, "Sz(q)" -> 2B2, "R(q)" -> 2G2,
// "2D2(q)" -> A1(q^2)), plus "Alt(n)" and the stored sporadic names.
// Field sizes may be written as decimals or "p^k".
catalog::GroupId parse_group_token(const std::string& token);

// Entry point behind the binary: parses argv-style arguments, writes to the
// given streams, returns the process exit status (0 success / all-pass,
// 1 failed assertions or incomplete computations, 2 usage errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primegraph::cli
