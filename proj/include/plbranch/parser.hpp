#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "plbranch/poly.hpp"

namespace plbranch {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position);

    std::size_t position;  // byte offset into the input
};

// Parses a polynomial expression:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' nat]
//   base     := rational | 'x' | 'y' | '(' expr ')'
//   rational := nat ['/' nat]
// Whitespace is insignificant; multiplication must be explicit.
Poly parse_poly(std::string_view text);

}  // namespace plbranch
