#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plbranch {

struct CurveFileError : std::runtime_error {
    CurveFileError(const std::string& message, std::size_t line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    std::size_t line;
};

// Line-oriented curve description:
//   # comment
//   f = "y^5 - x^6 + x^4*y^3"
//   omega1.A = "..."   omega1.B = "..."
//   omega2.A = "..."   omega2.B = "..."
// f is mandatory; each omega must be given as a complete A/B pair or not at
// all. Values stay unparsed strings; expression errors surface when the
// caller parses them.
struct CurveFile {
    std::string f;

    struct FormText {
        std::string A;
        std::string B;
    };
    std::optional<FormText> omega1;
    std::optional<FormText> omega2;

    bool has_basis() const { return omega1.has_value() && omega2.has_value(); }
};

CurveFile parse_curve_file(std::string_view text);
CurveFile load_curve_file(const std::string& path);

}  // namespace plbranch
