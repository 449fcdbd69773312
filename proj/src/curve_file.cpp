#include "plbranch/curve_file.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace plbranch {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
    CurveFile file;
    std::array<std::optional<std::string>, 5> slots;  // f, o1.A, o1.B, o2.A, o2.B
    constexpr std::array<std::string_view, 5> keys{"f", "omega1.A", "omega1.B", "omega2.A",
                                                   "omega2.B"};

    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                                : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_number;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw CurveFileError("expected key = \"value\"", line_number);
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
            throw CurveFileError("value must be a double-quoted expression", line_number);
        }
        value = value.substr(1, value.size() - 2);

        bool matched = false;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (key != keys[i]) continue;
            if (slots[i]) throw CurveFileError("duplicate key '" + std::string(key) + "'", line_number);
            slots[i] = std::string(value);
            matched = true;
            break;
        }
        if (!matched) throw CurveFileError("unknown key '" + std::string(key) + "'", line_number);
    }

    if (!slots[0]) throw CurveFileError("missing key 'f'", line_number);
    file.f = *slots[0];
    if (slots[1].has_value() != slots[2].has_value()) {
        throw CurveFileError("omega1 needs both omega1.A and omega1.B", line_number);
    }
    if (slots[3].has_value() != slots[4].has_value()) {
        throw CurveFileError("omega2 needs both omega2.A and omega2.B", line_number);
    }
    if (slots[1]) file.omega1 = CurveFile::FormText{*slots[1], *slots[2]};
    if (slots[3]) file.omega2 = CurveFile::FormText{*slots[3], *slots[4]};
    return file;
}

CurveFile load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CurveFileError("cannot open '" + path + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_curve_file(buffer.str());
}

}  // namespace plbranch
