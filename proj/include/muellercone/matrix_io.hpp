// SPDX-License-Identifier: Apache-2.0
//
// mueller-cone: cone-side numerics for Stokes vectors and Mueller matrices
// Copyright (C) 2026 the mueller-cone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Text interchange formats: the 4x4 matrix file (4 lines of 4 numbers,
// '#' comments, single-line JSON {"m": [...]} alternative), the one-line
// 4-vector, and the CSV dump of the certificate grid. Rendering uses
// shortest-round-trip decimals so parse(render(M)) == M bit for bit.

#ifndef MUELLERCONE_MATRIX_IO_HPP
#define MUELLERCONE_MATRIX_IO_HPP

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "muellercone/mueller.hpp"
#include "muellercone/numkernel.hpp"

namespace muellercone {

/// Malformed input text; line and column are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_),
          column(column_) {}
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct DataLine {
    std::string_view text;
    int number = 0;  // 1-based line number in the original input
};

inline std::vector<DataLine> significant_lines(std::string_view text) {
    std::vector<DataLine> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        ++number;
        std::size_t start = 0;
        while (start < line.size() && is_space(line[start])) ++start;
        if (start < line.size() && line[start] != '#') lines.push_back({line, number});
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

inline std::vector<double> parse_numbers(const DataLine& line, int expected) {
    std::vector<double> values;
    const char* begin = line.text.data();
    const char* end = begin + line.text.size();
    const char* cursor = begin;
    while (true) {
        while (cursor < end && is_space(*cursor)) ++cursor;
        if (cursor == end) break;
        double value = 0.0;
        const auto [next, ec] = std::from_chars(cursor, end, value);
        if (ec != std::errc{} || (next < end && !is_space(*next)))
            throw ParseError("expected a decimal number", line.number,
                             static_cast<int>(cursor - begin) + 1);
        if (!std::isfinite(value))
            throw ParseError("non-finite value", line.number,
                             static_cast<int>(cursor - begin) + 1);
        values.push_back(value);
        cursor = next;
    }
    if (static_cast<int>(values.size()) != expected)
        throw ParseError("expected " + std::to_string(expected) + " values, found " +
                             std::to_string(values.size()),
                         line.number, 1);
    return values;
}

inline Matrix4 matrix_from_json_line(const DataLine& line) {
    nlohmann::json doc = nlohmann::json::parse(line.text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("m") ||
        !doc["m"].is_array() || doc["m"].size() != 16)
        throw ParseError("expected {\"m\": [16 numbers row-major]}", line.number, 1);
    Matrix4 m;
    for (int k = 0; k < 16; ++k) {
        const auto& cell = doc["m"][static_cast<std::size_t>(k)];
        if (!cell.is_number())
            throw ParseError("matrix entries must be numbers", line.number, 1);
        m(k / 4, k % 4) = cell.get<double>();
    }
    if (!m.allFinite()) throw ParseError("non-finite matrix entry", line.number, 1);
    return m;
}

}  // namespace detail

/// Parse the matrix text format: 4 significant lines of 4 numbers each, or a
/// single-line JSON object {"m": [...]}. Throws ParseError with the offending
/// line and column.
inline Matrix4 parse_matrix_text(std::string_view text) {
    const auto lines = detail::significant_lines(text);
    if (lines.empty()) throw ParseError("empty input", 1, 1);

    std::size_t first = lines[0].text.find_first_not_of(" \t");
    if (first != std::string_view::npos && lines[0].text[first] == '{') {
        if (lines.size() != 1)
            throw ParseError("JSON form must be a single line", lines[1].number, 1);
        return detail::matrix_from_json_line(lines[0]);
    }
    if (lines.size() != 4)
        throw ParseError("expected 4 data lines, found " + std::to_string(lines.size()),
                         lines.back().number, 1);
    Matrix4 m;
    for (int i = 0; i < 4; ++i) {
        const auto row = detail::parse_numbers(lines[static_cast<std::size_t>(i)], 4);
        for (int j = 0; j < 4; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
    }
    return m;
}

/// Parse the one-line 4-vector form used by the Stokes commands.
inline Vector4 parse_stokes_text(std::string_view text) {
    const auto lines = detail::significant_lines(text);
    if (lines.empty()) throw ParseError("empty input", 1, 1);
    if (lines.size() != 1)
        throw ParseError("expected a single data line with 4 numbers", lines[1].number, 1);
    const auto values = detail::parse_numbers(lines[0], 4);
    return Vector4(values[0], values[1], values[2], values[3]);
}

/// Shortest decimal that round-trips to the same binary64 value.
inline std::string render_number(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

inline std::string render_matrix(const Matrix4& m) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (j) out += ' ';
            out += render_number(m(i, j));
        }
        out += '\n';
    }
    return out;
}

inline std::string render_stokes(const Vector4& s) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (i) out += ' ';
        out += render_number(s[i]);
    }
    out += '\n';
    return out;
}

/// CSV dump of the certificate grid, one row per unmasked point, in the
/// canonical evaluation order (hemisphere + first, then -, row-major).
/// Byte-identical across runs for the same inputs.
inline std::string qgrid_csv(const Matrix4& m, int resolution, const Tolerances& tol = {}) {
    std::string out = "x,y,hemisphere,q,b\n";
    for_each_sphere_sample(resolution, [&](double x, double y, int hemi,
                                           const Eigen::Vector3d& u) {
        const GapValues g = detail::gap_unchecked(m, u);
        out += render_number(x);
        out += ',';
        out += render_number(y);
        out += ',';
        out += hemi > 0 ? '+' : '-';
        out += ',';
        out += render_number(detail::round_decimals(g.q, tol.round_decimals));
        out += ',';
        out += render_number(detail::round_decimals(g.b, tol.round_decimals));
        out += '\n';
    });
    return out;
}

}  // namespace muellercone

#endif  // MUELLERCONE_MATRIX_IO_HPP
