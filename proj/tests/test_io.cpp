// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "muellercone/matrix_io.hpp"
#include "support.hpp"

using namespace muellercone;

TEST_CASE("matrix text round trip is bit exact") {
    testsupport::Rng rng(4321);
    for (int trial = 0; trial < 1000; ++trial) {
        const Matrix4 m = rng.matrix4(-1e6, 1e6);
        const Matrix4 parsed = parse_matrix_text(render_matrix(m));
        REQUIRE((parsed.array() == m.array()).all());
    }
    // values that stress shortest-representation printing
    Matrix4 tricky;
    tricky << 0.1, 1.0 / 3.0, -0.0, 1e-308,
              2.5e17, -7.00000000000001, 1.0, 0.30000000000000004,
              -1e308, 3.141592653589793, 2.220446049250313e-16, 42,
              0.5, -0.5, 9007199254740993.0, 1;
    REQUIRE((parse_matrix_text(render_matrix(tricky)).array() == tricky.array()).all());
}

TEST_CASE("comments and blank lines are ignored") {
    const char* text =
        "# fixture: sign flip\n"
        "\n"
        "1 0 0 0\n"
        "0 -1 0 0\n"
        "  # interior comment\n"
        "0 0 -1 0\n"
        "0 0 0 -1\n";
    const Matrix4 m = parse_matrix_text(text);
    CHECK(m(1, 1) == -1.0);
    CHECK(m(0, 0) == 1.0);
}

TEST_CASE("single-line JSON alternative") {
    const Matrix4 m = parse_matrix_text(
        R"({"m": [1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]})");
    REQUIRE((m.array() == Matrix4::Identity().array()).all());
    CHECK_THROWS_AS(parse_matrix_text(R"({"m": [1,2,3]})"), ParseError);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_matrix_text("1 0 0 0\n0 x 0 0\n0 0 1 0\n0 0 0 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(parse_matrix_text(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2 3 4\n5 6 7 8\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2 3\n4 5 6 7\n8 9 10 11\n12 13 14 15\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_text("inf 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"),
                    ParseError);
}

TEST_CASE("stokes line parsing") {
    const Vector4 s = parse_stokes_text("# beam\n1 0.5 -0.25 0\n");
    CHECK(s[0] == 1.0);
    CHECK(s[2] == -0.25);
    CHECK_THROWS_AS(parse_stokes_text("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_stokes_text("1 2 3 4\n5 6 7 8\n"), ParseError);
}

TEST_CASE("qgrid output is deterministic and matches the tiny-grid derivation") {
    const std::string a = qgrid_csv(Matrix4::Identity(), 3);
    const std::string b = qgrid_csv(Matrix4::Identity(), 3);
    REQUIRE(a == b);

    std::istringstream lines(a);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,y,hemisphere,q,b");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    // only the center point survives the mask, once per hemisphere
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "0,0,+,0,1");
    CHECK(rows[1] == "0,0,-,0,1");
}

TEST_CASE("qgrid rows reflect the matrix") {
    // first row of the matrix fixes b for every sample
    const std::string csv = qgrid_csv(Eigen::Vector4d(-1, 0, 0, 0).asDiagonal(), 21);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.substr(line.size() - 3) == ",-1");
        ++count;
    }
    CHECK(count > 0);
    CHECK(count % 2 == 0);  // both hemispheres

    // an isometry of the sphere keeps every sampled q at zero
    const std::string flip = qgrid_csv(Eigen::Vector4d(1, -1, -1, -1).asDiagonal(), 21);
    std::istringstream flip_lines(flip);
    std::getline(flip_lines, line);  // header
    while (std::getline(flip_lines, line)) {
        const auto first = line.find(",+,") != std::string::npos ? line.find(",+,")
                                                                 : line.find(",-,");
        REQUIRE(first != std::string::npos);
        const auto rest = line.substr(first + 3);
        const std::string q_text = rest.substr(0, rest.find(','));
        CHECK((q_text == "0" || q_text == "-0"));
    }
}
