#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "helpers.hpp"
#include "recoh/measures.hpp"
#include "recoh/state_io.hpp"

using namespace recoh;

TEST_CASE("state json round trip") {
    const PureState psi = haar_sample({2, 2, 3}, 4242);
    const PureState back = parse_state_json(state_to_json(psi));
    REQUIRE(back.amp.size() == psi.amp.size());
    CHECK(back.dims.dA == 2);
    CHECK(back.dims.dE == 3);
    for (std::size_t i = 0; i < psi.amp.size(); ++i)
        CHECK(std::abs(back.amp[i] - psi.amp[i]) <= 1e-15);
}

TEST_CASE("state file save and load") {
    const std::string path = "recoh_test_state.json";
    const PureState psi = mzi_state(0.5, 0.3);
    save_state(psi, path);
    const PureState back = load_state(path);
    CHECK(back.dims.dA == 1);
    CHECK(c1(back) == doctest::Approx(0.5));
    std::remove(path.c_str());

    CHECK_THROWS_AS((void)load_state("definitely_missing_file.json"), std::runtime_error);
}

TEST_CASE("state json diagnostics") {
    CHECK_THROWS_AS((void)parse_state_json("not json at all"), std::runtime_error);
    CHECK_THROWS_AS((void)parse_state_json("[1,2,3]"), std::runtime_error);
    CHECK_THROWS_AS((void)parse_state_json(R"({"dims": [2, 2], "amplitudes": []})"),
                    std::runtime_error);
    CHECK_THROWS_AS((void)parse_state_json(R"({"dims": [1, 3, 1], "amplitudes": [[1,0],[0,0],[0,0]]})"),
                    std::runtime_error);
    CHECK_THROWS_AS((void)parse_state_json(R"({"dims": [1, 2, 1], "amplitudes": [[1,0]]})"),
                    std::runtime_error);
    CHECK_THROWS_AS((void)parse_state_json(R"({"dims": [1, 2, 1], "amplitudes": [[0.5,0],[0,0]]})"),
                    std::runtime_error);
    CHECK_THROWS_AS((void)parse_state_json(R"({"dims": [1, 2, 1], "amplitudes": [1, 0]})"),
                    std::runtime_error);
}

TEST_CASE("bell state file reproduces the known measures") {
    const std::string path = "recoh_test_bell.json";
    {
        std::ofstream out(path);
        out << R"({"dims": [2, 2, 1], "amplitudes":)"
            << R"( [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]]})";
    }
    const PureState bell = load_state(path);
    const MeasureReport r = measure_report(bell);
    CHECK(r.c1 <= 1e-12);
    CHECK(*r.c2_subfid == doctest::Approx(1.0));
    CHECK(r.ca_tracenorm == doctest::Approx(1.0));
    std::remove(path.c_str());
}

TEST_CASE("format_double uses 15 significant digits and a point separator") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_double(-2.5e-8) == "-2.5e-08");
    CHECK(format_double(3.0) == "3");
}
