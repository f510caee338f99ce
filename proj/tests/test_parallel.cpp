// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "holoform/errors.hpp"
#include "holoform/parallel.hpp"

using namespace holoform;

namespace {

double churn(std::size_t i) {
    double acc = double(i) + 0.5;
    for (int k = 0; k < 2000; ++k) acc = std::sin(acc) + std::cos(0.7 * acc) + 1e-3 * k;
    return acc;
}

}  // namespace

TEST_CASE("parallel kernel matches the serial reference bitwise") {
    auto serial = par::indexed_map_serial(257, churn);
    auto parallel = par::indexed_map(257, churn);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("parallel kernel rethrows the lowest-index failure") {
    auto fn = [](std::size_t i) -> int {
        if (i == 7 || i == 31) throw Error(Errc::evaluation_failure, std::to_string(i));
        return int(i);
    };
    try {
        par::indexed_map(64, fn);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("7") != std::string::npos);
    }
}

TEST_CASE("blocked fold visits indices in order with bounded blocks") {
    std::vector<std::size_t> seen;
    par::blocked_map_fold(
        23, 4, [](std::size_t i) { return i * i; },
        [&](std::size_t i, std::size_t&& value) {
            CHECK(value == i * i);
            seen.push_back(i);
        });
    REQUIRE(seen.size() == 23);
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == i);
}
