// Acceptance gate: runs each verification criterion and prints exactly one
// pass/fail line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latjac/verify.hpp>

#include <cstdio>

using namespace latjac::verify;

static bool report(const CriterionResult& r) {
    std::printf("%s criterion %2d (%s): %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    return r.pass;
}

TEST_CASE("criterion 1: table of generator polynomials") {
    CHECK(report(criterion_1()));
}

TEST_CASE("criterion 2: A2 dimension table") { CHECK(report(criterion_2())); }

TEST_CASE("criterion 3: rank-1 singular classification") {
    CHECK(report(criterion_3()));
}

TEST_CASE("criterion 4: unimodular singular classification") {
    CHECK(report(criterion_4()));
}

TEST_CASE("criterion 5: representation relations and traces") {
    CHECK(report(criterion_5()));
}

TEST_CASE("criterion 6: Gauss-sum signature identity") {
    CHECK(report(criterion_6()));
}

TEST_CASE("criterion 7: dimension integrality and recurrence") {
    CHECK(report(criterion_7()));
}

TEST_CASE("criterion 8: q-series identity suite") {
    CHECK(report(criterion_8()));
}

TEST_CASE("criterion 9: roundtrips and isometry rejection") {
    CHECK(report(criterion_9()));
}

TEST_CASE("criterion 10: stable equivalence of dimensions") {
    CHECK(report(criterion_10()));
}

TEST_CASE("criterion 11: Eisenstein count examples") {
    CHECK(report(criterion_11()));
}
