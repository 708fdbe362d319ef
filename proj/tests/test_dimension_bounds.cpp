#include <doctest.h>

#include <optional>

#include "neurocode/code.hpp"
#include "neurocode/dimension_bounds.hpp"
#include "neurocode/errors.hpp"
#include "support/oracles.hpp"

using namespace neurocode;
using testing::enumerate_codes;
using testing::helly_lower_bound_brute;
using testing::is_helly_certificate;

namespace {

Codeword cw(std::initializer_list<int> indices) { return Codeword::from_indices(indices); }

const NeuralCode kDemo = parse_code("n=4\n-\n1 2\n3 4\n1 2 3\n");

// the 4-cycle: every edge fires, neither diagonal does
const NeuralCode kFourCycle = parse_code("n=4\n1 2\n2 3\n3 4\n1 4\n");

// full triangle nerve but no singleton regions; Helly is blind to it
const NeuralCode kTriangleNoSingletons = parse_code("n=3\n1 2\n1 3\n2 3\n1 2 3\n");

}  // namespace

TEST_CASE("helly_violation on pinned codes") {
    const NeuralCode c4 = generate_cn(4);

    auto v = helly_violation(c4, 2);
    REQUIRE(v.has_value());
    CHECK(*v == cw({1, 2, 3, 4}));
    CHECK_FALSE(helly_violation(c4, 3).has_value());

    auto w = helly_violation(kDemo, 0);
    REQUIRE(w.has_value());
    CHECK(*w == cw({1, 4}));
    CHECK_FALSE(helly_violation(kDemo, 1).has_value());
}

TEST_CASE("returned certificates satisfy the violation conditions") {
    for (const NeuralCode& code : enumerate_codes(3))
        for (int d = 0; d <= 3; ++d)
            if (auto v = helly_violation(code, d)) CHECK(is_helly_certificate(code, *v, d));
}

TEST_CASE("helly_violation input validation") {
    CHECK_THROWS_AS(helly_violation(kDemo, -1), Error);
    CHECK_THROWS_AS(helly_violation_brute(kDemo, -1), Error);
    CHECK_THROWS_AS(helly_violation(NeuralCode(3, {}), 0), Error);

    std::vector<Codeword> one = {cw({1})};
    CHECK_THROWS_AS(helly_violation_brute(NeuralCode(13, one), 0), Error);
    CHECK(helly_violation_brute(NeuralCode(12, one), 0) == std::nullopt);
}

TEST_CASE("fast and brute-force routes agree exactly: exhaustive n <= 3") {
    for (const NeuralCode& code : enumerate_codes(3))
        for (int d = 0; d <= 3; ++d) {
            const auto fast = helly_violation(code, d);
            const auto brute = helly_violation_brute(code, d);
            CHECK(fast == brute);
        }
}

TEST_CASE("fast and brute-force routes agree exactly: random n = 5, 6") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const NeuralCode code = random_code(5, seed, Rational(1, 2));
        for (int d = 0; d <= 4; ++d) CHECK(helly_violation(code, d) == helly_violation_brute(code, d));
    }
    for (std::uint64_t seed = 100; seed < 115; ++seed) {
        const NeuralCode code = random_code(6, seed, Rational(1, 4));
        for (int d = 0; d <= 5; ++d) CHECK(helly_violation(code, d) == helly_violation_brute(code, d));
    }
}

TEST_CASE("helly_lower_bound pinned values and oracle agreement") {
    CHECK(helly_lower_bound(generate_cn(4)) == 3);
    CHECK(helly_lower_bound(kDemo) == 1);
    CHECK(helly_lower_bound(parse_code("n=3\n1 2 3\n")) == 0);
    CHECK(helly_lower_bound(NeuralCode(2, {Codeword()})) == 0);

    for (const NeuralCode& code : enumerate_codes(3))
        CHECK(helly_lower_bound(code) == helly_lower_bound_brute(code));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const NeuralCode code = random_code(5, seed + 7, Rational(1, 3));
        CHECK(helly_lower_bound(code) == helly_lower_bound_brute(code));
    }
}

TEST_CASE("bounds for the running example") {
    const DimensionBounds plain = embedding_dimension_bounds(kDemo);
    CHECK(plain.lower == 1);
    CHECK(plain.upper == 2);
    CHECK_FALSE(plain.tight());
    CHECK(plain.upper_source == UpperSource::theorem1);
    REQUIRE(plain.lower_witness.has_value());
    CHECK(*plain.lower_witness == cw({1, 4}));

    const DimensionBounds refined = embedding_dimension_bounds(kDemo, true);
    CHECK(refined.lower == 1);
    CHECK(refined.upper == 1);
    CHECK(refined.tight());
    CHECK(refined.upper_source == UpperSource::dim1_search);
    REQUIRE(refined.lower_witness.has_value());
    CHECK(*refined.lower_witness == cw({1, 4}));
}

TEST_CASE("bounds for degenerate codes") {
    const DimensionBounds empty_only = embedding_dimension_bounds(NeuralCode(2, {Codeword()}));
    CHECK(empty_only.lower == 0);
    CHECK(empty_only.upper == 0);
    CHECK(empty_only.tight());
    CHECK(empty_only.upper_source == UpperSource::degenerate);
    CHECK_FALSE(empty_only.lower_witness.has_value());

    const DimensionBounds single = embedding_dimension_bounds(parse_code("n=2\n1 2\n"));
    CHECK(single.lower == 0);
    CHECK(single.upper == 0);
    CHECK(single.upper_source == UpperSource::theorem1);
    CHECK_FALSE(single.lower_witness.has_value());

    // one atom plus an off region needs an actual line, not a point
    const DimensionBounds with_empty = embedding_dimension_bounds(parse_code("n=2\n-\n1 2\n"));
    CHECK(with_empty.lower == 0);
    CHECK(with_empty.upper == 1);
    CHECK(with_empty.upper_source == UpperSource::theorem1);
}

TEST_CASE("refinement raises the floor when the line search comes up empty") {
    const DimensionBounds plain = embedding_dimension_bounds(kFourCycle);
    CHECK(plain.lower == 1);
    CHECK(plain.upper == 3);
    REQUIRE(plain.lower_witness.has_value());
    CHECK(*plain.lower_witness == cw({1, 3}));

    const DimensionBounds refined = embedding_dimension_bounds(kFourCycle, true);
    CHECK(refined.lower == 2);
    CHECK(refined.upper == 3);
    CHECK_FALSE(refined.tight());
    CHECK(refined.upper_source == UpperSource::theorem1);
    CHECK_FALSE(refined.lower_witness.has_value());
}

TEST_CASE("refinement catches obstructions Helly cannot see") {
    const DimensionBounds plain = embedding_dimension_bounds(kTriangleNoSingletons);
    CHECK(plain.lower == 0);
    CHECK(plain.upper == 3);

    const DimensionBounds refined = embedding_dimension_bounds(kTriangleNoSingletons, true);
    CHECK(refined.lower == 2);
    CHECK(refined.upper == 3);
    CHECK_FALSE(refined.lower_witness.has_value());
}

TEST_CASE("the C_n family is tight at n - 1") {
    int previous = -1;
    for (int n = 3; n <= 6; ++n) {
        const DimensionBounds b = embedding_dimension_bounds(generate_cn(n));
        CHECK(b.lower == n - 1);
        CHECK(b.upper == n - 1);
        CHECK(b.tight());
        CHECK(b.upper_source == UpperSource::theorem1);
        REQUIRE(b.lower_witness.has_value());
        CHECK(b.lower_witness->size() == n);
        CHECK(b.lower > previous);
        previous = b.lower;
    }
}

TEST_CASE("bounds are insensitive to input order") {
    std::vector<Codeword> shuffled = {cw({1, 2, 3}), cw({3, 4}), Codeword(), cw({1, 2})};
    const DimensionBounds a = embedding_dimension_bounds(NeuralCode(4, shuffled));
    const DimensionBounds b = embedding_dimension_bounds(kDemo);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.lower_witness == b.lower_witness);
}

TEST_CASE("invariants on random codes") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 3);
        const NeuralCode code = random_code(n, seed, Rational(1, 2));
        const DimensionBounds b = embedding_dimension_bounds(code);
        CHECK(b.lower >= 0);
        CHECK(b.lower <= b.upper);
        CHECK(b.lower_witness.has_value() == (b.lower >= 1));
        if (b.lower_witness) CHECK(is_helly_certificate(code, *b.lower_witness, b.lower - 1));

        if (n == 4) {
            const DimensionBounds r = embedding_dimension_bounds(code, true);
            CHECK(r.lower <= r.upper);
            CHECK(r.lower >= b.lower);
            CHECK(r.upper <= b.upper);
            if (r.upper_source == UpperSource::dim1_search) CHECK(r.upper == 1);
        }
    }
}
