#include <doctest.h>

#include <algorithm>
#include <set>

#include "neurocode/code.hpp"
#include "neurocode/errors.hpp"
#include "support/oracles.hpp"

using namespace neurocode;
using testing::all_faces_brute;
using testing::enumerate_codes;
using testing::minimal_nonfaces_brute;

namespace {

Codeword cw(std::initializer_list<int> indices) { return Codeword::from_indices(indices); }

NeuralCode code4(std::initializer_list<std::initializer_list<int>> words) {
    std::vector<Codeword> ws;
    for (const auto& w : words) ws.push_back(Codeword::from_indices(w));
    return NeuralCode(4, std::move(ws));
}

const char* kDemo = "n=4\n-\n1 2\n3 4\n1 2 3\n";

}  // namespace

TEST_CASE("codeword basics") {
    const Codeword w = cw({1, 3, 7});
    CHECK(w.size() == 3);
    CHECK(w.contains(3));
    CHECK_FALSE(w.contains(2));
    CHECK(w.max_index() == 7);
    CHECK(w.indices() == std::vector<int>{1, 3, 7});
    CHECK(w.with(2).indices() == std::vector<int>{1, 2, 3, 7});
    CHECK(w.without(3).indices() == std::vector<int>{1, 7});
    CHECK(cw({1, 3}).subset_of(w));
    CHECK_FALSE(w.subset_of(cw({1, 3})));
    CHECK(w.intersect(cw({3, 7, 9})) == cw({3, 7}));
    CHECK(w.unite(cw({2})) == cw({1, 2, 3, 7}));
    CHECK(Codeword().empty());
    CHECK(to_string(w) == "{1,3,7}");
    CHECK(to_string(Codeword()) == "{}");
}

TEST_CASE("codeword index validation") {
    CHECK_THROWS_AS(Codeword::from_indices({0}), Error);
    CHECK_THROWS_AS(Codeword::from_indices({-2}), Error);
    CHECK_THROWS_AS(Codeword::from_indices({63}), Error);
    CHECK(Codeword::from_indices({62}).max_index() == 62);
}

TEST_CASE("canonical order is size then lexicographic") {
    CHECK(canonical_less(Codeword(), cw({3})));
    CHECK(canonical_less(cw({3}), cw({1, 2})));
    CHECK(canonical_less(cw({1, 2}), cw({1, 3})));
    CHECK(canonical_less(cw({1, 3}), cw({2, 3})));
    CHECK_FALSE(canonical_less(cw({2, 3}), cw({1, 3})));

    // agree with the obvious (size, index-vector) comparison on all pairs
    for (std::uint64_t a = 0; a < 32; ++a)
        for (std::uint64_t b = 0; b < 32; ++b) {
            const Codeword wa{a}, wb{b};
            const auto key = [](Codeword w) {
                return std::make_pair(w.size(), w.indices());
            };
            CHECK(canonical_less(wa, wb) == (key(wa) < key(wb)));
        }
}

TEST_CASE("parse: running example") {
    const NeuralCode c = parse_code(kDemo);
    CHECK(c.neuron_count() == 4);
    CHECK(c == code4({{}, {1, 2}, {3, 4}, {1, 2, 3}}));
    CHECK(c.has_empty_codeword());
    CHECK(c.nonempty_count() == 3);
}

TEST_CASE("parse: seven-codeword example") {
    const NeuralCode c = parse_code("n=4\n-\n1\n2\n4\n1 2\n2 4\n3 4\n");
    CHECK(c == code4({{}, {1}, {2}, {4}, {1, 2}, {2, 4}, {3, 4}}));
}

TEST_CASE("parse: comments, blank lines, inferred n") {
    const NeuralCode c = parse_code("# heading\n\n1 2\n\n# tail\n3\n");
    CHECK(c.neuron_count() == 3);
    CHECK(c.codewords().size() == 2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_code("n=3\n# nothing\n"), doctest::Contains("no codeword"),
                         Error);
    CHECK_THROWS_AS(parse_code(""), Error);
    CHECK_THROWS_AS(parse_code("n=4\n0 2\n"), Error);         // index < 1
    CHECK_THROWS_AS(parse_code("n=4\n1 2 2\n"), Error);       // not strictly increasing
    CHECK_THROWS_AS(parse_code("n=4\n2 1\n"), Error);         // decreasing
    CHECK_THROWS_AS(parse_code("n=4\n1 5\n"), Error);         // above declared n
    CHECK_THROWS_AS(parse_code("n=4\nx y\n"), Error);         // not integers
    CHECK_THROWS_AS(parse_code("1 2\nn=4\n3\n"), Error);      // header after codewords
    try {
        parse_code("n=4\n1 2\n1 2\n");
        FAIL("duplicate accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::duplicate_codeword);
    }
}

TEST_CASE("lenient parse drops duplicates") {
    const NeuralCode c = parse_code("n=4\n1 2\n1 2\n3\n", ParseMode::lenient);
    CHECK(c.codewords().size() == 2);
}

TEST_CASE("format: canonical text") {
    CHECK(format_code(code4({{}, {1, 2}, {3, 4}, {1, 2, 3}})) == kDemo);
    CHECK(format_code(generate_cn(4)) == "n=4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    CHECK(format_code(NeuralCode(2, {Codeword()})) == "n=2\n-\n");
}

TEST_CASE("canonicalize sorts and dedups") {
    const NeuralCode c =
        canonicalize(code4({{1, 2}, {}, {1, 2, 3}, {3, 4}, {1, 2}}));
    CHECK(c.codewords().size() == 4);
    CHECK(c.codewords()[0] == Codeword());
    CHECK(c.codewords()[1] == cw({1, 2}));
    CHECK(c.codewords()[2] == cw({3, 4}));
    CHECK(c.codewords()[3] == cw({1, 2, 3}));
    CHECK(c.is_canonical());
    CHECK(canonicalize(c) == c);

    const NeuralCode none = canonicalize(NeuralCode(3, {}));
    CHECK(none.codewords().empty());
}

TEST_CASE("parse/format round-trip") {
    for (const NeuralCode& c : enumerate_codes(3)) CHECK(parse_code(format_code(c)) == c);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const NeuralCode c = random_code(6, seed, Rational(1, 3));
        CHECK(parse_code(format_code(c)) == c);
    }
}

TEST_CASE("simplicial complex of the running example") {
    const SimplicialComplex d = simplicial_complex(parse_code(kDemo));
    const std::set<std::uint64_t> expect = {0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011,
                                            0b0101, 0b0110, 0b1100, 0b0111};
    for (std::uint64_t m = 0; m < 16; ++m)
        CHECK(d.is_face(Codeword(m)) == (expect.count(m) > 0));
}

TEST_CASE("simplicial complex: C4 and the empty codeword") {
    const SimplicialComplex d4 = simplicial_complex(generate_cn(4));
    for (std::uint64_t m = 0; m < 16; ++m)
        CHECK(d4.is_face(Codeword(m)) == (Codeword(m).size() <= 3));

    const SimplicialComplex trivial = simplicial_complex(NeuralCode(3, {Codeword()}));
    CHECK(trivial.is_face(Codeword()));
    CHECK_FALSE(trivial.is_face(cw({1})));

    CHECK_THROWS_AS(simplicial_complex(NeuralCode(3, {})), Error);
}

TEST_CASE("complex matches downward closure on every code with three neurons") {
    for (const NeuralCode& c : enumerate_codes(3)) {
        const SimplicialComplex d = simplicial_complex(c);
        const auto faces = all_faces_brute(c);
        for (std::uint64_t m = 0; m < 8; ++m)
            CHECK(d.is_face(Codeword(m)) == (faces.count(m) > 0));
    }
}

TEST_CASE("minimal non-faces") {
    const auto demo = minimal_nonfaces(simplicial_complex(parse_code(kDemo)));
    CHECK(demo == std::vector<Codeword>{cw({1, 4}), cw({2, 4})});

    const auto c4 = minimal_nonfaces(simplicial_complex(generate_cn(4)));
    CHECK(c4 == std::vector<Codeword>{cw({1, 2, 3, 4})});

    const auto full = minimal_nonfaces(simplicial_complex(NeuralCode(3, {cw({1, 2, 3})})));
    CHECK(full.empty());
}

TEST_CASE("minimal non-faces match the brute scan") {
    for (const NeuralCode& c : enumerate_codes(3))
        CHECK(minimal_nonfaces(simplicial_complex(c)) == minimal_nonfaces_brute(c));
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const NeuralCode c = random_code(5, seed, Rational(1, 4));
        CHECK(minimal_nonfaces(simplicial_complex(c)) == minimal_nonfaces_brute(c));
    }
}

TEST_CASE("face membership equals no-minimal-non-face-contained") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const NeuralCode c = random_code(5, seed, Rational(1, 2));
        const SimplicialComplex d = simplicial_complex(c);
        const auto mnf = minimal_nonfaces(d);
        for (std::uint64_t m = 0; m < 32; ++m) {
            const Codeword sigma{m};
            const bool blocked = std::any_of(mnf.begin(), mnf.end(),
                                             [&](Codeword rho) { return rho.subset_of(sigma); });
            CHECK(d.is_face(sigma) == !blocked);
        }
    }
}

TEST_CASE("generate_cn") {
    CHECK(generate_cn(2) == NeuralCode(2, {cw({1}), cw({2})}));
    CHECK(generate_cn(3) == NeuralCode(3, {cw({1, 2}), cw({1, 3}), cw({2, 3})}));
    CHECK(generate_cn(4) == code4({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
    for (int n = 2; n <= 8; ++n) {
        const NeuralCode c = generate_cn(n);
        CHECK(static_cast<int>(c.codewords().size()) == n);
        for (const Codeword& w : c.codewords()) CHECK(w.size() == n - 1);
    }
    CHECK_THROWS_AS(generate_cn(1), Error);
    CHECK_THROWS_AS(generate_cn(0), Error);
}

TEST_CASE("random_code is deterministic and well-formed") {
    const NeuralCode a = random_code(3, 1, Rational(1, 2));
    const NeuralCode b = random_code(3, 1, Rational(1, 2));
    CHECK(a == b);
    CHECK(random_code(1, 7, Rational(0)) == NeuralCode(1, {cw({1})}));

    bool saw_different = false;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        const NeuralCode c = random_code(4, seed, Rational(1, 2));
        CHECK(c.nonempty_count() >= 1);
        CHECK(c.is_canonical());
        for (const Codeword& w : c.codewords()) CHECK(w.max_index() <= 4);
        if (!(c == a)) saw_different = true;
    }
    CHECK(saw_different);

    CHECK_THROWS_AS(random_code(0, 1, Rational(1, 2)), Error);
    CHECK_THROWS_AS(random_code(3, 1, Rational(3, 2)), Error);
}

TEST_CASE("max-intersection completeness") {
    CHECK_FALSE(is_max_intersection_complete(parse_code(kDemo)));  // 123 & 34 = 3 missing
    CHECK_FALSE(is_max_intersection_complete(generate_cn(4)));     // 123 & 124 = 12 missing
    CHECK(is_max_intersection_complete(
        NeuralCode(3, {cw({1, 2, 3}), cw({1, 2}), Codeword()})));
    CHECK(is_max_intersection_complete(parse_code("n=4\n-\n1\n2\n4\n1 2\n2 4\n3 4\n")));
    CHECK_THROWS_AS(is_max_intersection_complete(NeuralCode(3, {Codeword()})), Error);
}
