#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "stanley/core.hpp"

using namespace stanley;

namespace {

// Independent oracle: exhaustive pair scan, no sieve, no early exits.
std::optional<CoverWitness> oracle_covered(Int x, const std::vector<Int>& terms) {
    std::optional<CoverWitness> best;
    for (Int t : terms)
        for (Int s : terms)
            if (s < t && 2 * t - s == x)
                if (!best || t < best->second || (t == best->second && s < best->first))
                    best = CoverWitness{s, t};
    return best;
}

// Oracle: literal check of every index triple.
bool oracle_3_free(const std::vector<Int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            for (std::size_t l = j + 1; l < v.size(); ++l)
                if (v[i] + v[l] == 2 * v[j]) return false;
    return true;
}

std::vector<Int> random_3_free_nucleus(std::mt19937& rng, Int max_value) {
    std::vector<Int> out{0};
    std::uniform_int_distribution<Int> d(1, max_value);
    for (int tries = 0; tries < 24; ++tries) {
        Int x = d(rng);
        if (std::find(out.begin(), out.end(), x) != out.end()) continue;
        auto cand = out;
        cand.push_back(x);
        std::sort(cand.begin(), cand.end());
        if (oracle_3_free(cand)) out = cand;
    }
    return out;
}

}  // namespace

TEST_CASE("is_3_free on reference inputs") {
    CHECK_FALSE(is_3_free(std::vector<Int>{0, 1, 2}));
    CHECK(is_3_free(std::vector<Int>{0, 1, 3, 4}));
    CHECK_FALSE(is_3_free(std::vector<Int>{0, 4, 8}));
    CHECK(is_3_free(std::vector<Int>{0}));

    CHECK_THROWS_AS(is_3_free(std::vector<Int>{0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_3_free(std::vector<Int>{0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_3_free(std::vector<Int>{-1, 0}), std::invalid_argument);
}

TEST_CASE("covered_by witnesses") {
    std::vector<Int> t0{0, 1};
    CHECK(covered_by(2, t0) == CoverWitness{0, 1});

    // Frozen from the exhaustive pair-scan oracle.
    std::vector<Int> t1{0, 1, 3, 4};
    CHECK(oracle_covered(7, t1) == CoverWitness{1, 4});
    CHECK(covered_by(7, t1) == CoverWitness{1, 4});
    CHECK(oracle_covered(5, t1) == CoverWitness{1, 3});
    CHECK(covered_by(5, t1) == CoverWitness{1, 3});
    CHECK_FALSE(covered_by(13, t1).has_value());
}

TEST_CASE("covered_by agrees with the oracle on random sets") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        auto nucleus = random_3_free_nucleus(rng, 60);
        for (Int x = 0; x <= 130; ++x) {
            auto got = covered_by(x, nucleus);
            auto want = oracle_covered(x, nucleus);
            CHECK(got == want);
        }
    }
}

TEST_CASE("jointly_covered") {
    std::vector<Int> s{0}, t{1};
    CHECK(jointly_covered(2, s, t) == CoverWitness{0, 1});
    std::vector<Int> z{0};
    CHECK_FALSE(jointly_covered(0, z, z).has_value());

    std::vector<Int> a{0, 1, 4}, b{2, 5, 9};
    // 2*5 - 4 = 6
    CHECK(jointly_covered(6, a, b) == CoverWitness{4, 5});
    CHECK(jointly_covered(3, a, b) == CoverWitness{1, 2});
    CHECK_FALSE(jointly_covered(19, a, b).has_value());
}

TEST_CASE("cover-shift property on random instances") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Int> dv(0, 40), dn(0, 15);
    int checked = 0;
    while (checked < 1000) {
        auto S = random_3_free_nucleus(rng, 40);
        auto T = random_3_free_nucleus(rng, 40);
        Int x = dv(rng);
        if (!jointly_covered(x, S, T)) continue;
        Int n1 = dn(rng), n2 = dn(rng);
        if (n1 > n2) std::swap(n1, n2);
        std::vector<Int> Sn, Tn;
        for (Int v : S) Sn.push_back(v + n1);
        for (Int v : T) Tn.push_back(v + n2);
        CHECK(jointly_covered(x + 2 * n2 - n1, Sn, Tn).has_value());
        ++checked;
    }
}

TEST_CASE("nucleating set validation") {
    CHECK_THROWS_AS(NucleatingSet({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(NucleatingSet({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(NucleatingSet({}), std::invalid_argument);
    CHECK_NOTHROW(NucleatingSet({0, 2, 5}));

    // The error message carries the offending triple for diagnostics.
    try {
        NucleatingSet({0, 4, 8});
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("(0, 4, 8)") != std::string::npos);
    }
}

TEST_CASE("extend_greedy reproduces known prefixes") {
    auto s0 = extend_greedy(NucleatingSet({0}), 9);
    CHECK(s0.terms() == std::vector<Int>{0, 1, 3, 4, 9, 10, 12, 13, 27});

    auto s025 = extend_greedy(NucleatingSet({0, 2, 5}), 16);
    CHECK(s025.terms() ==
          std::vector<Int>{0, 2, 5, 6, 9, 11, 14, 15, 27, 29, 32, 33, 36, 38, 41, 42});

    auto s014 = extend_greedy(NucleatingSet({0, 1, 4}), 16);
    CHECK(s014.terms() ==
          std::vector<Int>{0, 1, 4, 5, 11, 12, 14, 15, 31, 32, 34, 35, 40, 41, 43, 44});

    CHECK_THROWS_AS(extend_greedy(NucleatingSet({0, 2, 5}), 2), std::invalid_argument);
}

TEST_CASE("generation is deterministic and prefix-stable") {
    auto a = extend_greedy(NucleatingSet({0, 1, 7}), 50);
    auto b = extend_greedy(NucleatingSet({0, 1, 7}), 200);
    CHECK(std::equal(a.terms().begin(), a.terms().end(), b.terms().begin()));

    auto c = extend_greedy(NucleatingSet({0, 1, 7}), 50);
    c.extend_to(200);
    CHECK(c.terms() == b.terms());
}

TEST_CASE("generated prefixes are 3-free and gap-covered") {
    for (auto nucleus : {std::vector<Int>{0}, {0, 2, 5}, {0, 1, 4}, {0, 4}, {0, 3, 8}}) {
        auto p = extend_greedy(NucleatingSet(nucleus), 300);
        CHECK(is_3_free(p.terms()));
        // Every skipped integer between max(nucleus) and the last term is covered.
        const auto& t = p.terms();
        for (Int x = p.nucleus().max() + 1; x < t.back(); ++x) {
            if (std::binary_search(t.begin(), t.end(), x)) continue;
            CHECK(covered_by(x, t).has_value());
        }
    }
}

TEST_CASE("translation invariance of greedy extension") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 12; ++iter) {
        auto base = random_3_free_nucleus(rng, 30);
        auto ref = greedy_extend(base, 64);
        for (Int n : {Int{1}, Int{5}, Int{100}}) {
            auto shifted = base;
            for (Int& v : shifted) v += n;
            auto got = greedy_extend(shifted, 64);
            for (std::size_t i = 0; i < ref.size(); ++i) CHECK(got[i] == ref[i] + n);
        }
    }
}

TEST_CASE("sieve bits match the covering oracle") {
    auto p = extend_greedy(NucleatingSet({0, 2, 5}), 64);
    for (Int x = 0; x < 2 * p.terms().back(); ++x)
        CHECK(p.sieve().test(x) == covered_by(x, p.terms()).has_value());
}

TEST_CASE("omitted sets") {
    // 4 = 2*2 - 0 is covered by (0, 2), so it is not omitted; the omitted
    // integers below max{0,2,5} are exactly 1 and 3.
    auto s025 = extend_greedy(NucleatingSet({0, 2, 5}), 16);
    CHECK(omitted_set(s025).elements == std::vector<Int>{1, 3});
    CHECK(omitted_set(s025).omega() == 3);

    auto s0 = extend_greedy(NucleatingSet({0}), 16);
    CHECK(omitted_set(s0).elements.empty());
    CHECK_FALSE(omitted_set(s0).omega().has_value());

    auto s014 = extend_greedy(NucleatingSet({0, 1, 4}), 16);
    CHECK(omitted_set(s014).elements == std::vector<Int>{3});
}

TEST_CASE("block slices") {
    auto s025 = extend_greedy(NucleatingSet({0, 2, 5}), 16);
    CHECK(s025.block(2, 0).values == std::vector<Int>{9, 11, 14, 15});

    auto s014 = extend_greedy(NucleatingSet({0, 1, 4}), 16);
    CHECK(s014.block(2, 0).values == std::vector<Int>{11, 12, 14, 15});

    // Boundary: 2^(k+1) - sigma == N picks the last 2^k terms.
    auto last = s014.block(3, 0).values;
    CHECK(last == std::vector<Int>(s014.terms().begin() + 8, s014.terms().end()));
    CHECK_THROWS_AS(s014.block(4, 0), std::out_of_range);
    CHECK_THROWS_AS(s014.block(2, 5), std::out_of_range);
}

TEST_CASE("arithmetic overflow is a hard error") {
    const Int big = std::numeric_limits<Int>::max() / 2 + 2;
    CHECK_THROWS_AS(greedy_extend({0, big}, 3), std::overflow_error);
}
