#include <doctest.h>

#include <random>

#include "mog/approx.hpp"
#include "test_support.hpp"

using mog::CoverDirection;
using mog::OutcomeSet;
using mog::OutcomeVector;
using mog::Rational;

TEST_CASE("verify_cover accepts the identity cover") {
    std::mt19937_64 rng(17);
    const OutcomeSet S = mog_test::random_positive_set(rng, 10, 3);
    CHECK(mog::verify_cover(S, S, Rational(1, 10), CoverDirection::Lower));
    CHECK(mog::verify_cover(S, S, Rational(1, 10), CoverDirection::Upper));
    CHECK_THROWS_AS(mog::verify_cover(S, S, Rational(0), CoverDirection::Lower),
                    mog::input_error);
}

TEST_CASE("verify_cover rejects bad covers") {
    const OutcomeSet S =
        OutcomeSet::from_points({OutcomeVector{1, 1}, OutcomeVector{10, 10}});
    // not a subset
    CHECK_FALSE(mog::verify_cover(S, OutcomeSet::from_points({OutcomeVector{2, 2}}),
                                  Rational(1, 2), CoverDirection::Lower));
    // the distant point is left uncovered in both directions
    CHECK_FALSE(mog::verify_cover(S, OutcomeSet::from_points({OutcomeVector{1, 1}}),
                                  Rational(1, 2), CoverDirection::Lower));
    CHECK_FALSE(mog::verify_cover(S, OutcomeSet::from_points({OutcomeVector{10, 10}}),
                                  Rational(1, 2), CoverDirection::Upper));
    // close pairs collapse
    const OutcomeSet close =
        OutcomeSet::from_points({OutcomeVector{1, 1},
                                 OutcomeVector{Rational(21, 20), Rational(21, 20)}});
    CHECK(mog::verify_cover(close, OutcomeSet::from_points({OutcomeVector{1, 1}}),
                            Rational(1, 10), CoverDirection::Lower));
    CHECK(mog::verify_cover(close,
                            OutcomeSet::from_points(
                                {OutcomeVector{Rational(21, 20), Rational(21, 20)}}),
                            Rational(1, 10), CoverDirection::Upper));
}

TEST_CASE("covers of a singleton are the singleton") {
    const OutcomeSet S = OutcomeSet::from_points({OutcomeVector{3, 5}});
    CHECK(mog::lower_cover(S, Rational(1, 2)) == S);
    CHECK(mog::upper_cover(S, Rational(1, 2)) == S);
    CHECK_THROWS_AS(mog::lower_cover(OutcomeSet{}, Rational(1, 2)), mog::input_error);
    CHECK_THROWS_AS(
        mog::lower_cover(OutcomeSet::from_points({OutcomeVector{0, 1}}), Rational(1, 2)),
        mog::positivity_error);
}

TEST_CASE("constructed covers verify and only shrink the set") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t d = 2 + static_cast<std::size_t>(iter % 3);
        const OutcomeSet S = mog_test::random_positive_set(rng, 25, d, 200, 5);
        for (const Rational& eps : {Rational(1, 10), Rational(1, 2), Rational(2)}) {
            const OutcomeSet lo = mog::lower_cover(S, eps);
            const OutcomeSet hi = mog::upper_cover(S, eps);
            CHECK(mog::verify_cover(S, lo, eps, CoverDirection::Lower));
            CHECK(mog::verify_cover(S, hi, eps, CoverDirection::Upper));
            CHECK(lo.size() <= S.size());
            CHECK(hi.size() <= S.size());
            for (const auto& y : lo) CHECK(S.contains(y));
            for (const auto& y : hi) CHECK(S.contains(y));
        }
    }
}

TEST_CASE("cover sizes do not grow as epsilon grows") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        const OutcomeSet S = mog_test::random_positive_set(rng, 40, 2, 500, 7);
        std::size_t prev_lo = S.size() + 1, prev_hi = S.size() + 1;
        for (const Rational& eps : {Rational(1, 20), Rational(1, 4), Rational(1), Rational(4)}) {
            const std::size_t lo = mog::lower_cover(S, eps).size();
            const std::size_t hi = mog::upper_cover(S, eps).size();
            CHECK(lo <= prev_lo);
            CHECK(hi <= prev_hi);
            prev_lo = lo;
            prev_hi = hi;
        }
    }
}

TEST_CASE("zero-epsilon run reproduces the exact ratios") {
    const OutcomeSet E = OutcomeSet::from_points({OutcomeVector{30, 53}, OutcomeVector{40, 38}});
    const OutcomeSet F = OutcomeSet::from_points({OutcomeVector{46, 61}, OutcomeVector{69, 31}});
    const auto approx = mog::approx_mocr(E, F, 0, 0);
    CHECK(approx.guarantee_factor == 1);
    CHECK(approx.ratios.ratios == mog::mo_cr(mog::worst_subset(E), mog::efficient_subset(F)).ratios);
    CHECK_THROWS_AS(mog::approx_mocr(E, F, Rational(-1, 2), 0), mog::cover_error);
    CHECK_THROWS_AS(mog::approx_mocr(OutcomeSet{}, F, 0, 0), mog::cover_error);
}

TEST_CASE("cover-based ratios are sound and reach the exact frontier") {
    std::mt19937_64 rng(5309);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t d = 2 + static_cast<std::size_t>(iter % 2);
        const OutcomeSet E = mog_test::random_positive_set(rng, 8, d, 120, 4);
        const OutcomeSet F = mog_test::random_positive_set(rng, 8, d, 120, 4);
        const auto exact = mog::mo_cr(mog::worst_subset(E), mog::efficient_subset(F));
        for (const Rational& eps : {Rational(1, 10), Rational(1, 2)}) {
            const OutcomeSet Ec = mog::lower_cover(E, eps);
            const OutcomeSet Fc = mog::upper_cover(F, eps);
            const auto approx = mog::approx_mocr(Ec, Fc, eps, eps);
            CHECK(approx.guarantee_factor == (1 + eps) * (1 + eps));

            // soundness: every approximate ratio is guaranteed for the originals
            for (const auto& rho : approx.ratios.ratios) {
                CHECK(mog::check_ratio(rho, E, F).guaranteed);
            }
            // covering: every exact ratio, shrunk by the guarantee factor,
            // lies inside the approximate region
            const Rational inv = Rational(1) / approx.guarantee_factor;
            for (const auto& rho : exact.ratios) {
                CHECK(mog::contains(approx.ratios.region, mog::scale(inv, rho)));
            }
        }
    }
}
