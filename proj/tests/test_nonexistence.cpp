#include <doctest.h>

#include <cmath>
#include <random>

#include "whls/criteria.hpp"
#include "whls/nonexistence.hpp"

using namespace whls;

TEST_CASE("recurrence matches the closed form") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> up(0.2, 3.0);
    std::uniform_real_distribution<double> ua(0.5, 4.4);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Params params{5, ua(rng), us(rng), us(rng), up(rng), up(rng)};
        const ExponentTrace t = iterate_exponents(params, 40);
        REQUIRE(t.a.size() == 41);
        for (int j = 0; j <= 40; ++j) {
            const double cf = closed_form_a(j, params);
            const double scale = std::max({1.0, std::abs(cf), std::abs(t.a[j])});
            CHECK(std::abs(t.a[j] - cf) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("worked arithmetic: (5,2,0,0,1.5,1.5) gives a_j = 4 - 2.25^j") {
    const Params params{5, 2.0, 0.0, 0.0, 1.5, 1.5};
    const ExponentTrace t = iterate_exponents(params, 10);
    for (int j = 0; j <= 10; ++j)
        CHECK(t.a[j] == doctest::Approx(4.0 - std::pow(2.25, j)).epsilon(1e-12));
    CHECK(t.verdict == TraceVerdict::DivergesToMinusInfinity);
}

TEST_CASE("verdict matches the sign of n - alpha - M when pq > 1") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> up(0.2, 3.5);
    std::uniform_real_distribution<double> us(0.0, 1.2);
    for (int trial = 0; trial < 300; ++trial) {
        const Params params{5, 2.0, us(rng), us(rng), up(rng), up(rng)};
        if (params.pq() <= 1.0 + 1e-9) continue;
        const DerivedExponents e = exponents(params);
        const double gap = params.n - params.alpha;
        const ExponentTrace t = iterate_exponents(params, 60);
        if (std::abs(e.M - gap) <= criticality_tolerance(params)) {
            CHECK(t.verdict == TraceVerdict::Stationary);
        } else if (e.M > gap) {
            // a_0 = n - alpha below the fixed point: sequence escapes downward
            CHECK(t.verdict == TraceVerdict::DivergesToMinusInfinity);
        } else {
            CHECK(t.verdict == TraceVerdict::DivergesToPlusInfinity);
        }
    }
}

TEST_CASE("pq < 1 converges to the negative limit") {
    const Params params{5, 2.0, 0.0, 0.0, 0.5, 0.5};
    const ExponentTrace t = iterate_exponents(params, 200);
    CHECK(t.verdict == TraceVerdict::ConvergesNegative);
    // limit = -G/(1 - pq), G = alpha(1+q) - (sigma1 + sigma2 q) = 3
    CHECK(t.limit == doctest::Approx(-3.0 / 0.75).epsilon(1e-12));
    CHECK(t.a.back() == doctest::Approx(t.limit).epsilon(1e-10));
}

TEST_CASE("pq = 1 walks down arithmetically when G > 0") {
    const Params params{5, 2.0, 0.0, 0.0, 2.0, 0.5};
    const ExponentTrace t = iterate_exponents(params, 20);
    // G = alpha(1+q) - 0 = 3; a_j = 3 - 3j
    for (int j = 0; j <= 20; ++j) CHECK(t.a[j] == doctest::Approx(3.0 - 3.0 * j).epsilon(1e-12));
    CHECK(t.verdict == TraceVerdict::DivergesToMinusInfinity);
}

TEST_CASE("b interleaves the recurrence") {
    const Params params{5, 2.5, 0.3, 0.6, 1.4, 2.2};
    const ExponentTrace t = iterate_exponents(params, 15);
    for (int j = 0; j < 15; ++j) {
        CHECK(t.b[j] == doctest::Approx(params.p * t.a[j] - params.alpha + params.sigma2)
                            .epsilon(1e-12));
        CHECK(t.a[j + 1] == doctest::Approx(params.q * t.b[j] - params.alpha + params.sigma1)
                                .epsilon(1e-12));
    }
}

TEST_CASE("blow-up induction holds at the pinned example") {
    const BlowupTrace t = blowup_recurrence(2.0, 5, 2.0, 3, 512.0, 50);
    REQUIRE(t.holds.size() >= 50);
    CHECK(t.all_hold);
    for (std::size_t k = 0; k < t.holds.size(); ++k) CHECK(t.holds[k]);
    // beta doubles with the extra factor p each step: log beta_{k+1} = log(2p) + log beta_k
    for (std::size_t k = 0; k + 1 < t.log_beta.size(); ++k)
        CHECK(t.log_beta[k + 1] - t.log_beta[k] == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("blow-up induction holds for random admissible seeds") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        const double p = 1.5 + 3.0 * (rng() % 1000) / 1000.0;
        const int l = 3 + static_cast<int>(rng() % 4);
        if (!(l * (p - 1.0) > 2.0)) continue;
        const double beta_min = std::pow(2.0, 1.0 + l + p) * std::pow(p, l);
        const double beta0 = beta_min * (1.0 + (rng() % 1000) / 500.0);
        const BlowupTrace t = blowup_recurrence(p, 5, 2.0, l, beta0, 50);
        CHECK(t.all_hold);
    }
}

TEST_CASE("blow-up guards") {
    CHECK_THROWS_AS(blowup_recurrence(0.9, 5, 2.0, 3, 512.0, 10), domain_error);   // p <= 1
    CHECK_THROWS_AS(blowup_recurrence(1.2, 5, 2.0, 3, 512.0, 10), domain_error);   // l(p-1) <= 2
    CHECK_THROWS_AS(blowup_recurrence(2.0, 5, 2.0, 3, 1.0, 10), domain_error);     // beta0 too small
    CHECK_THROWS_AS(blowup_recurrence(2.0, 5, 1.7, 3, 512.0, 10), domain_error);   // alpha not even
}

TEST_CASE("verdict names") {
    CHECK(std::string(to_string(TraceVerdict::ConvergesNegative)) == "ConvergesNegative");
}
