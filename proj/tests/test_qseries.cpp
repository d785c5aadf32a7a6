#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <gordon/qseries.hpp>

using gordon::Integer;
using gordon::TruncatedSeries;
using gordon::Valuation;

namespace
{

TruncatedSeries random_series(std::mt19937 &rng, std::size_t order)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Integer> c(order + 1);
    for (auto &x : c) {
        x = coeff(rng);
    }
    return TruncatedSeries(std::move(c));
}

} // namespace

TEST_CASE("one")
{
    CHECK(TruncatedSeries::one(0) == TruncatedSeries{1});
    CHECK(TruncatedSeries::one(2) == TruncatedSeries{1, 0, 0});
    CHECK(TruncatedSeries::one(5) == TruncatedSeries{1, 0, 0, 0, 0, 0});
}

TEST_CASE("add and sub truncate to the smaller order")
{
    CHECK(TruncatedSeries{1, 1} + TruncatedSeries{1, 0} == TruncatedSeries{2, 1});
    CHECK(TruncatedSeries{1, 1, 1} - TruncatedSeries{1, 1, 1} == TruncatedSeries{0, 0, 0});
    CHECK(TruncatedSeries{1, 2, 3} + TruncatedSeries{0, 0} == TruncatedSeries{1, 2});
}

TEST_CASE("mul")
{
    CHECK(TruncatedSeries{1, 1, 0} * TruncatedSeries{1, 1, 0} == TruncatedSeries{1, 2, 1});
    const TruncatedSeries a{3, -1, 4, 1, -5};
    CHECK(a * TruncatedSeries::one(4) == a);
    CHECK(TruncatedSeries{1, -1, 0, 0} * TruncatedSeries{1, 1, 1, 1} == TruncatedSeries{1, 0, 0, 0});
    CHECK((TruncatedSeries{1, 2, 3} * TruncatedSeries{1, 1}).order() == 1);
}

TEST_CASE("geom_inverse")
{
    CHECK(TruncatedSeries::geom_inverse(1, 3) == TruncatedSeries{1, 1, 1, 1});
    CHECK(TruncatedSeries::geom_inverse(2, 5) == TruncatedSeries{1, 0, 1, 0, 1, 0});
    CHECK(TruncatedSeries::geom_inverse(7, 5) == TruncatedSeries{1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(TruncatedSeries::geom_inverse(0, 5), std::invalid_argument);
}

TEST_CASE("geom_inverse times (1 - q^m) is one")
{
    for (std::size_t N = 1; N <= 12; ++N) {
        for (std::size_t m = 1; m <= N; ++m) {
            const auto factor = TruncatedSeries::one(N) - TruncatedSeries::monomial(m, N);
            CHECK(TruncatedSeries::geom_inverse(m, N) * factor == TruncatedSeries::one(N));
        }
    }
}

TEST_CASE("in-place division by 1 - q^m matches multiplication by geom_inverse")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 15);
        const std::size_t m = 1 + static_cast<std::size_t>(trial % 6);
        auto b = a;
        b.divide_by_one_minus_q_pow(m);
        CHECK(b == a * TruncatedSeries::geom_inverse(m, 15));
    }
}

TEST_CASE("shift_div")
{
    CHECK(TruncatedSeries{0, 0, 1, 1}.shift_div(2) == TruncatedSeries{1, 1});
    CHECK_THROWS_AS((TruncatedSeries{1, 1}).shift_div(1), gordon::NonDivisible);
    const TruncatedSeries a{4, 0, 2};
    CHECK(a.shift_div(0) == a);
    CHECK_THROWS_AS(a.shift_div(3), std::out_of_range);

    try {
        (void)TruncatedSeries{0, 0, 5, 1}.shift_div(3);
        FAIL("expected NonDivisible");
    } catch (const gordon::NonDivisible &e) {
        CHECK(e.shift() == 3);
        CHECK(e.exponent() == 2);
    }
}

TEST_CASE("shift_div undoes multiplication by q^k")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_series(rng, 12);
        const std::size_t k = static_cast<std::size_t>(trial % 13);
        const auto qk = TruncatedSeries::monomial(k, 12);
        CHECK((qk * a).shift_div(k) == a.truncated(12 - k));
    }
}

TEST_CASE("valuation")
{
    CHECK(TruncatedSeries{0, 0, 3, 1}.valuation() == Valuation(2));
    CHECK(TruncatedSeries{0, 0, 0}.valuation().is_infinite());
    CHECK(TruncatedSeries{5}.valuation() == Valuation(0));
    CHECK(Valuation::infinite() > Valuation(1000000));
    CHECK(Valuation(3) < Valuation(4));
    CHECK(Valuation::infinite() == Valuation::infinite());
    CHECK(Valuation::infinite().to_string() == "inf");
}

TEST_CASE("agree compares up to the smaller order")
{
    CHECK(gordon::agree(TruncatedSeries{1, 2, 3}, TruncatedSeries{1, 2, 3}));
    CHECK(gordon::agree(TruncatedSeries{1, 2, 3, 9}, TruncatedSeries{1, 2, 3}));
    CHECK_FALSE(gordon::agree(TruncatedSeries{1, 2}, TruncatedSeries{1, 3}));
    CHECK(gordon::first_mismatch(TruncatedSeries{1, 2, 5}, TruncatedSeries{1, 2, 6}) == std::optional<std::size_t>(2));
}

TEST_CASE("ring axioms at a shared order")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_series(rng, 10);
        const auto b = random_series(rng, 10);
        const auto c = random_series(rng, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("valuation of a product is at least the sum of valuations")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_series(rng, 14).shifted(static_cast<std::size_t>(trial % 5));
        const auto b = random_series(rng, 14).shifted(static_cast<std::size_t>(trial % 4));
        const auto va = a.valuation();
        const auto vb = b.valuation();
        if (va.is_infinite() || vb.is_infinite() || va.value() + vb.value() > 14) {
            continue;
        }
        CHECK((a * b).valuation() >= Valuation(va.value() + vb.value()));
    }
}

TEST_CASE("coefficients never overflow")
{
    // (1/(1-q))^60 has coefficient C(n+59, 59) at q^n; C(119, 59) exceeds 2^64.
    auto s = TruncatedSeries::one(60);
    for (int k = 0; k < 60; ++k) {
        s.divide_by_one_minus_q_pow(1);
    }
    CHECK(s[60] == Integer("48307454420181661301946569760686328"));
}

TEST_CASE("json round trip")
{
    const TruncatedSeries s(std::vector<Integer>{Integer("123456789012345678901234567890"), 0, -7});
    const nlohmann::json j = s;
    CHECK(j.dump() == R"({"coeffs":["123456789012345678901234567890","0","-7"],"order":2})");
    CHECK(j.get<TruncatedSeries>() == s);

    CHECK_THROWS(nlohmann::json::parse(R"({"order":3,"coeffs":["1"]})").get<TruncatedSeries>());
}

TEST_CASE("fingerprint depends only on coefficients")
{
    CHECK(gordon::fingerprint(TruncatedSeries{1, 2}) == gordon::fingerprint(TruncatedSeries{1, 2}));
    CHECK(gordon::fingerprint(TruncatedSeries{1, 2}) != gordon::fingerprint(TruncatedSeries{1, 3}));
    CHECK(gordon::fingerprint(TruncatedSeries{12}) != gordon::fingerprint(TruncatedSeries{1, 2}));
    CHECK(gordon::fingerprint_hex(TruncatedSeries{1}).size() == 16);
}
