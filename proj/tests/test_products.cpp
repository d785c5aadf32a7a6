#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gordon/partitions.hpp>
#include <gordon/products.hpp>

using gordon::AIndex;
using gordon::GordonParams;
using gordon::TruncatedSeries;
using gordon::Valuation;

TEST_CASE("AIndex canonical decomposition")
{
    CHECK(AIndex(2, 1).level() == 0);
    CHECK(AIndex(2, 2).offset() == 2);
    CHECK(AIndex(2, 3).level() == 1);
    CHECK(AIndex(2, 3).offset() == 2);
    CHECK(AIndex(3, 3).level() == 0);
    for (int r = 2; r <= 6; ++r) {
        for (int index = 1; index <= 40; ++index) {
            const AIndex idx(r, index);
            CHECK(idx.index() == (r - 1) * idx.level() + idx.offset());
            if (idx.level() == 0) {
                CHECK(idx.offset() >= 1);
                CHECK(idx.offset() <= r);
            } else {
                CHECK(idx.offset() >= 2);
                CHECK(idx.offset() <= r);
            }
        }
    }
    CHECK_THROWS_AS(AIndex(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(AIndex(3, 0), std::invalid_argument);
}

TEST_CASE("series_A_base")
{
    CHECK(gordon::series_A_base(2, 1, 5) == TruncatedSeries{1, 1, 1, 1, 2, 2});
    CHECK(gordon::series_A_base(2, 2, 5) == TruncatedSeries{1, 0, 1, 1, 1, 1});
    for (int r = 2; r <= 5; ++r) {
        for (int ell = 1; ell <= r; ++ell) {
            CHECK(gordon::series_A_base(r, ell, 0) == TruncatedSeries{1});
        }
    }
    CHECK_THROWS_AS(gordon::series_A_base(3, 4, 5), std::invalid_argument);
}

TEST_CASE("series_A_base matches the congruence partition count")
{
    for (int r = 2; r <= 5; ++r) {
        for (int ell = 1; ell <= r; ++ell) {
            const auto s = gordon::series_A_base(r, ell, 40);
            for (int n = 0; n <= 40; ++n) {
                CHECK(s[static_cast<std::size_t>(n)] == gordon::count_modular(r, r - ell + 1, n));
            }
        }
    }
}

TEST_CASE("series_A recursion")
{
    CHECK(gordon::series_A(AIndex(2, 3), 5) == TruncatedSeries{1, 0, 0, 1, 1, 1});
    CHECK(gordon::series_A(AIndex(3, 3), 4) == gordon::series_A_base(3, 3, 4));
    CHECK(gordon::agree(gordon::series_A(AIndex(2, 3), 30), gordon::genfun_B(GordonParams(2, 1, 1), 30)));
    // r = 3, index 6 = (r-1)*2 + 2; frozen from an independent evaluation.
    CHECK(gordon::series_A(AIndex(3, 6), 15)
          == TruncatedSeries{1, 0, 0, 1, 1, 1, 1, 2, 3, 3, 4, 4, 6, 7, 9, 11});
}

TEST_CASE("series_A_levels returns every index at the requested order")
{
    const auto all = gordon::series_A_levels(4, 3, 20);
    REQUIRE(all.size() == 4 + 3 * 3);
    for (std::size_t k = 0; k < all.size(); ++k) {
        CHECK(all[k].order() == 20);
        CHECK(all[k] == gordon::series_A(AIndex(4, static_cast<int>(k) + 1), 20));
    }
}

TEST_CASE("recursion numerators are always divisible")
{
    for (int r = 2; r <= 5; ++r) {
        CHECK_NOTHROW(gordon::series_A_levels(r, 10, 50));
    }
}

TEST_CASE("product series equal the partition generating function on a small grid")
{
    for (int r = 2; r <= 4; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int J = 0; J <= 2; ++J) {
                const GordonParams p(r, i, J);
                const auto a = gordon::series_A(AIndex(r, (r - 1) * J + p.ell()), 30);
                CHECK_MESSAGE(a == gordon::genfun_B(p, 30), p.to_string());
            }
        }
    }
}

TEST_CASE("tail valuation profile")
{
    const auto profile = gordon::tail_valuation_profile(2, 5, 20);
    CHECK(profile == std::vector<Valuation>{Valuation(3), Valuation(4), Valuation(5), Valuation(6), Valuation(7)});

    const auto truncated = gordon::tail_valuation_profile(3, 6, 4);
    CHECK(truncated.back().is_infinite());

    for (int r = 2; r <= 5; ++r) {
        const auto p = gordon::tail_valuation_profile(r, 12, 30);
        for (std::size_t k = 1; k < p.size(); ++k) {
            CHECK(p[k - 1] <= p[k]);
        }
    }
    CHECK_THROWS_AS(gordon::tail_valuation_profile(2, 0, 10), std::invalid_argument);
}

TEST_CASE("tail series reach 1 at order N by d <= N + 2")
{
    for (int r = 2; r <= 5; ++r) {
        for (std::size_t N : {0u, 10u, 50u}) {
            const int d_max = static_cast<int>(N) + 2;
            const auto p = gordon::tail_valuation_profile(r, d_max, N);
            CHECK_MESSAGE(p.back().is_infinite(), "r=", r, " N=", N);
        }
    }
}
