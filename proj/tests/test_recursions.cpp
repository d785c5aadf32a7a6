#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gordon/hilbert.hpp>
#include <gordon/partitions.hpp>
#include <gordon/products.hpp>
#include <gordon/recursions.hpp>

using gordon::CoefficientFamily;
using gordon::Flavor;
using gordon::GordonParams;
using gordon::TruncatedSeries;

namespace
{

TruncatedSeries q_pow(std::size_t k, std::size_t N)
{
    return TruncatedSeries::monomial(k, N);
}

template <typename F>
void for_grid(int r_max, int J_max, F &&f)
{
    for (int r = 2; r <= r_max; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int J = 0; J <= J_max; ++J) {
                f(GordonParams(r, i, J));
            }
        }
    }
}

} // namespace

TEST_CASE("family_init")
{
    const std::size_t N = 8;
    const auto b = gordon::family_init(Flavor::B_family, GordonParams(3, 2, 0), N);
    CHECK(b.stage == 1);
    CHECK(b.entries == std::vector<TruncatedSeries>{q_pow(0, N), q_pow(1, N), TruncatedSeries::zero(N)});

    // ell = 2 keeps entries j <= r - ell + 1 = 2.
    const auto a = gordon::family_init(Flavor::A_family, GordonParams(3, 2, 0), N);
    CHECK(a.entries == b.entries);

    const auto full = gordon::family_init(Flavor::B_family, GordonParams(4, 4, 1), N);
    CHECK(full.stage == 2);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(full.entries[j] == q_pow(2 * j, N));
    }
}

TEST_CASE("family_step")
{
    const std::size_t N = 8;
    const auto next = gordon::family_step(gordon::family_init(Flavor::B_family, GordonParams(3, 2, 0), N));
    CHECK(next.stage == 2);
    CHECK(next.entries[0] == TruncatedSeries{1, 1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(next.entries[1] == TruncatedSeries{0, 0, 1, 1, 0, 0, 0, 0, 0});
    CHECK(next.entries[2] == TruncatedSeries{0, 0, 0, 0, 1, 0, 0, 0, 0});
}

TEST_CASE("first and last entries after a step")
{
    for_grid(5, 2, [](const GordonParams &p) {
        auto f = gordon::family_init(Flavor::B_family, p, 30);
        for (int step = 0; step < 5; ++step) {
            const auto next = gordon::family_step(f);
            auto total = TruncatedSeries::zero(30);
            for (const auto &e : f.entries) {
                total += e;
            }
            CHECK(next.entries.front() == total);
            const auto shift = static_cast<std::size_t>(next.stage) * static_cast<std::size_t>(p.r() - 1);
            CHECK(next.entries.back() == f.entries.front().shifted(shift));
            f = next;
        }
    });
}

TEST_CASE("family_limit")
{
    const GordonParams rr(2, 2, 0);
    CHECK(gordon::family_limit(Flavor::B_family, rr, 5) == TruncatedSeries{1, 1, 1, 1, 2, 2});
    CHECK(gordon::family_limit(Flavor::B_family, rr, 5) == gordon::hp_series({2, 1, 2}, 5));
    CHECK(gordon::family_limit(Flavor::A_family, rr, 5) == TruncatedSeries{1, 1, 1, 1, 2, 2});
    for_grid(4, 2, [](const GordonParams &p) {
        CHECK(gordon::family_limit(Flavor::A_family, p, 0) == TruncatedSeries{1});
        CHECK(gordon::family_limit(Flavor::B_family, p, 0) == TruncatedSeries{1});
    });
}

TEST_CASE("family limits reproduce the Hilbert and product series")
{
    for_grid(5, 3, [](const GordonParams &p) {
        const std::size_t N = 40;
        const auto b = gordon::family_limit_with_stage(Flavor::B_family, p, N);
        const auto a = gordon::family_limit_with_stage(Flavor::A_family, p, N);
        CHECK(b.stage <= p.J() + static_cast<int>(N) + 2);
        CHECK(a.stage <= p.J() + static_cast<int>(N) + 2);
        CHECK(b.series == gordon::hp_series({p.r(), p.J() + 1, p.i()}, N));
        CHECK(a.series == gordon::series_A(gordon::AIndex(p.r(), (p.r() - 1) * p.J() + p.ell()), N));
    });
}

TEST_CASE("entry 1 is stage-independent past the stabilization bound")
{
    for_grid(4, 2, [](const GordonParams &p) {
        const std::size_t N = 20;
        const auto limit = gordon::family_limit(Flavor::B_family, p, N);
        const int bound = p.J() + static_cast<int>(N) + 1;
        auto f = gordon::family_at_stage(Flavor::B_family, p, bound + 1, N);
        for (int extra = 0; extra < 4; ++extra) {
            CHECK(f.entries.front() == limit);
            f = gordon::family_step(f);
        }
    });
}

TEST_CASE("verify_lemma24")
{
    CHECK(gordon::verify_lemma24(GordonParams(3, 2, 0), 10, 30));
    CHECK(gordon::verify_lemma24(GordonParams(2, 1, 2), 10, 30));
    CHECK(gordon::verify_lemma24(GordonParams(4, 3, 1), 2, 30));
    CHECK_THROWS_AS(gordon::verify_lemma24(GordonParams(4, 3, 2), 2, 30), std::invalid_argument);
}

TEST_CASE("verify_expansion")
{
    CHECK(gordon::verify_expansion(GordonParams(2, 2, 0), 3, 30));
    CHECK(gordon::verify_expansion(GordonParams(3, 1, 1), 2, 30));
    CHECK(gordon::verify_expansion(GordonParams(5, 2, 3), 4, 0));
    CHECK_THROWS_AS(gordon::verify_expansion(GordonParams(3, 1, 1), 1, 30), std::invalid_argument);
}

TEST_CASE("valuation ladder and non-negative coefficients")
{
    for_grid(5, 3, [](const GordonParams &p) {
        for (auto flavor : {Flavor::A_family, Flavor::B_family}) {
            auto f = gordon::family_init(flavor, p, 40);
            for (int step = 0; step < 15; ++step) {
                f = gordon::family_step(f);
                CHECK(gordon::valuation_ladder_holds(f));
                for (const auto &e : f.entries) {
                    for (const auto &c : e.coeffs()) {
                        CHECK(c >= 0);
                    }
                }
            }
        }
    });
}

TEST_CASE("a broken ladder is detected")
{
    auto f = gordon::family_at_stage(Flavor::B_family, GordonParams(3, 3, 0), 3, 20);
    CHECK(gordon::valuation_ladder_holds(f));
    f.entries[1] = TruncatedSeries::one(20);
    CHECK_FALSE(gordon::valuation_ladder_holds(f));
}

TEST_CASE("family json dump")
{
    const auto f = gordon::family_init(Flavor::B_family, GordonParams(2, 1, 0), 2);
    CHECK(gordon::family_to_json(f).dump()
          == R"({"J":0,"entries":[{"coeffs":["1","0","0"],"order":2},{"coeffs":["0","0","0"],"order":2}],)"
             R"("flavor":"B_family","i":1,"r":2,"stage":1})");
}
