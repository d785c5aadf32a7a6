#include <gordon/recursions.hpp>

#include <stdexcept>
#include <string>

#include <gordon/hilbert.hpp>
#include <gordon/products.hpp>

namespace gordon
{

std::string_view to_string(Flavor flavor)
{
    return flavor == Flavor::A_family ? "A_family" : "B_family";
}

CoefficientFamily family_init(Flavor flavor, const GordonParams &params, std::size_t N)
{
    const int r = params.r();
    const int stage = params.J() + 1;
    const int nonzero = flavor == Flavor::B_family ? params.i() : r - params.ell() + 1;
    CoefficientFamily f{flavor, params, stage, N, {}};
    f.entries.reserve(static_cast<std::size_t>(r));
    for (int j = 1; j <= r; ++j) {
        if (j <= nonzero) {
            f.entries.push_back(TruncatedSeries::monomial(static_cast<std::size_t>(stage) * (j - 1), N));
        } else {
            f.entries.push_back(TruncatedSeries::zero(N));
        }
    }
    return f;
}

CoefficientFamily family_step(const CoefficientFamily &f)
{
    const int r = f.params.r();
    const auto next_stage = static_cast<std::size_t>(f.stage + 1);
    CoefficientFamily out{f.flavor, f.params, f.stage + 1, f.order, {}};
    out.entries.reserve(f.entries.size());
    // Prefix sums: entry j needs entries 1..r-j+1.
    std::vector<TruncatedSeries> prefix;
    prefix.reserve(f.entries.size());
    auto running = TruncatedSeries::zero(f.order);
    for (const auto &e : f.entries) {
        running += e;
        prefix.push_back(running);
    }
    for (int j = 1; j <= r; ++j) {
        const auto &sum = prefix[static_cast<std::size_t>(r - j)];
        out.entries.push_back(sum.shifted(next_stage * static_cast<std::size_t>(j - 1)));
    }
    return out;
}

CoefficientFamily family_at_stage(Flavor flavor, const GordonParams &params, int d, std::size_t N)
{
    if (d < params.J() + 1) {
        throw std::invalid_argument("stage " + std::to_string(d) + " precedes the initial stage J+1");
    }
    auto f = family_init(flavor, params, N);
    while (f.stage < d) {
        f = family_step(f);
    }
    return f;
}

FamilyLimit family_limit_with_stage(Flavor flavor, const GordonParams &params, std::size_t N)
{
    const long long bound = static_cast<long long>(params.J()) + static_cast<long long>(N) + 2;
    auto f = family_init(flavor, params, N);
    // Past the initial stage entry j >= 2 is q^{d(j-1)} times a series with
    // constant term >= 1, so once these vanish at order N they stay zero and
    // entry 1 is final. The initial stage may have zero entries that revive.
    auto frozen = [&params](const CoefficientFamily &fam) {
        if (fam.stage < params.J() + 2) {
            return false;
        }
        for (std::size_t j = 1; j < fam.entries.size(); ++j) {
            if (!fam.entries[j].is_zero()) {
                return false;
            }
        }
        return true;
    };
    while (!frozen(f)) {
        if (f.stage >= bound) {
            throw std::logic_error("coefficient family did not stabilize by stage J + N + 2");
        }
        f = family_step(f);
    }
    return {std::move(f.entries.front()), f.stage};
}

TruncatedSeries family_limit(Flavor flavor, const GordonParams &params, std::size_t N)
{
    return family_limit_with_stage(flavor, params, N).series;
}

bool verify_lemma24(const GordonParams &params, int d_max, std::size_t N)
{
    if (d_max < params.J() + 1) {
        throw std::invalid_argument("verify_lemma24: d_max must be at least J+1");
    }
    // The A-family is keyed by ell = r - i + 1; params already carries both.
    auto a = family_init(Flavor::A_family, params, N);
    auto b = family_init(Flavor::B_family, params, N);
    while (true) {
        if (a.entries != b.entries) {
            return false;
        }
        if (a.stage >= d_max) {
            return true;
        }
        a = family_step(a);
        b = family_step(b);
    }
}

bool verify_expansion(const GordonParams &params, int d, std::size_t N)
{
    if (d < params.J() + 1) {
        throw std::invalid_argument("verify_expansion: d must be at least J+1");
    }
    const int r = params.r();

    const auto b = family_at_stage(Flavor::B_family, params, d, N);
    const auto hp_target = hp_series({r, params.J() + 1, params.i()}, N);
    auto hp_sum = TruncatedSeries::zero(N);
    for (int j = 1; j <= r; ++j) {
        hp_sum += b.entries[static_cast<std::size_t>(j - 1)] * hp_series({r, d + 1, r - j + 1}, N);
    }
    if (!agree(hp_target, hp_sum)) {
        return false;
    }

    const auto a = family_at_stage(Flavor::A_family, params, d, N);
    // A_{(r-1)d+j} for j = 1..r lives at level d (j = 1 folds into level d-1).
    const auto products = series_A_levels(r, d, N);
    const auto &a_target = products[static_cast<std::size_t>((r - 1) * params.J() + params.ell() - 1)];
    auto a_sum = TruncatedSeries::zero(N);
    for (int j = 1; j <= r; ++j) {
        a_sum += a.entries[static_cast<std::size_t>(j - 1)] * products[static_cast<std::size_t>((r - 1) * d + j - 1)];
    }
    return agree(a_target, a_sum);
}

bool valuation_ladder_holds(const CoefficientFamily &f)
{
    if (f.stage < f.params.J() + 2) {
        return true;
    }
    for (std::size_t j = 2; j <= f.entries.size(); ++j) {
        const auto v = f.entries[j - 1].valuation();
        if (v < Valuation(static_cast<std::size_t>(f.stage) * (j - 1))) {
            return false;
        }
    }
    return true;
}

nlohmann::json family_to_json(const CoefficientFamily &f)
{
    return nlohmann::json{
        {"flavor", std::string(to_string(f.flavor))},
        {"r", f.params.r()},
        {"i", f.params.i()},
        {"J", f.params.J()},
        {"stage", f.stage},
        {"entries", f.entries},
    };
}

} // namespace gordon
