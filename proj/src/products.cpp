#include <gordon/products.hpp>

#include <stdexcept>
#include <string>

#include <gordon/partitions.hpp>

namespace gordon
{

AIndex::AIndex(int r, int index) : m_r(r), m_index(index)
{
    if (r < 2) {
        throw std::invalid_argument("r must be at least 2");
    }
    if (index < 1) {
        throw std::invalid_argument("product index must be positive (got " + std::to_string(index) + ")");
    }
    if (index == 1) {
        m_level = 0;
        m_offset = 1;
    } else {
        m_level = (index - 2) / (r - 1);
        m_offset = index - (r - 1) * m_level;
    }
}

TruncatedSeries series_A_base(int r, int ell, std::size_t N)
{
    if (r < 2 || ell < 1 || ell > r) {
        throw std::invalid_argument("series_A_base: need r >= 2 and 1 <= ell <= r");
    }
    const int excluded = r - ell + 1;
    auto s = TruncatedSeries::one(N);
    for (std::size_t m = 1; m <= N; ++m) {
        if (modular_part_allowed(r, excluded, static_cast<int>(m))) {
            s.divide_by_one_minus_q_pow(m);
        }
    }
    return s;
}

std::vector<TruncatedSeries> series_A_levels(int r, int g_max, std::size_t N)
{
    if (r < 2 || g_max < 0) {
        throw std::invalid_argument("series_A_levels: need r >= 2 and g_max >= 0");
    }
    const auto r_sz = static_cast<std::size_t>(r);
    // Level g divides by at most q^{g(r-1)}.
    std::size_t padded = N;
    for (int g = 1; g <= g_max; ++g) {
        padded += static_cast<std::size_t>(g) * (r_sz - 1);
    }

    std::vector<TruncatedSeries> level;
    level.reserve(r_sz);
    for (int ell = 1; ell <= r; ++ell) {
        level.push_back(series_A_base(r, ell, padded));
    }

    std::vector<TruncatedSeries> all;
    all.reserve(r_sz + static_cast<std::size_t>(g_max) * (r_sz - 1));
    for (const auto &s : level) {
        all.push_back(s.truncated(N));
    }

    for (int g = 1; g <= g_max; ++g) {
        std::vector<TruncatedSeries> next;
        next.reserve(r_sz);
        // A_{(r-1)g+1} = A_{(r-1)(g-1)+r}.
        next.push_back(level[r_sz - 1]);
        for (int i = 2; i <= r; ++i) {
            // (A_{(r-1)(g-1)+r-i+1} - A_{(r-1)(g-1)+r-i+2}) / q^{g(i-1)}
            const auto &lhs = level[static_cast<std::size_t>(r - i)];
            const auto &rhs = level[static_cast<std::size_t>(r - i + 1)];
            next.push_back((lhs - rhs).shift_div(static_cast<std::size_t>(g * (i - 1))));
        }
        level = std::move(next);
        for (std::size_t j = 1; j < r_sz; ++j) {
            all.push_back(level[j].truncated(N));
        }
    }
    return all;
}

TruncatedSeries series_A(const AIndex &idx, std::size_t N)
{
    if (idx.level() == 0) {
        return series_A_base(idx.r(), idx.offset(), N);
    }
    auto all = series_A_levels(idx.r(), idx.level(), N);
    return std::move(all[static_cast<std::size_t>(idx.index() - 1)]);
}

std::vector<Valuation> tail_valuation_profile(int r, int d_max, std::size_t N)
{
    if (d_max < 1) {
        throw std::invalid_argument("tail_valuation_profile: d_max must be at least 1");
    }
    // Index (r-1)(d+1)+1 sits at level d+1, offset 1 (equal to level d, offset r).
    auto all = series_A_levels(r, d_max, N);
    const auto one = TruncatedSeries::one(N);
    std::vector<Valuation> out;
    out.reserve(static_cast<std::size_t>(d_max));
    for (int d = 1; d <= d_max; ++d) {
        const auto index = static_cast<std::size_t>((r - 1) * (d + 1) + 1);
        out.push_back((all[index - 1] - one).valuation());
    }
    return out;
}

} // namespace gordon
