// Product-side series: the congruence products A_1..A_r and their recursive
// extension to A_{(r-1)g+i}.

#ifndef GORDON_PRODUCTS_HPP
#define GORDON_PRODUCTS_HPP

#include <cstddef>
#include <vector>

#include <gordon/qseries.hpp>

namespace gordon
{

// A positive index into the product family, decomposed canonically as
// index = (r-1)g + i with g = 0, 1 <= i <= r for index <= r and g >= 1,
// 2 <= i <= r otherwise.
class AIndex
{
public:
    // Throws std::invalid_argument if r < 2 or index < 1.
    AIndex(int r, int index);

    int r() const noexcept { return m_r; }
    int index() const noexcept { return m_index; }
    int level() const noexcept { return m_level; }
    int offset() const noexcept { return m_offset; }

private:
    int m_r;
    int m_index;
    int m_level;
    int m_offset;
};

// prod over m >= 1 with m not congruent to 0, +-(r - ell + 1) mod 2r + 1 of 1/(1 - q^m).
TruncatedSeries series_A_base(int r, int ell, std::size_t N);

// Every series A_1 .. A_{(r-1)g_max + r} at order N; element k holds A_{k+1}.
// Intermediates are carried at a padded order so that all shift-divisions
// leave at least N + 1 coefficients. Propagates NonDivisible.
std::vector<TruncatedSeries> series_A_levels(int r, int g_max, std::size_t N);

TruncatedSeries series_A(const AIndex &idx, std::size_t N);

// Valuations of A_{(r-1)(d+1)+1} - 1 at order N for d = 1..d_max.
std::vector<Valuation> tail_valuation_profile(int r, int d_max, std::size_t N);

} // namespace gordon

#endif
