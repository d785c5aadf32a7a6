// Hilbert-Poincare series of the weight-graded quotients S_k / P_k and
// S_k / P_k^ell, where S_k = F[x_k, x_{k+1}, ...] and x_a has weight a.
//
// P_k is generated by x_a^{r-t} x_{a+1}^t (a >= k, 0 <= t <= r-1). P_k^ell
// adds the block x_k^ell, x_k^{ell-s} x_{k+1}^{r-ell+s} (1 <= s <= ell-1) to
// P_{k+1}. All ideals are monomial, so the dimension of a graded piece is the
// number of standard monomials of that weight.

#ifndef GORDON_HILBERT_HPP
#define GORDON_HILBERT_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

namespace gordon
{

struct QuotientSpec {
    int r;
    int k;
    // Absent: the ideal P_k. Present: P_k^ell with ell = *cap.
    std::optional<int> cap;

    // Throws std::invalid_argument if r < 2, k < 1 or cap outside 1..r.
    void validate() const;
};

// (variable index, exponent) pairs sorted by variable index.
using Monomial = std::vector<std::pair<int, int>>;

long long monomial_weight(const Monomial &);

struct MonomialIdealSpec {
    int k;
    // Only generators of weight <= weight_bound are retained.
    std::size_t weight_bound;
    std::vector<Monomial> generators;
};

MonomialIdealSpec expand_generators(const QuotientSpec &spec, std::size_t N);

// The ideal P_{r,i,J} of S_{J+1} built directly from its generator list.
MonomialIdealSpec gordon_ideal(const GordonParams &params, std::size_t N);

// Exhaustive count of weight-n monomials in x_k, x_{k+1}, ... divisible by no
// generator. Throws std::invalid_argument if n exceeds the ideal's weight bound.
Integer standard_monomial_count(const MonomialIdealSpec &ideal, std::size_t n);

// Hilbert-Poincare series to order N, by a dynamic program over the
// multiplicities of consecutive variables.
TruncatedSeries hp_series(const QuotientSpec &spec, std::size_t N);

// HP_1^k = HP^{k+1}, HP_r^k = HP^k, and P_{r,i,k-1} = P_k^i for every i.
bool verify_hp_notes(int r, int k, std::size_t N);

// HP_ell^k = sum_{j=1}^{ell} q^{k(j-1)} HP_{r-j+1}^{k+1} at order N.
bool verify_lemma21(int r, int k, int ell, std::size_t N);

// [[[index, exponent], ...], ...]
nlohmann::json ideal_to_json(const MonomialIdealSpec &);

} // namespace gordon

#endif
