// Stage-indexed coefficient families.
//
// At stage d >= J+1 a family holds r series; entry j (1-based) multiplies
// HP_{r-j+1}^{d+1} (B-family) or A_{(r-1)d+j} (A-family) in the expansion of
// the target series. Stepping from d to d+1:
//
//     entry_j <- q^{(d+1)(j-1)} * sum_{m=1}^{r-j+1} entry_m
//
// The two flavours differ only in their initial conditions. Entries j >= 2
// at stage d have valuation >= d(j-1), so entry 1 converges q-adically.

#ifndef GORDON_RECURSIONS_HPP
#define GORDON_RECURSIONS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

namespace gordon
{

enum class Flavor { A_family, B_family };

std::string_view to_string(Flavor);

struct CoefficientFamily {
    Flavor flavor;
    GordonParams params;
    int stage;
    std::size_t order;
    std::vector<TruncatedSeries> entries;
};

// Stage J+1. B-family: entry j = q^{(J+1)(j-1)} for j <= i, else 0.
// A-family: entry j = q^{(J+1)(j-1)} for j <= r - ell + 1, else 0.
CoefficientFamily family_init(Flavor flavor, const GordonParams &params, std::size_t N);

CoefficientFamily family_step(const CoefficientFamily &f);

struct FamilyLimit {
    TruncatedSeries series;
    // First stage at which entry 1 is frozen modulo q^{N+1}.
    int stage;
};

// Steps until, at some stage past J+1, entries 2..r vanish at order N
// (after which entry 1 can no longer change). Never goes past stage J + N + 2; throws std::logic_error
// if stabilization has not happened by then.
FamilyLimit family_limit_with_stage(Flavor flavor, const GordonParams &params, std::size_t N);

TruncatedSeries family_limit(Flavor flavor, const GordonParams &params, std::size_t N);

// A-family (keyed by ell) and B-family (keyed by i) agree entrywise at every
// stage J+1..d_max. Throws std::invalid_argument if d_max < J+1.
bool verify_lemma24(const GordonParams &params, int d_max, std::size_t N);

// Both expansions at stage d, order N:
//   HP_i^{J+1}       = sum_j B_j(d) HP_{r-j+1}^{d+1}
//   A_{(r-1)J+ell}   = sum_j A_j(d) A_{(r-1)d+j}
// Throws std::invalid_argument if d < J+1.
bool verify_expansion(const GordonParams &params, int d, std::size_t N);

// Entry j >= 2 has valuation >= stage * (j-1), checked for stages >= J+2.
bool valuation_ladder_holds(const CoefficientFamily &f);

// Advances a fresh family of the given flavour to stage d.
CoefficientFamily family_at_stage(Flavor flavor, const GordonParams &params, int d, std::size_t N);

// {"flavor", "r", "i", "J", "stage", "entries": [series...]}
nlohmann::json family_to_json(const CoefficientFamily &);

} // namespace gordon

#endif
