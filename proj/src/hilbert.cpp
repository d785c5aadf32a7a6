#include <gordon/hilbert.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gordon
{

namespace
{

// Weight up to which verify_hp_notes also counts standard monomials of
// P_{r,i,J} exhaustively.
constexpr std::size_t kNoteOracleWeight = 12;

Monomial make_monomial(std::initializer_list<std::pair<int, int>> factors)
{
    Monomial m;
    for (const auto &[var, exp] : factors) {
        if (exp > 0) {
            m.emplace_back(var, exp);
        }
    }
    return m;
}

void push_if_light(std::vector<Monomial> &out, Monomial m, std::size_t N)
{
    if (monomial_weight(m) <= static_cast<long long>(N)) {
        out.push_back(std::move(m));
    }
}

// x_a^{r-t} x_{a+1}^t for a >= first, 0 <= t <= r-1, weight at most N.
void push_pair_generators(std::vector<Monomial> &out, int r, int first, std::size_t N)
{
    for (int a = first; static_cast<long long>(a) * r <= static_cast<long long>(N); ++a) {
        for (int t = 0; t <= r - 1; ++t) {
            push_if_light(out, make_monomial({{a, r - t}, {a + 1, t}}), N);
        }
    }
}

bool divides(const Monomial &gen, const std::vector<int> &freq, int k)
{
    for (const auto &[var, exp] : gen) {
        const auto slot = static_cast<std::size_t>(var - k);
        if (slot >= freq.size() || freq[slot] < exp) {
            return false;
        }
    }
    return true;
}

std::vector<Monomial> sorted(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end());
    return gens;
}

} // namespace

void QuotientSpec::validate() const
{
    if (r < 2) {
        throw std::invalid_argument("quotient: r must be at least 2");
    }
    if (k < 1) {
        throw std::invalid_argument("quotient: k must be at least 1");
    }
    if (cap && (*cap < 1 || *cap > r)) {
        throw std::invalid_argument("quotient: cap must lie in 1..r");
    }
}

long long monomial_weight(const Monomial &m)
{
    long long w = 0;
    for (const auto &[var, exp] : m) {
        w += static_cast<long long>(var) * exp;
    }
    return w;
}

MonomialIdealSpec expand_generators(const QuotientSpec &spec, std::size_t N)
{
    spec.validate();
    MonomialIdealSpec ideal{spec.k, N, {}};
    const int r = spec.r;
    const int k = spec.k;
    if (spec.cap) {
        const int ell = *spec.cap;
        push_if_light(ideal.generators, make_monomial({{k, ell}}), N);
        for (int s = 1; s <= ell - 1; ++s) {
            push_if_light(ideal.generators, make_monomial({{k, ell - s}, {k + 1, r - ell + s}}), N);
        }
        push_pair_generators(ideal.generators, r, k + 1, N);
    } else {
        push_pair_generators(ideal.generators, r, k, N);
    }
    return ideal;
}

MonomialIdealSpec gordon_ideal(const GordonParams &params, std::size_t N)
{
    const int r = params.r();
    const int i = params.i();
    const int low = params.J() + 1;
    MonomialIdealSpec ideal{low, N, {}};
    // x_{J+1}^i, x_{J+1}^{i-1} x_{J+2}^{r-i+1}, ..., x_{J+1} x_{J+2}^{r-1}
    push_if_light(ideal.generators, make_monomial({{low, i}}), N);
    for (int e = i - 1; e >= 1; --e) {
        push_if_light(ideal.generators, make_monomial({{low, e}, {low + 1, r - e}}), N);
    }
    push_pair_generators(ideal.generators, r, low + 1, N);
    return ideal;
}

Integer standard_monomial_count(const MonomialIdealSpec &ideal, std::size_t n)
{
    if (n > ideal.weight_bound) {
        throw std::invalid_argument("standard_monomial_count: weight " + std::to_string(n)
                                    + " exceeds the ideal's weight bound " + std::to_string(ideal.weight_bound));
    }
    const int k = ideal.k;
    const int total = static_cast<int>(n);
    // freq[v - k] is the exponent of x_v.
    std::vector<int> freq(static_cast<std::size_t>(std::max(total - k + 1, 0)), 0);
    Integer count = 0;
    auto rec = [&](auto &&self, int remaining, int max_var) -> void {
        if (remaining == 0) {
            const bool standard = std::none_of(ideal.generators.begin(), ideal.generators.end(),
                                               [&](const Monomial &g) { return divides(g, freq, k); });
            if (standard) {
                ++count;
            }
            return;
        }
        for (int v = std::min(remaining, max_var); v >= k; --v) {
            ++freq[static_cast<std::size_t>(v - k)];
            self(self, remaining - v, v);
            --freq[static_cast<std::size_t>(v - k)];
        }
    };
    rec(rec, total, total);
    return count;
}

TruncatedSeries hp_series(const QuotientSpec &spec, std::size_t N)
{
    spec.validate();
    const int r = spec.r;
    const auto r_sz = static_cast<std::size_t>(r);
    // by_last[c]: series of admissible monomials in the variables processed so
    // far whose last variable has exponent c.
    std::vector<TruncatedSeries> by_last(r_sz, TruncatedSeries::zero(N));
    by_last[0] = TruncatedSeries::one(N);
    for (std::size_t a = static_cast<std::size_t>(spec.k); a <= N; ++a) {
        int max_exp = r - 1;
        if (spec.cap && a == static_cast<std::size_t>(spec.k)) {
            max_exp = *spec.cap - 1;
        }
        std::vector<TruncatedSeries> next(r_sz, TruncatedSeries::zero(N));
        for (int f = 0; f <= max_exp && a * static_cast<std::size_t>(f) <= N; ++f) {
            TruncatedSeries allowed = TruncatedSeries::zero(N);
            for (int c = 0; c + f <= r - 1; ++c) {
                allowed += by_last[static_cast<std::size_t>(c)];
            }
            next[static_cast<std::size_t>(f)] = allowed.shifted(a * static_cast<std::size_t>(f));
        }
        by_last = std::move(next);
    }
    auto total = TruncatedSeries::zero(N);
    for (const auto &s : by_last) {
        total += s;
    }
    return total;
}

bool verify_hp_notes(int r, int k, std::size_t N)
{
    // N1
    if (!agree(hp_series({r, k, 1}, N), hp_series({r, k + 1, std::nullopt}, N))) {
        return false;
    }
    // N2
    if (!agree(hp_series({r, k, r}, N), hp_series({r, k, std::nullopt}, N))) {
        return false;
    }
    // N3: P_{r,i,k-1} coincides with P_k^i, so both quotients share one series.
    const auto oracle_weight = std::min(N, kNoteOracleWeight);
    for (int i = 1; i <= r; ++i) {
        const auto literal = gordon_ideal(GordonParams{r, i, k - 1}, N);
        const auto capped = expand_generators({r, k, i}, N);
        if (literal.k != capped.k || sorted(literal.generators) != sorted(capped.generators)) {
            return false;
        }
        const auto hp = hp_series({r, k, i}, N);
        for (std::size_t n = 0; n <= oracle_weight; ++n) {
            if (standard_monomial_count(literal, n) != hp[n]) {
                return false;
            }
        }
    }
    return true;
}

bool verify_lemma21(int r, int k, int ell, std::size_t N)
{
    const auto lhs = hp_series({r, k, ell}, N);
    auto rhs = TruncatedSeries::zero(N);
    for (int j = 1; j <= ell; ++j) {
        const auto shift = static_cast<std::size_t>(k) * static_cast<std::size_t>(j - 1);
        rhs += hp_series({r, k + 1, r - j + 1}, N).shifted(shift);
    }
    return agree(lhs, rhs);
}

nlohmann::json ideal_to_json(const MonomialIdealSpec &ideal)
{
    auto out = nlohmann::json::array();
    for (const auto &gen : ideal.generators) {
        auto g = nlohmann::json::array();
        for (const auto &[var, exp] : gen) {
            g.push_back({var, exp});
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace gordon
