#include <gordon/partitions.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace gordon
{

namespace
{

void require_non_negative(int n, const char *what)
{
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + " must be non-negative");
    }
}

// Calls visit(parts) for every partition of n, lexicographically decreasing.
template <typename Visitor>
void for_each_partition(int n, Visitor &&visit)
{
    std::vector<int> parts;
    auto rec = [&](auto &&self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

} // namespace

GordonParams::GordonParams(int r, int i, int J) : m_r(r), m_i(i), m_J(J)
{
    if (r < 2) {
        throw std::invalid_argument("r must be at least 2 (got " + std::to_string(r) + ")");
    }
    if (i < 1 || i > r) {
        throw std::invalid_argument("i must lie in 1.." + std::to_string(r) + " (got " + std::to_string(i) + ")");
    }
    if (J < 0) {
        throw std::invalid_argument("J must be non-negative (got " + std::to_string(J) + ")");
    }
}

std::string GordonParams::to_string() const
{
    return "r=" + std::to_string(m_r) + " i=" + std::to_string(m_i) + " J=" + std::to_string(m_J)
           + " ell=" + std::to_string(ell());
}

Partition::Partition(std::vector<int> parts) : m_parts(std::move(parts))
{
    for (std::size_t k = 0; k < m_parts.size(); ++k) {
        if (m_parts[k] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (k > 0 && m_parts[k] > m_parts[k - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
}

long long Partition::weight() const noexcept
{
    return std::accumulate(m_parts.begin(), m_parts.end(), 0LL);
}

bool satisfies_gordon(const Partition &p, const GordonParams &params)
{
    const auto &parts = p.parts();
    const int J = params.J();
    if (!parts.empty() && parts.back() <= J) {
        return false;
    }
    const auto at_floor = std::count(parts.begin(), parts.end(), J + 1);
    if (at_floor > params.i() - 1) {
        return false;
    }
    const auto span = static_cast<std::size_t>(params.r() - 1);
    for (std::size_t m = 0; m + span < parts.size(); ++m) {
        if (parts[m] - parts[m + span] < 2) {
            return false;
        }
    }
    return true;
}

std::vector<Partition> enumerate_gordon(const GordonParams &params, int n)
{
    require_non_negative(n, "n");
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int> &parts) {
        Partition p(parts);
        if (satisfies_gordon(p, params)) {
            out.push_back(std::move(p));
        }
    });
    return out;
}

Integer count_gordon(const GordonParams &params, int n)
{
    require_non_negative(n, "n");
    if (n == 0) {
        return 1;
    }
    const int r = params.r();
    const int first = params.J() + 1;
    if (first > n) {
        return 0;
    }
    // State: part value a, multiplicity chosen for a - 1, remaining weight.
    // Adjacent multiplicities satisfy f_{a-1} + f_a <= r - 1.
    const int values = n - first + 1;
    std::vector<std::optional<Integer>> memo(static_cast<std::size_t>(values) * r * (n + 1));
    auto slot = [&](int a, int prev, int rem) -> std::optional<Integer> & {
        return memo[(static_cast<std::size_t>(a - first) * r + prev) * (n + 1) + rem];
    };
    auto rec = [&](auto &&self, int a, int prev, int rem) -> Integer {
        if (rem == 0) {
            return 1;
        }
        if (a > rem) {
            return 0;
        }
        auto &cached = slot(a, prev, rem);
        if (cached) {
            return *cached;
        }
        int cap = std::min(r - 1 - prev, rem / a);
        if (a == first) {
            cap = std::min(cap, params.i() - 1);
        }
        Integer total = 0;
        for (int f = 0; f <= cap; ++f) {
            total += self(self, a + 1, f, rem - f * a);
        }
        cached = total;
        return total;
    };
    return rec(rec, first, 0, n);
}

TruncatedSeries genfun_B(const GordonParams &params, std::size_t N)
{
    std::vector<Integer> coeffs;
    coeffs.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        coeffs.push_back(count_gordon(params, static_cast<int>(n)));
    }
    return TruncatedSeries(std::move(coeffs));
}

bool modular_part_allowed(int r, int i, int m)
{
    const int mod = 2 * r + 1;
    const int res = m % mod;
    return res != 0 && res != i && res != mod - i;
}

Integer count_modular(int r, int i, int n)
{
    // Validates r and i.
    GordonParams{r, i, 0};
    require_non_negative(n, "n");
    std::vector<Integer> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (int m = 1; m <= n; ++m) {
        if (!modular_part_allowed(r, i, m)) {
            continue;
        }
        for (int w = m; w <= n; ++w) {
            ways[w] += ways[w - m];
        }
    }
    return ways[n];
}

void to_json(nlohmann::json &j, const Partition &p)
{
    j = p.parts();
}

void from_json(const nlohmann::json &j, Partition &p)
{
    p = Partition(j.get<std::vector<int>>());
}

} // namespace gordon
