// Partitions subject to the Gordon conditions, and congruence-restricted partitions.

#ifndef GORDON_PARTITIONS_HPP
#define GORDON_PARTITIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gordon/qseries.hpp>

namespace gordon
{

// The triple (r, i, J) with r >= 2, 1 <= i <= r, J >= 0. ell = r - i + 1.
class GordonParams
{
public:
    // Throws std::invalid_argument outside the valid ranges.
    GordonParams(int r, int i, int J);

    int r() const noexcept { return m_r; }
    int i() const noexcept { return m_i; }
    int J() const noexcept { return m_J; }
    int ell() const noexcept { return m_r - m_i + 1; }

    std::string to_string() const;

    friend bool operator==(const GordonParams &, const GordonParams &) = default;

private:
    int m_r;
    int m_i;
    int m_J;
};

// A non-increasing sequence of positive parts.
class Partition
{
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return m_parts; }
    std::size_t size() const noexcept { return m_parts.size(); }
    long long weight() const noexcept;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> m_parts;
};

// Gap condition lambda_m - lambda_{m+r-1} >= 2, all parts > J, and at most
// i - 1 parts equal to J + 1.
bool satisfies_gordon(const Partition &p, const GordonParams &params);

// Brute force: every partition of n filtered by satisfies_gordon, in
// lexicographically decreasing order. Intended for n <= 30.
std::vector<Partition> enumerate_gordon(const GordonParams &params, int n);

// B_{r,i,J}(n) by a dynamic program over part multiplicities.
Integer count_gordon(const GordonParams &params, int n);

// Generating function of count_gordon to order N.
TruncatedSeries genfun_B(const GordonParams &params, std::size_t N);

// Whether a part m avoids the residues 0 and +-i modulo 2r + 1.
bool modular_part_allowed(int r, int i, int m);

// Number of partitions of n into parts not congruent to 0 or +-i mod 2r + 1.
// Throws std::invalid_argument unless r >= 2 and 1 <= i <= r.
Integer count_modular(int r, int i, int n);

void to_json(nlohmann::json &, const Partition &);
void from_json(const nlohmann::json &, Partition &);

} // namespace gordon

#endif
