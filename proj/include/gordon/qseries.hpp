// Truncated formal power series in q with exact integer coefficients.

#ifndef GORDON_QSERIES_HPP
#define GORDON_QSERIES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace gordon
{

using Integer = boost::multiprecision::cpp_int;

// Raised by shift_div when the low coefficients that would be discarded
// are not all zero.
class NonDivisible : public std::domain_error
{
public:
    NonDivisible(std::size_t shift, std::size_t exponent);

    std::size_t shift() const noexcept { return m_shift; }
    std::size_t exponent() const noexcept { return m_exponent; }

private:
    std::size_t m_shift;
    std::size_t m_exponent;
};

// q-adic valuation: a finite exponent, or Infinite for a (truncated) zero series.
class Valuation
{
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(std::size_t v) : m_value(v) {}

    static constexpr Valuation infinite() { return Valuation{}; }

    constexpr bool is_infinite() const { return !m_value.has_value(); }
    // Precondition: !is_infinite().
    constexpr std::size_t value() const { return *m_value; }

    friend constexpr bool operator==(const Valuation &, const Valuation &) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation &a, const Valuation &b)
    {
        // Infinite sorts above every finite exponent.
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.m_value <=> *b.m_value;
    }

    std::string to_string() const;

private:
    std::optional<std::size_t> m_value;
};

std::ostream &operator<<(std::ostream &, const Valuation &);

// A power series c_0 + c_1 q + ... + c_N q^N known modulo q^{N+1}.
// The order N is inclusive; the coefficient vector always has N + 1 entries.
class TruncatedSeries
{
public:
    // The zero series of order 0.
    TruncatedSeries();
    // Throws std::invalid_argument on an empty coefficient vector.
    explicit TruncatedSeries(std::vector<Integer> coeffs);
    TruncatedSeries(std::initializer_list<long long> coeffs);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries one(std::size_t order);
    // q^k truncated to the given order (the zero series when k > order).
    static TruncatedSeries monomial(std::size_t k, std::size_t order);
    // Expansion of 1 / (1 - q^m). Throws std::invalid_argument if m == 0.
    static TruncatedSeries geom_inverse(std::size_t m, std::size_t order);

    std::size_t order() const noexcept { return m_coeffs.size() - 1; }
    const Integer &operator[](std::size_t n) const { return m_coeffs[n]; }
    std::span<const Integer> coeffs() const noexcept { return m_coeffs; }

    bool is_zero() const;
    Valuation valuation() const;

    // Restriction to a lower order. Throws std::out_of_range if order > this->order().
    TruncatedSeries truncated(std::size_t order) const;
    // Multiplication by q^k, keeping the order.
    TruncatedSeries shifted(std::size_t k) const;
    // Exact division by q^k; the result has order order() - k.
    // Throws NonDivisible if any of c_0..c_{k-1} is nonzero and
    // std::out_of_range if k > order().
    TruncatedSeries shift_div(std::size_t k) const;
    // In-place multiplication by 1 / (1 - q^m), m >= 1.
    TruncatedSeries &divide_by_one_minus_q_pow(std::size_t m);

    TruncatedSeries &operator+=(const TruncatedSeries &);
    TruncatedSeries &operator-=(const TruncatedSeries &);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    // Truncated Cauchy product at order min(a.order(), b.order()).
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

    // Structural equality: same order and same coefficients.
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    std::string to_string() const;

private:
    std::vector<Integer> m_coeffs;
};

// True iff a and b agree on every exponent up to min(a.order(), b.order()).
bool agree(const TruncatedSeries &a, const TruncatedSeries &b);

// First exponent <= min order where a and b differ.
std::optional<std::size_t> first_mismatch(const TruncatedSeries &a, const TruncatedSeries &b);

// 64-bit FNV-1a over the decimal coefficient list; a compact identity for reports.
std::uint64_t fingerprint(const TruncatedSeries &);
std::string fingerprint_hex(const TruncatedSeries &);

std::ostream &operator<<(std::ostream &, const TruncatedSeries &);

// {"order": N, "coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
void to_json(nlohmann::json &, const TruncatedSeries &);
void from_json(const nlohmann::json &, TruncatedSeries &);

} // namespace gordon

#endif
