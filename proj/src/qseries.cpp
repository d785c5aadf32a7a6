#include <gordon/qseries.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace gordon
{

NonDivisible::NonDivisible(std::size_t shift, std::size_t exponent)
    : std::domain_error("series is not divisible by q^" + std::to_string(shift) + ": coefficient of q^"
                        + std::to_string(exponent) + " is nonzero"),
      m_shift(shift), m_exponent(exponent)
{
}

std::string Valuation::to_string() const
{
    return is_infinite() ? std::string("inf") : std::to_string(value());
}

std::ostream &operator<<(std::ostream &os, const Valuation &v)
{
    return os << v.to_string();
}

TruncatedSeries::TruncatedSeries() : m_coeffs(1) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long long> coeffs)
    : TruncatedSeries(std::vector<Integer>(coeffs.begin(), coeffs.end()))
{
}

TruncatedSeries TruncatedSeries::zero(std::size_t order)
{
    return TruncatedSeries(std::vector<Integer>(order + 1));
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    return monomial(0, order);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, std::size_t order)
{
    auto s = zero(order);
    if (k <= order) {
        s.m_coeffs[k] = 1;
    }
    return s;
}

TruncatedSeries TruncatedSeries::geom_inverse(std::size_t m, std::size_t order)
{
    if (m == 0) {
        throw std::invalid_argument("geom_inverse: m must be positive");
    }
    auto s = zero(order);
    for (std::size_t n = 0; n <= order; n += m) {
        s.m_coeffs[n] = 1;
    }
    return s;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Integer &c) { return c.is_zero(); });
}

Valuation TruncatedSeries::valuation() const
{
    for (std::size_t n = 0; n < m_coeffs.size(); ++n) {
        if (!m_coeffs[n].is_zero()) {
            return Valuation(n);
        }
    }
    return Valuation::infinite();
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw std::out_of_range("truncated: requested order " + std::to_string(order) + " exceeds "
                                + std::to_string(this->order()));
    }
    return TruncatedSeries(std::vector<Integer>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const
{
    auto s = zero(order());
    for (std::size_t n = k; n <= order(); ++n) {
        s.m_coeffs[n] = m_coeffs[n - k];
    }
    return s;
}

TruncatedSeries TruncatedSeries::shift_div(std::size_t k) const
{
    if (k > order()) {
        throw std::out_of_range("shift_div: shift " + std::to_string(k) + " exceeds order " + std::to_string(order()));
    }
    for (std::size_t n = 0; n < k; ++n) {
        if (!m_coeffs[n].is_zero()) {
            throw NonDivisible(k, n);
        }
    }
    return TruncatedSeries(std::vector<Integer>(m_coeffs.begin() + static_cast<std::ptrdiff_t>(k), m_coeffs.end()));
}

TruncatedSeries &TruncatedSeries::divide_by_one_minus_q_pow(std::size_t m)
{
    if (m == 0) {
        throw std::invalid_argument("divide_by_one_minus_q_pow: m must be positive");
    }
    for (std::size_t n = m; n < m_coeffs.size(); ++n) {
        m_coeffs[n] += m_coeffs[n - m];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other)
{
    m_coeffs.resize(std::min(m_coeffs.size(), other.m_coeffs.size()));
    for (std::size_t n = 0; n < m_coeffs.size(); ++n) {
        m_coeffs[n] += other.m_coeffs[n];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other)
{
    m_coeffs.resize(std::min(m_coeffs.size(), other.m_coeffs.size()));
    for (std::size_t n = 0; n < m_coeffs.size(); ++n) {
        m_coeffs[n] -= other.m_coeffs[n];
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto order = std::min(a.order(), b.order());
    auto out = TruncatedSeries::zero(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            out.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return out;
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t n = 0; n < m_coeffs.size(); ++n) {
        if (n != 0) {
            os << ',';
        }
        os << m_coeffs[n];
    }
    os << ']';
    return os.str();
}

bool agree(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return !first_mismatch(a, b).has_value();
}

std::optional<std::size_t> first_mismatch(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto order = std::min(a.order(), b.order());
    for (std::size_t n = 0; n <= order; ++n) {
        if (a[n] != b[n]) {
            return n;
        }
    }
    return std::nullopt;
}

std::uint64_t fingerprint(const TruncatedSeries &s)
{
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    };
    for (const auto &c : s.coeffs()) {
        for (char ch : c.str()) {
            mix(ch);
        }
        mix(',');
    }
    return h;
}

std::string fingerprint_hex(const TruncatedSeries &s)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint(s)));
    return buf;
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    return os << s.to_string();
}

void to_json(nlohmann::json &j, const TruncatedSeries &s)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(c.str());
    }
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json &j, TruncatedSeries &s)
{
    const auto order = j.at("order").get<std::size_t>();
    const auto &coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1) {
        throw std::invalid_argument("series JSON: coeffs must hold order + 1 entries");
    }
    std::vector<Integer> values;
    values.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        values.emplace_back(c.get<std::string>());
    }
    s = TruncatedSeries(std::move(values));
}

} // namespace gordon
