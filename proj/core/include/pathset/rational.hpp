#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathset/core.hpp"

namespace pathset {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(BigInt numerator, BigInt denominator = 1);  // NOLINT(google-explicit-constructor)
    Rational(long long value) : Rational(BigInt(value)) {}  // NOLINT(google-explicit-constructor)

    /// Parses "a" or "a/b" (optionally signed). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_p_integral(int p) const { return den_ % p != 0; }
    /// "a" when the denominator is 1, else "a/b".
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }
    bool operator==(const Rational&) const = default;

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

/// Eventually periodic digit stream: preperiod digits followed by the period
/// repeated forever, least significant digit first.
struct RationalExpansion {
    int p = 2;
    std::vector<Digit> preperiod;
    std::vector<Digit> period{0};

    /// Exact value sum(pre_j p^j) + p^Q0 * sum(per_j p^j) / (1 - p^Q).
    Rational value() const;
    /// Digit at position i of the infinite stream.
    Digit digit(std::size_t i) const;
    bool operator==(const RationalExpansion&) const = default;
};

/// Throws Error{NotPIntegral} when p divides the denominator.
RationalExpansion p_adic_digits(const Rational& r, int p);

/// Brings an expansion to its unique shortest (preperiod, period) form.
RationalExpansion normalize_expansion(RationalExpansion exp);

/// Chain of preperiod vertices feeding a cycle of period vertices.
Presentation singleton_presentation(const RationalExpansion& exp);
Presentation singleton_presentation(const Rational& r, int p);

/// The rational r when the handle denotes exactly {r}; nullopt otherwise
/// (including the empty set).
std::optional<Rational> recognize_singleton(const PathSetHandle& handle);

/// v_p(n) for n != 0.
int p_valuation(const BigInt& n, int p);

}  // namespace pathset
