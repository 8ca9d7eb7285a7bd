#include "pathset/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "pathset/errors.hpp"
#include "pathset/graph.hpp"

namespace pathset {

namespace {

BigInt pow_big(int base, std::size_t exponent) {
    BigInt result = 1;
    for (std::size_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

// Least nonnegative residue of a mod m.
BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("missing digits in '" + std::string(text) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("bad integer '" + std::string(text) + "'");
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RationalExpansion::value() const {
    BigInt head = 0;
    for (std::size_t j = preperiod.size(); j-- > 0;) head = head * p + preperiod[j];
    BigInt cycle = 0;
    for (std::size_t j = period.size(); j-- > 0;) cycle = cycle * p + period[j];
    return Rational(head) + Rational(pow_big(p, preperiod.size()) * cycle, 1 - pow_big(p, period.size()));
}

Digit RationalExpansion::digit(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
}

RationalExpansion normalize_expansion(RationalExpansion exp) {
    if (exp.period.empty()) throw std::invalid_argument("expansion needs a nonempty period");
    const std::size_t q = exp.period.size();
    for (std::size_t t = 1; t < q; ++t) {
        if (q % t != 0) continue;
        bool repeats = true;
        for (std::size_t i = t; i < q && repeats; ++i) repeats = exp.period[i] == exp.period[i - t];
        if (repeats) {
            exp.period.resize(t);
            break;
        }
    }
    while (!exp.preperiod.empty() && exp.preperiod.back() == exp.period.back()) {
        std::rotate(exp.period.rbegin(), exp.period.rbegin() + 1, exp.period.rend());
        exp.preperiod.pop_back();
    }
    return exp;
}

RationalExpansion p_adic_digits(const Rational& r, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (!r.is_p_integral(p)) {
        throw Error(ErrorCode::NotPIntegral, r.to_string() + " is not " + std::to_string(p) + "-integral");
    }
    const BigInt& b = r.den();
    // b^{-1} mod p by Fermat.
    BigInt b_inv = boost::multiprecision::powm(mod_nonneg(b, p), BigInt(p - 2), BigInt(p));

    std::map<BigInt, std::size_t> first_seen;
    std::vector<Digit> digits;
    BigInt a = r.num();
    while (true) {
        auto [it, inserted] = first_seen.emplace(a, digits.size());
        if (!inserted) {
            RationalExpansion exp;
            exp.p = p;
            exp.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            exp.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return normalize_expansion(std::move(exp));
        }
        BigInt d = mod_nonneg(mod_nonneg(a, p) * b_inv, p);
        digits.push_back(static_cast<Digit>(d));
        a = (a - d * b) / p;
    }
}

Presentation singleton_presentation(const RationalExpansion& exp) {
    Graph g;
    g.p = exp.p;
    const std::size_t q0 = exp.preperiod.size();
    const std::size_t total = q0 + exp.period.size();
    g.out.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        g.names.push_back(i < q0 ? "pre" + std::to_string(i) : "per" + std::to_string(i - q0));
        g.add_arc(i, exp.digit(i), i + 1 < total ? i + 1 : q0);
    }
    return to_presentation(g);
}

Presentation singleton_presentation(const Rational& r, int p) { return singleton_presentation(p_adic_digits(r, p)); }

std::optional<Rational> recognize_singleton(const PathSetHandle& handle) {
    if (handle.empty()) return std::nullopt;
    const Graph g = to_graph(handle.presentation());
    for (const auto& arcs : g.out) {
        if (arcs.size() != 1) return std::nullopt;
    }
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> position(g.size(), unseen);
    RationalExpansion exp;
    exp.p = g.p;
    std::vector<Digit> digits;
    std::size_t v = g.start;
    while (position[v] == unseen) {
        position[v] = digits.size();
        digits.push_back(g.out[v].front().label);
        v = g.out[v].front().to;
    }
    exp.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(position[v]));
    exp.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(position[v]), digits.end());
    return exp.value();
}

int p_valuation(const BigInt& n, int p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    int k = 0;
    BigInt m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return k;
}

}  // namespace pathset
