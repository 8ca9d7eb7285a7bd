#include "pathset/arithmetic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "pathset/errors.hpp"
#include "pathset/graph.hpp"

namespace pathset {

namespace {

const Graph& require_graph(const PathSetHandle& y, Graph& storage) {
    if (y.empty()) throw Error(ErrorCode::EmptySet, "carry construction on the empty set");
    storage = to_graph(y.presentation());
    return storage;
}

/// Breadth-first product exploration keyed by construction-specific state
/// tuples. The start key gets id 0.
template <class Key>
class StateSpace {
public:
    StateSpace(int p, Key start) {
        graph_.p = p;
        intern(std::move(start));
    }

    std::size_t intern(const Key& key) {
        auto [it, inserted] = ids_.emplace(key, keys_.size());
        if (inserted) {
            keys_.push_back(key);
            graph_.out.emplace_back();
        }
        return it->second;
    }

    std::size_t size() const noexcept { return keys_.size(); }
    const Key& key(std::size_t id) const { return keys_[id]; }
    void add_arc(std::size_t from, Digit label, const Key& target) {
        std::size_t to = intern(target);
        graph_.out[from].push_back({label, to});
    }

    template <class NameFn>
    Graph finish(NameFn name) && {
        graph_.names.clear();
        for (const Key& k : keys_) graph_.names.push_back(name(k));
        graph_.normalize();
        return std::move(graph_);
    }

private:
    std::map<Key, std::size_t> ids_;
    std::vector<Key> keys_;
    Graph graph_;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

void require_multiplier(std::int64_t m, int p) {
    if (m < 1) throw Error(ErrorCode::Precondition, "multiplier must be a positive integer");
    if (m > std::numeric_limits<std::int64_t>::max() / (2 * static_cast<std::int64_t>(p))) {
        throw Error(ErrorCode::Precondition, "multiplier too large");
    }
    if (gcd64(m, p) != 1) {
        throw Error(ErrorCode::NotCoprime,
                    std::to_string(m) + " is not coprime to p = " + std::to_string(p));
    }
}

void check_bound(const char* what, std::size_t states, std::size_t bound) {
    if (states > bound) {
        throw std::logic_error(std::string(what) + ": " + std::to_string(states) + " states exceed bound " +
                               std::to_string(bound));
    }
}

void check_carry(const char* what, std::int64_t carry, std::int64_t lo, std::int64_t hi) {
    if (carry < lo || carry > hi) {
        throw std::logic_error(std::string(what) + ": carry " + std::to_string(carry) + " outside [" +
                               std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
}

void check_right_resolving(const char* what, const Graph& g) {
    if (!is_right_resolving(g)) throw std::logic_error(std::string(what) + ": output is not right-resolving");
}

template <class Key, std::size_t CarryIndex>
Construction finish_construction(StateSpace<Key>&& space, auto name) {
    Construction result;
    result.state_count = space.size();
    result.min_carry = std::numeric_limits<std::int64_t>::max();
    result.max_carry = std::numeric_limits<std::int64_t>::min();
    for (std::size_t s = 0; s < space.size(); ++s) {
        std::int64_t e = std::get<CarryIndex>(space.key(s));
        result.min_carry = std::min(result.min_carry, e);
        result.max_carry = std::max(result.max_carry, e);
    }
    result.raw = to_presentation(std::move(space).finish(name));
    return result;
}

std::string tuple_name(std::initializer_list<std::string> parts) {
    std::string name = "(";
    bool first = true;
    for (const auto& part : parts) {
        if (!first) name += ",";
        name += part;
        first = false;
    }
    return name + ")";
}

}  // namespace

Construction build_add_rational(const PathSetHandle& y, const Rational& r) {
    Graph storage;
    const Graph& g = require_graph(y, storage);
    const RationalExpansion exp = p_adic_digits(r, g.p);
    std::vector<Digit> digits = exp.preperiod;
    digits.insert(digits.end(), exp.period.begin(), exp.period.end());
    const std::size_t q0 = exp.preperiod.size();
    const std::size_t length = digits.size();
    const std::int64_t p = g.p;

    using Key = std::tuple<std::size_t, std::size_t, std::int64_t>;  // (v, digit index, carry)
    StateSpace<Key> space(g.p, Key{g.start, 0, 0});
    for (std::size_t s = 0; s < space.size(); ++s) {
        const auto [v, idx, e] = space.key(s);
        const std::size_t next_idx = idx + 1 < length ? idx + 1 : q0;
        for (const Arc& a : g.out[v]) {
            const std::int64_t total = e + a.label + digits[idx];
            const std::int64_t out_digit = total % p;
            const std::int64_t carry = total / p;
            check_carry("add_rational", carry, 0, 2);
            space.add_arc(s, static_cast<Digit>(out_digit), Key{a.to, next_idx, carry});
        }
    }
    check_bound("add_rational", space.size(), 2 * static_cast<std::size_t>(p) * length * g.size());
    Construction c = finish_construction<Key, 2>(std::move(space), [&](const Key& k) {
        return tuple_name({g.names[std::get<0>(k)], std::to_string(std::get<1>(k)), std::to_string(std::get<2>(k))});
    });
    check_right_resolving("add_rational", to_graph(c.raw));
    return c;
}

Construction build_minkowski_sum(const PathSetHandle& a, const PathSetHandle& b) {
    if (a.p() != b.p()) {
        throw Error(ErrorCode::PMismatch,
                    "Minkowski sum over p = " + std::to_string(a.p()) + " and p = " + std::to_string(b.p()));
    }
    Graph storage_a;
    Graph storage_b;
    const Graph& ga = require_graph(a, storage_a);
    const Graph& gb = require_graph(b, storage_b);
    const std::int64_t p = ga.p;

    using Key = std::tuple<std::size_t, std::size_t, std::int64_t>;  // (v1, v2, carry)
    StateSpace<Key> space(ga.p, Key{ga.start, gb.start, 0});
    for (std::size_t s = 0; s < space.size(); ++s) {
        const auto [v1, v2, e] = space.key(s);
        for (const Arc& x : ga.out[v1]) {
            for (const Arc& z : gb.out[v2]) {
                const std::int64_t total = e + x.label + z.label;
                const std::int64_t carry = total / p;
                check_carry("minkowski_sum", carry, 0, 2);
                space.add_arc(s, static_cast<Digit>(total % p), Key{x.to, z.to, carry});
            }
        }
    }
    check_bound("minkowski_sum", space.size(), 3 * ga.size() * gb.size());
    return finish_construction<Key, 2>(std::move(space), [&](const Key& k) {
        return tuple_name({ga.names[std::get<0>(k)], gb.names[std::get<1>(k)], std::to_string(std::get<2>(k))});
    });
}

Construction build_mul_coprime_int(const PathSetHandle& y, std::int64_t m) {
    Graph storage;
    const Graph& g = require_graph(y, storage);
    require_multiplier(m, g.p);
    const std::int64_t p = g.p;

    using Key = std::pair<std::size_t, std::int64_t>;
    StateSpace<Key> space(g.p, Key{g.start, 0});
    for (std::size_t s = 0; s < space.size(); ++s) {
        const auto [v, e] = space.key(s);
        for (const Arc& a : g.out[v]) {
            const std::int64_t total = m * a.label + e;
            const std::int64_t carry = total / p;
            check_carry("mul_coprime_int", carry, 0, m);
            space.add_arc(s, static_cast<Digit>(total % p), Key{a.to, carry});
        }
    }
    check_bound("mul_coprime_int", space.size(), static_cast<std::size_t>(m + 1) * g.size());
    Construction c = finish_construction<Key, 1>(std::move(space), [&](const Key& k) {
        return tuple_name({g.names[k.first], std::to_string(k.second)});
    });
    check_right_resolving("mul_coprime_int", to_graph(c.raw));
    return c;
}

Construction build_div_coprime_int(const PathSetHandle& y, std::int64_t m) {
    Graph storage;
    const Graph& g = require_graph(y, storage);
    require_multiplier(m, g.p);
    const std::int64_t p = g.p;
    std::int64_t m_inv = 1;
    while (floor_mod(m * m_inv, p) != 1) ++m_inv;

    using Key = std::pair<std::size_t, std::int64_t>;
    StateSpace<Key> space(g.p, Key{g.start, 0});
    for (std::size_t s = 0; s < space.size(); ++s) {
        const auto [v, e] = space.key(s);
        for (const Arc& a : g.out[v]) {
            // M * out_digit = label - carry (mod p)
            const std::int64_t out_digit = floor_mod(m_inv * floor_mod(a.label - e, p), p);
            const std::int64_t numerator = e + m * out_digit - a.label;
            if (numerator % p != 0) throw std::logic_error("div_coprime_int: inexact carry");
            const std::int64_t carry = numerator / p;
            check_carry("div_coprime_int", carry, 0, m);
            space.add_arc(s, static_cast<Digit>(out_digit), Key{a.to, carry});
        }
    }
    check_bound("div_coprime_int", space.size(), static_cast<std::size_t>(m + 1) * g.size());
    Construction c = finish_construction<Key, 1>(std::move(space), [&](const Key& k) {
        return tuple_name({g.names[k.first], std::to_string(k.second)});
    });
    check_right_resolving("div_coprime_int", to_graph(c.raw));
    return c;
}

Construction build_negate(const PathSetHandle& y) {
    Graph storage;
    const Graph& g = require_graph(y, storage);
    const std::int64_t p = g.p;

    using Key = std::pair<std::size_t, std::int64_t>;
    StateSpace<Key> space(g.p, Key{g.start, 0});
    for (std::size_t s = 0; s < space.size(); ++s) {
        const auto [v, e] = space.key(s);
        for (const Arc& a : g.out[v]) {
            const std::int64_t out_digit = floor_mod(e - a.label, p);
            const std::int64_t carry = (e - a.label - out_digit) / p;
            check_carry("negate", carry, -1, 0);
            space.add_arc(s, static_cast<Digit>(out_digit), Key{a.to, carry});
        }
    }
    check_bound("negate", space.size(), 2 * g.size());
    Construction c = finish_construction<Key, 1>(std::move(space), [&](const Key& k) {
        return tuple_name({g.names[k.first], std::to_string(k.second)});
    });
    check_right_resolving("negate", to_graph(c.raw));
    return c;
}

Construction build_mul_p_power(const PathSetHandle& y, std::int64_t k) {
    if (k < 0) {
        throw Error(ErrorCode::NotPIntegral, "multiplying by p^" + std::to_string(k) + " leaves Z_p");
    }
    Graph storage;
    const Graph& g = require_graph(y, storage);
    const auto chain = static_cast<std::size_t>(k);

    Graph result;
    result.p = g.p;
    result.start = 0;
    result.out.resize(chain + g.size());
    for (std::size_t i = 0; i < chain; ++i) {
        result.names.push_back("z" + std::to_string(i));
        result.add_arc(i, 0, i + 1 < chain ? i + 1 : chain + g.start);
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        result.names.push_back(g.names[v]);
        for (const Arc& a : g.out[v]) result.add_arc(chain + v, a.label, chain + a.to);
    }
    if (chain == 0) result.start = g.start;

    Construction c;
    c.raw = to_presentation(result);
    c.state_count = result.size();
    if (c.state_count != chain + g.size()) throw std::logic_error("mul_p_power: state count mismatch");
    return c;
}

PathSetHandle add_rational(const PathSetHandle& y, const Rational& r) {
    if (!r.is_p_integral(y.p())) {
        throw Error(ErrorCode::NotPIntegral, r.to_string() + " is not " + std::to_string(y.p()) + "-integral");
    }
    if (y.empty()) return y;
    return standardize(build_add_rational(y, r).raw);
}

PathSetHandle minkowski_sum(const PathSetHandle& a, const PathSetHandle& b) {
    if (a.p() != b.p()) {
        throw Error(ErrorCode::PMismatch,
                    "Minkowski sum over p = " + std::to_string(a.p()) + " and p = " + std::to_string(b.p()));
    }
    if (a.empty()) return a;
    if (b.empty()) return b;
    return standardize(build_minkowski_sum(a, b).raw);
}

PathSetHandle mul_coprime_int(const PathSetHandle& y, std::int64_t m) {
    require_multiplier(m, y.p());
    if (y.empty()) return y;
    return standardize(build_mul_coprime_int(y, m).raw);
}

PathSetHandle div_coprime_int(const PathSetHandle& y, std::int64_t m) {
    require_multiplier(m, y.p());
    if (y.empty()) return y;
    return standardize(build_div_coprime_int(y, m).raw);
}

PathSetHandle negate(const PathSetHandle& y) {
    if (y.empty()) return y;
    return standardize(build_negate(y).raw);
}

PathSetHandle mul_p_power(const PathSetHandle& y, std::int64_t k) {
    if (k < 0) {
        throw Error(ErrorCode::NotPIntegral, "multiplying by p^" + std::to_string(k) + " leaves Z_p");
    }
    if (y.empty()) return y;
    return standardize(build_mul_p_power(y, k).raw);
}

PathSetHandle mul_rational(const PathSetHandle& y, const Rational& r) {
    const int p = y.p();
    if (!r.is_p_integral(p)) {
        throw Error(ErrorCode::NotPIntegral, r.to_string() + " is not " + std::to_string(p) + "-integral");
    }
    if (y.empty()) return y;
    if (r.is_zero()) return standardize(singleton_presentation(Rational(0), p));

    const int k = p_valuation(r.num(), p);
    BigInt m1 = boost::multiprecision::abs(r.num());
    for (int i = 0; i < k; ++i) m1 /= p;
    const BigInt& m2 = r.den();
    const BigInt limit = std::numeric_limits<std::int32_t>::max();
    if (m1 > limit || m2 > limit) {
        throw Error(ErrorCode::Precondition, "multiplier " + r.to_string() + " has too many digits");
    }

    PathSetHandle result = mul_p_power(y, k);
    if (r.num() < 0) result = negate(result);
    if (m2 != 1) result = div_coprime_int(result, m2.convert_to<std::int64_t>());
    if (m1 != 1) result = mul_coprime_int(result, m1.convert_to<std::int64_t>());
    return result;
}

}  // namespace pathset
