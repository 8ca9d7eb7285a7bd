#include "pathset/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pathset/errors.hpp"
#include "pathset/graph.hpp"

namespace pathset {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    // Extended Euclid; gcd(a, m) = 1 because p does not divide a.
    BigInt old_r = a;
    BigInt r = m;
    BigInt old_s = 1;
    BigInt s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw Error(ErrorCode::NotPIntegral, "denominator not invertible mod p^n");
    BigInt inv = old_s % m;
    if (inv < 0) inv += m;
    return inv.convert_to<std::uint64_t>();
}

double log_big(const BigInt& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 60) return std::log(x.convert_to<double>());
    const std::size_t drop = bits - 60;
    BigInt top = x >> drop;
    return std::log(top.convert_to<double>()) + static_cast<double>(drop) * std::log(2.0);
}

std::vector<std::uint64_t> value_set(const PathSetHandle& y, std::size_t depth, std::size_t budget) {
    std::vector<std::uint64_t> values = prefixes(y, depth, budget).values();
    return values;
}

}  // namespace

std::size_t enumeration_budget_from_env() {
    if (const char* text = std::getenv("PATHSET_ENUM_BUDGET")) {
        try {
            std::size_t used = 0;
            unsigned long long value = std::stoull(text, &used);
            if (used == std::string(text).size() && value > 0) return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
        }
    }
    return kDefaultEnumerationBudget;
}

std::uint64_t residue_modulus(int p, std::size_t depth) {
    u128 m = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        m *= static_cast<u128>(p);
        if (m > (static_cast<u128>(1) << 62)) {
            throw Error(ErrorCode::EnumerationTooLarge,
                        "p^" + std::to_string(depth) + " exceeds the 62-bit residue range");
        }
    }
    return static_cast<std::uint64_t>(m);
}

std::uint64_t rational_residue(const Rational& r, int p, std::size_t depth) {
    if (!r.is_p_integral(p)) {
        throw Error(ErrorCode::NotPIntegral, r.to_string() + " is not " + std::to_string(p) + "-integral");
    }
    const std::uint64_t m = residue_modulus(p, depth);
    if (m == 1) return 0;
    BigInt num = r.num() % m;
    if (num < 0) num += m;
    const BigInt den = r.den() % m;
    return mul_mod(num.convert_to<std::uint64_t>(), inverse_mod(den.convert_to<std::uint64_t>(), m), m);
}

std::vector<std::uint64_t> PrefixSet::values() const {
    const std::uint64_t m = residue_modulus(p, depth);
    std::vector<std::uint64_t> result;
    result.reserve(strings.size());
    for (const auto& s : strings) {
        std::uint64_t value = 0;
        for (std::size_t j = s.size(); j-- > 0;) value = value * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(s[j]);
        result.push_back(value % (m == 0 ? 1 : m));
    }
    std::sort(result.begin(), result.end());
    return result;
}

PrefixSet prefixes(const Presentation& pres, std::size_t depth, std::size_t budget) {
    check_structure(pres);
    const Graph g = to_graph(apply_digit_map(pres));

    // Each frontier entry is a digit string with the set of vertices it can end at.
    using Entry = std::pair<std::vector<Digit>, std::vector<std::size_t>>;
    std::vector<Entry> frontier{{{}, {g.start}}};
    std::vector<std::vector<std::size_t>> by_digit(static_cast<std::size_t>(g.p));
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<Entry> next;
        for (const auto& [digits, ends] : frontier) {
            for (auto& bucket : by_digit) bucket.clear();
            for (std::size_t v : ends) {
                for (const Arc& a : g.out[v]) by_digit[static_cast<std::size_t>(a.label)].push_back(a.to);
            }
            for (Digit d = 0; d < g.p; ++d) {
                auto& bucket = by_digit[static_cast<std::size_t>(d)];
                if (bucket.empty()) continue;
                std::sort(bucket.begin(), bucket.end());
                bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
                std::vector<Digit> extended = digits;
                extended.push_back(d);
                next.emplace_back(std::move(extended), bucket);
                if (next.size() > budget) {
                    throw Error(ErrorCode::EnumerationTooLarge,
                                "more than " + std::to_string(budget) + " prefixes at depth " +
                                    std::to_string(level + 1));
                }
            }
        }
        frontier = std::move(next);
    }

    PrefixSet result;
    result.p = g.p;
    result.depth = depth;
    result.strings.reserve(frontier.size());
    for (auto& entry : frontier) result.strings.push_back(std::move(entry.first));
    return result;
}

PrefixSet prefixes(const PathSetHandle& y, std::size_t depth, std::size_t budget) {
    if (y.empty()) return PrefixSet{y.p(), depth, {}};
    return prefixes(y.presentation(), depth, budget);
}

BigInt count_prefixes(const Presentation& pres, std::size_t depth) {
    const Graph g = to_graph(apply_digit_map(pres));
    std::vector<BigInt> row(g.size(), 0);
    row[g.start] = 1;
    for (std::size_t step = 0; step < depth; ++step) {
        std::vector<BigInt> next(g.size(), 0);
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (row[v] == 0) continue;
            for (const Arc& a : g.out[v]) next[a.to] += row[v];
        }
        row = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& count : row) total += count;
    return total;
}

double empirical_dim(const PathSetHandle& y, std::size_t depth) {
    if (y.empty()) throw Error(ErrorCode::EmptySet, "empirical dimension of the empty set is undefined");
    if (depth == 0) throw Error(ErrorCode::Precondition, "empirical dimension needs depth >= 1");
    const BigInt count = count_prefixes(y.presentation(), depth);
    return log_big(count) / std::log(static_cast<double>(y.p())) / static_cast<double>(depth);
}

namespace {

// Sorted residues of the exact image of the inputs mod p^depth.
std::vector<std::uint64_t> expected_image(const ArithOp& op, std::span<const PathSetHandle> inputs, int p,
                                          std::size_t depth, std::size_t budget) {
    const std::size_t wanted = op.kind == ArithKind::Sum ? 2 : 1;
    if (inputs.size() != wanted) {
        throw Error(ErrorCode::Precondition,
                    "check_arith expects " + std::to_string(wanted) + " input(s), got " + std::to_string(inputs.size()));
    }
    for (const auto& in : inputs) {
        if (in.p() != p) throw Error(ErrorCode::PMismatch, "inputs and output use different p");
    }
    const std::uint64_t m = residue_modulus(p, depth);

    std::vector<std::uint64_t> expected;
    const std::vector<std::uint64_t> ys = value_set(inputs[0], depth, budget);
    switch (op.kind) {
        case ArithKind::Add: {
            const std::uint64_t r = rational_residue(op.r, p, depth);
            for (std::uint64_t y : ys) expected.push_back(static_cast<std::uint64_t>((static_cast<u128>(y) + r) % m));
            break;
        }
        case ArithKind::Mul: {
            const std::uint64_t r = rational_residue(op.r, p, depth);
            for (std::uint64_t y : ys) expected.push_back(mul_mod(y, r, m));
            break;
        }
        case ArithKind::Sum: {
            const std::vector<std::uint64_t> zs = value_set(inputs[1], depth, budget);
            if (!ys.empty() && zs.size() > budget / ys.size()) {
                throw Error(ErrorCode::EnumerationTooLarge, "sumset of " + std::to_string(ys.size()) + " x " +
                                                                std::to_string(zs.size()) + " residues exceeds budget");
            }
            expected.reserve(ys.size() * zs.size());
            for (std::uint64_t y : ys) {
                for (std::uint64_t z : zs) expected.push_back(static_cast<std::uint64_t>((static_cast<u128>(y) + z) % m));
            }
            break;
        }
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    return expected;
}

}  // namespace

bool check_arith(const ArithOp& op, std::span<const PathSetHandle> inputs, const PathSetHandle& output,
                 std::size_t depth, std::size_t budget) {
    const std::vector<std::uint64_t> expected = expected_image(op, inputs, output.p(), depth, budget);
    return expected == value_set(output, depth, budget);
}

bool check_arith(const ArithOp& op, std::span<const PathSetHandle> inputs, const Presentation& output,
                 std::size_t depth, std::size_t budget) {
    const std::optional<Presentation> trimmed = trim(apply_digit_map(output));
    const std::vector<std::uint64_t> expected = expected_image(op, inputs, output.p, depth, budget);
    if (!trimmed) return expected.empty();
    return expected == prefixes(*trimmed, depth, budget).values();
}

}  // namespace pathset
