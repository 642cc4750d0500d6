#pragma once
// Reference computations that only use the raw order relation or plain arithmetic.

#include "ordfactor/omonoid.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using ordfactor::Bits;
using ordfactor::Id;

inline std::map<std::uint64_t, unsigned> factor(std::uint64_t n)
{
    std::map<std::uint64_t, unsigned> f;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1)
        ++f[n];
    return f;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> d;
    for (std::uint64_t x = 1; x <= n; ++x)
        if (n % x == 0)
            d.push_back(x);
    return d;
}

// least upper bound straight from leq
inline std::optional<Id> lub(const ordfactor::Poset& p, const std::vector<Id>& A)
{
    std::vector<Id> ub;
    for (Id u = 0; u < p.size(); ++u) {
        bool ok = true;
        for (Id a : A)
            ok = ok && p.leq(a, u);
        if (ok)
            ub.push_back(u);
    }
    for (Id u : ub) {
        bool least = true;
        for (Id v : ub)
            least = least && p.leq(u, v);
        if (least)
            return u;
    }
    return std::nullopt;
}

// the defining conditions checked literally on one subset
inline bool is_b_ideal(const ordfactor::Instance& inst, const Bits& J)
{
    const auto& p = inst.P();
    if (J.none())
        return false;
    for (Id x = 0; x < p.size(); ++x)
        for (Id y = 0; y < p.size(); ++y)
            if (J[y] && p.leq(x, y) && !J[x])
                return false;
    for (Id a = 0; a < p.size(); ++a) {
        std::vector<Id> below;
        bool inside = true;
        for (Id b = 0; b < p.size(); ++b)
            if (inst.in_B(b) && p.leq(b, a)) {
                below.push_back(b);
                inside = inside && J[b];
            }
        if (!inside)
            continue;
        auto j = lub(p, below);
        if (j && !J[*j])
            return false;
    }
    return true;
}

// every subset of a small carrier, filtered by the definition
inline std::vector<Bits> all_b_ideals(const ordfactor::Instance& inst)
{
    const std::size_t n = inst.size();
    std::vector<Bits> out;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
        Bits J(n);
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1)
                J.set(i);
        if (is_b_ideal(inst, J))
            out.push_back(J);
    }
    return out;
}

} // namespace oracle
