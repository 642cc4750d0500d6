#pragma once

#include "oracles.hpp"

#include "ordfactor/poset.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace th {

using namespace ordfactor;

inline PosetPtr div_poset(std::uint64_t n)
{
    auto d = oracle::divisors(n);
    std::vector<std::string> labels;
    for (auto x : d)
        labels.push_back(std::to_string(x));
    return std::make_shared<const Poset>(
        Poset::from_relation(d.size(), [&](Id a, Id b) { return d[b] % d[a] == 0; }, labels));
}

inline PosetPtr m3()
{
    return std::make_shared<const Poset>(
        Poset::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"}));
}

inline PosetPtr n5()
{
    return std::make_shared<const Poset>(
        Poset::from_pairs(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"}));
}

inline PosetPtr antichain2()
{
    return std::make_shared<const Poset>(Poset::from_pairs(2, {}, {"a", "b"}));
}

inline Bits S(const Poset& p, std::initializer_list<const char*> labels)
{
    Bits b(p.size());
    for (auto l : labels)
        b.set(p.at(l));
    return b;
}

// random partial order: a random DAG on 0..n-1 closed transitively
inline Poset random_poset(std::size_t n, std::mt19937_64& g, unsigned density = 3)
{
    std::vector<std::pair<Id, Id>> pairs;
    for (Id a = 0; a < n; ++a)
        for (Id b = a + 1; b < n; ++b)
            if (g() % 10 < density)
                pairs.push_back({a, b});
    std::vector<std::string> labels;
    for (Id a = 0; a < n; ++a)
        labels.push_back("p" + std::to_string(a));
    return Poset::from_pairs(n, pairs, labels);
}

// random lattice: random poset with a bottom and top adjoined, kept only if it is a lattice
inline std::optional<Poset> random_lattice(std::size_t inner, std::mt19937_64& g)
{
    Poset q = random_poset(inner, g, 4);
    std::size_t n = inner + 2;
    std::vector<std::string> labels{"bot"};
    for (Id a = 0; a < inner; ++a)
        labels.push_back(q.label(a));
    labels.push_back("top");
    Poset p = Poset::from_relation(
        n,
        [&](Id a, Id b) {
            if (a == 0 || b == n - 1)
                return true;
            if (b == 0 || a == n - 1)
                return false;
            return q.leq(a - 1, b - 1);
        },
        labels);
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            if (!oracle::lub(p, {a, b}))
                return std::nullopt;
    return p;
}

} // namespace th
