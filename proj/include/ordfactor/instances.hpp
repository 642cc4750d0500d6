#pragma once

#include "ordfactor/divisor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordfactor {

enum class SpecKind { OrderedMonoid, PosetWithB, IdealSystem };
const char* to_string(SpecKind k);

struct InstanceSpec {
    struct Pair {
        std::string lo, hi;
        int line = 0;
        bool operator==(const Pair& o) const { return lo == o.lo && hi == o.hi; }
    };
    struct Product {
        std::string a, b, c;
        int line = 0;
        bool operator==(const Product& o) const { return a == o.a && b == o.b && c == o.c; }
    };
    struct BEntry {
        std::string element, base;
        unsigned exponent = 0;
        int line = 0;
        bool operator==(const BEntry& o) const
        {
            return element == o.element && base == o.base && exponent == o.exponent;
        }
    };
    struct Principal {
        std::string element, ideal;
        int line = 0;
        bool operator==(const Principal& o) const { return element == o.element && ideal == o.ideal; }
    };

    std::string name;
    SpecKind kind = SpecKind::OrderedMonoid;
    std::vector<std::string> elements;
    bool divisibility = false;
    std::vector<Pair> order;
    std::vector<Product> mult;
    std::vector<BEntry> B;
    std::vector<Principal> principal;
    std::string zero;

    // line numbers of the section headers, for errors found after parsing
    int elements_line = 0, order_line = 0, mult_line = 0, b_line = 0, principal_line = 0;

    bool operator==(const InstanceSpec& o) const
    {
        return name == o.name && kind == o.kind && elements == o.elements && divisibility == o.divisibility &&
               order == o.order && mult == o.mult && B == o.B && principal == o.principal && zero == o.zero;
    }
};

// syntax only; errors carry "line N:"
InstanceSpec parse_spec(const std::string& text);
std::string serialize(const InstanceSpec& spec);

struct Loaded {
    std::string name;
    InstancePtr inst;                  // the monoid of an ideal system
    std::optional<IdealSystem> system; // set for ideal systems
};

// full validation; semantic errors carry the line of the offending entry or section
Loaded load(const InstanceSpec& spec);
Loaded parse_instance(const std::string& text);
Loaded load_file(const std::string& path);
InstanceSpec to_spec(const Loaded& l);

Instance gen_div(std::uint64_t n);
Instance gen_free(unsigned k, unsigned e);
Instance gen_hilbert(unsigned N);
IdealSystem gen_krullZ2();
Instance gen_random(unsigned size, std::uint64_t seed);

// "div:60", "free:2,2", "hilbert:441", "krullZ2", "random:9" (seed argument) or "random:9,7"
Loaded generate(const std::string& spec, std::uint64_t seed = 0);

} // namespace ordfactor
