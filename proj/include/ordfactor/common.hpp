#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordfactor {

using Id = std::size_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

constexpr Id npos = static_cast<Id>(-1);

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raised when a brute-force search would exceed a configured cap
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Verdict { False, True, NotEvaluated, NotApplicable };

const char* to_string(Verdict v);
inline Verdict verdict(bool b) { return b ? Verdict::True : Verdict::False; }

// Kleene conjunction; not_applicable behaves like not_evaluated
Verdict both(Verdict a, Verdict b);

std::vector<Id> members(const Bits& s);
Bits bits_of(std::size_t n, std::initializer_list<Id> ids);
Bits bits_of(std::size_t n, const std::vector<Id>& ids);

// ascending cardinality, then lexicographic member list
bool canonical_less(const Bits& a, const Bits& b);

struct BitsLess {
    bool operator()(const Bits& a, const Bits& b) const { return canonical_less(a, b); }
};

struct Check {
    std::string condition;
    Verdict verdict = Verdict::NotEvaluated;
    std::string witness;
    std::string note;
};

struct Report {
    std::string instance;
    std::vector<Check> checks;

    Check& add(std::string condition, Verdict v, std::string witness = {}, std::string note = {});
    bool any_false() const;
    const Check* find(const std::string& condition) const;
};

} // namespace ordfactor
