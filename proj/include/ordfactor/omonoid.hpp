#pragma once

#include "ordfactor/poset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordfactor {

// partial commutative product; npos where undefined
class MultTable {
public:
    MultTable() = default;
    explicit MultTable(std::size_t n) : n_(n), t_(n * n, npos) {}
    std::size_t size() const { return n_; }
    Id operator()(Id a, Id b) const { return t_[a * n_ + b]; }
    bool defined(Id a, Id b) const { return t_[a * n_ + b] != npos; }
    void set(Id a, Id b, Id c)
    {
        t_[a * n_ + b] = c;
        t_[b * n_ + a] = c;
    }
    // partners[a] = all b with a*b defined
    const std::vector<std::vector<Id>>& partners() const;

private:
    std::size_t n_ = 0;
    std::vector<Id> t_;
    mutable std::vector<std::vector<Id>> partners_;
};

struct PrimePower {
    Id element;
    Id base;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

enum class InstanceKind { OrderedMonoid, PosetWithB };

struct LawFlag {
    bool holds = true;
    std::string witness;
};

struct LawReport {
    LawFlag dist, defi, cancellation;
};

class Instance {
public:
    std::string name;
    InstanceKind kind = InstanceKind::OrderedMonoid;
    PosetPtr poset;
    Id unit = 0;
    std::optional<MultTable> mult;
    std::vector<PrimePower> B; // grouped by base, ascending exponent
    Bits b_mask;
    std::optional<LawReport> laws;
    std::vector<Id> power_index; // element -> index into B, npos if not in B

    void index_B(); // sorts B and rebuilds b_mask / power_index
    const Poset& P() const { return *poset; }
    std::size_t size() const { return poset->size(); }
    bool in_B(Id a) const { return b_mask[a]; }
    const PrimePower* power(Id a) const;
    std::vector<Id> bases() const;
    Bits B_below(Id a) const { return poset->down(a) & b_mask; }
    std::string label(Id a) const { return poset->label(a); }
};

// a <= b iff b = a*c for some in-carrier c; throws InputError naming a cycle
Poset derive_order(const MultTable& m, const std::vector<std::string>& labels);

// validates the table (commutative, associative where defined, unit, compatibility),
// derives the order, B and the law flags
Instance make_ordered_monoid(std::string name, std::vector<std::string> labels, const MultTable& m);

// designated B; validates B entries (bases are atoms, exponents follow the chain order)
Instance make_poset_with_b(std::string name, PosetPtr p, std::vector<PrimePower> B);

Bits atoms(const Instance& inst);
Bits primes(const Instance& inst); // empty without a product
std::vector<PrimePower> compute_B(const Instance& inst);

unsigned valuation(const Instance& inst, Id a, Id base);
LawReport law_report(const Instance& inst);

using CondensedSet = std::vector<PrimePower>;
CondensedSet condense(const Instance& inst, const std::vector<PrimePower>& A);
std::optional<CondensedSet> decompose(const Instance& inst, Id a);
std::string format_condensed(const Instance& inst, const CondensedSet& c);

struct Tri {
    Verdict verdict = Verdict::NotEvaluated;
    std::string witness;
};

// B4 checked over antichains of B; uniqueness over pairwise-incomparable subsets of B.
// Both are exhaustive only while the width of B stays within cap; otherwise not_evaluated.
Tri b4_check(const Instance& inst, std::size_t cap = 6);
Tri uniqueness_check(const Instance& inst, std::size_t cap = 6);
// every element is the join of exactly one antichain drawn from B
Tri unique_decomposition(const Instance& inst, std::size_t cap = 6);

Bits ir_set(const Instance& inst);
Tri ir_in_B(const Instance& inst);
Tri dcc_check(const Instance& inst);
Tri f1_check(const Instance& inst);
Tri d1_check(const Instance& inst);
Tri d5_check(const Instance& inst);
Tri b1_check(const Instance& inst);
Tri b2_check(const Instance& inst);
Tri b3_check(const Instance& inst);
Tri f2_check(const Instance& inst);

Report factorization_law_suite(const Instance& inst);

} // namespace ordfactor
