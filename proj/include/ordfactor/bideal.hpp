#pragma once

#include "ordfactor/omonoid.hpp"

#include <map>
#include <string>
#include <vector>

namespace ordfactor {

// forced joins join(down(a) & B), precomputed once per instance
class BContext {
public:
    explicit BContext(const Instance& inst);
    const Instance& inst() const { return *inst_; }
    Bits generate(const Bits& A) const;
    bool is_b_ideal(const Bits& J, std::string* witness = nullptr) const;
    Id forced(Id a) const { return forced_[a]; }

private:
    const Instance* inst_;
    std::vector<Bits> below_;
    std::vector<Id> forced_;
};

struct BIdealLattice {
    std::vector<Bits> ideals; // canonical order
    bool complete = false;
    std::string note;
    std::map<Bits, Id, BitsLess> index;

    Id find(const Bits& J) const; // npos if absent
    PosetPtr order(const Poset& carrier) const; // inclusion order, labels are member lists
};

struct EnumConfig {
    std::size_t cap = 20;            // carrier size limit for exhaustive enumeration
    std::size_t max_ideals = 1 << 20; // size limit on M itself
};

BIdealLattice enumerate_M(const Instance& inst, const EnumConfig& cfg = {});

Bits j_b(const Instance& inst, Id b);
// join in M: the B-ideal generated by the union
Bits m_join(const BContext& ctx, const std::vector<Bits>& family);

struct SubsetClass {
    bool b_set = false, b_filter = false, prime_ideal = false;
    std::string witness;
};
SubsetClass classify_subset(const BContext& ctx, const Bits& A);

std::vector<Bits> delta_a(const Instance& inst, const BIdealLattice& M, Id a); // throws if incomplete
std::vector<Bits> sigma2(const Instance& inst, const BIdealLattice& M);       // throws if incomplete
// a maximal B-ideal missing a, grown greedily from J (which must miss a)
Bits maximal_missing(const BContext& ctx, const Bits& J, Id a);

// D1 D2 D3 D4 D5 B1 B2 B3 B4 F1 F2 F3 DCC sigma2
Check check_condition(const BContext& ctx, const BIdealLattice& M, const std::string& which, std::size_t cap_unique = 6);

struct HarnessConfig {
    std::size_t cap_unique = 6;
};

Report theorem_harness(const BContext& ctx, const BIdealLattice& M, const HarnessConfig& cfg = {});
Report structural_props(const BContext& ctx, const BIdealLattice& M, std::size_t cd_cap = 12);

// exact tests of strong complete irreducibility inside M
bool strongly_meet_irreducible_in(const std::vector<Bits>& M, const Bits& J);
bool strongly_join_irreducible_in(const BContext& ctx, const std::vector<Bits>& M, const Bits& J);

} // namespace ordfactor
