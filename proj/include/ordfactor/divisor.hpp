#pragma once

#include "ordfactor/bideal.hpp"
#include "ordfactor/galois.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ordfactor {

using InstancePtr = std::shared_ptr<const Instance>;

struct IdealSystem {
    std::string name;
    PosetPtr ideals; // inclusion order
    Id zero = 0;
    std::vector<Id> principal; // monoid element -> ideal
    InstancePtr monoid;
    std::optional<MultTable> mult; // product of ideals, partial
};

// checks meet-closure, zero, principal embedding; throws InputError
void validate(const IdealSystem& sys);

// ideals = intersections of the up-sets up(x), plus the empty set as zero
IdealSystem principal_system(InstancePtr monoid);

Id divisorial_closure(const IdealSystem& sys, Id a);

struct DivisorialData {
    std::vector<Id> closure;
    Bits fixed_points;
    std::vector<std::vector<Id>> classes; // nonzero ideals grouped by closure
    bool closure_laws = false;
};
DivisorialData divisorial_data(const IdealSystem& sys);

// everything derived from one ideal system
struct DivisorModel {
    IdealSystem sys;
    std::shared_ptr<const BContext> ctx;
    BIdealLattice M;
    PosetPtr m_plus; // M plus a formal greatest element top0 standing for down[0]
    Id top0 = 0;
    PosetPtr i_tilde; // ideals, reversed
    GaloisConnection conn; // d : m_plus -> i_tilde lower, g : i_tilde -> m_plus upper
    std::vector<Id> mss;   // M** as ids of m_plus
    PosetPtr mss_order;
    std::optional<MultTable> mss_mult;

    const Bits& set_of(Id j) const { return M.ideals[j]; } // j < top0
    std::string label_mplus(Id j) const;
};

// throws InputError when M cannot be completely enumerated or the connection fails
DivisorModel build_model(const IdealSystem& sys, const EnumConfig& cfg = {});

Report m_star_star_checks(const DivisorModel& dm);
Report atom_prime_check(const DivisorModel& dm);

struct D6Result {
    Check check;
    std::optional<Instance> as_instance; // M** as a poset with E designated as B
    std::vector<std::vector<Id>> E;      // per atom, the chain of its powers (M** ids)
    Report extra;
};
D6Result check_D6(const DivisorModel& dm, std::size_t cap_unique = 6);

struct Classification {
    Check krull, dedekind, ufd, pid;
    Report report;
};
Classification classify(const DivisorModel& dm);

Report divisor_theory_harness(const DivisorModel& dm);

} // namespace ordfactor
