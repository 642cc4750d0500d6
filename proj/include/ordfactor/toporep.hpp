#pragma once

#include "ordfactor/bideal.hpp"

#include <string>
#include <vector>

namespace ordfactor {

// points are ids of the represented lattice
struct TopSpace {
    Bits points;
    std::vector<Bits> closed; // indexed like the lattice: closed[a] = f(a)
};

struct Representation {
    PosetPtr lattice;
    TopSpace space;
    Report report; // closed-set axioms, T0, point closures, order isomorphism
};

// throws InputError when P is not a complete lattice or some element is not the
// join of the strongly join-irreducible elements below it
Representation build_representation(PosetPtr P);

struct MRepresentation {
    Representation rep;
    std::vector<Id> point_of_base; // element of B -> lattice id of down(b)
    std::vector<Bits> open;        // complements of the B-ideals, same indexing
    Report report;
};

// refuses (InputError) unless D1 holds and M is complete
MRepresentation represent_M(const Instance& inst, const BIdealLattice& M, std::size_t upset_cap = 20);

struct NeighborhoodView {
    std::vector<Bits> delta_b_complements;
    Bits least_member;
    Report report;
};

NeighborhoodView neighborhood_view(const Instance& inst, const BIdealLattice& M, Id b);

} // namespace ordfactor
