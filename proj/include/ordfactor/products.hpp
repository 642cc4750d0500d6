#pragma once

#include "ordfactor/bideal.hpp"
#include "ordfactor/galois.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordfactor {

enum class Support { Full, Finite };

struct ExternalProduct {
    PosetPtr product;
    std::vector<PosetPtr> factors;
    std::vector<std::vector<Id>> tuples; // product id -> coordinates
    // per factor: lower = injection i*_t, upper = projection r*_t
    std::vector<GaloisConnection> adj;
    Report report;

    Id id_of(const std::vector<Id>& coords) const;
};

// every factor needs a least element; throws CapExceeded above cap tuples
ExternalProduct external_product(const std::vector<PosetPtr>& family, Support support = Support::Full,
                                 std::size_t cap = 1 << 16);

struct ProductWitness {
    PosetPtr ambient;
    std::vector<Bits> factors;
    std::vector<KindResult> kinds;          // each of the first kind
    std::vector<std::vector<Id>> decomposition; // ambient id -> ambient ids, one per factor
    Report report;
};

struct InternalResult {
    std::optional<ProductWitness> witness;
    std::string failed; // the clause that failed, empty on success
    std::string detail;
};

InternalResult internal_product_witness(PosetPtr P, const std::vector<Bits>& factors,
                                        std::size_t cap = 1 << 16);

struct InternalExternal {
    ExternalProduct ext;
    std::vector<Id> map; // ambient id -> product id
};
// throws std::logic_error if the map fails to be an order isomorphism
InternalExternal internal_external_iso(const ProductWitness& w);

struct OrderRep {
    std::vector<Id> bases;
    std::vector<unsigned> bounds; // truncation of each chain
    std::vector<std::vector<unsigned>> vec; // element -> exponent vector
    ExternalProduct box;
    std::vector<Id> map; // element -> box id
    Verdict om = Verdict::NotApplicable;
    Report report;
};

// representation of the carrier; refuses (InputError) unless F1 holds
OrderRep order_representation(const Instance& inst);
// representation of M; refuses unless D1 holds and M is complete
OrderRep order_representation_M(const Instance& inst, const BIdealLattice& M);

// ids of M for the chains down(1) < down(p) < down(p^2) < ...
std::vector<Bits> b_circ_factors(const Instance& inst, const BIdealLattice& M);
// down(x) * down(y) = down(xy) when xy is defined; principal ideals only
MultTable principal_product(const Instance& inst, const BIdealLattice& M);

struct AlgebraicView {
    MultTable transported;
    Report report;
};
// factor_mult only has to be defined for pairs inside one factor (ambient ids);
// existing, when given, is compared wherever either side is defined
AlgebraicView algebraic_view(const ProductWitness& w, const MultTable& factor_mult,
                             const MultTable* existing = nullptr);

// prime components P_q = join of the other prime chains, checked against J_q (needs F1)
Report prime_component_checks(const Instance& inst, const BIdealLattice& M);

} // namespace ordfactor
