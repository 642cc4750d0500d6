#pragma once

#include "ordfactor/poset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordfactor {

struct MonotoneMap {
    PosetPtr source, target;
    std::vector<Id> values;

    MonotoneMap() = default;
    // throws InputError if values is not total or not isotone
    MonotoneMap(PosetPtr s, PosetPtr t, std::vector<Id> v);
    Id operator()(Id a) const { return values[a]; }
    bool onto() const;
    bool one_one() const;
};

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);
MonotoneMap identity_map(PosetPtr p);

struct ConnectionCheck {
    bool ok = false;
    std::optional<std::pair<Id, Id>> witness; // (a in P1, b in P2)
};

// d : P1 -> P2 lower, g : P2 -> P1 upper. Runs the defining equivalence and the
// unit/counit form and throws std::logic_error if they ever disagree.
ConnectionCheck verify_connection(const MonotoneMap& d, const MonotoneMap& g);

struct GaloisConnection {
    MonotoneMap lower; // d
    MonotoneMap upper; // g
};

// throws InputError if the pair is not a connection
GaloisConnection make_connection(MonotoneMap d, MonotoneMap g);

std::optional<MonotoneMap> lower_adjoint_of(const MonotoneMap& g);
std::optional<MonotoneMap> upper_adjoint_of(const MonotoneMap& d);

struct Preservation {
    bool lower_preserves_joins = false;
    bool upper_preserves_meets = false;
    bool d_onto = false, g_one_one = false, dg_identity = false;
    bool g_onto = false, d_one_one = false, gd_identity = false;
    bool images_isomorphic = false;
    bool closure_laws = false; // g.d extensive, monotone, idempotent
    bool kernel_laws = false;  // d.g dual
    bool triple_identities = false; // d.g.d = d and g.d.g = g
    std::string witness;
};

Preservation preservation_report(const GaloisConnection& c, std::size_t iso_cap = 10);

// true iff every existing join of a subset of the source is sent to the join of the image
bool preserves_joins(const MonotoneMap& f, std::string* witness = nullptr);
bool preserves_meets(const MonotoneMap& f, std::string* witness = nullptr);

enum class SubposetKind { First, Second, Both, Neither };
const char* to_string(SubposetKind k);

struct KindResult {
    SubposetKind kind = SubposetKind::Neither;
    PosetPtr sub;               // the induced suborder
    std::vector<Id> embed;      // sub id -> ambient id
    std::optional<MonotoneMap> retraction_upper; // ambient -> sub, present when first kind
    std::optional<MonotoneMap> retraction_lower; // ambient -> sub, present when second kind
    std::string witness;
};

KindResult subposet_kind(PosetPtr P, const Bits& S);

} // namespace ordfactor
