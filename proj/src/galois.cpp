#include "ordfactor/galois.hpp"

#include <stdexcept>

namespace ordfactor {

MonotoneMap::MonotoneMap(PosetPtr s, PosetPtr t, std::vector<Id> v)
    : source(std::move(s)), target(std::move(t)), values(std::move(v))
{
    if (values.size() != source->size())
        throw InputError("map is not total on its source");
    for (Id x : values)
        target->check_index(x);
    for (Id a = 0; a < source->size(); ++a)
        for (Id b : members(source->up(a)))
            if (!target->leq(values[a], values[b]))
                throw InputError("map is not isotone at " + source->label(a) + " <= " + source->label(b));
}

bool MonotoneMap::onto() const
{
    Bits hit(target->size());
    for (Id x : values)
        hit.set(x);
    return hit.all();
}

bool MonotoneMap::one_one() const
{
    Bits hit(target->size());
    for (Id x : values) {
        if (hit[x])
            return false;
        hit.set(x);
    }
    return true;
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner)
{
    if (inner.target.get() != outer.source.get() && inner.target->size() != outer.source->size())
        throw InputError("compose: maps do not chain");
    std::vector<Id> v(inner.values.size());
    for (Id a = 0; a < v.size(); ++a)
        v[a] = outer.values[inner.values[a]];
    return MonotoneMap(inner.source, outer.target, std::move(v));
}

MonotoneMap identity_map(PosetPtr p)
{
    std::vector<Id> v(p->size());
    for (Id a = 0; a < v.size(); ++a)
        v[a] = a;
    return MonotoneMap(p, p, std::move(v));
}

ConnectionCheck verify_connection(const MonotoneMap& d, const MonotoneMap& g)
{
    const Poset& P1 = *d.source;
    const Poset& P2 = *d.target;
    if (g.source->size() != P2.size() || g.target->size() != P1.size())
        throw InputError("verify_connection: maps have mismatched orientation");

    ConnectionCheck def;
    def.ok = true;
    for (Id a = 0; a < P1.size() && def.ok; ++a)
        for (Id b = 0; b < P2.size(); ++b)
            if (P1.leq(a, g(b)) != P2.leq(d(a), b)) {
                def.ok = false;
                def.witness = std::make_pair(a, b);
                break;
            }

    ConnectionCheck unit;
    unit.ok = true;
    for (Id b = 0; b < P2.size() && unit.ok; ++b)
        if (!P2.leq(d(g(b)), b)) {
            unit.ok = false;
            unit.witness = std::make_pair(g(b), b);
        }
    for (Id a = 0; a < P1.size() && unit.ok; ++a)
        if (!P1.leq(a, g(d(a)))) {
            unit.ok = false;
            unit.witness = std::make_pair(a, d(a));
        }

    if (def.ok != unit.ok)
        throw std::logic_error("verify_connection: the two adjointness tests disagree");
    return def.ok ? def : (def.witness ? def : unit);
}

GaloisConnection make_connection(MonotoneMap d, MonotoneMap g)
{
    auto c = verify_connection(d, g);
    if (!c.ok) {
        auto [a, b] = *c.witness;
        throw InputError("not a Galois connection: witness (" + d.source->label(a) + ", " +
                         d.target->label(b) + ")");
    }
    return GaloisConnection{std::move(d), std::move(g)};
}

std::optional<MonotoneMap> lower_adjoint_of(const MonotoneMap& g)
{
    const Poset& P2 = *g.source;
    const Poset& P1 = *g.target;
    std::vector<Id> v(P1.size());
    for (Id a = 0; a < P1.size(); ++a) {
        Bits pre(P2.size());
        for (Id b = 0; b < P2.size(); ++b)
            if (P1.leq(a, g(b)))
                pre.set(b);
        auto m = P2.least_of(pre);
        if (!m)
            return std::nullopt;
        v[a] = *m;
    }
    try {
        MonotoneMap d(g.target, g.source, std::move(v));
        if (!verify_connection(d, g).ok)
            return std::nullopt;
        return d;
    } catch (const InputError&) {
        return std::nullopt;
    }
}

std::optional<MonotoneMap> upper_adjoint_of(const MonotoneMap& d)
{
    const Poset& P1 = *d.source;
    const Poset& P2 = *d.target;
    std::vector<Id> v(P2.size());
    for (Id b = 0; b < P2.size(); ++b) {
        Bits pre(P1.size());
        for (Id a = 0; a < P1.size(); ++a)
            if (P2.leq(d(a), b))
                pre.set(a);
        auto m = P1.greatest_of(pre);
        if (!m)
            return std::nullopt;
        v[b] = *m;
    }
    try {
        MonotoneMap g(d.target, d.source, std::move(v));
        if (!verify_connection(d, g).ok)
            return std::nullopt;
        return g;
    } catch (const InputError&) {
        return std::nullopt;
    }
}

// For each u in the target, L = f^{-1}(down u) must contain every existing join of
// its subsets. A subset of L with join s exists iff the whole of L below s joins to s.
bool preserves_joins(const MonotoneMap& f, std::string* witness)
{
    const Poset& S = *f.source;
    const Poset& T = *f.target;
    for (Id u = 0; u < T.size(); ++u) {
        Bits L(S.size());
        for (Id a = 0; a < S.size(); ++a)
            if (T.leq(f(a), u))
                L.set(a);
        for (Id s = 0; s < S.size(); ++s) {
            if (L[s])
                continue;
            auto j = S.join(L & S.down(s));
            if (j && *j == s) {
                if (witness)
                    *witness = "join of " + S.format(L & S.down(s)) + " = " + S.label(s) +
                               " not sent below upper bound " + T.label(u);
                return false;
            }
        }
    }
    return true;
}

bool preserves_meets(const MonotoneMap& f, std::string* witness)
{
    auto sd = std::make_shared<const Poset>(f.source->dual());
    auto td = std::make_shared<const Poset>(f.target->dual());
    return preserves_joins(MonotoneMap(sd, td, f.values), witness);
}

Preservation preservation_report(const GaloisConnection& c, std::size_t iso_cap)
{
    const MonotoneMap& d = c.lower;
    const MonotoneMap& g = c.upper;
    const Poset& P1 = *d.source;
    const Poset& P2 = *d.target;
    Preservation r;
    std::string w;
    r.lower_preserves_joins = preserves_joins(d, &w);
    if (!r.lower_preserves_joins)
        r.witness = "lower: " + w;
    r.upper_preserves_meets = preserves_meets(g, &w);
    if (!r.upper_preserves_meets && r.witness.empty())
        r.witness = "upper: " + w;

    MonotoneMap dg = compose(d, g), gd = compose(g, d);
    r.d_onto = d.onto();
    r.g_one_one = g.one_one();
    r.dg_identity = true;
    for (Id b = 0; b < P2.size(); ++b)
        r.dg_identity = r.dg_identity && dg(b) == b;
    r.g_onto = g.onto();
    r.d_one_one = d.one_one();
    r.gd_identity = true;
    for (Id a = 0; a < P1.size(); ++a)
        r.gd_identity = r.gd_identity && gd(a) == a;

    r.triple_identities = true;
    for (Id a = 0; a < P1.size(); ++a)
        r.triple_identities = r.triple_identities && d(g(d(a))) == d(a);
    for (Id b = 0; b < P2.size(); ++b)
        r.triple_identities = r.triple_identities && g(d(g(b))) == g(b);

    // monotonicity of the composites is guaranteed by MonotoneMap construction
    r.closure_laws = true;
    for (Id a = 0; a < P1.size(); ++a)
        r.closure_laws = r.closure_laws && P1.leq(a, gd(a)) && gd(gd(a)) == gd(a);
    r.kernel_laws = true;
    for (Id b = 0; b < P2.size(); ++b)
        r.kernel_laws = r.kernel_laws && P2.leq(dg(b), b) && dg(dg(b)) == dg(b);

    // d restricted to g(P2) should be an isomorphism onto d(P1)
    Bits gim(P1.size()), dim(P2.size());
    for (Id b = 0; b < P2.size(); ++b)
        gim.set(g(b));
    for (Id a = 0; a < P1.size(); ++a)
        dim.set(d(a));
    std::vector<Id> gmap, dmap;
    Poset gi = P1.induced(gim, &gmap), di = P2.induced(dim, &dmap);
    std::vector<Id> f(gi.size(), npos);
    bool ok = gi.size() == di.size();
    for (Id i = 0; ok && i < gi.size(); ++i) {
        Id target = d(gmap[i]);
        for (Id j = 0; j < dmap.size(); ++j)
            if (dmap[j] == target)
                f[i] = j;
        ok = f[i] != npos;
    }
    ok = ok && is_order_isomorphism(gi, di, f);
    if (ok && gi.size() <= iso_cap)
        ok = order_isomorphism(gi, di, iso_cap).has_value();
    r.images_isomorphic = ok;
    return r;
}

const char* to_string(SubposetKind k)
{
    switch (k) {
    case SubposetKind::First: return "first";
    case SubposetKind::Second: return "second";
    case SubposetKind::Both: return "both";
    case SubposetKind::Neither: return "neither";
    }
    return "?";
}

KindResult subposet_kind(PosetPtr P, const Bits& S)
{
    P->check_subset(S);
    KindResult res;
    res.sub = std::make_shared<const Poset>(P->induced(S, &res.embed));
    std::vector<Id> back(P->size(), npos);
    for (Id i = 0; i < res.embed.size(); ++i)
        back[res.embed[i]] = i;
    MonotoneMap inc(res.sub, P, res.embed);

    std::vector<Id> up(P->size()), lo(P->size());
    bool first = true, second = true;
    for (Id a = 0; a < P->size(); ++a) {
        auto r = P->greatest_of(S & P->down(a));
        auto l = P->least_of(S & P->up(a));
        if (r)
            up[a] = back[*r];
        else if (first) {
            first = false;
            res.witness = "no greatest member below " + P->label(a);
        }
        if (l)
            lo[a] = back[*l];
        else if (second) {
            second = false;
            if (res.witness.empty() || !first)
                res.witness = "no least member above " + P->label(a);
        }
    }
    if (first) {
        MonotoneMap r(P, res.sub, up);
        if (verify_connection(inc, r).ok)
            res.retraction_upper = r;
        else
            first = false;
    }
    if (second) {
        MonotoneMap l(P, res.sub, lo);
        if (verify_connection(l, inc).ok)
            res.retraction_lower = l;
        else
            second = false;
    }
    res.kind = first && second ? SubposetKind::Both
             : first           ? SubposetKind::First
             : second          ? SubposetKind::Second
                               : SubposetKind::Neither;
    return res;
}

} // namespace ordfactor
