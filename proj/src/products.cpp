#include "ordfactor/products.hpp"

#include <map>
#include <set>

namespace ordfactor {

Id ExternalProduct::id_of(const std::vector<Id>& coords) const
{
    Id id = 0;
    for (std::size_t t = 0; t < factors.size(); ++t)
        id = id * factors[t]->size() + coords[t];
    return id;
}

ExternalProduct external_product(const std::vector<PosetPtr>& family, Support support, std::size_t cap)
{
    ExternalProduct ep;
    ep.factors = family;
    std::size_t total = 1;
    for (const auto& f : family) {
        if (!f->bottom())
            throw InputError("every factor needs a least element");
        total *= f->size();
        if (total > cap)
            throw CapExceeded("product has more than " + std::to_string(cap) + " tuples");
    }
    const std::size_t k = family.size();
    ep.tuples.assign(total, std::vector<Id>(k, 0));
    std::vector<std::string> labels(total);
    for (Id id = 0; id < total; ++id) {
        Id rest = id;
        for (std::size_t t = k; t-- > 0;) {
            ep.tuples[id][t] = rest % family[t]->size();
            rest /= family[t]->size();
        }
        std::string s = "(";
        for (std::size_t t = 0; t < k; ++t)
            s += (t ? "," : "") + family[t]->label(ep.tuples[id][t]);
        labels[id] = s + ")";
    }
    ep.product = std::make_shared<const Poset>(Poset::from_relation(
        total,
        [&](Id a, Id b) {
            for (std::size_t t = 0; t < k; ++t)
                if (!family[t]->leq(ep.tuples[a][t], ep.tuples[b][t]))
                    return false;
            return true;
        },
        std::move(labels)));

    if (support == Support::Finite)
        ep.report.add("support:finite=full", Verdict::True, {}, "finite index set");

    std::string wo, wj;
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<Id> inj(family[t]->size()), proj(total);
        std::vector<Id> c(k);
        for (std::size_t s = 0; s < k; ++s)
            c[s] = *family[s]->bottom();
        for (Id x = 0; x < family[t]->size(); ++x) {
            c[t] = x;
            inj[x] = ep.id_of(c);
        }
        for (Id id = 0; id < total; ++id)
            proj[id] = ep.tuples[id][t];
        MonotoneMap i(family[t], ep.product, inj), r(ep.product, family[t], proj);
        if (!r.onto() && wo.empty())
            wo = "projection " + std::to_string(t);
        ep.adj.push_back(make_connection(i, r));
    }
    for (Id a = 0; a < total && wj.empty(); ++a) {
        Bits parts(total);
        for (const auto& c : ep.adj)
            parts.set(c.lower(c.upper(a)));
        auto j = ep.product->join(parts);
        if (!j || *j != a)
            wj = ep.product->label(a);
    }
    ep.report.add("r*:onto", verdict(wo.empty()), wo);
    ep.report.add("a=join(i*r*(a))", verdict(wj.empty()), wj);
    return ep;
}

InternalResult internal_product_witness(PosetPtr Pp, const std::vector<Bits>& factors, std::size_t cap)
{
    const Poset& P = *Pp;
    InternalResult res;
    auto fail = [&](std::string clause, std::string detail) {
        res.failed = std::move(clause);
        res.detail = std::move(detail);
        return res;
    };
    if (!P.bottom())
        return fail("bottom", "ambient poset has no least element");
    Id bot = *P.bottom();
    ProductWitness w;
    w.ambient = Pp;
    w.factors = factors;
    std::size_t total = 1;
    for (std::size_t t = 0; t < factors.size(); ++t) {
        P.check_subset(factors[t]);
        if (!factors[t][bot])
            return fail("bottom", "factor " + std::to_string(t) + " misses the least element");
        auto kr = subposet_kind(Pp, factors[t]);
        if (kr.kind != SubposetKind::First && kr.kind != SubposetKind::Both)
            return fail("first-kind", "factor " + std::to_string(t) + ": " + kr.witness);
        w.kinds.push_back(std::move(kr));
        total *= factors[t].count();
        if (total > cap)
            throw CapExceeded("more than " + std::to_string(cap) + " selections");
    }

    std::vector<std::vector<Id>> fm;
    for (const auto& f : factors)
        fm.push_back(members(f));
    const std::size_t k = factors.size();
    w.decomposition.assign(P.size(), {});
    std::vector<bool> hit(P.size(), false);
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t s = 0; s < total; ++s) {
        std::vector<Id> sel(k);
        Bits A(P.size());
        for (std::size_t t = 0; t < k; ++t) {
            sel[t] = fm[t][idx[t]];
            A.set(sel[t]);
        }
        auto j = P.join(A);
        if (!j)
            return fail("join-exists", "selection " + P.format(A) + " has no join");
        if (hit[*j])
            return fail("unique-selection", P.label(*j) + " is the join of two selections");
        hit[*j] = true;
        w.decomposition[*j] = sel;
        for (std::size_t t = k; t-- > 0;) {
            if (++idx[t] < fm[t].size())
                break;
            idx[t] = 0;
        }
    }
    for (Id a = 0; a < P.size(); ++a)
        if (!hit[a])
            return fail("onto", P.label(a) + " is not the join of a selection");

    std::string w38, wr, wi;
    for (Id a = 0; a < P.size(); ++a) {
        Bits parts(P.size());
        for (std::size_t t = 0; t < k; ++t) {
            Id rt = w.kinds[t].embed[(*w.kinds[t].retraction_upper)(a)];
            parts.set(rt);
            if (rt != w.decomposition[a][t] && wr.empty())
                wr = P.label(a) + " at factor " + std::to_string(t);
        }
        auto j = P.join(parts);
        if ((!j || *j != a) && w38.empty())
            w38 = P.label(a);
    }
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t)
            if ((factors[s] & factors[t]) != P.single(bot) && wi.empty())
                wi = std::to_string(s) + "," + std::to_string(t);
    w.report.add("a=join(i r(a))", verdict(w38.empty()), w38);
    w.report.add("r_t(join)=a_t", verdict(wr.empty()), wr);
    w.report.add("factors:pairwise-bottom", verdict(wi.empty()), wi);
    res.witness = std::move(w);
    return res;
}

InternalExternal internal_external_iso(const ProductWitness& w)
{
    InternalExternal ie;
    std::vector<PosetPtr> subs;
    for (const auto& kr : w.kinds)
        subs.push_back(kr.sub);
    ie.ext = external_product(subs);
    const Poset& P = *w.ambient;
    ie.map.resize(P.size());
    for (Id a = 0; a < P.size(); ++a) {
        std::vector<Id> c;
        for (const auto& kr : w.kinds)
            c.push_back((*kr.retraction_upper)(a));
        ie.map[a] = ie.ext.id_of(c);
    }
    if (!is_order_isomorphism(P, *ie.ext.product, ie.map))
        throw std::logic_error("internal product is not isomorphic to the external one");
    return ie;
}

static PosetPtr chain(unsigned k)
{
    std::vector<std::string> labels;
    for (unsigned i = 0; i <= k; ++i)
        labels.push_back(std::to_string(i));
    return std::make_shared<const Poset>(
        Poset::from_relation(k + 1, [](Id a, Id b) { return a <= b; }, std::move(labels)));
}

static void fill_box(OrderRep& r, const Poset& P)
{
    std::vector<PosetPtr> chains;
    for (unsigned b : r.bounds)
        chains.push_back(chain(b));
    r.box = external_product(chains);
    r.map.resize(P.size());
    std::string wb;
    for (Id a = 0; a < P.size(); ++a) {
        std::vector<Id> c(r.vec[a].begin(), r.vec[a].end());
        for (std::size_t t = 0; t < c.size(); ++t)
            if (c[t] > r.bounds[t] && wb.empty())
                wb = P.label(a) + " exceeds the truncation";
        r.map[a] = wb.empty() ? r.box.id_of(c) : 0;
    }
    std::vector<Id> inv(r.box.product->size(), npos);
    for (Id a = 0; a < P.size() && wb.empty(); ++a) {
        if (inv[r.map[a]] != npos)
            wb = P.label(inv[r.map[a]]) + " and " + P.label(a) + " share a vector";
        inv[r.map[a]] = a;
    }
    if (wb.empty() && P.size() != r.box.product->size())
        wb = "image misses part of the box";
    r.report.add("bijective", verdict(wb.empty()), wb);
    bool iso = wb.empty() && is_order_isomorphism(P, *r.box.product, r.map);
    r.report.add("iso-both-ways", verdict(iso), iso ? "" : "order differs from the componentwise order");
    std::string wt;
    for (Id a = 0; a < P.size() && wb.empty(); ++a)
        if (inv[r.map[a]] != a && wt.empty())
            wt = P.label(a);
    r.report.add("round-trip", verdict(wb.empty() && wt.empty()), wt);
}

static unsigned max_exponent(const Instance& inst, Id base)
{
    unsigned k = 0;
    for (const auto& pp : inst.B)
        if (pp.base == base)
            k = std::max(k, pp.exponent);
    return k;
}

OrderRep order_representation(const Instance& inst)
{
    Tri f1 = f1_check(inst);
    if (f1.verdict == Verdict::False)
        throw InputError("F1 fails at " + f1.witness);
    const Poset& P = inst.P();
    OrderRep r;
    r.report.instance = inst.name;
    r.bases = inst.bases();
    for (Id b : r.bases)
        r.bounds.push_back(max_exponent(inst, b));
    r.vec.resize(P.size());
    for (Id a = 0; a < P.size(); ++a)
        for (Id b : r.bases)
            r.vec[a].push_back(valuation(inst, a, b));
    fill_box(r, P);

    // the decomposition must be readable off the vector
    std::string wd;
    for (Id a = 0; a < P.size() && wd.empty(); ++a) {
        Bits parts(P.size());
        std::set<std::pair<Id, unsigned>> expect;
        for (std::size_t t = 0; t < r.bases.size(); ++t) {
            if (!r.vec[a][t])
                continue;
            expect.insert({r.bases[t], r.vec[a][t]});
            for (const auto& pp : inst.B)
                if (pp.base == r.bases[t] && pp.exponent == r.vec[a][t])
                    parts.set(pp.element);
        }
        auto j = P.join(parts);
        auto dec = decompose(inst, a);
        std::set<std::pair<Id, unsigned>> got;
        if (dec)
            for (const auto& pp : *dec)
                got.insert({pp.base, pp.exponent});
        if (!j || *j != a || !dec || got != expect)
            wd = P.label(a);
    }
    r.report.add("decomposition-from-vector", verdict(wd.empty()), wd);

    if (inst.mult) {
        const auto& m = *inst.mult;
        std::string wm;
        for (Id a = 0; a < P.size() && wm.empty(); ++a)
            for (Id b = 0; b < P.size(); ++b) {
                bool fits = true;
                std::vector<unsigned> s(r.bases.size());
                for (std::size_t t = 0; t < s.size(); ++t) {
                    s[t] = r.vec[a][t] + r.vec[b][t];
                    fits = fits && s[t] <= r.bounds[t];
                }
                if (m.defined(a, b) != fits || (fits && r.vec[m(a, b)] != s)) {
                    wm = P.label(a) + "*" + P.label(b);
                    break;
                }
            }
        r.om = verdict(wm.empty() && r.report.find("iso-both-ways")->verdict == Verdict::True);
        r.report.add("multiplicative", verdict(wm.empty()), wm);
    }
    return r;
}

OrderRep order_representation_M(const Instance& inst, const BIdealLattice& M)
{
    Tri d1 = d1_check(inst);
    if (d1.verdict == Verdict::False)
        throw InputError("D1 fails at " + d1.witness);
    if (!M.complete)
        throw InputError("M is not completely enumerated: " + M.note);
    const Poset& G = inst.P();
    auto Mp = M.order(G);
    OrderRep r;
    r.report.instance = inst.name;
    r.bases = inst.bases();
    for (Id b : r.bases)
        r.bounds.push_back(max_exponent(inst, b));
    r.vec.resize(M.ideals.size());
    for (Id j = 0; j < M.ideals.size(); ++j)
        for (Id b : r.bases) {
            unsigned v = 0;
            for (const auto& pp : inst.B)
                if (pp.base == b && M.ideals[j][pp.element])
                    v = std::max(v, pp.exponent);
            r.vec[j].push_back(v);
        }
    fill_box(r, *Mp);

    BContext ctx(inst);
    std::string wd;
    for (Id j = 0; j < M.ideals.size() && wd.empty(); ++j) {
        std::vector<Bits> parts{G.single(inst.unit)};
        for (const auto& pp : inst.B)
            for (std::size_t t = 0; t < r.bases.size(); ++t)
                if (pp.base == r.bases[t] && pp.exponent == r.vec[j][t])
                    parts.push_back(G.down(pp.element));
        if (m_join(ctx, parts) != M.ideals[j])
            wd = Mp->label(j);
    }
    r.report.add("decomposition-from-vector", verdict(wd.empty()), wd);
    return r;
}

std::vector<Bits> b_circ_factors(const Instance& inst, const BIdealLattice& M)
{
    const Poset& G = inst.P();
    Id one = M.find(G.down(inst.unit));
    if (one == npos)
        throw InputError("down of the unit is not a B-ideal");
    std::vector<Bits> out;
    for (Id b : inst.bases()) {
        Bits f(M.ideals.size());
        f.set(one);
        for (const auto& pp : inst.B)
            if (pp.base == b) {
                Id j = M.find(G.down(pp.element));
                if (j == npos)
                    throw InputError("down " + inst.label(pp.element) + " is not a B-ideal");
                f.set(j);
            }
        out.push_back(f);
    }
    return out;
}

MultTable principal_product(const Instance& inst, const BIdealLattice& M)
{
    if (!inst.mult)
        throw InputError(inst.name + " has no product");
    const Poset& G = inst.P();
    MultTable t(M.ideals.size());
    std::vector<Id> of(G.size());
    for (Id x = 0; x < G.size(); ++x)
        of[x] = M.find(G.down(x));
    for (Id x = 0; x < G.size(); ++x)
        for (Id y : inst.mult->partners()[x])
            if (of[x] != npos && of[y] != npos && of[(*inst.mult)(x, y)] != npos)
                t.set(of[x], of[y], of[(*inst.mult)(x, y)]);
    return t;
}

AlgebraicView algebraic_view(const ProductWitness& w, const MultTable& fm, const MultTable* existing)
{
    const Poset& P = *w.ambient;
    const std::size_t k = w.factors.size();
    AlgebraicView av;
    av.transported = MultTable(P.size());
    auto comp = [&](std::size_t t, Id a) { return w.kinds[t].embed[(*w.kinds[t].retraction_upper)(a)]; };
    for (Id a = 0; a < P.size(); ++a)
        for (Id b = a; b < P.size(); ++b) {
            Bits parts(P.size());
            bool ok = true;
            for (std::size_t t = 0; t < k && ok; ++t) {
                Id c = fm(comp(t, a), comp(t, b));
                ok = c != npos && w.factors[t][c];
                if (ok)
                    parts.set(c);
            }
            if (!ok)
                continue;
            if (auto j = P.join(parts))
                av.transported.set(a, b, *j);
        }
    const auto& T = av.transported;
    Id bot = *P.bottom();
    std::string wu;
    for (Id a = 0; a < P.size() && wu.empty(); ++a)
        if (T(bot, a) != a)
            wu = P.label(a);
    av.report.add("unit-neutral", verdict(wu.empty()), wu);

    // exponent of a in factor t: its height inside the chain
    auto height = [&](std::size_t t, Id a) { return (P.down(comp(t, a)) & w.factors[t]).count() - 1; };
    std::string wv;
    for (Id a = 0; a < P.size() && wv.empty(); ++a)
        for (Id b : T.partners()[a]) {
            bool add = true;
            for (std::size_t t = 0; t < k; ++t)
                add = add && height(t, T(a, b)) == height(t, a) + height(t, b);
            if (!add) {
                wv = P.label(a) + "*" + P.label(b);
                break;
            }
        }
    av.report.add("exponent-vectors-add", verdict(wv.empty()), wv);
    if (existing) {
        std::string we;
        for (Id a = 0; a < P.size() && we.empty(); ++a)
            for (Id b = 0; b < P.size(); ++b)
                if (T(a, b) != (*existing)(a, b)) {
                    we = P.label(a) + "*" + P.label(b);
                    break;
                }
        av.report.add("agrees-with-existing", verdict(we.empty()), we);
    }
    return av;
}

Report prime_component_checks(const Instance& inst, const BIdealLattice& M)
{
    Tri f1 = f1_check(inst);
    if (f1.verdict == Verdict::False)
        throw InputError("F1 fails at " + f1.witness);
    if (!M.complete)
        throw InputError("M is not completely enumerated: " + M.note);
    const Poset& G = inst.P();
    auto Gp = inst.poset;
    BContext ctx(inst);
    Report rep;
    rep.instance = inst.name;
    auto bases = inst.bases();
    std::vector<Bits> Q, Pq;
    std::vector<Id> first_power;
    for (Id b : bases) {
        Id top = npos;
        unsigned e = 0;
        for (const auto& pp : inst.B)
            if (pp.base == b) {
                if (pp.exponent >= e) {
                    e = pp.exponent;
                    top = pp.element;
                }
                if (pp.exponent == 1)
                    first_power.push_back(pp.element);
            }
        Q.push_back(G.down(top));
    }
    std::string wk;
    for (std::size_t t = 0; t < Q.size(); ++t) {
        auto kr = subposet_kind(Gp, Q[t]);
        if (M.find(Q[t]) == npos || (kr.kind != SubposetKind::First && kr.kind != SubposetKind::Both)) {
            wk = G.format(Q[t]);
            break;
        }
    }
    rep.add("Q_p:first-kind-B-ideal", verdict(wk.empty()), wk);

    Bits unit = G.single(inst.unit);
    std::string wq;
    for (std::size_t s = 0; s < Q.size() && wq.empty(); ++s)
        for (std::size_t t = s + 1; t < Q.size(); ++t)
            if ((Q[s] & Q[t]) != unit) {
                wq = inst.label(bases[s]) + "," + inst.label(bases[t]);
                break;
            }
    rep.add("Q_p&Q_q=down(1)", verdict(wq.empty()), wq);
    for (std::size_t t = 0; t < Q.size(); ++t) {
        std::vector<Bits> others{unit};
        for (std::size_t s = 0; s < Q.size(); ++s)
            if (s != t)
                others.push_back(Q[s]);
        Pq.push_back(m_join(ctx, others));
    }
    Bits cap = G.all();
    for (const auto& p : Pq)
        cap &= p;
    rep.add("meet(P_q)=down(1)", verdict(cap == unit), cap == unit ? "" : G.format(cap));
    std::string wt;
    for (std::size_t s = 0; s < Pq.size() && wt.empty(); ++s)
        for (std::size_t t = s + 1; t < Pq.size(); ++t)
            if (m_join(ctx, {Pq[s], Pq[t]}) != G.all()) {
                wt = inst.label(bases[s]) + "," + inst.label(bases[t]);
                break;
            }
    rep.add("P_p v P_q=top", verdict(wt.empty()), wt);
    std::string wj, wp, w2;
    for (std::size_t t = 0; t < Pq.size(); ++t) {
        Bits J = j_b(inst, first_power[t]);
        if (J != Pq[t] && wj.empty())
            wj = inst.label(bases[t]);
        if (!classify_subset(ctx, J).prime_ideal && wp.empty())
            wp = inst.label(bases[t]);
        auto kr = subposet_kind(Gp, Pq[t]);
        if (kr.kind != SubposetKind::Second && kr.kind != SubposetKind::Both && w2.empty())
            w2 = "P_" + inst.label(bases[t]) + " = " + G.format(Pq[t]) + ": " + kr.witness;
    }
    rep.add("P_q=J_q", verdict(wj.empty()), wj);
    rep.add("J_q:prime", verdict(wp.empty()), wp);
    rep.add("P_q:second-kind", verdict(w2.empty()), w2);
    return rep;
}

} // namespace ordfactor
