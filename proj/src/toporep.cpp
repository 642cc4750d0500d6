#include "ordfactor/toporep.hpp"

#include <set>

namespace ordfactor {

static std::string not_strong_reason(const Poset& P, Id a)
{
    for (Id b = 0; b < P.size(); ++b)
        for (Id c = b + 1; c < P.size(); ++c) {
            auto j = P.join2(b, c);
            if (j && P.leq(a, *j) && !P.leq(a, b) && !P.leq(a, c))
                return P.label(a) + " <= " + P.label(b) + " v " + P.label(c) + " but lies below neither";
        }
    return P.label(a) + " is not the join of the strongly join-irreducible elements below it";
}

Representation build_representation(PosetPtr Pp)
{
    const Poset& P = *Pp;
    if (P.size() == 0)
        throw InputError("empty poset has no representation");
    auto lc = lattice_class(P, 0);
    if (!lc.complete)
        throw InputError("not a complete lattice: " + lc.witness);
    const std::size_t n = P.size();
    Bits X(n);
    for (Id a = 0; a < n; ++a)
        if (irreducible(P, a, Side::Join, Strength::Strong, Arity::Complete))
            X.set(a);
    for (Id a = 0; a < n; ++a) {
        auto j = P.join(P.down(a) & X);
        if (!j || *j != a)
            throw InputError("decomposition fails at " + P.label(a) + ": " + not_strong_reason(P, a));
    }

    Representation r;
    r.lattice = Pp;
    r.space.points = X;
    auto& f = r.space.closed;
    for (Id a = 0; a < n; ++a)
        f.push_back(P.down(a) & X);
    Id bot = *P.bottom(), top = *P.top();
    Report& rep = r.report;
    rep.add("f(0)=empty", verdict(f[bot].none()));
    rep.add("f(1)=X", verdict(f[top] == X));

    auto ops = op_tables(P);
    std::string wj, wm;
    for (Id a = 0; a < n; ++a)
        for (Id b = a + 1; b < n; ++b) {
            if (wj.empty() && f[ops.j(a, b)] != (f[a] | f[b]))
                wj = P.label(a) + "," + P.label(b);
            if (wm.empty() && f[ops.m(a, b)] != (f[a] & f[b]))
                wm = P.label(a) + "," + P.label(b);
        }
    rep.add("f:finite-joins", verdict(wj.empty()), wj);
    rep.add("f:meets", verdict(wm.empty()), wm);

    // pairwise closure is exhaustive for a finite family; the empty intersection is X
    std::set<Bits, BitsLess> C(f.begin(), f.end());
    std::string wc;
    if (!C.count(Bits(n)) || !C.count(X))
        wc = "missing empty set or X";
    for (auto it = C.begin(); it != C.end() && wc.empty(); ++it)
        for (auto jt = std::next(it); jt != C.end(); ++jt)
            if (!C.count(*it | *jt) || !C.count(*it & *jt)) {
                wc = P.format(*it) + " and " + P.format(*jt);
                break;
            }
    rep.add("C:axioms", verdict(wc.empty()), wc);

    std::string wi;
    if (C.size() != n)
        wi = "f is not one-one";
    for (Id a = 0; a < n && wi.empty(); ++a)
        for (Id b = 0; b < n; ++b)
            if (P.leq(a, b) != f[a].is_subset_of(f[b])) {
                wi = P.label(a) + "," + P.label(b);
                break;
            }
    rep.add("f:order-iso", verdict(wi.empty()), wi);

    std::vector<Bits> closure(n);
    std::string wp;
    for (Id x : members(X)) {
        Bits cl = X;
        for (const auto& c : C)
            if (c[x])
                cl &= c;
        closure[x] = cl;
        if (wp.empty() && cl != f[x])
            wp = P.label(x);
    }
    rep.add("point-closure", verdict(wp.empty()), wp);
    std::string wt;
    auto xs = members(X);
    for (std::size_t i = 0; i < xs.size() && wt.empty(); ++i)
        for (std::size_t k = i + 1; k < xs.size(); ++k)
            if (closure[xs[i]] == closure[xs[k]]) {
                wt = P.label(xs[i]) + "," + P.label(xs[k]);
                break;
            }
    rep.add("T0", verdict(wt.empty()), wt);
    return r;
}

MRepresentation represent_M(const Instance& inst, const BIdealLattice& M, std::size_t upset_cap)
{
    Tri d1 = d1_check(inst);
    if (d1.verdict == Verdict::False)
        throw InputError("D1 fails at " + d1.witness);
    if (!M.complete)
        throw InputError("M is not completely enumerated: " + M.note);
    const Poset& G = inst.P();
    MRepresentation mr;
    mr.rep = build_representation(M.order(G));
    Report& rep = mr.report;
    rep.instance = inst.name;
    for (const auto& c : mr.rep.report.checks)
        rep.checks.push_back(c);

    Bits expect(M.ideals.size());
    std::string wx;
    for (const auto& pp : inst.B) {
        Id j = M.find(G.down(pp.element));
        mr.point_of_base.push_back(j);
        if (j == npos)
            wx = "down " + inst.label(pp.element) + " is not a B-ideal";
        else
            expect.set(j);
    }
    if (wx.empty() && expect != mr.rep.space.points)
        wx = "points differ from the down-sets of B";
    rep.add("points=down(B)", verdict(wx.empty()), wx);

    std::vector<Bits> Jb;
    for (const auto& pp : inst.B)
        Jb.push_back(j_b(inst, pp.element));
    std::string wb;
    for (const auto& J : M.ideals) {
        Bits cap = G.all();
        for (const auto& K : Jb)
            if (J.is_subset_of(K))
                cap &= K;
        if (cap != J) {
            wb = G.format(J);
            break;
        }
    }
    rep.add("closed-base:J_b", verdict(wb.empty()), wb);

    BContext ctx(inst);
    std::string wo;
    for (const auto& J : M.ideals) {
        Bits U = ~J;
        mr.open.push_back(U);
        if (wo.empty() && !classify_subset(ctx, U).b_set)
            wo = G.format(U) + " is not a B-set";
        Bits un = G.none();
        for (const auto& K : Jb)
            if ((~K).is_subset_of(U))
                un |= ~K;
        if (wo.empty() && un != U)
            wo = G.format(U) + " is not a union of basic open sets";
    }
    rep.add("open-base:complements", verdict(wo.empty()), wo);

    if (G.size() > upset_cap) {
        rep.add("open:B-sets-are-open", Verdict::NotEvaluated, {}, "carrier above " + std::to_string(upset_cap));
    } else {
        std::string w;
        for_each_antichain(G, [&](const Bits& A) {
            Bits U = G.up_set(A);
            if (classify_subset(ctx, U).b_set && M.find(~U) == npos) {
                w = G.format(U);
                return false;
            }
            return true;
        });
        rep.add("open:B-sets-are-open", verdict(w.empty()), w);
    }
    return mr;
}

NeighborhoodView neighborhood_view(const Instance& inst, const BIdealLattice& M, Id b)
{
    Tri d1 = d1_check(inst);
    if (d1.verdict == Verdict::False)
        throw InputError("D1 fails at " + d1.witness);
    const Poset& G = inst.P();
    NeighborhoodView nv;
    nv.report.instance = inst.name;
    Bits Jb = j_b(inst, b);
    nv.least_member = ~Jb;
    for (const auto& J : delta_a(inst, M, b))
        nv.delta_b_complements.push_back(~J);

    bool found = false;
    std::string wl, wm, wa;
    for (const auto& U : nv.delta_b_complements) {
        found = found || U == nv.least_member;
        if (wl.empty() && !nv.least_member.is_subset_of(U))
            wl = G.format(U);
        if (wm.empty() && !U[b])
            wm = G.format(U);
        bool basic = false;
        for (const auto& pp : inst.B) {
            Bits V = G.up(pp.element);
            // V = complement of J_b' belongs to the family iff b' <= b
            if (V.is_subset_of(U) && G.leq(pp.element, b)) {
                basic = true;
                break;
            }
        }
        if (wa.empty() && !basic)
            wa = G.format(U);
    }
    if (!found)
        wl = "complement of J_" + inst.label(b) + " is not in the family";
    nv.report.add("least-member", verdict(wl.empty()), wl);
    nv.report.add("b-in-every-member", verdict(wm.empty()), wm);
    nv.report.add("neighborhood-axiom", verdict(wa.empty()), wa);
    return nv;
}

} // namespace ordfactor
