#include "ordfactor/divisor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordfactor {

void validate(const IdealSystem& sys)
{
    const Poset& I = *sys.ideals;
    const Instance& mon = *sys.monoid;
    if (!I.bottom() || *I.bottom() != sys.zero)
        throw InputError("zero ideal must be the least ideal");
    if (!I.top())
        throw InputError("ideal system needs a unit ideal");
    for (Id a = 0; a < I.size(); ++a)
        for (Id b = a + 1; b < I.size(); ++b)
            if (!I.meet2(a, b))
                throw InputError("ideals " + I.label(a) + " and " + I.label(b) + " have no meet");
    if (sys.principal.size() != mon.size())
        throw InputError("principal map must cover the monoid carrier");
    Bits hit(I.size());
    for (Id x = 0; x < mon.size(); ++x) {
        Id px = sys.principal[x];
        I.check_index(px);
        if (hit[px])
            throw InputError("principal map is not one-one at " + mon.label(x));
        if (px == sys.zero)
            throw InputError("zero may not be principal");
        hit.set(px);
    }
    for (Id x = 0; x < mon.size(); ++x)
        for (Id y = 0; y < mon.size(); ++y)
            if (mon.P().leq(x, y) != I.leq(sys.principal[y], sys.principal[x]))
                throw InputError("principal map does not reverse the order at " + mon.label(x) + "," +
                                 mon.label(y));
    if (sys.principal[mon.unit] != *I.top())
        throw InputError("the unit must map to the unit ideal");
}

IdealSystem principal_system(InstancePtr monoid)
{
    const Instance& mon = *monoid;
    const Poset& p = mon.P();
    const std::size_t n = p.size();
    std::set<Bits, BitsLess> fam;
    for (Id x = 0; x < n; ++x)
        fam.insert(p.up(x));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bits> cur(fam.begin(), fam.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (fam.insert(cur[i] & cur[j]).second)
                    grew = true;
    }
    fam.insert(p.none());
    std::vector<Bits> sets(fam.begin(), fam.end());
    std::vector<std::string> labels;
    std::map<Bits, Id, BitsLess> where;
    for (Id i = 0; i < sets.size(); ++i)
        where[sets[i]] = i;
    std::vector<std::string> names(sets.size());
    for (Id i = 0; i < sets.size(); ++i)
        names[i] = sets[i].none() ? "(0)" : p.format(sets[i]);
    IdealSystem sys;
    sys.principal.resize(n);
    for (Id x = 0; x < n; ++x) {
        sys.principal[x] = where[p.up(x)];
        names[sys.principal[x]] = "(" + p.label(x) + ")";
    }
    sys.name = mon.name + "/ideals";
    sys.ideals = std::make_shared<const Poset>(Poset::from_sets(sets, names));
    sys.zero = where[p.none()];
    sys.monoid = monoid;
    if (mon.mult) {
        MultTable t(sets.size());
        for (Id x = 0; x < n; ++x)
            for (Id y : mon.mult->partners()[x])
                t.set(sys.principal[x], sys.principal[y], sys.principal[(*mon.mult)(x, y)]);
        for (Id i = 0; i < sets.size(); ++i)
            t.set(sys.zero, i, sys.zero);
        sys.mult = t;
    }
    validate(sys);
    return sys;
}

Id divisorial_closure(const IdealSystem& sys, Id a)
{
    const Poset& I = *sys.ideals;
    I.check_index(a);
    if (a == sys.zero)
        return a;
    Bits above(I.size());
    for (Id px : sys.principal)
        if (I.leq(a, px))
            above.set(px);
    if (above.none())
        throw std::logic_error("no principal ideal contains " + I.label(a));
    return *I.meet(above);
}

DivisorialData divisorial_data(const IdealSystem& sys)
{
    const Poset& I = *sys.ideals;
    DivisorialData dd;
    dd.closure.resize(I.size());
    dd.fixed_points = Bits(I.size());
    for (Id a = 0; a < I.size(); ++a) {
        dd.closure[a] = divisorial_closure(sys, a);
        if (dd.closure[a] == a)
            dd.fixed_points.set(a);
    }
    dd.closure_laws = true;
    for (Id a = 0; a < I.size(); ++a) {
        dd.closure_laws = dd.closure_laws && I.leq(a, dd.closure[a]) && dd.closure[dd.closure[a]] == dd.closure[a];
        for (Id b : members(I.up(a)))
            dd.closure_laws = dd.closure_laws && I.leq(dd.closure[a], dd.closure[b]);
    }
    std::map<Id, std::vector<Id>> cls;
    for (Id a = 0; a < I.size(); ++a)
        if (a != sys.zero)
            cls[dd.closure[a]].push_back(a);
    for (auto& [c, v] : cls)
        dd.classes.push_back(v);
    return dd;
}

std::string DivisorModel::label_mplus(Id j) const
{
    return m_plus->label(j);
}

DivisorModel build_model(const IdealSystem& sys, const EnumConfig& cfg)
{
    validate(sys);
    DivisorModel dm;
    dm.sys = sys;
    const Instance& mon = *sys.monoid;
    const Poset& carrier = mon.P();
    const Poset& I = *sys.ideals;
    dm.ctx = std::make_shared<const BContext>(mon);
    dm.M = enumerate_M(mon, cfg);
    if (!dm.M.complete)
        throw InputError("fundamental connection needs all of M: " + dm.M.note);

    const std::size_t m = dm.M.ideals.size();
    dm.top0 = m;
    std::vector<std::string> labels;
    for (const auto& J : dm.M.ideals)
        labels.push_back(carrier.format(J));
    labels.push_back("[0]");
    dm.m_plus = std::make_shared<const Poset>(Poset::from_relation(
        m + 1,
        [&](Id a, Id b) {
            if (b == m)
                return true;
            if (a == m)
                return false;
            return dm.M.ideals[a].is_subset_of(dm.M.ideals[b]);
        },
        labels));
    dm.i_tilde = std::make_shared<const Poset>(I.dual());

    std::vector<Id> g(I.size()), d(m + 1);
    for (Id a = 0; a < I.size(); ++a) {
        if (a == sys.zero) {
            g[a] = dm.top0;
            continue;
        }
        Bits J(carrier.size());
        for (Id x = 0; x < carrier.size(); ++x)
            if (I.leq(a, sys.principal[x]))
                J.set(x);
        Id j = dm.M.find(J);
        if (j == npos)
            throw InputError("g(" + I.label(a) + ") = " + carrier.format(J) + " is not a B-ideal");
        g[a] = j;
    }
    for (Id j = 0; j < m; ++j) {
        Bits pr(I.size());
        for (Id x : members(dm.M.ideals[j]))
            pr.set(sys.principal[x]);
        d[j] = *I.meet(pr);
    }
    d[m] = sys.zero;
    dm.conn = make_connection(MonotoneMap(dm.m_plus, dm.i_tilde, d), MonotoneMap(dm.i_tilde, dm.m_plus, g));

    Bits mss(m + 1);
    for (Id a = 0; a < I.size(); ++a)
        if (a != sys.zero)
            mss.set(g[a]);
    mss.reset(dm.top0);
    dm.mss = members(mss);
    dm.mss_order = std::make_shared<const Poset>(dm.m_plus->induced(mss));

    if (sys.mult) {
        const auto& t = *sys.mult;
        std::vector<Id> pos(m + 1, npos);
        for (Id i = 0; i < dm.mss.size(); ++i)
            pos[dm.mss[i]] = i;
        MultTable mm(dm.mss.size());
        for (Id i = 0; i < dm.mss.size(); ++i)
            for (Id k = 0; k < dm.mss.size(); ++k) {
                Id p = t(d[dm.mss[i]], d[dm.mss[k]]);
                if (p == npos || p == sys.zero)
                    continue;
                Id r = pos[g[p]];
                if (r != npos)
                    mm.set(i, k, r);
            }
        dm.mss_mult = mm;
    }
    return dm;
}

Report m_star_star_checks(const DivisorModel& dm)
{
    Report rep;
    rep.instance = dm.sys.name;
    const Poset& carrier = dm.sys.monoid->P();
    const auto& d = dm.conn.lower;
    std::string w;
    for (Id j : dm.mss) {
        const Bits& J = dm.set_of(j);
        Bits meet = carrier.all();
        for (Id x = 0; x < carrier.size(); ++x)
            if (J.is_subset_of(carrier.down(x)))
                meet &= carrier.down(x);
        if (meet != J) {
            w = carrier.format(J);
            break;
        }
    }
    rep.add("M**:meet-of-principals", verdict(w.empty()), w);

    w.clear();
    for (Id j = 0; j < dm.top0 && w.empty(); ++j) {
        bool ok = false;
        for (Id k : dm.mss)
            ok = ok || dm.set_of(j).is_subset_of(dm.set_of(k));
        if (!ok)
            w = carrier.format(dm.set_of(j));
    }
    rep.add("M*:below-some-M**", verdict(w.empty()), w);

    w.clear();
    for (Id j = 0; j <= dm.top0 && w.empty(); ++j)
        if (divisorial_closure(dm.sys, d(j)) != d(j))
            w = dm.label_mplus(j);
    rep.add("d(J):divisorial", verdict(w.empty()), w);

    Bits S(dm.m_plus->size());
    for (Id j : dm.mss)
        S.set(j);
    S.set(dm.top0);
    auto kind = subposet_kind(dm.m_plus, S);
    bool second = kind.kind == SubposetKind::Second || kind.kind == SubposetKind::Both;
    bool matches = second;
    if (second) {
        // the lower adjoint of the inclusion must be g.d
        auto gd = compose(dm.conn.upper, dm.conn.lower);
        for (Id j = 0; j < dm.m_plus->size(); ++j)
            matches = matches && kind.embed[(*kind.retraction_lower)(j)] == gd(j);
    }
    rep.add("M**:second-kind", verdict(matches), matches ? "" : kind.witness);
    return rep;
}

Report atom_prime_check(const DivisorModel& dm)
{
    Report rep;
    rep.instance = dm.sys.name;
    const Instance& mon = *dm.sys.monoid;
    const Poset& Q = *dm.mss_order;
    Bits rest = Q.all();
    if (Q.bottom())
        rest.reset(*Q.bottom());
    Bits at = Q.minimal_of(rest);
    for (Id base : mon.bases()) {
        Bits dp = mon.P().down(base);
        Id j = npos;
        for (Id i = 0; i < dm.mss.size(); ++i)
            if (dm.set_of(dm.mss[i]) == dp)
                j = i;
        std::string nm = "atom:" + mon.label(base);
        if (j == npos || !at[j]) {
            rep.add(nm, Verdict::False, "down " + mon.label(base) + " is not an atom of M**");
            continue;
        }
        rep.add(nm, Verdict::True);
        if (!dm.mss_mult) {
            rep.add("prime:" + mon.label(base), Verdict::NotEvaluated, {}, "no product on M**");
            continue;
        }
        const auto& mm = *dm.mss_mult;
        std::string w;
        for (Id k = 0; k < Q.size() && w.empty(); ++k)
            for (Id l : mm.partners()[k])
                if (Q.leq(j, mm(k, l)) && !Q.leq(j, k) && !Q.leq(j, l)) {
                    w = Q.label(k) + "*" + Q.label(l);
                    break;
                }
        rep.add("prime:" + mon.label(base), verdict(w.empty()), w);
    }
    return rep;
}

D6Result check_D6(const DivisorModel& dm, std::size_t cap_unique)
{
    D6Result r;
    r.check.condition = "D6";
    const Poset& Q = *dm.mss_order;
    auto Qp = dm.mss_order;
    Bits rest = Q.all();
    Id one = *Q.bottom();
    rest.reset(one);
    Bits at = Q.minimal_of(rest);
    std::vector<PrimePower> E;
    for (Id e : members(at)) {
        // the powers of e: members whose only atom below is e
        std::vector<Id> chain;
        for (Id x = 0; x < Q.size(); ++x)
            if (x != one && (Q.down(x) & at) == Q.single(e))
                chain.push_back(x);
        std::sort(chain.begin(), chain.end(),
                  [&](Id a, Id b) { return Q.down(a).count() < Q.down(b).count(); });
        for (std::size_t i = 1; i < chain.size(); ++i)
            if (!Q.lt(chain[i - 1], chain[i])) {
                r.check.verdict = Verdict::False;
                r.check.witness = "members over the single atom " + Q.label(e) + " are not a chain: " +
                                  Q.label(chain[i - 1]) + ", " + Q.label(chain[i]);
                return r;
            }
        if (dm.mss_mult) {
            // cross-check against repeated products
            const auto& mm = *dm.mss_mult;
            std::vector<Id> pw{e};
            while (pw.size() < chain.size() && mm.defined(pw.back(), e))
                pw.push_back(mm(pw.back(), e));
            std::vector<Id> head(chain.begin(), chain.begin() + std::min(pw.size(), chain.size()));
            r.extra.add("E:powers-by-product:" + Q.label(e), verdict(head == pw),
                        head == pw ? "" : "product powers differ from the chain over " + Q.label(e));
        }
        r.E.push_back(chain);
        for (std::size_t i = 0; i < chain.size(); ++i)
            E.push_back(PrimePower{chain[i], e, static_cast<unsigned>(i + 1)});
    }
    Instance inst = make_poset_with_b(dm.sys.name + "/M**", Qp, E);
    Tri ud = unique_decomposition(inst, cap_unique);
    r.check.verdict = ud.verdict;
    if (ud.verdict == Verdict::False)
        r.check.witness = ud.witness;
    else
        r.check.note = ud.witness;
    Tri b4 = b4_check(inst, cap_unique);
    r.extra.add("B4(E)", b4.verdict, b4.verdict == Verdict::False ? b4.witness : "");
    r.as_instance = std::move(inst);
    return r;
}

Classification classify(const DivisorModel& dm)
{
    Classification c;
    c.report.instance = dm.sys.name;
    D6Result d6 = check_D6(dm);
    c.krull = d6.check;
    c.krull.condition = "krull";

    const auto& d = dm.conn.lower;
    const auto& g = dm.conn.upper;
    const Poset& I = *dm.sys.ideals;
    std::string wd, wg;
    {
        Bits hit(I.size());
        for (Id j = 0; j < dm.m_plus->size(); ++j)
            hit.set(d(j));
        if (!hit.all())
            wd = "ideal " + I.label((~hit).find_first()) + " is not d of any B-ideal";
        Bits gh(dm.m_plus->size());
        for (Id a = 0; a < I.size(); ++a)
            gh.set(g(a));
        if (!gh.all())
            wg = "B-ideal " + dm.label_mplus((~gh).find_first()) + " is not g of any ideal";
    }
    auto kd = both(c.krull.verdict, verdict(wd.empty()));
    c.dedekind = Check{"dedekind", kd, kd == Verdict::False ? (wd.empty() ? c.krull.witness : wd) : "", "in-model"};
    auto ku = both(c.krull.verdict, verdict(wg.empty()));
    c.ufd = Check{"ufd", ku, ku == Verdict::False ? (wg.empty() ? c.krull.witness : wg) : "", "in-model"};
    auto kp = both(c.dedekind.verdict, c.ufd.verdict);
    c.pid = Check{"pid", kp, kp == Verdict::False ? (c.dedekind.verdict == Verdict::False ? c.dedekind.witness
                                                                                          : c.ufd.witness)
                                                  : "",
                  "in-model"};

    // d onto iff every ideal is divisorial
    auto dd = divisorial_data(dm.sys);
    c.report.add("closure-laws", verdict(dd.closure_laws));
    c.report.add("d-onto<=>all-divisorial", verdict(wd.empty() == dd.fixed_points.all()));
    auto implies = [](Verdict a, Verdict b) {
        return a != Verdict::True || b == Verdict::True;
    };
    c.report.add("pid=>ufd", verdict(implies(c.pid.verdict, c.ufd.verdict)));
    c.report.add("ufd=>krull", verdict(implies(c.ufd.verdict, c.krull.verdict)));
    c.report.add("dedekind=>krull", verdict(implies(c.dedekind.verdict, c.krull.verdict)));
    c.report.add("pid=dedekind&ufd", verdict(c.pid.verdict == both(c.dedekind.verdict, c.ufd.verdict)));
    for (auto& ch : d6.extra.checks)
        c.report.checks.push_back(ch);
    return c;
}

Report divisor_theory_harness(const DivisorModel& dm)
{
    Report rep;
    rep.instance = dm.sys.name;
    D6Result d6 = check_D6(dm);
    rep.add("D6", d6.check.verdict, d6.check.witness);

    Verdict v3 = Verdict::False;
    std::string w3;
    if (d6.as_instance) {
        Tri irb = ir_in_B(*d6.as_instance);
        v3 = both(dcc_check(*d6.as_instance).verdict, irb.verdict);
        w3 = irb.verdict == Verdict::False ? irb.witness : "";
    } else {
        v3 = Verdict::NotEvaluated;
        w3 = "powers of atoms undefined";
    }
    rep.add("DCC&ir<=E", v3, w3, "DCC holds on a finite M**");

    const Poset& Q = *dm.mss_order;
    const std::size_t q = Q.size();
    if (!dm.mss_mult) {
        rep.add("laws", Verdict::NotEvaluated, {}, "no product on M**");
    } else {
        const auto& mm = *dm.mss_mult;
        std::string w;
        for (Id j = 0; j < q && w.empty(); ++j)
            for (Id k = 0; k < q && w.empty(); ++k)
                for (Id l = k; l < q; ++l) {
                    if (!mm.defined(j, k) || !mm.defined(j, l))
                        continue;
                    auto kl = Q.join2(k, l);
                    std::optional<Id> lhs;
                    if (kl && mm.defined(j, *kl))
                        lhs = mm(j, *kl);
                    auto rhs = Q.join2(mm(j, k), mm(j, l));
                    if (lhs != rhs) {
                        w = "dist J=" + Q.label(j) + " K=" + Q.label(k) + " L=" + Q.label(l);
                        break;
                    }
                }
        for (Id l = 0; l < q && w.empty(); ++l) {
            std::vector<Id> from(q, npos);
            for (Id j : mm.partners()[l]) {
                Id p = mm(j, l);
                if (from[p] != npos && from[p] != j) {
                    w = "cancellation " + Q.label(from[p]) + "," + Q.label(j) + " by " + Q.label(l);
                    break;
                }
                from[p] = j;
            }
        }
        for (Id j = 0; j < q && w.empty(); ++j) {
            Bits reach(q);
            reach.set(j);
            for (Id l : mm.partners()[j])
                reach.set(mm(j, l));
            if (reach != Q.up(j))
                w = "inclusion not defined by product at " + Q.label(j);
        }
        rep.add("laws", verdict(w.empty()), w);
    }

    // exponent vectors against the box of chain lengths
    std::string w5;
    if (!d6.as_instance) {
        w5 = "powers of atoms undefined";
    } else {
        const auto& E = d6.E;
        std::map<std::vector<unsigned>, Id> seen;
        std::vector<std::vector<unsigned>> vec(q);
        for (Id x = 0; x < q; ++x) {
            std::vector<unsigned> v;
            for (const auto& ch : E) {
                unsigned k = 0;
                for (std::size_t i = 0; i < ch.size(); ++i)
                    if (Q.leq(ch[i], x))
                        k = static_cast<unsigned>(i + 1);
                v.push_back(k);
            }
            if (seen.count(v) && w5.empty())
                w5 = Q.label(seen[v]) + " and " + Q.label(x) + " share an exponent vector";
            seen[v] = x;
            vec[x] = v;
        }
        // a truncated system only reaches a lower part of the box; it has to be down-closed
        for (Id x = 0; x < q && w5.empty(); ++x)
            for (std::size_t i = 0; i < E.size(); ++i) {
                if (vec[x][i] == 0)
                    continue;
                auto v = vec[x];
                --v[i];
                if (!seen.count(v)) {
                    w5 = "exponent vectors of M** are not down-closed below " + Q.label(x);
                    break;
                }
            }
        for (Id x = 0; x < q && w5.empty(); ++x)
            for (Id y = 0; y < q; ++y) {
                bool le = true;
                for (std::size_t i = 0; i < E.size(); ++i)
                    le = le && vec[x][i] <= vec[y][i];
                if (le != Q.leq(x, y)) {
                    w5 = "order mismatch at " + Q.label(x) + "," + Q.label(y);
                    break;
                }
            }
        if (w5.empty() && dm.mss_mult) {
            const auto& mm = *dm.mss_mult;
            for (Id x = 0; x < q && w5.empty(); ++x)
                for (Id y : mm.partners()[x]) {
                    auto s = vec[x];
                    for (std::size_t i = 0; i < s.size(); ++i)
                        s[i] += vec[y][i];
                    if (s != vec[mm(x, y)]) {
                        w5 = "product not additive at " + Q.label(x) + "*" + Q.label(y);
                        break;
                    }
                }
        }
    }
    rep.add("OM-iso", verdict(w5.empty()), w5);

    const Check* first = nullptr;
    std::string dis;
    for (const auto& c : rep.checks) {
        if (c.verdict != Verdict::True && c.verdict != Verdict::False)
            continue;
        if (!first)
            first = &c;
        else if (c.verdict != first->verdict && dis.empty())
            dis = first->condition + "=" + to_string(first->verdict) + " vs " + c.condition + "=" +
                  to_string(c.verdict) + " on " + dm.sys.name;
    }
    rep.add("agree:divisor-theory", verdict(dis.empty()), dis);
    return rep;
}

} // namespace ordfactor
