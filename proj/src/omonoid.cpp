#include "ordfactor/omonoid.hpp"

#include <algorithm>
#include <map>

namespace ordfactor {

const std::vector<std::vector<Id>>& MultTable::partners() const
{
    if (partners_.size() != n_) {
        partners_.assign(n_, {});
        for (Id a = 0; a < n_; ++a)
            for (Id b = 0; b < n_; ++b)
                if (defined(a, b))
                    partners_[a].push_back(b);
    }
    return partners_;
}

void Instance::index_B()
{
    std::sort(B.begin(), B.end(), [](const PrimePower& x, const PrimePower& y) {
        return std::make_pair(x.base, x.exponent) < std::make_pair(y.base, y.exponent);
    });
    b_mask = Bits(size());
    power_index.assign(size(), npos);
    for (Id i = 0; i < B.size(); ++i) {
        b_mask.set(B[i].element);
        power_index[B[i].element] = i;
    }
}

const PrimePower* Instance::power(Id a) const
{
    Id i = power_index[a];
    return i == npos ? nullptr : &B[i];
}

std::vector<Id> Instance::bases() const
{
    std::vector<Id> out;
    for (const auto& pp : B)
        if (out.empty() || out.back() != pp.base)
            out.push_back(pp.base);
    return out;
}

Poset derive_order(const MultTable& m, const std::vector<std::string>& labels)
{
    const std::size_t n = m.size();
    std::vector<Bits> rows(n, Bits(n));
    for (Id a = 0; a < n; ++a) {
        rows[a].set(a);
        for (Id c : m.partners()[a])
            rows[a].set(m(a, c));
    }
    for (Id a = 0; a < n; ++a)
        for (Id b : members(rows[a]))
            if (b != a && rows[b][a])
                throw InputError("derived order has a cycle: " + labels[a] + " <= " + labels[b] + " <= " +
                                 labels[a]);
    return Poset(rows, labels);
}

Bits atoms(const Instance& inst)
{
    Bits rest = inst.P().all();
    rest.reset(inst.unit);
    return inst.P().minimal_of(rest);
}

Bits primes(const Instance& inst)
{
    const std::size_t n = inst.size();
    Bits out(n);
    if (!inst.mult)
        return out;
    const auto& m = *inst.mult;
    const Poset& p = inst.P();
    Bits bad(n);
    bad.set(inst.unit);
    for (Id x = 0; x < n; ++x)
        for (Id y : m.partners()[x])
            bad |= p.down(m(x, y)) - p.down(x) - p.down(y);
    return p.all() - bad;
}

std::vector<PrimePower> compute_B(const Instance& inst)
{
    std::vector<PrimePower> B;
    if (!inst.mult)
        return inst.B;
    const auto& m = *inst.mult;
    Bits bases = atoms(inst) & primes(inst);
    for (Id p : members(bases)) {
        Id cur = p;
        unsigned k = 1;
        Bits seen(inst.size());
        while (cur != npos && !seen[cur]) {
            seen.set(cur);
            B.push_back(PrimePower{cur, p, k});
            cur = m(cur, p);
            ++k;
        }
    }
    return B;
}

LawReport law_report(const Instance& inst)
{
    LawReport r;
    if (!inst.mult) {
        r.dist.holds = r.defi.holds = r.cancellation.holds = false;
        r.dist.witness = r.defi.witness = r.cancellation.witness = "no multiplication";
        return r;
    }
    const auto& m = *inst.mult;
    const Poset& p = inst.P();
    const std::size_t n = inst.size();
    auto L = [&](Id a) { return p.label(a); };

    // x(y ^ z) = xy ^ xz wherever xy and xz are defined; either side existing forces the other
    for (Id x = 0; x < n && r.dist.holds; ++x) {
        if (x == inst.unit)
            continue;
        const auto& ps = m.partners()[x];
        for (std::size_t i = 0; i < ps.size() && r.dist.holds; ++i)
            for (std::size_t j = i; j < ps.size(); ++j) {
                Id y = ps[i], z = ps[j];
                auto yz = p.meet2(y, z);
                std::optional<Id> lhs;
                if (yz && m.defined(x, *yz))
                    lhs = m(x, *yz);
                auto rhs = p.meet2(m(x, y), m(x, z));
                if (lhs != rhs) {
                    r.dist.holds = false;
                    r.dist.witness = "x=" + L(x) + " y=" + L(y) + " z=" + L(z);
                    break;
                }
            }
    }

    for (Id a = 0; a < n && r.defi.holds; ++a) {
        Bits reach(n);
        reach.set(a);
        for (Id c : m.partners()[a])
            reach.set(m(a, c));
        Bits miss = p.up(a) - reach;
        if (miss.any()) {
            r.defi.holds = false;
            r.defi.witness = "a=" + L(a) + " b=" + L(miss.find_first());
        }
        if ((reach - p.up(a)).any()) {
            r.defi.holds = false;
            r.defi.witness = "a=" + L(a) + " b=" + L((reach - p.up(a)).find_first());
        }
    }

    for (Id c = 0; c < n && r.cancellation.holds; ++c) {
        std::vector<Id> from(n, npos);
        for (Id a : m.partners()[c]) {
            Id ac = m(a, c);
            if (from[ac] != npos && from[ac] != a) {
                r.cancellation.holds = false;
                r.cancellation.witness = "a=" + L(from[ac]) + " b=" + L(a) + " c=" + L(c);
                break;
            }
            from[ac] = a;
        }
    }
    return r;
}

Instance make_ordered_monoid(std::string name, std::vector<std::string> labels, const MultTable& m)
{
    const std::size_t n = labels.size();
    if (m.size() != n)
        throw InputError("multiplication table size does not match the carrier");
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            if (m(a, b) != m(b, a))
                throw InputError("multiplication is not commutative at " + labels[a] + "*" + labels[b]);
    Id unit = npos;
    for (Id e = 0; e < n && unit == npos; ++e) {
        bool ok = true;
        for (Id x = 0; x < n && ok; ++x)
            ok = m(e, x) == x;
        if (ok)
            unit = e;
    }
    if (unit == npos)
        throw InputError("multiplication has no unit");
    for (Id a = 0; a < n; ++a)
        for (Id b : m.partners()[a]) {
            Id ab = m(a, b);
            for (Id c : m.partners()[ab]) {
                Id bc = m(b, c);
                if (bc != npos && m.defined(a, bc) && m(a, bc) != m(ab, c))
                    throw InputError("multiplication is not associative at " + labels[a] + "," + labels[b] +
                                     "," + labels[c]);
            }
        }

    Instance inst;
    inst.name = std::move(name);
    inst.kind = InstanceKind::OrderedMonoid;
    inst.poset = std::make_shared<const Poset>(derive_order(m, labels));
    inst.unit = unit;
    inst.mult = m;
    const Poset& p = inst.P();
    if (!p.bottom() || *p.bottom() != unit)
        throw InputError("unit is not the least element");
    for (Id a = 0; a < n; ++a)
        for (Id b : members(p.up(a)))
            for (Id c : m.partners()[a])
                if (m.defined(b, c) && !p.leq(m(a, c), m(b, c)))
                    throw InputError("multiplication is not isotone at " + labels[a] + "<=" + labels[b] +
                                     " times " + labels[c]);
    inst.b_mask = Bits(n);
    inst.power_index.assign(n, npos);
    inst.B = compute_B(inst);
    inst.index_B();
    inst.laws = law_report(inst);
    return inst;
}

Instance make_poset_with_b(std::string name, PosetPtr p, std::vector<PrimePower> B)
{
    Instance inst;
    inst.name = std::move(name);
    inst.kind = InstanceKind::PosetWithB;
    inst.poset = std::move(p);
    if (!inst.P().bottom())
        throw InputError("poset-with-B needs a least element");
    inst.unit = *inst.P().bottom();
    inst.B = std::move(B);
    inst.index_B();
    Bits at = atoms(inst);
    std::map<Id, std::vector<const PrimePower*>> by_base;
    Bits seen(inst.size());
    for (const auto& pp : inst.B) {
        inst.P().check_index(pp.element);
        inst.P().check_index(pp.base);
        if (pp.element == inst.unit)
            throw InputError("B may not contain the unit");
        if (seen[pp.element])
            throw InputError("element " + inst.label(pp.element) + " appears twice in B");
        seen.set(pp.element);
        if (!at[pp.base])
            throw InputError("B base " + inst.label(pp.base) + " is not an atom");
        if (pp.exponent == 0)
            throw InputError("B exponent must be positive");
        by_base[pp.base].push_back(&pp);
    }
    for (auto& [base, list] : by_base) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i]->exponent != i + 1)
                throw InputError("powers of " + inst.label(base) + " must have exponents 1..k");
            if (i == 0 && list[i]->element != base)
                throw InputError("first power of " + inst.label(base) + " must be the base itself");
            if (i > 0 && !inst.P().lt(list[i - 1]->element, list[i]->element))
                throw InputError("powers of " + inst.label(base) + " must increase");
        }
    }
    return inst;
}

unsigned valuation(const Instance& inst, Id a, Id base)
{
    inst.P().check_index(a);
    bool known = false;
    unsigned v = 0;
    for (const auto& pp : inst.B)
        if (pp.base == base) {
            known = true;
            if (inst.P().leq(pp.element, a))
                v = std::max(v, pp.exponent);
        }
    if (!known)
        throw InputError("valuation: " + inst.label(base) + " is not a base of B");
    return v;
}

CondensedSet condense(const Instance&, const std::vector<PrimePower>& A)
{
    std::map<Id, PrimePower> best;
    for (const auto& pp : A) {
        auto it = best.find(pp.base);
        if (it == best.end() || it->second.exponent < pp.exponent)
            best[pp.base] = pp;
    }
    CondensedSet out;
    for (auto& [b, pp] : best)
        out.push_back(pp);
    return out;
}

std::optional<CondensedSet> decompose(const Instance& inst, Id a)
{
    inst.P().check_index(a);
    CondensedSet c;
    Bits sel(inst.size());
    for (Id base : inst.bases()) {
        unsigned v = valuation(inst, a, base);
        if (v == 0)
            continue;
        for (const auto& pp : inst.B)
            if (pp.base == base && pp.exponent == v) {
                c.push_back(pp);
                sel.set(pp.element);
            }
    }
    auto j = inst.P().join(sel);
    if (!j || *j != a)
        return std::nullopt;
    return c;
}

std::string format_condensed(const Instance& inst, const CondensedSet& c)
{
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ",";
        out += "(" + inst.label(c[i].base) + "," + std::to_string(c[i].exponent) + ")";
    }
    return out + "}";
}

Tri b4_check(const Instance& inst, std::size_t cap)
{
    const Poset& p = inst.P();
    Tri t;
    bool found = false;
    auto st = antichains_within(p, inst.b_mask, cap, 2000000, [&](const Bits& A) {
        auto j = p.join(A);
        if (!j)
            return true;
        for (Id b : members(inst.b_mask & p.down(*j))) {
            bool below = false;
            for (Id x : members(A))
                below = below || p.leq(b, x);
            if (!below) {
                found = true;
                t.witness = "b=" + p.label(b) + " <= join" + p.format(A) + "=" + p.label(*j);
                return false;
            }
        }
        return true;
    });
    if (found)
        t.verdict = Verdict::False;
    else if (st == EnumStatus::Truncated)
        t.verdict = Verdict::NotEvaluated, t.witness = "width of B exceeds cap " + std::to_string(cap);
    else
        t.verdict = Verdict::True;
    return t;
}

Tri uniqueness_check(const Instance& inst, std::size_t cap)
{
    const Poset& p = inst.P();
    Tri t;
    bool found = false;
    std::vector<Bits> seen(inst.size());
    std::vector<bool> has(inst.size(), false);
    auto st = antichains_within(p, inst.b_mask, cap, 2000000, [&](const Bits& A) {
        auto j = p.join(A);
        if (!j)
            return true;
        if (has[*j]) {
            found = true;
            t.witness = "join" + p.format(seen[*j]) + " = join" + p.format(A) + " = " + p.label(*j);
            return false;
        }
        has[*j] = true;
        seen[*j] = A;
        return true;
    });
    if (found)
        t.verdict = Verdict::False;
    else if (st == EnumStatus::Truncated)
        t.verdict = Verdict::NotEvaluated, t.witness = "width of B exceeds cap " + std::to_string(cap);
    else
        t.verdict = Verdict::True;
    return t;
}

Tri unique_decomposition(const Instance& inst, std::size_t cap)
{
    const Poset& p = inst.P();
    Tri t;
    t.verdict = Verdict::True;
    for (Id a = 0; a < inst.size(); ++a) {
        std::vector<Bits> reps;
        auto st = antichains_within(p, inst.B_below(a), cap, 200000, [&](const Bits& A) {
            auto j = p.join(A);
            if (j && *j == a)
                reps.push_back(A);
            return reps.size() < 2;
        });
        if (reps.size() >= 2) {
            t.verdict = Verdict::False;
            t.witness = p.label(a) + " = join" + p.format(reps[0]) + " = join" + p.format(reps[1]);
            return t;
        }
        if (st == EnumStatus::Truncated) {
            if (t.verdict == Verdict::True) {
                t.verdict = Verdict::NotEvaluated;
                t.witness = "too many B-antichains below " + p.label(a);
            }
            continue;
        }
        if (reps.empty()) {
            t.verdict = Verdict::False;
            t.witness = p.label(a) + " is not a join of pairwise incomparable B-elements";
            return t;
        }
    }
    return t;
}

Bits ir_set(const Instance& inst)
{
    Bits out(inst.size());
    for (Id a = 0; a < inst.size(); ++a)
        if (irreducible(inst.P(), a, Side::Join, Strength::Plain, Arity::Complete))
            out.set(a);
    return out;
}

Tri ir_in_B(const Instance& inst)
{
    Bits bad = ir_set(inst) - inst.b_mask;
    if (bad.any())
        return {Verdict::False, inst.label(bad.find_first()) + " is join-irreducible but not in B"};
    return {Verdict::True, {}};
}

Tri dcc_check(const Instance&)
{
    return {Verdict::True, "finite carrier"};
}

Tri d1_check(const Instance& inst)
{
    for (Id a = 0; a < inst.size(); ++a) {
        auto j = inst.P().join(inst.B_below(a));
        if (!j || *j != a)
            return {Verdict::False, inst.label(a)};
    }
    return {Verdict::True, {}};
}

Tri f1_check(const Instance& inst)
{
    // a finite subset of down(a) & B joining to a may be replaced by its maximal members
    for (Id a = 0; a < inst.size(); ++a) {
        Bits top = inst.P().maximal_of(inst.B_below(a));
        auto j = inst.P().join(top);
        if (!j || *j != a)
            return {Verdict::False, inst.label(a)};
    }
    return {Verdict::True, {}};
}

Tri d5_check(const Instance& inst)
{
    for (Id a = 0; a < inst.size(); ++a)
        if (!decompose(inst, a))
            return {Verdict::False, inst.label(a)};
    return {Verdict::True, {}};
}

Tri b1_check(const Instance&)
{
    return {Verdict::True, "finite carrier"};
}

Tri b3_check(const Instance&)
{
    return {Verdict::True, "finite carrier"};
}

Tri b2_check(const Instance& inst)
{
    const Poset& p = inst.P();
    auto bs = members(inst.b_mask);
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (!p.join2(bs[i], bs[j]))
                return {Verdict::False, "no join of " + p.label(bs[i]) + "," + p.label(bs[j])};
    // the join of a subset of B equals the join of its maximal members
    Tri t{Verdict::True, {}};
    bool found = false;
    auto st = antichains_within(p, inst.b_mask, inst.size(), 200000, [&](const Bits& A) {
        if (!p.join(A)) {
            found = true;
            t = {Verdict::False, "no join of " + p.format(A)};
            return false;
        }
        return true;
    });
    if (!found && st == EnumStatus::Truncated)
        t = {Verdict::NotEvaluated, "too many antichains in B"};
    return t;
}

Tri f2_check(const Instance&)
{
    // the finite set down(b) & B itself serves as A
    return {Verdict::True, "down(b) & B is finite"};
}

namespace {

struct Ctx {
    const Instance& inst;
    const Poset& p;
    const MultTable& m;
    Id one;
};

bool meet_is_unit(const Ctx& c, Id x, Id y)
{
    auto v = c.p.meet2(x, y);
    return v && *v == c.one;
}

} // namespace

Report factorization_law_suite(const Instance& inst)
{
    Report rep;
    rep.instance = inst.name;
    const char* names[] = {"coprime:meet-absorbs", "coprime:divides-cofactor", "coprime:products", "coprime:join-is-product", "coprime:join-exists", "atom=>prime",
                           "prime=>atom", "strictly-isotone", "B3", "condensed:join=product", "B4"};
    if (!inst.mult) {
        for (auto nm : names)
            rep.add(nm, Verdict::NotApplicable, {}, "no multiplication");
        return rep;
    }
    const LawReport& laws = *inst.laws;
    Ctx c{inst, inst.P(), *inst.mult, inst.unit};
    const Poset& p = c.p;
    const MultTable& m = c.m;
    const std::size_t n = inst.size();
    auto L = [&](Id a) { return p.label(a); };
    auto na = [&](const char* nm, const char* why) { rep.add(nm, Verdict::NotApplicable, {}, why); };

    if (!laws.dist.holds) {
        na("coprime:meet-absorbs", "Dist fails");
        na("coprime:divides-cofactor", "Dist fails");
        na("coprime:products", "Dist fails");
        na("coprime:join-is-product", "Dist fails");
    } else {
        std::string w1, w2;
        for (Id x = 0; x < n; ++x)
            for (Id y = 0; y < n; ++y) {
                if (!meet_is_unit(c, x, y))
                    continue;
                for (Id z : m.partners()[y]) {
                    Id yz = m(y, z);
                    if (w1.empty() && p.meet2(x, z) != p.meet2(x, yz))
                        w1 = "x=" + L(x) + " y=" + L(y) + " z=" + L(z);
                    if (w2.empty() && p.leq(x, yz) && !p.leq(x, z))
                        w2 = "x=" + L(x) + " y=" + L(y) + " z=" + L(z);
                }
            }
        rep.add("coprime:meet-absorbs", verdict(w1.empty()), w1);
        rep.add("coprime:divides-cofactor", verdict(w2.empty()), w2);

        // families of at most two on each side
        std::string w3;
        std::vector<std::vector<Id>> fams;
        for (Id a = 0; a < n; ++a) {
            fams.push_back({a});
            for (Id b : m.partners()[a])
                if (b >= a)
                    fams.push_back({a, b});
        }
        auto prod = [&](const std::vector<Id>& f) { return f.size() == 1 ? f[0] : m(f[0], f[1]); };
        for (const auto& xs : fams) {
            if (!w3.empty())
                break;
            for (const auto& ys : fams) {
                bool coprime = true;
                for (Id x : xs)
                    for (Id y : ys)
                        coprime = coprime && meet_is_unit(c, x, y);
                if (coprime && !meet_is_unit(c, prod(xs), prod(ys))) {
                    w3 = "x=" + L(prod(xs)) + " y=" + L(prod(ys));
                    break;
                }
            }
        }
        rep.add("coprime:products", verdict(w3.empty()), w3);

        std::string w4;
        for (Id x = 0; x < n && w4.empty(); ++x)
            for (Id y : m.partners()[x])
                if (meet_is_unit(c, x, y)) {
                    auto j = p.join2(x, y);
                    if (j && *j != m(x, y)) {
                        w4 = "x=" + L(x) + " y=" + L(y);
                        break;
                    }
                }
        rep.add("coprime:join-is-product", verdict(w4.empty()), w4);
    }

    if (!laws.dist.holds || !laws.defi.holds) {
        na("coprime:join-exists", "needs Dist and Defi");
    } else {
        std::string w;
        for (Id x = 0; x < n && w.empty(); ++x)
            for (Id y : m.partners()[x])
                if (meet_is_unit(c, x, y)) {
                    auto j = p.join2(x, y);
                    if (!j || *j != m(x, y)) {
                        w = "x=" + L(x) + " y=" + L(y);
                        break;
                    }
                }
        rep.add("coprime:join-exists", verdict(w.empty()), w);
    }

    Bits at = atoms(inst), pr = primes(inst);
    bool meet_semi = true;
    for (Id a = 0; a < n && meet_semi; ++a)
        for (Id b = a + 1; b < n && meet_semi; ++b)
            meet_semi = p.meet2(a, b).has_value();
    if (!laws.dist.holds || !meet_semi) {
        na("atom=>prime", "needs Dist and a meet-semilattice");
    } else {
        Bits bad = at - pr;
        rep.add("atom=>prime", verdict(bad.none()), bad.any() ? L(bad.find_first()) : "");
    }
    if (!laws.cancellation.holds || !laws.defi.holds) {
        na("prime=>atom", "needs cancellation and Defi");
    } else {
        Bits bad = pr - at;
        rep.add("prime=>atom", verdict(bad.none()), bad.any() ? L(bad.find_first()) : "");
    }
    if (!laws.cancellation.holds) {
        na("strictly-isotone", "needs cancellation");
    } else {
        std::string w;
        for (Id x = 0; x < n && w.empty(); ++x)
            for (Id y : members(p.up(x))) {
                if (y == x)
                    continue;
                for (Id z : m.partners()[x])
                    if (m.defined(y, z) && !p.lt(m(x, z), m(y, z))) {
                        w = "x=" + L(x) + " y=" + L(y) + " z=" + L(z);
                        break;
                    }
                if (!w.empty())
                    break;
            }
        rep.add("strictly-isotone", verdict(w.empty()), w);
    }

    if (!laws.dist.holds || !laws.defi.holds || !laws.cancellation.holds) {
        na("B3", "needs Dist, Defi and cancellation");
        na("condensed:join=product", "needs Dist, Defi and cancellation");
        na("B4", "needs Dist, Defi and cancellation");
        return rep;
    }
    rep.add("B3", Verdict::True, {}, "finite carrier");

    // every finite subset of B has a join; a condensed one joins to its product
    std::string w;
    auto bs = members(inst.b_mask);
    auto bases = inst.bases();
    if (bs.size() <= 16) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bs.size()) && w.empty(); ++mask) {
            Bits A(n);
            for (std::size_t i = 0; i < bs.size(); ++i)
                if (mask >> i & 1)
                    A.set(bs[i]);
            if (!p.join(A))
                w = "no join of " + p.format(A);
        }
    }
    // condensed sets: one exponent (possibly 0) per base
    std::vector<std::vector<Id>> chains;
    for (Id b : bases) {
        std::vector<Id> ch{npos};
        for (const auto& pp : inst.B)
            if (pp.base == b)
                ch.push_back(pp.element);
        chains.push_back(ch);
    }
    std::vector<std::size_t> idx(chains.size(), 0);
    while (w.empty()) {
        Bits A(n);
        Id prod = c.one;
        bool defined = true;
        for (std::size_t i = 0; i < chains.size(); ++i) {
            Id e = chains[i][idx[i]];
            if (e == npos)
                continue;
            A.set(e);
            if (defined && m.defined(prod, e))
                prod = m(prod, e);
            else
                defined = false;
        }
        auto j = p.join(A);
        if (!j)
            w = "no join of " + p.format(A);
        else if (defined && *j != prod)
            w = "join" + p.format(A) + " != product " + L(prod);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == chains[k].size())
            idx[k++] = 0;
        if (k == idx.size())
            break;
    }
    rep.add("condensed:join=product", verdict(w.empty()), w);
    Tri b4 = b4_check(inst);
    rep.add("B4", b4.verdict, b4.witness);
    return rep;
}

} // namespace ordfactor
