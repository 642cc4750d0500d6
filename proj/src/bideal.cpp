#include "ordfactor/bideal.hpp"

#include <algorithm>
#include <set>

namespace ordfactor {

BContext::BContext(const Instance& inst) : inst_(&inst)
{
    const std::size_t n = inst.size();
    below_.resize(n);
    forced_.assign(n, npos);
    for (Id a = 0; a < n; ++a) {
        below_[a] = inst.B_below(a);
        if (auto j = inst.P().join(below_[a]))
            forced_[a] = *j;
    }
}

Bits BContext::generate(const Bits& A) const
{
    const Poset& p = inst_->P();
    Bits J = p.down_set(A);
    J.set(inst_->unit);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Id a = 0; a < p.size(); ++a) {
            Id f = forced_[a];
            if (f != npos && !J[f] && below_[a].is_subset_of(J)) {
                J |= p.down(f);
                changed = true;
            }
        }
    }
    return J;
}

bool BContext::is_b_ideal(const Bits& J, std::string* witness) const
{
    const Poset& p = inst_->P();
    if (J.none()) {
        if (witness)
            *witness = "empty";
        return false;
    }
    if (!p.is_lower_set(J)) {
        if (witness)
            *witness = "not a lower set";
        return false;
    }
    for (Id a = 0; a < p.size(); ++a) {
        Id f = forced_[a];
        if (f != npos && !J[f] && below_[a].is_subset_of(J)) {
            if (witness)
                *witness = p.label(a);
            return false;
        }
    }
    return true;
}

Id BIdealLattice::find(const Bits& J) const
{
    auto it = index.find(J);
    return it == index.end() ? npos : it->second;
}

PosetPtr BIdealLattice::order(const Poset& carrier) const
{
    std::vector<std::string> labels;
    for (const auto& J : ideals)
        labels.push_back(carrier.format(J));
    return std::make_shared<const Poset>(Poset::from_sets(ideals, labels));
}

Bits j_b(const Instance& inst, Id b)
{
    if (!inst.in_B(b))
        throw InputError("j_b: " + inst.label(b) + " is not in B");
    return inst.P().all() - inst.P().up(b);
}

Bits m_join(const BContext& ctx, const std::vector<Bits>& family)
{
    Bits u = ctx.inst().P().none();
    for (const auto& J : family)
        u |= J;
    return ctx.generate(u);
}

static void finish(BIdealLattice& M)
{
    std::sort(M.ideals.begin(), M.ideals.end(), canonical_less);
    M.ideals.erase(std::unique(M.ideals.begin(), M.ideals.end()), M.ideals.end());
    M.index.clear();
    for (Id i = 0; i < M.ideals.size(); ++i)
        M.index.emplace(M.ideals[i], i);
}

BIdealLattice enumerate_M(const Instance& inst, const EnumConfig& cfg)
{
    BContext ctx(inst);
    const Poset& p = inst.P();
    const std::size_t n = p.size();
    BIdealLattice M;

    if (n <= cfg.cap) {
        // closed sets of generate in lectic order
        Bits A = ctx.generate(p.none());
        M.ideals.push_back(A);
        bool over = false;
        while (!A.all()) {
            bool advanced = false;
            for (Id k = n; k-- > 0;) {
                if (A[k]) {
                    A.reset(k);
                    continue;
                }
                Bits C = A;
                C.set(k);
                C = ctx.generate(C);
                Bits fresh = C - A;
                if (fresh.find_first() == k) {
                    A = C;
                    advanced = true;
                    break;
                }
            }
            if (!advanced)
                break;
            M.ideals.push_back(A);
            if (M.ideals.size() > cfg.max_ideals) {
                over = true;
                break;
            }
        }
        if (!over) {
            M.complete = true;
            finish(M);
            return M;
        }
        M.ideals.clear();
        M.note = "more than " + std::to_string(cfg.max_ideals) + " B-ideals";
    } else {
        M.note = "carrier size " + std::to_string(n) + " exceeds cap " + std::to_string(cfg.cap);
    }

    // partial family
    std::vector<Bits> base;
    base.push_back(ctx.generate(p.none()));
    base.push_back(p.all());
    for (Id a = 0; a < n; ++a)
        base.push_back(p.down(a));
    for (const auto& pp : inst.B)
        base.push_back(j_b(inst, pp.element));
    std::set<Bits, BitsLess> fam(base.begin(), base.end());
    if (base.size() <= 300)
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                fam.insert(ctx.generate(base[i] | base[j]));
    M.ideals.assign(fam.begin(), fam.end());
    M.complete = false;
    finish(M);
    return M;
}

SubsetClass classify_subset(const BContext& ctx, const Bits& A)
{
    const Instance& inst = ctx.inst();
    const Poset& p = inst.P();
    SubsetClass r;
    r.b_set = p.is_upper_set(A);
    if (!r.b_set)
        r.witness = "not an upper set";
    for (Id a : members(A)) {
        if (!r.b_set)
            break;
        if ((inst.B_below(a) & A).none()) {
            r.b_set = false;
            r.witness = p.label(a);
        }
    }
    r.b_filter = r.b_set;
    for (Id a : members(A))
        for (Id b : members(A)) {
            if (!r.b_filter)
                break;
            auto m = p.meet2(a, b);
            if (m && !A[*m]) {
                r.b_filter = false;
                r.witness = p.label(a) + "^" + p.label(b);
            }
        }
    std::string w;
    r.prime_ideal = ctx.is_b_ideal(A, &w);
    if (!r.prime_ideal && r.witness.empty())
        r.witness = w;
    for (Id a = 0; a < p.size() && r.prime_ideal; ++a)
        for (Id b = a + 1; b < p.size(); ++b) {
            auto m = p.meet2(a, b);
            if (m && A[*m] && !A[a] && !A[b]) {
                r.prime_ideal = false;
                r.witness = p.label(a) + "^" + p.label(b);
                break;
            }
        }
    return r;
}

static void require_complete(const BIdealLattice& M, const char* what)
{
    if (!M.complete)
        throw InputError(std::string(what) + " needs a complete enumeration of M");
}

std::vector<Bits> delta_a(const Instance& inst, const BIdealLattice& M, Id a)
{
    require_complete(M, "delta_a");
    inst.P().check_index(a);
    std::vector<Bits> out;
    for (const auto& J : M.ideals)
        if (!J[a])
            out.push_back(J);
    return out;
}

std::vector<Bits> sigma2(const Instance& inst, const BIdealLattice& M)
{
    require_complete(M, "sigma2");
    std::set<Bits, BitsLess> out;
    for (Id a = 0; a < inst.size(); ++a) {
        auto D = delta_a(inst, M, a);
        for (const auto& J : D) {
            bool maximal = true;
            for (const auto& K : D)
                if (K != J && J.is_subset_of(K)) {
                    maximal = false;
                    break;
                }
            if (maximal)
                out.insert(J);
        }
    }
    return {out.begin(), out.end()};
}

Bits maximal_missing(const BContext& ctx, const Bits& J, Id a)
{
    Bits K = J;
    for (Id x = 0; x < K.size(); ++x) {
        if (K[x])
            continue;
        Bits T = K;
        T.set(x);
        T = ctx.generate(T);
        if (!T[a])
            K = T;
    }
    return K;
}

static Check from_tri(const std::string& name, const Tri& t)
{
    return Check{name, t.verdict, t.verdict == Verdict::False ? t.witness : "",
                 t.verdict == Verdict::False ? "" : t.witness};
}

Check check_condition(const BContext& ctx, const BIdealLattice& M, const std::string& which, std::size_t cap_unique)
{
    const Instance& inst = ctx.inst();
    const Poset& p = inst.P();
    const std::size_t n = p.size();
    Check c;
    c.condition = which;
    // on a partial M a found counterexample is still decisive; absence of one is not
    auto inconclusive = [&](Check& ch) {
        if (!M.complete) {
            ch.verdict = Verdict::NotEvaluated;
            ch.note = "M enumeration incomplete: " + M.note;
        } else {
            ch.verdict = Verdict::True;
        }
    };

    if (which == "D1")
        return from_tri(which, d1_check(inst));
    if (which == "F1")
        return from_tri(which, f1_check(inst));
    if (which == "D5")
        return from_tri(which, d5_check(inst));
    if (which == "B1")
        return from_tri(which, b1_check(inst));
    if (which == "B2")
        return from_tri(which, b2_check(inst));
    if (which == "B3")
        return from_tri(which, b3_check(inst));
    if (which == "B4")
        return from_tri(which, b4_check(inst, cap_unique));
    if (which == "F2")
        return from_tri(which, f2_check(inst));
    if (which == "DCC")
        return from_tri(which, dcc_check(inst));
    if (which == "F3") {
        c.verdict = Verdict::True;
        c.note = "M is finite, so every family of B-ideals is its own finite subfamily";
        return c;
    }

    if (which == "D2") {
        for (const auto& J : M.ideals)
            for (Id a = 0; a < n; ++a) {
                if (J[a])
                    continue;
                // need b in B, b <= a, b not in J
                if ((inst.B_below(a) - J).none()) {
                    c.verdict = Verdict::False;
                    c.witness = "J=" + p.format(J) + " a=" + p.label(a);
                    return c;
                }
            }
        inconclusive(c);
        return c;
    }
    if (which == "D3") {
        for (const auto& J : M.ideals) {
            Bits meet = p.all();
            for (Id b : members(inst.b_mask - J))
                meet &= j_b(inst, b);
            if (meet != J) {
                c.verdict = Verdict::False;
                c.witness = "J=" + p.format(J);
                return c;
            }
        }
        inconclusive(c);
        return c;
    }
    if (which == "D4") {
        for (const auto& J : M.ideals)
            if (ctx.generate(J & inst.b_mask) != J) {
                c.verdict = Verdict::False;
                c.witness = "J=" + p.format(J);
                return c;
            }
        inconclusive(c);
        return c;
    }
    if (which == "sigma2") {
        // Sigma2 is contained in {J_b}
        std::set<Bits, BitsLess> s1;
        for (const auto& pp : inst.B)
            s1.insert(j_b(inst, pp.element));
        if (M.complete) {
            for (const auto& K : sigma2(inst, M))
                if (!s1.count(K)) {
                    c.verdict = Verdict::False;
                    c.witness = "K=" + p.format(K);
                    return c;
                }
            c.verdict = Verdict::True;
            return c;
        }
        Bits least = ctx.generate(p.none());
        for (Id a = 0; a < n; ++a) {
            if (least[a])
                continue;
            Bits K = maximal_missing(ctx, least, a);
            if (!s1.count(K)) {
                c.verdict = Verdict::False;
                c.witness = "K=" + p.format(K) + " maximal missing " + p.label(a);
                return c;
            }
        }
        inconclusive(c);
        return c;
    }
    throw InputError("unknown condition '" + which + "'");
}

static std::string agreement(Report& rep, const std::string& name, const std::vector<std::string>& names)
{
    const Check* first = nullptr;
    for (const auto& nm : names) {
        const Check* c = rep.find(nm);
        if (!c || (c->verdict != Verdict::True && c->verdict != Verdict::False))
            continue;
        if (!first) {
            first = c;
            continue;
        }
        if (c->verdict != first->verdict) {
            std::string w = first->condition + "=" + to_string(first->verdict) + " vs " + c->condition + "=" +
                            to_string(c->verdict) + " on " + rep.instance;
            rep.add(name, Verdict::False, w);
            return w;
        }
    }
    rep.add(name, Verdict::True);
    return {};
}

Report theorem_harness(const BContext& ctx, const BIdealLattice& M, const HarnessConfig& cfg)
{
    const Instance& inst = ctx.inst();
    Report rep;
    rep.instance = inst.name;
    for (const char* nm : {"D1", "D2", "D3", "D4", "D5"})
        rep.checks.push_back(check_condition(ctx, M, nm, cfg.cap_unique));
    agreement(rep, "agree:D1-D5", {"D1", "D2", "D3", "D4", "D5"});

    Check f1 = check_condition(ctx, M, "F1");
    Check f2 = check_condition(ctx, M, "F2");
    Check f3 = check_condition(ctx, M, "F3");
    Check d1 = *rep.find("D1");
    Check s2 = check_condition(ctx, M, "sigma2");
    Check dcc = check_condition(ctx, M, "DCC");
    Tri irb = ir_in_B(inst);
    Tri ud = unique_decomposition(inst, cfg.cap_unique);

    auto conj = [&](const std::string& name, const Check& a, const Check& b) {
        Verdict v = both(a.verdict, b.verdict);
        std::string w;
        if (v == Verdict::False)
            w = a.verdict == Verdict::False ? a.condition + ": " + a.witness : b.condition + ": " + b.witness;
        rep.add(name, v, w);
    };
    rep.add("F1", f1.verdict, f1.witness);
    conj("F2&D1", f2, d1);
    conj("F3&D1", f3, d1);
    conj("F3&sigma2", f3, s2);
    conj("DCC&ir<=B", dcc, Check{"ir<=B", irb.verdict, irb.witness, {}});
    rep.add("unique-decomposition", ud.verdict, ud.verdict == Verdict::False ? ud.witness : "",
            ud.verdict == Verdict::False ? "" : ud.witness);
    agreement(rep, "agree:cluster",
              {"F1", "F2&D1", "F3&D1", "F3&sigma2", "DCC&ir<=B", "unique-decomposition"});
    return rep;
}

bool strongly_meet_irreducible_in(const std::vector<Bits>& M, const Bits& J)
{
    // the family most likely to break it is everything not inside J
    Bits meet = J;
    meet.set();
    for (const auto& K : M)
        if (!K.is_subset_of(J))
            meet &= K;
    return !meet.is_subset_of(J);
}

bool strongly_join_irreducible_in(const BContext& ctx, const std::vector<Bits>& M, const Bits& J)
{
    std::vector<Bits> bad;
    for (const auto& K : M)
        if (!J.is_subset_of(K))
            bad.push_back(K);
    return !J.is_subset_of(m_join(ctx, bad));
}

Report structural_props(const BContext& ctx, const BIdealLattice& M, std::size_t cd_cap)
{
    const Instance& inst = ctx.inst();
    const Poset& p = inst.P();
    Report rep;
    rep.instance = inst.name;
    static const char* names[] = {"M:valid", "M:extremes", "M:intersections", "Jb:prime", "Jb:strong-meet-irr",
                                  "Jb:complement-filter", "D3=>meet-irr-are-Jb", "D4=>down-b-strong-join-irr",
                                  "D4=>strong-join-irr-are-down-b", "meet-irr=>prime", "D2=>complement-B-set",
                                  "D2=>prime-complement-filter", "D1=>(B2<=>principal)", "D4=>completely-distributive",
                                  "F1=>lattice-ideals"};
    if (!M.complete) {
        for (auto nm : names)
            rep.add(nm, Verdict::NotEvaluated, {}, "M enumeration incomplete");
        return rep;
    }
    const auto& I = M.ideals;

    std::string w;
    for (const auto& J : I)
        if (w.empty() && !ctx.is_b_ideal(J))
            w = p.format(J);
    rep.add("M:valid", verdict(w.empty()), w);

    Bits least = p.none();
    least.set(inst.unit);
    rep.add("M:extremes", verdict(M.find(least) != npos && M.find(p.all()) != npos));

    w.clear();
    for (std::size_t i = 0; i < I.size() && w.empty(); ++i)
        for (std::size_t j = i + 1; j < I.size(); ++j)
            if (M.find(I[i] & I[j]) == npos) {
                w = p.format(I[i]) + " & " + p.format(I[j]);
                break;
            }
    rep.add("M:intersections", verdict(w.empty()), w, "pairwise closure gives every finite intersection");

    std::string wp, wm, wf;
    for (const auto& pp : inst.B) {
        Bits J = j_b(inst, pp.element);
        auto sc = classify_subset(ctx, J);
        if (wp.empty() && (!sc.prime_ideal || M.find(J) == npos))
            wp = p.label(pp.element);
        if (wm.empty() && !strongly_meet_irreducible_in(I, J))
            wm = p.label(pp.element);
        if (wf.empty() && !classify_subset(ctx, p.up(pp.element)).b_filter)
            wf = p.label(pp.element);
    }
    rep.add("Jb:prime", verdict(wp.empty()), wp);
    rep.add("Jb:strong-meet-irr", verdict(wm.empty()), wm);
    rep.add("Jb:complement-filter", verdict(wf.empty()), wf);

    auto cond = [&](const char* nm) { return check_condition(ctx, M, nm).verdict; };
    Verdict d1 = cond("D1"), d2 = cond("D2"), d3 = cond("D3"), d4 = cond("D4"), f1 = cond("F1");
    std::set<Bits, BitsLess> jbs, downs;
    for (const auto& pp : inst.B) {
        jbs.insert(j_b(inst, pp.element));
        downs.insert(p.down(pp.element));
    }

    auto gated = [&](const char* nm, Verdict hyp, const std::function<std::string()>& body) {
        if (hyp != Verdict::True) {
            rep.add(nm, Verdict::NotApplicable, {}, "hypothesis not satisfied");
            return;
        }
        std::string bw = body();
        rep.add(nm, verdict(bw.empty()), bw);
    };

    gated("D3=>meet-irr-are-Jb", d3, [&] {
        for (const auto& J : I)
            if (strongly_meet_irreducible_in(I, J) && !jbs.count(J))
                return p.format(J);
        return std::string();
    });
    gated("D4=>down-b-strong-join-irr", d4, [&] {
        for (const auto& D : downs)
            if (!strongly_join_irreducible_in(ctx, I, D))
                return p.format(D);
        return std::string();
    });
    gated("D4=>strong-join-irr-are-down-b", d4, [&] {
        for (const auto& J : I)
            if (strongly_join_irreducible_in(ctx, I, J) && !downs.count(J))
                return p.format(J);
        return std::string();
    });
    {
        std::string bw;
        for (const auto& J : I) {
            if (J.all())
                continue;
            // finite strong meet-irreducibility in M: J >= K & L forces J >= K or J >= L
            bool strong = true;
            for (std::size_t a = 0; a < I.size() && strong; ++a)
                for (std::size_t b = a; b < I.size(); ++b)
                    if ((I[a] & I[b]).is_subset_of(J) && !I[a].is_subset_of(J) && !I[b].is_subset_of(J)) {
                        strong = false;
                        break;
                    }
            if (strong && !classify_subset(ctx, J).prime_ideal) {
                bw = p.format(J);
                break;
            }
        }
        rep.add("meet-irr=>prime", verdict(bw.empty()), bw);
    }
    gated("D2=>complement-B-set", d2, [&] {
        for (const auto& J : I)
            if (!classify_subset(ctx, p.all() - J).b_set && !J.all())
                return p.format(J);
        return std::string();
    });
    gated("D2=>prime-complement-filter", d2, [&] {
        for (const auto& J : I)
            if (!J.all() && classify_subset(ctx, J).prime_ideal && !classify_subset(ctx, p.all() - J).b_filter)
                return p.format(J);
        return std::string();
    });
    gated("D1=>(B2<=>principal)", d1, [&] {
        bool b2 = b2_check(inst).verdict == Verdict::True;
        bool principal = true;
        for (const auto& J : I)
            principal = principal && p.greatest_of(J).has_value();
        if (b2 != principal)
            return std::string(b2 ? "B2 holds but M has a non-principal member" : "M all principal but B2 fails");
        return std::string();
    });
    gated("D4=>completely-distributive", d4, [&] {
        if (I.size() <= cd_cap) {
            auto lc = lattice_class(*M.order(p), cd_cap);
            if (lc.completely_distributive != Verdict::True)
                return "lattice_class: " + lc.witness;
            return std::string();
        }
        // above the cap: J -> J & B must be an order embedding onto a ring of sets
        std::set<Bits, BitsLess> img;
        for (const auto& J : I)
            img.insert(J & inst.b_mask);
        if (img.size() != I.size())
            return std::string("J -> J&B is not one-one");
        for (const auto& X : img)
            for (const auto& Y : img)
                if (!img.count(X | Y) || !img.count(X & Y))
                    return "not a ring of sets at " + p.format(X) + "," + p.format(Y);
        return std::string();
    });
    gated("F1=>lattice-ideals", f1, [&] {
        for (Id a = 0; a < p.size(); ++a)
            if (M.find(p.down(a)) == npos)
                return "down " + p.label(a) + " missing from M";
        for (const auto& J : I) {
            auto ms = members(J);
            for (Id a : ms)
                for (Id b : ms) {
                    auto j = p.join2(a, b);
                    if (!j || !J[*j])
                        return p.format(J) + " not join-closed";
                }
        }
        return std::string();
    });
    return rep;
}

} // namespace ordfactor
