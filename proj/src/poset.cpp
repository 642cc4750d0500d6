#include "ordfactor/poset.hpp"

#include <algorithm>
#include <sstream>

namespace ordfactor {

Poset::Poset(const std::vector<Bits>& rows, std::vector<std::string> labels)
    : n_(rows.size()), up_(rows), labels_(std::move(labels))
{
    if (labels_.size() != n_)
        throw InputError("label count does not match carrier size");
    for (Id a = 0; a < n_; ++a) {
        if (up_[a].size() != n_)
            throw InputError("order row has wrong width");
        if (!up_[a][a])
            throw InputError("order is not reflexive at " + labels_[a]);
    }
    for (Id a = 0; a < n_; ++a)
        for (Id b : members(up_[a])) {
            if (b != a && up_[b][a])
                throw InputError("order is not antisymmetric: " + labels_[a] + " <= " + labels_[b] +
                                 " <= " + labels_[a]);
            if (!up_[b].is_subset_of(up_[a]))
                throw InputError("order is not transitive above " + labels_[a] + " <= " + labels_[b]);
        }
    build();
}

void Poset::build()
{
    down_.assign(n_, Bits(n_));
    for (Id a = 0; a < n_; ++a)
        for (Id b : members(up_[a]))
            down_[b].set(a);
    index_.clear();
    for (Id a = 0; a < n_; ++a)
        if (!index_.emplace(labels_[a], a).second)
            throw InputError("duplicate label " + labels_[a]);
    bottom_ = least_of(all());
    top_ = greatest_of(all());
}

Poset Poset::from_relation(std::size_t n, const std::function<bool(Id, Id)>& leq,
                           std::vector<std::string> labels)
{
    std::vector<Bits> rows(n, Bits(n));
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            if (leq(a, b))
                rows[a].set(b);
    return Poset(rows, std::move(labels));
}

Poset Poset::from_pairs(std::size_t n, const std::vector<std::pair<Id, Id>>& pairs,
                        std::vector<std::string> labels)
{
    std::vector<Bits> rows(n, Bits(n));
    for (Id a = 0; a < n; ++a)
        rows[a].set(a);
    for (auto [lo, hi] : pairs) {
        if (lo >= n || hi >= n)
            throw InputError("order pair out of range");
        rows[lo].set(hi);
    }
    // Warshall on bit rows
    for (Id k = 0; k < n; ++k)
        for (Id a = 0; a < n; ++a)
            if (rows[a][k])
                rows[a] |= rows[k];
    return Poset(rows, std::move(labels));
}

Poset Poset::from_sets(const std::vector<Bits>& sets, std::vector<std::string> labels)
{
    return from_relation(
        sets.size(), [&](Id a, Id b) { return sets[a].is_subset_of(sets[b]); }, std::move(labels));
}

Bits Poset::single(Id a) const
{
    Bits s(n_);
    s.set(a);
    return s;
}

void Poset::check_index(Id a) const
{
    if (a >= n_)
        throw InputError("element index " + std::to_string(a) + " out of range");
}

void Poset::check_subset(const Bits& A) const
{
    if (A.size() != n_)
        throw InputError("subset is over a different carrier");
}

Bits Poset::down_set(const Bits& A) const
{
    check_subset(A);
    Bits r(n_);
    for (Id a : members(A))
        r |= down_[a];
    return r;
}

Bits Poset::up_set(const Bits& A) const
{
    check_subset(A);
    Bits r(n_);
    for (Id a : members(A))
        r |= up_[a];
    return r;
}

bool Poset::is_lower_set(const Bits& A) const
{
    for (Id a : members(A))
        if (!down_[a].is_subset_of(A))
            return false;
    return true;
}

bool Poset::is_upper_set(const Bits& A) const
{
    for (Id a : members(A))
        if (!up_[a].is_subset_of(A))
            return false;
    return true;
}

std::optional<Id> Poset::least_of(const Bits& S) const
{
    for (Id u : members(S))
        if (S.is_subset_of(up_[u]))
            return u;
    return std::nullopt;
}

std::optional<Id> Poset::greatest_of(const Bits& S) const
{
    for (Id u : members(S))
        if (S.is_subset_of(down_[u]))
            return u;
    return std::nullopt;
}

Bits Poset::minimal_of(const Bits& S) const
{
    Bits r(n_);
    for (Id a : members(S)) {
        Bits below = down_[a] & S;
        below.reset(a);
        if (below.none())
            r.set(a);
    }
    return r;
}

Bits Poset::maximal_of(const Bits& S) const
{
    Bits r(n_);
    for (Id a : members(S)) {
        Bits above = up_[a] & S;
        above.reset(a);
        if (above.none())
            r.set(a);
    }
    return r;
}

bool Poset::is_antichain(const Bits& S) const
{
    for (Id a : members(S)) {
        Bits c = (up_[a] | down_[a]) & S;
        c.reset(a);
        if (c.any())
            return false;
    }
    return true;
}

std::optional<Id> Poset::join(const Bits& A) const
{
    check_subset(A);
    Bits ub = all();
    for (Id a : members(A))
        ub &= up_[a];
    return least_of(ub);
}

std::optional<Id> Poset::meet(const Bits& A) const
{
    check_subset(A);
    Bits lb = all();
    for (Id a : members(A))
        lb &= down_[a];
    return greatest_of(lb);
}

std::optional<Id> Poset::join2(Id a, Id b) const
{
    return least_of(up_[a] & up_[b]);
}

std::optional<Id> Poset::meet2(Id a, Id b) const
{
    return greatest_of(down_[a] & down_[b]);
}

std::vector<Id> Poset::lower_covers(Id a) const
{
    Bits below = down_[a];
    below.reset(a);
    return members(maximal_of(below));
}

std::vector<Id> Poset::upper_covers(Id a) const
{
    Bits above = up_[a];
    above.reset(a);
    return members(minimal_of(above));
}

std::optional<Id> Poset::find(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Id Poset::at(const std::string& label) const
{
    auto r = find(label);
    if (!r)
        throw InputError("unknown element label '" + label + "'");
    return *r;
}

std::string Poset::format(const Bits& S) const
{
    std::string out = "{";
    bool first = true;
    for (Id a : members(S)) {
        if (!first)
            out += ",";
        out += labels_[a];
        first = false;
    }
    return out + "}";
}

Poset Poset::dual() const
{
    Poset d;
    d.n_ = n_;
    d.up_ = down_;
    d.labels_ = labels_;
    d.build();
    return d;
}

Poset Poset::induced(const Bits& S, std::vector<Id>* map) const
{
    std::vector<Id> ids = members(S);
    std::vector<std::string> labs;
    for (Id a : ids)
        labs.push_back(labels_[a]);
    Poset q = from_relation(
        ids.size(), [&](Id i, Id j) { return leq(ids[i], ids[j]); }, std::move(labs));
    if (map)
        *map = ids;
    return q;
}

bool irreducible(const Poset& p, Id a, Side side, Strength strength, Arity arity)
{
    p.check_index(a);
    if (side == Side::Meet)
        return irreducible(p.dual(), a, Side::Join, strength, arity);
    if (p.bottom() && *p.bottom() == a)
        return false;

    const std::size_t n = p.size();
    if (arity == Arity::Finite) {
        for (Id b = 0; b < n; ++b)
            for (Id c = b; c < n; ++c) {
                auto j = p.join2(b, c);
                if (!j)
                    continue;
                if (strength == Strength::Plain) {
                    if (*j == a && b != a && c != a)
                        return false;
                } else if (p.leq(a, *j) && !p.leq(a, b) && !p.leq(a, c)) {
                    return false;
                }
            }
        return true;
    }

    if (strength == Strength::Plain) {
        // a = join(A) for A below a iff the lower covers already join to a
        auto covers = p.lower_covers(a);
        auto j = p.join(bits_of(n, covers));
        return !(j && *j == a);
    }

    // strong, complete: look for A avoiding up(a) whose join lands on some j >= a;
    // the largest such A below j is the one to test
    Bits avoid = p.all() - p.up(a);
    for (Id j : members(p.up(a))) {
        auto k = p.join(avoid & p.down(j));
        if (k && *k == j)
            return false;
    }
    return true;
}

OpTables op_tables(const Poset& p)
{
    OpTables t;
    t.n = p.size();
    t.join.assign(t.n * t.n, npos);
    t.meet.assign(t.n * t.n, npos);
    for (Id a = 0; a < t.n; ++a)
        for (Id b = a; b < t.n; ++b) {
            if (auto j = p.join2(a, b))
                t.join[a * t.n + b] = t.join[b * t.n + a] = *j;
            if (auto m = p.meet2(a, b))
                t.meet[a * t.n + b] = t.meet[b * t.n + a] = *m;
        }
    return t;
}

void for_each_antichain(const Poset& p, const std::function<bool(const Bits&)>& f)
{
    const std::size_t n = p.size();
    Bits cur(n);
    bool stop = false;
    // cur holds the chosen antichain; next candidates must exceed start and be incomparable
    std::function<void(Id, const Bits&)> rec = [&](Id start, const Bits& allowed) {
        if (stop)
            return;
        if (!f(cur)) {
            stop = true;
            return;
        }
        for (Id x = start; x < n && !stop; ++x) {
            if (!allowed[x])
                continue;
            cur.set(x);
            rec(x + 1, allowed - p.up(x) - p.down(x));
            cur.reset(x);
        }
    };
    rec(0, p.all());
}

EnumStatus antichains_within(const Poset& p, const Bits& within, std::size_t max_size, std::size_t budget,
                             const std::function<bool(const Bits&)>& f)
{
    const std::size_t n = p.size();
    Bits cur(n);
    bool stop = false, truncated = false;
    std::size_t seen = 0;
    std::function<void(Id, const Bits&, std::size_t)> rec = [&](Id start, const Bits& allowed, std::size_t k) {
        if (stop)
            return;
        if (++seen > budget) {
            truncated = stop = true;
            return;
        }
        if (!f(cur)) {
            stop = true;
            return;
        }
        for (auto x = start == 0 ? allowed.find_first() : allowed.find_next(start - 1); x != Bits::npos && !stop;
             x = allowed.find_next(x)) {
            if (k == max_size) {
                truncated = true;
                return;
            }
            cur.set(x);
            rec(x + 1, allowed - p.up(x) - p.down(x), k + 1);
            cur.reset(x);
        }
    };
    rec(0, within, 0);
    if (truncated)
        return EnumStatus::Truncated;
    return stop ? EnumStatus::Stopped : EnumStatus::Complete;
}

LatticeClass lattice_class(const Poset& p, std::size_t cd_cap)
{
    LatticeClass lc;
    const std::size_t n = p.size();
    OpTables t = op_tables(p);
    lc.join_semilattice = lc.meet_semilattice = true;
    for (Id a = 0; a < n; ++a)
        for (Id b = a; b < n; ++b) {
            if (t.j(a, b) == npos && lc.join_semilattice) {
                lc.join_semilattice = false;
                lc.witness = "no join of " + p.label(a) + "," + p.label(b);
            }
            if (t.m(a, b) == npos && lc.meet_semilattice) {
                lc.meet_semilattice = false;
                if (lc.witness.empty())
                    lc.witness = "no meet of " + p.label(a) + "," + p.label(b);
            }
        }
    lc.lattice = lc.join_semilattice && lc.meet_semilattice;
    // binary joins plus the empty join give every finite join
    lc.complete = lc.lattice && p.bottom().has_value() && p.top().has_value();
    if (!lc.lattice) {
        lc.completely_distributive = Verdict::False;
        return lc;
    }
    lc.distributive = true;
    for (Id a = 0; a < n && lc.distributive; ++a)
        for (Id b = 0; b < n && lc.distributive; ++b)
            for (Id c = b; c < n; ++c) {
                if (t.m(a, t.j(b, c)) != t.j(t.m(a, b), t.m(a, c))) {
                    lc.distributive = false;
                    lc.witness = "a=" + p.label(a) + " b=" + p.label(b) + " c=" + p.label(c);
                    break;
                }
            }
    if (!lc.complete) {
        lc.completely_distributive = Verdict::False;
        return lc;
    }
    if (n > cd_cap) {
        lc.completely_distributive = Verdict::NotEvaluated;
        return lc;
    }
    // The family law with A_1 = {x} gives x ^ (vC) = v(x ^ c); conversely that law,
    // applied twice, gives the two-member family law, and induction on the (finitely
    // many distinct) members gives the rest. C may be taken to be an antichain.
    bool cd = true;
    std::string w;
    for_each_antichain(p, [&](const Bits& C) {
        Id jc = *p.join(C);
        for (Id x = 0; x < n; ++x) {
            Bits parts(n);
            for (Id c : members(C))
                parts.set(t.m(x, c));
            if (t.m(x, jc) != *p.join(parts)) {
                cd = false;
                w = "x=" + p.label(x) + " C=" + p.format(C);
                return false;
            }
        }
        return true;
    });
    lc.completely_distributive = verdict(cd);
    if (!cd && lc.witness.empty())
        lc.witness = w;
    return lc;
}

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<Id>& f)
{
    if (p.size() != q.size() || f.size() != p.size())
        return false;
    std::vector<bool> hit(q.size(), false);
    for (Id x : f) {
        if (x >= q.size() || hit[x])
            return false;
        hit[x] = true;
    }
    for (Id a = 0; a < p.size(); ++a)
        for (Id b = 0; b < p.size(); ++b)
            if (p.leq(a, b) != q.leq(f[a], f[b]))
                return false;
    return true;
}

std::optional<std::vector<Id>> order_isomorphism(const Poset& p, const Poset& q, std::size_t cap)
{
    if (p.size() > cap || q.size() > cap)
        throw CapExceeded("order_isomorphism: size exceeds cap " + std::to_string(cap));
    const std::size_t n = p.size();
    if (n != q.size())
        return std::nullopt;

    auto sig = [](const Poset& r, Id a) { return std::make_pair(r.down(a).count(), r.up(a).count()); };
    std::vector<Id> order(n);
    for (Id i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](Id a, Id b) {
        return std::make_pair(p.down(a).count(), a) < std::make_pair(p.down(b).count(), b);
    });
    {
        std::vector<std::pair<std::size_t, std::size_t>> sp, sq;
        for (Id a = 0; a < n; ++a) {
            sp.push_back(sig(p, a));
            sq.push_back(sig(q, a));
        }
        std::sort(sp.begin(), sp.end());
        std::sort(sq.begin(), sq.end());
        if (sp != sq)
            return std::nullopt;
    }

    std::vector<Id> f(n, npos);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
        if (k == n)
            return true;
        Id a = order[k];
        for (Id x = 0; x < n; ++x) {
            if (used[x] || sig(q, x) != sig(p, a))
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                Id b = order[i];
                ok = p.leq(a, b) == q.leq(x, f[b]) && p.leq(b, a) == q.leq(f[b], x);
            }
            if (!ok)
                continue;
            f[a] = x;
            used[x] = true;
            if (rec(k + 1))
                return true;
            used[x] = false;
            f[a] = npos;
        }
        return false;
    };
    if (!rec(0))
        return std::nullopt;
    return f;
}

} // namespace ordfactor
