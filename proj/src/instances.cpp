#include "ordfactor/instances.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace ordfactor {

const char* to_string(SpecKind k)
{
    switch (k) {
    case SpecKind::OrderedMonoid: return "ordered-monoid";
    case SpecKind::PosetWithB: return "poset-with-B";
    case SpecKind::IdealSystem: return "ideal-system";
    }
    return "?";
}

static InputError at(int line, const std::string& msg)
{
    return InputError("line " + std::to_string(line) + ": " + msg);
}

static std::vector<std::string> tokens(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

InstanceSpec parse_spec(const std::string& text)
{
    InstanceSpec spec;
    std::istringstream in(text);
    std::string raw, section;
    int line = 0;
    bool have_name = false, have_kind = false;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos)
            raw.erase(h);
        auto tk = tokens(raw);
        if (tk.empty())
            continue;
        if (tk[0].front() == '[') {
            if (tk.size() != 1 || tk[0].back() != ']')
                throw at(line, "malformed section header");
            section = tk[0].substr(1, tk[0].size() - 2);
            if (section == "elements")
                spec.elements_line = line;
            else if (section == "order")
                spec.order_line = line;
            else if (section == "mult")
                spec.mult_line = line;
            else if (section == "B")
                spec.b_line = line;
            else if (section == "principal")
                spec.principal_line = line;
            else if (section != "instance")
                throw at(line, "unknown section [" + section + "]");
            continue;
        }
        if (section.empty())
            throw at(line, "content before the first section");
        if (section == "instance") {
            auto eq = raw.find('=');
            if (eq == std::string::npos)
                throw at(line, "expected key = value");
            auto key = tokens(raw.substr(0, eq)), val = tokens(raw.substr(eq + 1));
            if (key.size() != 1 || val.size() != 1)
                throw at(line, "expected key = value");
            if (key[0] == "name") {
                spec.name = val[0];
                have_name = true;
            } else if (key[0] == "kind") {
                if (val[0] == "ordered-monoid")
                    spec.kind = SpecKind::OrderedMonoid;
                else if (val[0] == "poset-with-B")
                    spec.kind = SpecKind::PosetWithB;
                else if (val[0] == "ideal-system")
                    spec.kind = SpecKind::IdealSystem;
                else
                    throw at(line, "unknown kind " + val[0]);
                have_kind = true;
            } else if (key[0] == "zero") {
                spec.zero = val[0];
            } else {
                throw at(line, "unknown key " + key[0]);
            }
        } else if (section == "elements") {
            for (auto& t : tk) {
                if (t.find_first_of("=^") != std::string::npos)
                    throw at(line, "label " + t + " contains a reserved character");
                spec.elements.push_back(t);
            }
        } else if (section == "order") {
            if (tk.size() == 3 && tk[0] == "rule" && tk[1] == "=") {
                if (tk[2] != "divisibility")
                    throw at(line, "unknown order rule " + tk[2]);
                spec.divisibility = true;
            } else if (tk.size() == 3 && tk[1] == "<=") {
                spec.order.push_back({tk[0], tk[2], line});
            } else {
                throw at(line, "expected a <= b or rule = divisibility");
            }
        } else if (section == "mult") {
            if (tk.size() != 5 || tk[1] != "*" || tk[3] != "=")
                throw at(line, "expected a * b = c");
            spec.mult.push_back({tk[0], tk[2], tk[4], line});
        } else if (section == "B") {
            auto caret = tk.size() == 3 ? tk[2].rfind('^') : std::string::npos;
            if (tk.size() != 3 || tk[1] != "=" || caret == std::string::npos || caret == 0)
                throw at(line, "expected element = base^exponent");
            std::string ex = tk[2].substr(caret + 1);
            if (ex.empty() || ex.size() > 6 || ex.find_first_not_of("0123456789") != std::string::npos ||
                std::stoul(ex) == 0)
                throw at(line, "bad exponent " + ex);
            spec.B.push_back({tk[0], tk[2].substr(0, caret), static_cast<unsigned>(std::stoul(ex)), line});
        } else if (section == "principal") {
            if (tk.size() != 3 || tk[1] != "=")
                throw at(line, "expected element = ideal");
            spec.principal.push_back({tk[0], tk[2], line});
        }
    }
    if (!have_name)
        throw at(line, "missing name in [instance]");
    if (!have_kind)
        throw at(line, "missing kind in [instance]");
    return spec;
}

std::string serialize(const InstanceSpec& s)
{
    std::ostringstream out;
    out << "[instance]\nname = " << s.name << "\nkind = " << to_string(s.kind) << "\n";
    if (!s.zero.empty())
        out << "zero = " << s.zero << "\n";
    out << "\n[elements]\n";
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        out << (i % 16 ? " " : i ? "\n" : "") << s.elements[i];
    out << "\n";
    if (s.divisibility || !s.order.empty()) {
        out << "\n[order]\n";
        if (s.divisibility)
            out << "rule = divisibility\n";
        for (const auto& p : s.order)
            out << p.lo << " <= " << p.hi << "\n";
    }
    if (!s.mult.empty()) {
        out << "\n[mult]\n";
        for (const auto& m : s.mult)
            out << m.a << " * " << m.b << " = " << m.c << "\n";
    }
    if (!s.B.empty()) {
        out << "\n[B]\n";
        for (const auto& b : s.B)
            out << b.element << " = " << b.base << "^" << b.exponent << "\n";
    }
    if (!s.principal.empty()) {
        out << "\n[principal]\n";
        for (const auto& p : s.principal)
            out << p.element << " = " << p.ideal << "\n";
    }
    return out.str();
}

namespace {

struct Labels {
    std::map<std::string, Id> idx;
    std::vector<std::string> names;

    Labels(const std::vector<std::string>& els, int line)
    {
        if (els.empty())
            throw at(line, "no elements");
        for (const auto& e : els) {
            if (!idx.emplace(e, names.size()).second)
                throw at(line, "duplicate element " + e);
            names.push_back(e);
        }
    }
    Id operator()(const std::string& l, int line) const
    {
        auto it = idx.find(l);
        if (it == idx.end())
            throw at(line, "unknown element " + l);
        return it->second;
    }
};

bool parse_uint(const std::string& s, std::uint64_t& v)
{
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
        return false;
    v = std::stoull(s);
    return true;
}

// explicit pairs with incremental closure so a cycle is reported where it closes
Poset build_order(const InstanceSpec& s, const Labels& L)
{
    const std::size_t n = L.names.size();
    std::vector<Bits> up(n, Bits(n));
    for (Id i = 0; i < n; ++i)
        up[i].set(i);
    if (s.divisibility) {
        std::vector<std::uint64_t> v(n);
        for (Id i = 0; i < n; ++i)
            if (!parse_uint(L.names[i], v[i]) || v[i] == 0)
                throw at(s.order_line, "divisibility needs positive integer labels, got " + L.names[i]);
        for (Id i = 0; i < n; ++i)
            for (Id j = 0; j < n; ++j)
                if (v[j] % v[i] == 0)
                    up[i].set(j);
    }
    for (const auto& p : s.order) {
        Id a = L(p.lo, p.line), b = L(p.hi, p.line);
        if (a != b && up[b][a])
            throw at(p.line, "antisymmetry violated: " + p.lo + " <= " + p.hi + " <= " + p.lo);
        for (Id x = 0; x < n; ++x)
            if (up[x][a])
                up[x] |= up[b];
    }
    try {
        return Poset(up, L.names);
    } catch (const InputError& e) {
        throw at(s.order_line, e.what());
    }
}

MultTable build_mult(const std::vector<InstanceSpec::Product>& ps, const Labels& L)
{
    MultTable t(L.names.size());
    for (const auto& p : ps) {
        Id a = L(p.a, p.line), b = L(p.b, p.line), c = L(p.c, p.line);
        if (t.defined(a, b) && t(a, b) != c)
            throw at(p.line, "conflicting product " + p.a + " * " + p.b);
        t.set(a, b, c);
    }
    return t;
}

std::vector<PrimePower> build_B(const InstanceSpec& s, const Labels& L, const Poset& P)
{
    std::vector<PrimePower> B;
    Bits rest = P.all();
    if (P.bottom())
        rest.reset(*P.bottom());
    Bits at_ = P.minimal_of(rest);
    for (const auto& e : s.B) {
        Id el = L(e.element, e.line), base = L(e.base, e.line);
        if (!at_[base])
            throw at(e.line, "base " + e.base + " is not an atom");
        B.push_back({el, base, e.exponent});
    }
    return B;
}

} // namespace

Loaded load(const InstanceSpec& s)
{
    Loaded out;
    out.name = s.name;
    if (s.kind == SpecKind::OrderedMonoid) {
        Labels L(s.elements, s.elements_line);
        if (!s.principal.empty())
            throw at(s.principal_line, "[principal] belongs to ideal systems");
        if (s.mult.empty())
            throw at(s.elements_line, "ordered monoid needs [mult]");
        MultTable t = build_mult(s.mult, L);
        Instance inst;
        try {
            inst = make_ordered_monoid(s.name, L.names, t);
        } catch (const InputError& e) {
            throw at(s.mult_line, e.what());
        }
        if (s.divisibility || !s.order.empty()) {
            Poset given = build_order(s, L);
            for (Id a = 0; a < given.size(); ++a)
                for (Id b = 0; b < given.size(); ++b)
                    if (given.leq(a, b) != inst.P().leq(a, b))
                        throw at(s.order_line, "order disagrees with the product at " + L.names[a] + ", " +
                                                   L.names[b]);
        }
        if (!s.B.empty()) {
            auto B = build_B(s, L, inst.P());
            std::sort(B.begin(), B.end(), [](auto& x, auto& y) { return x.element < y.element; });
            auto C = inst.B;
            std::sort(C.begin(), C.end(), [](auto& x, auto& y) { return x.element < y.element; });
            if (B != C)
                throw at(s.b_line, "[B] disagrees with the prime powers computed from the product");
        }
        out.inst = std::make_shared<const Instance>(std::move(inst));
        return out;
    }
    if (s.kind == SpecKind::PosetWithB) {
        Labels L(s.elements, s.elements_line);
        if (!s.mult.empty())
            throw at(s.mult_line, "poset-with-B takes no [mult]");
        auto P = std::make_shared<const Poset>(build_order(s, L));
        auto B = build_B(s, L, *P);
        try {
            out.inst = std::make_shared<const Instance>(make_poset_with_b(s.name, P, B));
        } catch (const InputError& e) {
            throw at(s.b_line, e.what());
        }
        return out;
    }

    Labels L(s.elements, s.elements_line);
    auto I = std::make_shared<const Poset>(build_order(s, L));
    if (s.zero.empty())
        throw at(s.elements_line, "ideal system needs zero = ... in [instance]");
    Id zero = L(s.zero, 1);
    if (s.principal.empty())
        throw at(s.elements_line, "ideal system needs [principal]");
    if (s.mult.empty())
        throw at(s.principal_line, "ideal system needs [mult] to derive the monoid");
    MultTable it = build_mult(s.mult, L);
    std::vector<std::string> mlabels;
    std::vector<Id> principal;
    std::vector<Id> of(L.names.size(), npos);
    for (const auto& p : s.principal) {
        Id i = L(p.ideal, p.line);
        if (of[i] != npos)
            throw at(p.line, "ideal " + p.ideal + " is principal twice");
        of[i] = mlabels.size();
        mlabels.push_back(p.element);
        principal.push_back(i);
    }
    Labels ML(mlabels, s.principal_line);
    MultTable mt(mlabels.size());
    for (Id x = 0; x < mlabels.size(); ++x)
        for (Id y = 0; y < mlabels.size(); ++y) {
            Id c = it(principal[x], principal[y]);
            if (c != npos && of[c] != npos)
                mt.set(x, y, of[c]);
        }
    IdealSystem sys;
    sys.name = s.name;
    sys.ideals = I;
    sys.zero = zero;
    sys.principal = principal;
    sys.mult = it;
    try {
        sys.monoid = std::make_shared<const Instance>(make_ordered_monoid(s.name + "/monoid", mlabels, mt));
        validate(sys);
    } catch (const InputError& e) {
        throw at(s.principal_line, e.what());
    }
    out.inst = sys.monoid;
    out.system = std::move(sys);
    return out;
}

Loaded parse_instance(const std::string& text)
{
    return load(parse_spec(text));
}

Loaded load_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_instance(ss.str());
}

static std::vector<InstanceSpec::Pair> cover_pairs(const Poset& p)
{
    std::vector<InstanceSpec::Pair> out;
    for (Id b = 0; b < p.size(); ++b)
        for (Id a : p.lower_covers(b))
            out.push_back({p.label(a), p.label(b)});
    return out;
}

static std::vector<InstanceSpec::Product> products(const MultTable& t, const std::vector<std::string>& lab)
{
    std::vector<InstanceSpec::Product> out;
    for (Id a = 0; a < t.size(); ++a)
        for (Id b = a; b < t.size(); ++b)
            if (t.defined(a, b))
                out.push_back({lab[a], lab[b], lab[t(a, b)]});
    return out;
}

InstanceSpec to_spec(const Loaded& l)
{
    InstanceSpec s;
    s.name = l.name;
    if (l.system) {
        const auto& sys = *l.system;
        s.kind = SpecKind::IdealSystem;
        s.elements = sys.ideals->labels();
        s.order = cover_pairs(*sys.ideals);
        s.zero = sys.ideals->label(sys.zero);
        for (Id x = 0; x < sys.principal.size(); ++x)
            s.principal.push_back({l.inst->label(x), sys.ideals->label(sys.principal[x])});
        if (sys.mult)
            s.mult = products(*sys.mult, s.elements);
        return s;
    }
    const Instance& inst = *l.inst;
    s.elements = inst.P().labels();
    if (inst.kind == InstanceKind::OrderedMonoid) {
        s.kind = SpecKind::OrderedMonoid;
        s.mult = products(*inst.mult, s.elements);
    } else {
        s.kind = SpecKind::PosetWithB;
        s.order = cover_pairs(inst.P());
    }
    for (const auto& pp : inst.B)
        s.B.push_back({inst.label(pp.element), inst.label(pp.base), pp.exponent});
    return s;
}

Instance gen_div(std::uint64_t n)
{
    if (n < 1 || n > 1000000)
        throw InputError("div: n must lie in 1..10^6");
    std::vector<std::uint64_t> d;
    for (std::uint64_t x = 1; x <= n; ++x)
        if (n % x == 0)
            d.push_back(x);
    if (d.size() > 64)
        throw InputError("div: " + std::to_string(n) + " has more than 64 divisors");
    std::vector<std::string> labels;
    std::map<std::uint64_t, Id> pos;
    for (Id i = 0; i < d.size(); ++i) {
        labels.push_back(std::to_string(d[i]));
        pos[d[i]] = i;
    }
    MultTable t(d.size());
    for (Id i = 0; i < d.size(); ++i)
        for (Id j = i; j < d.size(); ++j)
            if (n % (d[i] * d[j]) == 0)
                t.set(i, j, pos[d[i] * d[j]]);
    return make_ordered_monoid("div:" + std::to_string(n), labels, t);
}

Instance gen_free(unsigned k, unsigned e)
{
    if (k < 1 || e < 1)
        throw InputError("free: k and e must be positive");
    std::size_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
        n *= e + 1;
        if (n > 4096)
            throw InputError("free: more than 4096 elements");
    }
    std::vector<std::vector<unsigned>> vec(n, std::vector<unsigned>(k));
    std::vector<std::string> labels(n);
    for (Id id = 0; id < n; ++id) {
        Id rest = id;
        for (unsigned i = k; i-- > 0;) {
            vec[id][i] = rest % (e + 1);
            rest /= e + 1;
        }
        std::string s = "(";
        for (unsigned i = 0; i < k; ++i)
            s += (i ? "," : "") + std::to_string(vec[id][i]);
        labels[id] = s + ")";
    }
    MultTable t(n);
    for (Id a = 0; a < n; ++a)
        for (Id b = a; b < n; ++b) {
            Id c = 0;
            bool ok = true;
            for (unsigned i = 0; i < k; ++i) {
                unsigned s = vec[a][i] + vec[b][i];
                ok = ok && s <= e;
                c = c * (e + 1) + s;
            }
            if (ok)
                t.set(a, b, c);
        }
    return make_ordered_monoid("free:" + std::to_string(k) + "," + std::to_string(e), labels, t);
}

Instance gen_hilbert(unsigned N)
{
    if (N < 1 || N > 10000)
        throw InputError("hilbert: N must lie in 1..10^4");
    std::vector<unsigned> h;
    for (unsigned m = 1; m <= N; m += 4)
        h.push_back(m);
    std::vector<std::string> labels;
    for (unsigned m : h)
        labels.push_back(std::to_string(m));
    MultTable t(h.size());
    for (Id i = 0; i < h.size(); ++i)
        for (Id j = i; j < h.size() && h[i] * h[j] <= N; ++j)
            t.set(i, j, (h[i] * h[j] - 1) / 4);
    return make_ordered_monoid("hilbert:" + std::to_string(N), labels, t);
}

IdealSystem gen_krullZ2()
{
    // grid points (a,b) in {0..3}^2 as ideals, larger vectors giving smaller ideals
    const unsigned side = 4, pts = side * side;
    auto lab = [](unsigned a, unsigned b) { return std::to_string(a) + std::to_string(b); };
    std::vector<std::string> ilabels{"(0)"};
    for (unsigned v = 0; v < pts; ++v)
        ilabels.push_back("I" + lab(v / side, v % side));
    auto I = std::make_shared<const Poset>(Poset::from_relation(
        pts + 1,
        [&](Id x, Id y) {
            if (x == 0)
                return true;
            if (y == 0)
                return false;
            unsigned vx = x - 1, vy = y - 1;
            return vx / side >= vy / side && vx % side >= vy % side;
        },
        ilabels));
    MultTable it(pts + 1);
    for (Id x = 0; x <= pts; ++x)
        it.set(0, x, 0);
    for (unsigned v = 0; v < pts; ++v)
        for (unsigned w = v; w < pts; ++w) {
            unsigned a = v / side + w / side, b = v % side + w % side;
            if (a < side && b < side)
                it.set(v + 1, w + 1, 1 + a * side + b);
        }
    std::vector<Id> principal;
    std::vector<std::string> mlabels;
    std::vector<Id> of(pts + 1, npos);
    for (unsigned v = 0; v < pts; ++v)
        if ((v / side + v % side) % 2 == 0) {
            of[v + 1] = principal.size();
            principal.push_back(v + 1);
            mlabels.push_back(lab(v / side, v % side));
        }
    MultTable mt(principal.size());
    for (Id x = 0; x < principal.size(); ++x)
        for (Id y = x; y < principal.size(); ++y) {
            Id c = it(principal[x], principal[y]);
            if (c != npos)
                mt.set(x, y, of[c]);
        }
    IdealSystem sys;
    sys.name = "krullZ2";
    sys.ideals = I;
    sys.zero = 0;
    sys.principal = principal;
    sys.monoid = std::make_shared<const Instance>(make_ordered_monoid("krullZ2/monoid", mlabels, mt));
    sys.mult = it;
    validate(sys);
    return sys;
}

namespace {

// modulo on raw output keeps the stream identical across standard libraries
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    unsigned pick(unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(g() % (hi - lo + 1)); }
};

bool acceptable(const Instance& inst)
{
    const Poset& p = inst.P();
    auto bs = members(inst.b_mask);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bs.size()); ++mask) {
        Bits A(p.size());
        for (std::size_t i = 0; i < bs.size(); ++i)
            if (mask >> i & 1)
                A.set(bs[i]);
        if (!p.join(A))
            return false;
    }
    return b4_check(inst).verdict == Verdict::True;
}

} // namespace

Instance gen_random(unsigned size, std::uint64_t seed)
{
    if (size < 1 || size > 12)
        throw InputError("random: size must lie in 1..12");
    std::string name = "random:" + std::to_string(size) + "," + std::to_string(seed);
    if (size == 1)
        return make_poset_with_b(name, std::make_shared<const Poset>(Poset::from_pairs(1, {}, {"1"})), {});
    Rng r(seed);
    for (;;) {
        // a box of chains, the axis points being the prime powers
        std::vector<unsigned> len;
        std::size_t box = 1;
        unsigned k = r.pick(1, 3);
        while (len.size() < k && box * 2 <= size) {
            len.push_back(1);
            box *= 2;
        }
        for (unsigned tries = r.pick(0, 4); tries-- > 0;) {
            unsigned i = r.pick(0, static_cast<unsigned>(len.size() - 1));
            std::size_t grown = box / (len[i] + 1) * (len[i] + 2);
            if (grown <= size) {
                box = grown;
                ++len[i];
            }
        }
        k = static_cast<unsigned>(len.size());
        std::vector<std::vector<unsigned>> vec(box, std::vector<unsigned>(k));
        std::vector<std::string> labels(box);
        for (Id id = 0; id < box; ++id) {
            Id rest = id;
            for (unsigned i = k; i-- > 0;) {
                vec[id][i] = rest % (len[i] + 1);
                rest /= len[i] + 1;
            }
            std::string s;
            for (unsigned i = 0; i < k; ++i)
                if (vec[id][i])
                    s += std::string(1, char('a' + i)) + (vec[id][i] > 1 ? std::to_string(vec[id][i]) : "");
            labels[id] = s.empty() ? "1" : s;
        }
        std::vector<std::pair<Id, Id>> pairs;
        auto id_of = [&](const std::vector<unsigned>& v) {
            Id id = 0;
            for (unsigned i = 0; i < k; ++i)
                id = id * (len[i] + 1) + v[i];
            return id;
        };
        for (Id id = 0; id < box; ++id)
            for (unsigned i = 0; i < k; ++i)
                if (vec[id][i] < len[i]) {
                    auto w = vec[id];
                    ++w[i];
                    pairs.push_back({id, id_of(w)});
                }

        // extras: doubled elements (D1 fails there) or elements over an antichain
        unsigned mode = r.pick(0, 2);
        std::size_t n = box;
        unsigned extra = size > box ? r.pick(mode ? 1 : 0, static_cast<unsigned>(size - box)) : 0;
        if (mode == 0)
            extra = 0;
        for (unsigned e = 0; e < extra; ++e) {
            Id z = n++;
            labels.push_back("z" + std::to_string(e + 1));
            if (mode == 1) {
                Id a = r.pick(1, static_cast<unsigned>(box - 1));
                pairs.push_back({a, z});
                for (unsigned i = 0; i < k; ++i)
                    if (vec[a][i] < len[i]) {
                        auto w = vec[a];
                        ++w[i];
                        pairs.push_back({z, id_of(w)});
                    }
            } else {
                Id a = r.pick(0, static_cast<unsigned>(box - 1)), b = r.pick(0, static_cast<unsigned>(box - 1));
                pairs.push_back({a, z});
                pairs.push_back({b, z});
            }
        }
        auto P = std::make_shared<const Poset>(Poset::from_pairs(n, pairs, labels));
        std::vector<PrimePower> B;
        for (unsigned i = 0; i < k; ++i) {
            std::vector<unsigned> v(k, 0);
            v[i] = 1;
            Id base = id_of(v);
            for (unsigned x = 1; x <= len[i]; ++x) {
                v[i] = x;
                B.push_back({id_of(v), base, x});
            }
        }
        Instance inst = make_poset_with_b(name, P, B);
        if (acceptable(inst))
            return inst;
    }
}

Loaded generate(const std::string& spec, std::uint64_t seed)
{
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<std::uint64_t> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        for (std::string a; std::getline(ss, a, ',');) {
            std::uint64_t v;
            if (!parse_uint(a, v))
                throw InputError("bad generator argument '" + a + "' in " + spec);
            args.push_back(v);
        }
    }
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw InputError("wrong number of arguments for generator " + name);
    };
    Loaded l;
    if (name == "div") {
        need(1, 1);
        l.inst = std::make_shared<const Instance>(gen_div(args[0]));
    } else if (name == "free") {
        need(2, 2);
        l.inst = std::make_shared<const Instance>(gen_free(static_cast<unsigned>(args[0]), static_cast<unsigned>(args[1])));
    } else if (name == "hilbert") {
        need(1, 1);
        l.inst = std::make_shared<const Instance>(gen_hilbert(static_cast<unsigned>(std::min<std::uint64_t>(args[0], 1u << 30))));
    } else if (name == "krullZ2") {
        need(0, 0);
        l.system = gen_krullZ2();
        l.inst = l.system->monoid;
    } else if (name == "random") {
        need(1, 2);
        l.inst = std::make_shared<const Instance>(
            gen_random(static_cast<unsigned>(std::min<std::uint64_t>(args[0], 1u << 30)), args.size() > 1 ? args[1] : seed));
    } else {
        throw InputError("unknown generator " + name);
    }
    l.name = l.system ? l.system->name : l.inst->name;
    return l;
}

} // namespace ordfactor
