#include "ordfactor/checks.hpp"

#include "ordfactor/products.hpp"
#include "ordfactor/toporep.hpp"

#include <json.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>

namespace ordfactor {

const std::vector<std::string>& known_conditions()
{
    static const std::vector<std::string> k{"D1", "D2", "D3", "D4", "D5", "D6", "B1", "B2", "B3",
                                            "B4", "F1", "F2", "F3", "DCC", "harness", "classify",
                                            "toporep", "orderrep"};
    return k;
}

std::vector<std::string> expand_conditions(const std::string& list)
{
    const auto& k = known_conditions();
    std::vector<bool> want(k.size(), false);
    std::stringstream ss(list);
    for (std::string c; std::getline(ss, c, ',');) {
        c.erase(std::remove_if(c.begin(), c.end(), ::isspace), c.end());
        if (c.empty())
            continue;
        if (c == "all") {
            want.assign(k.size(), true);
            continue;
        }
        auto it = std::find(k.begin(), k.end(), c);
        if (it == k.end())
            throw InputError("unknown condition " + c);
        want[it - k.begin()] = true;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (want[i])
            out.push_back(k[i]);
    if (out.empty())
        throw InputError("no conditions requested");
    return out;
}

namespace {

// lazily built pieces shared by the checks of one run
struct Session {
    const Loaded& l;
    const RunConfig& cfg;
    std::unique_ptr<BContext> ctx;
    std::optional<BIdealLattice> M;
    std::optional<DivisorModel> model;
    std::string model_error;
    bool model_tried = false;

    const BContext& context()
    {
        if (!ctx)
            ctx = std::make_unique<BContext>(*l.inst);
        return *ctx;
    }
    const BIdealLattice& lattice()
    {
        if (!M)
            M = enumerate_M(*l.inst, cfg.enumc);
        return *M;
    }
    const DivisorModel* divisor_model()
    {
        if (!model_tried) {
            model_tried = true;
            try {
                if (l.system)
                    model = build_model(*l.system, cfg.enumc);
                else if (l.inst->kind == InstanceKind::OrderedMonoid)
                    model = build_model(principal_system(l.inst), cfg.enumc);
                else
                    model_error = "not applicable to a poset without product";
            } catch (const InputError& e) {
                model_error = e.what();
            }
        }
        return model ? &*model : nullptr;
    }
};

void append(Report& into, const Report& from, const std::string& prefix)
{
    for (const auto& c : from.checks) {
        Check d = c;
        d.condition = prefix + c.condition;
        into.checks.push_back(d);
    }
}

void run_one(Session& s, Report& rep, const std::string& c)
{
    const Instance& inst = *s.l.inst;
    if (c == "D6") {
        auto* dm = s.divisor_model();
        if (!dm) {
            bool na = !s.l.system && inst.kind != InstanceKind::OrderedMonoid;
            rep.add(c, na ? Verdict::NotApplicable : Verdict::NotEvaluated, {}, s.model_error);
            return;
        }
        auto r = check_D6(*dm, s.cfg.cap_unique);
        r.check.condition = "D6";
        rep.checks.push_back(r.check);
        return;
    }
    if (c == "classify") {
        auto* dm = s.divisor_model();
        if (!dm) {
            bool na = !s.l.system && inst.kind != InstanceKind::OrderedMonoid;
            rep.add(c, na ? Verdict::NotApplicable : Verdict::NotEvaluated, {}, s.model_error);
            return;
        }
        auto cl = classify(*dm);
        for (const auto* k : {&cl.krull, &cl.dedekind, &cl.ufd, &cl.pid})
            rep.checks.push_back(Check{"classify:" + k->condition, k->verdict, k->witness, k->note});
        append(rep, cl.report, "classify:");
        append(rep, divisor_theory_harness(*dm), "classify:");
        return;
    }
    if (c == "harness") {
        append(rep, theorem_harness(s.context(), s.lattice(), HarnessConfig{s.cfg.cap_unique}), "harness:");
        return;
    }
    if (c == "toporep") {
        const auto& M = s.lattice();
        if (!M.complete) {
            rep.add(c, Verdict::NotEvaluated, {}, "M enumeration incomplete: " + M.note);
            return;
        }
        try {
            auto mr = represent_M(inst, M, s.cfg.enumc.cap);
            append(rep, mr.report, "toporep:");
        } catch (const InputError& e) {
            rep.add(c, Verdict::NotApplicable, {}, std::string("refused: ") + e.what());
        }
        return;
    }
    if (c == "orderrep") {
        try {
            auto r = order_representation(inst);
            append(rep, r.report, "orderrep:");
            rep.add("orderrep:om", r.om);
        } catch (const InputError& e) {
            rep.add(c, Verdict::NotApplicable, {}, std::string("refused: ") + e.what());
            return;
        } catch (const CapExceeded& e) {
            rep.add(c, Verdict::NotEvaluated, {}, e.what());
            return;
        }
        const auto& M = s.lattice();
        if (!M.complete) {
            rep.add("orderrep:M", Verdict::NotEvaluated, {}, "M enumeration incomplete: " + M.note);
            return;
        }
        try {
            auto r = order_representation_M(inst, M);
            append(rep, r.report, "orderrep:M:");
        } catch (const InputError& e) {
            rep.add("orderrep:M", Verdict::NotApplicable, {}, std::string("refused: ") + e.what());
        }
        return;
    }
    rep.checks.push_back(check_condition(s.context(), s.lattice(), c, s.cfg.cap_unique));
}

} // namespace

Report run_checks(const Loaded& l, const std::vector<std::string>& conditions, const RunConfig& cfg)
{
    Session s{l, cfg, {}, {}, {}, {}, false};
    Report rep;
    rep.instance = l.name;
    for (const auto& c : conditions)
        run_one(s, rep, c);
    return rep;
}

Report full_report(const Loaded& l, const RunConfig& cfg)
{
    Report rep = run_checks(l, known_conditions(), cfg);
    append(rep, factorization_law_suite(*l.inst), "law:");
    BContext ctx(*l.inst);
    auto M = enumerate_M(*l.inst, cfg.enumc);
    append(rep, structural_props(ctx, M, cfg.cd_cap), "M:");
    return rep;
}

std::string format_text(const Report& r)
{
    std::ostringstream out;
    out << "instance " << r.instance << "\n";
    std::size_t w = 0;
    for (const auto& c : r.checks)
        w = std::max(w, c.condition.size());
    int counts[4] = {0, 0, 0, 0};
    for (const auto& c : r.checks) {
        ++counts[static_cast<int>(c.verdict)];
        out << "  " << c.condition << std::string(w - c.condition.size() + 2, ' ') << to_string(c.verdict);
        if (!c.witness.empty())
            out << "  witness: " << c.witness;
        if (!c.note.empty())
            out << "  (" << c.note << ")";
        out << "\n";
    }
    out << "summary: " << (r.any_false() ? "fail" : "pass") << " (" << counts[1] << " true, " << counts[0]
        << " false, " << counts[2] << " not evaluated, " << counts[3] << " not applicable)\n";
    return out.str();
}

std::string format_json(const Report& r)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["format_version"] = 1;
    j["instance"] = r.instance;
    j["checks"] = ordered_json::array();
    int counts[4] = {0, 0, 0, 0};
    for (const auto& c : r.checks) {
        ++counts[static_cast<int>(c.verdict)];
        ordered_json e;
        e["condition"] = c.condition;
        e["verdict"] = to_string(c.verdict);
        if (!c.witness.empty())
            e["witness"] = c.witness;
        if (!c.note.empty())
            e["note"] = c.note;
        j["checks"].push_back(e);
    }
    j["summary"] = {{"verdict", r.any_false() ? "fail" : "pass"},
                    {"true", counts[1]},
                    {"false", counts[0]},
                    {"not_evaluated", counts[2]},
                    {"not_applicable", counts[3]}};
    return j.dump(2) + "\n";
}

static Verdict verdict_from(const std::string& s)
{
    for (Verdict v : {Verdict::False, Verdict::True, Verdict::NotEvaluated, Verdict::NotApplicable})
        if (s == to_string(v))
            return v;
    throw InputError("unknown verdict " + s);
}

Report parse_json_report(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        if (j.at("format_version").get<int>() != 1)
            throw InputError("unsupported format_version");
        Report r;
        r.instance = j.at("instance").get<std::string>();
        for (const auto& e : j.at("checks"))
            r.add(e.at("condition").get<std::string>(), verdict_from(e.at("verdict").get<std::string>()),
                  e.value("witness", std::string{}), e.value("note", std::string{}));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad report: ") + e.what());
    }
}

} // namespace ordfactor
