#include "ordfactor/checks.hpp"
#include "ordfactor/toporep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace ordfactor;

namespace {

struct Common {
    std::string instance, gen, format = "text";
    std::size_t cap_m = 20, max_ideals = 1 << 20, cap_unique = 6, cd_cap = 12;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& o)
{
    auto* a = sub->add_option("--instance", o.instance, "instance file");
    auto* b = sub->add_option("--gen", o.gen, "generator, e.g. div:60, free:2,2, hilbert:441, krullZ2, random:9");
    a->excludes(b);
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap-m", o.cap_m, "carrier size limit for enumerating M")->capture_default_str();
    sub->add_option("--max-ideals", o.max_ideals, "size limit on M")->capture_default_str();
    sub->add_option("--cap-unique", o.cap_unique, "antichain width limit for uniqueness checks")
        ->capture_default_str();
    sub->add_option("--cd-cap", o.cd_cap, "lattice size limit for complete distributivity")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for random instances")->capture_default_str();
}

Loaded load_input(const Common& o)
{
    if (o.instance.empty() == o.gen.empty())
        throw InputError("exactly one of --instance or --gen is required");
    return o.instance.empty() ? generate(o.gen, o.seed) : load_file(o.instance);
}

RunConfig config(const Common& o)
{
    RunConfig c;
    c.enumc.cap = o.cap_m;
    c.enumc.max_ideals = o.max_ideals;
    c.cap_unique = o.cap_unique;
    c.cd_cap = o.cd_cap;
    return c;
}

int emit(const Report& r, const Common& o)
{
    std::cout << (o.format == "json" ? format_json(r) : format_text(r));
    return r.any_false() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"order-theoretic factorization checks"};
    app.require_subcommand(1);
    Common o;
    std::string conditions = "all", element;

    auto* check = app.add_subcommand("check", "evaluate conditions");
    add_common(check, o);
    check->add_option("--conditions", conditions, "comma separated list or all")->capture_default_str();
    auto* decomp = app.add_subcommand("decompose", "condensed decomposition of elements");
    add_common(decomp, o);
    decomp->add_option("--element", element, "a single element label");
    auto* enumm = app.add_subcommand("enumerate-m", "list the B-ideals");
    add_common(enumm, o);
    auto* classify_cmd = app.add_subcommand("classify", "Krull / Dedekind / UFD / PID verdicts");
    add_common(classify_cmd, o);
    auto* topo = app.add_subcommand("toporep", "closed-set representation of M");
    add_common(topo, o);
    auto* ord = app.add_subcommand("orderrep", "exponent-vector representation");
    add_common(ord, o);
    auto* rep = app.add_subcommand("report", "every check");
    add_common(rep, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Loaded l = load_input(o);
        RunConfig cfg = config(o);
        if (check->parsed())
            return emit(run_checks(l, expand_conditions(conditions), cfg), o);
        if (classify_cmd->parsed())
            return emit(run_checks(l, {"classify"}, cfg), o);
        if (ord->parsed())
            return emit(run_checks(l, {"orderrep"}, cfg), o);
        if (rep->parsed())
            return emit(full_report(l, cfg), o);
        if (topo->parsed()) {
            Report r = run_checks(l, {"toporep"}, cfg);
            if (r.find("toporep") == nullptr) {
                auto M = enumerate_M(*l.inst, cfg.enumc);
                for (const auto& pp : l.inst->B) {
                    auto nv = neighborhood_view(*l.inst, M, pp.element);
                    for (auto c : nv.report.checks) {
                        c.condition = "nbhd(" + l.inst->label(pp.element) + "):" + c.condition;
                        if (c.condition.ends_with("least-member") && c.verdict == Verdict::True)
                            c.note = l.inst->P().format(nv.least_member);
                        r.checks.push_back(c);
                    }
                }
            }
            return emit(r, o);
        }
        if (decomp->parsed()) {
            const Instance& inst = *l.inst;
            Report r;
            r.instance = l.name;
            std::vector<Id> which;
            if (element.empty())
                for (Id a = 0; a < inst.size(); ++a)
                    which.push_back(a);
            else
                which.push_back(inst.P().at(element));
            for (Id a : which) {
                auto d = decompose(inst, a);
                r.add("decompose:" + inst.label(a), verdict(d.has_value()), d ? "" : inst.label(a),
                      d ? format_condensed(inst, *d) : "");
            }
            return emit(r, o);
        }
        if (enumm->parsed()) {
            auto M = enumerate_M(*l.inst, cfg.enumc);
            const Poset& P = l.inst->P();
            if (o.format == "json") {
                nlohmann::ordered_json j;
                j["format_version"] = 1;
                j["instance"] = l.name;
                j["complete"] = M.complete;
                if (!M.complete)
                    j["note"] = M.note;
                j["count"] = M.ideals.size();
                j["ideals"] = nlohmann::ordered_json::array();
                for (const auto& J : M.ideals) {
                    nlohmann::ordered_json m = nlohmann::ordered_json::array();
                    for (Id x : members(J))
                        m.push_back(P.label(x));
                    j["ideals"].push_back(m);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "instance " << l.name << "\n";
                for (const auto& J : M.ideals)
                    std::cout << "  " << P.format(J) << "\n";
                std::cout << M.ideals.size() << " B-ideals" << (M.complete ? "" : " (partial: " + M.note + ")")
                          << "\n";
            }
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
