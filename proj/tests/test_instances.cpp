#include "helpers.hpp"

#include "ordfactor/checks.hpp"
#include "ordfactor/instances.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace th;

namespace {

std::string fixture(const std::string& name)
{
    return std::string(ORDFACTOR_FIXTURES) + "/" + name;
}

std::string error_of(const std::string& path)
{
    try {
        load_file(path);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

std::vector<std::string> labels_of(const Instance& i)
{
    return i.P().labels();
}

} // namespace

TEST_CASE("fixture files")
{
    auto l = load_file(fixture("div12.om"));
    CHECK(l.name == "div12");
    CHECK(l.inst->size() == 6);
    CHECK_FALSE(l.system);
    const Poset& P = l.inst->P();
    CHECK(P.leq(P.at("2"), P.at("12")));
    CHECK_FALSE(P.leq(P.at("4"), P.at("6")));
    CHECK(l.inst->b_mask == S(P, {"2", "4", "3"}));

    auto e = error_of(fixture("antisym.pb"));
    CHECK(e.find("line 11") != std::string::npos);
    auto n = error_of(fixture("nonatom.pb"));
    CHECK(n.find("line ") != std::string::npos);
    CHECK(n.find("not an atom") != std::string::npos);
    CHECK(error_of(fixture("missing.om")) != "");
}

TEST_CASE("syntax errors carry line numbers")
{
    auto err = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(err("[instance]\nname = x\nkind = bogus\n").find("line 3") != std::string::npos);
    CHECK(err("[instance]\nkind = ordered-monoid\n[elements]\n1 a\n[mult]\n1 * a\n").find("line 6") !=
          std::string::npos);
    CHECK(err("[instance]\nkind = poset-with-B\n[elements]\n1 a\n[order]\n1 <= q\n").find("line 6") !=
          std::string::npos);
    CHECK(err("stray\n").find("line 1") != std::string::npos);
}

TEST_CASE("generators")
{
    Instance d = gen_div(12);
    CHECK(labels_of(d) == std::vector<std::string>{"1", "2", "3", "4", "6", "12"});
    CHECK(d.b_mask == S(d.P(), {"2", "3", "4"}));
    CHECK(d.laws);

    Instance h = gen_hilbert(45);
    std::vector<std::string> expect;
    for (unsigned x = 1; x <= 45; x += 4)
        expect.push_back(std::to_string(x));
    CHECK(labels_of(h) == expect);
    CHECK(h.P().leq(h.P().at("5"), h.P().at("45")));
    CHECK_FALSE(h.P().leq(h.P().at("5"), h.P().at("9")));

    Instance f = gen_free(2, 1);
    CHECK(f.size() == 4);
    CHECK(order_isomorphism(f.P(), *div_poset(6)));

    CHECK_THROWS_AS(gen_div(0), InputError);
    CHECK_THROWS_AS(generate("nothing:3"), InputError);
    CHECK(generate("div:60").inst->size() == 12);
    CHECK(generate("krullZ2").system);
}

TEST_CASE("random instances are reproducible")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance a = gen_random(9, seed), b = gen_random(9, seed);
        CHECK(a.name == b.name);
        CHECK(a.P().labels() == b.P().labels());
        CHECK(a.b_mask == b.b_mask);
        CHECK(a.size() <= 9);
        CHECK(b4_check(a).verdict == Verdict::True);
    }
}

TEST_CASE("instance text round trips")
{
    for (const char* g : {"div:12", "div:60", "free:2,2", "hilbert:45", "random:8,3", "random:9,11", "krullZ2"}) {
        Loaded l = generate(g);
        InstanceSpec s = to_spec(l);
        std::string text = serialize(s);
        InstanceSpec back = parse_spec(text);
        CHECK_MESSAGE(back == s, g);
        Loaded again = load(back);
        CHECK(again.inst->P().labels() == l.inst->P().labels());
        CHECK(again.inst->b_mask == l.inst->b_mask);
        CHECK(serialize(to_spec(again)) == text);
        if (l.system)
            CHECK(again.system->ideals->size() == l.system->ideals->size());
    }
}

TEST_CASE("condition lists")
{
    auto all = expand_conditions("all");
    CHECK(all == known_conditions());
    CHECK(expand_conditions("B4,D1,D1") == std::vector<std::string>{"D1", "B4"});
    CHECK_THROWS_AS(expand_conditions("D1,Q7"), InputError);
}

TEST_CASE("json reports round trip")
{
    Loaded l = generate("hilbert:45");
    Report r = run_checks(l, expand_conditions("D1,B4,F1,classify"));
    Report back = parse_json_report(format_json(r));
    CHECK(back.instance == r.instance);
    REQUIRE(back.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        CHECK(back.checks[i].condition == r.checks[i].condition);
        CHECK(back.checks[i].verdict == r.checks[i].verdict);
        CHECK(back.checks[i].witness == r.checks[i].witness);
    }
    CHECK_THROWS_AS(parse_json_report("{"), InputError);
    CHECK(format_text(r).find("summary: ") != std::string::npos);
}
