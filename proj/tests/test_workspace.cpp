#include "doctest.h"

#include "smckit/errors.hpp"
#include "smckit/fixtures.hpp"
#include "smckit/workspace.hpp"

using namespace smckit;

namespace {

const std::string kDir = SMCKIT_SOURCE_DIR "/fixtures/";

std::vector<std::vector<std::size_t>> cartan(const AlgebraPtr& a)
{
    std::vector<std::vector<std::size_t>> c;
    for (int v = 0; v < static_cast<int>(a->num_vertices()); ++v)
        c.push_back(Module::projective(a, v).dim_vector());
    return c;
}

std::string minimal_doc(const std::string& objects)
{
    return R"({"schema": "smc-kit/workspace@1",
               "quiver": {"vertices": ["1", "2"], "arrows": [{"label": "a", "source": "1", "target": "2"}]},
               "objects": )" + objects + "}";
}

} // namespace

TEST_CASE("shipped fixtures match the built-in algebras")
{
    Workspace a2(load_workspace(kDir + "a2.json"));
    Workspace ba(load_workspace(kDir + "beta_alpha.json"));
    CHECK(a2.algebra("A")->dim() == fixtures::a2()->dim());
    CHECK(ba.algebra("A")->dim() == fixtures::beta_alpha()->dim());
    CHECK(cartan(a2.algebra("A")) == cartan(fixtures::a2()));
    CHECK(cartan(ba.algebra("A")) == cartan(fixtures::beta_alpha()));
    CHECK(ba.algebra("A")->parse("beta.alpha").is_zero());
    CHECK_FALSE(ba.algebra("A")->parse("alpha.beta").is_zero());

    // the explicit complex is the projective resolution of S1
    auto a = a2.algebra("A");
    CHECK(is_iso(a2.object("S1_resolved"), simple_complex(a, 0)).iso);
    CHECK(validate_smc(a2.smc("standard")).passed());
    CHECK_FALSE(validate_smc(ba.smc("s2_eA")).passed());
    CHECK_FALSE(validate_smc(ba.smc("s2_i1")).passed());
    CHECK(a2.smc("x").alg == a2.recollement().x_algebra());
}

TEST_CASE("round trip")
{
    for (const char* f : {"a2.json", "beta_alpha.json"}) {
        WorkspaceDoc d = load_workspace(kDir + f);
        std::string s = serialize_workspace(d);
        WorkspaceDoc d2 = parse_workspace(s);
        CHECK(serialize_workspace(d2) == s);
        Workspace w1(d), w2(d2);
        for (const auto& [name, spec] : d.smcs)
            CHECK(smc_iso(w1.smc(name), w2.smc(name)));
    }
}

TEST_CASE("explicit objects round trip through object_spec")
{
    Workspace w(load_workspace(kDir + "a2.json"));
    auto a = w.algebra("A");
    ProjComplex x = direct_sum(simple_complex(a, 0), shift(module_complex(Module::injective(a, 1)), 1));
    WorkspaceDoc d = w.doc();
    d.objects["x"] = object_spec(x, "A");
    Workspace w2(parse_workspace(serialize_workspace(d)));
    CHECK(is_iso(w2.object("x"), x).iso);
}

TEST_CASE("shorthand")
{
    Workspace w(load_workspace(kDir + "beta_alpha.json"));
    auto a = w.algebra("A");
    CHECK(is_iso(w.object("S2[1]"), shift(simple_complex(a, 1), 1)).iso);
    CHECK(is_iso(w.object("eA"), stalk_projective(a, 0, 0)).iso);
    CHECK(is_iso(w.object("I1[-2]"), shift(module_complex(Module::injective(a, 0)), -2)).iso);
    CHECK(w.object("0").is_zero());
    CHECK_THROWS_AS(w.object("S3"), InputError);
    CHECK_THROWS_AS(w.object("Q1"), InputError);
    CHECK_THROWS_AS(w.object("S1", "Z"), InputError);
}

TEST_CASE("load errors")
{
    CHECK_THROWS_AS(parse_workspace("{\"schema\": 1"), InputError);
    try {
        parse_workspace("{\n  \"schema\": \"smc-kit/workspace@1\",\n  \"quiver\": {,}\n}");
        FAIL("no error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_workspace(R"({"schema": "other@2", "quiver": {"vertices": []}})"), InputError);

    // d^2 != 0 is reported with its degree
    std::string bad = minimal_doc(
        R"({"X": {"terms": {"-1": ["2"], "0": ["2"], "1": ["1"]}, "differentials": {"-1": [["e2"]], "0": [["a"]]}}})");
    try {
        Workspace w(parse_workspace(bad));
        FAIL("no error");
    } catch (const InputError& e) {
        std::string m = e.what();
        CHECK(m.find("d^2") != std::string::npos);
        CHECK(m.find("degree -1") != std::string::npos);
    }
    std::string wrong = minimal_doc(R"({"X": {"terms": {"0": ["2"], "1": ["1"]}, "differentials": {"0": [["a", "a"]]}}})");
    CHECK_THROWS_AS(Workspace(parse_workspace(wrong)), InputError);
    std::string unknown = minimal_doc(R"({"X": {"terms": {"0": ["7"]}}})");
    CHECK_THROWS_AS(Workspace(parse_workspace(unknown)), InputError);
    CHECK_THROWS_AS(Workspace(parse_workspace(minimal_doc("{}"))).recollement(), InputError);
}
