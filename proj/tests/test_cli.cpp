#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steinberg/cli.hpp"
#include "steinberg/groupoid.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace steinberg;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
    return std::string(STEINBERG_FIXTURES) + "/" + name;
}

struct Run {
    int exit_code;
    json report;
    std::string raw;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    Run r{code, {}, out.str(), err.str()};
    if (!r.raw.empty() && (r.raw[0] == '{' || r.raw[0] == '['))
        r.report = json::parse(r.raw);
    return r;
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_("cli_tmp_" + name) {
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace

TEST_CASE("gpd validate") {
    auto ok = cli({"gpd", "validate", "--groupoid", fixture("pair2.json")});
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["valid"] == true);

    auto s3 = cli({"gpd", "validate", "--groupoid", fixture("s3.json")});
    CHECK(s3.exit_code == 0);

    TempFile bad("bad_gpd.json", R"({"units": ["u","v"],
        "morphisms": [{"name":"g","src":"u","dst":"v","inv":"h"},
                      {"name":"h","src":"v","dst":"u","inv":"g"}],
        "compose": [["g","h","u"]]})");
    auto broken = cli({"gpd", "validate", "--groupoid", bad.path()});
    CHECK(broken.exit_code == 1);
    CHECK(broken.report["valid"] == false);
    CHECK(broken.report["axiom"] == "composable pair left undefined");

    CHECK(cli({"gpd", "validate", "--groupoid", "no_such_file.json"}).exit_code == 2);
    TempFile garbage("garbage.json", "{");
    CHECK(cli({"gpd", "validate", "--groupoid", garbage.path()}).exit_code == 2);
}

TEST_CASE("gpd verify-theorem matches the worked report") {
    auto r = cli({"gpd", "verify-theorem", "--groupoid", fixture("pair2.json"), "--subset", "ALL",
                  "--ring", "rat"});
    CHECK(r.exit_code == 0);
    CHECK(r.report == json({{"holds", true}, {"lhs_dim", 2}, {"rhs_dim", 2}}));

    auto none = cli({"gpd", "verify-theorem", "--groupoid", fixture("z2.json"), "--subset",
                     "NONE", "--ring", "mod:5"});
    CHECK(none.exit_code == 0);
    CHECK(none.report["holds"] == true);
    CHECK(none.report["lhs_dim"] == 2);

    // non-invariant subsets: refused without --force, reported with it
    auto refused = cli({"gpd", "verify-theorem", "--groupoid", fixture("pair2.json"), "--subset",
                        "u1", "--ring", "rat"});
    CHECK(refused.exit_code == 2);
    CHECK(refused.report["error"] == "subset not invariant");

    auto forced = cli({"gpd", "verify-theorem", "--groupoid", fixture("pair2.json"), "--subset",
                       "u1", "--ring", "rat", "--force"});
    CHECK(forced.exit_code == 0);
    CHECK(forced.report["invariant"] == false);

    CHECK(cli({"gpd", "verify-theorem", "--groupoid", fixture("pair2.json"), "--subset", "zz",
               "--ring", "rat"})
              .exit_code == 2);
    CHECK(cli({"gpd", "verify-theorem", "--groupoid", fixture("pair2.json"), "--subset", "ALL",
               "--ring", "int"})
              .exit_code == 2); // not a field
}

TEST_CASE("gpd centraliser and core-injectivity") {
    auto c = cli({"gpd", "centraliser", "--groupoid", fixture("pair2.json"), "--ring", "rat"});
    CHECK(c.exit_code == 0);
    CHECK(c.report["dimension"] == 2);
    CHECK(c.report["basis"] == json::array({"u1", "u2"}));

    auto whole = cli({"gpd", "centraliser", "--groupoid", fixture("pair2.json"), "--ring",
                      "mod:5", "--span", "u1"});
    CHECK(whole.report["dimension"] == 2);

    auto ideal = cli({"gpd", "core-injectivity", "--groupoid", fixture("pair2.json"), "--ring",
                      "rat", "--generators", "g12"});
    CHECK(ideal.exit_code == 0);
    CHECK(ideal.report["ideal_is_zero"] == false);
    CHECK(ideal.report["restriction_injective"] == false);
    CHECK(ideal.report["agree"] == true);
    CHECK(ideal.report["ideal_dim"] == 4);

    auto zero = cli({"gpd", "core-injectivity", "--groupoid", fixture("s3.json"), "--ring",
                     "mod:5"});
    CHECK(zero.report["ideal_is_zero"] == true);
    CHECK(zero.report["agree"] == true);
}

TEST_CASE("graph cycles") {
    auto r = cli({"graph", "cycles", "--graph", fixture("toeplitz.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.report["acyclic"] == false);
    CHECK(r.report["simple_cycles"] == json::array({"c"}));
    CHECK(r.report["cycles_without_exit"] == json::array());

    auto loop = cli({"graph", "cycles", "--graph", fixture("loop.json")});
    CHECK(loop.report["cycles_without_exit"] == json::array({"c"}));

    auto acyclic = cli({"graph", "cycles", "--graph", fixture("line3.json")});
    CHECK(acyclic.report["acyclic"] == true);
}

TEST_CASE("lpa commands") {
    auto norm = cli({"lpa", "normalize", "--graph", fixture("loop.json"), "--ring", "rat",
                     "[c;c]"});
    CHECK(norm.exit_code == 0);
    CHECK(norm.report["element"] == "[v;v]");

    auto mul = cli({"lpa", "mul", "--graph", fixture("loop.json"), "--ring", "rat", "[c;v]",
                    "[v;c]"});
    CHECK(mul.report["element"] == "[v;v]");

    auto check = cli({"lpa", "centraliser-check", "--graph", fixture("toeplitz.json"), "--ring",
                      "rat", "[c;v]"});
    CHECK(check.exit_code == 0);
    CHECK(check.report["commutes"] == false);
    CHECK(check.report["in_core"] == false);
    CHECK(check.report["agree"] == true);
    CHECK(check.report["witness"] == "c");

    auto central = cli({"lpa", "is-central", "--graph", fixture("vw.json"), "--ring", "rat",
                        "[v;v]"});
    CHECK(central.exit_code == 1);
    CHECK(central.report["central"] == false);
    CHECK(central.report["witness"] == "e");
    CHECK(cli({"lpa", "is-central", "--graph", fixture("loop.json"), "--ring", "rat", "[c;v]"})
              .exit_code == 0);

    CHECK(cli({"lpa", "commutative", "--graph", fixture("loop.json")}).exit_code == 0);
    auto noncomm = cli({"lpa", "commutative", "--graph", fixture("vw.json")});
    CHECK(noncomm.exit_code == 1);
    CHECK(noncomm.report["commutative"] == false);

    // grammar errors exit 2 and carry a position
    auto bad = cli({"lpa", "normalize", "--graph", fixture("loop.json"), "--ring", "rat",
                    "[c;w]"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.report["position"] == 4);
    CHECK(cli({"lpa", "normalize", "--graph", fixture("loop.json"), "--ring", "mod:1", "[v;v]"})
              .exit_code == 2);
}

TEST_CASE("bridge verify-iso") {
    auto r = cli({"bridge", "verify-iso", "--graph", fixture("line3.json"), "--ring", "mod:5",
                  "--samples", "50"});
    CHECK(r.exit_code == 0);
    CHECK(r.report["injectivity_rank"] == 9);
    CHECK(r.report["expected_rank"] == 9);
    CHECK(r.report["homomorphism_pass"] == true);
    CHECK(r.report["diagonal_supported_on_units"] == true);
    CHECK(r.report["core_supported_on_isotropy"] == true);

    CHECK(cli({"bridge", "verify-iso", "--graph", fixture("loop.json"), "--ring", "rat"})
              .exit_code == 2);
}

TEST_CASE("reports are deterministic and pretty-printable") {
    std::vector<std::string> args{"bridge", "verify-iso", "--graph", fixture("tree2.json"),
                                  "--ring", "rat", "--samples", "25", "--seed", "3"};
    CHECK(cli(args).raw == cli(args).raw);

    auto pretty = cli({"gpd", "verify-theorem", "--groupoid", fixture("pair2.json"), "--subset",
                       "ALL", "--ring", "rat", "--pretty"});
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.raw.find('\n') != std::string::npos);
    CHECK(json::parse(pretty.raw) == json({{"holds", true}, {"lhs_dim", 2}, {"rhs_dim", 2}}));
}

TEST_CASE("usage errors") {
    CHECK(cli({}).exit_code == 2);
    CHECK(cli({"gpd"}).exit_code == 2);
    CHECK(cli({"gpd", "validate"}).exit_code == 2);          // missing --groupoid
    CHECK(cli({"bogus", "run"}).exit_code == 2);
    CHECK(cli({"--help"}).exit_code == 0);
    CHECK(cli({"lpa", "normalize", "--graph", fixture("loop.json"), "--ring", "real", "[v;v]"})
              .exit_code == 2);
}

TEST_CASE("STEINBERG_SEED must be an integer when set") {
    setenv("STEINBERG_SEED", "not-a-number", 1);
    auto r = cli({"bridge", "verify-iso", "--graph", fixture("vw.json"), "--ring", "rat",
                  "--samples", "5"});
    unsetenv("STEINBERG_SEED");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("STEINBERG_SEED") != std::string::npos);

    setenv("STEINBERG_SEED", "11", 1);
    auto ok = cli({"bridge", "verify-iso", "--graph", fixture("vw.json"), "--ring", "rat",
                   "--samples", "5", "--seed", "3"});
    unsetenv("STEINBERG_SEED");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("a generated 64-morphism groupoid round-trips through the file surface") {
    FiniteGroupoid big = product_groupoid(pair_groupoid(4), cyclic_group_groupoid(4));
    TempFile file("big_gpd.json", big.to_json_text());

    auto valid = cli({"gpd", "validate", "--groupoid", file.path()});
    CHECK(valid.exit_code == 0);

    auto rep = cli({"gpd", "verify-theorem", "--groupoid", file.path(), "--subset", "ALL",
                    "--ring", "mod:5"});
    CHECK(rep.exit_code == 0);
    CHECK(rep.report["holds"] == true);
    CHECK(rep.report["lhs_dim"] == 16); // the isotropy: Z/4 over each of 4 units
    CHECK(rep.report["rhs_dim"] == 16);
}
