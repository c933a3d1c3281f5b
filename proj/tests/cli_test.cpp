/*
   Copyright 2026 The circtree Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "circtree/cli/commands.hpp"
#include "circtree/cli/family_spec.hpp"
#include "circtree/cli/render.hpp"
#include "circtree/errors.hpp"

using namespace circtree;
using namespace circtree::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(CIRCTREE_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Sets an environment variable for the lifetime of the object.
class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char* name_;
};

}  // namespace

TEST_SUITE("family_spec") {
    TEST_CASE("accepted forms") {
        CHECK(parse_family("C[1,2]") == CirculantFamily(Valency::Even, {1, 2}));
        CHECK(parse_family("C2[1]") == CirculantFamily(Valency::Odd, {1}));
        CHECK(parse_family("  C 2 [ 1 , 3 ]  ") == CirculantFamily(Valency::Odd, {1, 3}));
        CHECK(parse_family("C[\t5]") == CirculantFamily(Valency::Even, {5}));
    }

    TEST_CASE("errors carry position and expected token") {
        auto fails = [](std::string_view text, std::size_t pos, std::string expected) {
            try {
                parse_family(text);
                FAIL("accepted " << text);
            } catch (const ParseError& e) {
                CHECK(e.position() == pos);
                CHECK(e.expected() == expected);
            }
        };
        fails("", 0, "'C'");
        fails("D[1]", 0, "'C'");
        fails("C(1)", 1, "'[' or '2'");
        fails("C2(1)", 2, "'['");
        fails("C[]", 2, "positive integer");
        fails("C[1,,2]", 4, "positive integer");
        fails("C[0]", 2, "positive integer");
        fails("C[2,2]", 4, "jump greater than 2");
        fails("C[3, 1]", 5, "jump greater than 3");
        fails("C[1,2", 5, "',' or ']'");
        fails("C[1] x", 5, "end of input");
        fails("C[99999999999]", 2, "integer below 2^32");
    }

    TEST_CASE("printed families re-parse to themselves") {
        std::mt19937_64 rng(107);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint32_t> jumps;
            std::uint32_t s = 0;
            for (int i = 0; i <= trial % 5; ++i) {
                s += 1 + rng() % 20;
                jumps.push_back(s);
            }
            const CirculantFamily f(trial % 2 ? Valency::Odd : Valency::Even, jumps);
            CHECK(parse_family(f.to_spec()) == f);
        }
    }
}

TEST_SUITE("render") {
    TEST_CASE("plain, latex and decimal forms") {
        const RatPoly f(IntPoly{0, -1, 0, 12}, IntPoly{1, 0, -1});
        CHECK(render_plain(f, 'x') == "(x - 12x^3) / (-1 + x^2)");
        CHECK(render_latex(f, 'x') == "\\frac{x - 12x^{3}}{-1 + x^{2}}");
        CHECK(render_latex(RatPoly(IntPoly{2, 1}), 'w') == "2 + w");
        CHECK(decimal_coeffs(IntPoly{Integer("-123456789012345678901234567890"), 0, 1}) ==
              std::vector<std::string>{"-123456789012345678901234567890", "0", "1"});
        CHECK(decimal_coeffs(IntPoly{}) == std::vector<std::string>{"0"});
        CHECK(parse_format("latex") == Format::Latex);
        CHECK_THROWS(parse_format("xml"));
    }
}

TEST_SUITE("golden") {
    TEST_CASE("generating functions") {
        CHECK(invoke({"genfunc", "C[1,2]", "--var", "w"}).out == golden("genfunc_C12_w.txt"));
        CHECK(invoke({"genfunc", "C[1,3]", "--var", "w"}).out == golden("genfunc_C13_w.txt"));
        CHECK(invoke({"genfunc", "C[2,3]", "--var", "w"}).out == golden("genfunc_C23_w.txt"));
        CHECK(invoke({"genfunc", "C2[1]", "--var", "w"}).out == golden("genfunc_C2_1_w.txt"));
        CHECK(invoke({"genfunc", "C[1,2]"}).out == golden("genfunc_C12_x.txt"));
        CHECK(invoke({"genfunc", "C[1,2]", "--var", "w", "--format", "latex"}).out ==
              golden("genfunc_C12_w_latex.txt"));
        CHECK(invoke({"genfunc", "C[1]", "--var", "x", "--format", "json"}).out ==
              golden("genfunc_C1_json.txt"));
    }

    TEST_CASE("series and tau") {
        CHECK(invoke({"series", "C[1,2]", "6"}).out == golden("series_C12_6.txt"));
        CHECK(invoke({"series", "C2[1]", "4", "--oracle"}).out == golden("series_C2_1_oracle.txt"));
        CHECK(invoke({"tau", "C[1,2]", "5", "--format", "json"}).out == golden("tau_C12_5_json.txt"));
    }
}

TEST_SUITE("commands") {
    TEST_CASE("tau") {
        CHECK(invoke({"tau", "C[1,2]", "5"}).out == "125\n");
        CHECK(invoke({"tau", "C[2,4]", "6"}).out == "0\n");
        const Outcome v = invoke({"tau", "C2[1]", "3", "--verify"});
        CHECK(v.code == kExitOk);
        CHECK(v.out.find("= 81") != std::string::npos);
        CHECK(v.out.find("all paths agree") != std::string::npos);
        CHECK(invoke({"tau", "C[2,4]", "6", "--verify"}).code == kExitOk);

        const Outcome bad = invoke({"tau", "C[1,2]", "4", "--verify", "--simple"});
        CHECK(bad.code == kExitVerificationFailed);
        CHECK(bad.out.find("paths disagree") != std::string::npos);

        CHECK(invoke({"tau", "C[1,,2]", "3"}).code == kExitUsage);
        CHECK(invoke({"tau", "C[1,2]", "0"}).code == kExitUsage);
        CHECK(invoke({"tau", "C[1,2]"}).code == kExitUsage);
        CHECK(invoke({"tau", "C[1,7]", "3"}).code == kExitUsage);
        CHECK(invoke({"tau", "C[1,7]", "3", "--unsafe-limits"}).code == kExitOk);
    }

    TEST_CASE("series") {
        CHECK(invoke({"series", "C[1]", "5"}).out == "1\n2\n3\n4\n5\n");
        CHECK(invoke({"series", "C2[1]", "4"}).out == "3\n16\n81\n392\n");
        const std::string twenty = invoke({"series", "C[1]"}).out;
        CHECK(std::count(twenty.begin(), twenty.end(), '\n') == 20);
        const Outcome mism = invoke({"series", "C[1,2]", "5", "--oracle", "--simple"});
        CHECK(mism.code == kExitVerificationFailed);
        CHECK(mism.out.find("MISMATCH") != std::string::npos);
        CHECK(invoke({"series", "C[1]", "501"}).code == kExitUsage);
        CHECK(invoke({"series", "C[1]", "501", "--unsafe-limits"}).code == kExitOk);
        CHECK(invoke({"series", "C[1]", "0"}).code == kExitUsage);
        CHECK(invoke({"series", "C[x]"}).code == kExitUsage);
    }

    TEST_CASE("genfunc") {
        const auto j = nlohmann::json::parse(invoke({"genfunc", "C[1]", "--format", "json"}).out);
        CHECK(j["numerator"] == nlohmann::json::array({"0", "1"}));
        CHECK(j["denominator"] == nlohmann::json::array({"1", "-2", "1"}));
        CHECK(j["var"] == "x");
        CHECK(invoke({"genfunc", "C[1,2]", "--var", "z"}).code == kExitUsage);
        CHECK(invoke({"genfunc", "C[1,2]", "--format", "xml"}).code == kExitUsage);
        CHECK(invoke({"genfunc", "C2]"}).code == kExitUsage);
    }

    TEST_CASE("genfunc honours CIRCTREE_MAX_DIM") {
        {
            ScopedEnv env("CIRCTREE_MAX_DIM", "2");
            const Outcome o = invoke({"genfunc", "C[1,2,3]"});
            CHECK(o.code == kExitUsage);
            CHECK(o.err.find("limit exceeded") != std::string::npos);
        }
        {
            ScopedEnv env("CIRCTREE_MAX_DIM", "many");
            CHECK(invoke({"genfunc", "C[1,2]"}).code == kExitUsage);
        }
        CHECK(invoke({"genfunc", "C[1,2,3]"}).code == kExitOk);
    }

    TEST_CASE("verify") {
        for (const auto& [spec, n] : std::vector<std::pair<std::string, std::string>>{
                 {"C[1,2]", "12"}, {"C2[1,2]", "10"}, {"C[2,3]", "12"}}) {
            const Outcome o = invoke({"verify", spec, n});
            CHECK_MESSAGE(o.code == kExitOk, spec << "\n" << o.out << o.err);
            CHECK(o.out.find("all checks passed") != std::string::npos);
        }
        const Outcome bad = invoke({"verify", "C[1,2]", "--simple"});
        CHECK(bad.code == kExitVerificationFailed);
        CHECK(bad.err == "first failure: oracle at n=2\n");
        CHECK(invoke({"verify", "C[1,2,3,4,5,6,7]"}).code == kExitUsage);
        CHECK(invoke({"verify", "C[1,2]", "600"}).code == kExitUsage);
    }

    TEST_CASE("mahler") {
        CHECK(invoke({"mahler", "C[1,2]"}).out == "2.618033989\n");
        CHECK(invoke({"mahler", "C[1]"}).out == "1.000000000\n");
        const Outcome a = invoke({"mahler", "C[1,2]", "--asymptotic", "200"});
        REQUIRE(a.code == kExitOk);
        const auto at = a.out.find(": ");
        REQUIRE(at != std::string::npos);
        const double ratio = std::stod(a.out.substr(at + 2));
        CHECK(ratio >= 0.99);
        CHECK(ratio <= 1.01);
        CHECK(invoke({"mahler", "[1]"}).code == kExitUsage);
    }

    TEST_CASE("usage errors") {
        CHECK(invoke({}).code == kExitUsage);
        CHECK(invoke({"factor", "C[1]"}).code == kExitUsage);
        CHECK(invoke({"--help"}).code == kExitOk);
    }

    TEST_CASE("failure mapping") {
        std::ostringstream err;
        CHECK(report_failure(std::make_exception_ptr(InvariantViolation("palindromy", "x")), err) ==
              kExitInternal);
        CHECK(err.str().find("palindromy") != std::string::npos);
        CHECK(report_failure(std::make_exception_ptr(LimitExceeded("big")), err) == kExitUsage);
        CHECK(report_failure(std::make_exception_ptr(ParseError(0, "'C'")), err) == kExitUsage);
        CHECK(report_failure(std::make_exception_ptr(std::runtime_error("boom")), err) == kExitInternal);
    }
}

TEST_SUITE("json") {
    TEST_CASE("reports are deterministic and follow the schema") {
        const std::vector<std::vector<std::string>> cases{
            {"tau", "C2[1]", "3", "--verify", "--format", "json"},
            {"series", "C[1,3]", "8", "--oracle", "--format", "json"},
            {"genfunc", "C2[1,2]", "--var", "w", "--format", "json"},
            {"verify", "C[1,2,3]", "--format", "json"},
            {"mahler", "C[2,3]", "--asymptotic", "50", "--format", "json"},
        };
        for (const auto& args : cases) {
            CAPTURE(args[0]);
            const Outcome a = invoke(args);
            const Outcome b = invoke(args);
            CHECK(a.code == kExitOk);
            CHECK(a.out == b.out);
            const auto j = nlohmann::json::parse(a.out);
            if (args[0] == "genfunc") {
                CHECK(j["family"] == "C2[1,2]");
                CHECK(j["numerator"].is_array());
                CHECK(j["numerator"][0].is_string());
                CHECK(j["verified_terms"] == 12);
            } else {
                CHECK(j["command"] == args[0]);
                CHECK(parse_family(j["family"].get<std::string>()) == parse_family(args[1]));
                CHECK(j["results"].is_array());
            }
        }
    }

    TEST_CASE("big integers are strings") {
        const auto j = nlohmann::json::parse(invoke({"tau", "C[1,2]", "300", "--format", "json"}).out);
        const auto& t = j["results"][0]["tau"];
        REQUIRE(t.is_string());
        CHECK(t.get<std::string>().size() > 100);
        const auto s = nlohmann::json::parse(invoke({"series", "C[1,2]", "3", "--format", "json"}).out);
        CHECK(s["results"] == nlohmann::json::array({"1", "2", "12"}));
    }
}
