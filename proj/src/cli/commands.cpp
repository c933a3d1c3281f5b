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

#include "circtree/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "circtree/cli/family_spec.hpp"
#include "circtree/cli/render.hpp"
#include "circtree/closedform/numeric.hpp"
#include "circtree/closedform/spectral.hpp"
#include "circtree/errors.hpp"
#include "circtree/exactalg/series.hpp"
#include "circtree/genfunc/genfunc.hpp"
#include "circtree/graphcore/laplacian.hpp"

namespace circtree::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Context {
    CirculantFamily family;
    Format format;
    bool unsafe;
    EdgeConvention convention;
    SubsetProductOptions subset;
    std::ostream& out;
    std::ostream& err;
};

std::string significant(long double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << std::showpoint << v;
    return os.str();
}

std::string scientific(long double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

long double to_long_double(const Integer& v) {
    if (v == 0) return 0.0L;
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

/// Relative error of the numeric path; absolute when the exact value is 0.
long double numeric_error(long double numeric, const Integer& exact) {
    const long double e = to_long_double(exact);
    if (e == 0.0L) return std::fabs(numeric);
    return std::fabs(numeric - e) / std::fabs(e);
}

bool numeric_agrees(long double numeric, const Integer& exact) {
    if (!std::isfinite(numeric)) return false;
    if (exact == 0) return std::fabs(numeric) < 0.5L;
    return numeric_error(numeric, exact) <= kNumericTolerance;
}

Json report(const char* command, const CirculantFamily& family) {
    Json j;
    j["command"] = command;
    j["family"] = family.to_spec();
    j["results"] = Json::array();
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Integer closed_form(const SpectralPolys& sp, const CirculantFamily& family, std::uint32_t n) {
    return family.kind() == Valency::Even ? tau_even(sp, n) : tau_odd(sp, n);
}

OracleOptions oracle_options(const Context& ctx) {
    OracleOptions o;
    o.override_cap = ctx.unsafe;
    return o;
}

void check_terms(const Context& ctx, std::size_t count) {
    if (count == 0) throw UsageError("count must be >= 1");
    if (!ctx.unsafe && count > kMaxSafeTerms) {
        throw LimitExceeded("count " + std::to_string(count) + " exceeds " +
                            std::to_string(kMaxSafeTerms) + " (use --unsafe-limits)");
    }
}

int cmd_tau(const Context& ctx, std::uint32_t n, bool verify) {
    const Integer t = tau(ctx.family, n);
    if (!verify) {
        if (ctx.format == Format::Json) {
            Json j = report("tau", ctx.family);
            j["results"].push_back(Json{{"n", n}, {"tau", to_decimal(t)}});
            emit(ctx.out, j);
        } else {
            ctx.out << to_decimal(t) << '\n';
        }
        return kExitOk;
    }

    TauCertificate cert(n);
    cert.record(TauPath::ClosedForm, t);
    cert.record(TauPath::DeterminantOracle,
                tau_oracle(GraphInstance(ctx.family, n, ctx.convention), oracle_options(ctx)));
    const long double numeric = tau_numeric_check(ctx.family, n);
    const bool ok = cert.agree() && numeric_agrees(numeric, t);

    if (ctx.format == Format::Json) {
        Json j = report("tau", ctx.family);
        j["results"].push_back(Json{
            {"n", n},
            {"tau", to_decimal(t)},
            {"oracle", to_decimal(cert.value(TauPath::DeterminantOracle))},
            {"numeric", significant(numeric, 12)},
            {"numeric_error", scientific(numeric_error(numeric, t))},
            {"agree", ok},
        });
        emit(ctx.out, j);
    } else {
        ctx.out << "tau(" << ctx.family.to_spec() << ", " << n << ") = " << to_decimal(t) << '\n';
        for (const TauPath p : cert.paths()) {
            ctx.out << "  " << std::left << std::setw(20) << to_string(p) << to_decimal(cert.value(p))
                    << '\n';
        }
        ctx.out << "  " << std::left << std::setw(20) << "numeric" << significant(numeric, 12)
                << " (error " << scientific(numeric_error(numeric, t)) << ")\n";
        ctx.out << (ok ? "all paths agree" : "paths disagree") << '\n';
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_series(const Context& ctx, std::size_t count, bool with_oracle) {
    check_terms(ctx, count);
    const SpectralPolys sp = build_spectral(ctx.family);
    bool ok = true;
    Json j = report("series", ctx.family);
    for (std::uint32_t n = 1; n <= count; ++n) {
        const Integer t = closed_form(sp, ctx.family, n);
        if (!with_oracle) {
            if (ctx.format == Format::Json) {
                j["results"].push_back(to_decimal(t));
            } else {
                ctx.out << to_decimal(t) << '\n';
            }
            continue;
        }
        const Integer o =
            tau_oracle(GraphInstance(ctx.family, n, ctx.convention), oracle_options(ctx));
        const bool match = o == t;
        ok = ok && match;
        if (ctx.format == Format::Json) {
            j["results"].push_back(
                Json{{"n", n}, {"tau", to_decimal(t)}, {"oracle", to_decimal(o)}, {"match", match}});
        } else {
            ctx.out << n << '\t' << to_decimal(t) << '\t' << to_decimal(o) << '\t'
                    << (match ? "ok" : "MISMATCH") << '\n';
        }
    }
    if (ctx.format == Format::Json) emit(ctx.out, j);
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_genfunc(const Context& ctx, char var) {
    GenFuncOptions opts;
    opts.subset = ctx.subset;
    opts.compute_w_form = var == 'w';
    const GenFuncResult r = build_genfunc(ctx.family, opts);
    const RatPoly& f = var == 'w' ? *r.f_w : r.f_x;

    switch (ctx.format) {
        case Format::Json: {
            Json j;
            j["family"] = ctx.family.to_spec();
            j["var"] = std::string(1, var);
            j["numerator"] = decimal_coeffs(f.numer());
            j["denominator"] = decimal_coeffs(f.denom());
            j["verified_terms"] = r.verified_terms;
            emit(ctx.out, j);
            break;
        }
        case Format::Latex:
            ctx.out << render_latex(f, var) << '\n';
            break;
        case Format::Plain:
            ctx.out << render_plain(f, var) << '\n';
            break;
    }
    return kExitOk;
}

struct CheckRow {
    std::string name;
    bool pass = true;
    std::optional<std::uint32_t> first_n;
    std::string detail;
};

int cmd_verify(const Context& ctx, std::size_t count) {
    check_terms(ctx, count);
    const CirculantFamily& fam = ctx.family;
    const SpectralPolys sp = build_spectral(fam);
    std::vector<Integer> exact;
    for (std::uint32_t n = 1; n <= count; ++n) exact.push_back(closed_form(sp, fam, n));

    std::vector<CheckRow> rows;
    const std::string range = "n=1.." + std::to_string(count);

    CheckRow oracle{"oracle", true, std::nullopt, range};
    for (std::uint32_t n = 1; n <= count && oracle.pass; ++n) {
        const Integer o = tau_oracle(GraphInstance(fam, n, ctx.convention), oracle_options(ctx));
        if (o != exact[n - 1]) {
            oracle = {"oracle", false, n,
                      "determinant " + to_decimal(o) + ", closed form " + to_decimal(exact[n - 1])};
        }
    }
    rows.push_back(oracle);

    // Palindromy and integrality are also enforced inside build_genfunc; a
    // violation there is reported against the named check.
    std::optional<RatPoly> f;
    std::string build_failure;
    std::string build_check;
    try {
        GenFuncOptions opts;
        opts.subset = ctx.subset;
        opts.verify_terms = 0;
        opts.compute_w_form = false;
        f = build_genfunc(fam, opts).f_x;
    } catch (const InvariantViolation& e) {
        build_check = e.check();
        build_failure = e.what();
    }

    auto from_build = [&](const std::string& name, auto&& body) {
        if (!f) {
            const bool blame = build_check == name;
            rows.push_back({name, false, std::nullopt,
                            blame ? build_failure : "not run: " + build_failure});
            return;
        }
        rows.push_back(body());
    };

    from_build("series", [&] {
        CheckRow row{"series", true, std::nullopt, range};
        const SeriesWindow s = expand_series(*f, count);
        for (std::uint32_t n = 1; n <= count; ++n) {
            if (s.at(n) != exact[n - 1]) {
                return CheckRow{"series", false, n,
                                "coefficient " + to_decimal(s.at(n)) + ", closed form " +
                                    to_decimal(exact[n - 1])};
            }
        }
        return row;
    });
    from_build("palindromy", [&] {
        const bool ok = check_palindromy(*f);
        return CheckRow{"palindromy", ok, std::nullopt, ok ? "F(1/x) = F(x)" : "F(1/x) != F(x)"};
    });
    from_build("integrality", [&] {
        const bool ok = has_integral_series(*f);
        return CheckRow{"integrality", ok, std::nullopt,
                        "|D(0)| = " + to_decimal(abs(f->denom()[0]))};
    });
    from_build("w-form", [&] {
        const bool ok = from_w_form(to_w_form(*f)) == *f;
        return CheckRow{"w-form", ok, std::nullopt, ok ? "round trip exact" : "round trip differs"};
    });
    from_build("fit", [&] {
        const std::size_t bound = std::max(f->numer().degree(), f->denom().degree());
        try {
            const FitResult fit = fit_genfunc(fam, bound);
            const bool ok = fit.f_x == *f && fit.holdout_checked == kFitHoldout;
            return CheckRow{"fit", ok, std::nullopt,
                            "order " + std::to_string(fit.recurrence_order) + ", " +
                                std::to_string(fit.terms_used) + " terms, " +
                                std::to_string(fit.holdout_checked) + " held out" +
                                (ok ? "" : ", differs from build")};
        } catch (const InvariantViolation& e) {
            return CheckRow{"fit", false, std::nullopt, e.what()};
        } catch (const std::domain_error& e) {
            return CheckRow{"fit", false, std::nullopt, e.what()};
        }
    });

    CheckRow numeric{"numeric", true, std::nullopt, range};
    long double worst = 0.0L;
    for (std::uint32_t n = 1; n <= count && numeric.pass; ++n) {
        long double v = NAN;
        try {
            v = tau_numeric_check(fam, n);
        } catch (const NoConvergence& e) {
            numeric = {"numeric", false, n, e.what()};
            break;
        }
        if (!numeric_agrees(v, exact[n - 1])) {
            numeric = {"numeric", false, n,
                       "value " + significant(v, 12) + ", error " +
                           scientific(numeric_error(v, exact[n - 1]))};
        } else if (exact[n - 1] != 0) {
            worst = std::max(worst, numeric_error(v, exact[n - 1]));
        }
    }
    if (numeric.pass) numeric.detail = range + ", max relative error " + scientific(worst);
    rows.push_back(numeric);

    const CheckRow* first = nullptr;
    for (const CheckRow& r : rows) {
        if (!r.pass) {
            first = &r;
            break;
        }
    }

    if (ctx.format == Format::Json) {
        Json j = report("verify", fam);
        for (const CheckRow& r : rows) {
            Json row{{"check", r.name}, {"status", r.pass ? "pass" : "fail"}};
            if (r.first_n) row["n"] = *r.first_n;
            row["detail"] = r.detail;
            j["results"].push_back(row);
        }
        emit(ctx.out, j);
    } else {
        ctx.out << "verify " << fam.to_spec() << " N=" << count << '\n';
        for (const CheckRow& r : rows) {
            ctx.out << "  " << std::left << std::setw(13) << r.name << std::setw(6)
                    << (r.pass ? "pass" : "FAIL") << r.detail << '\n';
        }
        ctx.out << (first ? "some checks failed" : "all checks passed") << '\n';
    }
    if (first) {
        ctx.err << "first failure: " << first->name;
        if (first->first_n) ctx.err << " at n=" << *first->first_n;
        ctx.err << '\n';
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_mahler(const Context& ctx, std::optional<std::uint32_t> asymptotic) {
    const MahlerEstimate m = mahler_measure(ctx.family);
    std::optional<double> ratio;
    if (asymptotic) {
        const Integer t = tau(ctx.family, *asymptotic);
        ratio = growth_rate(t, ctx.family.q(), *asymptotic) / m.value;
    }
    if (ctx.format == Format::Json) {
        Json j = report("mahler", ctx.family);
        Json row{{"mahler", significant(m.value, 10)}};
        if (ratio) {
            row["n"] = *asymptotic;
            row["ratio"] = significant(*ratio, 10);
        }
        j["results"].push_back(row);
        emit(ctx.out, j);
    } else {
        ctx.out << significant(m.value, 10) << '\n';
        if (ratio) ctx.out << "ratio at n=" << *asymptotic << ": " << significant(*ratio, 10) << '\n';
    }
    return kExitOk;
}

SubsetProductOptions subset_options_from_env() {
    SubsetProductOptions o;
    const char* env = std::getenv("CIRCTREE_MAX_DIM");
    if (env == nullptr || *env == '\0') return o;
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw UsageError("CIRCTREE_MAX_DIM must be a positive integer, got '" + std::string(text) +
                         "'");
    }
    o.max_dim = value;
    return o;
}

struct Flags {
    std::string spec;
    std::string format = "plain";
    bool unsafe = false;
    bool simple = false;
};

void add_common(CLI::App* sub, Flags& f, std::vector<std::string> formats, bool has_oracle) {
    sub->add_option("spec", f.spec, "family, e.g. C[1,2] or C2[1]")->required();
    sub->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->capture_default_str();
    sub->add_flag("--unsafe-limits", f.unsafe, "lift the jump, term and vertex caps");
    if (has_oracle) {
        sub->add_flag("--simple", f.simple,
                      "determinant oracle on the simple graph (parallel edges merged)");
    }
}

}  // namespace

int report_failure(std::exception_ptr failure, std::ostream& err) {
    try {
        std::rethrow_exception(failure);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LimitExceeded& e) {
        err << "error: limit exceeded: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated (" << e.check() << "): " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (...) {
        err << "internal error: unknown exception\n";
        return kExitInternal;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spanning-tree counts and generating functions of circulant graph families",
                 "circtree"};
    app.require_subcommand(1);

    Flags tau_f, series_f, genfunc_f, verify_f, mahler_f;
    std::uint32_t tau_n = 0;
    bool tau_verify = false;
    std::size_t series_n = 20;
    bool series_oracle = false;
    std::string var = "x";
    std::size_t verify_n = 12;
    std::optional<std::uint32_t> asymptotic;

    auto* tau_cmd = app.add_subcommand("tau", "tau(n) from the closed form");
    add_common(tau_cmd, tau_f, {"plain", "json"}, true);
    tau_cmd->add_option("n", tau_n, "instance parameter")->required()->check(CLI::PositiveNumber);
    tau_cmd->add_flag("--verify", tau_verify, "cross-check against the determinant and numeric paths");

    auto* series_cmd = app.add_subcommand("series", "tau(1..N)");
    add_common(series_cmd, series_f, {"plain", "json"}, true);
    series_cmd->add_option("N", series_n, "number of terms")->capture_default_str();
    series_cmd->add_flag("--oracle", series_oracle, "add the determinant oracle column");

    auto* genfunc_cmd = app.add_subcommand("genfunc", "generating function sum tau(n) x^n");
    add_common(genfunc_cmd, genfunc_f, {"plain", "json", "latex"}, false);
    genfunc_cmd->add_option("--var", var, "x, or w = (x + 1/x)/2")
        ->check(CLI::IsMember({"x", "w"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run every cross-check for one family");
    add_common(verify_cmd, verify_f, {"plain", "json"}, true);
    verify_cmd->add_option("N", verify_n, "number of terms")->capture_default_str();

    auto* mahler_cmd = app.add_subcommand("mahler", "Mahler measure of the Laurent polynomial");
    add_common(mahler_cmd, mahler_f, {"plain", "json"}, false);
    mahler_cmd->add_option("--asymptotic", asymptotic, "also print (tau(N) q / N)^(1/N) / M")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto context = [&](const Flags& f) {
        const CirculantFamily family = parse_family(f.spec);
        if (!f.unsafe && family.s_max() > kMaxSafeJump) {
            throw LimitExceeded("largest jump " + std::to_string(family.s_max()) + " exceeds " +
                                std::to_string(kMaxSafeJump) + " (use --unsafe-limits)");
        }
        return Context{family,
                       parse_format(f.format),
                       f.unsafe,
                       f.simple ? EdgeConvention::Simple : EdgeConvention::Multigraph,
                       subset_options_from_env(),
                       out,
                       err};
    };

    try {
        if (tau_cmd->parsed()) return cmd_tau(context(tau_f), tau_n, tau_verify);
        if (series_cmd->parsed()) return cmd_series(context(series_f), series_n, series_oracle);
        if (genfunc_cmd->parsed()) return cmd_genfunc(context(genfunc_f), var[0]);
        if (verify_cmd->parsed()) return cmd_verify(context(verify_f), verify_n);
        if (mahler_cmd->parsed()) return cmd_mahler(context(mahler_f), asymptotic);
    } catch (...) {
        return report_failure(std::current_exception(), err);
    }
    return kExitUsage;
}

}  // namespace circtree::cli
