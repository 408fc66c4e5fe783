#include "kdiv/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdiv/obstructions.hpp"
#include "kdiv/verify.hpp"

namespace kdiv::cli {

namespace {

using nlohmann::json;

// Every numeric field is emitted as a decimal string: values such as
// 1 + 29^7 overflow common 64-bit JSON consumers.
json lpower_json(const LPower& lp) {
    return json{{"l", lp.l.get_str()},
                {"exponent", std::to_string(lp.exponent)},
                {"value", lp.value.get_str()}};
}

json order_json(const DivisibleOrder& d) {
    json echo = json::array();
    for (const auto& [name, value] : d.inputs_echo)
        echo.push_back(json{{"name", name}, {"value", value.str()}});
    return json{{"context", to_string(d.context)},
                {"n", std::to_string(d.n)},
                {"l", d.l.get_str()},
                {"order", lpower_json(d.order)},
                {"inputs_echo", echo}};
}

json verdict_json(const Verdict& v) {
    json hyps = json::array();
    for (const Hypothesis& h : v.hypotheses)
        hyps.push_back(json{{"name", h.name},
                            {"satisfied", h.satisfied},
                            {"witness", h.witness}});
    return json{{"holds", v.holds},
                {"applicable", v.applicable},
                {"status", v.status()},
                {"hypotheses", hyps},
                {"conclusion", v.conclusion}};
}

json report_json(const Report& r) {
    json entries = json::array();
    for (const ReportEntry& e : r.entries)
        entries.push_back(json{{"claim_id", e.claim_id},
                               {"paper_anchor", e.paper_anchor},
                               {"computed", e.computed},
                               {"expected", e.expected},
                               {"pass", e.pass}});
    return json{{"entries", entries},
                {"summary",
                 {{"pass", std::to_string(r.passed())},
                  {"fail", std::to_string(r.failed())}}}};
}

void emit_json(std::ostream& out, const json& j) {
    out << j.dump(2) << "\n";
}

using Rows = std::vector<std::pair<std::string, std::string>>;

void emit_table(std::ostream& out, const Rows& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

void emit_order(std::ostream& out, bool as_json, const DivisibleOrder& d) {
    if (as_json) {
        emit_json(out, order_json(d));
        return;
    }
    Rows rows{{"context", to_string(d.context)},
              {"n", std::to_string(d.n)},
              {"l", d.l.get_str()},
              {"order", d.order.str()}};
    for (const auto& [name, value] : d.inputs_echo)
        rows.emplace_back(name, value.str());
    emit_table(out, rows);
}

void emit_verdict(std::ostream& out, bool as_json, const Verdict& v) {
    if (as_json) {
        emit_json(out, verdict_json(v));
        return;
    }
    Rows rows{{"status", v.status()}};
    for (const Hypothesis& h : v.hypotheses)
        rows.emplace_back(h.name, std::string(h.satisfied ? "yes" : "no") + " (" +
                                      h.witness + ")");
    rows.emplace_back("conclusion", v.conclusion);
    emit_table(out, rows);
}

Int parse_int(const std::string& text, const char* flag) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(std::string(flag) + ": expected an integer, got \"" +
                                   text + "\"");
    }
}

struct CurveArgs {
    std::uint64_t p = 0;
    std::uint64_t A = 0;
    std::uint64_t B = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "field characteristic, prime >= 5")->required();
        cmd->add_option("--A", A, "coefficient A of y^2 = x^3 + Ax + B")->required();
        cmd->add_option("--B", B, "coefficient B of y^2 = x^3 + Ax + B")->required();
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator for orders of divisible elements in K-groups of Q "
                 "and of elliptic function fields F_p(E)"};
    app.name("kdiv");
    app.require_subcommand(1);

    bool as_json = false;
    auto add_json = [&as_json](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit a canonical JSON document");
    };

    // bernoulli --m M
    unsigned long m = 0;
    CLI::App* bern = app.add_subcommand("bernoulli", "Bernoulli number B_m");
    bern->add_option("--m", m, "index m >= 0")->required();
    add_json(bern);

    // zeta-q --n N
    unsigned long zeta_n = 0;
    CLI::App* zq = app.add_subcommand("zeta-q", "zeta_Q(-n), exact");
    zq->add_option("--n", zeta_n, "n >= 1")->required();
    add_json(zq);

    // wn --n N [--l L]
    unsigned long wn_n = 0;
    std::string wn_l;
    CLI::App* wn = app.add_subcommand("wn", "w_n(Q), or the l-part of w_n(Q_l)");
    wn->add_option("--n", wn_n, "n >= 1")->required();
    wn->add_option("--l", wn_l, "odd prime: report the local l-part instead");
    add_json(wn);

    // dnl (q | ff | ss)
    CLI::App* dnl = app.add_subcommand("dnl", "order of the group of divisible elements");
    dnl->require_subcommand(1);
    unsigned long dnl_n = 0;
    std::string dnl_l;
    CLI::App* dnlq = dnl->add_subcommand("q", "over Q: n odd, l odd prime");
    dnlq->add_option("--n", dnl_n, "odd n >= 1")->required();
    dnlq->add_option("--l", dnl_l, "odd prime")->required();
    add_json(dnlq);
    CurveArgs dnl_curve;
    CLI::App* dnlff = dnl->add_subcommand("ff", "over F_p(E) via the zeta function");
    dnl_curve.attach(dnlff);
    dnlff->add_option("--n", dnl_n, "n >= 1")->required();
    dnlff->add_option("--l", dnl_l, "prime different from p")->required();
    add_json(dnlff);
    std::string dnl_p;
    CLI::App* dnlss = dnl->add_subcommand("ss", "supersingular closed form");
    dnlss->add_option("--p", dnl_p, "prime >= 5 of a supersingular curve")->required();
    dnlss->add_option("--n", dnl_n, "n >= 1")->required();
    dnlss->add_option("--l", dnl_l, "prime different from p")->required();
    add_json(dnlss);

    // curve --p --A --B (count | trace | supersingular | zeta --n N)
    CurveArgs curve_args;
    CLI::App* curve = app.add_subcommand("curve", "point counts and zeta data of E/F_p");
    curve_args.attach(curve);
    curve->require_subcommand(1);
    CLI::App* ccount = curve->add_subcommand("count", "|E(F_p)| by enumeration");
    add_json(ccount);
    CLI::App* ctrace = curve->add_subcommand("trace", "Frobenius trace a = 1 + p - |E(F_p)|");
    add_json(ctrace);
    CLI::App* css = curve->add_subcommand("supersingular", "trace test a = 0");
    add_json(css);
    unsigned long curve_zeta_n = 0;
    CLI::App* czeta = curve->add_subcommand("zeta", "zeta_X(-n) and zeta_F(-n), exact");
    czeta->add_option("--n", curve_zeta_n, "n >= 1")->required();
    add_json(czeta);

    // split (q | ff)
    CLI::App* split = app.add_subcommand("split", "splitting of the localization boundary map");
    split->require_subcommand(1);
    unsigned long split_n = 0;
    std::string split_l;
    CLI::App* splitq = split->add_subcommand("q", "over Q: n odd, l odd prime");
    splitq->add_option("--n", split_n, "odd n >= 1")->required();
    splitq->add_option("--l", split_l, "odd prime")->required();
    add_json(splitq);
    CurveArgs split_curve;
    CLI::App* splitff = split->add_subcommand("ff", "over F_p(E)");
    split_curve.attach(splitff);
    splitff->add_option("--n", split_n, "n >= 1")->required();
    splitff->add_option("--l", split_l, "prime different from p")->required();
    add_json(splitff);

    // homology (q | ss)
    CLI::App* hom = app.add_subcommand("homology", "kernel criteria for homology of GL");
    hom->require_subcommand(1);
    unsigned long hom_n = 0;
    std::string hom_l, hom_p;
    CLI::App* homq = hom->add_subcommand("q", "over Q");
    homq->add_option("--n", hom_n, "n >= 1")->required();
    homq->add_option("--l", hom_l, "prime")->required();
    add_json(homq);
    CLI::App* homss = hom->add_subcommand("ss", "over F_p(E), E supersingular");
    homss->add_option("--p", hom_p, "prime >= 5 of a supersingular curve")->required();
    homss->add_option("--n", hom_n, "n >= 1")->required();
    homss->add_option("--l", hom_l, "prime")->required();
    add_json(homss);

    // moore --local W1,W2,... --global W --l L
    std::string moore_local, moore_global, moore_l;
    CLI::App* moore = app.add_subcommand(
        "moore", "|K_2n(O_F,S)_l| / |K^w_2n(O_F)_l| from root-of-unity invariants");
    moore->add_option("--local", moore_local, "comma-separated w_n(F_v) for v in S")
        ->required();
    moore->add_option("--global", moore_global, "w_n(F)")->required();
    moore->add_option("--l", moore_l, "prime")->required();
    add_json(moore);

    // verify-paper
    CLI::App* verify = app.add_subcommand(
        "verify-paper", "re-compute every built-in reference claim and report pass/fail");
    add_json(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        const CLI::App* deepest = &app;
        while (!deepest->get_subcommands().empty())
            deepest = deepest->get_subcommands().front();
        if (deepest != &app)
            err << deepest->help();
        else
            err << "run 'kdiv --help' for the subcommand grammar\n";
        return 1;
    }

    try {
        if (*bern) {
            Rat b = bernoulli(m);
            if (as_json)
                emit_json(out, json{{"command", "bernoulli"},
                                    {"m", std::to_string(m)},
                                    {"value", b.str()}});
            else
                emit_table(out, {{"B_" + std::to_string(m), b.str()}});
        } else if (*zq) {
            Rat z = zeta_q_neg(zeta_n);
            if (as_json)
                emit_json(out, json{{"command", "zeta-q"},
                                    {"n", std::to_string(zeta_n)},
                                    {"value", z.str()}});
            else
                emit_table(out, {{"zeta_Q(-" + std::to_string(zeta_n) + ")", z.str()}});
        } else if (*wn) {
            if (wn_l.empty()) {
                WnInvariant w = wn_q(wn_n);
                if (as_json) {
                    json factors = json::array();
                    for (const auto& [prime, e] : w.factors)
                        factors.push_back(json{{"prime", std::to_string(prime)},
                                               {"exponent", std::to_string(e)}});
                    emit_json(out, json{{"command", "wn"},
                                        {"n", std::to_string(wn_n)},
                                        {"value", w.value.get_str()},
                                        {"factors", factors}});
                } else {
                    std::string fact;
                    for (const auto& [prime, e] : w.factors)
                        fact += (fact.empty() ? "" : " * ") + std::to_string(prime) +
                                "^" + std::to_string(e);
                    emit_table(out, {{"w_" + std::to_string(wn_n) + "(Q)",
                                      w.value.get_str()},
                                     {"factorization", fact}});
                }
            } else {
                LPower lp = wn_ql(wn_n, parse_int(wn_l, "--l"));
                if (as_json)
                    emit_json(out, json{{"command", "wn"},
                                        {"n", std::to_string(wn_n)},
                                        {"l", lp.l.get_str()},
                                        {"local_part", lpower_json(lp)}});
                else
                    emit_table(out, {{"w_" + std::to_string(wn_n) + "(Q_" +
                                          lp.l.get_str() + ") l-part",
                                      lp.str()}});
            }
        } else if (*dnlq) {
            emit_order(out, as_json, dnl_q(dnl_n, parse_int(dnl_l, "--l")));
        } else if (*dnlff) {
            CurveFp c(dnl_curve.p, dnl_curve.A, dnl_curve.B);
            emit_order(out, as_json, dnl_ff(weil_zeta(c), dnl_n, parse_int(dnl_l, "--l")));
        } else if (*dnlss) {
            emit_order(out, as_json,
                       dnl_ss(parse_int(dnl_p, "--p"), dnl_n, parse_int(dnl_l, "--l")));
        } else if (*ccount) {
            CurveFp c(curve_args.p, curve_args.A, curve_args.B);
            std::uint64_t count = count_points(c);
            if (as_json)
                emit_json(out, json{{"command", "curve-count"},
                                    {"p", std::to_string(curve_args.p)},
                                    {"A", std::to_string(c.A)},
                                    {"B", std::to_string(c.B)},
                                    {"count", std::to_string(count)}});
            else
                emit_table(out, {{"|E(F_" + std::to_string(curve_args.p) + ")|",
                                  std::to_string(count)}});
        } else if (*ctrace) {
            CurveFp c(curve_args.p, curve_args.A, curve_args.B);
            std::int64_t a = trace(c);
            if (as_json)
                emit_json(out, json{{"command", "curve-trace"},
                                    {"p", std::to_string(curve_args.p)},
                                    {"A", std::to_string(c.A)},
                                    {"B", std::to_string(c.B)},
                                    {"trace", std::to_string(a)}});
            else
                emit_table(out, {{"trace", std::to_string(a)}});
        } else if (*css) {
            CurveFp c(curve_args.p, curve_args.A, curve_args.B);
            bool ss = is_supersingular(c);
            if (as_json)
                emit_json(out, json{{"command", "curve-supersingular"},
                                    {"p", std::to_string(curve_args.p)},
                                    {"A", std::to_string(c.A)},
                                    {"B", std::to_string(c.B)},
                                    {"supersingular", ss}});
            else
                emit_table(out, {{"supersingular", ss ? "true" : "false"}});
        } else if (*czeta) {
            CurveFp c(curve_args.p, curve_args.A, curve_args.B);
            WeilZeta z = weil_zeta(c);
            Rat zx = zeta_x_at(z, curve_zeta_n);
            Rat zf = zeta_f_at(z, curve_zeta_n);
            if (as_json)
                emit_json(out, json{{"command", "curve-zeta"},
                                    {"p", std::to_string(curve_args.p)},
                                    {"A", std::to_string(c.A)},
                                    {"B", std::to_string(c.B)},
                                    {"q", z.q.get_str()},
                                    {"a", z.a.get_str()},
                                    {"n", std::to_string(curve_zeta_n)},
                                    {"zeta_X", zx.str()},
                                    {"zeta_F", zf.str()}});
            else
                emit_table(out, {{"q", z.q.get_str()},
                                 {"a", z.a.get_str()},
                                 {"zeta_X(-" + std::to_string(curve_zeta_n) + ")",
                                  zx.str()},
                                 {"zeta_F(-" + std::to_string(curve_zeta_n) + ")",
                                  zf.str()}});
        } else if (*splitq) {
            emit_verdict(out, as_json, split_verdict_q(split_n, parse_int(split_l, "--l")));
        } else if (*splitff) {
            CurveFp c(split_curve.p, split_curve.A, split_curve.B);
            emit_verdict(out, as_json,
                         split_verdict_ff(weil_zeta(c), split_n, parse_int(split_l, "--l")));
        } else if (*homq) {
            emit_verdict(out, as_json, homology_kernel_q(hom_n, parse_int(hom_l, "--l")));
        } else if (*homss) {
            emit_verdict(out, as_json,
                         homology_kernel_ss(parse_int(hom_p, "--p"), hom_n,
                                            parse_int(hom_l, "--l")));
        } else if (*moore) {
            std::vector<Int> local;
            std::stringstream ss(moore_local);
            std::string item;
            while (std::getline(ss, item, ','))
                local.push_back(parse_int(item, "--local"));
            if (local.empty())
                throw CLI::ValidationError("--local: expected a comma-separated list");
            LPower q = moore_quotient(local, parse_int(moore_global, "--global"),
                                      parse_int(moore_l, "--l"));
            if (as_json) {
                json locals = json::array();
                for (const Int& w : local)
                    locals.push_back(w.get_str());
                emit_json(out, json{{"command", "moore"},
                                    {"local", locals},
                                    {"global", moore_global},
                                    {"l", moore_l},
                                    {"order", lpower_json(q)}});
            } else {
                emit_table(out, {{"quotient", q.str()}});
            }
        } else if (*verify) {
            Report r = verify_paper();
            if (as_json) {
                emit_json(out, report_json(r));
            } else {
                for (const ReportEntry& e : r.entries)
                    out << (e.pass ? "PASS" : "FAIL") << "  " << std::left
                        << std::setw(18) << e.claim_id << e.computed << "\n";
                out << r.passed() << " passed, " << r.failed() << " failed\n";
            }
            return r.all_pass() ? 0 : 3;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace kdiv::cli
