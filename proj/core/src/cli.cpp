#include "fqdyn/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fqdyn/expansion.hpp"
#include "fqdyn/expr.hpp"
#include "fqdyn/newton.hpp"
#include "fqdyn/orbits.hpp"
#include "fqdyn/sequences.hpp"
#include "fqdyn/verdict.hpp"

namespace fqdyn {

namespace {

using nlohmann::json;

constexpr const char* kArtifactName = "fqdyn";
constexpr const char* kArtifactVersion = "0.1.0";
constexpr int kFormatVersion = 1;

json assertions_json(const AssertionTrace& trace) {
    json arr = json::array();
    for (const auto& a : trace)
        arr.push_back(json{{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    return arr;
}

struct ReportBuilder {
    json doc;
    bool failed = false;

    ReportBuilder(const std::string& command, std::uint64_t seed) {
        doc["format_version"] = kFormatVersion;
        doc["artifact"] = json{{"name", kArtifactName}, {"version", kArtifactVersion}};
        doc["command"] = command;
        doc["seed"] = seed;
        doc["inputs"] = json::object();
        doc["results"] = json::object();
        doc["assertions"] = json::array();
    }

    void input(const std::string& key, const std::string& value) { doc["inputs"][key] = value; }
    void checks(const AssertionTrace& trace) {
        for (const auto& a : trace) {
            doc["assertions"].push_back(json{{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
            if (!a.pass) failed = true;
        }
    }

    void render(std::ostream& out, bool as_json) const {
        if (as_json) {
            out << doc.dump(2) << "\n";
            return;
        }
        out << "command: " << doc["command"].get<std::string>() << "\n";
        out << "inputs:\n";
        for (auto it = doc["inputs"].begin(); it != doc["inputs"].end(); ++it)
            out << "  " << it.key() << " = " << it.value().get<std::string>() << "\n";
        out << "results:\n";
        std::istringstream body(doc["results"].dump(2));
        for (std::string line; std::getline(body, line);) out << "  " << line << "\n";
        if (!doc["assertions"].empty()) {
            out << "assertions:\n";
            for (const auto& a : doc["assertions"]) {
                out << "  [" << (a["pass"].get<bool>() ? "pass" : "FAIL") << "] "
                    << a["name"].get<std::string>();
                std::string det = a["detail"].get<std::string>();
                if (!det.empty()) out << "  (" << det << ")";
                out << "\n";
            }
        }
        if (doc.contains("evidence")) {
            out << "evidence:\n";
            for (const auto& a : doc["evidence"]) {
                out << "  [" << (a["pass"].get<bool>() ? "holds" : "violated") << "] "
                    << a["name"].get<std::string>();
                std::string det = a["detail"].get<std::string>();
                if (!det.empty()) out << "  (" << det << ")";
                out << "\n";
            }
        }
    }
};

json family_json(const BinomialFamily& fam) {
    json j;
    j["field"] = fam.spec->to_string();
    j["f"] = family_to_string(fam);
    j["c1"] = gf_expr_string(fam.c1);
    j["c2"] = gf_expr_string(fam.c2);
    j["d1"] = fam.d1;
    j["d2"] = fam.d2;
    j["l1"] = fam.l1;
    j["s1"] = fam.s1;
    j["l2"] = fam.l2;
    j["s2"] = fam.s2;
    j["rho"] = fam.rho ? json(fam.rho->to_string()) : json();
    j["rho_prime"] = fam.rho_prime ? json(fam.rho_prime->to_string()) : json();
    j["regime"] = regime_name(fam.regime);
    return j;
}

std::string governing_text(Regime r) {
    switch (r) {
        case Regime::LeadDominant:
            return "finite unless constants or equal images (top-weight criterion)";
        case Regime::StrictLess:
            return "finite unless constants or equal images (fiber-tower criterion)";
        case Regime::Equal:
            return "one-sided: infinite forces equal images or the constant obstruction";
        case Regime::Additive:
            return "infinite exactly when beta - alpha is constant";
        case Regime::Quadratic:
            return "reduces by completing the square to the square map";
        case Regime::Other:
            return "unclassified";
    }
    return "unclassified";
}

struct CommonOpts {
    std::string field;
    bool as_json = false;
    std::uint64_t seed = 0;
    long long max_steps = 10000;
    long long precision_steps = 32;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--field", o.field, "coefficient field, e.g. 3, 3^2, or 3^2/1,0,1")->required();
    cmd->add_flag("--json", o.as_json, "emit a JSON report");
    cmd->add_option("--seed", o.seed, "seed for randomized factorization");
    cmd->add_option("--max-steps", o.max_steps, "orbit step budget");
    cmd->add_option("--precision-steps", o.precision_steps, "local height iteration budget");
}

int finish(ReportBuilder& rb, const CommonOpts& o, std::ostream& out) {
    rb.render(out, o.as_json);
    return rb.failed ? 2 : 0;
}

// ---------------------------------------------------------------------------

int cmd_classify(const CommonOpts& o, const std::string& fexpr, std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    BinomialFamily fam = parse_family(fexpr, spec);
    ReportBuilder rb("classify", o.seed);
    rb.input("field", spec->to_string());
    rb.input("f", family_to_string(fam));
    rb.doc["results"] = family_json(fam);
    rb.doc["results"]["p"] = fam.p();
    rb.doc["results"]["k"] = spec->k;
    rb.doc["results"]["q"] = spec->q;
    rb.doc["results"]["governing"] = governing_text(fam.regime);
    return finish(rb, o, out);
}

int cmd_verdict(const CommonOpts& o, const std::string& fexpr, const std::string& alpha_s,
                const std::string& beta_s, std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    BinomialFamily fam = parse_family(fexpr, spec);
    RatFunc alpha = parse_ratfunc(alpha_s, spec);
    RatFunc beta = parse_ratfunc(beta_s, spec);
    Verdict v = prep_verdict(fam, alpha, beta);

    ReportBuilder rb("verdict", o.seed);
    rb.input("field", spec->to_string());
    rb.input("f", family_to_string(fam));
    rb.input("alpha", alpha.to_string());
    rb.input("beta", beta.to_string());
    rb.doc["results"]["outcome"] = verdict_outcome_name(v.outcome);
    rb.doc["results"]["reason"] = v.reason;
    rb.doc["results"]["regime"] = regime_name(fam.regime);
    rb.doc["results"]["eps1"] = v.eps1.to_string();
    rb.doc["results"]["eps1_constant"] = v.eps1.is_constant();
    if (v.edge_value) rb.doc["results"]["edge_value"] = gf_expr_string(*v.edge_value);
    rb.doc["evidence"] = assertions_json(v.evidence);
    rb.checks(v.assertions);
    return finish(rb, o, out);
}

int cmd_fiber(const CommonOpts& o, const std::string& fexpr, const std::string& alpha_s,
              std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    BinomialFamily fam = parse_family(fexpr, spec);
    RatFunc alpha = parse_ratfunc(alpha_s, spec);
    PlaceSetS S = exceptional_set(alpha, alpha, o.seed);
    FiberData fd = fiber_analyze(fam, alpha, S);

    ReportBuilder rb("fiber", o.seed);
    rb.input("field", spec->to_string());
    rb.input("f", family_to_string(fam));
    rb.input("alpha", alpha.to_string());
    rb.doc["results"]["count"] = fd.count;
    rb.doc["results"]["g2_degree"] = fd.g2.degree();
    rb.doc["results"]["rho"] = fam.rho ? json(fam.rho->to_string()) : json();
    json per = json::array();
    for (const auto& [v, sizes] : fd.per_place) {
        json entry;
        entry["place"] = v.to_string();
        for (const auto& [pv, cv] : S)
            if (pv == v) entry["cv_log"] = cv.to_string();
        json ms = json::array();
        for (const auto& s : sizes) ms.push_back(s.to_string());
        entry["sizes_log"] = ms;
        per.push_back(entry);
    }
    rb.doc["results"]["per_place"] = per;
    rb.checks(fd.checks);
    return finish(rb, o, out);
}

int cmd_heights(const CommonOpts& o, const std::string& fexpr, const std::string& lambda_s,
                const std::string& x_s, std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    BinomialFamily fam = parse_family(fexpr, spec);
    RatFunc lambda = parse_ratfunc(lambda_s, spec);
    RatFunc x = parse_ratfunc(x_s, spec);

    OrbitReport orbit = preperiodic(fam, lambda, x, o.max_steps);
    HeightReport hr = global_canonical_height(fam, lambda, x, o.precision_steps);

    ReportBuilder rb("heights", o.seed);
    rb.input("field", spec->to_string());
    rb.input("f", family_to_string(fam));
    rb.input("lambda", lambda.to_string());
    rb.input("x", x.to_string());
    json& res = rb.doc["results"];
    switch (orbit.status) {
        case OrbitReport::Status::Preperiodic:
            res["orbit"] = json{{"status", "preperiodic"}, {"tail", orbit.tail}, {"period", orbit.period}};
            break;
        case OrbitReport::Status::Escaping:
            res["orbit"] = json{{"status", "escaping"},
                                {"place", orbit.escape_place->to_string()},
                                {"index", orbit.escape_index},
                                {"abs_log", orbit.escape_abs_log.to_string()}};
            break;
        case OrbitReport::Status::Undecided:
            res["orbit"] = json{{"status", "undecided"}, {"steps", orbit.steps_used}};
            break;
    }
    json locals = json::array();
    for (const auto& [v, lh] : hr.locals) {
        json entry;
        entry["place"] = v.to_string();
        entry["value"] = lh.value.to_string();
        entry["exact"] = lh.exact;
        if (!lh.exact) entry["bound"] = lh.bound.to_string();
        locals.push_back(entry);
    }
    res["locals"] = locals;
    res["global_lower"] = hr.global_lower.to_string();
    res["global_upper"] = hr.global_upper.to_string();
    res["global_exact"] = hr.global_exact;
    res["weil_height_lambda"] = weil_height(lambda).to_string();
    res["weil_height_x"] = weil_height(x).to_string();
    rb.checks(hr.assertions);
    return finish(rb, o, out);
}

int cmd_identities(const CommonOpts& o, const std::string& fexpr, const std::string& alpha_s,
                   const std::string& beta_s, const std::string& which,
                   const std::string& lambda_s, long long steps, std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    BinomialFamily fam = parse_family(fexpr, spec);
    RatFunc alpha = parse_ratfunc(alpha_s, spec);
    RatFunc beta = parse_ratfunc(beta_s, spec);

    ReportBuilder rb("identities", o.seed);
    rb.input("field", spec->to_string());
    rb.input("f", family_to_string(fam));
    rb.input("alpha", alpha.to_string());
    rb.input("beta", beta.to_string());
    rb.doc["results"]["which"] = which;

    RatFunc eps1 = family_eval(fam, beta) - family_eval(fam, alpha);
    if (which == "additive") {
        RatFunc lambda = lambda_s.empty() ? alpha - family_eval(fam, alpha)
                                          : parse_ratfunc(lambda_s, spec);
        rb.input("lambda", lambda.to_string());
        rb.checks(additive_identity_check(fam, alpha, beta, lambda, static_cast<int>(steps),
                                          o.max_steps));
    } else if (which == "pairsum") {
        SumIdentityResult r = pair_sum_identity(fam, alpha, beta);
        rb.doc["results"]["lhs"] = r.lhs.to_string();
        rb.doc["results"]["rhs"] = r.rhs.to_string();
        rb.checks(r.trace);
    } else if (which == "shift") {
        ShiftIdentityResult r = fiber_shift_identity(fam, alpha, eps1);
        rb.doc["results"]["eps1"] = eps1.to_string();
        rb.doc["results"]["degree"] = r.lhs.degree();
        rb.checks(r.trace);
    } else if (which == "tower") {
        TowerResult r = divided_difference_tower(fam, alpha, eps1);
        rb.doc["results"]["eps1"] = eps1.to_string();
        json degs = json::array();
        for (int d : r.degrees) degs.push_back(d);
        rb.doc["results"]["degrees"] = degs;
        rb.checks(r.trace);
    } else if (which == "obstruction") {
        ObstructionResult r = rho1_obstruction(fam);
        rb.doc["results"]["target"] = gf_expr_string(r.target);
        rb.doc["results"]["field"] = r.field->to_string();
        json adm = json::array();
        for (const auto& z : r.admissible) adm.push_back(z.to_string());
        rb.doc["results"]["admissible"] = adm;
    } else {
        throw ParseError("unknown identity '" + which +
                         "' (expected additive|pairsum|shift|tower|obstruction)");
    }
    return finish(rb, o, out);
}

int cmd_lemma51(const CommonOpts& o, const std::string& fexpr, long long n, std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    BinomialFamily fam = parse_family(fexpr, spec);
    ExpansionChecks ec = expansion_checks(fam, n);

    ReportBuilder rb("lemma51", o.seed);
    rb.input("field", spec->to_string());
    rb.input("f", family_to_string(fam));
    rb.doc["results"]["n"] = n;
    json bs = json::array();
    for (long long b : ec.b) bs.push_back(b);
    rb.doc["results"]["b"] = bs;
    json as = json::array();
    for (const auto& a : ec.a) as.push_back(poly_expr_string(a, "x"));
    rb.doc["results"]["a"] = as;
    json us = json::array();
    for (const auto& u : ec.u_trace) us.push_back(gf_expr_string(u));
    rb.doc["results"]["u_trace"] = us;
    rb.checks(ec.trace);
    return finish(rb, o, out);
}

int cmd_collide(const CommonOpts& o, const std::string& search_field, const std::string& fexpr,
                const std::string& a1_s, const std::string& a2_s, const std::string& b_s,
                std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    const FieldSpec* qprime = FieldSpec::parse(search_field);
    BinomialFamily fam = parse_family(fexpr, spec);
    GFElem a1 = qprime->parse_element(a1_s);
    GFElem a2 = qprime->parse_element(a2_s);
    GFElem b = qprime->parse_element(b_s);
    CollisionSet cs = collision_search(fam, qprime, a1, a2, b);

    ReportBuilder rb("collide", o.seed);
    rb.input("field", spec->to_string());
    rb.input("search_field", qprime->to_string());
    rb.input("f", family_to_string(fam));
    rb.input("alpha1", a1.to_string());
    rb.input("alpha2", a2.to_string());
    rb.input("beta", b.to_string());
    json lam = json::array();
    for (const auto& w : cs.lambdas)
        lam.push_back(json{{"lambda", w.lambda.to_string()}, {"m", w.m}, {"n", w.n}});
    rb.doc["results"]["count"] = cs.lambdas.size();
    rb.doc["results"]["lambdas"] = lam;
    return finish(rb, o, out);
}

int cmd_params(const CommonOpts& o, const std::string& fexpr, const std::string& alpha_s,
               const std::string& pairs_s, std::ostream& out) {
    const FieldSpec* spec = FieldSpec::parse(o.field);
    BinomialFamily fam = parse_family(fexpr, spec);
    RatFunc alpha = parse_ratfunc(alpha_s, spec);

    std::vector<std::pair<long long, long long>> pairs;
    std::string_view rest = pairs_s;
    while (!rest.empty()) {
        size_t semi = rest.find(';');
        std::string piece(rest.substr(0, semi));
        size_t comma = piece.find(',');
        if (comma == std::string::npos) throw ParseError("pairs look like \"2,1;3,2\"");
        pairs.emplace_back(std::stoll(piece.substr(0, comma)), std::stoll(piece.substr(comma + 1)));
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
    }
    auto polys = param_preperiodicity_polys(fam, alpha, pairs);

    ReportBuilder rb("params", o.seed);
    rb.input("field", spec->to_string());
    rb.input("f", family_to_string(fam));
    rb.input("alpha", alpha.to_string());
    json entries = json::array();
    for (const auto& pp : polys) {
        entries.push_back(json{{"m", pp.m},
                               {"n", pp.n},
                               {"degree", pp.poly.degree()},
                               {"distinct_roots", pp.distinct_roots},
                               {"poly", rfpoly_expr_string(pp.poly, "lambda")}});
    }
    rb.doc["results"]["entries"] = entries;
    return finish(rb, o, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic workbench for parametrized polynomial dynamics over F_q(t)"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string fexpr, alpha_s, beta_s, lambda_s, x_s, which = "shift", search_field;
    std::string a1_s, a2_s, b_s, pairs_s;
    long long n = 2, steps = 3;

    auto* classify = app.add_subcommand("classify", "degree decomposition, exponents and regime");
    add_common(classify, o);
    classify->add_option("f", fexpr, "binomial family, e.g. \"2*x^5 + x^6\"")->required();

    auto* verdict = app.add_subcommand("verdict", "decide the simultaneous-preperiodicity verdict");
    add_common(verdict, o);
    verdict->add_option("f", fexpr)->required();
    verdict->add_option("alpha", alpha_s)->required();
    verdict->add_option("beta", beta_s)->required();

    auto* fiber = app.add_subcommand("fiber", "fiber count and per-place root sizes");
    add_common(fiber, o);
    fiber->add_option("f", fexpr)->required();
    fiber->add_option("alpha", alpha_s)->required();

    auto* heights = app.add_subcommand("heights", "orbit classification and canonical heights");
    add_common(heights, o);
    heights->add_option("f", fexpr)->required();
    heights->add_option("lambda", lambda_s)->required();
    heights->add_option("x", x_s)->required();

    auto* identities = app.add_subcommand("identities", "exact sequence identities");
    add_common(identities, o);
    identities->add_option("f", fexpr)->required();
    identities->add_option("alpha", alpha_s)->required();
    identities->add_option("beta", beta_s)->required();
    identities->add_option("--which", which, "additive|pairsum|shift|tower|obstruction");
    identities->add_option("--lambda", lambda_s, "parameter for the additive identity");
    identities->add_option("--steps", steps, "iteration depth for the additive identity");

    auto* lemma51 = app.add_subcommand("lemma51", "iterate-expansion coefficient checks");
    add_common(lemma51, o);
    lemma51->add_option("f", fexpr)->required();
    lemma51->add_option("n", n, "expansion depth")->required();

    auto* collide = app.add_subcommand("collide", "exhaustive colliding-orbit parameter scan");
    add_common(collide, o);
    collide->add_option("--search-field", search_field, "finite search field q'")->required();
    collide->add_option("f", fexpr)->required();
    collide->add_option("alpha1", a1_s)->required();
    collide->add_option("alpha2", a2_s)->required();
    collide->add_option("beta", b_s)->required();

    auto* params = app.add_subcommand("params", "parameter polynomials and distinct-root counts");
    add_common(params, o);
    params->add_option("f", fexpr)->required();
    params->add_option("alpha", alpha_s)->required();
    params->add_option("--pairs", pairs_s, "semicolon-separated m,n pairs, e.g. \"2,1;3,2\"")
        ->required();

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargv;
        cargv.push_back(kArtifactName);
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (classify->parsed()) return cmd_classify(o, fexpr, out);
        if (verdict->parsed()) return cmd_verdict(o, fexpr, alpha_s, beta_s, out);
        if (fiber->parsed()) return cmd_fiber(o, fexpr, alpha_s, out);
        if (heights->parsed()) return cmd_heights(o, fexpr, lambda_s, x_s, out);
        if (identities->parsed())
            return cmd_identities(o, fexpr, alpha_s, beta_s, which, lambda_s, steps, out);
        if (lemma51->parsed()) return cmd_lemma51(o, fexpr, n, out);
        if (collide->parsed()) return cmd_collide(o, search_field, fexpr, a1_s, a2_s, b_s, out);
        if (params->parsed()) return cmd_params(o, fexpr, alpha_s, pairs_s, out);
    } catch (const AssertionFailedError& e) {
        err << "assertion failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

}  // namespace fqdyn
