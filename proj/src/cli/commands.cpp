#include "hopfk/cli.hpp"

#include "hopfk/classify.hpp"
#include "hopfk/heckenberger.hpp"
#include "hopfk/hopfops.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace hopfk::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string str(const CycloScalar& a) { return a.to_string(); }

json scalars(const std::vector<CycloScalar>& v) {
    json out = json::array();
    for (const auto& a : v) out.push_back(str(a));
    return out;
}

// What one subcommand produced: the body of the report and its exit code.
struct Outcome {
    json body = json::object();
    int code = kSuccess;
};

struct Context {
    std::vector<std::string> files;  // contents, in argument order
    json args = json::object();
    std::optional<std::size_t> budget;
};

RewriteOptions rewrite_options(const Context& ctx) {
    RewriteOptions opt;
    if (ctx.budget) opt.step_budget = *ctx.budget;
    return opt;
}

ParamsFile load(const std::string& path, Context& ctx) {
    std::string text = read_file(path);
    const json j = parse_json(text, path);
    ctx.files.push_back(std::move(text));
    return params_from_json(j);
}

json validation_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"pass", c.pass}, {"required", c.required}, {"detail", c.detail}});
    return json{{"ok", r.ok()}, {"checks", checks}};
}

Outcome cmd_validate(const ParamsFile& f) {
    Outcome o;
    o.body["family"] = f.family;
    if (f.family == "K" || f.family == "B") {
        const ValidationReport r = f.k ? validate(*f.k) : validate(*f.b);
        o.body.update(validation_json(r));
        if (f.b) o.body["expanded"] = params_to_json(f.b->expand());
        o.code = r.ok() ? kSuccess : kNegative;
        return o;
    }
    try {
        o.body["description"] = f.presentation().describe();
        o.body["ok"] = true;
    } catch (const InvalidPresentation& e) {
        o.body["ok"] = false;
        o.body["detail"] = e.what();
        o.code = kNegative;
    }
    return o;
}

Outcome cmd_nf(const ParamsFile& f, const std::string& src, const Context& ctx) {
    const HopfPresentation pres = f.presentation();
    const Expression e = parse_expression(src, pres.alphabet());
    const NCPoly nf = pres.rewrite().normal_form(expand_free(e), rewrite_options(ctx));
    Outcome o;
    o.body["input"] = print(e, pres.alphabet());
    o.body["normal_form"] = nf.to_string(pres.alphabet());
    o.body["terms"] = nf.size();
    return o;
}

Outcome cmd_pbw(const ParamsFile& f, const Context& ctx) {
    const HopfPresentation pres = f.presentation();
    const ConfluenceReport r = certify_confluence(pres.rewrite(), rewrite_options(ctx));
    Outcome o;
    json rules = json::array();
    for (const auto& rule : pres.rewrite().rules()) rules.push_back(rule.label);
    json unresolved = json::array();
    for (const auto& item : r.items) {
        if (item.resolved || unresolved.size() >= 10) continue;
        unresolved.push_back({{"word", pres.alphabet().word_string(item.overlap.word)},
                              {"via_first", item.via_rule1.to_string(pres.alphabet())},
                              {"via_second", item.via_rule2.to_string(pres.alphabet())}});
    }
    o.body["rules"] = rules;
    o.body["ambiguities"] = r.items.size();
    o.body["resolved"] = r.resolved_count();
    o.body["all_resolved"] = r.all_resolved();
    o.body["unresolved"] = unresolved;
    o.code = r.all_resolved() ? kSuccess : kNegative;
    return o;
}

Outcome cmd_hopf(const ParamsFile& f, long cap, std::optional<long> window) {
    const AxiomReport r = check_hopf_axioms(f.presentation(), cap, window);
    Outcome o;
    json failures = json::array();
    for (const auto& fl : r.failures) failures.push_back({{"axiom", fl.axiom}, {"where", fl.where}});
    o.body = {{"cap", r.cap},
              {"window", r.window},
              {"monomials_checked", r.monomials_checked},
              {"relations_checked", r.relations_checked},
              {"coassociativity", r.coassociativity},
              {"counit", r.counit},
              {"antipode", r.antipode},
              {"relations", r.relations},
              {"all_pass", r.all_pass()},
              {"failures", failures}};
    o.code = r.all_pass() ? kSuccess : kNegative;
    return o;
}

Outcome cmd_primitives(const ParamsFile& f, long weight, long cap, std::optional<long> window) {
    const HopfPresentation pres = f.presentation();
    const PrimitiveSpaceReport r = skew_primitives(pres, weight, cap, window);
    Outcome o;
    json spaces = json::array(), records = json::array();
    for (const auto& e : r.eigenspaces)
        spaces.push_back({{"lambda", str(e.lambda)},
                          {"dimension", e.dimension},
                          {"generalized_dimension", e.generalized_dimension}});
    for (const auto& rec : r.records)
        records.push_back({{"element", rec.element.to_string(pres.alphabet())},
                           {"commutator", str(rec.commutator)},
                           {"level", rec.level},
                           {"major", rec.is_major}});
    o.body = {{"weight", r.weight_exponent},
              {"cap", r.cap},
              {"window", r.window},
              {"unknowns", r.unknowns},
              {"kernel_dimension", r.kernel_dimension},
              {"quotient_dimension", r.quotient_dimension},
              {"unresolved_dimension", r.unresolved_dimension},
              {"eigenspaces", spaces},
              {"records", records}};
    return o;
}

Outcome cmd_ext1(const ParamsFile& f) {
    Outcome o;
    o.body["ext1"] = ext1_dimension(f.presentation());
    return o;
}

json b_form_json(const BFormResult& b) {
    return json{{"n", b.params.n},
                {"p", b.params.p},
                {"q", str(b.params.q)},
                {"q_exponent", b.exponent},
                {"exponent_candidates", b.candidates},
                {"alpha", scalars(b.params.alpha)},
                {"permutation", b.permutation}};
}

Outcome cmd_classify(const ParamsFile& f) {
    Outcome o;
    o.body["family"] = f.family;
    o.body["ext1"] = ext1_dimension(f.presentation());
    if (f.family != "K" && f.family != "B") return o;
    const KParams k = f.k_params();
    o.body["domain"] = is_domain(k);
    o.body["ext_vanishes"] = ext_vanishes(k);
    o.body["gldim_finite"] = gldim_finite(k);
    o.body["invariants"] = invariant_set(k);
    const auto b = to_b_form(k);
    o.body["b_form"] = b ? b_form_json(*b) : json(nullptr);
    return o;
}

Outcome cmd_iso(const ParamsFile& a, const ParamsFile& b) {
    Outcome o;
    if (a.family == "A" && b.family == "A") {
        const bool iso = a_family_iso(a.n, a.q, b.n, b.q);
        o.body["isomorphic"] = iso;
        o.code = iso ? kSuccess : kNegative;
        return o;
    }
    if ((a.family != "K" && a.family != "B") || (b.family != "K" && b.family != "B"))
        throw InputError("iso compares two K/B files or two A files");
    const auto w = iso_test(a.k_params(), b.k_params());
    o.body["isomorphic"] = w.has_value();
    if (!w) {
        o.body["witness"] = nullptr;
        o.code = kNegative;
        return o;
    }
    json scales = json::array();
    for (const auto& c : w->generator_scales) scales.push_back(c ? json(str(*c)) : json(nullptr));
    o.body["witness"] = {{"permutation", w->permutation},
                         {"c", str(w->c)},
                         {"generator_scales", scales},
                         {"scales_realised", w->scales_realised()},
                         {"flags", w->flags}};
    return o;
}

CycloScalar root_field(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("nichols datum: missing \"") + key + "\"");
    return scalar_from_json(j[key]);
}

json nichols_one(const json& j) {
    if (!j.is_object()) throw InputError("nichols datum must be an object");
    json out = json::object();
    BraidingMatrix q;
    std::optional<DiagonalDatum> d;
    if (j.contains("matrix")) {
        const json& m = j["matrix"];
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
            m[1].size() != 2)
            throw InputError("nichols matrix must be 2x2");
        q = {scalar_from_json(m[0][0]), scalar_from_json(m[0][1]), scalar_from_json(m[1][0]),
             scalar_from_json(m[1][1])};
    } else {
        if (!j.contains("n1") || !j.contains("n2") || !j["n1"].is_number_integer() || !j["n2"].is_number_integer())
            throw InputError("nichols datum needs integer n1 and n2, or a matrix");
        d = DiagonalDatum{j["n1"].get<long>(), j["n2"].get<long>(), root_field(j, "q1"), root_field(j, "q2")};
        if (d->n1 < 1 || d->n2 < 1) throw InputError("n1 and n2 must be positive");
        q = d->braiding();
    }
    const NicholsVerdict v = rank_two_case(q);
    json matches = json::array();
    for (const auto& m : v.all_matches) matches.push_back({{"label", m.label}, {"permuted", m.permuted}});
    out["braiding"] = json::array({json::array({str(q.q11), str(q.q12)}), json::array({str(q.q21), str(q.q22)})});
    out["rank_two"] = {{"case", v.case_label}, {"permuted", v.permutation_applied}, {"all_matches", matches}};
    if (d) {
        out["supplementary"] = to_string(supplementary_type(*d));
        out["supplementary_finite"] = supplementary_finite(*d);
        if (j.contains("epsilon")) {
            if (!j["epsilon"].is_number_integer()) throw InputError("epsilon must be an integer");
            out["datum_case"] = to_string(datum_case(*d, j["epsilon"].get<long>()));
        }
    }
    return out;
}

Outcome cmd_nichols(const json& batch) {
    Outcome o;
    if (!batch.is_array()) {
        o.body = nichols_one(batch);
        return o;
    }
    std::vector<json> results(batch.size());
    run_indexed(batch.size(), Execution::Parallel, [&](std::size_t i) { results[i] = nichols_one(batch[i]); });
    o.body["results"] = results;
    return o;
}

const char* status_name(ZeroDivisorSearch::Status s) {
    switch (s) {
        case ZeroDivisorSearch::Status::Found: return "found";
        case ZeroDivisorSearch::Status::NotFound: return "not-found";
        case ZeroDivisorSearch::Status::WitnessUnavailable: return "witness-unavailable";
    }
    return "not-found";
}

Outcome cmd_zerodiv(const ParamsFile& f, long cap, const Context& ctx) {
    const HopfPresentation pres = f.presentation();
    const ZeroDivisorSearch z = ctx.budget ? find_zero_divisors(pres, cap, *ctx.budget) : find_zero_divisors(pres, cap);
    Outcome o;
    o.body = {{"status", status_name(z.status)},
              {"method", z.method},
              {"candidates_tried", z.candidates_tried},
              {"steps_used", z.steps_used},
              {"budget_exhausted", z.budget_exhausted},
              {"notes", z.notes}};
    if (z.witness) {
        const auto& [a, b] = *z.witness;
        o.body["a"] = a.to_string(pres.alphabet());
        o.body["b"] = b.to_string(pres.alphabet());
        o.body["verified"] = !a.is_zero() && !b.is_zero() && pres.rewrite().multiply(a, b).is_zero();
    }
    o.code = z.status == ZeroDivisorSearch::Status::Found ? kSuccess : kNegative;
    return o;
}

void emit(std::ostream& out, const std::string& command, const Context& ctx, json body, std::optional<double> ms) {
    json digest_source = {{"command", command}, {"files", ctx.files}, {"args", ctx.args}};
    body["schema_version"] = kSchemaVersion;
    body["command"] = command;
    body["input_digest"] = sha256_hex(digest_source.dump());
    if (ms) body["timing_ms"] = *ms;
    out << body.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with pointed Hopf algebra presentations", "hopfk"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::size_t> budget;
    bool timing = false;
    app.add_option("--budget", budget, "Step bound for rewriting and searches");
    app.add_flag("--timing", timing, "Add wall-clock time to the report");

    std::string file, file2, expr, batch;
    long cap = 6, weight = 0;
    std::optional<long> window;

    auto* validate_cmd = app.add_subcommand("validate", "Check the parameter conditions");
    validate_cmd->add_option("file", file)->required();
    auto* nf_cmd = app.add_subcommand("nf", "Normal form of an expression");
    nf_cmd->add_option("file", file)->required();
    nf_cmd->add_option("expr", expr)->required();
    auto* pbw_cmd = app.add_subcommand("pbw-check", "Resolve every ambiguity of the rewriting system");
    pbw_cmd->add_option("file", file)->required();
    auto* hopf_cmd = app.add_subcommand("hopf-check", "Verify the Hopf axioms on a bounded basis");
    hopf_cmd->add_option("file", file)->required();
    hopf_cmd->add_option("--cap", cap)->check(CLI::Range(0L, 64L));
    hopf_cmd->add_option("--window", window);
    auto* prim_cmd = app.add_subcommand("primitives", "Skew primitives of a given weight");
    prim_cmd->add_option("file", file)->required();
    prim_cmd->add_option("--weight", weight)->required();
    prim_cmd->add_option("--cap", cap)->check(CLI::Range(0L, 64L));
    prim_cmd->add_option("--window", window);
    auto* ext1_cmd = app.add_subcommand("ext1", "dim Ext^1(k,k)");
    ext1_cmd->add_option("file", file)->required();
    auto* classify_cmd = app.add_subcommand("classify", "Domain, Ext, gldim, invariants and B form");
    classify_cmd->add_option("file", file)->required();
    auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test");
    iso_cmd->add_option("fileA", file)->required();
    iso_cmd->add_option("fileB", file2)->required();
    auto* nichols_cmd = app.add_subcommand("nichols", "Rank-two diagonal braiding verdicts");
    nichols_cmd->add_option("batch", batch)->required();
    auto* zd_cmd = app.add_subcommand("zerodiv", "Seeded zero-divisor search");
    zd_cmd->add_option("file", file)->required();
    zd_cmd->add_option("--cap", cap)->check(CLI::Range(0L, 64L));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Context ctx;
    ctx.budget = budget;
    try {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        if (command == "validate") {
            o = cmd_validate(load(file, ctx));
        } else if (command == "nf") {
            const ParamsFile f = load(file, ctx);
            ctx.args["expr"] = expr;
            o = cmd_nf(f, expr, ctx);
        } else if (command == "pbw-check") {
            o = cmd_pbw(load(file, ctx), ctx);
        } else if (command == "hopf-check") {
            const ParamsFile f = load(file, ctx);
            ctx.args["cap"] = cap;
            if (window) ctx.args["window"] = *window;
            o = cmd_hopf(f, cap, window);
        } else if (command == "primitives") {
            const ParamsFile f = load(file, ctx);
            ctx.args["cap"] = cap;
            ctx.args["weight"] = weight;
            if (window) ctx.args["window"] = *window;
            o = cmd_primitives(f, weight, cap, window);
        } else if (command == "ext1") {
            o = cmd_ext1(load(file, ctx));
        } else if (command == "classify") {
            o = cmd_classify(load(file, ctx));
        } else if (command == "iso") {
            const ParamsFile a = load(file, ctx);
            const ParamsFile b = load(file2, ctx);
            o = cmd_iso(a, b);
        } else if (command == "nichols") {
            std::string text = read_file(batch);
            const json j = parse_json(text, batch);
            ctx.files.push_back(std::move(text));
            o = cmd_nichols(j);
        } else {
            const ParamsFile f = load(file, ctx);
            ctx.args["cap"] = cap;
            o = cmd_zerodiv(f, cap, ctx);
        }
        if (budget) ctx.args["budget"] = *budget;
        std::optional<double> ms;
        if (timing)
            ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(out, command, ctx, std::move(o.body), ms);
        return o.code;
    } catch (const RewriteBudgetExceeded& e) {
        if (budget) ctx.args["budget"] = *budget;
        emit(out, command, ctx, json{{"budget_exhausted", true}, {"error", e.what()}}, std::nullopt);
        return kNegative;
    } catch (const ParseError& e) {
        err << "hopfk: " << e.what() << '\n';
        emit(out, command, ctx, json{{"error", e.what()}, {"position", e.position()}}, std::nullopt);
        return kInputError;
    } catch (const std::invalid_argument& e) {
        // InvalidPresentation, schema and input errors
        err << "hopfk: " << e.what() << '\n';
        emit(out, command, ctx, json{{"error", e.what()}}, std::nullopt);
        return kInputError;
    } catch (const DivisionByZero& e) {
        err << "hopfk: " << e.what() << '\n';
        emit(out, command, ctx, json{{"error", e.what()}}, std::nullopt);
        return kInputError;
    }
}

}  // namespace hopfk::cli
