// hahnfield: command-line workbench for truncated generalized power series.
//
//   hahnfield eval EXPR [--depth d] [--prec P]
//   hahnfield floor EXPR | cmp EXPR EXPR | val EXPR | coarsen EXPR --level j | res EXPR --level j
//   hahnfield check KIND --samples N --seed S --depth d
//   hahnfield scenario NAME [flags]
//   hahnfield hensel --poly POLY --residue-root Q --target P
//   hahnfield root --q Q --of EXPR [--target P]
//   hahnfield embdsrf --a EXPR --gamma EXP --level j
//
// Reports go to stdout as one JSON object; summaries and errors to stderr.
// Exit status is 0 iff every assertion passed.

#include "hahn/expr.hpp"
#include "hahn/order.hpp"
#include "hahn/scenario.hpp"
#include "hahn/valuation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using hahn::EvalContext;
using hahn::Exponent;
using hahn::Series;
using json = nlohmann::ordered_json;

std::uint64_t seed_or_env(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    if (const char* env = std::getenv("HAHNFIELD_SEED")) return std::stoull(env);
    return 0;
}

// `t^[..]`, `[..]` or a depth-1 `t^q`.
Exponent parse_bound(const std::string& text) {
    hahn::Expr e = hahn::parse(text);
    if (e.kind != hahn::Expr::Kind::monomial) throw hahn::DomainError("expected a monomial t^[...]: " + text);
    return e.exponent;
}

Exponent parse_exponent_arg(const std::string& text) {
    if (!text.empty() && text.front() == '[') return hahn::parse_exponent(text);
    return parse_bound(text);
}

struct ExprOptions {
    std::optional<std::size_t> depth;
    std::optional<std::string> prec;
};

std::pair<hahn::Expr, EvalContext> prepare(const std::string& text, const ExprOptions& opts) {
    hahn::Expr e = hahn::parse(text);
    std::optional<Exponent> prec;
    if (opts.prec) prec = parse_exponent_arg(*opts.prec);
    return {e, hahn::context_for(e, opts.depth, prec)};
}

Series eval_text(const std::string& text, const ExprOptions& opts) {
    auto [e, ctx] = prepare(text, opts);
    return hahn::eval_series(e, ctx);
}

void add_expr_options(CLI::App* cmd, ExprOptions& opts) {
    cmd->add_option("--depth", opts.depth, "Exponent group depth d (inferred from bracketed exponents)");
    cmd->add_option("--prec", opts.prec, "Horizon for exact divisions, e.g. t^[8,8]; default t^[8,...,8]");
}

void print_report(const std::string& json_text, bool passed, const std::string& summary) {
    std::cout << json_text << '\n';
    std::cerr << (passed ? "PASS " : "FAIL ") << summary << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in truncated generalized power series fields"};
    app.require_subcommand(1);
    int status = 0;

    // eval
    ExprOptions eval_opts;
    std::string eval_expr;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("expr", eval_expr)->required();
    add_expr_options(eval_cmd, eval_opts);
    eval_cmd->callback([&] {
        auto [e, ctx] = prepare(eval_expr, eval_opts);
        hahn::Value v = hahn::eval(e, ctx);
        std::cout << json{{"input", eval_expr}, {"depth", ctx.depth}, {"value", hahn::to_string(v)}}.dump() << '\n';
    });

    // floor
    ExprOptions floor_opts;
    std::string floor_expr;
    auto* floor_cmd = app.add_subcommand("floor", "Integer part r with r <= a < r + 1");
    floor_cmd->add_option("expr", floor_expr)->required();
    add_expr_options(floor_cmd, floor_opts);
    floor_cmd->callback([&] {
        Series a = eval_text(floor_expr, floor_opts);
        hahn::IntegerPartElement r = hahn::floor(a);
        std::cout << json{{"input", floor_expr},
                          {"neg", hahn::to_string(r.neg)},
                          {"const", r.constant.get_str()},
                          {"floor", hahn::to_string(r.as_series())}}
                         .dump()
                  << '\n';
    });

    // cmp
    ExprOptions cmp_opts;
    std::string cmp_a, cmp_b;
    auto* cmp_cmd = app.add_subcommand("cmp", "Compare two elements in the valuation-compatible order");
    cmp_cmd->add_option("a", cmp_a)->required();
    cmp_cmd->add_option("b", cmp_b)->required();
    add_expr_options(cmp_cmd, cmp_opts);
    cmp_cmd->callback([&] {
        auto c = hahn::compare(eval_text(cmp_a, cmp_opts), eval_text(cmp_b, cmp_opts));
        const char* word = c < 0 ? "less" : c > 0 ? "greater" : "equal";
        std::cout << json{{"a", cmp_a}, {"b", cmp_b}, {"ordering", word}}.dump() << '\n';
    });

    // val / coarsen / res
    ExprOptions val_opts;
    std::string val_expr;
    std::size_t val_level = 0;
    auto* val_cmd = app.add_subcommand("val", "Valuation of an element");
    val_cmd->add_option("expr", val_expr)->required();
    add_expr_options(val_cmd, val_opts);
    val_cmd->callback([&] {
        Series a = eval_text(val_expr, val_opts);
        std::cout << json{{"input", val_expr}, {"value", hahn::to_string(hahn::val(a))}}.dump() << '\n';
    });
    auto* coarsen_cmd = app.add_subcommand("coarsen", "Value under the coarsening of level j");
    coarsen_cmd->add_option("expr", val_expr)->required();
    coarsen_cmd->add_option("--level", val_level)->required();
    add_expr_options(coarsen_cmd, val_opts);
    coarsen_cmd->callback([&] {
        Series a = eval_text(val_expr, val_opts);
        hahn::CoarseValue cv = hahn::coarsen(a, {val_level});
        std::cout << json{{"input", val_expr},
                          {"level", val_level},
                          {"value", cv.is_infinite() ? "inf" : hahn::to_string(*cv.value)}}
                         .dump()
                  << '\n';
    });
    auto* res_cmd = app.add_subcommand("res", "Residue under the coarsening of level j");
    res_cmd->add_option("expr", val_expr)->required();
    res_cmd->add_option("--level", val_level)->required();
    add_expr_options(res_cmd, val_opts);
    res_cmd->callback([&] {
        Series a = eval_text(val_expr, val_opts);
        hahn::CoarseValue cv = hahn::coarsen(a, {val_level});
        std::cout << json{{"input", val_expr},
                          {"level", val_level},
                          {"value", cv.is_infinite() ? "inf" : hahn::to_string(*cv.value)},
                          {"residue", hahn::to_string(hahn::residue(a, {val_level}))}}
                         .dump()
                  << '\n';
    });

    // check
    std::string check_kind;
    std::size_t check_samples = 200;
    std::optional<std::uint64_t> check_seed;
    std::size_t check_depth = 1;
    auto* check_cmd = app.add_subcommand("check", "Run an integer-part or complement checker on seeded samples");
    check_cmd->add_option("kind", check_kind)
        ->required()
        ->check(CLI::IsMember({"integer-part", "weak-complement", "additive-complement"}));
    check_cmd->add_option("--samples", check_samples);
    check_cmd->add_option("--seed", check_seed);
    check_cmd->add_option("--depth", check_depth);
    check_cmd->callback([&] {
        const std::uint64_t seed = seed_or_env(check_seed);
        hahn::ComplementReport r = hahn::run_check(check_kind, check_samples, seed, check_depth);
        print_report(hahn::to_json(r, {{"samples", std::to_string(check_samples)},
                                       {"seed", std::to_string(seed)},
                                       {"depth", std::to_string(check_depth)}}),
                     r.passed(), check_kind + ": " + std::to_string(r.failures.size()) + " failures in " +
                                     std::to_string(r.sample_count) + " checks");
        if (!r.passed()) status = 1;
    });

    // scenario
    std::string scenario_name;
    long n_max = 6;
    std::size_t sc_depth = 3;
    std::optional<std::size_t> sc_samples;
    std::optional<std::uint64_t> sc_seed;
    auto* sc_cmd = app.add_subcommand("scenario", "Run a reproducible verification scenario");
    sc_cmd->add_option("name", scenario_name)
        ->required()
        ->check(CLI::IsMember({"psf-integer-part", "chain-counterexample", "quotient-field", "embdsrf"}));
    sc_cmd->add_option("--n-max", n_max, "Largest exponent denominator (psf-integer-part)");
    sc_cmd->add_option("--depth", sc_depth, "Exponent group depth");
    sc_cmd->add_option("--samples", sc_samples);
    sc_cmd->add_option("--seed", sc_seed);
    sc_cmd->callback([&] {
        const std::uint64_t seed = seed_or_env(sc_seed);
        hahn::ScenarioReport r;
        if (scenario_name == "psf-integer-part") r = hahn::scenario_psf_integer_part(n_max, sc_samples.value_or(200), seed);
        else if (scenario_name == "chain-counterexample")
            r = hahn::scenario_chain_counterexample(sc_depth, sc_samples.value_or(50), seed);
        else if (scenario_name == "quotient-field") r = hahn::scenario_quotient_field(sc_depth, sc_samples.value_or(100), seed);
        else r = hahn::scenario_embdsrf(sc_depth, sc_samples.value_or(100), seed);
        std::size_t failed = 0;
        for (const auto& a : r.assertions) failed += a.passed() ? 0 : 1;
        print_report(hahn::to_json(r), r.passed(),
                     r.id + ": " + std::to_string(r.assertions.size() - failed) + "/" +
                         std::to_string(r.assertions.size()) + " assertions passed in " +
                         std::to_string(r.duration_seconds) + " s");
        if (!r.passed()) status = 1;
    });

    // hensel
    std::string poly_text, residue_root, target_text = "t^[8]";
    std::optional<std::size_t> hensel_depth;
    auto* hensel_cmd = app.add_subcommand("hensel", "Lift a simple residue root by Newton iteration");
    hensel_cmd->add_option("--poly", poly_text, "Polynomial in X, e.g. X^2-(1+t)")->required();
    hensel_cmd->add_option("--residue-root", residue_root)->required();
    hensel_cmd->add_option("--target", target_text, "Target precision t^[...]");
    hensel_cmd->add_option("--depth", hensel_depth);
    hensel_cmd->callback([&] {
        Exponent target = parse_exponent_arg(target_text);
        hahn::Expr e = hahn::parse(poly_text);
        EvalContext ctx = hahn::context_for(e, hensel_depth ? hensel_depth : std::optional<std::size_t>(target.depth()), target);
        hahn::Poly f = hahn::eval_poly(e, ctx);
        hahn::LiftResult r = hahn::hensel_lift(f, hahn::parse_rational(residue_root), target);
        std::cout << json{{"poly", hahn::to_string(f)},
                          {"residue_root", residue_root},
                          {"target", hahn::to_string(target)},
                          {"root", hahn::to_string(r.root)},
                          {"iterations", r.iterations},
                          {"achieved", hahn::to_string(r.achieved)}}
                         .dump()
                  << '\n';
    });

    // root
    long root_q = 2;
    std::string root_of, root_target = "t^[8]";
    auto* root_cmd = app.add_subcommand("root", "q-th root of a 1-unit");
    root_cmd->add_option("--q", root_q)->required();
    root_cmd->add_option("--of", root_of)->required();
    root_cmd->add_option("--target", root_target);
    root_cmd->callback([&] {
        Exponent target = parse_exponent_arg(root_target);
        ExprOptions opts{target.depth(), std::nullopt};
        Series u = eval_text(root_of, opts);
        Series r = hahn::unit_root(u, root_q, target);
        std::cout << json{{"of", root_of}, {"q", root_q}, {"root", hahn::to_string(r)}}.dump() << '\n';
    });

    // embdsrf
    std::string emb_a, emb_gamma;
    std::size_t emb_level = 0;
    auto* emb_cmd = app.add_subcommand("embdsrf", "Approximate a by an element supported in Gamma_j");
    emb_cmd->add_option("--a", emb_a)->required();
    emb_cmd->add_option("--gamma", emb_gamma)->required();
    emb_cmd->add_option("--level", emb_level)->required();
    emb_cmd->callback([&] {
        Exponent gamma = parse_exponent_arg(emb_gamma);
        Series a = eval_text(emb_a, ExprOptions{gamma.depth(), std::nullopt});
        hahn::DensityTrace tr = hahn::embdsrf_trace(a, gamma, {emb_level});
        std::cout << json{{"a", hahn::to_string(a)},
                          {"gamma", hahn::to_string(gamma)},
                          {"c", hahn::to_string(tr.c)},
                          {"r", hahn::to_string(tr.r)},
                          {"b", hahn::to_string(tr.b)},
                          {"gap", hahn::to_string(hahn::density_gap(a, tr.b))}}
                         .dump()
                  << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const hahn::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
