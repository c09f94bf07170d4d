#include "hahn/errors.hpp"
#include "hahn/hensel.hpp"
#include "hahn/sampling.hpp"
#include "hahn/valuation.hpp"
#include "printers.hpp"

#include <doctest.h>

#include <set>

using namespace hahn;
using namespace hahn::testing;

namespace {

Poly P(const std::string& text, std::optional<std::size_t> depth = std::nullopt) {
    Expr e = parse(text);
    return eval_poly(e, context_for(e, depth, std::nullopt));
}

// (1 + t)^(1/q) by the binomial series, cut at t^n
Series binomial_root(long q, long n) {
    std::vector<Term> terms;
    Rational c = 1;
    for (long k = 0; k < n; ++k) {
        terms.push_back({Exponent::of({k}), c});
        c = c * (Rational(1, q) - k) / (k + 1);
    }
    return Series(1, std::move(terms), Exponent::of({n}));
}

}  // namespace

TEST_CASE("polynomials") {
    Poly f = P("X^2 - (1 + t)");
    CHECK(f.degree() == 2);
    CHECK(poly_derive(f) == P("2*X"));
    CHECK(poly_eval(f, S("1")) == S("-t"));
    CHECK(Poly({S("1"), Series::zero(1)}).degree() == 0);
    CHECK(Poly().degree() == -1);
}

TEST_CASE("square root of 1 + t") {
    auto res = hensel_lift(P("X^2 - (1 + t)"), 1, E("[3]"));
    CHECK(to_string(res.root) == "1 + 1/2*t^[1] - 1/8*t^[2] mod t^[3]");
    CHECK(res.iterations <= 2);
    CHECK(res.achieved >= ValResult(E("[3]")));
    CHECK(val_at_least(poly_eval(P("X^2 - (1 + t)"), res.root), ValResult(E("[3]"))));
    auto neg = hensel_lift(P("X^2 - (1 + t)"), -1, E("[3]"));
    CHECK(neg.root == -res.root);
}

TEST_CASE("depth-2 cube root") {
    auto res = hensel_lift(P("X^3 - (1 + t^[0,1])"), 1, E("[0,3]"));
    CHECK(to_string(res.root) == "1 + 1/3*t^[0,1] - 1/9*t^[0,2] mod t^[0,3]");
    CHECK(agree_mod(s_pow(res.root, 3), S("1 + t^[0,1] mod t^[0,3]")));
}

TEST_CASE("lift preconditions") {
    CHECK_THROWS_AS(hensel_lift(P("X^2 - (1 + t)"), 2, E("[3]")), DomainError);
    CHECK_THROWS_AS(hensel_lift(P("(X - 1)^2"), 1, E("[3]")), DomainError);
    CHECK_THROWS_AS(hensel_lift(P("X^2 - t^-1"), 1, E("[3]")), DomainError);
    CHECK_THROWS_AS(hensel_lift(P("X^2 - (1 + t)"), 1, E("[-1]")), DomainError);
    CHECK_THROWS_AS(hensel_lift(P("X^2 - (1 + t mod t^2)"), 1, E("[3]")), PrecisionError);
    // corrections in the least significant class cannot reach a class-0 target
    CHECK_THROWS_AS(hensel_lift(P("X^2 - (1 + t^[0,1])"), 1, E("[1,0]")), PrecisionError);
}

TEST_CASE("unit roots match the binomial series") {
    for (long q : {2L, 3L, 5L}) {
        Series r = unit_root(S("1 + t"), q, E("[16]"));
        CHECK(r == binomial_root(q, 16));
        CHECK(agree_mod(s_pow(r, q), S("1 + t")));
    }
    CHECK(unit_root(S("1 + t"), 1, E("[16]")) == S("1 + t"));
    CHECK_THROWS_AS(unit_root(S("2 + t"), 2, E("[4]")), DomainError);
    CHECK_THROWS_AS(unit_root(S("t + t^2"), 2, E("[4]")), DomainError);
    CHECK_THROWS_AS(unit_root(S("1 + t"), 0, E("[4]")), DomainError);
}

TEST_CASE("property: Newton converges quadratically and to a unique root") {
    for (long q : {2L, 3L, 5L}) {
        std::vector<Series> c(static_cast<std::size_t>(q) + 1, Series::zero(1));
        c[0] = S("-1 - t");
        c.back() = S("1");
        Poly f(c);
        auto res = hensel_lift(f, 1, E("[16]"));
        CHECK(res.iterations <= 5);
        // precision doubles each step: 1, 2, 4, 8, 16
        for (std::uint64_t i = 0; i < 20; ++i) {
            sampling::Rng rng(51, static_cast<std::uint64_t>(q), i);
            // any start congruent to 1 modulo the maximal ideal lands on the same root
            Series start = S("1") + Series::monomial(sampling::nonzero_rational(rng, 5), Exponent::of({rng.uniform(1, 3)}));
            auto other = hensel_refine(f, start, E("[16]"));
            CHECK(agree_mod(other.root, res.root));
        }
    }
}

TEST_CASE("property: random simple roots lift") {
    for (std::uint64_t i = 0; i < 60; ++i) {
        sampling::Rng rng(52, 0, i);
        const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
        // f = (X - zeta)(X - eta) + eps with zeta != eta residues and v(eps) > 0
        Rational zeta = sampling::rational(rng, 6), eta = zeta + sampling::nonzero_rational(rng, 6);
        Series eps = Series::monomial(sampling::nonzero_rational(rng, 6), Exponent::unit(d, d));
        Series a0 = Series::constant(zeta * eta, d) + eps;
        Series a1 = Series::constant(-(zeta + eta), d);
        Poly f({a0, a1, Series::constant(1, d)});
        Exponent target = exp_scale(Exponent::unit(d, d), rng.uniform(2, 10));
        auto res = hensel_lift(f, zeta, target);
        CHECK(val_at_least(poly_eval(f, res.root), ValResult(target)));
        CHECK(residue(res.root, {d}) == Series::constant(zeta, 0));
    }
}

TEST_CASE("root values and generated subgroups") {
    CHECK(root_value(E("[1,3]"), 3) == E("[1/3,1]"));
    CHECK(in_generated_subgroup(E("[2]"), {E("[1]")}));
    CHECK(!in_generated_subgroup(E("[1/5]"), {E("[1]")}));
    CHECK(in_generated_subgroup(E("[1/6]"), {E("[1/2]"), E("[1/3]")}));
    CHECK(in_generated_subgroup(Exponent::zero(2), {}));
    CHECK(!in_generated_subgroup(E("[1,0]"), {E("[0,1]")}));
    CHECK(in_generated_subgroup(E("[1,1]"), {E("[1,0]"), E("[1,-1]"), E("[0,2]")}));
}

TEST_CASE("property: generated-subgroup membership agrees with direct solving") {
    auto q = [](sampling::Rng& rng) { return make_rational(rng.uniform(-4, 4), rng.uniform(1, 3)); };
    for (std::uint64_t i = 0; i < 300; ++i) {
        sampling::Rng rng(53, 0, i);
        Exponent u{q(rng), q(rng)}, w{q(rng), q(rng)};
        // integer combinations are members
        const long a = rng.uniform(-9, 9), b = rng.uniform(-9, 9);
        Exponent member = Exponent::zero(2);
        if (a) member = member + exp_scale(u, a);
        if (b) member = member + exp_scale(w, b);
        CHECK(in_generated_subgroup(member, {u, w}));
        // independent generators: Cramer's rule gives the unique rational coefficients
        Rational det = u[0] * w[1] - u[1] * w[0];
        if (det == 0) continue;
        Exponent g{make_rational(rng.uniform(-6, 6), rng.uniform(1, 6)), make_rational(rng.uniform(-6, 6), rng.uniform(1, 6))};
        Rational x = (g[0] * w[1] - g[1] * w[0]) / det;
        Rational y = (u[0] * g[1] - u[1] * g[0]) / det;
        CHECK(in_generated_subgroup(g, {u, w}) == (is_integer(x) && is_integer(y)));
    }
}
