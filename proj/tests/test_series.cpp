#include "hahn/errors.hpp"
#include "hahn/sampling.hpp"
#include "hahn/series.hpp"
#include "hahn/valuation.hpp"
#include "printers.hpp"

#include <doctest.h>

using namespace hahn;
using namespace hahn::testing;

namespace {

Series mono(long c, std::initializer_list<long> g) { return Series::monomial(Rational(c), Exponent::of(g)); }

}  // namespace

TEST_CASE("construction normalizes") {
    Series s(1, {{Exponent::of({2}), 1}, {Exponent::of({0}), 3}, {Exponent::of({2}), -1}, {Exponent::of({5}), 4}},
             Exponent::of({5}));
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0] == Term{Exponent::of({0}), 3});
    CHECK(s.prec() == Exponent::of({5}));
    CHECK_THROWS_AS(Series(1, {{Exponent::of({1, 0}), 1}}), DepthMismatch);
    CHECK_THROWS_AS(s.coefficient(Exponent::of({5})), Indeterminate);
    CHECK(s.coefficient(Exponent::of({2})) == 0);
}

TEST_CASE("addition") {
    CHECK(S("1 + t") + S("-1") == mono(1, {1}));
    CHECK((S("1 + t") + S("-1")).is_exact());
    Series a = Series(1, {{Exponent::of({0}), 1}, {Exponent::of({1}), 1}}, Exponent::of({2}));
    Series sum = a + mono(1, {2});
    CHECK(sum == a);
    CHECK(to_string(sum) == "1 + t^[1] mod t^[2]");
    Series z = a + s_neg(a);
    CHECK(z.terms().empty());
    CHECK(z.prec() == Exponent::of({2}));
    CHECK_THROWS_AS(S("1") + Series::constant(1, 2), DepthMismatch);
}

TEST_CASE("multiplication") {
    CHECK(S("t^(1/2) * t^(1/2)") == mono(1, {1}));
    Series a(1, {{Exponent::of({0}), 1}, {Exponent::of({1}), 1}}, Exponent::of({3}));
    Series b(1, {{Exponent::of({0}), 1}, {Exponent::of({1}), -1}}, Exponent::of({3}));
    CHECK(to_string(a * b) == "1 - t^[2] mod t^[3]");
    CHECK((Series::zero(1) * a).is_exact_zero());
    CHECK((a * Series::zero(1)).is_exact_zero());
    // prec = min(prec_a + v(b), prec_b + v(a))
    Series c(1, {{Exponent::of({-2}), 1}}, Exponent::of({1}));
    CHECK((a * c).prec() == Exponent::of({1}));
}

TEST_CASE("inversion") {
    CHECK(to_string(s_invert(S("1 + t"), Exponent::of({3}))) == "1 - t^[1] + t^[2] mod t^[3]");
    CHECK(to_string(s_invert(S("t^-1 + 1"), Exponent::of({2}))) == "t^[1] mod t^[2]");
    CHECK(s_invert(S("4")) == Series::constant(make_rational(1, 4), 1));
    CHECK(s_invert(S("4")).is_exact());
    CHECK(s_invert(mono(-2, {0, 3})) == Series::monomial(make_rational(-1, 2), Exponent::of({0, -3})));
    CHECK_THROWS_AS(s_invert(Series::zero(1)), DomainError);
    CHECK_THROWS_AS(s_invert(Series::zero_mod(Exponent::of({5}))), Indeterminate);
    CHECK_THROWS_AS(s_invert(S("1 + t")), DomainError);
    // prec_a - 2 v(a)
    Series a(1, {{Exponent::of({-1}), 1}, {Exponent::of({0}), 1}}, Exponent::of({2}));
    CHECK(s_invert(a).prec() == Exponent::of({4}));
    // corrections in a less significant class never reach the precision
    CHECK_THROWS_AS(s_invert(S("1 + t^[0,1]"), Exponent::of({1, 0})), PrecisionError);
}

TEST_CASE("leading and truncate") {
    CHECK(leading(S("t^(1/2) + t")) == Term{Exponent{make_rational(1, 2)}, 1});
    CHECK(leading(S("-3 + t")) == Term{Exponent::of({0}), -3});
    CHECK_THROWS_AS(leading(Series::zero_mod(Exponent::of({5}))), Indeterminate);
    CHECK_THROWS_AS(leading(Series::zero(1)), DomainError);
    CHECK(to_string(truncate(S("1 + t + t^2"), Exponent::of({2}))) == "1 + t^[1] mod t^[2]");
    CHECK(truncate(Series::zero(1), Exponent::of({7})).terms().empty());
}

TEST_CASE("support profile") {
    auto p = support_profile(S("t^[1,0] + t^[0,1]"));
    CHECK(p.min_exponent == ValResult(Exponent::of({0, 1})));
    CHECK(p.levels_touched == std::set<std::size_t>{0, 1});
    auto z = support_profile(Series::zero(2));
    CHECK(z.min_exponent.is_infinite());
    CHECK(z.levels_touched.empty());
    auto m = support_profile(S("t^[0,-5]"));
    CHECK(m.min_exponent == ValResult(Exponent::of({0, -5})));
    CHECK(m.levels_touched == std::set<std::size_t>{1});
    CHECK(!support_profile(Series::zero_mod(Exponent::of({0, 1}))).min_exponent.is_infinite());
}

TEST_CASE("s_pow and s_div") {
    CHECK(s_pow(S("1 + t"), 3) == S("1 + 3*t + 3*t^2 + t^3"));
    CHECK(s_pow(S("t^2"), -2) == S("t^-4"));
    CHECK(s_pow(S("7"), 0) == S("1"));
    CHECK(agree_mod(s_div(S("1"), S("1 - t"), Exponent::of({4})), S("1 + t + t^2 + t^3 mod t^4")));
}

TEST_CASE("property: ring axioms mod precision") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            sampling::Rng rng(21, d, i);
            Series a = sampling::series(rng, d), b = sampling::series(rng, d), c = sampling::series(rng, d);
            CHECK(agree_mod(a + b, b + a));
            CHECK(agree_mod((a + b) + c, a + (b + c)));
            CHECK(agree_mod(a * b, b * a));
            CHECK(agree_mod((a * b) * c, a * (b * c)));
            CHECK(agree_mod(a * (b + c), a * b + a * c));
            CHECK(agree_mod(a + Series::zero(d), a));
            CHECK(agree_mod(a * Series::constant(1, d), a));
            CHECK((a - a).terms().empty());
        }
    }
}

TEST_CASE("property: widen-and-truncate reproduces every operation") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            sampling::Rng rng(22, d, i);
            Series a = sampling::series(rng, d), b = sampling::series(rng, d);
            Series wa = widen(a, rng), wb = widen(b, rng);
            CHECK(matches_widened(a + b, naive_add(wa, wb)));
            CHECK(matches_widened(a * b, naive_mul(wa, wb)));
            CHECK(matches_widened(s_neg(a), wa.scaled(-1)));
        }
    }
}

TEST_CASE("property: inversion multiplies back to one") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            sampling::Rng rng(23, d, i);
            auto [a, target] = sampling::invertible(rng, d);
            Series inv = s_invert(a, target);
            CHECK(agree_mod(a * inv, Series::constant(1, d)));
            if (inv.is_exact()) {
                CHECK(a * inv == Series::constant(1, d));
                continue;
            }
            // result precision is exactly prec_a - 2 v(a) for inexact inputs
            if (a.prec()) CHECK(*inv.prec() == *a.prec() - exp_scale(val(a).exponent(), 2));
            // widen the inverse input: the known prefix of the inverse cannot change
            Series wa = widen(a, rng);
            Series winv = s_invert(wa, *inv.prec());
            CHECK(truncate(winv, *inv.prec()).terms() == inv.terms());
        }
    }
}

TEST_CASE("property: truncation is a density witness") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            sampling::Rng rng(24, d, i);
            Series a = sampling::series(rng, d);
            Exponent pi = sampling::exponent_in(rng, d, 0, 8);
            if (a.prec() && *a.prec() < pi) continue;
            Series diff = a - truncate(a, pi);
            CHECK(val_at_least(diff, ValResult(pi)));
        }
    }
}

TEST_CASE("property: value of a product") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            sampling::Rng rng(25, d, i);
            Series a = sampling::series(rng, d), b = sampling::series(rng, d);
            if (!a.has_known_leading() || !b.has_known_leading()) continue;
            CHECK(val(a * b) == val(a) + val(b));
        }
    }
}

TEST_CASE("property: stored terms stay sorted, nonzero, below prec") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        sampling::Rng rng(26, 0, i);
        Series a = sampling::series(rng, 2), b = sampling::series(rng, 2);
        for (const Series& s : {a + b, a * b, a - b}) {
            for (std::size_t k = 0; k < s.terms().size(); ++k) {
                CHECK(s.terms()[k].coeff != 0);
                if (k > 0) CHECK(s.terms()[k - 1].exp < s.terms()[k].exp);
                if (s.prec()) CHECK(s.terms()[k].exp < *s.prec());
            }
            auto p = support_profile(s);
            CHECK(p.min_exponent.is_infinite() == s.is_exact_zero());
        }
    }
}
