#include "hahn/series.hpp"

#include "hahn/errors.hpp"

#include <algorithm>
#include <map>

namespace hahn {

namespace {

void require_same_depth(const Series& a, const Series& b, const char* op) {
    if (a.depth() != b.depth())
        throw DepthMismatch(std::string(op) + ": series of depth " + std::to_string(a.depth()) + " and " +
                            std::to_string(b.depth()));
}

// Minimum of two precisions, nullopt standing for +infinity.
std::optional<Exponent> min_prec(const std::optional<Exponent>& a, const std::optional<Exponent>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

bool below(const Exponent& g, const std::optional<Exponent>& prec) { return !prec || g < *prec; }

// Product of two finite term lists, dropping exponents at or beyond bound.
std::vector<Term> multiply_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                 const std::optional<Exponent>& bound) {
    std::map<Exponent, Rational> acc;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Exponent g = x.exp + y.exp;
            // terms of b are increasing, so every later product is also out of range
            if (!below(g, bound)) break;
            acc[g] += x.coeff * y.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [g, c] : acc)
        if (sgn(c) != 0) out.push_back({g, c});
    return out;
}

}  // namespace

Series::Series(std::size_t depth, std::vector<Term> terms, std::optional<Exponent> prec)
    : depth_(depth), prec_(std::move(prec)) {
    if (prec_ && prec_->depth() != depth_) throw DepthMismatch("precision depth does not match series depth");
    for (const auto& t : terms)
        if (t.exp.depth() != depth_) throw DepthMismatch("term depth does not match series depth");
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
    for (auto& t : terms) {
        if (!below(t.exp, prec_)) break;
        if (!terms_.empty() && terms_.back().exp == t.exp) {
            terms_.back().coeff += t.coeff;
            if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
        } else if (sgn(t.coeff) != 0) {
            terms_.push_back(std::move(t));
        }
    }
    for (auto& t : terms_) t.coeff.canonicalize();
}

Series Series::constant(const Rational& c, std::size_t depth) {
    return Series(depth, {Term{Exponent::zero(depth), c}});
}

Series Series::monomial(const Rational& c, const Exponent& g) { return Series(g.depth(), {Term{g, c}}); }

Rational Series::coefficient(const Exponent& g) const {
    if (g.depth() != depth_) throw DepthMismatch("coefficient: exponent depth does not match series");
    if (!below(g, prec_))
        throw Indeterminate("coefficient at " + to_string(g) + " lies beyond precision " + to_string(*prec_));
    auto it = std::lower_bound(terms_.begin(), terms_.end(), g, [](const Term& t, const Exponent& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == g) return it->coeff;
    return Rational(0);
}

ValResult Series::lower_bound() const {
    if (!terms_.empty()) return terms_.front().exp;
    if (prec_) return *prec_;
    return ValResult::infinity();
}

Series Series::filter(const std::function<bool(const Exponent&)>& pred) const {
    std::vector<Term> kept;
    for (const auto& t : terms_)
        if (pred(t.exp)) kept.push_back(t);
    return Series(depth_, std::move(kept), prec_);
}

Series Series::shifted(const Exponent& g) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exp + g, t.coeff});
    std::optional<Exponent> p;
    if (prec_) p = *prec_ + g;
    return Series(depth_, std::move(out), std::move(p));
}

Series Series::scaled(const Rational& c) const {
    if (sgn(c) == 0) return prec_ ? Series(depth_, {}, prec_) : Series(depth_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff *= c;
    return Series(depth_, std::move(out), prec_);
}

Series Series::with_prec(std::optional<Exponent> prec) const { return Series(depth_, terms_, std::move(prec)); }

bool operator==(const Series& a, const Series& b) {
    if (a.depth_ != b.depth_ || a.terms_ != b.terms_) return false;
    if (a.prec_.has_value() != b.prec_.has_value()) return false;
    return !a.prec_ || *a.prec_ == *b.prec_;
}

Series s_add(const Series& a, const Series& b) {
    require_same_depth(a, b, "add");
    std::vector<Term> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return Series(a.depth(), std::move(all), min_prec(a.prec(), b.prec()));
}

Series s_neg(const Series& a) { return a.scaled(Rational(-1)); }

Series s_sub(const Series& a, const Series& b) { return s_add(a, s_neg(b)); }

Series s_mul(const Series& a, const Series& b) {
    require_same_depth(a, b, "mul");
    if (a.is_exact_zero() || b.is_exact_zero()) return Series::zero(a.depth());
    // prec = min(prec_a + v(b), prec_b + v(a)), valuations bounded below
    // by the precision when no term is known.
    std::optional<Exponent> prec;
    if (a.prec()) prec = *a.prec() + b.lower_bound().exponent();
    if (b.prec()) prec = min_prec(prec, *b.prec() + a.lower_bound().exponent());
    return Series(a.depth(), multiply_terms(a.terms(), b.terms(), prec), prec);
}

Series s_invert(const Series& a, const std::optional<Exponent>& target) {
    if (a.is_exact_zero()) throw DomainError("inverse of zero");
    if (!a.has_known_leading())
        throw Indeterminate("inverse: leading term unknown below precision " + to_string(*a.prec()));
    const std::size_t d = a.depth();
    const Term lead = a.terms().front();
    const Exponent& h = lead.exp;
    const Rational c_inv = 1 / lead.coeff;

    // a = c t^h (1 + eps), eps with positive support.
    std::vector<Term> eps;
    for (std::size_t i = 1; i < a.terms().size(); ++i) {
        const auto& t = a.terms()[i];
        eps.push_back({t.exp - h, t.coeff * c_inv});
    }
    if (a.is_exact() && eps.empty()) return Series::monomial(c_inv, -h);

    Exponent result_prec;
    if (a.prec()) {
        result_prec = *a.prec() - h - h;
    } else {
        if (!target) throw DomainError("inverse of an exact non-monomial needs a target precision");
        if (target->depth() != d) throw DepthMismatch("inverse: target depth does not match series");
        result_prec = *target;
    }
    // relative precision of the geometric sum
    const Exponent rel = result_prec + h;
    const Exponent zero = Exponent::zero(d);

    std::vector<Term> sum;
    if (rel > zero) {
        std::vector<Term> eps_kept;
        for (const auto& t : eps)
            if (t.exp < rel) eps_kept.push_back(t);
        sum.push_back({zero, Rational(1)});
        if (!eps_kept.empty()) {
            if (!multiples_to_reach(eps_kept.front().exp, rel))
                throw PrecisionError("inverse: correction of value " + to_string(eps_kept.front().exp) +
                                     " is infinitesimal relative to precision " + to_string(rel) +
                                     "; the geometric series does not terminate");
            std::vector<Term> minus_eps = eps_kept;
            for (auto& t : minus_eps) t.coeff = -t.coeff;
            std::vector<Term> power = {{zero, Rational(1)}};
            while (true) {
                power = multiply_terms(power, minus_eps, rel);
                if (power.empty()) break;
                sum.insert(sum.end(), power.begin(), power.end());
            }
        }
    }
    Series s(d, std::move(sum), rel);
    return s.shifted(-h).scaled(c_inv);
}

Series s_div(const Series& a, const Series& b, const std::optional<Exponent>& target) {
    require_same_depth(a, b, "div");
    return s_mul(a, s_invert(b, target));
}

Series s_pow(const Series& a, long n, const std::optional<Exponent>& target) {
    if (n < 0) return s_pow(s_invert(a, target), -n, target);
    Series result = Series::constant(Rational(1), a.depth());
    Series base = a;
    auto e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1U) result = s_mul(result, base);
        e >>= 1U;
        if (e) base = s_mul(base, base);
    }
    return result;
}

Term leading(const Series& a) {
    if (a.is_exact_zero()) throw DomainError("leading term of zero");
    if (!a.has_known_leading())
        throw Indeterminate("leading term unknown below precision " + to_string(*a.prec()));
    return a.terms().front();
}

Series truncate(const Series& a, const Exponent& bound) {
    if (bound.depth() != a.depth()) throw DepthMismatch("truncate: bound depth does not match series");
    return a.with_prec(min_prec(a.prec(), bound));
}

bool val_at_least(const Series& a, const ValResult& bound) { return a.lower_bound() >= bound; }

SupportProfile support_profile(const Series& a) {
    SupportProfile p{a.lower_bound(), {}};
    for (const auto& t : a.terms()) p.levels_touched.insert(t.exp.leading_zeros());
    return p;
}

std::string to_string(const Series& a) {
    std::string s;
    for (const auto& t : a.terms()) {
        Rational c = t.coeff;
        if (s.empty()) {
            if (sgn(c) < 0) s += "-";
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        c = abs(c);
        if (t.exp.is_zero()) {
            s += to_string(c);
        } else {
            if (c != 1) s += to_string(c) + "*";
            s += "t^" + to_string(t.exp);
        }
    }
    if (s.empty()) s = "0";
    if (a.prec()) s += " mod t^" + to_string(*a.prec());
    return s;
}

}  // namespace hahn
