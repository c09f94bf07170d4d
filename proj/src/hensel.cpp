#include "hahn/hensel.hpp"

#include "hahn/errors.hpp"
#include "hahn/valuation.hpp"

#include <algorithm>

namespace hahn {

namespace {

constexpr int kMaxNewtonSteps = 64;

Rational eval_rational(const std::vector<Rational>& c, const Rational& x) {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

Poly::Poly(std::vector<Series> coeffs) : coeffs_(std::move(coeffs)) {
    if (!coeffs_.empty()) depth_ = coeffs_.front().depth();
    for (const auto& c : coeffs_)
        if (c.depth() != depth_) throw DepthMismatch("polynomial coefficients of mixed depth");
    while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

Series poly_eval(const Poly& f, const Series& z) {
    if (f.degree() < 0) return Series::zero(z.depth());
    if (f.depth() != z.depth()) throw DepthMismatch("poly_eval: argument depth does not match coefficients");
    const auto& c = f.coeffs();
    Series acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = s_add(s_mul(acc, z), c[i]);
    return acc;
}

Poly poly_derive(const Poly& f) {
    std::vector<Series> out;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        out.push_back(f.coeffs()[i].scaled(Rational(static_cast<long>(i))));
    if (out.empty()) return Poly(std::vector<Series>{Series::zero(f.depth())});
    return Poly(std::move(out));
}

std::string to_string(const Poly& f) {
    std::string s;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Series& c = f.coeffs()[i];
        if (c.is_exact_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")";
        if (i >= 1) s += "*X";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace {

// Newton iteration from z, stopping once val(f(z)) >= target.
LiftResult newton(const Poly& f, Series z, const Exponent& target) {
    const Poly fprime = poly_derive(f);
    LiftResult out{z, 0, ValResult::infinity()};
    for (;;) {
        Series fz = poly_eval(f, z);
        if (val_at_least(fz, target)) {
            out.root = std::move(z);
            out.achieved = fz.lower_bound();
            return out;
        }
        if (!fz.has_known_leading())
            throw PrecisionError("hensel: coefficient precision " + to_string(*fz.prec()) + " cannot reach target " +
                                 to_string(target));
        const Exponent residual = fz.terms().front().exp;
        if (!multiples_to_reach(residual, target))
            throw PrecisionError("hensel: target " + to_string(target) +
                                 " lies beyond the archimedean class of the residual value " + to_string(residual));
        if (out.iterations >= kMaxNewtonSteps) throw PrecisionError("hensel: iteration limit reached");
        Series correction = s_div(fz, poly_eval(fprime, z), target);
        z = truncate(s_sub(z, correction), target);
        ++out.iterations;
    }
}

}  // namespace

LiftResult hensel_lift(const Poly& f, const Rational& zeta, const Exponent& target) {
    const std::size_t d = f.depth();
    if (target.depth() != d) throw DepthMismatch("hensel: target depth does not match polynomial");
    const Exponent zero = Exponent::zero(d);
    if (!(target > zero)) throw DomainError("hensel: target must be positive");
    if (f.degree() < 1) throw DomainError("hensel: polynomial must have positive degree");

    std::vector<Rational> residue_poly;
    for (const auto& c : f.coeffs()) {
        if (!val_at_least(c, zero)) throw DomainError("hensel: coefficient " + to_string(c) + " is not integral");
        if (c.prec() && *c.prec() <= zero)
            throw PrecisionError("hensel: residue of coefficient " + to_string(c) + " unknown");
        residue_poly.push_back(c.is_exact_zero() ? Rational(0) : c.coefficient(zero));
    }
    if (sgn(eval_rational(residue_poly, zeta)) != 0)
        throw DomainError("hensel: " + to_string(zeta) + " is not a root of the residue polynomial");
    std::vector<Rational> residue_derivative;
    for (std::size_t i = 1; i < residue_poly.size(); ++i)
        residue_derivative.push_back(residue_poly[i] * static_cast<long>(i));
    if (sgn(eval_rational(residue_derivative, zeta)) == 0)
        throw DomainError("hensel: residue root " + to_string(zeta) + " is not simple");

    return newton(f, Series::constant(zeta, d), target);
}

LiftResult hensel_refine(const Poly& f, const Series& z0, const Exponent& target) {
    if (target.depth() != f.depth() || z0.depth() != f.depth()) throw DepthMismatch("hensel: depth mismatch");
    return newton(f, z0, target);
}

Series unit_root(const Series& u, long q, const Exponent& target) {
    if (q < 1) throw DomainError("unit_root: q must be positive");
    const Exponent zero = Exponent::zero(u.depth());
    if (val(u) != ValResult(zero) || residue(u, ConvexLevel{u.depth()}).coefficient(Exponent()) != 1)
        throw DomainError("unit_root: " + to_string(u) + " is not a 1-unit");
    if (q == 1) return u;
    std::vector<Series> coeffs(static_cast<std::size_t>(q) + 1, Series::zero(u.depth()));
    coeffs.front() = s_neg(u);
    coeffs.back() = Series::constant(Rational(1), u.depth());
    return hensel_lift(Poly(std::move(coeffs)), Rational(1), target).root;
}

Exponent root_value(const Exponent& y_val, long q) {
    if (q < 1) throw DomainError("root_value: q must be positive");
    return exp_div(y_val, q);
}

bool in_generated_subgroup(const Exponent& g, const std::vector<Exponent>& generators) {
    const std::size_t d = g.depth();
    Integer scale(1);
    auto absorb = [&](const Exponent& e) {
        if (e.depth() != d) throw DepthMismatch("subgroup membership: mixed depths");
        for (const auto& c : e.coords()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    };
    absorb(g);
    for (const auto& e : generators) absorb(e);
    auto to_int = [&](const Exponent& e) {
        std::vector<Integer> v(d);
        for (std::size_t i = 0; i < d; ++i) {
            Rational x = e[i] * Rational(scale);
            v[i] = x.get_num();
        }
        return v;
    };
    std::vector<std::vector<Integer>> rows;
    for (const auto& e : generators) rows.push_back(to_int(e));
    std::vector<Integer> target = to_int(g);

    // Row echelon form over Z by repeated Euclidean reduction per column.
    std::size_t pivot = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < d && pivot < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            if (best == rows.size()) break;
            bool reduced = false;
            for (std::size_t r = pivot; r < rows.size(); ++r) {
                if (r == best || rows[r][col] == 0) continue;
                Integer q = rows[r][col] / rows[best][col];
                for (std::size_t k = 0; k < d; ++k) rows[r][k] -= q * rows[best][k];
                reduced = true;
            }
            if (!reduced) {
                std::swap(rows[pivot], rows[best]);
                pivot_cols.push_back(col);
                ++pivot;
                break;
            }
        }
    }
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        const std::size_t col = pivot_cols[r];
        for (std::size_t c = 0; c < col; ++c)
            if (target[c] != 0) return false;
        if (target[col] % rows[r][col] != 0) return false;
        Integer q = target[col] / rows[r][col];
        for (std::size_t k = 0; k < d; ++k) target[k] -= q * rows[r][k];
    }
    return std::all_of(target.begin(), target.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace hahn
