#include "hahn/valuation.hpp"

#include "hahn/errors.hpp"

namespace hahn {

ValResult val(const Series& a) {
    if (a.is_exact_zero()) return ValResult::infinity();
    return leading(a).exp;
}

CoarseValue coarsen(const Series& a, ConvexLevel level) {
    if (level.j > a.depth()) throw DomainError("coarsen: level exceeds depth");
    ValResult v = val(a);
    if (v.is_infinite()) return {std::nullopt, level};
    return {project(v.exponent(), level), level};
}

Series residue(const Series& a, ConvexLevel level) {
    const std::size_t d = a.depth();
    if (level.j > d) throw DomainError("residue: level exceeds depth");
    const std::size_t rd = d - level.j;
    if (a.is_exact_zero()) return Series::zero(rd);

    CoarseValue cv = coarsen(a, level);
    const Exponent coarse_zero = Exponent::zero(level.j);
    if (*cv.value < coarse_zero)
        throw DomainError("residue: " + to_string(a) + " lies outside the valuation ring of level " +
                          std::to_string(level.j));

    // Precision in the residue field: all of Gamma_j is known once prec
    // projects above zero; a prec inside Gamma_j carries over re-indexed.
    std::optional<Exponent> rprec;
    if (a.prec() && project(*a.prec(), level) == coarse_zero) rprec = tail(*a.prec(), level);
    if (*cv.value > coarse_zero) return rprec ? Series::zero_mod(*rprec) : Series::zero(rd);

    std::vector<Term> kept;
    for (const auto& t : a.terms())
        if (in_subgroup(t.exp, level)) kept.push_back({tail(t.exp, level), t.coeff});
    return Series(rd, std::move(kept), std::move(rprec));
}

bool compose_check(const Series& a, ConvexLevel level) {
    try {
        ValResult v = val(a);
        if (v.is_infinite()) return false;
        CoarseValue cv = coarsen(a, level);
        Exponent lifted = lift(*cv.value, a.depth());
        Series shifted = a.shifted(-lifted);
        ValResult fine = val(residue(shifted, level));
        if (fine.is_infinite()) return false;
        std::vector<Rational> coords = cv.value->coords();
        coords.insert(coords.end(), fine.exponent().coords().begin(), fine.exponent().coords().end());
        return Exponent(std::move(coords)) == v.exponent();
    } catch (const Error&) {
        return false;
    }
}

ValResult density_gap(const Series& a, const Series& b) { return val(s_sub(a, b)); }

}  // namespace hahn
