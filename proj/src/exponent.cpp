#include "hahn/exponent.hpp"

#include "hahn/errors.hpp"

#include <cctype>

namespace hahn {

namespace {

void require_same_depth(const Exponent& a, const Exponent& b, const char* op) {
    if (a.depth() != b.depth())
        throw DepthMismatch(std::string(op) + ": depth " + std::to_string(a.depth()) + " vs " +
                            std::to_string(b.depth()));
}

std::strong_ordering cmp(const Rational& a, const Rational& b) {
    int c = ::cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

Exponent Exponent::unit(std::size_t depth, std::size_t i) {
    if (i == 0 || i > depth) throw DomainError("unit vector index out of range");
    auto g = zero(depth);
    g.coords_[i - 1] = 1;
    return g;
}

Exponent Exponent::of(std::initializer_list<long> coords) {
    std::vector<Rational> v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return Exponent(std::move(v));
}

bool Exponent::is_zero() const { return leading_zeros() == depth(); }

std::size_t Exponent::leading_zeros() const {
    std::size_t k = 0;
    while (k < coords_.size() && sgn(coords_[k]) == 0) ++k;
    return k;
}

bool operator==(const Exponent& a, const Exponent& b) { return exp_compare(a, b) == 0; }

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) { return exp_compare(a, b); }

std::strong_ordering exp_compare(const Exponent& a, const Exponent& b) {
    require_same_depth(a, b, "compare");
    for (std::size_t i = 0; i < a.depth(); ++i) {
        auto c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
    require_same_depth(a, b, "add");
    std::vector<Rational> out(a.depth());
    for (std::size_t i = 0; i < a.depth(); ++i) out[i] = a[i] + b[i];
    return Exponent(std::move(out));
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
    require_same_depth(a, b, "sub");
    std::vector<Rational> out(a.depth());
    for (std::size_t i = 0; i < a.depth(); ++i) out[i] = a[i] - b[i];
    return Exponent(std::move(out));
}

Exponent exp_neg(const Exponent& a) {
    std::vector<Rational> out(a.depth());
    for (std::size_t i = 0; i < a.depth(); ++i) out[i] = -a[i];
    return Exponent(std::move(out));
}

Exponent exp_scale(const Exponent& a, long n) {
    if (n == 0) throw DomainError("exp_scale by zero");
    std::vector<Rational> out(a.depth());
    for (std::size_t i = 0; i < a.depth(); ++i) out[i] = a[i] * n;
    return Exponent(std::move(out));
}

Exponent exp_div(const Exponent& a, long n) {
    if (n == 0) throw DomainError("exp_div by zero");
    std::vector<Rational> out(a.depth());
    for (std::size_t i = 0; i < a.depth(); ++i) {
        out[i] = a[i] / n;
        out[i].canonicalize();
    }
    return Exponent(std::move(out));
}

std::string to_string(const Exponent& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.depth(); ++i) {
        if (i) s += ',';
        s += to_string(g[i]);
    }
    return s + "]";
}

Exponent parse_exponent(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw DomainError("exponent must look like [q1,...,qd]: '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<Rational> coords;
    if (text.empty()) return Exponent(std::move(coords));
    while (true) {
        auto comma = text.find(',');
        coords.push_back(parse_rational(trim(text.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return Exponent(std::move(coords));
}

bool in_subgroup(const Exponent& g, ConvexLevel level) {
    if (level.j > g.depth()) throw DomainError("convex level exceeds depth");
    for (std::size_t i = 0; i < level.j; ++i)
        if (sgn(g[i]) != 0) return false;
    return true;
}

Exponent project(const Exponent& g, ConvexLevel level) {
    if (level.j > g.depth()) throw DomainError("convex level exceeds depth");
    return Exponent(std::vector<Rational>(g.coords().begin(), g.coords().begin() + static_cast<long>(level.j)));
}

Exponent tail(const Exponent& g, ConvexLevel level) {
    if (level.j > g.depth()) throw DomainError("convex level exceeds depth");
    return Exponent(std::vector<Rational>(g.coords().begin() + static_cast<long>(level.j), g.coords().end()));
}

Exponent lift(const Exponent& coarse, std::size_t depth) {
    if (coarse.depth() > depth) throw DomainError("cannot lift into a smaller group");
    auto coords = coarse.coords();
    coords.resize(depth);
    return Exponent(std::move(coords));
}

std::optional<Integer> multiples_to_reach(const Exponent& step, const Exponent& bound) {
    require_same_depth(step, bound, "multiples_to_reach");
    if (step <= Exponent::zero(step.depth())) throw DomainError("multiples_to_reach needs a positive step");
    if (bound <= step) return Integer(1);
    std::size_t k = step.leading_zeros();
    std::size_t m = bound.leading_zeros();
    if (m < k) return std::nullopt;
    if (m > k) return Integer(1);
    Rational ratio = bound[k] / step[k];
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    if (n < 1) n = 1;
    std::vector<Rational> scaled(step.depth());
    for (std::size_t i = 0; i < step.depth(); ++i) scaled[i] = step[i] * Rational(n);
    if (Exponent(scaled) < bound) n += 1;
    return n;
}

const Exponent& ValResult::exponent() const {
    if (!value_) throw DomainError("value is infinite");
    return *value_;
}

bool operator==(const ValResult& a, const ValResult& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ValResult& a, const ValResult& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return exp_compare(*a.value_, *b.value_);
}

ValResult operator+(const ValResult& a, const ValResult& b) {
    if (a.is_infinite() || b.is_infinite()) return ValResult::infinity();
    return exp_add(a.exponent(), b.exponent());
}

std::string to_string(const ValResult& v) { return v.is_infinite() ? "inf" : to_string(v.exponent()); }

}  // namespace hahn
