#include "fftile/polyring.hpp"

namespace fftile {

namespace {

/// Componentwise sum of two exponent indices, each digit mod p.
Int add_indices(Int u, Int v, Int p, int d) {
    Int out = 0;
    Int scale = 1;
    for (int i = 0; i < d; ++i) {
        out += ((u % p + v % p) % p) * scale;
        scale *= p;
        u /= p;
        v /= p;
    }
    return out;
}

void require_same_ring(const QuotientPoly& a, const QuotientPoly& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(ErrorKind::ModulusMismatch, "polynomials live in different rings");
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch, "polynomials have different variable counts");
}

}  // namespace

QuotientPoly::QuotientPoly(PrimeModulus p, int d)
    : p_(p), d_(d), c_(static_cast<std::size_t>(power_checked(p.value(), d)), 0) {}

QuotientPoly QuotientPoly::encode_set(const PointSet& e) {
    QuotientPoly f(e.modulus(), e.dim());
    for (Int i : e.indices()) f.c_[static_cast<std::size_t>(i)] = 1 % e.modulus().value();
    return f;
}

QuotientPoly QuotientPoly::constant(PrimeModulus p, int d, Int c) {
    QuotientPoly f(p, d);
    f.c_[0] = mod_reduce(c, p.value());
    return f;
}

QuotientPoly QuotientPoly::all_ones(PrimeModulus p, int d) {
    QuotientPoly f(p, d);
    for (Int& c : f.c_) c = 1 % p.value();
    return f;
}

QuotientPoly QuotientPoly::monomial(PrimeModulus p, int d, const FpVector& exponent) {
    if (!(exponent.modulus() == p) || exponent.dim() != d)
        throw Error(ErrorKind::DimensionMismatch, "exponent does not index this ring");
    QuotientPoly f(p, d);
    f.c_[static_cast<std::size_t>(encode_point(exponent))] = 1 % p.value();
    return f;
}

QuotientPoly QuotientPoly::operator+(const QuotientPoly& o) const {
    require_same_ring(*this, o);
    QuotientPoly r(p_, d_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_add(c_[i], o.c_[i], p_.value());
    return r;
}

QuotientPoly QuotientPoly::operator*(const QuotientPoly& o) const {
    require_same_ring(*this, o);
    QuotientPoly r(p_, d_);
    Int p = p_.value();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            Int w = add_indices(static_cast<Int>(i), static_cast<Int>(j), p, d_);
            r.c_[static_cast<std::size_t>(w)] =
                mod_add(r.c_[static_cast<std::size_t>(w)], mod_mul(c_[i], o.c_[j], p), p);
        }
    }
    return r;
}

QuotientPoly QuotientPoly::scaled(Int t) const {
    QuotientPoly r(p_, d_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_mul(c_[i], t, p_.value());
    return r;
}

bool tiling_poly_check(const PointSet& e, const PointSet& a, Int k) {
    detail::require_same_space(e, a);
    Int n = power_checked(e.modulus().value(), e.dim());
    if (e.size() * a.size() != k * n) return false;
    QuotientPoly product = QuotientPoly::encode_set(e) * QuotientPoly::encode_set(a);
    return product == QuotientPoly::all_ones(e.modulus(), e.dim()).scaled(k);
}

std::vector<Int> first_moment(const PointSet& e, const PointSet& a) {
    detail::require_same_space(e, a);
    Int p = e.modulus().value();
    int d = e.dim();
    std::vector<Int> out(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < d; ++j) {
        Int se = 0, sa = 0;
        for (const FpVector& x : e.points()) se = mod_add(se, x[j], p);
        for (const FpVector& x : a.points()) sa = mod_add(sa, x[j], p);
        out[static_cast<std::size_t>(j)] =
            mod_add(mod_mul(a.size(), se, p), mod_mul(e.size(), sa, p), p);
    }
    return out;
}

Int second_moment(const PointSet& e, const PointSet& a, int j) {
    detail::require_same_space(e, a);
    if (j < 1 || j > e.dim())
        throw Error(ErrorKind::BadIndex, "coordinate index " + std::to_string(j) + " out of range");
    Int p = e.modulus().value();
    int c = j - 1;
    Int se = 0, sa = 0, se2 = 0, sa2 = 0;
    for (const FpVector& x : e.points()) {
        se = mod_add(se, x[c], p);
        se2 = mod_add(se2, mod_mul(x[c], x[c], p), p);
    }
    for (const FpVector& x : a.points()) {
        sa = mod_add(sa, x[c], p);
        sa2 = mod_add(sa2, mod_mul(x[c], x[c], p), p);
    }
    Int out = mod_add(mod_mul(a.size(), se2, p), mod_mul(e.size(), sa2, p), p);
    return mod_add(out, mod_mul(2, mod_mul(se, sa, p), p), p);
}

}  // namespace fftile
