#include "fftile/cyclotomic.hpp"

#include <cstddef>

namespace fftile {

namespace {

void require_same_field(const CycNum& a, const CycNum& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(ErrorKind::ModulusMismatch, "cyclotomic operands have different conductors");
}

}  // namespace

CycNum::CycNum(PrimeModulus p)
    : p_(p), c_(static_cast<std::size_t>(p.value() - 1), BigRational(0)) {}

CycNum CycNum::from_rational(PrimeModulus p, const BigRational& a) {
    CycNum x(p);
    x.c_[0] = canonical_rational(a);
    return x;
}

CycNum CycNum::root_power(PrimeModulus p, Int k) {
    CycNum x(p);
    x.add_scaled_power(k, BigRational(1));
    return x;
}

bool CycNum::is_zero() const {
    for (const BigRational& a : c_)
        if (a != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

BigRational CycNum::to_rational() const {
    if (!is_rational())
        throw Error(ErrorKind::NonRationalResult, "cyclotomic number is not rational");
    return c_[0];
}

CycNum& CycNum::operator+=(const CycNum& o) {
    require_same_field(*this, o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    require_same_field(*this, o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

CycNum CycNum::operator+(const CycNum& o) const {
    CycNum r = *this;
    r += o;
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
    CycNum r = *this;
    r -= o;
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (BigRational& a : r.c_) a = -a;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    require_same_field(*this, o);
    CycNum r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.add_scaled_power(static_cast<Int>(i + j), c_[i] * o.c_[j]);
        }
    }
    return r;
}

CycNum& CycNum::scale(const BigRational& s) {
    BigRational v = canonical_rational(s);
    for (BigRational& a : c_) a *= v;
    return *this;
}

CycNum& CycNum::add_scaled_power(Int k, const BigRational& s) {
    BigRational v = canonical_rational(s);
    Int e = mod_reduce(k, p_.value());
    if (e <= p_.value() - 2) {
        c_[static_cast<std::size_t>(e)] += v;
    } else {
        for (BigRational& a : c_) a -= v;
    }
    return *this;
}

CycNum& CycNum::add_shifted(const CycNum& o, Int k) {
    require_same_field(*this, o);
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        add_scaled_power(static_cast<Int>(j) + k, o.c_[j]);
    }
    return *this;
}

CycNum galois_apply(Int r, const CycNum& x) {
    Int p = x.modulus().value();
    r = mod_reduce(r, p);
    if (r == 0)
        throw Error(ErrorKind::ZeroGaloisIndex, "xi -> xi^0 is not an automorphism");
    CycNum out(x.modulus());
    auto c = x.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        out.add_scaled_power(mod_mul(static_cast<Int>(j), r, p), c[j]);
    }
    return out;
}

CycNum conj(const CycNum& x) { return galois_apply(x.modulus().value() - 1, x); }

CycNum abs_sq(const CycNum& x) { return x * conj(x); }

BigRational trace(const CycNum& x) {
    auto c = x.coeffs();
    BigRational t = BigRational(x.modulus().value() - 1) * c[0];
    for (std::size_t j = 1; j < c.size(); ++j) t -= c[j];
    return t;
}

}  // namespace fftile
