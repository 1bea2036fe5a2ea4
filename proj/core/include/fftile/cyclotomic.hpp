#pragma once

#include <span>
#include <vector>

#include "fftile/fp.hpp"
#include "fftile/rational.hpp"

namespace fftile {

/// Element of the p-th cyclotomic field Q(xi), xi a primitive p-th root
/// of unity, stored on the power basis 1, xi, ..., xi^(p-2) with exact
/// rational coefficients. Powers reduce through
///   xi^(p-1) = -(1 + xi + ... + xi^(p-2)),
/// so representations are unique and equality/zero tests are exact.
/// For p = 2 the field is Q itself (xi = -1, one coefficient).
class CycNum {
public:
    /// Zero.
    explicit CycNum(PrimeModulus p);

    static CycNum from_rational(PrimeModulus p, const BigRational& a);
    /// xi^k for any integer k (reduced mod p).
    static CycNum root_power(PrimeModulus p, Int k);

    PrimeModulus modulus() const noexcept { return p_; }
    std::span<const BigRational> coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws NonRationalResult unless every coefficient above the
    /// constant one vanishes.
    BigRational to_rational() const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator-() const;

    CycNum& scale(const BigRational& s);
    /// Adds s * xi^k in place; the workhorse of transform accumulation.
    CycNum& add_scaled_power(Int k, const BigRational& s);
    /// Adds xi^k * o in place.
    CycNum& add_shifted(const CycNum& o, Int k);

    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

private:
    PrimeModulus p_;
    std::vector<BigRational> c_;
};

/// Field automorphism xi -> xi^r for r in 1..p-1. Throws ZeroGaloisIndex
/// when r = 0 (mod p).
CycNum galois_apply(Int r, const CycNum& x);

/// Complex conjugation, the automorphism xi -> xi^(p-1).
CycNum conj(const CycNum& x);

/// x * conj(x); lies in the real subfield, rational only for p <= 3.
CycNum abs_sq(const CycNum& x);

/// Field trace to Q. Tr(1) = p-1 and Tr(xi^j) = -1 for j in 1..p-1, so
/// Tr(sum a_j xi^j) = (p-1) a_0 - sum_{j>=1} a_j.
BigRational trace(const CycNum& x);

}  // namespace fftile
