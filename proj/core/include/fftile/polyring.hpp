#pragma once

#include <vector>

#include "fftile/fp.hpp"

namespace fftile {

/// Element of (Z/pZ)[z_1..z_d] / (z_1^p - 1, ..., z_d^p - 1), stored as
/// a dense coefficient table over the p^d reduced monomials. Exponent
/// vectors share the index encoding of points, so a point set embeds as
/// the sum of its monomials and multiplication wraps exponents mod p.
class QuotientPoly {
public:
    QuotientPoly(PrimeModulus p, int d);

    static QuotientPoly encode_set(const PointSet& e);
    static QuotientPoly constant(PrimeModulus p, int d, Int c);
    /// Sum of every reduced monomial; equals the encoding of F_p^d.
    static QuotientPoly all_ones(PrimeModulus p, int d);
    static QuotientPoly monomial(PrimeModulus p, int d, const FpVector& exponent);

    PrimeModulus modulus() const noexcept { return p_; }
    int dim() const noexcept { return d_; }
    Int term_count() const noexcept { return static_cast<Int>(c_.size()); }
    Int at(Int index) const { return c_[static_cast<std::size_t>(index)]; }

    QuotientPoly operator+(const QuotientPoly& o) const;
    QuotientPoly operator*(const QuotientPoly& o) const;
    QuotientPoly scaled(Int t) const;

    friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;

private:
    PrimeModulus p_;
    int d_;
    std::vector<Int> c_;
};

/// Polynomial tiling criterion: |E||A| = k p^d over the integers, and
/// encode(E) * encode(A) = k * all_ones in the quotient ring. The size
/// condition disambiguates k from k + p.
bool tiling_poly_check(const PointSet& e, const PointSet& a, Int k);

/// First moment identity of a tiling, evaluated componentwise:
/// |A| sum_E e_j + |E| sum_A a_j mod p for j = 1..d. All zero when
/// (E, A) k-tiles, provided sum_{x in F_p^d} x_j = 0 mod p, i.e. p odd
/// or d >= 2; at p = 2, d = 1 a tiling leaves the residual k.
std::vector<Int> first_moment(const PointSet& e, const PointSet& a);

/// Second moment identity in coordinate j (1-based):
/// |A| sum_E e_j^2 + |E| sum_A a_j^2 + 2 (sum_E e_j)(sum_A a_j) mod p.
/// Zero on k-tilings provided sum_{x in F_p^d} x_j^2 = 0 mod p, i.e.
/// p >= 5 or d >= 2; at d = 1 a tiling leaves the residual
/// k (sum x^2 mod p), nonzero for p in {2, 3}. Throws BadIndex unless
/// 1 <= j <= d.
Int second_moment(const PointSet& e, const PointSet& a, int j);

}  // namespace fftile
