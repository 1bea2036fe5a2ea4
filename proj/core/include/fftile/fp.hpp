#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fftile/error.hpp"

namespace fftile {

using Int = std::int64_t;

/// Prime modulus validated at construction by deterministic trial division.
class PrimeModulus {
public:
    explicit PrimeModulus(Int p);

    Int value() const noexcept { return p_; }
    bool odd() const noexcept { return p_ != 2; }

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
    Int p_;
};

/// Canonical residue of x modulo p, in [0, p). Accepts any Int.
Int mod_reduce(Int x, Int p);
Int mod_add(Int a, Int b, Int p);
Int mod_sub(Int a, Int b, Int p);
Int mod_mul(Int a, Int b, Int p);
Int mod_pow(Int base, Int exp, Int p);

/// Multiplicative inverse by Fermat. Throws ZeroInverse on x == 0 (mod p).
Int mod_inv(Int x, Int p);

/// p^d as an Int. Throws UnsupportedSize if the product leaves the
/// supported range (the library targets desk-scale instances).
Int power_checked(Int p, int d);

/// Quadratic character trichotomy for a residue.
enum class QuadClass { Zero, NonzeroSquare, NonSquare };

QuadClass quad_class(Int x, PrimeModulus p);

/// is_square(0) is true by convention.
bool is_square(Int x, PrimeModulus p);

/// table[r] = least nonnegative square root of r, or -1 when r is a nonsquare.
std::vector<Int> sqrt_table(PrimeModulus p);

/// Element of F_p. Arithmetic checks modulus agreement.
class FpScalar {
public:
    FpScalar(PrimeModulus p, Int value) : p_(p), v_(mod_reduce(value, p.value())) {}

    Int value() const noexcept { return v_; }
    PrimeModulus modulus() const noexcept { return p_; }

    FpScalar operator+(FpScalar o) const;
    FpScalar operator-(FpScalar o) const;
    FpScalar operator*(FpScalar o) const;
    FpScalar operator-() const;
    FpScalar inverse() const;

    friend bool operator==(FpScalar a, FpScalar b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }

private:
    PrimeModulus p_;
    Int v_;
};

/// Point of F_p^d with canonical coordinates in [0, p).
/// Ordering is lexicographic on coordinates; it matches the order of
/// encoded indices, with the first coordinate most significant.
class FpVector {
public:
    FpVector(PrimeModulus p, std::vector<Int> coords);

    PrimeModulus modulus() const noexcept { return p_; }
    int dim() const noexcept { return static_cast<int>(c_.size()); }
    Int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::span<const Int> coords() const noexcept { return c_; }
    bool is_zero() const noexcept;

    FpVector operator+(const FpVector& o) const;
    FpVector operator-(const FpVector& o) const;
    FpVector operator-() const;
    FpVector scaled(Int t) const;

    friend bool operator==(const FpVector& a, const FpVector& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend std::strong_ordering operator<=>(const FpVector& a, const FpVector& b);

private:
    PrimeModulus p_;
    std::vector<Int> c_;
};

Int dot(const FpVector& a, const FpVector& b);
Int norm(const FpVector& v);
FpVector unit_vector(PrimeModulus p, int d, int i);
FpVector zero_vector(PrimeModulus p, int d);

/// Index of a point in the lexicographic enumeration of F_p^d
/// (first coordinate most significant).
Int encode_point(std::span<const Int> coords, Int p);
Int encode_point(const FpVector& v);
std::vector<Int> decode_coords(Int index, Int p, int d);
FpVector decode_point(Int index, PrimeModulus p, int d);

/// Finite subset of F_p^d, stored as sorted distinct encoded indices.
class PointSet {
public:
    PointSet(PrimeModulus p, int d, std::vector<Int> indices);
    static PointSet from_points(PrimeModulus p, int d,
                                const std::vector<FpVector>& points);
    static PointSet full_space(PrimeModulus p, int d);

    PrimeModulus modulus() const noexcept { return p_; }
    int dim() const noexcept { return d_; }
    Int size() const noexcept { return static_cast<Int>(idx_.size()); }
    bool empty() const noexcept { return idx_.empty(); }
    std::span<const Int> indices() const noexcept { return idx_; }
    bool contains(Int index) const;
    bool contains(const FpVector& v) const;
    std::vector<FpVector> points() const;

    PointSet translated(const FpVector& shift) const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.p_ == b.p_ && a.d_ == b.d_ && a.idx_ == b.idx_;
    }

private:
    PrimeModulus p_;
    int d_;
    std::vector<Int> idx_;
};

/// Canonical representatives of the (p^d - 1)/(p - 1) directions of F_p^d:
/// first nonzero coordinate scaled to 1, listed in lexicographic order.
std::vector<FpVector> directions(PrimeModulus p, int d);

/// Canonical representative of the line through a nonzero vector.
/// Throws ZeroDirection on the zero vector.
FpVector canonical_direction(const FpVector& v);

/// E - E, including 0 when E is nonempty.
PointSet difference_set(const PointSet& e);

namespace detail {
void require_same_space(const PointSet& a, const PointSet& b);
void require_same_space(const FpVector& a, const FpVector& b);
}  // namespace detail

}  // namespace fftile
