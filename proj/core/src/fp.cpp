#include "fftile/fp.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fftile {

namespace {

constexpr Int kMaxDomain = Int(1) << 40;

std::string int_str(Int x) { return std::to_string(x); }

}  // namespace

PrimeModulus::PrimeModulus(Int p) : p_(p) {
    if (p < 2) throw Error(ErrorKind::NotPrime, int_str(p) + " is not prime");
    for (Int q = 2; q * q <= p; ++q) {
        if (p % q == 0)
            throw Error(ErrorKind::NotPrime, int_str(p) + " is divisible by " + int_str(q));
    }
}

Int mod_reduce(Int x, Int p) {
    Int r = x % p;
    return r < 0 ? r + p : r;
}

Int mod_add(Int a, Int b, Int p) { return mod_reduce(a + b, p); }
Int mod_sub(Int a, Int b, Int p) { return mod_reduce(a - b, p); }
Int mod_mul(Int a, Int b, Int p) { return mod_reduce(mod_reduce(a, p) * mod_reduce(b, p), p); }

Int mod_pow(Int base, Int exp, Int p) {
    base = mod_reduce(base, p);
    Int acc = 1 % p;
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return acc;
}

Int mod_inv(Int x, Int p) {
    x = mod_reduce(x, p);
    if (x == 0) throw Error(ErrorKind::ZeroInverse, "no inverse of 0 mod " + int_str(p));
    return mod_pow(x, p - 2, p);
}

Int power_checked(Int p, int d) {
    if (d < 0) throw Error(ErrorKind::UnsupportedDim, "negative dimension");
    Int acc = 1;
    for (int i = 0; i < d; ++i) {
        if (acc > kMaxDomain / p)
            throw Error(ErrorKind::UnsupportedSize,
                        int_str(p) + "^" + int_str(d) + " exceeds the supported domain size");
        acc *= p;
    }
    return acc;
}

QuadClass quad_class(Int x, PrimeModulus p) {
    x = mod_reduce(x, p.value());
    if (x == 0) return QuadClass::Zero;
    if (!p.odd()) return QuadClass::NonzeroSquare;
    Int e = mod_pow(x, (p.value() - 1) / 2, p.value());
    return e == 1 ? QuadClass::NonzeroSquare : QuadClass::NonSquare;
}

bool is_square(Int x, PrimeModulus p) { return quad_class(x, p) != QuadClass::NonSquare; }

std::vector<Int> sqrt_table(PrimeModulus p) {
    std::vector<Int> table(static_cast<std::size_t>(p.value()), -1);
    for (Int t = 0; t < p.value(); ++t) {
        Int sq = mod_mul(t, t, p.value());
        if (table[static_cast<std::size_t>(sq)] < 0) table[static_cast<std::size_t>(sq)] = t;
    }
    return table;
}

FpScalar FpScalar::operator+(FpScalar o) const {
    if (!(p_ == o.p_)) throw Error(ErrorKind::ModulusMismatch, "scalar moduli differ");
    return {p_, v_ + o.v_};
}

FpScalar FpScalar::operator-(FpScalar o) const {
    if (!(p_ == o.p_)) throw Error(ErrorKind::ModulusMismatch, "scalar moduli differ");
    return {p_, v_ - o.v_};
}

FpScalar FpScalar::operator*(FpScalar o) const {
    if (!(p_ == o.p_)) throw Error(ErrorKind::ModulusMismatch, "scalar moduli differ");
    return {p_, mod_mul(v_, o.v_, p_.value())};
}

FpScalar FpScalar::operator-() const { return {p_, -v_}; }

FpScalar FpScalar::inverse() const { return {p_, mod_inv(v_, p_.value())}; }

FpVector::FpVector(PrimeModulus p, std::vector<Int> coords) : p_(p), c_(std::move(coords)) {
    for (Int& x : c_) x = mod_reduce(x, p_.value());
}

bool FpVector::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
}

FpVector FpVector::operator+(const FpVector& o) const {
    detail::require_same_space(*this, o);
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mod_add(c_[i], o.c_[i], p_.value());
    return {p_, std::move(r)};
}

FpVector FpVector::operator-(const FpVector& o) const {
    detail::require_same_space(*this, o);
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mod_sub(c_[i], o.c_[i], p_.value());
    return {p_, std::move(r)};
}

FpVector FpVector::operator-() const {
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mod_reduce(-c_[i], p_.value());
    return {p_, std::move(r)};
}

FpVector FpVector::scaled(Int t) const {
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mod_mul(c_[i], t, p_.value());
    return {p_, std::move(r)};
}

std::strong_ordering operator<=>(const FpVector& a, const FpVector& b) {
    detail::require_same_space(a, b);
    return a.c_ <=> b.c_;
}

Int dot(const FpVector& a, const FpVector& b) {
    detail::require_same_space(a, b);
    Int acc = 0;
    for (int i = 0; i < a.dim(); ++i) acc = mod_add(acc, mod_mul(a[i], b[i], a.modulus().value()), a.modulus().value());
    return acc;
}

Int norm(const FpVector& v) { return dot(v, v); }

FpVector unit_vector(PrimeModulus p, int d, int i) {
    if (i < 0 || i >= d) throw Error(ErrorKind::BadIndex, "unit vector index out of range");
    std::vector<Int> c(static_cast<std::size_t>(d), 0);
    c[static_cast<std::size_t>(i)] = 1;
    return {p, std::move(c)};
}

FpVector zero_vector(PrimeModulus p, int d) {
    return {p, std::vector<Int>(static_cast<std::size_t>(d), 0)};
}

Int encode_point(std::span<const Int> coords, Int p) {
    Int idx = 0;
    for (Int x : coords) idx = idx * p + mod_reduce(x, p);
    return idx;
}

Int encode_point(const FpVector& v) { return encode_point(v.coords(), v.modulus().value()); }

std::vector<Int> decode_coords(Int index, Int p, int d) {
    std::vector<Int> c(static_cast<std::size_t>(d), 0);
    for (int i = d - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = index % p;
        index /= p;
    }
    return c;
}

FpVector decode_point(Int index, PrimeModulus p, int d) {
    return {p, decode_coords(index, p.value(), d)};
}

PointSet::PointSet(PrimeModulus p, int d, std::vector<Int> indices)
    : p_(p), d_(d), idx_(std::move(indices)) {
    Int n = power_checked(p.value(), d);
    for (Int i : idx_) {
        if (i < 0 || i >= n)
            throw Error(ErrorKind::BadIndex, "point index " + std::to_string(i) + " out of range");
    }
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

PointSet PointSet::from_points(PrimeModulus p, int d, const std::vector<FpVector>& points) {
    std::vector<Int> idx;
    idx.reserve(points.size());
    for (const FpVector& v : points) {
        if (!(v.modulus() == p) || v.dim() != d)
            throw Error(ErrorKind::DimensionMismatch, "point does not live in the stated space");
        idx.push_back(encode_point(v));
    }
    return {p, d, std::move(idx)};
}

PointSet PointSet::full_space(PrimeModulus p, int d) {
    Int n = power_checked(p.value(), d);
    std::vector<Int> idx(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    return {p, d, std::move(idx)};
}

bool PointSet::contains(Int index) const {
    return std::binary_search(idx_.begin(), idx_.end(), index);
}

bool PointSet::contains(const FpVector& v) const { return contains(encode_point(v)); }

std::vector<FpVector> PointSet::points() const {
    std::vector<FpVector> out;
    out.reserve(idx_.size());
    for (Int i : idx_) out.push_back(decode_point(i, p_, d_));
    return out;
}

PointSet PointSet::translated(const FpVector& shift) const {
    if (!(shift.modulus() == p_) || shift.dim() != d_)
        throw Error(ErrorKind::DimensionMismatch, "shift does not live in the stated space");
    std::vector<Int> idx;
    idx.reserve(idx_.size());
    for (Int i : idx_) idx.push_back(encode_point(decode_point(i, p_, d_) + shift));
    return {p_, d_, std::move(idx)};
}

std::vector<FpVector> directions(PrimeModulus p, int d) {
    std::vector<FpVector> out;
    Int n = power_checked(p.value(), d);
    for (Int i = 1; i < n; ++i) {
        FpVector v = decode_point(i, p, d);
        int pivot = 0;
        while (v[pivot] == 0) ++pivot;
        if (v[pivot] == 1) out.push_back(std::move(v));
    }
    return out;
}

FpVector canonical_direction(const FpVector& v) {
    if (v.is_zero()) throw Error(ErrorKind::ZeroDirection, "zero vector spans no direction");
    int pivot = 0;
    while (v[pivot] == 0) ++pivot;
    return v.scaled(mod_inv(v[pivot], v.modulus().value()));
}

PointSet difference_set(const PointSet& e) {
    std::vector<Int> idx;
    auto pts = e.points();
    idx.reserve(pts.size() * pts.size());
    for (const FpVector& a : pts)
        for (const FpVector& b : pts) idx.push_back(encode_point(a - b));
    return {e.modulus(), e.dim(), std::move(idx)};
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EvenModulus: return "EvenModulus";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::ZeroGaloisIndex: return "ZeroGaloisIndex";
        case ErrorKind::ZeroDirection: return "ZeroDirection";
        case ErrorKind::ZeroBase: return "ZeroBase";
        case ErrorKind::ZeroRadius: return "ZeroRadius";
        case ErrorKind::ZeroDistance: return "ZeroDistance";
        case ErrorKind::BadResidue: return "BadResidue";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::NonRationalResult: return "NonRationalResult";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::UnsupportedDim: return "UnsupportedDim";
        case ErrorKind::IncompleteDomain: return "IncompleteDomain";
        case ErrorKind::NotATiling: return "NotATiling";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::BadManifest: return "BadManifest";
        case ErrorKind::InternalContradiction: return "InternalContradiction";
    }
    return "UnknownError";
}

namespace detail {

void require_same_space(const PointSet& a, const PointSet& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(ErrorKind::ModulusMismatch, "point sets have different moduli");
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch, "point sets have different dimensions");
}

void require_same_space(const FpVector& a, const FpVector& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(ErrorKind::ModulusMismatch, "vectors have different moduli");
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch, "vectors have different dimensions");
}

}  // namespace detail

}  // namespace fftile
