#pragma once

#include <vector>

#include "fftile/cyclotomic.hpp"
#include "fftile/fp.hpp"
#include "fftile/rational.hpp"

namespace fftile {

/// Rational-valued function on F_p^d, stored densely in index order.
class RationalFunction {
public:
    RationalFunction(PrimeModulus p, int d);
    static RationalFunction indicator(const PointSet& e);

    PrimeModulus modulus() const noexcept { return p_; }
    int dim() const noexcept { return d_; }
    Int domain_size() const noexcept { return static_cast<Int>(v_.size()); }

    const BigRational& at(Int index) const { return v_[static_cast<std::size_t>(index)]; }
    const BigRational& at(const FpVector& x) const { return at(encode_point(x)); }
    void set(Int index, const BigRational& value) {
        v_[static_cast<std::size_t>(index)] = canonical_rational(value);
    }
    void set(const FpVector& x, const BigRational& value) { set(encode_point(x), value); }

    BigRational sum() const;
    /// p^{-d} * sum of all values.
    BigRational average() const;
    BigRational sum_of_squares() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    PrimeModulus p_;
    int d_;
    std::vector<BigRational> v_;
};

/// Cyclotomic-valued function on frequency space, stored in index order.
class Spectrum {
public:
    Spectrum(PrimeModulus p, int d);

    PrimeModulus modulus() const noexcept { return p_; }
    int dim() const noexcept { return d_; }
    Int domain_size() const noexcept { return static_cast<Int>(v_.size()); }

    const CycNum& at(Int index) const { return v_[static_cast<std::size_t>(index)]; }
    const CycNum& at(const FpVector& m) const { return at(encode_point(m)); }
    void set(Int index, CycNum value);
    void set(const FpVector& m, CycNum value) { set(encode_point(m), std::move(value)); }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    PrimeModulus p_;
    int d_;
    std::vector<CycNum> v_;
};

/// f_hat(m) = p^{-d} sum_x f(x) xi^(x.m). Direct evaluation, exact.
/// Coefficients are independent; `threads` > 1 splits the frequency range.
Spectrum dft(const RationalFunction& f, int threads = 1);

/// f(x) = sum_m F(m) xi^(-x.m). Throws NonRationalResult if the spectrum
/// is not the transform of a rational function.
RationalFunction inverse_dft(const Spectrum& s, int threads = 1);

/// Transform of an indicator at a single frequency, in O(|E|) ring ops.
CycNum point_spectrum(const PointSet& e, const FpVector& m);

/// Transform of a rational function at a single frequency.
CycNum point_spectrum(const RationalFunction& f, const FpVector& m);

/// Frequencies m != 0 with F(m) = 0, in index order.
std::vector<FpVector> zero_set(const Spectrum& s);

struct EquidistributionResult {
    std::vector<Int> counts;  ///< counts[t] = |{e in E : e.m = t}|
    bool equidistributed;     ///< all counts equal
};

/// Hyperplane counts of E along m != 0. Equidistribution is equivalent
/// to the vanishing of the indicator transform at m.
EquidistributionResult equidistribution_check(const PointSet& e, const FpVector& m);

/// Tiling criterion in frequency space: |E||A| = k p^d and, for every
/// m != 0, E_hat(m) A_hat(m) = 0. Galois symmetry means only canonical
/// direction representatives need testing.
bool tiling_fourier_check(const PointSet& e, const PointSet& a, Int k);

/// Checks F(rm) = (xi -> xi^r applied to F(m)) for all m and r != 0,
/// which characterises spectra of rational functions.
bool galois_symmetry_check(const Spectrum& s);

/// Image of a rational function under the compression isomorphism:
/// the mean together with one spectral coefficient per direction.
struct CompressedSpectrum {
    Int p;
    int d;
    BigRational mean;             ///< F(0)
    std::vector<CycNum> line_coeffs;  ///< F(m) for m in directions(p, d)
};

CompressedSpectrum compress_spectrum(const RationalFunction& f);

/// Rebuilds the function from its compressed spectrum via the Galois
/// action on each punctured line. Throws NonRationalResult when the
/// data is not the compression of a rational function.
RationalFunction decompress_spectrum(const CompressedSpectrum& c);

struct TraceIdentityReport {
    BigRational line_sum;        ///< sum_r F(rm), rational by symmetry
    BigRational trace_value;     ///< Tr F(m)
    BigRational line_energy;     ///< sum_r |F(rm)|^2
    BigRational trace_energy;    ///< Tr |F(m)|^2
};

/// Evaluates both trace identities on the punctured line through m and
/// asserts them; a mismatch throws InternalContradiction.
TraceIdentityReport trace_identity(const RationalFunction& f, const FpVector& m);

struct HyperplaneStats {
    FpVector direction;
    std::vector<BigRational> mu;  ///< mu[t] = p^{-(d-1)} sum_{x.m = t} f(x)
    BigRational mean;             ///< average of mu over t; equals the global mean
    BigRational variance;         ///< (1/p) sum_t (mu[t] - mean)^2
    CycNum coefficient;           ///< F(m) = (1/p) sum_t mu[t] xi^t
};

/// Hyperplane averages of f along m != 0, with the reconstruction
/// F(m) = (1/p) sum_t mu[t] xi^t and Var[mu] = Tr |F(m)|^2 both
/// asserted exactly.
HyperplaneStats hyperplane_stats(const RationalFunction& f, const FpVector& m);

/// sum_m |F(m)|^2 = p^{-d} sum_x f(x)^2, asserted exactly; returns the
/// common value.
BigRational plancherel_check(const RationalFunction& f);

}  // namespace fftile
