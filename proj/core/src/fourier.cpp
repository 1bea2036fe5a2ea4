#include "fftile/fourier.hpp"

#include <utility>

#include "fftile/detail/parallel.hpp"

namespace fftile {

namespace {

void require_same_space_fn(const RationalFunction& f, const FpVector& m) {
    if (!(f.modulus() == m.modulus()) || f.dim() != m.dim())
        throw Error(ErrorKind::DimensionMismatch, "frequency does not live in the function's space");
}

void require_nonzero_direction(const FpVector& m) {
    if (m.is_zero()) throw Error(ErrorKind::ZeroDirection, "direction must be nonzero");
}

}  // namespace

RationalFunction::RationalFunction(PrimeModulus p, int d)
    : p_(p), d_(d),
      v_(static_cast<std::size_t>(power_checked(p.value(), d)), BigRational(0)) {}

RationalFunction RationalFunction::indicator(const PointSet& e) {
    RationalFunction f(e.modulus(), e.dim());
    for (Int i : e.indices()) f.set(i, BigRational(1));
    return f;
}

BigRational RationalFunction::sum() const {
    BigRational s(0);
    for (const BigRational& x : v_) s += x;
    return s;
}

BigRational RationalFunction::average() const {
    BigRational s = sum();
    s /= BigRational(domain_size());
    return s;
}

BigRational RationalFunction::sum_of_squares() const {
    BigRational s(0);
    for (const BigRational& x : v_) s += x * x;
    return s;
}

Spectrum::Spectrum(PrimeModulus p, int d)
    : p_(p), d_(d),
      v_(static_cast<std::size_t>(power_checked(p.value(), d)), CycNum(p)) {}

void Spectrum::set(Int index, CycNum value) {
    if (!(value.modulus() == p_))
        throw Error(ErrorKind::ModulusMismatch, "coefficient conductor differs from the spectrum's");
    v_[static_cast<std::size_t>(index)] = std::move(value);
}

Spectrum dft(const RationalFunction& f, int threads) {
    Int p = f.modulus().value();
    int d = f.dim();
    Int n = f.domain_size();
    Spectrum out(f.modulus(), d);
    std::vector<std::vector<Int>> coords(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = decode_coords(i, p, d);
    BigRational inv_n(1, n);
    std::vector<CycNum> slots(static_cast<std::size_t>(n), CycNum(f.modulus()));
    detail::parallel_for(n, threads, [&](Int mi) {
        const auto& m = coords[static_cast<std::size_t>(mi)];
        CycNum acc(f.modulus());
        for (Int xi = 0; xi < n; ++xi) {
            const BigRational& fx = f.at(xi);
            if (fx == 0) continue;
            const auto& x = coords[static_cast<std::size_t>(xi)];
            Int e = 0;
            for (int j = 0; j < d; ++j) e = mod_add(e, mod_mul(x[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j)], p), p);
            acc.add_scaled_power(e, fx);
        }
        acc.scale(inv_n);
        slots[static_cast<std::size_t>(mi)] = std::move(acc);
    });
    for (Int mi = 0; mi < n; ++mi) out.set(mi, std::move(slots[static_cast<std::size_t>(mi)]));
    return out;
}

RationalFunction inverse_dft(const Spectrum& s, int threads) {
    Int p = s.modulus().value();
    int d = s.dim();
    Int n = s.domain_size();
    RationalFunction out(s.modulus(), d);
    std::vector<std::vector<Int>> coords(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = decode_coords(i, p, d);
    std::vector<BigRational> slots(static_cast<std::size_t>(n), BigRational(0));
    detail::parallel_for(n, threads, [&](Int xi) {
        const auto& x = coords[static_cast<std::size_t>(xi)];
        CycNum acc(s.modulus());
        for (Int mi = 0; mi < n; ++mi) {
            const CycNum& fm = s.at(mi);
            if (fm.is_zero()) continue;
            const auto& m = coords[static_cast<std::size_t>(mi)];
            Int e = 0;
            for (int j = 0; j < d; ++j) e = mod_add(e, mod_mul(x[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j)], p), p);
            acc.add_shifted(fm, -e);
        }
        slots[static_cast<std::size_t>(xi)] = acc.to_rational();
    });
    for (Int xi = 0; xi < n; ++xi) out.set(xi, slots[static_cast<std::size_t>(xi)]);
    return out;
}

CycNum point_spectrum(const PointSet& e, const FpVector& m) {
    if (!(e.modulus() == m.modulus()) || e.dim() != m.dim())
        throw Error(ErrorKind::DimensionMismatch, "frequency does not live in the set's space");
    Int p = e.modulus().value();
    CycNum acc(e.modulus());
    BigRational one(1);
    for (Int i : e.indices()) {
        auto x = decode_coords(i, p, e.dim());
        Int ex = 0;
        for (int j = 0; j < e.dim(); ++j) ex = mod_add(ex, mod_mul(x[static_cast<std::size_t>(j)], m[j], p), p);
        acc.add_scaled_power(ex, one);
    }
    acc.scale(BigRational(1, power_checked(p, e.dim())));
    return acc;
}

CycNum point_spectrum(const RationalFunction& f, const FpVector& m) {
    require_same_space_fn(f, m);
    Int p = f.modulus().value();
    int d = f.dim();
    Int n = f.domain_size();
    CycNum acc(f.modulus());
    for (Int xi = 0; xi < n; ++xi) {
        const BigRational& fx = f.at(xi);
        if (fx == 0) continue;
        auto x = decode_coords(xi, p, d);
        Int e = 0;
        for (int j = 0; j < d; ++j) e = mod_add(e, mod_mul(x[static_cast<std::size_t>(j)], m[j], p), p);
        acc.add_scaled_power(e, fx);
    }
    acc.scale(BigRational(1, n));
    return acc;
}

std::vector<FpVector> zero_set(const Spectrum& s) {
    std::vector<FpVector> out;
    for (Int i = 1; i < s.domain_size(); ++i)
        if (s.at(i).is_zero()) out.push_back(decode_point(i, s.modulus(), s.dim()));
    return out;
}

EquidistributionResult equidistribution_check(const PointSet& e, const FpVector& m) {
    if (!(e.modulus() == m.modulus()) || e.dim() != m.dim())
        throw Error(ErrorKind::DimensionMismatch, "direction does not live in the set's space");
    require_nonzero_direction(m);
    Int p = e.modulus().value();
    std::vector<Int> counts(static_cast<std::size_t>(p), 0);
    for (Int i : e.indices()) {
        auto x = decode_coords(i, p, e.dim());
        Int t = 0;
        for (int j = 0; j < e.dim(); ++j) t = mod_add(t, mod_mul(x[static_cast<std::size_t>(j)], m[j], p), p);
        ++counts[static_cast<std::size_t>(t)];
    }
    bool flat = true;
    for (Int c : counts) flat = flat && c == counts[0];
    return {std::move(counts), flat};
}

bool tiling_fourier_check(const PointSet& e, const PointSet& a, Int k) {
    detail::require_same_space(e, a);
    Int n = power_checked(e.modulus().value(), e.dim());
    if (e.size() * a.size() != k * n) return false;
    for (const FpVector& m : directions(e.modulus(), e.dim())) {
        CycNum eh = point_spectrum(e, m);
        if (eh.is_zero()) continue;
        if (!point_spectrum(a, m).is_zero()) return false;
    }
    return true;
}

bool galois_symmetry_check(const Spectrum& s) {
    Int p = s.modulus().value();
    for (const FpVector& m : directions(s.modulus(), s.dim())) {
        const CycNum& base = s.at(m);
        for (Int r = 1; r < p; ++r) {
            if (!(s.at(m.scaled(r)) == galois_apply(r, base))) return false;
        }
    }
    return true;
}

CompressedSpectrum compress_spectrum(const RationalFunction& f) {
    Spectrum s = dft(f);
    CompressedSpectrum out{f.modulus().value(), f.dim(), s.at(Int(0)).to_rational(), {}};
    for (const FpVector& m : directions(f.modulus(), f.dim())) out.line_coeffs.push_back(s.at(m));
    return out;
}

RationalFunction decompress_spectrum(const CompressedSpectrum& c) {
    PrimeModulus p(c.p);
    auto dirs = directions(p, c.d);
    if (dirs.size() != c.line_coeffs.size())
        throw Error(ErrorKind::DimensionMismatch, "one coefficient per direction is required");
    Spectrum s(p, c.d);
    s.set(Int(0), CycNum::from_rational(p, c.mean));
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        for (Int r = 1; r < c.p; ++r)
            s.set(dirs[i].scaled(r), galois_apply(r, c.line_coeffs[i]));
    }
    return inverse_dft(s);
}

TraceIdentityReport trace_identity(const RationalFunction& f, const FpVector& m) {
    require_same_space_fn(f, m);
    require_nonzero_direction(m);
    Int p = f.modulus().value();
    CycNum base = point_spectrum(f, m);
    CycNum line_sum(f.modulus());
    CycNum line_energy(f.modulus());
    for (Int r = 1; r < p; ++r) {
        CycNum coeff = galois_apply(r, base);
        line_sum += coeff;
        line_energy += abs_sq(coeff);
    }
    TraceIdentityReport rep{line_sum.to_rational(), trace(base), line_energy.to_rational(),
                            trace(abs_sq(base))};
    if (rep.line_sum != rep.trace_value || rep.line_energy != rep.trace_energy)
        throw Error(ErrorKind::InternalContradiction, "trace identity failed on exact data");
    return rep;
}

HyperplaneStats hyperplane_stats(const RationalFunction& f, const FpVector& m) {
    require_same_space_fn(f, m);
    require_nonzero_direction(m);
    Int p = f.modulus().value();
    int d = f.dim();
    Int n = f.domain_size();
    std::vector<BigRational> mu(static_cast<std::size_t>(p), BigRational(0));
    for (Int xi = 0; xi < n; ++xi) {
        const BigRational& fx = f.at(xi);
        if (fx == 0) continue;
        auto x = decode_coords(xi, p, d);
        Int t = 0;
        for (int j = 0; j < d; ++j) t = mod_add(t, mod_mul(x[static_cast<std::size_t>(j)], m[j], p), p);
        mu[static_cast<std::size_t>(t)] += fx;
    }
    BigRational slice(1, n / p);
    for (BigRational& v : mu) v *= slice;
    BigRational mean(0);
    for (const BigRational& v : mu) mean += v;
    mean /= BigRational(p);
    if (mean != f.average())
        throw Error(ErrorKind::InternalContradiction, "hyperplane means do not average to the global mean");
    CycNum coeff(f.modulus());
    for (Int t = 0; t < p; ++t) coeff.add_scaled_power(t, mu[static_cast<std::size_t>(t)]);
    coeff.scale(BigRational(1, p));
    if (!(coeff == point_spectrum(f, m)))
        throw Error(ErrorKind::InternalContradiction, "hyperplane means do not reconstruct the coefficient");
    BigRational variance(0);
    for (const BigRational& v : mu) {
        BigRational delta = v - mean;
        variance += delta * delta;
    }
    variance /= BigRational(p);
    if (variance != trace(abs_sq(coeff)))
        throw Error(ErrorKind::InternalContradiction, "variance does not match the trace of |F(m)|^2");
    return {m, std::move(mu), std::move(mean), std::move(variance), std::move(coeff)};
}

BigRational plancherel_check(const RationalFunction& f) {
    Spectrum s = dft(f);
    CycNum lhs(f.modulus());
    for (Int i = 0; i < s.domain_size(); ++i) lhs += abs_sq(s.at(i));
    BigRational energy = lhs.to_rational();
    BigRational rhs = f.sum_of_squares();
    rhs /= BigRational(f.domain_size());
    if (energy != rhs)
        throw Error(ErrorKind::InternalContradiction, "spectral energy does not match mean square");
    return energy;
}

}  // namespace fftile
