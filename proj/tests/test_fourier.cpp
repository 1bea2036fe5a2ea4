#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fftile/fourier.hpp"

using namespace fftile;

namespace {

RationalFunction random_function(PrimeModulus p, int d, std::mt19937& rng) {
    RationalFunction f(p, d);
    for (Int i = 0; i < f.domain_size(); ++i) {
        Int num = static_cast<Int>(rng() % 19) - 9;
        Int den = 1 + static_cast<Int>(rng() % 9);
        BigRational c(num, den);
        c.canonicalize();
        f.set(i, c);
    }
    return f;
}

PointSet random_set(PrimeModulus p, int d, std::mt19937& rng) {
    std::vector<Int> idx;
    Int n = power_checked(p.value(), d);
    for (Int i = 0; i < n; ++i)
        if (rng() % 2) idx.push_back(i);
    if (idx.empty()) idx.push_back(static_cast<Int>(rng() % n));
    return {p, d, std::move(idx)};
}

}  // namespace

TEST_CASE("transform of point masses") {
    PrimeModulus p(5);
    PointSet origin(p, 1, {0});
    Spectrum s = dft(RationalFunction::indicator(origin));
    for (Int m = 0; m < 5; ++m) CHECK(s.at(m) == CycNum::from_rational(p, BigRational(1, 5)));

    PointSet one(p, 1, {1});
    Spectrum s1 = dft(RationalFunction::indicator(one));
    for (Int m = 0; m < 5; ++m) {
        CycNum expected = CycNum::root_power(p, m);
        expected.scale(BigRational(1, 5));
        CHECK(s1.at(m) == expected);
    }
}

TEST_CASE("inversion recovers the function") {
    std::mt19937 rng(31);
    for (Int pv : {2, 3, 5}) {
        PrimeModulus p(pv);
        for (int d = 1; d <= 2; ++d) {
            for (int trial = 0; trial < 8; ++trial) {
                RationalFunction f = random_function(p, d, rng);
                CHECK(inverse_dft(dft(f)) == f);
            }
        }
    }
}

TEST_CASE("threaded transform is identical") {
    std::mt19937 rng(77);
    PrimeModulus p(5);
    RationalFunction f = random_function(p, 2, rng);
    CHECK(dft(f, 4) == dft(f, 1));
    CHECK(inverse_dft(dft(f), 3) == f);
}

TEST_CASE("single-frequency evaluation matches the full transform") {
    std::mt19937 rng(13);
    PrimeModulus p(5);
    for (int trial = 0; trial < 10; ++trial) {
        PointSet e = random_set(p, 2, rng);
        Spectrum s = dft(RationalFunction::indicator(e));
        for (Int mi = 0; mi < 25; ++mi) {
            FpVector m = decode_point(mi, p, 2);
            CHECK(point_spectrum(e, m) == s.at(mi));
        }
    }
}

TEST_CASE("zero set of a line indicator") {
    PrimeModulus p(3);
    PointSet h(p, 2, {});
    h = PointSet::from_points(p, 2, {FpVector(p, {0, 0}), FpVector(p, {1, 0}), FpVector(p, {2, 0})});
    Spectrum s = dft(RationalFunction::indicator(h));
    auto zeros = zero_set(s);
    CHECK(zeros.size() == 6);
    for (const FpVector& m : zeros) CHECK(m[0] != 0);
}

TEST_CASE("equidistribution counts") {
    PrimeModulus p(3);
    PointSet h = PointSet::from_points(
        p, 2, {FpVector(p, {0, 0}), FpVector(p, {1, 0}), FpVector(p, {2, 0})});
    auto along = equidistribution_check(h, FpVector(p, {1, 0}));
    CHECK(along.equidistributed);
    CHECK(along.counts == std::vector<Int>{1, 1, 1});
    auto across = equidistribution_check(h, FpVector(p, {0, 1}));
    CHECK(!across.equidistributed);
    CHECK(across.counts == std::vector<Int>{3, 0, 0});
    CHECK_THROWS_AS(equidistribution_check(h, FpVector(p, {0, 0})), Error);
}

TEST_CASE("equidistribution is equivalent to a vanishing coefficient") {
    std::mt19937 rng(5);
    PrimeModulus p(5);
    for (int trial = 0; trial < 40; ++trial) {
        PointSet e = random_set(p, 2, rng);
        for (const FpVector& m : directions(p, 2)) {
            bool flat = equidistribution_check(e, m).equidistributed;
            bool vanishes = point_spectrum(e, m).is_zero();
            CHECK(flat == vanishes);
        }
    }
}

TEST_CASE("frequency-space tiling criterion") {
    PrimeModulus p(3);
    PointSet h = PointSet::from_points(
        p, 2, {FpVector(p, {0, 0}), FpVector(p, {1, 0}), FpVector(p, {2, 0})});
    PointSet hperp = PointSet::from_points(
        p, 2, {FpVector(p, {0, 0}), FpVector(p, {0, 1}), FpVector(p, {0, 2})});
    CHECK(tiling_fourier_check(h, hperp, 1));
    CHECK(!tiling_fourier_check(h, hperp, 2));
    CHECK(!tiling_fourier_check(h, h, 1));

    PrimeModulus p5(5);
    PointSet e(p5, 1, {0, 1});
    CHECK(tiling_fourier_check(e, PointSet::full_space(p5, 1), 2));
    CHECK(!tiling_fourier_check(e, PointSet(p5, 1, {0, 1}), 1));
}

TEST_CASE("galois symmetry characterises rational spectra") {
    std::mt19937 rng(404);
    PrimeModulus p(5);
    RationalFunction f = random_function(p, 2, rng);
    Spectrum s = dft(f);
    CHECK(galois_symmetry_check(s));
    Spectrum broken = s;
    broken.set(FpVector(p, {1, 1}), CycNum::root_power(p, 1));
    CHECK(!galois_symmetry_check(broken));
}

TEST_CASE("compression round trip") {
    std::mt19937 rng(909);
    for (Int pv : {2, 3, 5}) {
        PrimeModulus p(pv);
        for (int d = 1; d <= 2; ++d) {
            for (int trial = 0; trial < 6; ++trial) {
                RationalFunction f = random_function(p, d, rng);
                CompressedSpectrum c = compress_spectrum(f);
                CHECK(c.mean == f.average());
                CHECK(decompress_spectrum(c) == f);
            }
        }
    }
}

TEST_CASE("trace identities on a point mass") {
    PrimeModulus p(5);
    RationalFunction f = RationalFunction::indicator(PointSet(p, 1, {1}));
    auto rep = trace_identity(f, FpVector(p, {1}));
    CHECK(rep.line_sum == BigRational(-1, 5));
    CHECK(rep.trace_value == BigRational(-1, 5));
    CHECK(rep.line_energy == BigRational(4, 25));
    CHECK(rep.trace_energy == BigRational(4, 25));
}

TEST_CASE("trace identities hold for random data") {
    std::mt19937 rng(606);
    for (Int pv : {3, 5, 7}) {
        PrimeModulus p(pv);
        RationalFunction f = random_function(p, 1, rng);
        (void)trace_identity(f, FpVector(p, {1}));
    }
    PrimeModulus p(5);
    for (int trial = 0; trial < 5; ++trial) {
        RationalFunction f = random_function(p, 2, rng);
        for (const FpVector& m : directions(p, 2)) (void)trace_identity(f, m);
    }
}

TEST_CASE("hyperplane statistics of a point mass") {
    PrimeModulus p(3);
    RationalFunction f = RationalFunction::indicator(PointSet(p, 2, {0}));
    HyperplaneStats st = hyperplane_stats(f, FpVector(p, {1, 0}));
    CHECK(st.mu == std::vector<BigRational>{BigRational(1, 3), BigRational(0), BigRational(0)});
    CHECK(st.mean == BigRational(1, 9));
    CHECK(st.variance == BigRational(2, 81));
}

TEST_CASE("energy decomposes into mean and directional variances") {
    std::mt19937 rng(4242);
    for (Int pv : {2, 3, 5}) {
        PrimeModulus p(pv);
        for (int d = 1; d <= 2; ++d) {
            RationalFunction f = random_function(p, d, rng);
            BigRational mean = f.average();
            BigRational total = mean * mean;
            for (const FpVector& m : directions(p, d))
                total += hyperplane_stats(f, m).variance;
            BigRational energy = f.sum_of_squares();
            energy /= BigRational(f.domain_size());
            CHECK(total == energy);
            CHECK(plancherel_check(f) == energy);
        }
    }
}
