#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fftile/fp.hpp"
#include "fftile/rational.hpp"

namespace fftile {

/// Circle in the finite plane: points at squared distance `radius`
/// from the center. `radius` is a residue, not a length.
struct Circle {
    FpVector center;
    Int radius;
};

/// All points of the circle. Requires an odd modulus and d = 2.
PointSet circle_points(const Circle& c);

/// Number of apexes completing a triangle with squared side lengths
/// (l1, l2, l3) over a fixed base of squared length l1 != 0: 2, 1 or 0
/// according to the quadratic class of the discriminant
/// 4(l1 l2 + l1 l3 + l2 l3) - (l1 + l2 + l3)^2.
int triangle_count(PrimeModulus p, Int l1, Int l2, Int l3);

/// |C_c(x) ∩ C_c(y)| for centers at squared distance R != 0: 2, 1 or 0
/// according to the quadratic class of R(4c - R). Throws ZeroRadius on
/// c = 0 and ZeroDistance on R = 0.
int circle_intersection_count(PrimeModulus p, Int c, Int R);

/// Center distances R with R(4c - R) a nonsquare: radius-c circles at
/// squared distance R are disjoint. 0 is never admissible.
struct AdmissibleSet {
    Int p;
    Int c;
    std::vector<Int> distances;

    bool contains(Int r) const;
};

AdmissibleSet admissible_set(PrimeModulus p, Int c);

enum class PackingKind { SimplexSearch, Isotropic, CliqueOptimal };

const char* packing_kind_name(PackingKind kind);

struct PairDistance {
    int i;
    int j;
    Int norm;
};

struct PackingResult {
    Int p;
    int d;
    PackingKind kind;
    Int radius;                         ///< squared radius; 0 for set packings
    bool certified;                     ///< pairwise disjointness re-verified directly
    std::vector<FpVector> centers;      ///< circle centers, or translation shifts
    std::vector<PairDistance> pair_norms;
    BigRational density;                ///< covered fraction of the plane
};

struct PackOptions {
    std::int64_t node_budget = 100000000;
    int threads = 1;
};

/// Searches for k pairwise disjoint radius-c circles. Distances between
/// centers must lie in the admissible set; centers at squared distance 0
/// are allowed only with `allow_zero_distance`, and their circles are
/// checked for disjointness by direct intersection. Returns the
/// lexicographically least witness (which always contains the origin,
/// by translation invariance), or nullopt.
std::optional<PackingResult> pack_circles(PrimeModulus p, Int c, Int k,
                                          bool allow_zero_distance,
                                          const PackOptions& options = {});

enum class PackingMode { NonzeroDistance, Full };

struct PackingNumber {
    Int value;
    PackingResult witness;
};

/// Largest number of pairwise disjoint radius-c circles, by exact
/// maximum clique on the translation-invariant disjointness graph.
/// NonzeroDistance restricts centers to pairwise nonzero squared
/// distances; Full also admits distance-0 pairs with disjoint circles.
PackingNumber packing_number(PrimeModulus p, Int c, PackingMode mode,
                             const PackOptions& options = {});

struct IsotropicPacking {
    PackingResult packing;
    PointSet complement;   ///< the uncovered points: exactly the center line
    Int i;                 ///< least positive residue with i^2 = -1
};

/// For p = 1 (mod 4): the p disjoint radius-c circles centered on the
/// isotropic line {(t, it)}, whose union misses exactly that line.
IsotropicPacking isotropic_pack(PrimeModulus p, Int c);

struct SphereShiftWitness {
    FpVector shift;
    FpVector common_point;   ///< lies on the sphere and on its shift
};

struct SpherePackReport {
    Int sphere_size;
    bool packs_alone;                    ///< no nonzero shift is disjoint
    std::optional<FpVector> disjoint_shift;
    std::vector<SphereShiftWitness> witnesses;  ///< one per nonzero shift
};

/// Verifies that the sphere of squared radius t != 0 meets every
/// nonzero translate of itself, so its optimal packing has size 1.
/// Requires d >= 4 unless `exploratory`; a disjoint shift at d >= 4
/// would contradict the theorem and throws InternalContradiction.
SpherePackReport sphere_pack_check(PrimeModulus p, int d, Int t, bool exploratory = false);

/// Largest A such that the translates {E + a : a in A} are pairwise
/// disjoint, by exact maximum clique; ties resolved lexicographically.
PackingResult optimal_packing_set(const PointSet& e, const PackOptions& options = {});

}  // namespace fftile
