#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fftile/fp.hpp"

namespace fftile {

/// Outcome of direct multiplicity counting: histogram of coverage
/// multiplicities over all of F_p^d. (E, A) k-tiles exactly when the
/// histogram is the single entry {k: p^d}.
struct TilingReport {
    bool holds;
    Int level;                      ///< k that was tested
    std::map<Int, Int> histogram;   ///< multiplicity -> number of points
};

TilingReport tiling_direct_check(const PointSet& e, const PointSet& a, Int k);

enum class WitnessKind { AxisAligned, OrthogonalBasis, IsotropicBasis };

const char* witness_kind_name(WitnessKind kind);

/// Certificate that E is the graph of a function between complementary
/// coordinate subspaces: in the listed basis (domain vectors first),
///   E = { sum_i x_i b_i + sum_j f_j(x) b_{s+j} : x in F_p^s }.
/// `values` is indexed by the encoded domain point x and stores the d-s
/// codomain coordinates f(x). For a plane curve (s = 1, d = 2) `poly`
/// carries the interpolating polynomial of f, degree <= p-1,
/// coefficients in increasing-power order.
struct GraphWitness {
    WitnessKind kind;
    int s;
    std::vector<FpVector> basis;
    std::vector<std::vector<Int>> values;
    std::optional<std::vector<Int>> poly;

    PrimeModulus modulus() const { return basis.at(0).modulus(); }
    int dim() const { return basis.at(0).dim(); }
};

/// Points realised by a witness, independent of how it was found.
PointSet graph_points(const GraphWitness& w);

/// Checks the witness invariant: basis linearly independent, value
/// table complete, and (when present) the polynomial matching the
/// values. Throws InternalContradiction on violation.
void validate_witness(const GraphWitness& w);

/// The complementary coordinate subspace spanned by the codomain basis
/// vectors; it tiles F_p^d with any graph over the domain subspace.
PointSet graph_tiling_partner(const GraphWitness& w);

/// Decides whether E is a graph between complementary subspaces and
/// produces a witness. |E| must be a power p^s of p (UnsupportedSize
/// otherwise); detection is implemented for s in {0, 1, d-1, d}, which
/// covers every case the structure theorems require.
std::optional<GraphWitness> is_graph(const PointSet& e);

/// Graph witness for E along a prescribed direction m with one point of
/// E on each hyperplane x.m = t, or nullopt when E is not such a graph.
std::optional<GraphWitness> graph_witness_along(const PointSet& e, const FpVector& m);

enum class PlaneTilingKind { Singleton, FullPlane, Graph };

const char* plane_tiling_kind_name(PlaneTilingKind kind);

struct PlaneClassification {
    PlaneTilingKind kind;
    std::optional<GraphWitness> witness;
};

/// Trichotomy for 1-tilings of the plane: E is a point, the whole
/// plane, or the graph of a polynomial function of degree <= p-1 in a
/// suitable basis. Throws NotATiling when (E, A) is not a 1-tiling and
/// UnsupportedDim when d != 2.
PlaneClassification classify_plane_tiling(const PointSet& e, const PointSet& a);

enum class KTilingKind { KPoints, FullPlane, GraphUnion };

const char* k_tiling_kind_name(KTilingKind kind);

struct KTilingDecomposition {
    KTilingKind kind;
    Int s;                              ///< graphs per direction; s | k
    std::optional<FpVector> direction;  ///< common direction of the parts
    std::vector<GraphWitness> parts;    ///< s disjoint graphs partitioning E
};

/// Structure of k-tilings of the plane: k points against the full
/// plane, the full plane against k points, or a disjoint union of s
/// graphs along one direction where s = |E|/p divides k.
KTilingDecomposition decompose_k_tiling(const PointSet& e, const PointSet& a, Int k);

enum class GraphicalSide { EIsGraph, AIsGraph };

struct GraphicalCheckResult {
    GraphicalSide side;
    GraphWitness witness;
};

/// For a 1-tiling (E, A) with d = 3, or with |E| in {1, p, p^(d-1), p^d},
/// one of the two sets is a graph; returns which one with its witness.
/// Outside those hypotheses returns nullopt when neither is detected.
std::optional<GraphicalCheckResult> graphical_check(const PointSet& e, const PointSet& a);

/// Coefficients (increasing powers, length p) of the unique polynomial
/// of degree <= p-1 through all p points (t, values[t]).
std::vector<Int> interpolate_poly(PrimeModulus p, std::span<const Int> values);

/// Map form; the domain must be exactly {0, ..., p-1} (IncompleteDomain
/// otherwise).
std::vector<Int> interpolate_poly(PrimeModulus p, const std::map<Int, Int>& values);

Int eval_poly(PrimeModulus p, std::span<const Int> coeffs, Int x);

/// Direct, frequency-space and quotient-ring verdicts side by side.
/// They are provably equivalent, so `agree` failing is a defect.
struct TilingVerdicts {
    TilingReport direct;
    bool fourier;
    bool poly;
    bool agree;
    bool holds;
};

TilingVerdicts verify_tiling(const PointSet& e, const PointSet& a, Int k);

/// All sets A that 1-tile with E, found by exact-cover backtracking in
/// lexicographic order; `limit` caps how many are returned (0 = all).
std::vector<PointSet> enumerate_cotilers(const PointSet& e, Int limit = 0);

}  // namespace fftile
