#include "fftile/packing.hpp"

#include <algorithm>
#include <string>

#include "fftile/clique.hpp"
#include "fftile/detail/parallel.hpp"

namespace fftile {

namespace {

void require_odd(PrimeModulus p) {
    if (!p.odd())
        throw Error(ErrorKind::EvenModulus, "circle geometry needs an odd modulus");
}

/// Encoded points of the origin-centered circle of squared radius r.
std::vector<Int> base_circle(PrimeModulus p, Int r) {
    Int pv = p.value();
    auto roots = sqrt_table(p);
    std::vector<Int> out;
    for (Int x = 0; x < pv; ++x) {
        Int s = mod_sub(r, mod_mul(x, x, pv), pv);
        Int y = roots[static_cast<std::size_t>(s)];
        if (y < 0) continue;
        out.push_back(x * pv + y);
        if (y != 0) out.push_back(x * pv + mod_reduce(-y, pv));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int translate_index(Int idx, Int shift, Int pv) {
    Int x = idx / pv + shift / pv;
    Int y = idx % pv + shift % pv;
    return (x % pv) * pv + y % pv;
}

bool translates_disjoint(const std::vector<char>& base_mask, const std::vector<Int>& base,
                         Int delta, Int pv) {
    for (Int idx : base)
        if (base_mask[static_cast<std::size_t>(translate_index(idx, delta, pv))]) return false;
    return true;
}

std::vector<char> mask_of(const std::vector<Int>& idx, Int n) {
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (Int i : idx) m[static_cast<std::size_t>(i)] = 1;
    return m;
}

std::vector<PairDistance> pair_norms_of(const std::vector<FpVector>& centers) {
    std::vector<PairDistance> out;
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            out.push_back({static_cast<int>(i), static_cast<int>(j), norm(centers[i] - centers[j])});
    return out;
}

/// Shared clique machinery on a translation-invariant disjointness
/// relation over F_p^d: edges depend only on the difference class, so
/// some maximum clique contains the origin and the search restricts to
/// the origin's neighbourhood.
struct CayleyCliqueProblem {
    PrimeModulus p;
    Int n;
    const std::vector<char>& ok;  ///< indexed by encoded difference; ok[0] unused

    std::vector<Int> origin_neighbours() const {
        std::vector<Int> out;
        for (Int w = 1; w < n; ++w)
            if (ok[static_cast<std::size_t>(w)]) out.push_back(w);
        return out;
    }

    BitGraph neighbourhood_graph(const std::vector<Int>& verts, int d) const {
        BitGraph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i) {
            FpVector vi = decode_point(verts[i], p, d);
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                FpVector vj = decode_point(verts[j], p, d);
                if (ok[static_cast<std::size_t>(encode_point(vi - vj))])
                    g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
        return g;
    }
};

std::vector<FpVector> lift_clique(const std::vector<Int>& verts, const std::vector<int>& clique,
                                  PrimeModulus p, int d) {
    std::vector<FpVector> out;
    out.push_back(zero_vector(p, d));
    for (int v : clique) out.push_back(decode_point(verts[static_cast<std::size_t>(v)], p, d));
    std::sort(out.begin(), out.end());
    return out;
}

/// Disjointness table for radius-c circles indexed by center difference.
std::vector<char> circle_difference_table(PrimeModulus p, Int c, bool zero_distance_pairs,
                                          int threads) {
    Int pv = p.value();
    Int n = pv * pv;
    AdmissibleSet adm = admissible_set(p, c);
    std::vector<Int> base = base_circle(p, c);
    std::vector<char> base_mask = mask_of(base, n);
    std::vector<char> ok(static_cast<std::size_t>(n), 0);
    detail::parallel_for(n - 1, threads, [&](Int t) {
        Int w = t + 1;
        Int r = norm(decode_point(w, p, 2));
        if (r != 0) {
            ok[static_cast<std::size_t>(w)] = adm.contains(r);
        } else if (zero_distance_pairs) {
            ok[static_cast<std::size_t>(w)] = translates_disjoint(base_mask, base, w, pv);
        }
    });
    return ok;
}

void certify_circle_packing(PackingResult& result, const std::vector<Int>& base) {
    Int pv = result.p;
    Int n = pv * pv;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const FpVector& center : result.centers) {
        Int shift = encode_point(center);
        for (Int idx : base) {
            Int t = translate_index(idx, shift, pv);
            if (seen[static_cast<std::size_t>(t)])
                throw Error(ErrorKind::InternalContradiction,
                            "admissible centers produced overlapping circles");
            seen[static_cast<std::size_t>(t)] = true;
        }
    }
    result.certified = true;
    result.density = BigRational(static_cast<Int>(base.size()) *
                                     static_cast<Int>(result.centers.size()),
                                 n);
    result.density.canonicalize();
}

}  // namespace

const char* packing_kind_name(PackingKind kind) {
    switch (kind) {
        case PackingKind::SimplexSearch: return "simplex-search";
        case PackingKind::Isotropic: return "isotropic";
        case PackingKind::CliqueOptimal: return "clique-optimal";
    }
    return "unknown";
}

PointSet circle_points(const Circle& c) {
    PrimeModulus p = c.center.modulus();
    require_odd(p);
    if (c.center.dim() != 2)
        throw Error(ErrorKind::UnsupportedDim, "circles live in the plane");
    Int pv = p.value();
    std::vector<Int> idx = base_circle(p, mod_reduce(c.radius, pv));
    for (Int& i : idx) i = translate_index(i, encode_point(c.center), pv);
    return {p, 2, std::move(idx)};
}

int triangle_count(PrimeModulus p, Int l1, Int l2, Int l3) {
    require_odd(p);
    Int pv = p.value();
    l1 = mod_reduce(l1, pv);
    if (l1 == 0) throw Error(ErrorKind::ZeroBase, "triangle base must have nonzero squared length");
    Int s1 = mod_add(mod_add(l1, l2, pv), l3, pv);
    Int s2 = mod_add(mod_add(mod_mul(l1, l2, pv), mod_mul(l1, l3, pv), pv), mod_mul(l2, l3, pv), pv);
    Int disc = mod_sub(mod_mul(4, s2, pv), mod_mul(s1, s1, pv), pv);
    switch (quad_class(disc, p)) {
        case QuadClass::NonzeroSquare: return 2;
        case QuadClass::Zero: return 1;
        case QuadClass::NonSquare: return 0;
    }
    return 0;
}

int circle_intersection_count(PrimeModulus p, Int c, Int R) {
    require_odd(p);
    Int pv = p.value();
    c = mod_reduce(c, pv);
    R = mod_reduce(R, pv);
    if (c == 0) throw Error(ErrorKind::ZeroRadius, "circles must have nonzero squared radius");
    if (R == 0) throw Error(ErrorKind::ZeroDistance, "centers must be at nonzero squared distance");
    Int disc = mod_mul(R, mod_sub(mod_mul(4, c, pv), R, pv), pv);
    switch (quad_class(disc, p)) {
        case QuadClass::NonzeroSquare: return 2;
        case QuadClass::Zero: return 1;
        case QuadClass::NonSquare: return 0;
    }
    return 0;
}

bool AdmissibleSet::contains(Int r) const {
    return std::binary_search(distances.begin(), distances.end(), mod_reduce(r, p));
}

AdmissibleSet admissible_set(PrimeModulus p, Int c) {
    require_odd(p);
    Int pv = p.value();
    c = mod_reduce(c, pv);
    if (c == 0) throw Error(ErrorKind::ZeroRadius, "circles must have nonzero squared radius");
    AdmissibleSet out{pv, c, {}};
    for (Int r = 1; r < pv; ++r)
        if (circle_intersection_count(p, c, r) == 0) out.distances.push_back(r);
    return out;
}

std::optional<PackingResult> pack_circles(PrimeModulus p, Int c, Int k,
                                          bool allow_zero_distance, const PackOptions& options) {
    require_odd(p);
    Int pv = p.value();
    c = mod_reduce(c, pv);
    if (c == 0) throw Error(ErrorKind::ZeroRadius, "circles must have nonzero squared radius");
    if (k < 1) throw Error(ErrorKind::BadIndex, "a packing has at least one circle");
    std::vector<Int> base = base_circle(p, c);
    PackingResult result{pv, 2, PackingKind::SimplexSearch, c, false, {}, {}, BigRational(0)};
    if (k == 1) {
        result.centers.push_back(zero_vector(p, 2));
        certify_circle_packing(result, base);
        return result;
    }
    std::vector<char> ok = circle_difference_table(p, c, allow_zero_distance, options.threads);
    CayleyCliqueProblem problem{p, pv * pv, ok};
    std::vector<Int> verts = problem.origin_neighbours();
    if (static_cast<Int>(verts.size()) < k - 1) return std::nullopt;
    BitGraph g = problem.neighbourhood_graph(verts, 2);
    auto clique = lex_min_clique(g, static_cast<int>(k - 1), options.node_budget);
    if (!clique) return std::nullopt;
    result.centers = lift_clique(verts, *clique, p, 2);
    result.pair_norms = pair_norms_of(result.centers);
    certify_circle_packing(result, base);
    return result;
}

PackingNumber packing_number(PrimeModulus p, Int c, PackingMode mode,
                             const PackOptions& options) {
    require_odd(p);
    Int pv = p.value();
    c = mod_reduce(c, pv);
    if (c == 0) throw Error(ErrorKind::ZeroRadius, "circles must have nonzero squared radius");
    std::vector<Int> base = base_circle(p, c);
    std::vector<char> ok =
        circle_difference_table(p, c, mode == PackingMode::Full, options.threads);
    CayleyCliqueProblem problem{p, pv * pv, ok};
    std::vector<Int> verts = problem.origin_neighbours();
    PackingResult witness{pv, 2, PackingKind::CliqueOptimal, c, false, {}, {}, BigRational(0)};
    Int value = 1;
    if (!verts.empty()) {
        BitGraph g = problem.neighbourhood_graph(verts, 2);
        std::vector<int> best = max_clique(g, options.node_budget);
        value = static_cast<Int>(best.size()) + 1;
        auto lex = lex_min_clique(g, static_cast<int>(best.size()), options.node_budget);
        if (!lex)
            throw Error(ErrorKind::InternalContradiction,
                        "maximum clique size has no witness of that size");
        witness.centers = lift_clique(verts, *lex, p, 2);
    } else {
        witness.centers.push_back(zero_vector(p, 2));
    }
    witness.pair_norms = pair_norms_of(witness.centers);
    certify_circle_packing(witness, base);
    return {value, std::move(witness)};
}

IsotropicPacking isotropic_pack(PrimeModulus p, Int c) {
    require_odd(p);
    Int pv = p.value();
    if (pv % 4 != 1)
        throw Error(ErrorKind::BadResidue, "an isotropic line needs p = 1 (mod 4)");
    c = mod_reduce(c, pv);
    if (c == 0) throw Error(ErrorKind::ZeroRadius, "circles must have nonzero squared radius");
    Int i = 0;
    for (Int t = 1; t < pv; ++t)
        if (mod_mul(t, t, pv) == pv - 1) { i = t; break; }
    std::vector<Int> base = base_circle(p, c);
    PackingResult packing{pv, 2, PackingKind::Isotropic, c, false, {}, {}, BigRational(0)};
    for (Int t = 0; t < pv; ++t)
        packing.centers.push_back(FpVector(p, {t, mod_mul(i, t, pv)}));
    std::sort(packing.centers.begin(), packing.centers.end());
    packing.pair_norms = pair_norms_of(packing.centers);
    certify_circle_packing(packing, base);
    Int n = pv * pv;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (const FpVector& center : packing.centers) {
        Int shift = encode_point(center);
        for (Int idx : base) covered[static_cast<std::size_t>(translate_index(idx, shift, pv))] = true;
    }
    std::vector<Int> rest;
    for (Int idx = 0; idx < n; ++idx)
        if (!covered[static_cast<std::size_t>(idx)]) rest.push_back(idx);
    PointSet complement(p, 2, std::move(rest));
    PointSet line = PointSet::from_points(p, 2, packing.centers);
    if (!(complement == line))
        throw Error(ErrorKind::InternalContradiction,
                    "isotropic circle union must miss exactly the center line");
    return {std::move(packing), std::move(complement), i};
}

SpherePackReport sphere_pack_check(PrimeModulus p, int d, Int t, bool exploratory) {
    Int pv = p.value();
    t = mod_reduce(t, pv);
    if (t == 0) throw Error(ErrorKind::ZeroRadius, "sphere must have nonzero squared radius");
    if (d < 4 && !exploratory)
        throw Error(ErrorKind::UnsupportedDim,
                    "the packing theorem needs d >= 4; pass exploratory to probe lower d");
    Int n = power_checked(pv, d);
    std::vector<Int> sphere;
    for (Int idx = 0; idx < n; ++idx)
        if (norm(decode_point(idx, p, d)) == t) sphere.push_back(idx);
    SpherePackReport report{static_cast<Int>(sphere.size()), true, std::nullopt, {}};
    std::vector<char> mask = mask_of(sphere, n);
    for (Int v = 1; v < n; ++v) {
        FpVector shift = decode_point(v, p, d);
        bool met = false;
        for (Int idx : sphere) {
            FpVector x = decode_point(idx, p, d);
            if (mask[static_cast<std::size_t>(encode_point(x + shift))]) {
                report.witnesses.push_back({shift, x});
                met = true;
                break;
            }
        }
        if (!met) {
            report.packs_alone = false;
            report.disjoint_shift = shift;
            if (d >= 4)
                throw Error(ErrorKind::InternalContradiction,
                            "a sphere translate came out disjoint at d >= 4");
            break;
        }
    }
    return report;
}

PackingResult optimal_packing_set(const PointSet& e, const PackOptions& options) {
    if (e.empty()) throw Error(ErrorKind::EmptySet, "cannot pack translates of the empty set");
    PrimeModulus p = e.modulus();
    int d = e.dim();
    Int n = power_checked(p.value(), d);
    PointSet diff = difference_set(e);
    std::vector<char> ok(static_cast<std::size_t>(n), 0);
    for (Int w = 1; w < n; ++w) ok[static_cast<std::size_t>(w)] = !diff.contains(w);
    CayleyCliqueProblem problem{p, n, ok};
    std::vector<Int> verts = problem.origin_neighbours();
    PackingResult result{p.value(), d, PackingKind::CliqueOptimal, 0, false, {}, {}, BigRational(0)};
    if (verts.empty()) {
        result.centers.push_back(zero_vector(p, d));
    } else {
        BitGraph g = problem.neighbourhood_graph(verts, d);
        std::vector<int> best = max_clique(g, options.node_budget);
        auto lex = lex_min_clique(g, static_cast<int>(best.size()), options.node_budget);
        if (!lex)
            throw Error(ErrorKind::InternalContradiction,
                        "maximum clique size has no witness of that size");
        result.centers = lift_clique(verts, *lex, p, d);
    }
    result.pair_norms = pair_norms_of(result.centers);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const FpVector& shift : result.centers) {
        for (const FpVector& x : e.points()) {
            Int idx = encode_point(x + shift);
            if (seen[static_cast<std::size_t>(idx)])
                throw Error(ErrorKind::InternalContradiction,
                            "difference-free shifts produced overlapping translates");
            seen[static_cast<std::size_t>(idx)] = true;
        }
    }
    result.certified = true;
    result.density = BigRational(e.size() * static_cast<Int>(result.centers.size()), n);
    result.density.canonicalize();
    return result;
}

}  // namespace fftile
