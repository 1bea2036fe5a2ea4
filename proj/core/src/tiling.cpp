#include "fftile/tiling.hpp"

#include <algorithm>
#include <string>

#include "fftile/fourier.hpp"
#include "fftile/polyring.hpp"

namespace fftile {

namespace {

int pivot_index(const FpVector& v) {
    for (int i = 0; i < v.dim(); ++i)
        if (v[i] != 0) return i;
    throw Error(ErrorKind::ZeroDirection, "zero vector has no pivot");
}

/// Reduced-echelon basis of the hyperplane m-perp: one vector per
/// non-pivot coordinate j, b_j = unit_j - m_j unit_pivot. Coordinates
/// of a vector w in m-perp are then just its non-pivot entries.
std::vector<FpVector> perp_basis(const FpVector& m) {
    int i0 = pivot_index(m);
    std::vector<FpVector> out;
    for (int j = 0; j < m.dim(); ++j) {
        if (j == i0) continue;
        FpVector b = unit_vector(m.modulus(), m.dim(), j) -
                     unit_vector(m.modulus(), m.dim(), i0).scaled(m[j]);
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<Int> non_pivot_coords(const FpVector& w, int i0) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(w.dim() - 1));
    for (int j = 0; j < w.dim(); ++j)
        if (j != i0) out.push_back(w[j]);
    return out;
}

bool is_unit_vector(const FpVector& v) {
    int ones = 0;
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] == 1) ++ones;
        else if (v[i] != 0) return false;
    }
    return ones == 1;
}

int rank_mod_p(std::vector<std::vector<Int>> rows, Int p) {
    int n = static_cast<int>(rows.size());
    int cols = n == 0 ? 0 : static_cast<int>(rows[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < n; ++c) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(sel)], rows[static_cast<std::size_t>(rank)]);
        Int inv = mod_inv(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], p);
        for (int r = rank + 1; r < n; ++r) {
            Int f = mod_mul(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], inv, p);
            if (f == 0) continue;
            for (int cc = c; cc < cols; ++cc)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                    mod_sub(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)],
                            mod_mul(f, rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)], p),
                            p);
        }
        ++rank;
    }
    return rank;
}

GraphWitness finish_witness(WitnessKind kind, int s, std::vector<FpVector> basis,
                            std::vector<std::vector<Int>> values) {
    GraphWitness w{kind, s, std::move(basis), std::move(values), std::nullopt};
    if (w.s == 1 && w.dim() == 2) {
        std::vector<Int> f(w.values.size());
        for (std::size_t t = 0; t < w.values.size(); ++t) f[t] = w.values[t][0];
        w.poly = interpolate_poly(w.modulus(), f);
    }
    validate_witness(w);
    return w;
}

}  // namespace

TilingReport tiling_direct_check(const PointSet& e, const PointSet& a, Int k) {
    detail::require_same_space(e, a);
    Int n = power_checked(e.modulus().value(), e.dim());
    std::vector<Int> mult(static_cast<std::size_t>(n), 0);
    auto epts = e.points();
    for (const FpVector& av : a.points())
        for (const FpVector& ev : epts) ++mult[static_cast<std::size_t>(encode_point(ev + av))];
    TilingReport rep{false, k, {}};
    for (Int m : mult) ++rep.histogram[m];
    rep.holds = rep.histogram.size() == 1 && rep.histogram.begin()->first == k;
    return rep;
}

const char* witness_kind_name(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::AxisAligned: return "axis-aligned";
        case WitnessKind::OrthogonalBasis: return "orthogonal-basis";
        case WitnessKind::IsotropicBasis: return "isotropic-basis";
    }
    return "unknown";
}

const char* plane_tiling_kind_name(PlaneTilingKind kind) {
    switch (kind) {
        case PlaneTilingKind::Singleton: return "singleton";
        case PlaneTilingKind::FullPlane: return "full-plane";
        case PlaneTilingKind::Graph: return "graph";
    }
    return "unknown";
}

const char* k_tiling_kind_name(KTilingKind kind) {
    switch (kind) {
        case KTilingKind::KPoints: return "k-points";
        case KTilingKind::FullPlane: return "full-plane";
        case KTilingKind::GraphUnion: return "graph-union";
    }
    return "unknown";
}

PointSet graph_points(const GraphWitness& w) {
    PrimeModulus p = w.modulus();
    int d = w.dim();
    Int dom = power_checked(p.value(), w.s);
    std::vector<FpVector> pts;
    pts.reserve(static_cast<std::size_t>(dom));
    for (Int i = 0; i < dom; ++i) {
        auto x = decode_coords(i, p.value(), w.s);
        FpVector pt = zero_vector(p, d);
        for (int j = 0; j < w.s; ++j) pt = pt + w.basis[static_cast<std::size_t>(j)].scaled(x[static_cast<std::size_t>(j)]);
        const auto& img = w.values[static_cast<std::size_t>(i)];
        for (int j = 0; j < d - w.s; ++j)
            pt = pt + w.basis[static_cast<std::size_t>(w.s + j)].scaled(img[static_cast<std::size_t>(j)]);
        pts.push_back(std::move(pt));
    }
    return PointSet::from_points(p, d, pts);
}

void validate_witness(const GraphWitness& w) {
    if (w.basis.empty())
        throw Error(ErrorKind::InternalContradiction, "witness has no basis");
    PrimeModulus p = w.modulus();
    int d = w.dim();
    if (static_cast<int>(w.basis.size()) != d)
        throw Error(ErrorKind::InternalContradiction, "witness basis does not span the space");
    if (w.s < 0 || w.s > d)
        throw Error(ErrorKind::InternalContradiction, "witness domain dimension out of range");
    std::vector<std::vector<Int>> rows;
    for (const FpVector& b : w.basis) {
        if (!(b.modulus() == p) || b.dim() != d)
            throw Error(ErrorKind::InternalContradiction, "witness basis vectors disagree on the space");
        rows.emplace_back(b.coords().begin(), b.coords().end());
    }
    if (rank_mod_p(std::move(rows), p.value()) != d)
        throw Error(ErrorKind::InternalContradiction, "witness basis is linearly dependent");
    Int dom = power_checked(p.value(), w.s);
    if (static_cast<Int>(w.values.size()) != dom)
        throw Error(ErrorKind::InternalContradiction, "witness value table is incomplete");
    for (const auto& img : w.values) {
        if (static_cast<int>(img.size()) != d - w.s)
            throw Error(ErrorKind::InternalContradiction, "witness value has the wrong arity");
        for (Int x : img)
            if (x < 0 || x >= p.value())
                throw Error(ErrorKind::InternalContradiction, "witness value out of range");
    }
    if (w.poly) {
        if (w.s != 1 || d != 2)
            throw Error(ErrorKind::InternalContradiction, "interpolating polynomial only attaches to plane curves");
        if (static_cast<Int>(w.poly->size()) != p.value())
            throw Error(ErrorKind::InternalContradiction, "interpolating polynomial has the wrong length");
        for (Int t = 0; t < p.value(); ++t)
            if (eval_poly(p, *w.poly, t) != w.values[static_cast<std::size_t>(t)][0])
                throw Error(ErrorKind::InternalContradiction, "interpolating polynomial misses a value");
    }
}

PointSet graph_tiling_partner(const GraphWitness& w) {
    PrimeModulus p = w.modulus();
    int d = w.dim();
    Int codom = power_checked(p.value(), d - w.s);
    std::vector<FpVector> pts;
    pts.reserve(static_cast<std::size_t>(codom));
    for (Int i = 0; i < codom; ++i) {
        auto t = decode_coords(i, p.value(), d - w.s);
        FpVector pt = zero_vector(p, d);
        for (int j = 0; j < d - w.s; ++j)
            pt = pt + w.basis[static_cast<std::size_t>(w.s + j)].scaled(t[static_cast<std::size_t>(j)]);
        pts.push_back(std::move(pt));
    }
    return PointSet::from_points(p, d, pts);
}

std::optional<GraphWitness> graph_witness_along(const PointSet& e, const FpVector& m) {
    if (!(e.modulus() == m.modulus()) || e.dim() != m.dim())
        throw Error(ErrorKind::DimensionMismatch, "direction does not live in the set's space");
    PrimeModulus p = e.modulus();
    Int pv = p.value();
    int d = e.dim();
    if (e.size() != pv) return std::nullopt;
    FpVector dir = canonical_direction(m);
    auto eq = equidistribution_check(e, dir);
    for (Int c : eq.counts)
        if (c != 1) return std::nullopt;
    int i0 = pivot_index(dir);
    Int mm = norm(dir);
    std::vector<FpVector> basis;
    std::vector<std::vector<Int>> values(static_cast<std::size_t>(pv));
    WitnessKind kind;
    if (mm != 0) {
        basis.push_back(dir);
        for (FpVector& b : perp_basis(dir)) basis.push_back(std::move(b));
        Int inv_mm = mod_inv(mm, pv);
        for (const FpVector& x : e.points()) {
            Int x1 = mod_mul(dot(x, dir), inv_mm, pv);
            FpVector w = x - dir.scaled(x1);
            values[static_cast<std::size_t>(x1)] = non_pivot_coords(w, i0);
        }
        kind = is_unit_vector(dir) ? WitnessKind::AxisAligned : WitnessKind::OrthogonalBasis;
    } else if (d == 2) {
        Int n = power_checked(pv, d);
        FpVector e2 = zero_vector(p, d);
        bool found = false;
        for (Int i = 1; i < n && !found; ++i) {
            FpVector v = decode_point(i, p, d);
            if (dot(v, dir) == 1) {
                e2 = std::move(v);
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorKind::InternalContradiction, "no transversal vector for an isotropic direction");
        if (p.odd()) e2 = e2 - dir.scaled(mod_mul(norm(e2), mod_inv(2, pv), pv));
        basis.push_back(e2);
        basis.push_back(dir);
        for (const FpVector& x : e.points()) {
            Int x1 = dot(x, dir);
            FpVector w = x - e2.scaled(x1);
            values[static_cast<std::size_t>(x1)] = {w[i0]};
        }
        kind = WitnessKind::IsotropicBasis;
    } else {
        Int n = power_checked(pv, d);
        FpVector edom = zero_vector(p, d);
        bool found = false;
        for (Int i = 1; i < n && !found; ++i) {
            FpVector v = decode_point(i, p, d);
            if (dot(v, dir) == 1) {
                edom = std::move(v);
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorKind::InternalContradiction, "no transversal vector for an isotropic direction");
        basis.push_back(edom);
        for (FpVector& b : perp_basis(dir)) basis.push_back(std::move(b));
        for (const FpVector& x : e.points()) {
            Int x1 = dot(x, dir);
            FpVector w = x - edom.scaled(x1);
            values[static_cast<std::size_t>(x1)] = non_pivot_coords(w, i0);
        }
        kind = WitnessKind::IsotropicBasis;
    }
    GraphWitness w = finish_witness(kind, 1, std::move(basis), std::move(values));
    if (!(graph_points(w) == e))
        throw Error(ErrorKind::InternalContradiction, "graph reconstruction does not reproduce the set");
    return w;
}

std::optional<GraphWitness> is_graph(const PointSet& e) {
    if (e.empty()) throw Error(ErrorKind::EmptySet, "the empty set is not a graph");
    PrimeModulus p = e.modulus();
    Int pv = p.value();
    int d = e.dim();
    int s = 0;
    Int n = 1;
    while (n < e.size()) {
        n *= pv;
        ++s;
    }
    if (n != e.size())
        throw Error(ErrorKind::UnsupportedSize,
                    "a graph between coordinate subspaces has p^s points; |E| = " +
                        std::to_string(e.size()));
    if (s == 0) {
        std::vector<FpVector> basis;
        for (int i = 0; i < d; ++i) basis.push_back(unit_vector(p, d, i));
        auto coords = decode_coords(e.indices()[0], pv, d);
        return finish_witness(WitnessKind::AxisAligned, 0, std::move(basis), {coords});
    }
    if (s == d) {
        std::vector<FpVector> basis;
        for (int i = 0; i < d; ++i) basis.push_back(unit_vector(p, d, i));
        std::vector<std::vector<Int>> values(static_cast<std::size_t>(e.size()));
        return finish_witness(WitnessKind::AxisAligned, d, std::move(basis), std::move(values));
    }
    if (s == 1) {
        for (const FpVector& m : directions(p, d)) {
            auto w = graph_witness_along(e, m);
            if (w) return w;
        }
        return std::nullopt;
    }
    if (s == d - 1) {
        PointSet diff = difference_set(e);
        for (const FpVector& v : directions(p, d)) {
            bool hit = false;
            for (Int t = 1; t < pv && !hit; ++t) hit = diff.contains(v.scaled(t));
            if (hit) continue;
            int i0 = pivot_index(v);
            Int vv = norm(v);
            std::vector<FpVector> basis;
            WitnessKind kind;
            bool unit = is_unit_vector(v);
            if (unit || vv == 0) {
                for (int j = 0; j < d; ++j)
                    if (j != i0) basis.push_back(unit_vector(p, d, j));
                kind = unit ? WitnessKind::AxisAligned : WitnessKind::IsotropicBasis;
            } else {
                for (FpVector& b : perp_basis(v)) basis.push_back(std::move(b));
                kind = WitnessKind::OrthogonalBasis;
            }
            basis.push_back(v);
            Int dom = power_checked(pv, d - 1);
            std::vector<std::vector<Int>> values(static_cast<std::size_t>(dom));
            std::vector<bool> seen(static_cast<std::size_t>(dom), false);
            Int inv_vv = vv == 0 ? 0 : mod_inv(vv, pv);
            for (const FpVector& x : e.points()) {
                Int t = vv != 0 ? mod_mul(dot(x, v), inv_vv, pv) : x[i0];
                FpVector w = x - v.scaled(t);
                Int slot = encode_point(std::span<const Int>(non_pivot_coords(w, i0)), pv);
                if (seen[static_cast<std::size_t>(slot)])
                    throw Error(ErrorKind::InternalContradiction,
                                "difference-free direction still collides on a coset");
                seen[static_cast<std::size_t>(slot)] = true;
                values[static_cast<std::size_t>(slot)] = {t};
            }
            GraphWitness w = finish_witness(kind, d - 1, std::move(basis), std::move(values));
            if (!(graph_points(w) == e))
                throw Error(ErrorKind::InternalContradiction,
                            "graph reconstruction does not reproduce the set");
            return w;
        }
        return std::nullopt;
    }
    throw Error(ErrorKind::UnsupportedSize,
                "graph detection covers domain dimensions {0, 1, d-1, d}; got s = " +
                    std::to_string(s));
}

PlaneClassification classify_plane_tiling(const PointSet& e, const PointSet& a) {
    detail::require_same_space(e, a);
    if (e.dim() != 2)
        throw Error(ErrorKind::UnsupportedDim, "plane classification requires d = 2");
    if (!tiling_direct_check(e, a, 1).holds)
        throw Error(ErrorKind::NotATiling, "the pair is not a 1-tiling of the plane");
    Int pv = e.modulus().value();
    if (e.size() == 1) return {PlaneTilingKind::Singleton, std::nullopt};
    if (e.size() == pv * pv) return {PlaneTilingKind::FullPlane, std::nullopt};
    auto w = is_graph(e);
    if (!w)
        throw Error(ErrorKind::InternalContradiction,
                    "a proper plane tile must be the graph of a function");
    return {PlaneTilingKind::Graph, std::move(w)};
}

KTilingDecomposition decompose_k_tiling(const PointSet& e, const PointSet& a, Int k) {
    detail::require_same_space(e, a);
    if (e.dim() != 2)
        throw Error(ErrorKind::UnsupportedDim, "k-tiling decomposition requires d = 2");
    if (!tiling_direct_check(e, a, k).holds)
        throw Error(ErrorKind::NotATiling, "the pair is not a k-tiling of the plane");
    Int pv = e.modulus().value();
    Int n = pv * pv;
    if (e.size() == k && a.size() == n) return {KTilingKind::KPoints, 0, std::nullopt, {}};
    if (e.size() == n) return {KTilingKind::FullPlane, 0, std::nullopt, {}};
    if (e.size() % pv != 0)
        throw Error(ErrorKind::InternalContradiction,
                    "a proper k-tile of the plane has a multiple of p points");
    Int s = e.size() / pv;
    if (k % s != 0)
        throw Error(ErrorKind::InternalContradiction, "graph count does not divide the level");
    for (const FpVector& m : directions(e.modulus(), 2)) {
        auto eq = equidistribution_check(e, m);
        if (!eq.equidistributed) continue;
        std::vector<std::vector<Int>> lines(static_cast<std::size_t>(pv));
        for (Int idx : e.indices()) {
            FpVector x = decode_point(idx, e.modulus(), 2);
            lines[static_cast<std::size_t>(dot(x, m))].push_back(idx);
        }
        std::vector<GraphWitness> parts;
        for (Int j = 0; j < s; ++j) {
            std::vector<Int> part;
            for (Int t = 0; t < pv; ++t) part.push_back(lines[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]);
            auto w = graph_witness_along(PointSet(e.modulus(), 2, std::move(part)), m);
            if (!w)
                throw Error(ErrorKind::InternalContradiction,
                            "per-line slice failed to be a graph along its direction");
            parts.push_back(std::move(*w));
        }
        return {KTilingKind::GraphUnion, s, m, std::move(parts)};
    }
    throw Error(ErrorKind::InternalContradiction,
                "a proper k-tile of the plane must equidistribute in some direction");
}

std::optional<GraphicalCheckResult> graphical_check(const PointSet& e, const PointSet& a) {
    detail::require_same_space(e, a);
    if (!tiling_direct_check(e, a, 1).holds)
        throw Error(ErrorKind::NotATiling, "the pair is not a 1-tiling");
    auto attempt = [](const PointSet& s) -> std::optional<GraphWitness> {
        try {
            return is_graph(s);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::UnsupportedSize) return std::nullopt;
            throw;
        }
    };
    if (auto w = attempt(e)) return GraphicalCheckResult{GraphicalSide::EIsGraph, std::move(*w)};
    if (auto w = attempt(a)) return GraphicalCheckResult{GraphicalSide::AIsGraph, std::move(*w)};
    Int pv = e.modulus().value();
    int d = e.dim();
    Int n = power_checked(pv, d);
    Int codim1 = n / pv;
    bool covered = d == 3 || e.size() == 1 || e.size() == pv || e.size() == codim1 ||
                   e.size() == n;
    if (covered)
        throw Error(ErrorKind::InternalContradiction,
                    "structure theorem guarantees a graph on one side here");
    return std::nullopt;
}

std::vector<Int> interpolate_poly(PrimeModulus p, std::span<const Int> values) {
    Int pv = p.value();
    if (static_cast<Int>(values.size()) != pv)
        throw Error(ErrorKind::IncompleteDomain, "interpolation needs a value at every residue");
    std::vector<Int> out(static_cast<std::size_t>(pv), 0);
    std::vector<Int> quotient(static_cast<std::size_t>(pv), 0);
    for (Int k = 0; k < pv; ++k) {
        Int fk = mod_reduce(values[static_cast<std::size_t>(k)], pv);
        if (fk == 0) continue;
        // Synthetic division of x^p - x by (x - k); by Wilson the
        // denominator prod_{j != k} (k - j) = (p-1)! = -1.
        quotient[static_cast<std::size_t>(pv - 1)] = 1;
        for (Int i = pv - 1; i >= 1; --i) {
            Int a_i = i == 1 ? pv - 1 : 0;
            quotient[static_cast<std::size_t>(i - 1)] =
                mod_add(a_i, mod_mul(k, quotient[static_cast<std::size_t>(i)], pv), pv);
        }
        Int scale = mod_reduce(-fk, pv);
        for (Int i = 0; i < pv; ++i)
            out[static_cast<std::size_t>(i)] =
                mod_add(out[static_cast<std::size_t>(i)],
                        mod_mul(scale, quotient[static_cast<std::size_t>(i)], pv), pv);
    }
    return out;
}

std::vector<Int> interpolate_poly(PrimeModulus p, const std::map<Int, Int>& values) {
    Int pv = p.value();
    if (static_cast<Int>(values.size()) != pv)
        throw Error(ErrorKind::IncompleteDomain, "interpolation needs a value at every residue");
    std::vector<Int> dense(static_cast<std::size_t>(pv));
    for (const auto& [t, v] : values) {
        if (t < 0 || t >= pv)
            throw Error(ErrorKind::IncompleteDomain, "interpolation domain must be the residues 0..p-1");
        dense[static_cast<std::size_t>(t)] = mod_reduce(v, pv);
    }
    return interpolate_poly(p, dense);
}

Int eval_poly(PrimeModulus p, std::span<const Int> coeffs, Int x) {
    Int pv = p.value();
    Int acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = mod_add(mod_mul(acc, x, pv), coeffs[i], pv);
    return acc;
}

TilingVerdicts verify_tiling(const PointSet& e, const PointSet& a, Int k) {
    TilingVerdicts v{tiling_direct_check(e, a, k), false, false, false, false};
    v.fourier = tiling_fourier_check(e, a, k);
    v.poly = tiling_poly_check(e, a, k);
    v.agree = v.direct.holds == v.fourier && v.fourier == v.poly;
    v.holds = v.direct.holds;
    if (!v.agree)
        throw Error(ErrorKind::InternalContradiction,
                    "direct, frequency and polynomial criteria disagree");
    return v;
}

std::vector<PointSet> enumerate_cotilers(const PointSet& e, Int limit) {
    if (e.empty()) throw Error(ErrorKind::EmptySet, "cannot tile with an empty set");
    PrimeModulus p = e.modulus();
    int d = e.dim();
    Int n = power_checked(p.value(), d);
    if (n % e.size() != 0) return {};
    auto epts = e.points();
    std::vector<PointSet> found;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    std::vector<Int> chosen;
    auto rec = [&](auto&& self) -> bool {
        Int first = -1;
        for (Int i = 0; i < n; ++i)
            if (!covered[static_cast<std::size_t>(i)]) { first = i; break; }
        if (first < 0) {
            found.emplace_back(p, d, chosen);
            return limit > 0 && static_cast<Int>(found.size()) >= limit;
        }
        FpVector x = decode_point(first, p, d);
        std::vector<Int> candidates;
        for (const FpVector& ev : epts) candidates.push_back(encode_point(x - ev));
        std::sort(candidates.begin(), candidates.end());
        for (Int ai : candidates) {
            FpVector av = decode_point(ai, p, d);
            std::vector<Int> cells;
            bool ok = true;
            for (const FpVector& ev : epts) {
                Int c = encode_point(ev + av);
                if (covered[static_cast<std::size_t>(c)]) { ok = false; break; }
                cells.push_back(c);
            }
            if (!ok) continue;
            for (Int c : cells) covered[static_cast<std::size_t>(c)] = true;
            chosen.push_back(ai);
            if (self(self)) return true;
            chosen.pop_back();
            for (Int c : cells) covered[static_cast<std::size_t>(c)] = false;
        }
        return false;
    };
    rec(rec);
    std::sort(found.begin(), found.end(), [](const PointSet& a, const PointSet& b) {
        return std::lexicographical_compare(a.indices().begin(), a.indices().end(),
                                            b.indices().begin(), b.indices().end());
    });
    return found;
}

}  // namespace fftile
