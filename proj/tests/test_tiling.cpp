#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fftile/tiling.hpp"

using namespace fftile;

namespace {

PointSet line_graph(PrimeModulus p, Int slope) {
    std::vector<FpVector> pts;
    for (Int t = 0; t < p.value(); ++t)
        pts.emplace_back(p, std::vector<Int>{t, mod_mul(slope, t, p.value())});
    return PointSet::from_points(p, 2, pts);
}

PointSet x_axis(PrimeModulus p) { return line_graph(p, 0); }

PointSet y_axis(PrimeModulus p) {
    std::vector<FpVector> pts;
    for (Int t = 0; t < p.value(); ++t) pts.emplace_back(p, std::vector<Int>{0, t});
    return PointSet::from_points(p, 2, pts);
}

}  // namespace

TEST_CASE("direct multiplicity counting") {
    PrimeModulus p(3);
    TilingReport rep = tiling_direct_check(x_axis(p), y_axis(p), 1);
    CHECK(rep.holds);
    CHECK(rep.histogram == std::map<Int, Int>{{1, 9}});

    TilingReport bad = tiling_direct_check(x_axis(p), x_axis(p), 1);
    CHECK(!bad.holds);
    CHECK(bad.histogram == std::map<Int, Int>{{0, 6}, {3, 3}});

    PrimeModulus p5(5);
    PointSet strip = PointSet::from_points(p5, 2, [&] {
        std::vector<FpVector> pts;
        for (Int x = 0; x < 5; ++x)
            for (Int y = 0; y < 2; ++y) pts.emplace_back(p5, std::vector<Int>{x, y});
        return pts;
    }());
    CHECK(tiling_direct_check(strip, y_axis(p5), 2).holds);
}

TEST_CASE("parabola is an axis-aligned graph") {
    PrimeModulus p(5);
    std::vector<FpVector> pts;
    for (Int t = 0; t < 5; ++t) pts.emplace_back(p, std::vector<Int>{t, mod_mul(t, t, 5)});
    PointSet e = PointSet::from_points(p, 2, pts);
    auto w = is_graph(e);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::AxisAligned);
    CHECK(w->s == 1);
    CHECK(w->basis[0] == FpVector(p, {1, 0}));
    CHECK(w->basis[1] == FpVector(p, {0, 1}));
    for (Int t = 0; t < 5; ++t) CHECK(w->values[static_cast<std::size_t>(t)][0] == mod_mul(t, t, 5));
    REQUIRE(w->poly.has_value());
    CHECK(*w->poly == std::vector<Int>{0, 0, 1, 0, 0});
    CHECK(graph_points(*w) == e);
    PointSet partner = graph_tiling_partner(*w);
    CHECK(partner == y_axis(p));
    CHECK(verify_tiling(e, partner, 1).holds);
}

TEST_CASE("a line through the origin is a graph of a linear map") {
    PrimeModulus p(5);
    PointSet e = line_graph(p, 2);
    auto w = is_graph(e);
    REQUIRE(w.has_value());
    // The first equidistributed direction is m = (0, 1): one point per
    // horizontal line, so the curve reads x = 3y in that frame.
    CHECK(w->kind == WitnessKind::AxisAligned);
    CHECK(w->basis[0] == FpVector(p, {0, 1}));
    CHECK(w->basis[1] == FpVector(p, {1, 0}));
    REQUIRE(w->poly.has_value());
    CHECK(*w->poly == std::vector<Int>{0, 3, 0, 0, 0});
    CHECK(verify_tiling(e, graph_tiling_partner(*w), 1).holds);
}

TEST_CASE("an isotropic-frame graph is detected") {
    PrimeModulus p(5);
    PointSet e = PointSet::from_points(
        p, 2,
        {FpVector(p, {0, 0}), FpVector(p, {1, 0}), FpVector(p, {0, 1}),
         FpVector(p, {1, 1}), FpVector(p, {2, 1})});
    auto w = is_graph(e);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::IsotropicBasis);
    CHECK(w->basis[1] == FpVector(p, {1, 2}));
    CHECK(w->basis[0] == FpVector(p, {3, 4}));
    CHECK(norm(w->basis[0]) == 0);
    CHECK(norm(w->basis[1]) == 0);
    CHECK(dot(w->basis[0], w->basis[1]) == 1);
    std::vector<Int> flat;
    for (const auto& img : w->values) flat.push_back(img[0]);
    CHECK(flat == std::vector<Int>{0, 3, 4, 2, 0});
    CHECK(graph_points(*w) == e);
    PointSet partner = graph_tiling_partner(*w);
    CHECK(verify_tiling(e, partner, 1).holds);
}

TEST_CASE("a set meeting every direction twice is not a graph") {
    PrimeModulus p(5);
    PointSet e = PointSet::from_points(
        p, 2,
        {FpVector(p, {0, 0}), FpVector(p, {1, 1}), FpVector(p, {2, 3}),
         FpVector(p, {3, 1}), FpVector(p, {2, 4})});
    CHECK(!is_graph(e).has_value());
}

TEST_CASE("trivial graph sizes") {
    PrimeModulus p(3);
    auto point = is_graph(PointSet(p, 2, {5}));
    REQUIRE(point.has_value());
    CHECK(point->s == 0);
    CHECK(graph_points(*point) == PointSet(p, 2, {5}));
    CHECK(graph_tiling_partner(*point) == PointSet::full_space(p, 2));

    auto full = is_graph(PointSet::full_space(p, 2));
    REQUIRE(full.has_value());
    CHECK(full->s == 2);
    CHECK(graph_tiling_partner(*full) == PointSet(p, 2, {0}));

    CHECK_THROWS_AS(is_graph(PointSet(p, 2, {0, 1})), Error);
    CHECK_THROWS_AS(is_graph(PointSet(p, 2, {})), Error);
}

TEST_CASE("hyperplane-complement graphs in three dimensions") {
    PrimeModulus p(3);
    PointSet plane = PointSet::from_points(p, 3, [&] {
        std::vector<FpVector> pts;
        for (Int a = 0; a < 3; ++a)
            for (Int b = 0; b < 3; ++b) pts.emplace_back(p, std::vector<Int>{a, b, 0});
        return pts;
    }());
    auto w = is_graph(plane);
    REQUIRE(w.has_value());
    CHECK(w->s == 2);
    CHECK(w->kind == WitnessKind::AxisAligned);
    CHECK(graph_points(*w) == plane);
    CHECK(verify_tiling(plane, graph_tiling_partner(*w), 1).holds);

    std::mt19937 rng(321);
    for (int trial = 0; trial < 10; ++trial) {
        // Coset graphs along the isotropic direction (1,1,1): the first
        // coordinate is a function of the offsets, so every f works.
        std::vector<FpVector> pts;
        for (Int a = 0; a < 3; ++a)
            for (Int b = 0; b < 3; ++b) {
                Int t = static_cast<Int>(rng() % 3);
                pts.emplace_back(p, std::vector<Int>{t, mod_add(t, a, 3), mod_add(t, b, 3)});
            }
        PointSet e = PointSet::from_points(p, 3, pts);
        auto cw = is_graph(e);
        REQUIRE(cw.has_value());
        CHECK(cw->s == 2);
        CHECK(graph_points(*cw) == e);
        CHECK(verify_tiling(e, graph_tiling_partner(*cw), 1).holds);
    }
}

TEST_CASE("middle sizes are reported as unsupported") {
    PrimeModulus p(2);
    PointSet e(p, 4, {0, 1, 2, 3});
    try {
        (void)is_graph(e);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnsupportedSize);
    }
}

TEST_CASE("plane tiling classification") {
    PrimeModulus p(3);
    PointSet singleton = PointSet::from_points(p, 2, {FpVector(p, {2, 3})});
    CHECK(classify_plane_tiling(singleton, PointSet::full_space(p, 2)).kind ==
          PlaneTilingKind::Singleton);
    CHECK(classify_plane_tiling(PointSet::full_space(p, 2), singleton).kind ==
          PlaneTilingKind::FullPlane);

    PrimeModulus p5(5);
    std::vector<FpVector> pts;
    for (Int t = 0; t < 5; ++t) pts.emplace_back(p5, std::vector<Int>{t, mod_mul(t, t, 5)});
    PointSet parabola = PointSet::from_points(p5, 2, pts);
    auto cls = classify_plane_tiling(parabola, y_axis(p5));
    CHECK(cls.kind == PlaneTilingKind::Graph);
    REQUIRE(cls.witness.has_value());
    REQUIRE(cls.witness->poly.has_value());
    CHECK(*cls.witness->poly == std::vector<Int>{0, 0, 1, 0, 0});

    try {
        (void)classify_plane_tiling(x_axis(p), x_axis(p));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotATiling);
    }
    try {
        (void)classify_plane_tiling(PointSet(p, 1, {0}), PointSet::full_space(p, 1));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnsupportedDim);
    }
}

TEST_CASE("k-tiling decomposition") {
    PrimeModulus p(3);
    PointSet two = PointSet::from_points(p, 2, {FpVector(p, {0, 0}), FpVector(p, {1, 1})});
    auto kp = decompose_k_tiling(two, PointSet::full_space(p, 2), 2);
    CHECK(kp.kind == KTilingKind::KPoints);
    auto fp = decompose_k_tiling(PointSet::full_space(p, 2), two, 2);
    CHECK(fp.kind == KTilingKind::FullPlane);

    PrimeModulus p5(5);
    PointSet strip = PointSet::from_points(p5, 2, [&] {
        std::vector<FpVector> pts;
        for (Int x = 0; x < 5; ++x)
            for (Int y = 0; y < 2; ++y) pts.emplace_back(p5, std::vector<Int>{x, y});
        return pts;
    }());
    auto gu = decompose_k_tiling(strip, y_axis(p5), 2);
    CHECK(gu.kind == KTilingKind::GraphUnion);
    CHECK(gu.s == 2);
    REQUIRE(gu.direction.has_value());
    CHECK(*gu.direction == FpVector(p5, {1, 0}));
    REQUIRE(gu.parts.size() == 2);
    CHECK(*gu.parts[0].poly == std::vector<Int>{0, 0, 0, 0, 0});
    CHECK(*gu.parts[1].poly == std::vector<Int>{1, 0, 0, 0, 0});
    PointSet reunion = [&] {
        std::vector<Int> idx;
        for (const GraphWitness& w : gu.parts) {
            PointSet part = graph_points(w);
            idx.insert(idx.end(), part.indices().begin(), part.indices().end());
        }
        return PointSet(p5, 2, idx);
    }();
    CHECK(reunion == strip);

    try {
        (void)decompose_k_tiling(strip, y_axis(p5), 3);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotATiling);
    }
    try {
        (void)decompose_k_tiling(PointSet(p, 1, {0}), PointSet::full_space(p, 1), 1);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnsupportedDim);
    }
}

TEST_CASE("one side of a 3-space tiling is a graph") {
    PrimeModulus p(3);
    std::vector<FpVector> pts;
    for (Int t = 0; t < 3; ++t)
        pts.emplace_back(p, std::vector<Int>{t, mod_mul(t, t, 3), mod_add(t, 1, 3)});
    PointSet e = PointSet::from_points(p, 3, pts);
    PointSet a = PointSet::from_points(p, 3, [&] {
        std::vector<FpVector> out;
        for (Int u = 0; u < 3; ++u)
            for (Int v = 0; v < 3; ++v) out.emplace_back(p, std::vector<Int>{0, u, v});
        return out;
    }());
    auto res = graphical_check(e, a);
    REQUIRE(res.has_value());
    CHECK(res->side == GraphicalSide::EIsGraph);
    CHECK(res->witness.s == 1);
    // Swapping the arguments puts the plane in the first slot.
    auto res2 = graphical_check(a, e);
    REQUIRE(res2.has_value());
    CHECK(res2->side == GraphicalSide::EIsGraph);
    CHECK(res2->witness.s == 2);
}

TEST_CASE("polynomial interpolation") {
    PrimeModulus p(5);
    std::vector<Int> squares{0, 1, 4, 4, 1};
    CHECK(interpolate_poly(p, squares) == std::vector<Int>{0, 0, 1, 0, 0});
    std::vector<Int> id{0, 1, 2, 3, 4};
    CHECK(interpolate_poly(p, id) == std::vector<Int>{0, 1, 0, 0, 0});
    std::vector<Int> threes{3, 3, 3, 3, 3};
    CHECK(interpolate_poly(p, threes) == std::vector<Int>{3, 0, 0, 0, 0});

    std::mt19937 rng(888);
    for (Int pv : {2, 3, 5, 7, 13}) {
        PrimeModulus q(pv);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Int> vals(static_cast<std::size_t>(pv));
            for (Int& v : vals) v = static_cast<Int>(rng() % pv);
            auto coeffs = interpolate_poly(q, vals);
            CHECK(static_cast<Int>(coeffs.size()) == pv);
            for (Int t = 0; t < pv; ++t)
                CHECK(eval_poly(q, coeffs, t) == vals[static_cast<std::size_t>(t)]);
        }
    }

    std::map<Int, Int> sparse{{0, 1}, {1, 2}};
    try {
        (void)interpolate_poly(p, sparse);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::IncompleteDomain);
    }
    std::map<Int, Int> shifted{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
    CHECK_THROWS_AS((void)interpolate_poly(p, shifted), Error);
}

TEST_CASE("the three criteria agree on random pairs") {
    std::mt19937 rng(20260101);
    PrimeModulus p(3);
    Int tilings_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Int> ei, ai;
        for (Int i = 0; i < 9; ++i) {
            if (rng() % 3 == 0) ei.push_back(i);
            if (rng() % 3 == 0) ai.push_back(i);
        }
        if (ei.empty() || ai.empty()) continue;
        PointSet e(p, 2, ei);
        PointSet a(p, 2, ai);
        Int k = 1 + static_cast<Int>(rng() % 3);
        TilingVerdicts v = verify_tiling(e, a, k);
        CHECK(v.agree);
        if (v.holds) ++tilings_seen;
    }
    PointSet h = x_axis(p);
    CHECK(verify_tiling(h, y_axis(p), 1).holds);
}

TEST_CASE("cotiler enumeration by exact cover") {
    PrimeModulus p(3);
    auto cotilers = enumerate_cotilers(x_axis(p));
    CHECK(cotilers.size() == 27);
    for (const PointSet& a : cotilers) CHECK(verify_tiling(x_axis(p), a, 1).holds);
    CHECK(enumerate_cotilers(x_axis(p), 5).size() == 5);

    PointSet blocker(p, 2, {0, 1, 3});
    for (const PointSet& a : enumerate_cotilers(blocker))
        CHECK(tiling_direct_check(blocker, a, 1).holds);
}
