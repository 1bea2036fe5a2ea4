// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit code =
// number of failed criteria. Every check is exact; no tolerances.

#include <nlohmann/json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fftile/fourier.hpp"
#include "fftile/manifest.hpp"
#include "fftile/packing.hpp"
#include "fftile/polyring.hpp"
#include "fftile/tiling.hpp"

using namespace fftile;
using Json = nlohmann::json;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::printf("[PASS] %2d. %s\n", number, name.c_str());
    } catch (const std::exception& e) {
        std::printf("[FAIL] %2d. %s: %s\n", number, name.c_str(), e.what());
        ++g_failures;
    }
    std::fflush(stdout);
}

void require(bool cond, const std::string& message) {
    if (!cond) throw std::runtime_error(message);
}

struct CliResult {
    int code;
    Json report;
};

CliResult cli(const std::string& args) {
    std::string cmd = std::string(FFTILE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "cannot spawn CLI");
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    require(WIFEXITED(status), "CLI did not exit normally");
    return {WEXITSTATUS(status), out.empty() ? Json() : Json::parse(out)};
}

std::string fx(const std::string& name) {
    return std::string(FFTILE_FIXTURES_DIR) + "/" + name + ".json";
}

PointSet from_mask(PrimeModulus p, int d, unsigned mask) {
    std::vector<Int> idx;
    for (Int i = 0; i < power_checked(p.value(), d); ++i)
        if (mask & (1u << i)) idx.push_back(i);
    return PointSet(p, d, idx);
}

std::vector<std::pair<PointSet, PointSet>> g_tilings;  // collected by criteria 3-5

void note_tiling(const PointSet& e, const PointSet& a) {
    if (g_tilings.size() < 20000) g_tilings.emplace_back(e, a);
}

// ---------------------------------------------------------------- criteria

void paper_constants() {
    for (Int c : {1, 2}) {
        CliResult r = cli("pack number --p 3 --c " + std::to_string(c));
        require(r.code == 0, "pack number exited nonzero");
        require(r.report["value"] == 1, "P(3," + std::to_string(c) + ") != 1");
    }
}

void isotropic_packing() {
    // Full-mode packing numbers, frozen after first computation.
    const std::map<std::pair<Int, Int>, Int> frozen{
        {{5, 1}, 5}, {{5, 2}, 5}, {{13, 1}, 13}, {{13, 2}, 13}};
    for (Int pv : {5, 13}) {
        PrimeModulus p(pv);
        for (Int c : {1, 2}) {
            IsotropicPacking iso = isotropic_pack(p, c);
            require(static_cast<Int>(iso.packing.centers.size()) == pv,
                    "isotropic packing does not have p circles");
            require(iso.packing.certified, "isotropic packing not certified");
            std::vector<FpVector> line;
            for (Int t = 0; t < pv; ++t)
                line.emplace_back(p, std::vector<Int>{t, mod_mul(iso.i, t, pv)});
            require(iso.complement == PointSet::from_points(p, 2, line),
                    "complement is not the isotropic center line");
            PackingNumber full = packing_number(p, c, PackingMode::Full);
            require(full.value >= pv && full.value <= pv + 1,
                    "full packing number outside [p, p+1]");
            require(full.value == frozen.at({pv, c}), "regression constant drifted");
        }
    }
}

void three_oracles() {
    PrimeModulus p3(3);
    std::vector<unsigned> small_masks;
    for (unsigned mask = 1; mask < 512; ++mask)
        if (__builtin_popcount(mask) <= 4) small_masks.push_back(mask);
    require(small_masks.size() == 255, "subset enumeration is off");
    for (unsigned em : small_masks) {
        PointSet e = from_mask(p3, 2, em);
        for (unsigned am : small_masks) {
            PointSet a = from_mask(p3, 2, am);
            for (Int k = 1; k <= 2; ++k) {
                TilingVerdicts v = verify_tiling(e, a, k);
                require(v.agree, "criteria disagree on a small pair");
                if (v.holds) note_tiling(e, a);
            }
        }
    }

    std::mt19937 rng(7321);
    for (int trial = 0; trial < 1000; ++trial) {
        Int pv = trial % 2 == 0 ? 5 : 7;
        PrimeModulus p(pv);
        int d = 1 + static_cast<int>(rng() % 2);
        Int n = power_checked(pv, d);
        std::vector<Int> ei, ai;
        for (Int i = 0; i < n; ++i) {
            if (rng() % 3 == 0) ei.push_back(i);
            if (rng() % 3 == 0) ai.push_back(i);
        }
        if (ei.empty() || ai.empty()) continue;
        PointSet e(p, d, ei);
        PointSet a(p, d, ai);
        Int k = 1 + static_cast<Int>(rng() % 3);
        TilingVerdicts v = verify_tiling(e, a, k);
        require(v.agree, "criteria disagree on a random triple");
        if (v.holds) note_tiling(e, a);
    }
}

void plane_structure() {
    PrimeModulus p(3);
    std::vector<PointSet> sets;
    for (unsigned mask = 1; mask < 512; ++mask) sets.push_back(from_mask(p, 2, mask));
    Int one_tilings = 0, k_tilings = 0;
    for (const PointSet& e : sets) {
        for (const PointSet& a : sets) {
            Int cover = e.size() * a.size();
            if (cover % 9 != 0) continue;
            Int k = cover / 9;
            if (!tiling_direct_check(e, a, k).holds) continue;
            if (k == 1) {
                PlaneClassification cls = classify_plane_tiling(e, a);
                switch (cls.kind) {
                    case PlaneTilingKind::Singleton:
                        require(e.size() == 1, "singleton with |E| != 1");
                        break;
                    case PlaneTilingKind::FullPlane:
                        require(e.size() == 9, "full plane with |E| != 9");
                        break;
                    case PlaneTilingKind::Graph:
                        require(cls.witness.has_value(), "graph class without witness");
                        require(graph_points(*cls.witness) == e, "witness does not realize E");
                        break;
                }
                ++one_tilings;
            } else {
                KTilingDecomposition dec = decompose_k_tiling(e, a, k);
                if (dec.kind == KTilingKind::GraphUnion) {
                    require(dec.s > 0 && k % dec.s == 0, "s does not divide k");
                    std::vector<Int> got;
                    for (const GraphWitness& w : dec.parts) {
                        PointSet part = graph_points(w);
                        got.insert(got.end(), part.indices().begin(), part.indices().end());
                    }
                    require(PointSet(p, 2, got) == e, "parts do not partition E");
                }
                ++k_tilings;
            }
            note_tiling(e, a);
        }
    }
    require(one_tilings > 0 && k_tilings > 0, "exhaustive search found no tilings");
}

void space_graphical() {
    PrimeModulus p(3);
    std::mt19937 rng(5150);
    auto random_point = [&] {
        return FpVector(p, {static_cast<Int>(rng() % 3), static_cast<Int>(rng() % 3),
                            static_cast<Int>(rng() % 3)});
    };
    for (int trial = 0; trial < 100; ++trial) {
        // |E| = 3: a curve over the first axis, randomly translated.
        std::vector<FpVector> curve;
        for (Int t = 0; t < 3; ++t)
            curve.emplace_back(p, std::vector<Int>{t, static_cast<Int>(rng() % 3),
                                                   static_cast<Int>(rng() % 3)});
        FpVector shift = random_point();
        PointSet e = PointSet::from_points(p, 3, curve).translated(shift);
        std::vector<FpVector> wall;
        for (Int u = 0; u < 3; ++u)
            for (Int v = 0; v < 3; ++v) wall.emplace_back(p, std::vector<Int>{0, u, v});
        PointSet a = PointSet::from_points(p, 3, wall).translated(random_point());
        require(tiling_direct_check(e, a, 1).holds, "constructed pair does not tile");
        auto res = graphical_check(e, a);
        require(res.has_value(), "graphical check negative on |E| = 3 tiling");
        note_tiling(e, a);

        // |E| = 9: a sheet over the last two axes.
        std::vector<FpVector> sheet;
        for (Int u = 0; u < 3; ++u)
            for (Int v = 0; v < 3; ++v)
                sheet.emplace_back(p, std::vector<Int>{static_cast<Int>(rng() % 3), u, v});
        PointSet e2 = PointSet::from_points(p, 3, sheet).translated(random_point());
        std::vector<FpVector> axis;
        for (Int t = 0; t < 3; ++t) axis.emplace_back(p, std::vector<Int>{t, 0, 0});
        PointSet a2 = PointSet::from_points(p, 3, axis).translated(random_point());
        require(tiling_direct_check(e2, a2, 1).holds, "constructed sheet pair does not tile");
        auto res2 = graphical_check(e2, a2);
        require(res2.has_value(), "graphical check negative on |E| = 9 tiling");
        note_tiling(e2, a2);
    }

    // Exhaustively found pairs: first cotiler of every 3-subset that has one.
    int found = 0;
    for (Int i = 0; i < 27 && found < 200; ++i)
        for (Int j = i + 1; j < 27 && found < 200; ++j)
            for (Int l = j + 1; l < 27 && found < 200; ++l) {
                PointSet e(p, 3, {i, j, l});
                std::vector<PointSet> cots = enumerate_cotilers(e, 1);
                if (cots.empty()) continue;
                auto res = graphical_check(e, cots.front());
                require(res.has_value(), "graphical check negative on exhaustive pair");
                note_tiling(e, cots.front());
                ++found;
            }
    require(found == 200, "fewer than 200 exhaustive pairs");
}

void sphere_theorem() {
    struct Case {
        Int p;
        int d;
        Int t;
    };
    for (const Case& c : {Case{3, 4, 1}, Case{3, 4, 2}, Case{5, 4, 1}}) {
        SpherePackReport rep = sphere_pack_check(PrimeModulus(c.p), c.d, c.t);
        require(rep.packs_alone, "sphere admits a disjoint translate");
        require(!rep.disjoint_shift.has_value(), "disjoint shift reported");
        require(static_cast<Int>(rep.witnesses.size()) ==
                    power_checked(c.p, c.d) - 1,
                "missing intersection witnesses");
    }
}

void moment_identities() {
    require(!g_tilings.empty(), "no tilings collected by earlier criteria");
    for (const auto& [e, a] : g_tilings) {
        for (Int v : first_moment(e, a)) require(v == 0, "first moment nonzero on a tiling");
        for (int j = 1; j <= e.dim(); ++j)
            require(second_moment(e, a, j) == 0, "second moment nonzero on a tiling");
    }
    PointSet e = Manifest::load(fx("z5_gap_pair_e")).to_point_set();
    PointSet a = Manifest::load(fx("z5_gap_pair_a")).to_point_set();
    std::vector<Int> first = first_moment(e, a);
    require(first == std::vector<Int>{1}, "counterexample first moment is not 1");
}

void transform_identities() {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 100; ++trial) {
        Int pv = trial % 2 == 0 ? 5 : 7;
        PrimeModulus p(pv);
        RationalFunction f(p, 2);
        for (Int i = 0; i < pv * pv; ++i)
            f.set(i, BigRational(static_cast<Int>(rng() % 19) - 9,
                                 1 + static_cast<Int>(rng() % 9)));
        Spectrum s = dft(f);
        require(galois_symmetry_check(s), "Galois symmetry fails");
        require(inverse_dft(s) == f, "transform round trip fails");
        BigRational spectral_energy = plancherel_check(f);

        BigRational mean = f.average();
        BigRational variance_sum(0);
        for (const FpVector& m : directions(p, 2)) {
            TraceIdentityReport tr = trace_identity(f, m);
            require(tr.line_sum == tr.trace_value, "plain trace identity fails");
            require(tr.line_energy == tr.trace_energy, "squared trace identity fails");
            HyperplaneStats hs = hyperplane_stats(f, m);
            require(hs.mean == mean, "hyperplane mean drifts from global mean");
            variance_sum += hs.variance;
        }
        BigRational energy = f.sum_of_squares() / (pv * pv);
        require(energy == mean * mean + variance_sum, "energy decomposition fails");
        require(energy == spectral_energy, "Plancherel value drifts from direct energy");
    }
}

void mu_criterion() {
    for (Int pv : {3, 5, 7, 11, 13}) {
        PrimeModulus p(pv);
        for (Int c = 1; c < pv; ++c) {
            PointSet base = circle_points(Circle{zero_vector(p, 2), c});
            for (Int dist = 1; dist < pv; ++dist) {
                PointSet at = circle_points(Circle{zero_vector(p, 2), dist});
                require(!at.empty(), "no point at the requested distance");
                PointSet other = circle_points(Circle{at.points().front(), c});
                int direct = 0;
                for (Int i : other.indices())
                    if (base.contains(i)) ++direct;
                require(circle_intersection_count(p, c, dist) == direct,
                        "mu disagrees with direct intersection");
            }
        }
    }
}

void non_graph_fixture() {
    PointSet e = Manifest::load(fx("f52_five_points")).to_point_set();
    require(!is_graph(e).has_value(), "five-point set reported as a graph");
    std::vector<FpVector> dirs = directions(e.modulus(), 2);
    require(dirs.size() == 6, "wrong number of plane directions");
    for (const FpVector& m : dirs) {
        EquidistributionResult r = equidistribution_check(e, m);
        require(!r.equidistributed, "five-point set equidistributes in a direction");
    }
}

}  // namespace

int main() {
    criterion(1, "packing numbers P(3,1) = P(3,2) = 1 through the CLI", paper_constants);
    criterion(2, "isotropic packings and full packing numbers at p = 5, 13", isotropic_packing);
    criterion(3, "direct, Fourier and polynomial criteria agree", three_oracles);
    criterion(4, "plane tilings satisfy the classification trichotomy", plane_structure);
    criterion(5, "3-space tilings with |E| in {3, 9} are graphical", space_graphical);
    criterion(6, "spheres in dimension 4 never pack", sphere_theorem);
    criterion(7, "moment identities vanish exactly on tilings", moment_identities);
    criterion(8, "transform identities hold exactly on random functions", transform_identities);
    criterion(9, "mu criterion matches direct circle intersections", mu_criterion);
    criterion(10, "five-point fixture is non-graph and never equidistributes", non_graph_fixture);
    return g_failures;
}
