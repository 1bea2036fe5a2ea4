#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "fftile/fourier.hpp"
#include "fftile/manifest.hpp"
#include "fftile/packing.hpp"
#include "fftile/polyring.hpp"
#include "fftile/serialize.hpp"
#include "fftile/tiling.hpp"

using namespace fftile;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContradiction = 3;

struct Ctx {
    int threads = 1;
    std::int64_t node_budget = PackOptions{}.node_budget;

    PackOptions pack_options() const { return PackOptions{node_budget, threads}; }
};

void emit(const Json& report, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
}

PointSet load_set(const std::string& path) { return Manifest::load(path).to_point_set(); }

RationalFunction load_function(const std::string& path) {
    return Manifest::load(path).to_function();
}

void check_override(const PointSet& s, std::optional<Int> p, std::optional<int> d) {
    if (p && *p != s.modulus().value())
        throw Error(ErrorKind::ModulusMismatch, "--p disagrees with the manifest");
    if (d && *d != s.dim())
        throw Error(ErrorKind::DimensionMismatch, "--d disagrees with the manifest");
}

FpVector parse_direction(const std::string& text, PrimeModulus p, int d) {
    std::vector<Int> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        try {
            std::size_t used = 0;
            coords.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad coordinate '" + part + "' in --m");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(coords.size()) != d)
        throw Error(ErrorKind::DimensionMismatch, "--m needs exactly d coordinates");
    return FpVector(p, coords);
}

Json verdicts_json(const TilingVerdicts& v) {
    return Json{{"direct", v.direct.holds},
                {"fourier", v.fourier},
                {"poly", v.poly},
                {"agree", v.agree},
                {"histogram", histogram_json(v.direct.histogram)}};
}

int cmd_tile_verify(const Ctx&, const std::string& epath, const std::string& apath, Int k,
                    std::optional<Int> p, std::optional<int> d) {
    PointSet e = load_set(epath);
    PointSet a = load_set(apath);
    check_override(e, p, d);
    TilingVerdicts v = verify_tiling(e, a, k);
    Json rep{{"type", "tile-verify"},
             {"p", e.modulus().value()},
             {"d", e.dim()},
             {"k", k},
             {"holds", v.holds},
             {"criteria", verdicts_json(v)}};
    emit(rep, std::string(v.holds ? "tiling holds" : "tiling fails") + " (k=" +
                  std::to_string(k) + ", all three criteria agree)");
    return v.holds ? kExitHolds : kExitFails;
}

int cmd_tile_classify(const Ctx&, const std::string& epath, const std::string& apath) {
    PointSet e = load_set(epath);
    PointSet a = load_set(apath);
    PlaneClassification cls = classify_plane_tiling(e, a);
    Json rep{{"type", "tile-classify"},
             {"p", e.modulus().value()},
             {"d", e.dim()},
             {"kind", plane_tiling_kind_name(cls.kind)}};
    if (cls.witness) rep["witness"] = graph_witness_json(*cls.witness);
    emit(rep, std::string("plane 1-tiling: ") + plane_tiling_kind_name(cls.kind));
    return kExitHolds;
}

int cmd_tile_decompose(const Ctx&, const std::string& epath, const std::string& apath, Int k) {
    PointSet e = load_set(epath);
    PointSet a = load_set(apath);
    KTilingDecomposition dec = decompose_k_tiling(e, a, k);
    Json rep{{"type", "tile-decompose"},
             {"p", e.modulus().value()},
             {"d", e.dim()},
             {"k", k},
             {"kind", k_tiling_kind_name(dec.kind)},
             {"s", dec.s}};
    if (dec.direction) rep["direction"] = coords_json(*dec.direction);
    if (!dec.parts.empty()) {
        Json parts = Json::array();
        for (const GraphWitness& w : dec.parts) parts.push_back(graph_witness_json(w));
        rep["parts"] = parts;
    }
    emit(rep, std::string("k-tiling kind: ") + k_tiling_kind_name(dec.kind) + ", s=" +
                  std::to_string(dec.s));
    return kExitHolds;
}

int cmd_tile_recheck(const Ctx&, const std::string& wpath) {
    Json j = Manifest::load_raw(wpath);
    // classify reports carry the witness as a field; accept those directly
    if (j.is_object() && !(j.contains("type") && j["type"] == "graph-witness") &&
        j.contains("witness") && j["witness"].is_object())
        j = j["witness"];
    GraphWitness w = graph_witness_from_json(j);
    PointSet e = graph_points(w);
    PointSet partner = graph_tiling_partner(w);
    TilingVerdicts v = verify_tiling(e, partner, 1);
    if (!v.holds)
        throw Error(ErrorKind::InternalContradiction,
                    "validated graph witness does not tile with its partner");
    Json rep{{"type", "tile-recheck"},
             {"p", w.modulus().value()},
             {"d", w.dim()},
             {"s", w.s},
             {"holds", true},
             {"criteria", verdicts_json(v)}};
    emit(rep, "graph witness re-verified: realizes its point set and tiles with its partner");
    return kExitHolds;
}

int cmd_fourier_spectrum(const Ctx& ctx, const std::string& fpath,
                         const std::vector<std::string>& ms) {
    RationalFunction f = load_function(fpath);
    PrimeModulus p = f.modulus();
    Json coeffs = Json::array();
    if (ms.empty()) {
        Spectrum s = dft(f, ctx.threads);
        for (Int mi = 0; mi < f.domain_size(); ++mi)
            coeffs.push_back(Json{{"m", coords_json(decode_point(mi, p, f.dim()))},
                                  {"value", cyc_json(s.at(mi))}});
    } else {
        for (const std::string& text : ms) {
            FpVector m = parse_direction(text, p, f.dim());
            coeffs.push_back(Json{{"m", coords_json(m)}, {"value", cyc_json(point_spectrum(f, m))}});
        }
    }
    Json rep{{"type", "fourier-spectrum"},
             {"p", p.value()},
             {"d", f.dim()},
             {"coefficients", coeffs}};
    emit(rep, "computed " + std::to_string(coeffs.size()) + " Fourier coefficients");
    return kExitHolds;
}

int cmd_fourier_zeros(const Ctx& ctx, const std::string& fpath) {
    RationalFunction f = load_function(fpath);
    Spectrum s = dft(f, ctx.threads);
    Json zeros = Json::array();
    for (const FpVector& m : zero_set(s)) zeros.push_back(coords_json(m));
    Json rep{{"type", "fourier-zeros"},
             {"p", f.modulus().value()},
             {"d", f.dim()},
             {"zeros", zeros}};
    emit(rep, std::to_string(zeros.size()) + " vanishing coefficients");
    return kExitHolds;
}

int cmd_fourier_stats(const Ctx& ctx, const std::string& fpath,
                      const std::vector<std::string>& ms) {
    RationalFunction f = load_function(fpath);
    PrimeModulus p = f.modulus();
    std::vector<FpVector> dirs;
    if (ms.empty())
        dirs = directions(p, f.dim());
    else
        for (const std::string& text : ms) dirs.push_back(parse_direction(text, p, f.dim()));
    Json stats = Json::array();
    BigRational variance_total(0);
    for (const FpVector& m : dirs) {
        HyperplaneStats hs = hyperplane_stats(f, m);
        stats.push_back(hyperplane_stats_json(hs));
        variance_total += hs.variance;
    }
    BigRational mean = f.average();
    Json rep{{"type", "fourier-stats"},
             {"p", p.value()},
             {"d", f.dim()},
             {"mean", format_rational(mean)},
             {"directions", stats}};
    if (ms.empty()) {
        BigRational energy = f.sum_of_squares() / power_checked(p.value(), f.dim());
        BigRational decomposition = mean * mean + variance_total;
        if (energy != decomposition)
            throw Error(ErrorKind::InternalContradiction,
                        "energy does not match mean^2 plus the direction variances");
        rep["energy"] = format_rational(energy);
        rep["energy_decomposition_exact"] = true;
    }
    emit(rep, "hyperplane statistics for " + std::to_string(dirs.size()) + " directions");
    return kExitHolds;
}

int cmd_poly_check(const Ctx&, const std::string& epath, const std::string& apath, Int k) {
    PointSet e = load_set(epath);
    PointSet a = load_set(apath);
    bool holds = tiling_poly_check(e, a, k);
    Json rep{{"type", "poly-check"},
             {"p", e.modulus().value()},
             {"d", e.dim()},
             {"k", k},
             {"holds", holds}};
    emit(rep, std::string("polynomial identity ") + (holds ? "holds" : "fails"));
    return holds ? kExitHolds : kExitFails;
}

int cmd_poly_moments(const Ctx&, const std::string& epath, const std::string& apath) {
    PointSet e = load_set(epath);
    PointSet a = load_set(apath);
    std::vector<Int> first = first_moment(e, a);
    Json seconds = Json::array();
    bool all_zero = true;
    for (Int v : first) all_zero = all_zero && v == 0;
    for (int j = 1; j <= e.dim(); ++j) {
        Int m2 = second_moment(e, a, j);
        seconds.push_back(m2);
        all_zero = all_zero && m2 == 0;
    }
    Json firsts = Json::array();
    for (Int v : first) firsts.push_back(v);
    Json rep{{"type", "poly-moments"},
             {"p", e.modulus().value()},
             {"d", e.dim()},
             {"first", firsts},
             {"second", seconds},
             {"vanish", all_zero}};
    emit(rep, std::string("moment identities ") + (all_zero ? "vanish" : "do not vanish"));
    return all_zero ? kExitHolds : kExitFails;
}

int cmd_pack_circles(const Ctx& ctx, Int p, Int c, Int k, bool allow_zero) {
    auto res = pack_circles(PrimeModulus(p), c, k, allow_zero, ctx.pack_options());
    if (!res) {
        Json rep{{"type", "packing"}, {"p", p}, {"found", false}, {"k", k}, {"radius", c}};
        emit(rep, "no packing of " + std::to_string(k) + " disjoint circles");
        return kExitFails;
    }
    Json rep = packing_result_json(*res);
    rep["found"] = true;
    emit(rep, "found " + std::to_string(k) + " pairwise disjoint circles");
    return kExitHolds;
}

int cmd_pack_number(const Ctx& ctx, Int p, Int c, const std::string& mode) {
    PackingMode m = mode == "full" ? PackingMode::Full : PackingMode::NonzeroDistance;
    PackingNumber num = packing_number(PrimeModulus(p), c, m, ctx.pack_options());
    Json rep{{"type", "packing-number"},
             {"p", p},
             {"radius", c},
             {"mode", mode},
             {"value", num.value},
             {"witness", packing_result_json(num.witness)}};
    emit(rep, "packing number " + std::to_string(num.value));
    return kExitHolds;
}

int cmd_pack_isotropic(const Ctx&, Int p, Int c) {
    IsotropicPacking iso = isotropic_pack(PrimeModulus(p), c);
    Json rep{{"type", "isotropic-packing"},
             {"p", p},
             {"radius", c},
             {"i", iso.i},
             {"packing", packing_result_json(iso.packing)},
             {"complement", point_list_json(iso.complement)}};
    emit(rep, std::to_string(iso.packing.centers.size()) +
                  " disjoint circles on the isotropic line; complement is the line itself");
    return kExitHolds;
}

int cmd_pack_sphere(const Ctx&, Int p, int d, Int t) {
    SpherePackReport rep = sphere_pack_check(PrimeModulus(p), d, t);
    Json shifts = Json::array();
    for (const SphereShiftWitness& w : rep.witnesses)
        shifts.push_back(Json{{"shift", coords_json(w.shift)},
                              {"common_point", coords_json(w.common_point)}});
    Json out{{"type", "sphere-pack"},
             {"p", p},
             {"d", d},
             {"t", t},
             {"sphere_size", rep.sphere_size},
             {"packs_alone", rep.packs_alone},
             {"witnesses", shifts}};
    if (rep.disjoint_shift) out["disjoint_shift"] = coords_json(*rep.disjoint_shift);
    emit(out, rep.packs_alone ? "sphere meets every nonzero translate of itself"
                              : "sphere has a disjoint translate");
    return rep.packs_alone ? kExitHolds : kExitFails;
}

int cmd_pack_set(const Ctx& ctx, const std::string& epath) {
    PointSet e = load_set(epath);
    PackingResult res = optimal_packing_set(e, ctx.pack_options());
    Json rep = packing_result_json(res);
    rep["shifts"] = rep["centers"];
    emit(rep, "optimal packing with " + std::to_string(res.centers.size()) +
                  " disjoint translates, density " + format_rational(res.density));
    return kExitHolds;
}

int cmd_pack_recheck(const Ctx&, const std::string& rpath, const std::string& epath) {
    Json j = Manifest::load_raw(rpath);
    PackingResult res = packing_result_from_json(j);
    PrimeModulus p(res.p);
    std::vector<PointSet> bodies;
    if (res.kind == PackingKind::CliqueOptimal) {
        if (epath.empty())
            throw Error(ErrorKind::BadManifest,
                        "set-packing results need --e with the packed set");
        PointSet e = load_set(epath);
        for (const FpVector& a : res.centers) bodies.push_back(e.translated(a));
    } else {
        for (const FpVector& center : res.centers)
            bodies.push_back(circle_points(Circle{center, res.radius}));
    }
    for (std::size_t i = 0; i < bodies.size(); ++i)
        for (std::size_t k = i + 1; k < bodies.size(); ++k)
            for (Int idx : bodies[k].indices())
                if (bodies[i].contains(idx))
                    throw Error(ErrorKind::InternalContradiction,
                                "packing result is not pairwise disjoint");
    Json rep{{"type", "pack-recheck"},
             {"p", res.p},
             {"d", res.d},
             {"bodies", bodies.size()},
             {"holds", true}};
    emit(rep, "packing re-verified: all bodies pairwise disjoint");
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tiling and packing toolkit for prime-field spaces"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--threads", ctx.threads, "worker threads for transforms and searches")
        ->check(CLI::PositiveNumber);
    if (const char* env = std::getenv("FFTILE_NODE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) {
            std::cerr << "bad FFTILE_NODE_BUDGET value '" << env << "'\n";
            return kExitUsage;
        }
        ctx.node_budget = v;
    }

    std::function<int()> action;

    std::string epath, apath, fpath, wpath, rpath;
    std::vector<std::string> ms;
    Int k = 1, pval = 0, cval = 0, tval = 0;
    int dval = 0;
    std::optional<Int> p_override;
    std::optional<int> d_override;
    bool allow_zero = false;
    std::string mode = "nonzero";

    CLI::App* tile = app.add_subcommand("tile", "tiling verification and classification");
    {
        CLI::App* verify = tile->add_subcommand("verify", "check a k-tiling by all three criteria");
        verify->add_option("--e", epath, "point-set manifest for E")->required();
        verify->add_option("--a", apath, "point-set manifest for A")->required();
        verify->add_option("--k", k, "tiling multiplicity")->required();
        verify->add_option("--p", p_override, "expected modulus (cross-checked)");
        verify->add_option("--d", d_override, "expected dimension (cross-checked)");
        verify->callback([&] {
            action = [&] { return cmd_tile_verify(ctx, epath, apath, k, p_override, d_override); };
        });

        CLI::App* classify = tile->add_subcommand("classify", "classify a plane 1-tiling");
        classify->add_option("--e", epath, "point-set manifest for E")->required();
        classify->add_option("--a", apath, "point-set manifest for A")->required();
        classify->callback(
            [&] { action = [&] { return cmd_tile_classify(ctx, epath, apath); }; });

        CLI::App* decompose =
            tile->add_subcommand("decompose", "decompose a plane k-tiling into graphs");
        decompose->add_option("--e", epath, "point-set manifest for E")->required();
        decompose->add_option("--a", apath, "point-set manifest for A")->required();
        decompose->add_option("--k", k, "tiling multiplicity")->required();
        decompose->callback(
            [&] { action = [&] { return cmd_tile_decompose(ctx, epath, apath, k); }; });

        CLI::App* recheck = tile->add_subcommand("recheck", "re-verify an emitted graph witness");
        recheck->add_option("--witness", wpath, "graph witness report")->required();
        recheck->callback([&] { action = [&] { return cmd_tile_recheck(ctx, wpath); }; });
    }

    CLI::App* fourier = app.add_subcommand("fourier", "exact spectra over the cyclotomic field");
    {
        CLI::App* spectrum = fourier->add_subcommand("spectrum", "Fourier coefficients");
        spectrum->add_option("--f", fpath, "function or set manifest")->required();
        spectrum->add_option("--m", ms, "direction, comma-separated coordinates (repeatable)");
        spectrum->callback([&] { action = [&] { return cmd_fourier_spectrum(ctx, fpath, ms); }; });

        CLI::App* zeros = fourier->add_subcommand("zeros", "vanishing coefficients");
        zeros->add_option("--f", fpath, "function or set manifest")->required();
        zeros->callback([&] { action = [&] { return cmd_fourier_zeros(ctx, fpath); }; });

        CLI::App* stats = fourier->add_subcommand("stats", "hyperplane averages and variances");
        stats->add_option("--f", fpath, "function or set manifest")->required();
        stats->add_option("--m", ms, "direction, comma-separated coordinates (repeatable)");
        stats->callback([&] { action = [&] { return cmd_fourier_stats(ctx, fpath, ms); }; });
    }

    CLI::App* poly = app.add_subcommand("poly", "group-algebra identity and moments");
    {
        CLI::App* check = poly->add_subcommand("check", "polynomial tiling identity");
        check->add_option("--e", epath, "point-set manifest for E")->required();
        check->add_option("--a", apath, "point-set manifest for A")->required();
        check->add_option("--k", k, "tiling multiplicity")->required();
        check->callback([&] { action = [&] { return cmd_poly_check(ctx, epath, apath, k); }; });

        CLI::App* moments = poly->add_subcommand("moments", "first and second moment identities");
        moments->add_option("--e", epath, "point-set manifest for E")->required();
        moments->add_option("--a", apath, "point-set manifest for A")->required();
        moments->callback([&] { action = [&] { return cmd_poly_moments(ctx, epath, apath); }; });
    }

    CLI::App* pack = app.add_subcommand("pack", "circle, sphere and set packings");
    {
        CLI::App* circles = pack->add_subcommand("circles", "k pairwise disjoint circles");
        circles->add_option("--p", pval, "prime modulus")->required();
        circles->add_option("--c", cval, "squared radius")->required();
        circles->add_option("--k", k, "number of circles")->required();
        circles->add_flag("--allow-zero-distance", allow_zero,
                          "admit centers at squared distance 0 (p = 1 mod 4)");
        circles->callback(
            [&] { action = [&] { return cmd_pack_circles(ctx, pval, cval, k, allow_zero); }; });

        CLI::App* number = pack->add_subcommand("number", "exact packing number");
        number->add_option("--p", pval, "prime modulus")->required();
        number->add_option("--c", cval, "squared radius")->required();
        number->add_option("--mode", mode, "nonzero (default) or full")
            ->check(CLI::IsMember({"nonzero", "full"}));
        number->callback([&] { action = [&] { return cmd_pack_number(ctx, pval, cval, mode); }; });

        CLI::App* isotropic = pack->add_subcommand("isotropic", "p circles on an isotropic line");
        isotropic->add_option("--p", pval, "prime modulus, p = 1 mod 4")->required();
        isotropic->add_option("--c", cval, "squared radius")->required();
        isotropic->callback([&] { action = [&] { return cmd_pack_isotropic(ctx, pval, cval); }; });

        CLI::App* sphere = pack->add_subcommand("sphere", "sphere self-intersection check, d >= 4");
        sphere->add_option("--p", pval, "prime modulus")->required();
        sphere->add_option("--d", dval, "dimension, at least 4")->required();
        sphere->add_option("--t", tval, "squared radius")->required();
        sphere->callback([&] { action = [&] { return cmd_pack_sphere(ctx, pval, dval, tval); }; });

        CLI::App* set = pack->add_subcommand("set", "optimal packing by translates of a set");
        set->add_option("--e", epath, "point-set manifest for E")->required();
        set->callback([&] { action = [&] { return cmd_pack_set(ctx, epath); }; });

        CLI::App* recheck = pack->add_subcommand("recheck", "re-verify an emitted packing");
        recheck->add_option("--result", rpath, "packing result report")->required();
        recheck->add_option("--e", epath, "packed set manifest (set packings only)");
        recheck->callback([&] { action = [&] { return cmd_pack_recheck(ctx, rpath, epath); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == ErrorKind::InternalContradiction ? kExitContradiction : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
