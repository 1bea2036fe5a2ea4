#include "fftile/serialize.hpp"

namespace fftile {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadManifest, what); }

Int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer '") + key + "'");
    return j[key].get<Int>();
}

std::string string_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) bad(std::string("missing string '") + key + "'");
    return j[key].get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) bad(std::string("missing array '") + key + "'");
    return j[key];
}

std::vector<Int> int_list(const Json& j) {
    std::vector<Int> out;
    for (const Json& x : j) {
        if (!x.is_number_integer()) bad("expected an integer array");
        out.push_back(x.get<Int>());
    }
    return out;
}

}  // namespace

Json coords_json(const FpVector& v) {
    Json out = Json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(v[i]);
    return out;
}

FpVector coords_from_json(const Json& j, PrimeModulus p, int d) {
    if (!j.is_array() || static_cast<int>(j.size()) != d) bad("expected d coordinates");
    return {p, int_list(j)};
}

Json cyc_json(const CycNum& x) {
    Json out = Json::array();
    for (const BigRational& c : x.coeffs()) out.push_back(format_rational(c));
    return out;
}

CycNum cyc_from_json(const Json& j, PrimeModulus p) {
    if (!j.is_array() || static_cast<Int>(j.size()) != p.value() - 1)
        bad("cyclotomic coefficient vector has the wrong length");
    CycNum x(p);
    Int k = 0;
    for (const Json& c : j) {
        if (!c.is_string()) bad("cyclotomic coefficients must be rational strings");
        x.add_scaled_power(k++, parse_rational(c.get<std::string>()));
    }
    return x;
}

Json point_list_json(const PointSet& s) {
    Json out = Json::array();
    for (const FpVector& v : s.points()) out.push_back(coords_json(v));
    return out;
}

Json histogram_json(const std::map<Int, Int>& h) {
    Json out = Json::object();
    for (const auto& [mult, count] : h) out[std::to_string(mult)] = count;
    return out;
}

Json graph_witness_json(const GraphWitness& w) {
    Json j;
    j["type"] = "graph-witness";
    j["p"] = w.modulus().value();
    j["d"] = w.dim();
    j["s"] = w.s;
    j["kind"] = witness_kind_name(w.kind);
    j["basis"] = Json::array();
    for (const FpVector& b : w.basis) j["basis"].push_back(coords_json(b));
    j["values"] = Json::array();
    for (const auto& img : w.values) j["values"].push_back(img);
    if (w.poly) j["poly"] = *w.poly;
    j["points"] = point_list_json(graph_points(w));
    return j;
}

GraphWitness graph_witness_from_json(const Json& j) {
    if (!j.is_object() || string_field(j, "type") != "graph-witness")
        bad("expected a graph-witness object");
    PrimeModulus p(int_field(j, "p"));
    int d = static_cast<int>(int_field(j, "d"));
    int s = static_cast<int>(int_field(j, "s"));
    std::string kind_name = string_field(j, "kind");
    WitnessKind kind;
    if (kind_name == "axis-aligned") kind = WitnessKind::AxisAligned;
    else if (kind_name == "orthogonal-basis") kind = WitnessKind::OrthogonalBasis;
    else if (kind_name == "isotropic-basis") kind = WitnessKind::IsotropicBasis;
    else bad("unknown witness kind '" + kind_name + "'");
    GraphWitness w{kind, s, {}, {}, std::nullopt};
    for (const Json& b : array_field(j, "basis")) w.basis.push_back(coords_from_json(b, p, d));
    for (const Json& img : array_field(j, "values")) {
        if (!img.is_array()) bad("witness values must be arrays");
        w.values.push_back(int_list(img));
    }
    if (j.contains("poly")) w.poly = int_list(array_field(j, "poly"));
    validate_witness(w);
    if (j.contains("points")) {
        PointSet embedded = PointSet::from_points(
            p, d,
            [&] {
                std::vector<FpVector> pts;
                for (const Json& pt : array_field(j, "points")) pts.push_back(coords_from_json(pt, p, d));
                return pts;
            }());
        if (!(embedded == graph_points(w)))
            bad("witness points do not match the basis and value table");
    }
    return w;
}

Json packing_result_json(const PackingResult& r) {
    Json j;
    j["type"] = "packing";
    j["p"] = r.p;
    j["d"] = r.d;
    j["kind"] = packing_kind_name(r.kind);
    j["radius"] = r.radius;
    j["certified"] = r.certified;
    j["centers"] = Json::array();
    for (const FpVector& c : r.centers) j["centers"].push_back(coords_json(c));
    j["pair_norms"] = Json::array();
    for (const PairDistance& pd : r.pair_norms)
        j["pair_norms"].push_back({{"i", pd.i}, {"j", pd.j}, {"norm", pd.norm}});
    j["density"] = format_rational(r.density);
    return j;
}

PackingResult packing_result_from_json(const Json& j) {
    if (!j.is_object() || string_field(j, "type") != "packing") bad("expected a packing object");
    PrimeModulus p(int_field(j, "p"));
    int d = static_cast<int>(int_field(j, "d"));
    std::string kind_name = string_field(j, "kind");
    PackingKind kind;
    if (kind_name == "simplex-search") kind = PackingKind::SimplexSearch;
    else if (kind_name == "isotropic") kind = PackingKind::Isotropic;
    else if (kind_name == "clique-optimal") kind = PackingKind::CliqueOptimal;
    else bad("unknown packing kind '" + kind_name + "'");
    PackingResult r{p.value(), d, kind, int_field(j, "radius"), false, {}, {}, BigRational(0)};
    if (!j.contains("certified") || !j["certified"].is_boolean()) bad("missing boolean 'certified'");
    r.certified = j["certified"].get<bool>();
    for (const Json& c : array_field(j, "centers")) r.centers.push_back(coords_from_json(c, p, d));
    for (const Json& pd : array_field(j, "pair_norms"))
        r.pair_norms.push_back({static_cast<int>(int_field(pd, "i")),
                                static_cast<int>(int_field(pd, "j")), int_field(pd, "norm")});
    r.density = parse_rational(string_field(j, "density"));
    return r;
}

Json hyperplane_stats_json(const HyperplaneStats& s) {
    Json j;
    j["direction"] = coords_json(s.direction);
    j["mu"] = Json::array();
    for (const BigRational& v : s.mu) j["mu"].push_back(format_rational(v));
    j["mean"] = format_rational(s.mean);
    j["variance"] = format_rational(s.variance);
    j["coefficient"] = cyc_json(s.coefficient);
    return j;
}

}  // namespace fftile
