#include "fftile/manifest.hpp"

#include <fstream>

namespace fftile {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadManifest, what); }

Int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer '") + key + "'");
    return j[key].get<Int>();
}

}  // namespace

Manifest Manifest::from_json(const Json& j) {
    if (!j.is_object()) bad("manifest must be a JSON object");
    Manifest m;
    m.schema = static_cast<int>(int_field(j, "schema"));
    if (m.schema != 1) bad("unsupported schema " + std::to_string(m.schema));
    m.p = int_field(j, "p");
    PrimeModulus p(m.p);
    m.d = static_cast<int>(int_field(j, "d"));
    if (m.d < 1) bad("dimension must be at least 1");
    Int n = power_checked(m.p, m.d);
    if (!j.contains("role") || !j["role"].is_string()) bad("missing string 'role'");
    std::string role = j["role"].get<std::string>();
    if (role == "set") {
        m.role = Role::Set;
        if (!j.contains("points") || !j["points"].is_array()) bad("set manifest needs a 'points' array");
        for (const Json& pt : j["points"]) {
            if (!pt.is_array() || static_cast<int>(pt.size()) != m.d)
                bad("each point must list exactly d coordinates");
            std::vector<Int> coords;
            for (const Json& c : pt) {
                if (!c.is_number_integer()) bad("coordinates must be integers");
                coords.push_back(mod_reduce(c.get<Int>(), m.p));
            }
            m.points.push_back(std::move(coords));
        }
    } else if (role == "function") {
        m.role = Role::Function;
        if (!j.contains("values") || !j["values"].is_array()) bad("function manifest needs a 'values' array");
        if (static_cast<Int>(j["values"].size()) != n)
            bad("function manifest needs one value per point of F_p^d");
        for (const Json& v : j["values"]) {
            if (!v.is_string()) bad("values must be rational strings");
            try {
                m.values.push_back(parse_rational(v.get<std::string>()));
            } catch (const Error&) {
                bad("unparseable rational '" + v.get<std::string>() + "'");
            }
        }
    } else {
        bad("role must be 'set' or 'function'");
    }
    return m;
}

Json Manifest::to_json() const {
    Json j;
    j["schema"] = schema;
    j["p"] = p;
    j["d"] = d;
    if (role == Role::Set) {
        j["role"] = "set";
        j["points"] = Json::array();
        for (const auto& pt : points) j["points"].push_back(pt);
    } else {
        j["role"] = "function";
        j["values"] = Json::array();
        for (const BigRational& v : values) j["values"].push_back(format_rational(v));
    }
    return j;
}

Json Manifest::load_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        bad("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

Manifest Manifest::load(const std::string& path) { return from_json(load_raw(path)); }

void Manifest::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) bad("cannot write '" + path + "'");
    out << to_json().dump(2) << '\n';
}

Manifest Manifest::of(const PointSet& s) {
    Manifest m;
    m.p = s.modulus().value();
    m.d = s.dim();
    m.role = Role::Set;
    for (const FpVector& v : s.points())
        m.points.emplace_back(v.coords().begin(), v.coords().end());
    return m;
}

Manifest Manifest::of(const RationalFunction& f) {
    Manifest m;
    m.p = f.modulus().value();
    m.d = f.dim();
    m.role = Role::Function;
    for (Int i = 0; i < f.domain_size(); ++i) m.values.push_back(f.at(i));
    return m;
}

PointSet Manifest::to_point_set() const {
    PrimeModulus pm(p);
    if (role == Role::Set) {
        std::vector<FpVector> pts;
        for (const auto& c : points) pts.emplace_back(pm, c);
        return PointSet::from_points(pm, d, pts);
    }
    std::vector<Int> idx;
    for (Int i = 0; i < static_cast<Int>(values.size()); ++i) {
        if (values[static_cast<std::size_t>(i)] == 1)
            idx.push_back(i);
        else if (values[static_cast<std::size_t>(i)] != 0)
            bad("function manifest is not an indicator");
    }
    return {pm, d, std::move(idx)};
}

RationalFunction Manifest::to_function() const {
    PrimeModulus pm(p);
    if (role == Role::Function) {
        RationalFunction f(pm, d);
        for (Int i = 0; i < static_cast<Int>(values.size()); ++i)
            f.set(i, values[static_cast<std::size_t>(i)]);
        return f;
    }
    return RationalFunction::indicator(to_point_set());
}

}  // namespace fftile
