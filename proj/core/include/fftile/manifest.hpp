#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "fftile/fourier.hpp"
#include "fftile/fp.hpp"

namespace fftile {

using Json = nlohmann::json;

/// On-disk description of a point set or a rational function on F_p^d.
///
/// Set form:      {"schema": 1, "p": 5, "d": 2, "role": "set",
///                 "points": [[0, 0], [1, 2], ...]}
/// Function form: {"schema": 1, "p": 5, "d": 1, "role": "function",
///                 "values": ["0/1", "3/2", ...]}  (index order, p^d entries)
///
/// Rationals are always strings, "num/den" on output, "num/den" or
/// "num" on input. Coordinates may be any integers; they reduce mod p.
struct Manifest {
    int schema = 1;
    Int p = 2;
    int d = 1;
    enum class Role { Set, Function };
    Role role = Role::Set;
    std::vector<std::vector<Int>> points;
    std::vector<BigRational> values;

    static Manifest from_json(const Json& j);
    Json to_json() const;

    static Manifest load(const std::string& path);
    void save(const std::string& path) const;

    /// Raw JSON from a file, with manifest-style I/O errors. Report
    /// consumers (witness recheck) share the loader.
    static Json load_raw(const std::string& path);

    static Manifest of(const PointSet& s);
    static Manifest of(const RationalFunction& f);

    /// Set manifests convert directly; function manifests must be
    /// 0/1-valued (BadManifest otherwise).
    PointSet to_point_set() const;
    /// Set manifests convert to their indicator.
    RationalFunction to_function() const;
};

}  // namespace fftile
