#pragma once

#include <nlohmann/json.hpp>

#include "fftile/cyclotomic.hpp"
#include "fftile/fourier.hpp"
#include "fftile/packing.hpp"
#include "fftile/tiling.hpp"

namespace fftile {

using Json = nlohmann::json;

/// JSON encodings of result objects. Rationals are strings, vectors
/// are coordinate arrays, cyclotomic numbers are their coefficient
/// vectors on the power basis. Round-trip is exact: parse(render(x))
/// reproduces x for the types that can be re-checked.

Json coords_json(const FpVector& v);
FpVector coords_from_json(const Json& j, PrimeModulus p, int d);

Json cyc_json(const CycNum& x);
CycNum cyc_from_json(const Json& j, PrimeModulus p);

Json point_list_json(const PointSet& s);

Json histogram_json(const std::map<Int, Int>& h);

Json graph_witness_json(const GraphWitness& w);
GraphWitness graph_witness_from_json(const Json& j);

Json packing_result_json(const PackingResult& r);
PackingResult packing_result_from_json(const Json& j);

Json hyperplane_stats_json(const HyperplaneStats& s);

}  // namespace fftile
