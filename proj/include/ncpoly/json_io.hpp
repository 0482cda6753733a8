#pragma once

#include "ncpoly/cell_complexes.hpp"
#include "ncpoly/hurwitz.hpp"
#include "ncpoly/ll_fiber.hpp"
#include "ncpoly/monodromy.hpp"
#include "ncpoly/nc_lattice.hpp"
#include "ncpoly/poly_numeric.hpp"
#include "ncpoly/set_partition.hpp"

#include <json.hpp>

namespace ncpoly {

using json = nlohmann::json;

json to_json(const SetPartition& p);
SetPartition set_partition_from_json(const json& j);

json to_json(const IntegerPartition& p);
json to_json(const LinearComposition& c);

json to_json(const Permutation& p);  // one-line array
/// Accepts a one-line array [2,1,3] or cycles [[1,3,7],[4,5]] with degree d.
Permutation permutation_from_json(const json& j, int d = -1);

json to_json(const NoncrossingPartition& p);
json to_json(const NCChain& c);
json to_json(const NCMatching& m);
NCMatching matching_from_json(const json& j);

json to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

json to_json(cplx z);  // [re, im]
cplx cplx_from_json(const json& j);

json to_json(const ComplexPoly& p);
ComplexPoly poly_from_json(const json& j);

json to_json(const NumericMultiset& m);
NumericMultiset multiset_from_json(const json& j);

json to_json(const Rectangle& r);
Rectangle rectangle_from_json(const json& j);

json to_json(const CriticalData& cd);
json to_json(const ComplexStats& st);
json to_json(const RectangleStats& st);
json to_json(const SideChains& sc);
json to_json(const GeoComPoint& g);
json to_json(const SideConstellations& sc);
json to_json(const FiberResult& fr);

}  // namespace ncpoly
