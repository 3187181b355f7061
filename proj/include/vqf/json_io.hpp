#pragma once

#include <json.hpp>

#include "vqf/multiindex.hpp"
#include "vqf/point.hpp"
#include "vqf/qmatrix.hpp"
#include "vqf/schur.hpp"
#include "vqf/series.hpp"

namespace vqf {

// Wire formats:
//   Quaternion     [w, x, y, z]
//   MultiIndex     [a1, a2, a3]
//   PointH         [x0, x1, x2, x3]
//   QMatrix        {"rows": n, "cols": m, "data": [[w,x,y,z], ...]} row-major
//   FueterSeries   {"rows": n, "cols": m, "trunc": d|null,
//                   "terms": [{"alpha": [..], "coeff": QMatrix}, ...]} canonical order
//   Realization    {"N": N, "n": n, "m": m, "A": .., "B": .., "C": .., "D": ..}
using Json = nlohmann::ordered_json;

Json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);

Json to_json(const MultiIndex& a);
MultiIndex multiindex_from_json(const Json& j);

Json to_json(const PointH& p);
PointH point_from_json(const Json& j);

Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json to_json(const FueterSeries& f);
FueterSeries series_from_json(const Json& j);

Json to_json(const Realization& r);
Realization realization_from_json(const Json& j);

}  // namespace vqf
