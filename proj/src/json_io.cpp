#include "vqf/json_io.hpp"

namespace vqf {

Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error("quaternion json: expected [w, x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json to_json(const MultiIndex& a) { return Json::array({a.a1, a.a2, a.a3}); }

MultiIndex multiindex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw Error("multi-index json: expected [a1, a2, a3]");
    const MultiIndex a{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
    if (a.a1 < 0 || a.a2 < 0 || a.a3 < 0) throw Error("multi-index json: entries must be >= 0");
    return a;
}

Json to_json(const PointH& p) { return Json::array({p.x0, p.x1, p.x2, p.x3}); }

PointH point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error("point json: expected [x0, x1, x2, x3]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json to_json(const QMatrix& m) {
    Json data = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) data.push_back(to_json(m.at(i, j)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

QMatrix qmatrix_from_json(const Json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& data = j.at("data");
    if (rows < 0 || cols < 0 || static_cast<int>(data.size()) != rows * cols)
        throw Error("qmatrix json: data length does not match rows * cols");
    QMatrix m(rows, cols);
    int k = 0;
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = quaternion_from_json(data[k++]);
    return m;
}

Json to_json(const FueterSeries& f) {
    Json terms = Json::array();
    for (const auto& [alpha, coeff] : f.terms())
        terms.push_back(Json{{"alpha", to_json(alpha)}, {"coeff", to_json(coeff)}});
    Json out{{"rows", f.rows()}, {"cols", f.cols()}};
    if (f.trunc_degree())
        out["trunc"] = *f.trunc_degree();
    else
        out["trunc"] = nullptr;
    out["terms"] = std::move(terms);
    return out;
}

FueterSeries series_from_json(const Json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    std::optional<int> trunc;
    if (j.contains("trunc") && !j.at("trunc").is_null()) trunc = j.at("trunc").get<int>();
    FueterSeries f(rows, cols, trunc);
    for (const auto& term : j.at("terms"))
        f.add(multiindex_from_json(term.at("alpha")), qmatrix_from_json(term.at("coeff")));
    return f;
}

Json to_json(const Realization& r) {
    return Json{{"N", r.N()}, {"n", r.n()}, {"m", r.m()},
                {"A", to_json(r.A)}, {"B", to_json(r.B)},
                {"C", to_json(r.C)}, {"D", to_json(r.D)}};
}

Realization realization_from_json(const Json& j) {
    Realization r;
    r.A = qmatrix_from_json(j.at("A"));
    r.B = qmatrix_from_json(j.at("B"));
    r.C = qmatrix_from_json(j.at("C"));
    r.D = qmatrix_from_json(j.at("D"));
    r.validate();
    if (j.contains("N") && j.at("N").get<int>() != r.N())
        throw Error("realization json: N does not match A");
    return r;
}

}  // namespace vqf
