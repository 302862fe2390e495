#include "qroot3/json_io.hpp"

namespace qroot3::json_io {

Json to_json(const Cyc& c) {
    Json j;
    j["r0"] = rat_string(c.r0());
    j["r1"] = rat_string(c.r1());
    return j;
}

Cyc cyc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("r0") || !j.contains("r1") || !j["r0"].is_string() || !j["r1"].is_string())
        throw std::invalid_argument("scalar must be {\"r0\": string, \"r1\": string}");
    return Cyc(parse_rat(j["r0"].get<std::string>()), parse_rat(j["r1"].get<std::string>()));
}

Json element_to_json(const CycVector& v, expr::Context ctx) {
    Json j;
    j["algebra"] = expr::context_name(ctx);
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) coeffs.push_back(to_json(v(i)));
    j["coeffs"] = coeffs;
    return j;
}

CycVector element_from_json(const Json& j, expr::Context* ctx) {
    if (!j.is_object() || !j.contains("algebra") || !j.contains("coeffs"))
        throw std::invalid_argument("element must have \"algebra\" and \"coeffs\"");
    const expr::Context c = expr::context_from_name(j["algebra"].get<std::string>());
    const int dim = expr::context_algebra(c).dim;
    const Json& a = j["coeffs"];
    if (!a.is_array() || static_cast<int>(a.size()) != dim)
        throw std::invalid_argument("\"coeffs\" must hold " + std::to_string(dim) + " scalars");
    CycVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = cyc_from_json(a[i]);
    if (ctx) *ctx = c;
    return v;
}

Json matrix_to_json(const CycMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

CycMatrix matrix_from_json(const Json& j) {
    const int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    const Json& e = j.at("entries");
    if (!e.is_array() || static_cast<int>(e.size()) != rows) throw std::invalid_argument("bad matrix rows");
    CycMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!e[r].is_array() || static_cast<int>(e[r].size()) != cols) throw std::invalid_argument("bad matrix row");
        for (int c = 0; c < cols; ++c) m(r, c) = cyc_from_json(e[r][c]);
    }
    return m;
}

}  // namespace qroot3::json_io
