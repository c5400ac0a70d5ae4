#include "choiwit/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace choiwit {

json matrix_to_json(const CMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back({m(i, j).real(), m(i, j).imag()});
    return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

CMat matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON must carry \"dim\" and \"entries\"");
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim))
        throw std::invalid_argument("matrix JSON needs dim^2 [re, im] pairs");
    CMat m(dim, dim);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j2 = 0; j2 < dim; ++j2, ++idx) {
            const auto& pair = entries.at(idx);
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("matrix entries must be [re, im] pairs");
            m(i, j2) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
    return m;
}

json witness_to_json(const WitnessMatrix& w) {
    json j = matrix_to_json(w.mat);
    if (w.params) j["params"] = {w.params->a, w.params->b, w.params->c};
    return j;
}

namespace {

json finite_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

}  // namespace

json region_to_json(const RegionProfile& r) {
    return json{
        {"positive", r.positive},
        {"completely_positive", r.completely_positive},
        {"completely_copositive", r.completely_copositive},
        {"decomposable", r.decomposable},
        {"margins",
         {{"positivity_sum", finite_or_null(r.margin_pos_sum)},
          {"positivity_bc", finite_or_null(r.margin_pos_bc)},
          {"cp", finite_or_null(r.margin_cp)},
          {"ccp", finite_or_null(r.margin_ccp)},
          {"decomposable", finite_or_null(r.margin_dec)}}},
    };
}

json profile_to_json(const PropertyProfile& p) {
    return json{
        {"spanning", p.spanning},       {"co_spanning", p.co_spanning},
        {"bi_spanning", p.bi_spanning}, {"optimal", p.optimal},
        {"co_optimal", p.co_optimal},   {"bi_optimal", p.bi_optimal},
    };
}

json classified_to_json(const ClassifiedPoint& cp) {
    json j{{"params", {cp.params.a, cp.params.b, cp.params.c}},
           {"face", face_name(cp.face)}};
    if (cp.face.t) j["t"] = *cp.face.t;
    if (cp.profile) j["profile"] = profile_to_json(*cp.profile);
    j["region"] = region_to_json(cp.region);
    if (!cp.notes.empty()) j["notes"] = cp.notes;
    return j;
}

namespace {

json cvec_to_json(const CVec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back({v(i).real(), v(i).imag()});
    return arr;
}

}  // namespace

json product_vector_to_json(const ProductVector& v, double value) {
    return json{{"xi", cvec_to_json(v.xi)}, {"eta", cvec_to_json(v.eta)}, {"value", value}};
}

json certificate_to_json(const SpanningCertificate& cert) {
    json vecs = json::array();
    for (std::size_t i = 0; i < cert.vectors.size(); ++i)
        vecs.push_back(product_vector_to_json(cert.vectors[i], cert.values[i]));
    json j{{"target", cert.target == SpanTarget::SPANNING ? "spanning" : "co_spanning"}};
    if (cert.params) j["params"] = {cert.params->a, cert.params->b, cert.params->c};
    j["tol"] = cert.rank_tol;
    j["zero_tol"] = cert.zero_tol;
    j["vectors"] = std::move(vecs);
    j["rank"] = cert.rank;
    j["verdict"] =
        cert.verdict == SpanVerdict::CERTIFIED ? "CERTIFIED" : "EVIDENCE_ONLY";
    j["seed"] = cert.seed;
    return j;
}

json detection_to_json(const DetectionReport& rep) {
    return json{
        {"status", rep.status == DetectStatus::FOUND ? "FOUND" : "NOT_FOUND"},
        {"witness_value", rep.witness_value},
        {"ppt_margin", rep.ppt_margin},
        {"note", rep.note},
        {"state", matrix_to_json(rep.state)},
    };
}

}  // namespace choiwit
