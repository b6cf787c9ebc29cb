#include "spectral/json_io.hpp"

namespace spectral {

nlohmann::json to_json(const Rational& q) { return q.str(); }

nlohmann::json to_json(const MultiLaurent& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exponents"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    nlohmann::json j;
    j["arity"] = p.arity();
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json to_json(const LaurentSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [k, c] : s.coeffs()) coeffs.push_back({k, c.str()});
    nlohmann::json j;
    j["point"] = to_string(s.point());
    j["order"] = s.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

Rational rational_from_json(const nlohmann::json& j) {
    return Rational::parse(j.get<std::string>());
}

MultiLaurent multilaurent_from_json(const nlohmann::json& j) {
    MultiLaurent p(j.at("arity").get<int>());
    for (const auto& t : j.at("terms")) {
        Exp e = t.at("exponents").get<Exp>();
        p.add_term(e, Rational::parse(t.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace spectral
