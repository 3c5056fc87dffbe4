#include "supermac/json_io.hpp"

namespace supermac {

namespace {

nlohmann::json intpoly_to_json(const IntPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        arr.push_back({{"coeff", c.get_str()}, {"exp", {m.a, m.b, m.c}}});
    }
    return arr;
}

IntPoly intpoly_from_json(const nlohmann::json& j) {
    IntPoly p;
    for (const auto& term : j) {
        Integer c(term.at("coeff").get<std::string>());
        auto e = term.at("exp");
        p.add_term(c, Mono{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    }
    return p;
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) {
    return {{"num", intpoly_to_json(s.num())}, {"den", intpoly_to_json(s.den())}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
    return Scalar(intpoly_from_json(j.at("num")), intpoly_from_json(j.at("den")));
}

nlohmann::json poly_to_json(const SuperPolynomial& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, c] : f.terms()) {
        arr.push_back({{"partition", p.parts2()}, {"coeff", scalar_to_json(c)}});
    }
    return arr;
}

SuperPolynomial poly_from_json(const nlohmann::json& j) {
    SuperPolynomial f;
    for (const auto& term : j) {
        auto parts = term.at("partition").get<std::vector<int>>();
        f.add_term(SuperPartition::validate(std::move(parts)),
                   scalar_from_json(term.at("coeff")));
    }
    return f;
}

}  // namespace supermac
