#include "genchar/json_io.hpp"

#include "genchar/errors.hpp"

namespace genchar {

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto* t : p.sorted_terms()) {
        Json mono = Json::object();
        for (const auto& [v, e] : t->first.entries()) mono[v.name()] = e;
        terms.push_back(Json{{"coeff", rational_to_string(t->second)}, {"monomial", mono}});
    }
    return terms;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) fail(Errc::BadInput, "polynomial JSON must be an array of terms");
    Poly p;
    for (const auto& t : j) {
        if (!t.contains("coeff") || !t.contains("monomial"))
            fail(Errc::BadInput, "term needs 'coeff' and 'monomial'");
        Rational c = rational_from_string(t["coeff"].get<std::string>());
        std::vector<Monomial::Entry> es;
        for (const auto& [name, exp] : t["monomial"].items()) {
            VarId v = VarId::parse(name);
            int e = exp.get<int>();
            if (e < 0 && v.family() != Family::X && v.family() != Family::Y)
                fail(Errc::NegativeSeriesExponent,
                     "negative exponent on " + name + " in polynomial JSON");
            es.push_back({v, e});
        }
        p.add_term(Monomial(std::move(es)), c);
    }
    return p;
}

std::string poly_to_json_string(const Poly& p) { return poly_to_json(p).dump(); }

Poly poly_from_json_string(const std::string& s) {
    return poly_from_json(Json::parse(s));
}

} // namespace genchar
