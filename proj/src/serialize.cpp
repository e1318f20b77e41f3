#include "superkit/serialize.hpp"

#include <stdexcept>

namespace superkit {

Json to_json(const ComplexScalar& z) {
    return Json::array({to_string(z.re), to_string(z.im)});
}

ComplexScalar complex_from_json(const Json& j) {
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex value must be [\"re\", \"im\"]");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

Json to_json(const LaurentFn& u) {
    Json terms = Json::array();
    for (const auto& [k, c] : u.terms())
        terms.push_back(Json::array({k.first, k.second, to_string(c.re), to_string(c.im)}));
    return Json{{"terms", terms}};
}

LaurentFn laurent_from_json(const Json& j) {
    LaurentFn u;
    if (j.is_null()) return u;
    const Json& terms = j.contains("terms") ? j.at("terms") : j;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 4)
            throw std::invalid_argument("laurent term must be [m, n, re, im]");
        u.add_term(t[0].get<long>(), t[1].get<long>(),
                   {parse_rational(t[2].get<std::string>()),
                    parse_rational(t[3].get<std::string>())});
    }
    return u;
}

Json to_json(const CircleFn& u) {
    Json terms = Json::array();
    for (const auto& [k, c] : u.terms())
        terms.push_back(Json::array({k, to_string(c.re), to_string(c.im)}));
    return Json{{"terms", terms}};
}

CircleFn circle_from_json(const Json& j) {
    CircleFn u;
    if (j.is_null()) return u;
    const Json& terms = j.contains("terms") ? j.at("terms") : j;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("circle term must be [k, re, im]");
        u.add_term(t[0].get<long>(), {parse_rational(t[1].get<std::string>()),
                                      parse_rational(t[2].get<std::string>())});
    }
    return u;
}

Json to_json(const G2L& g) {
    return Json{{"c0", to_json(g.c0)},
                {"c1", to_json(g.c1)},
                {"c2", to_json(g.c2)},
                {"c12", to_json(g.c12)}};
}

Json to_json(const FieldComponents& f) {
    return Json{{"phi", to_json(f.phi)},
                {"psi1", to_json(f.psi1)},
                {"psi2", to_json(f.psi2)},
                {"F", to_json(f.F)}};
}

FieldComponents field_components_from_json(const Json& j) {
    FieldComponents f;
    if (j.contains("phi")) f.phi = laurent_from_json(j.at("phi"));
    if (j.contains("psi1")) f.psi1 = laurent_from_json(j.at("psi1"));
    if (j.contains("psi2")) f.psi2 = laurent_from_json(j.at("psi2"));
    if (j.contains("F")) f.F = laurent_from_json(j.at("F"));
    return f;
}

Json to_json(const Superfield& f) {
    Json charts = Json::object();
    for (const auto& [name, comps] : f.charts) charts[name] = to_json(comps);
    return Json{{"charts", charts}};
}

Json to_json(const SplitModelSpec& spec) {
    Json j{{"k1", spec.k1},
           {"k2", spec.k2},
           {"lambda1", to_json(spec.lambda1)},
           {"lambda2", to_json(spec.lambda2)}};
    if (!spec.alpha.is_zero()) j["alpha"] = to_json(spec.alpha);
    return j;
}

SplitModelSpec model_from_json(const Json& j) {
    SplitModelSpec spec;
    spec.k1 = j.at("k1").get<long>();
    spec.k2 = j.at("k2").get<long>();
    if (j.contains("lambda1")) spec.lambda1 = complex_from_json(j.at("lambda1"));
    if (j.contains("lambda2")) spec.lambda2 = complex_from_json(j.at("lambda2"));
    if (j.contains("alpha")) spec.alpha = laurent_from_json(j.at("alpha"));
    return spec;
}

namespace {

FieldName field_name_from(const std::string& s) {
    if (s == "phi") return FieldName::Phi;
    if (s == "psi1") return FieldName::Psi1;
    if (s == "psi2") return FieldName::Psi2;
    if (s == "F") return FieldName::F;
    throw std::invalid_argument("unknown field component '" + s + "'");
}

NamedField named_field_from_json(const Json& j, size_t index) {
    NamedField nf;
    nf.name = j.contains("name") ? j.at("name").get<std::string>()
                                 : "field" + std::to_string(index);
    if (!j.contains("charts") || !j.at("charts").is_object())
        throw std::invalid_argument("field needs a \"charts\" object");
    for (const auto& [chart, comps] : j.at("charts").items())
        nf.field.charts[chart] = field_components_from_json(comps);
    if (j.contains("reality")) {
        for (const auto& [key, val] : j.at("reality").items())
            nf.declared[field_name_from(key)] = parse_reality(val.get<std::string>());
    }
    return nf;
}

}  // namespace

std::vector<NamedField> fields_from_json(const Json& j) {
    std::vector<NamedField> out;
    if (j.contains("fields")) {
        size_t i = 0;
        for (const auto& f : j.at("fields")) out.push_back(named_field_from_json(f, i++));
    } else {
        out.push_back(named_field_from_json(j, 0));
    }
    return out;
}

RealityAssignment infer_reality(const CircleField& f) {
    RealityAssignment r;
    for (int i = 0; i < 4; ++i) {
        FieldName name = static_cast<FieldName>(i);
        const CircleFn& v = f.component(name);
        if (v.is_zero())
            r[name] = Reality::Zero;
        else if (v.is_real())
            r[name] = Reality::Real;
        else if (v.is_imaginary())
            r[name] = Reality::Imaginary;
        else
            r[name] = Reality::Free;
    }
    return r;
}

}  // namespace superkit
