#include "mmt/io.hpp"

#include "mmt/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace mmt {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

CycScalar parse_scalar(const json& j, const FieldPtr& field) {
    if (j.is_string()) return field->rational(parse_rational(j.get<std::string>()));
    if (j.is_number_integer())
        return field->integer(j.get<long>());
    if (j.is_array()) {
        if (j.size() != field->degree())
            throw ParseError("cyclotomic scalar needs " + std::to_string(field->degree()) +
                             " coefficients for order " + std::to_string(field->order()) +
                             ", got " + std::to_string(j.size()));
        std::vector<Rational> coeffs;
        coeffs.reserve(j.size());
        for (const auto& c : j) {
            if (c.is_string()) coeffs.push_back(parse_rational(c.get<std::string>()));
            else if (c.is_number_integer()) coeffs.push_back(Rational(c.get<long>()));
            else throw ParseError("cyclotomic coefficient must be a rational string");
        }
        return field->from_coeffs(std::move(coeffs));
    }
    throw ParseError("scalar must be a rational string or a coefficient list");
}

json scalar_to_json(const CycScalar& s) {
    if (s.is_rational()) return rational_to_string(s.rational_value());
    json arr = json::array();
    for (const auto& c : s.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

ExactMatrix parse_matrix(const json& j, const FieldPtr& field, std::size_t rows,
                         std::size_t cols, const std::string& name) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError("matrix '" + name + "' must have " + std::to_string(rows) + " rows");
    ExactMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix '" + name + "' row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m.set(i, k, parse_scalar(row[k], field));
    }
    return m;
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Shape parse_shape(const json& j) {
    if (!j.contains("shape") || !j["shape"].is_array() || j["shape"].size() != 3)
        throw ParseError("missing or malformed \"shape\" (expected [m, n, p])");
    const json& s = j["shape"];
    for (const auto& v : s)
        if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
            throw ParseError("shape entries must be positive integers");
    return Shape(s[0].get<std::size_t>(), s[1].get<std::size_t>(), s[2].get<std::size_t>());
}

FieldPtr field_of(const json& j, unsigned default_order) {
    unsigned order = default_order;
    if (j.contains("cyclotomic_order")) {
        const json& n = j["cyclotomic_order"];
        if (!n.is_number_unsigned() || n.get<unsigned>() == 0)
            throw ParseError("\"cyclotomic_order\" must be a positive integer");
        order = n.get<unsigned>();
    }
    return CyclotomicField::get(order);
}

IsotropyElement parse_generator_object(const json& j, unsigned default_order) {
    if (!j.is_object()) throw ParseError("generator must be a JSON object");
    FieldPtr field = field_of(j, default_order);
    for (const char* key : {"q", "a", "b", "c"})
        if (!j.contains(key))
            throw ParseError(std::string("generator is missing \"") + key + "\"");
    FactorSymmetry q = parse_symmetry(j["q"].get<std::string>());
    auto square = [&](const char* key) {
        const json& mj = j[key];
        if (!mj.is_array() || mj.empty())
            throw ParseError(std::string("matrix '") + key + "' must be a nonempty array");
        std::size_t n = mj.size();
        return parse_matrix(mj, field, n, n, key);
    };
    try {
        return IsotropyElement(q, square("a"), square("b"), square("c"));
    } catch (const SingularMatrixError&) {
        throw ParseError("generator matrices must be invertible");
    }
}

} // namespace

Decomposition parse_decomposition(const std::string& json_text, unsigned default_order) {
    json j = parse_json(json_text);
    if (!j.is_object()) throw ParseError("decomposition file must be a JSON object");
    Shape shape = parse_shape(j);
    FieldPtr field = field_of(j, default_order);

    std::vector<RankOneTerm> terms;
    if (j.contains("terms")) {
        const json& arr = j["terms"];
        if (!arr.is_array()) throw ParseError("\"terms\" must be an array");
        for (std::size_t t = 0; t < arr.size(); ++t) {
            const json& term = arr[t];
            for (const char* key : {"x", "y", "z"})
                if (!term.contains(key))
                    throw ParseError("term " + std::to_string(t) + " is missing \"" + key + "\"");
            terms.emplace_back(parse_matrix(term["x"], field, shape.m, shape.n, "x"),
                               parse_matrix(term["y"], field, shape.n, shape.p, "y"),
                               parse_matrix(term["z"], field, shape.p, shape.m, "z"));
        }
    } else if (j.contains("u") && j.contains("v") && j.contains("w")) {
        // triple-matrix layout: columns flatten the factors
        const json& uj = j["u"];
        if (!uj.is_array() || uj.empty() || !uj[0].is_array())
            throw ParseError("\"u\" must be a matrix");
        std::size_t l = uj[0].size();
        ExactMatrix u = parse_matrix(uj, field, shape.dim_x(), l, "u");
        ExactMatrix v = parse_matrix(j["v"], field, shape.dim_y(), l, "v");
        ExactMatrix w = parse_matrix(j["w"], field, shape.dim_z(), l, "w");
        for (std::size_t k = 0; k < l; ++k) {
            ExactMatrix x(field, shape.m, shape.n);
            ExactMatrix y(field, shape.n, shape.p);
            ExactMatrix z(field, shape.p, shape.m);
            for (std::size_t r = 0; r < shape.dim_x(); ++r)
                x.set(r / shape.n, r % shape.n, u.at(r, k));
            for (std::size_t r = 0; r < shape.dim_y(); ++r)
                y.set(r / shape.p, r % shape.p, v.at(r, k));
            for (std::size_t r = 0; r < shape.dim_z(); ++r)
                z.set(r / shape.m, r % shape.m, w.at(r, k));
            terms.emplace_back(std::move(x), std::move(y), std::move(z));
        }
    } else {
        throw ParseError("decomposition needs \"terms\" or the \"u\"/\"v\"/\"w\" layout");
    }
    try {
        return Decomposition(field, shape, std::move(terms));
    } catch (const ShapeError& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_decomposition(const Decomposition& d) {
    json j;
    j["shape"] = {d.shape().m, d.shape().n, d.shape().p};
    j["cyclotomic_order"] = d.field()->order();
    json terms = json::array();
    for (const auto& t : d.terms()) {
        json term;
        term["x"] = matrix_to_json(t.x());
        term["y"] = matrix_to_json(t.y());
        term["z"] = matrix_to_json(t.z());
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump(2) + "\n";
}

IsotropyElement parse_generator(const std::string& json_text, unsigned default_order) {
    return parse_generator_object(parse_json(json_text), default_order);
}

std::vector<IsotropyElement> parse_generators(const std::string& json_text,
                                              unsigned default_order) {
    json j = parse_json(json_text);
    std::vector<IsotropyElement> out;
    if (j.is_object() && j.contains("generators")) {
        unsigned order = default_order;
        if (j.contains("cyclotomic_order")) order = j["cyclotomic_order"].get<unsigned>();
        for (const auto& g : j["generators"]) out.push_back(parse_generator_object(g, order));
    } else if (j.is_array()) {
        for (const auto& g : j) out.push_back(parse_generator_object(g, default_order));
    } else {
        out.push_back(parse_generator_object(j, default_order));
    }
    if (out.empty()) throw ParseError("no generators in file");
    return out;
}

std::string serialize_generator(const IsotropyElement& g) {
    json j;
    j["q"] = symmetry_tag(g.q());
    j["cyclotomic_order"] = g.field()->order();
    j["a"] = matrix_to_json(g.a());
    j["b"] = matrix_to_json(g.b());
    j["c"] = matrix_to_json(g.c());
    return j.dump(2) + "\n";
}

std::string scalar_text(const CycScalar& s) {
    return s.to_string();
}

} // namespace mmt
