#include "mhx/instance_io.hpp"

#include "mhx/error.hpp"
#include "mhx/nilpotent.hpp"

namespace mhx {

using nlohmann::json;

json to_json(const Vec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(to_string(s));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

json to_json(const Subspace& s) {
    json out = json::array();
    for (const Vec& v : s.basis()) out.push_back(to_json(v));
    return out;
}

json to_json(const IncreasingFiltration& w) {
    json out = json::object();
    for (const auto& [k, space] : w.jumps()) out[std::to_string(k)] = to_json(space);
    return out;
}

json to_json(const DecreasingFiltration& f) {
    json out = json::object();
    for (const auto& [p, space] : f.jumps()) out[std::to_string(p)] = to_json(space);
    return out;
}

json to_json(const Grading& y) {
    json out = json::object();
    for (const auto& [k, space] : y.eigenspaces()) out[std::to_string(k)] = to_json(space);
    return out;
}

namespace {

int key_to_int(const std::string& key, const std::string& path) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw InputError("non-integer index '" + key + "' at " + path);
    }
}

std::map<int, Subspace> steps_from_json(const json& j, std::size_t dim, const std::string& path) {
    if (!j.is_object()) throw InputError(path + " must be an object of index -> vector list");
    std::map<int, Subspace> steps;
    for (const auto& [key, value] : j.items()) {
        const std::string here = path + "." + key;
        if (!value.is_array()) throw InputError(here + " must be a list of vectors");
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < value.size(); ++i)
            gens.push_back(vec_from_json(value[i], dim, here + "[" + std::to_string(i) + "]"));
        steps.emplace(key_to_int(key, path), Subspace::span(gens, dim));
    }
    return steps;
}

}  // namespace

Vec vec_from_json(const json& j, std::size_t dim, const std::string& path) {
    if (!j.is_array() || j.size() != dim)
        throw InputError(path + " must be a vector of length " + std::to_string(dim));
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!j[i].is_string())
            throw InputError(path + "[" + std::to_string(i) + "] must be a scalar string");
        try {
            v[i] = parse_scalar(j[i].get<std::string>());
        } catch (const InputError& e) {
            throw InputError(std::string(e.what()) + " at " + path + "[" + std::to_string(i) +
                             "]");
        }
    }
    return v;
}

Matrix matrix_from_json(const json& j, std::size_t dim, const std::string& path) {
    if (!j.is_array() || j.size() != dim)
        throw InputError(path + " must be a " + std::to_string(dim) + "-row matrix");
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const Vec row = vec_from_json(j[i], dim, path + "[" + std::to_string(i) + "]");
        for (std::size_t c = 0; c < dim; ++c) m.at(i, c) = row[c];
    }
    return m;
}

InstanceDocument parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance_json(j);
}

InstanceDocument parse_instance_json(const json& j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    InstanceDocument doc;
    if (j.contains("meta")) {
        const auto& meta = j["meta"];
        if (meta.contains("name")) doc.name = meta["name"].get<std::string>();
        if (meta.contains("coordinate")) doc.coordinate = meta["coordinate"].get<std::string>();
    }
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
        throw InputError("missing or invalid field at dimension");
    doc.dimension = j["dimension"].get<std::size_t>();
    if (doc.dimension == 0) throw InputError("dimension must be positive");

    if (j.contains("weight_filtration")) {
        try {
            doc.weight = IncreasingFiltration(
                doc.dimension, steps_from_json(j["weight_filtration"], doc.dimension,
                                               "weight_filtration"));
        } catch (const InputError& e) {
            throw InputError(std::string(e.what()) + " at weight_filtration");
        }
    }
    if (j.contains("hodge_filtration")) {
        try {
            doc.hodge = DecreasingFiltration(
                doc.dimension,
                steps_from_json(j["hodge_filtration"], doc.dimension, "hodge_filtration"));
        } catch (const InputError& e) {
            throw InputError(std::string(e.what()) + " at hodge_filtration");
        }
    }
    if (j.contains("N")) {
        doc.n = matrix_from_json(j["N"], doc.dimension, "N");
        if (!doc.n->is_real()) throw InputError("N must be real at N");
        if (!is_nilpotent(*doc.n)) throw InputError("N must be nilpotent at N");
    }
    if (j.contains("gamma")) {
        doc.has_gamma = true;
        const auto& g = j["gamma"];
        if (!g.is_object()) throw InputError("gamma must be an object of index -> matrix");
        for (const auto& [key, value] : g.items()) {
            const int idx = key_to_int(key, "gamma");
            if (idx < 1) throw InputError("gamma indices start at 1, got " + key);
            Matrix coeff = matrix_from_json(value, doc.dimension, "gamma." + key);
            if (doc.weight && !lowers_filtration(coeff, *doc.weight, 1))
                throw InputError("gamma." + key + " is not in Lie_{-1}");
            doc.gamma.emplace(idx, std::move(coeff));
        }
    }
    if (j.contains("alpha")) doc.alpha = matrix_from_json(j["alpha"], doc.dimension, "alpha");
    return doc;
}

json emit_instance(const InstanceDocument& doc) {
    json j;
    json meta = json::object();
    meta["name"] = doc.name;
    if (!doc.coordinate.empty()) meta["coordinate"] = doc.coordinate;
    j["meta"] = meta;
    j["dimension"] = doc.dimension;
    if (doc.weight) j["weight_filtration"] = to_json(*doc.weight);
    if (doc.hodge) j["hodge_filtration"] = to_json(*doc.hodge);
    if (doc.n) j["N"] = to_json(*doc.n);
    if (doc.has_gamma) {
        json g = json::object();
        for (const auto& [idx, coeff] : doc.gamma) g[std::to_string(idx)] = to_json(coeff);
        j["gamma"] = g;
    }
    if (doc.alpha) j["alpha"] = to_json(*doc.alpha);
    return j;
}

}  // namespace mhx
