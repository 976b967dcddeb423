#include "ppv/parser.hpp"

#include <json.hpp>

#include <set>

namespace ppv {

namespace {

struct RatAlgebra {
    using Value = Rat;
    RingPtr ring;

    Rat integer(const mpz_class& z) const { return Rat(mpq_class(z)); }
    Rat identifier(const std::string& name, std::size_t pos) const {
        if (!ring->index_of(name)) throw ParseError(pos, "unknown identifier '" + name + "'");
        return Rat::variable(ring, name);
    }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat neg(const Rat& a) const { return -a; }
    Rat div(const Rat& a, const Rat& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError(pos, "division by zero");
        return a / b;
    }
    Rat pow(const Rat& a, long e, std::size_t pos) const {
        if (e < 0 && a.is_zero()) throw ParseError(pos, "division by zero");
        return a.pow(static_cast<int>(e));
    }
};

} // namespace

Rat parse_expr(std::string_view src, const RingPtr& ring) {
    RatAlgebra alg{ring};
    Rat r = detail::Parser<RatAlgebra>(src, alg).parse();
    if (!r.ring()) r = Rat(ring, r.num(), r.den());
    return r;
}

Rat parse_expr(std::string_view src, const std::vector<std::string>& params) {
    return parse_expr(src, make_ring(params));
}

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& msg) { throw SchemaError(SchemaError::Kind::Schema, msg); }

std::string entry_text(const json& e, const std::string& where) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return e.dump();
    schema(where + ": entry must be a string or an integer");
}

} // namespace

SystemSpec parse_system(std::string_view json_text) {
    // Duplicate keys are legal JSON but ambiguous for derivation names, so
    // they are caught during parsing.
    std::vector<std::set<std::string>> seen;
    std::string duplicate;
    int depth = 0;
    auto cb = [&](int d, json::parse_event_t ev, json& parsed) {
        switch (ev) {
        case json::parse_event_t::object_start:
            seen.emplace_back();
            break;
        case json::parse_event_t::object_end:
            seen.pop_back();
            break;
        case json::parse_event_t::key: {
            auto k = parsed.get<std::string>();
            if (!seen.back().insert(k).second && duplicate.empty()) {
                duplicate = k;
                depth = d;
            }
            break;
        }
        default:
            break;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end(), cb);
    } catch (const json::parse_error& e) {
        throw SchemaError(SchemaError::Kind::Json, e.what());
    }
    if (!duplicate.empty()) {
        if (depth == 2)
            throw SchemaError(SchemaError::Kind::DuplicateDerivation, "duplicate derivation '" + duplicate + "'");
        schema("duplicate key '" + duplicate + "'");
    }
    if (!doc.is_object()) schema("top level must be an object");
    for (const auto& [k, v] : doc.items())
        if (k != "params" && k != "var" && k != "n" && k != "matrices") schema("unknown key '" + k + "'");

    SystemSpec spec;
    if (doc.contains("params")) {
        if (!doc["params"].is_array()) schema("params must be an array");
        for (const auto& p : doc["params"]) {
            if (!p.is_string()) schema("params must contain strings");
            spec.params.push_back(p.get<std::string>());
        }
    }
    if (doc.contains("var")) {
        if (!doc["var"].is_string()) schema("var must be a string");
        spec.var = doc["var"].get<std::string>();
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        schema("n must be a positive integer");
    spec.n = static_cast<std::size_t>(doc["n"].get<long long>());
    if (!doc.contains("matrices") || !doc["matrices"].is_object() || doc["matrices"].empty())
        schema("matrices must be a non-empty object");

    RingPtr ring;
    try {
        ring = spec.ring();
    } catch (const std::invalid_argument& e) {
        schema(e.what());
    }

    for (const auto& [name, mat] : doc["matrices"].items()) {
        if (!ring->index_of(name)) schema("derivation '" + name + "' is neither the main variable nor a parameter");
        if (!mat.is_array() || mat.size() != spec.n)
            throw SchemaError(SchemaError::Kind::DimensionMismatch,
                              "matrix '" + name + "' must have " + std::to_string(spec.n) + " rows");
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < spec.n; ++i) {
            const auto& row = mat[i];
            if (!row.is_array() || row.size() != spec.n)
                throw SchemaError(SchemaError::Kind::DimensionMismatch,
                                  "matrix '" + name + "' row " + std::to_string(i) + " must have " +
                                      std::to_string(spec.n) + " entries");
            std::vector<std::string> out;
            for (std::size_t j = 0; j < spec.n; ++j) {
                std::string where = name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
                std::string text = entry_text(row[j], where);
                try {
                    parse_expr(text, ring);
                } catch (const ParseError& e) {
                    throw SchemaError(SchemaError::Kind::Expression, where + ": " + e.what());
                }
                out.push_back(std::move(text));
            }
            rows.push_back(std::move(out));
        }
        spec.matrices.emplace(name, std::move(rows));
    }
    return spec;
}

std::string to_json(const SystemSpec& spec) {
    json doc;
    doc["params"] = spec.params;
    doc["var"] = spec.var;
    doc["n"] = spec.n;
    doc["matrices"] = json::object();
    for (const auto& [name, rows] : spec.matrices) doc["matrices"][name] = rows;
    return doc.dump(2);
}

} // namespace ppv
