#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wreathchar/characters.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/table.hpp"

namespace wreathchar {

using json = nlohmann::json;

/// {"k": k, "coeffs": ["num/den", ...]}, in standard form when integral.
inline json cyclotomic_to_json(const CyclotomicNumber& x) {
    CyclotomicNumber v = x.is_integral() ? x.standard_form() : x;
    json coeffs = json::array();
    for (int i = 0; i < v.order(); ++i) coeffs.push_back(v.coeff(i).get_str());
    return json{{"k", v.order()}, {"coeffs", coeffs}};
}

inline CyclotomicNumber cyclotomic_from_json(const json& j) {
    int k = j.at("k").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& entry : j.at("coeffs")) {
        Rational r(entry.get<std::string>());
        r.canonicalize();
        coeffs.push_back(std::move(r));
    }
    return CyclotomicNumber(k, std::move(coeffs));
}

inline json integer_to_json(const Integer& v) {
    if (v.fits_ulong_p()) return v.get_ui();
    return v.get_str();
}

inline json table_to_json(const CharacterTable& table) {
    json characters = json::array();
    for (const ColoredPartition& cp : table.characters) characters.push_back(to_text(cp));
    json classes = json::array();
    for (const ColoredPartition& cp : table.classes) classes.push_back(to_text(cp));
    json values = json::array();
    for (const auto& row : table.values) {
        json jrow = json::array();
        for (const CyclotomicNumber& v : row) jrow.push_back(to_standard_string(v));
        values.push_back(std::move(jrow));
    }
    json centralizers = json::array();
    for (const Integer& z : table.centralizers) centralizers.push_back(integer_to_json(z));
    return json{{"k", table.k},           {"n", table.n},         {"characters", characters},
                {"classes", classes},     {"values", values},     {"centralizers", centralizers}};
}

/// CSV with quoted partition labels; values use the polynomial rendering.
inline std::string table_to_csv(const CharacterTable& table) {
    std::ostringstream out;
    out << "\"character\\class\"";
    for (const ColoredPartition& cp : table.classes) out << ",\"" << to_text(cp) << "\"";
    out << "\n\"centralizer\"";
    for (const Integer& z : table.centralizers) out << "," << z.get_str();
    out << "\n";
    for (size_t r = 0; r < table.characters.size(); ++r) {
        out << "\"" << to_text(table.characters[r]) << "\"";
        for (const CyclotomicNumber& v : table.values[r]) out << "," << to_standard_string(v);
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Persistent value cache
// ---------------------------------------------------------------------------

inline constexpr const char* kCacheSchema = "wreathchar-cache-v1";

inline void save_cache(const CharacterEngine& engine, const std::string& path) {
    json entries = json::object();
    for (const auto& [id, value] : engine.export_values()) entries[id] = cyclotomic_to_json(value);
    json file{{"schema", kCacheSchema}, {"entries", entries}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cache: cannot write " + path);
    out << file.dump(1) << "\n";
}

/// Missing file is a cold start, not an error.
inline size_t load_cache(CharacterEngine& engine, const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    json file = json::parse(in);
    if (file.value("schema", "") != kCacheSchema) throw std::runtime_error("cache: unrecognized schema in " + path);
    size_t loaded = 0;
    for (const auto& [id, value] : file.at("entries").items()) {
        engine.import_value(id, cyclotomic_from_json(value));
        ++loaded;
    }
    return loaded;
}

} // namespace wreathchar
