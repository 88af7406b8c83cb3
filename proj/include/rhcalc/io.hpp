#pragma once

// JSON file formats.
//
//   complex  {"vertices": [label…], "facets": [[label…]…], "expected_betti": [n…]?}
//   map      {"source": path, "target": path, "assignment": {label: label}}
//   system   {"stages": [{"deg": dim…}…], "transitions": [{"deg": [["a/b"…]…]…}…]}
//        or  {"complexes": [path…], "maps": [path…]}
//
// Relative paths inside map and tower files resolve against the directory of
// the file naming them. Output JSON is ordered: degrees ascending, keys in a
// fixed order, so rendering is canonical.

#include <rhcalc/errors.hpp>
#include <rhcalc/exact_linalg.hpp>
#include <rhcalc/gauge.hpp>
#include <rhcalc/graded.hpp>
#include <rhcalc/limits.hpp>
#include <rhcalc/simplicial.hpp>

#include <nlohmann/json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rhcalc::io {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

inline Json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

inline std::vector<std::string> string_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw InputError(where + ": expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline int parse_degree(const std::string& key, const std::string& where) {
    int d = 0;
    const char* end = key.data() + key.size();
    auto [p, ec] = std::from_chars(key.data(), end, d);
    if (ec != std::errc() || p != end) throw InputError(where + ": degree key \"" + key + "\" is not an integer");
    return d;
}

inline fs::path resolve(const fs::path& base_file, const std::string& rel) {
    fs::path p(rel);
    return p.is_absolute() ? p : base_file.parent_path() / p;
}

}  // namespace detail

struct ComplexFile {
    fs::path path;
    std::shared_ptr<const SimplicialComplex> complex;
    std::optional<std::vector<std::uint64_t>> expected_betti;
};

inline SimplicialComplex complex_from_json(const Json& j, const std::string& where = "complex") {
    const auto vertices = detail::string_list(detail::field(j, "vertices", where), where + " field \"vertices\"");
    const auto& facets_json = detail::field(j, "facets", where);
    if (!facets_json.is_array()) throw InputError(where + " field \"facets\": expected an array of arrays");
    std::vector<std::vector<std::string>> facets;
    const std::set<std::string> declared(vertices.begin(), vertices.end());
    if (declared.size() != vertices.size()) throw InputError(where + " field \"vertices\": duplicate label");
    for (std::size_t i = 0; i < facets_json.size(); ++i) {
        const std::string fw = where + " field \"facets\"[" + std::to_string(i) + "]";
        auto facet = detail::string_list(facets_json[i], fw);
        for (const auto& v : facet)
            if (declared.count(v) == 0) throw InputError(fw + ": vertex \"" + v + "\" is not listed in \"vertices\"");
        facets.push_back(std::move(facet));
    }
    try {
        return SimplicialComplex::build(facets, vertices);
    } catch (const InputError& e) {
        throw InputError(where + " field \"facets\": " + e.what());
    }
}

inline ComplexFile load_complex(const fs::path& path) {
    const auto j = read_json(path);
    ComplexFile f{path, std::make_shared<const SimplicialComplex>(complex_from_json(j, path.string())), std::nullopt};
    if (auto it = j.find("expected_betti"); it != j.end()) {
        if (!it->is_array()) throw InputError(path.string() + " field \"expected_betti\": expected an array");
        std::vector<std::uint64_t> b;
        for (const auto& e : *it) {
            if (!e.is_number_unsigned()) throw InputError(path.string() + " field \"expected_betti\": expected naturals");
            b.push_back(e.get<std::uint64_t>());
        }
        f.expected_betti = std::move(b);
    }
    return f;
}

inline SimplicialMap load_map(const fs::path& path) {
    const auto j = read_json(path);
    const std::string where = path.string();
    const auto& src = detail::field(j, "source", where);
    const auto& tgt = detail::field(j, "target", where);
    const auto& assign = detail::field(j, "assignment", where);
    if (!src.is_string() || !tgt.is_string()) throw InputError(where + ": \"source\" and \"target\" must be paths");
    if (!assign.is_object()) throw InputError(where + " field \"assignment\": expected an object");
    std::map<std::string, std::string> a;
    for (const auto& [k, v] : assign.items()) {
        if (!v.is_string()) throw InputError(where + " field \"assignment\": value for \"" + k + "\" must be a string");
        a[k] = v.get<std::string>();
    }
    auto source = load_complex(detail::resolve(path, src.get<std::string>())).complex;
    auto target = load_complex(detail::resolve(path, tgt.get<std::string>())).complex;
    try {
        return SimplicialMap(std::move(source), std::move(target), a);
    } catch (const InputError& e) {
        throw InputError(where + " field \"assignment\": " + e.what());
    }
}

inline RationalMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError(where + ": expected an array of rows");
        std::vector<Rational> r;
        for (const auto& e : row) {
            if (e.is_string()) r.push_back(parse_rational(e.get<std::string>()));
            else if (e.is_number_integer()) r.push_back(Rational(e.get<std::int64_t>()));
            else throw InputError(where + ": entries must be rational strings \"a/b\" or integers");
        }
        rows.push_back(std::move(r));
    }
    try {
        return RationalMatrix::from_rows(rows);
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline GradedDims graded_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object of degree → dimension");
    GradedDims g;
    for (const auto& [k, v] : j.items()) {
        const int d = detail::parse_degree(k, where);
        if (v.is_number_unsigned()) {
            g.set(d, v.get<std::uint64_t>());
        } else if (v.is_string() && v.get<std::string>().rfind(">=", 0) == 0) {
            const auto s = v.get<std::string>().substr(2);
            std::uint64_t n = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
            if (ec != std::errc() || p != s.data() + s.size()) throw InputError(where + ": bad dimension \"" + v.get<std::string>() + "\"");
            g.set(d, ExtDim::unbounded(n));
        } else {
            throw InputError(where + ": dimension for degree " + k + " must be a natural number");
        }
    }
    return g;
}

inline Json to_json(ExtDim d) {
    if (d.is_finite()) return d.value();
    return ">=" + std::to_string(d.lower_bound());
}

inline Json to_json(const GradedDims& g) {
    Json j = Json::object();
    for (const auto& [d, v] : g.entries()) j[std::to_string(d)] = to_json(v);
    return j;
}

inline Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& q : m.row(i)) row.push_back(to_string(q));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExtDim extdim_from_json(const Json& j, const std::string& where) {
    GradedDims tmp = graded_from_json(Json{{"0", j}}, where);
    return tmp[0];
}

/// Matrix-form or tower-form system file.
inline DirectSystem load_system(const fs::path& path) {
    const auto j = read_json(path);
    const std::string where = path.string();
    if (j.is_object() && j.contains("complexes")) {
        const auto complex_paths = detail::string_list(detail::field(j, "complexes", where), where + " field \"complexes\"");
        const auto map_paths = detail::string_list(detail::field(j, "maps", where), where + " field \"maps\"");
        std::vector<std::shared_ptr<const SimplicialComplex>> complexes;
        for (const auto& p : complex_paths) complexes.push_back(load_complex(detail::resolve(path, p)).complex);
        std::vector<SimplicialMap> maps;
        for (const auto& p : map_paths) maps.push_back(load_map(detail::resolve(path, p)));
        try {
            return system_from_maps(complexes, maps);
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    const auto& stages_json = detail::field(j, "stages", where);
    const auto& trans_json = detail::field(j, "transitions", where);
    if (!stages_json.is_array() || !trans_json.is_array())
        throw InputError(where + ": \"stages\" and \"transitions\" must be arrays");
    std::vector<GradedDims> stages;
    for (std::size_t i = 0; i < stages_json.size(); ++i)
        stages.push_back(graded_from_json(stages_json[i], where + " field \"stages\"[" + std::to_string(i) + "]"));
    std::vector<DirectSystem::Transition> transitions;
    for (std::size_t i = 0; i < trans_json.size(); ++i) {
        const std::string tw = where + " field \"transitions\"[" + std::to_string(i) + "]";
        if (!trans_json[i].is_object()) throw InputError(tw + ": expected an object of degree → matrix");
        DirectSystem::Transition t;
        for (const auto& [k, v] : trans_json[i].items())
            t.emplace(detail::parse_degree(k, tw), matrix_from_json(v, tw + "[\"" + k + "\"]"));
        transitions.push_back(std::move(t));
    }
    try {
        return DirectSystem(std::move(stages), std::move(transitions));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline Json to_json(const HomotopyReport& r, bool with_notes = true) {
    Json j = Json::object();
    j["identity_component"] = to_json(r.identity_component);
    j["degree_zero"] = to_json(r.degree_zero);
    j["degree_zero_label"] = r.degree_zero_label;
    Json contributions = Json::array();
    for (const auto& c : r.contributions)
        contributions.push_back(Json::array({c.generator_degree, c.cohomology_degree, to_json(c.multiplicity)}));
    j["contributions"] = std::move(contributions);
    j["samelson_bracket"] = "zero";
    j["h_type"] = r.h_type;
    Json notes = Json::array();
    if (with_notes)
        for (const auto& n : r.notes) notes.push_back(n);
    j["notes"] = std::move(notes);
    return j;
}

inline HomotopyReport report_from_json(const Json& j) {
    const std::string where = "report";
    HomotopyReport r;
    r.identity_component = graded_from_json(detail::field(j, "identity_component", where), where + " identity_component");
    r.degree_zero = extdim_from_json(detail::field(j, "degree_zero", where), where + " degree_zero");
    r.degree_zero_label = detail::field(j, "degree_zero_label", where).get<std::string>();
    for (const auto& c : detail::field(j, "contributions", where)) {
        if (!c.is_array() || c.size() != 3) throw InputError(where + ": contributions must be [d, n, mult] triples");
        r.contributions.push_back({c[0].get<int>(), c[1].get<int>(), extdim_from_json(c[2], where + " contributions")});
    }
    if (detail::field(j, "samelson_bracket", where) != "zero")
        throw InputError(where + ": samelson_bracket must be \"zero\"");
    r.h_type = detail::field(j, "h_type", where).get<std::string>();
    r.notes.clear();
    for (const auto& n : detail::field(j, "notes", where)) r.notes.push_back(n.get<std::string>());
    return r;
}

}  // namespace rhcalc::io
