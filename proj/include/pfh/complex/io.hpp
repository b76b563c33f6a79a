#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfh/complex/twisted_complex.hpp"
#include "pfh/errors.hpp"
#include "pfh/novikov/perturbation.hpp"

namespace pfh {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

inline std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

} // namespace detail

inline Json novikov_to_json(const NovikovPolynomial& p) {
    Json a = Json::array();
    for (const auto& e : p.terms()) a.push_back(e.str());
    return a;
}

inline NovikovPolynomial novikov_from_json(const Json& j) {
    std::vector<Exponent> t;
    for (const auto& e : detail::as_array(j, "polynomial")) t.push_back(Exponent::parse(detail::as_string(e, "exponent")));
    return NovikovPolynomial::from_terms(std::move(t));
}

/// Builds a complex from the version-1 document; repeated disks cancel in pairs.
inline TwistedComplex complex_from_json(const Json& j) {
    using namespace detail;
    if (as_int(field(j, "version"), "version") != 1) throw ParseError("unsupported complex version");
    const auto b = as_int(field(j, "b"), "b");
    if (b < 0) throw ParseError("b must be nonnegative");
    TwistedComplex c(static_cast<std::size_t>(b));
    for (const auto& g : as_array(field(j, "generators"), "generators")) {
        const auto parity = as_int(field(g, "parity"), "parity");
        c.add_generator(as_string(field(g, "name"), "name"), static_cast<int>(parity),
                        as_string(field(g, "spinc"), "spinc"));
    }
    for (const auto& d : as_array(field(j, "disks"), "disks")) {
        std::vector<std::int64_t> exp;
        for (const auto& e : as_array(field(d, "exp"), "exp")) exp.push_back(as_int(e, "exp entry"));
        const auto nz = as_int(field(d, "nz"), "nz");
        if (nz < 0) throw ValidationError("negative nz in disk " + field(d, "from").dump() + "->" + field(d, "to").dump());
        c.toggle_disk(as_string(field(d, "from"), "from"), as_string(field(d, "to"), "to"),
                      DiskClass{MultiExponent(std::move(exp)), static_cast<std::size_t>(nz)});
    }
    return c;
}

inline Json complex_to_json(const TwistedComplex& c) {
    Json j;
    j["version"] = 1;
    j["b"] = c.b();
    j["generators"] = Json::array();
    for (const auto& g : c.generators()) {
        Json x;
        x["name"] = g.name;
        x["parity"] = g.parity;
        x["spinc"] = g.spinc;
        j["generators"].push_back(std::move(x));
    }
    j["disks"] = Json::array();
    for (const auto& [k, v] : c.entries())
        for (const auto& d : v) {
            Json x;
            x["from"] = c.generator(k.first).name;
            x["to"] = c.generator(k.second).name;
            x["exp"] = d.exp.coords();
            x["nz"] = d.nz;
            j["disks"].push_back(std::move(x));
        }
    return j;
}

inline std::string complex_to_string(const TwistedComplex& c) { return complex_to_json(c).dump(2) + "\n"; }

inline TwistedComplex load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

/// {"weights": ["p/q", ...]}; all-zero weights give the trivial class.
inline PerturbationClass perturbation_from_json(const Json& j) {
    std::vector<Exponent> w;
    for (const auto& x : detail::as_array(detail::field(j, "weights"), "weights"))
        w.push_back(Exponent::parse(detail::as_string(x, "weight")));
    return PerturbationClass::custom(std::move(w));
}

inline Json perturbation_to_json(const PerturbationClass& eta) {
    Json j;
    j["weights"] = Json::array();
    for (const auto& w : eta.weights()) j["weights"].push_back(w.str());
    return j;
}

} // namespace pfh
