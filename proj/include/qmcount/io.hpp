#pragma once

// JSON problem files:
//   {"source_dim": int|[int], "target_dim": int, "degree": int|[int],
//    "cycles": [{"source_dim": int|[int], "target_codim": int}],
//    "km": optional int, "quasi_stable": optional bool,
//    "strata": optional [stratum], "expected": optional object}
// stratum:
//   {"label": str, "dims": [int], "restrict_H": monomial-spec,
//    "restrict_h": {"<cycle index, 1-based>": monomial-spec},
//    "chern_Z": optional class-spec, "chern_cycles": optional class-spec}
// monomial-spec: {"factor_exponents": [int], "coeff": int} or "zero";
// class-spec: array of monomial-specs (their sum).

#include "qmcount/counting.hpp"
#include "qmcount/excess.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace qmc {

using nlohmann::json;

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct Problem {
    std::string name;
    CountingData data;
    std::optional<mpz_class> km;
    bool quasi_stable = true;
    std::vector<Stratum> strata;
    json expected;  // fixture oracle block, opaque to the engine
};

namespace detail {

inline std::vector<long> int_or_list(const json& v, const char* field) {
    if (v.is_number_integer()) return {v.get<long>()};
    if (v.is_array()) {
        std::vector<long> r;
        for (const auto& e : v) {
            if (!e.is_number_integer()) throw parse_error(std::string(field) + ": expected integers");
            r.push_back(e.get<long>());
        }
        return r;
    }
    throw parse_error(std::string(field) + ": expected an integer or list of integers");
}

inline Class parse_monomial(const json& v, const ring_ptr& ring) {
    if (v.is_string() && v.get<std::string>() == "zero") return Class(ring);
    if (!v.is_object() || !v.contains("factor_exponents") || !v.contains("coeff"))
        throw parse_error("monomial spec must be \"zero\" or {factor_exponents, coeff}");
    std::vector<long> exps = int_or_list(v.at("factor_exponents"), "factor_exponents");
    if (exps.size() != ring->size())
        throw parse_error("factor_exponents length does not match the stratum factors");
    std::vector<int> e(exps.begin(), exps.end());
    return Class::monomial(ring, e, mpz_class(v.at("coeff").get<long>()));
}

inline Class parse_class(const json& v, const ring_ptr& ring) {
    if (!v.is_array()) throw parse_error("class spec must be an array of monomial specs");
    Class r(ring);
    for (const auto& m : v) r = r + parse_monomial(m, ring);
    return r;
}

}  // namespace detail

inline Stratum parse_stratum(const json& v, const CountingData& D) {
    if (!v.contains("label")) throw parse_error("stratum missing label");
    std::string label = v.at("label").get<std::string>();
    std::vector<long> dims;
    if (v.contains("dims")) dims = detail::int_or_list(v.at("dims"), "dims");
    Stratum Z = dims.empty() ? Stratum::point(label) : Stratum::product(label, dims);

    if (v.contains("restrict_H")) Z.map_H(detail::parse_monomial(v.at("restrict_H"), Z.ring));
    if (v.contains("restrict_h")) {
        for (const auto& [key, spec] : v.at("restrict_h").items()) {
            std::size_t cycle = std::stoul(key);
            if (cycle < 1 || cycle > D.cycles.size())
                throw parse_error("restrict_h: cycle index " + key + " out of range");
            Z.map_h(cycle - 1, detail::parse_monomial(spec, Z.ring), 0, D.ks.size());
        }
    }
    if (v.contains("chern_Z")) Z.with_chern_Z(detail::parse_class(v.at("chern_Z"), Z.ring));
    if (v.contains("chern_cycles"))
        Z.with_chern_cycles(detail::parse_class(v.at("chern_cycles"), Z.ring));
    return Z;
}

inline Problem parse_problem(const json& v, std::string name = "") {
    Problem P;
    P.name = std::move(name);
    for (const char* field : {"source_dim", "target_dim", "degree", "cycles"})
        if (!v.contains(field)) throw parse_error(std::string("problem missing field ") + field);

    P.data.ks = detail::int_or_list(v.at("source_dim"), "source_dim");
    P.data.n = v.at("target_dim").get<long>();
    P.data.ds = detail::int_or_list(v.at("degree"), "degree");
    for (const auto& c : v.at("cycles")) {
        std::vector<long> dims = detail::int_or_list(c.at("source_dim"), "cycle source_dim");
        if (dims.size() == 1 && P.data.ks.size() > 1)
            dims.assign(P.data.ks.size(), dims[0]);
        P.data.cycles.emplace_back(dims, c.at("target_codim").get<long>());
    }
    P.data.validate();

    if (v.contains("km")) P.km = mpz_class(v.at("km").get<long>());
    if (v.contains("quasi_stable")) P.quasi_stable = v.at("quasi_stable").get<bool>();
    if (v.contains("strata"))
        for (const auto& s : v.at("strata")) P.strata.push_back(parse_stratum(s, P.data));
    if (v.contains("expected")) P.expected = v.at("expected");
    return P;
}

inline Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json v;
    try {
        in >> v;
    } catch (const json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.rfind(".json"); dot != std::string::npos) name = name.substr(0, dot);
    try {
        return parse_problem(v, name);
    } catch (const json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
}

inline json ledger_to_json(const Ledger& L) {
    json j;
    j["qm"] = L.qm.get_str();
    if (L.km) j["km"] = L.km->get_str();
    j["quasi_stable"] = L.quasi_stable;
    j["naive_sum"] = L.naive_sum.get_str();
    if (L.residual) j["residual"] = L.residual->get_str();
    json contrib = json::array();
    for (const auto& [label, c] : L.contributions)
        contrib.push_back({{"label", label}, {"contribution", c.get_str()}});
    j["strata"] = contrib;
    if (L.quasi_stable) j["pqm"] = L.naive_sum.get_str();
    return j;
}

}  // namespace qmc
