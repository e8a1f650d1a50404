#pragma once

// JSON serialization for Jacobi q-expansions (and lattices): the golden-file
// and CLI output format.

#include <string>

#include <json.hpp>

#include "jacobi.hpp"

namespace latjac {

using nlohmann::json;

inline json gram_to_json(const IntMat& g) {
    json rows = json::array();
    for (const auto& row : g) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return rows;
}

inline IntMat gram_from_json(const json& j) {
    IntMat g;
    for (const auto& row : j) {
        IntVec r;
        for (const auto& x : row) r.push_back(Int(x.get<std::string>()));
        g.push_back(r);
    }
    return g;
}

// {index gram, 2k, h, denom d, prec24, entries [[24n, r-int-vector, num, den]]}.
inline json jacobi_to_json(const JacobiQExp& phi) {
    json j;
    j["gram"] = gram_to_json(phi.index.gram);
    Rat twok = phi.k * 2;
    j["twok"] = static_cast<long>(twok.get_num().get_si());
    if (phi.has_h)
        j["h"] = phi.h;
    else
        j["h"] = nullptr;
    j["denom"] = phi.denom;
    j["prec24"] = phi.prec24;
    {
        Rat d24 = phi.D_min * 24;
        j["dmin24"] = static_cast<long>(floor_rat(d24).get_si());
    }
    json entries = json::array();
    for (const auto& [key, v] : phi.c) {
        json e = json::array();
        e.push_back(key.first);
        json rv = json::array();
        for (long x : key.second) rv.push_back(x);
        e.push_back(rv);
        e.push_back(v.get_num().get_str());
        e.push_back(v.get_den().get_str());
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

inline JacobiQExp jacobi_from_json(const json& j) {
    JacobiQExp phi;
    phi.index = make_lattice(gram_from_json(j.at("gram")));
    phi.k = ratio(Int(j.at("twok").get<long>()), Int(2));
    if (!j.at("h").is_null()) {
        phi.h = j.at("h").get<long>();
        phi.has_h = true;
    }
    phi.denom = j.at("denom").get<long>();
    phi.prec24 = j.at("prec24").get<long>();
    phi.D_min = ratio(Int(j.at("dmin24").get<long>()), Int(24));
    for (const auto& e : j.at("entries")) {
        long n24 = e.at(0).get<long>();
        std::vector<long> dr;
        for (const auto& x : e.at(1)) dr.push_back(x.get<long>());
        Rat v = ratio(Int(e.at(2).get<std::string>()),
                      Int(e.at(3).get<std::string>()));
        phi.c[{n24, dr}] = v;
    }
    return phi;
}

}  // namespace latjac
