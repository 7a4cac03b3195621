#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "satake/coweight.hpp"
#include "satake/ic_stalks.hpp"
#include "satake/qpolynomial.hpp"
#include "satake/spectral.hpp"

namespace satake {

/// JSON is the canonical output format; CSV and LaTeX are lossy
/// projections for human consumption. ordered_json keeps key order
/// stable so envelopes are byte-reproducible.
using json = nlohmann::ordered_json;

inline json to_json(const Coweight& c) {
    json arr = json::array();
    for (long p : c.parts) arr.push_back(p);
    return arr;
}

inline Coweight coweight_from_json(const json& arr) {
    Coweight c;
    for (const auto& v : arr) c.parts.push_back(v.get<long>());
    return c;
}

inline json to_json(const QPolynomial& p) { return p.str(); }

inline json to_json(const StalkRow& row) {
    json j;
    j["lam"] = to_json(row.lam);
    j["mu"] = to_json(row.mu);
    j["poly"] = row.poly.str();
    json degrees = json::array();
    for (const auto& [deg, dim] : row.by_degree)
        degrees.push_back(json::array({deg, dim.get_str()}));
    j["stalk_dims_by_degree"] = degrees;
    j["orbit_real_dimension"] = row.orbit_dim;
    return j;
}

inline json to_json(const StalkTable& table) {
    json j;
    j["flavor"] = flavor_name(table.flavor);
    j["n"] = table.n;
    json rows = json::array();
    for (const auto& r : table.rows) rows.push_back(to_json(r));
    j["rows"] = rows;
    return j;
}

inline std::string stalk_table_csv(const StalkTable& table) {
    std::ostringstream out;
    out << "lam,mu,poly,orbit_real_dimension,degrees\n";
    for (const auto& r : table.rows) {
        out << "\"" << r.lam.str() << "\",\"" << r.mu.str() << "\",\"" << r.poly.str() << "\","
            << r.orbit_dim << ",\"";
        bool first = true;
        for (const auto& [deg, dim] : r.by_degree) {
            if (!first) out << " ";
            out << deg << ":" << dim.get_str();
            first = false;
        }
        out << "\"\n";
    }
    return out.str();
}

inline std::string stalk_table_latex(const StalkTable& table) {
    std::ostringstream out;
    out << "\\begin{tabular}{llll}\n";
    out << "$\\lambda$ & $\\mu$ & stalk polynomial & orbit dim \\\\\n\\hline\n";
    for (const auto& r : table.rows) {
        out << "$" << r.lam.str() << "$ & $" << r.mu.str() << "$ & $" << r.poly.str() << "$ & $"
            << r.orbit_dim << "$ \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

/// BigradedSeries as a JSON list of [i, j, dim] triples.
inline json to_json(const BigradedSeries& s) {
    json arr = json::array();
    for (const auto& [key, dim] : s.entries)
        arr.push_back(json::array({key.first, key.second, dim.get_str()}));
    return arr;
}

inline BigradedSeries bigraded_from_json(const json& arr) {
    BigradedSeries s;
    for (const auto& triple : arr) {
        Int dim(triple.at(2).is_string() ? Int(triple.at(2).get<std::string>())
                                         : Int(triple.at(2).get<long>()));
        s.add(triple.at(0).get<int>(), triple.at(1).get<int>(), dim);
    }
    return s;
}

inline json to_json(const BranchingDecomposition& dec) {
    json j;
    j["Lam"] = to_json(dec.Lam);
    json terms = json::array();
    for (const auto& t : dec.terms) {
        json term;
        term["lam"] = to_json(t.lam);
        term["j"] = t.j;
        term["mult"] = t.mult.get_str();
        terms.push_back(term);
    }
    j["terms"] = terms;
    j["total_dimension"] = dec.total_dimension().get_str();
    return j;
}

} // namespace satake
