#pragma once

// JSON wire formats.
//
// Coloring:        {"n": int, "m": int, "cells": [[int,...], ...]}   n rows of m ids
// List assignment: {"n": int, "m": int, "lists": [[[int,...], ...], ...]}
// Both row-major; parse(emit(x)) == x on canonical forms.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rookdist/grid.hpp"
#include "rookdist/oracle.hpp"

namespace rookdist {

using Json = nlohmann::json;

inline Json coloring_to_json(const Coloring& c) {
    Json rows = Json::array();
    for (int i = 1; i <= c.grid().n; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= c.grid().m; ++j) row.push_back(c.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"n", c.grid().n}, {"m", c.grid().m}, {"cells", std::move(rows)}};
}

inline Coloring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("cells"))
        throw std::invalid_argument("coloring: need object with n, m, cells");
    GridSpec g(j.at("n").get<int>(), j.at("m").get<int>());
    const auto& rows = j.at("cells");
    if (!rows.is_array() || static_cast<int>(rows.size()) != g.n)
        throw std::invalid_argument("coloring: cells must hold n rows");
    std::vector<Color> cells;
    cells.reserve(g.cells());
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != g.m)
            throw std::invalid_argument("coloring: each row must hold m entries");
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw std::invalid_argument("coloring: color ids are non-negative integers");
            cells.push_back(v.get<Color>());
        }
    }
    return Coloring(g, std::move(cells));
}

inline Json list_assignment_to_json(const ListAssignment& L) {
    Json rows = Json::array();
    for (int i = 1; i <= L.grid().n; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= L.grid().m; ++j) row.push_back(L.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"n", L.grid().n}, {"m", L.grid().m}, {"lists", std::move(rows)}};
}

inline ListAssignment list_assignment_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("lists"))
        throw std::invalid_argument("lists: need object with n, m, lists");
    GridSpec g(j.at("n").get<int>(), j.at("m").get<int>());
    const auto& rows = j.at("lists");
    if (!rows.is_array() || static_cast<int>(rows.size()) != g.n)
        throw std::invalid_argument("lists: need n rows");
    std::vector<std::vector<Color>> lists;
    lists.reserve(g.cells());
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != g.m)
            throw std::invalid_argument("lists: each row must hold m lists");
        for (const auto& one : row) {
            if (!one.is_array()) throw std::invalid_argument("lists: each entry is an array");
            std::vector<Color> list;
            for (const auto& v : one) {
                if (!v.is_number_integer() || v.get<long long>() < 0)
                    throw std::invalid_argument("lists: color ids are non-negative integers");
                list.push_back(v.get<Color>());
            }
            lists.push_back(std::move(list));
        }
    }
    return ListAssignment(g, std::move(lists));
}

inline Json automorphism_to_json(const Automorphism& a) {
    return Json{{"sigma", a.sigma.one_line()}, {"tau", a.tau.one_line()}};
}

inline Json certificate_to_json(const DistinguishingCertificate& cert) {
    Json out{{"verdict", cert.verdict}};
    if (cert.witness) out["witness"] = automorphism_to_json(*cert.witness);
    return out;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump() << '\n';
}

}  // namespace rookdist
