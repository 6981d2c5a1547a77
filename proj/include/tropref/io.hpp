#pragma once

// JSON and Graphviz serialization. Coefficients are written as decimal strings so
// that arbitrary-precision values survive any JSON reader.

#include "tropref/diagram.hpp"
#include "tropref/polygon.hpp"
#include "tropref/series.hpp"

#include <json.hpp>

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropref {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {
inline json coeff_array(const std::vector<Integer>& c) {
    json arr = json::array();
    for (const auto& v : c) arr.push_back(to_decimal(v));
    return arr;
}
inline std::vector<Integer> read_coeffs(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("coeffs must be an array");
    std::vector<Integer> out;
    for (const auto& v : arr) {
        if (v.is_string()) out.push_back(from_decimal(v.get<std::string>()));
        else if (v.is_number_integer()) out.emplace_back(v.get<long>());
        else throw std::invalid_argument("coefficient must be a decimal string or an integer");
    }
    return out;
}
}  // namespace detail

inline json series_to_json(const TruncSeries& s, const std::string& var = "x") {
    return json{{"var", var}, {"trunc", s.order()}, {"coeffs", detail::coeff_array(s.coeffs())}};
}

inline TruncSeries series_from_json(const json& j) {
    auto c = detail::read_coeffs(j.at("coeffs"));
    if (j.contains("trunc") && j.at("trunc").get<long>() + 1 != static_cast<long>(c.size()))
        throw std::invalid_argument("trunc does not match the number of coefficients");
    return TruncSeries::from_coeffs(std::move(c));
}

inline json laurent_to_json(const SymLaurent& p) {
    return json{{"var", "q^{1/2}"}, {"min", p.half_min()}, {"coeffs", detail::coeff_array(p.coeffs())}};
}

inline SymLaurent laurent_from_json(const json& j) {
    return SymLaurent(j.at("min").get<long>(), detail::read_coeffs(j.at("coeffs")));
}

inline json class_to_json(const SurfaceClass& s) {
    return json{{"a", s.a}, {"b_top", s.b_top}, {"b_bot", s.b_bot}, {"b_left", s.b_left}, {"b_right", s.b_right}};
}

inline SurfaceClass class_from_json(const json& j) {
    try {
        return make_surface_class(j.at("a").get<long>(), j.at("b_top").get<long>(), j.at("b_bot").get<long>(),
                                  j.at("b_left").get<std::vector<long>>(), j.at("b_right").get<std::vector<long>>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed polygon: ") + e.what());
    }
}

/// Floors are written with ids 1..a; edges as [src, dst, weight]; ends as lists of floor ids.
inline json diagram_to_json(const FloorDiagram& d) {
    json floors = json::array(), edges = json::array(), sources = json::array(), sinks = json::array();
    for (long v = 0; v < d.floor_count(); ++v) {
        floors.push_back(json{{"id", v + 1}, {"L", d.left(v)}, {"R", d.right(v)}});
        for (long k = 0; k < d.sources(v); ++k) sources.push_back(v + 1);
        for (long k = 0; k < d.sinks(v); ++k) sinks.push_back(v + 1);
    }
    for (const Edge& e : d.edges()) edges.push_back(json::array({e.src + 1, e.dst + 1, e.weight}));
    return json{{"class", class_to_json(d.surface())},
                {"floors", floors},
                {"edges", edges},
                {"sources", sources},
                {"sinks", sinks}};
}

inline FloorDiagram diagram_from_json(const json& j) {
    try {
        auto cls = std::make_shared<const SurfaceClass>(class_from_json(j.at("class")));
        const long a = cls->a;
        std::vector<long> left(static_cast<std::size_t>(a)), right(static_cast<std::size_t>(a));
        std::vector<bool> seen(static_cast<std::size_t>(a), false);
        const auto& floors = j.at("floors");
        if (static_cast<long>(floors.size()) != a) throw std::invalid_argument("wrong number of floors");
        for (const auto& f : floors) {
            long id = f.at("id").get<long>() - 1;
            if (id < 0 || id >= a || seen[id]) throw std::invalid_argument("bad or repeated floor id");
            seen[id] = true;
            left[id] = f.at("L").get<long>();
            right[id] = f.at("R").get<long>();
        }
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge must be [src, dst, weight]");
            edges.push_back({e[0].get<long>() - 1, e[1].get<long>() - 1, e[2].get<long>()});
        }
        std::vector<long> src(static_cast<std::size_t>(a), 0), snk(static_cast<std::size_t>(a), 0);
        auto tally = [&](const json& list, std::vector<long>& into) {
            for (const auto& v : list) {
                long id = v.get<long>() - 1;
                if (id < 0 || id >= a) throw std::invalid_argument("end attached to an unknown floor");
                ++into[id];
            }
        };
        tally(j.at("sources"), src);
        tally(j.at("sinks"), snk);
        return FloorDiagram(cls, left, right, edges, src, snk);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed diagram: ") + e.what());
    }
}

inline std::string diagram_to_dot(const FloorDiagram& d, const std::string& name = "D") {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (long v = 0; v < d.floor_count(); ++v)
        os << "  f" << v + 1 << " [shape=box,label=\"" << v + 1 << " (" << d.left(v) << "," << d.right(v) << ")\"];\n";
    for (long v = 0; v < d.floor_count(); ++v) {
        for (long k = 0; k < d.sources(v); ++k) {
            os << "  s" << v + 1 << "_" << k << " [shape=point];\n";
            os << "  s" << v + 1 << "_" << k << " -> f" << v + 1 << ";\n";
        }
        for (long k = 0; k < d.sinks(v); ++k) {
            os << "  t" << v + 1 << "_" << k << " [shape=point];\n";
            os << "  f" << v + 1 << " -> t" << v + 1 << "_" << k << ";\n";
        }
    }
    for (const Edge& e : d.edges()) {
        os << "  f" << e.src + 1 << " -> f" << e.dst + 1;
        if (e.weight != 1) os << " [label=\"" << e.weight << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tropref
