#pragma once

// JSON forms of the library's inputs and results (nlohmann::json).

#include "zerr/bigint.hpp"
#include "zerr/channel_graph.hpp"
#include "zerr/dfa.hpp"
#include "zerr/error.hpp"
#include "zerr/generator_set.hpp"
#include "zerr/intermingled.hpp"
#include "zerr/polynomial.hpp"
#include "zerr/roots.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace zerr::io {

using json = nlohmann::json;

/// Integers that fit in 64 bits are JSON numbers; larger ones are strings.
inline json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return zerr::to_string(v);
}

inline BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw invalid_input("not an integer: " + j.dump());
        }
    }
    throw invalid_input("not an integer: " + j.dump());
}

inline json to_json(const CountSequence& s) {
    json a = json::array();
    for (const auto& t : s.terms()) a.push_back(to_json(t));
    return a;
}

/// Polynomials as ascending coefficient arrays.
inline json to_json(const IntPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

inline IntPolynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw invalid_input("polynomial must be an array of coefficients");
    std::vector<BigInt> c;
    for (const auto& x : j) c.push_back(big_from_json(x));
    return IntPolynomial(std::move(c));
}

inline json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const ChannelGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"labels", g.labels()}, {"edges", edges}};
}

/// A built-in name ("C5", "C5+1", ...) or {"labels": [...], "edges": [[i, j], ...]}.
inline ChannelGraph graph_from_json(const json& j) {
    if (j.is_string()) return named_graph(j.get<std::string>());
    if (!j.is_object() || !j.contains("labels")) throw invalid_input("graph must be a name or an object with labels");
    try {
        ChannelGraph g(j.at("labels").get<std::vector<std::string>>());
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2) throw invalid_input("edge must be a pair of vertex indices");
                g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
            }
        return g;
    } catch (const json::exception& ex) {
        throw invalid_input(std::string("bad graph JSON: ") + ex.what());
    }
}

inline json to_json(const GeneratorSet& c) {
    return {{"graph", to_json(c.graph())}, {"words", c.words()}};
}

inline GeneratorSet generator_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("words"))
        throw invalid_input("generator set needs 'graph' and 'words'");
    try {
        return GeneratorSet(graph_from_json(j.at("graph")), j.at("words").get<std::vector<Word>>());
    } catch (const json::exception& ex) {
        throw invalid_input(std::string("bad generator set JSON: ") + ex.what());
    }
}

inline json to_json(const SuccessionRule& r) {
    switch (r.family()) {
    case SuccessionRule::Family::varlen:
        return {{"family", "varlen"}};
    case SuccessionRule::Family::single_open:
        return {{"family", "single-open"}, {"hub", r.hub()}};
    case SuccessionRule::Family::table: {
        json entries = json::array();
        for (const auto& [state, words] : r.entries()) entries.push_back({{"state", state}, {"words", words}});
        return {{"family", "table"}, {"entries", entries}};
    }
    }
    return {};
}

inline SuccessionRule rule_from_json(const json& j) {
    try {
        const std::string family = j.at("family").get<std::string>();
        if (family == "varlen") return SuccessionRule::varlen();
        if (family == "single-open") return SuccessionRule::single_open(j.at("hub").get<std::size_t>());
        if (family == "table") {
            SuccessionRule::Table t;
            for (const auto& e : j.at("entries"))
                t[e.at("state").get<StateVector>()] = e.at("words").get<std::vector<std::size_t>>();
            return SuccessionRule::table(std::move(t));
        }
        throw invalid_input("unknown succession rule family '" + family + "'");
    } catch (const json::exception& ex) {
        throw invalid_input(std::string("bad succession rule JSON: ") + ex.what());
    }
}

struct IntermingledCode {
    GeneratorSet generator;
    SuccessionRule rule;
};

inline json to_json(const IntermingledCode& c) { return {{"generator", to_json(c.generator)}, {"rule", to_json(c.rule)}}; }

inline IntermingledCode intermingled_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generator") || !j.contains("rule"))
        throw invalid_input("intermingled code needs 'generator' and 'rule'");
    return {generator_set_from_json(j.at("generator")), rule_from_json(j.at("rule"))};
}

inline json to_json(const Dfa& d) {
    json accepting = json::array();
    for (std::size_t s = 0; s < d.state_count(); ++s)
        if (d.accepting[s]) accepting.push_back(s);
    return {{"alphabet", d.alphabet},
            {"states", d.state_count()},
            {"start", d.start},
            {"accepting", accepting},
            {"sink", d.sink ? json(*d.sink) : json(nullptr)},
            {"transitions", d.next}};
}

inline Dfa dfa_from_json(const json& j) {
    try {
        Dfa d;
        d.alphabet = j.at("alphabet").get<std::size_t>();
        const std::size_t n = j.at("states").get<std::size_t>();
        d.start = j.at("start").get<std::size_t>();
        d.next = j.at("transitions").get<std::vector<std::vector<std::size_t>>>();
        d.accepting.assign(n, false);
        for (const auto& s : j.at("accepting")) d.accepting.at(s.get<std::size_t>()) = true;
        if (j.contains("sink") && !j.at("sink").is_null()) d.sink = j.at("sink").get<std::size_t>();
        if (d.next.size() != n || d.start >= n) throw invalid_input("DFA table does not match its state count");
        for (const auto& row : d.next) {
            if (row.size() != d.alphabet) throw invalid_input("DFA row does not cover the alphabet");
            for (std::size_t t : row)
                if (t >= n) throw invalid_input("DFA transition to an unknown state");
        }
        return d;
    } catch (const json::exception& ex) {
        throw invalid_input(std::string("bad DFA JSON: ") + ex.what());
    } catch (const std::out_of_range&) {
        throw invalid_input("DFA accepting state out of range");
    }
}

} // namespace zerr::io
