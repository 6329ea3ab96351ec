// zerr: zero-error code analysis from the command line.
//
//   zerr verify --graph C5+1 --words 0,11,23,35,42,54
//   zerr rate   --graph C5+1 --words 0,11,23,35,42,54 --rule single-open --hub 0
//   zerr curve  --graph C5+1 --words 11,23,35,42,54,001,003 --L 30 --overlay
//   zerr alpha  --graph C5 --L 4
//   zerr series --regex "(0+1(0)*1+2(0)*3+3(0)*5+4(0)*2+5(0)*4)*"
//
// Exit status: 0 ok, 1 usage or parse error, 2 verification failure,
// 3 budget exhausted.

#include "zerr/io.hpp"
#include "zerr/zerr.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

namespace {

using zerr::io::json;

enum Exit { exit_ok = 0, exit_usage = 1, exit_violation = 2, exit_budget = 3 };

struct Config {
    std::string command;
    std::string graph;
    std::optional<std::string> words;
    std::string rule;
    std::size_t hub = 0;
    std::string regex;
    std::string file;
    std::optional<std::size_t> length;
    std::size_t from = 0;
    std::string format = "human";
    std::uint64_t budget_nodes = 100'000'000;
    double tol = 1e-8;
    bool overlay = false;
};

struct RegexCode {
    zerr::Regex expression;
    std::size_t alphabet;
};

using Code = std::variant<zerr::GeneratorSet, zerr::io::IntermingledCode, RegexCode>;

std::string fixed(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

std::string complex_text(zerr::Complex z) {
    if (z.imag() == 0) return fixed(z.real());
    return fixed(z.real()) + (z.imag() < 0 ? " - " : " + ") + fixed(std::abs(z.imag())) + "i";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw zerr::invalid_input("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw zerr::invalid_input("'" + path + "' is not valid JSON: " + e.what());
    }
}

/// --graph accepts a built-in name or inline JSON.
zerr::ChannelGraph load_graph(const std::string& text) {
    if (text.empty()) throw zerr::invalid_input("--graph is required");
    if (text.front() == '{') {
        try {
            return zerr::io::graph_from_json(json::parse(text));
        } catch (const json::parse_error& e) {
            throw zerr::invalid_input(std::string("inline graph is not valid JSON: ") + e.what());
        }
    }
    return zerr::named_graph(text);
}

zerr::SuccessionRule rule_from_flags(const Config& cfg) {
    if (cfg.rule == "varlen") return zerr::SuccessionRule::varlen();
    if (cfg.rule == "single-open") return zerr::SuccessionRule::single_open(cfg.hub);
    throw zerr::invalid_input("--rule must be varlen or single-open (tables go through --file)");
}

Code load_code(const Config& cfg) {
    if (!cfg.file.empty()) {
        json j = read_json_file(cfg.file);
        if (j.contains("regex")) {
            std::optional<zerr::ChannelGraph> g;
            if (j.contains("graph")) g = zerr::io::graph_from_json(j.at("graph"));
            auto e = zerr::parse_regex(j.at("regex").get<std::string>(),
                                       g ? zerr::label_resolver(*g) : zerr::LetterResolver{});
            std::size_t k = j.contains("alphabet") ? j.at("alphabet").get<std::size_t>()
                            : g                    ? g->vertex_count()
                                                   : std::max<std::size_t>(e.alphabet_bound(), 1);
            return RegexCode{e, k};
        }
        if (j.contains("generator")) return zerr::io::intermingled_from_json(j);
        if (j.contains("words")) {
            auto c = zerr::io::generator_set_from_json(j);
            if (!cfg.rule.empty()) return zerr::io::IntermingledCode{c, rule_from_flags(cfg)};
            return c;
        }
        throw zerr::invalid_input("'" + cfg.file + "' holds no regex, generator set or intermingled code");
    }
    if (!cfg.regex.empty()) {
        std::optional<zerr::ChannelGraph> g;
        if (!cfg.graph.empty()) g = load_graph(cfg.graph);
        auto e = zerr::parse_regex(cfg.regex, g ? zerr::label_resolver(*g) : zerr::LetterResolver{});
        std::size_t k = g ? g->vertex_count() : std::max<std::size_t>(e.alphabet_bound(), 1);
        return RegexCode{e, k};
    }
    if (cfg.words) {
        zerr::GeneratorSet c(load_graph(cfg.graph), zerr::parse_word_list(*cfg.words));
        if (!cfg.rule.empty()) return zerr::io::IntermingledCode{c, rule_from_flags(cfg)};
        return c;
    }
    throw zerr::invalid_input("give a code with --words, --regex or --file");
}

json word_json(const zerr::Word& w) { return w; }

// -- verify ------------------------------------------------------------------

int cmd_verify(const Config& cfg) {
    Code code = load_code(cfg);
    json out;
    bool ok = true;
    std::string human;
    if (auto* c = std::get_if<zerr::GeneratorSet>(&code)) {
        auto r = zerr::verify_zero_error(*c);
        ok = r.ok;
        out = {{"ok", r.ok}, {"kind", "variable-length"}};
        if (r.violation) {
            out["violation"] = {word_json(r.violation->a), word_json(r.violation->b)};
            human = "violation: " + zerr::format_word(r.violation->a) + " and " + zerr::format_word(r.violation->b) +
                    " are not distinguishable";
        } else {
            human = "ok: zero-error generator set (" + std::to_string(c->size()) + " words)";
        }
    } else if (auto* ic = std::get_if<zerr::io::IntermingledCode>(&code)) {
        const std::size_t horizon = cfg.length.value_or(12);
        auto r = zerr::verify_zero_error(ic->generator, ic->rule, horizon);
        ok = r.ok;
        out = {{"ok", r.ok}, {"kind", "intermingled"}, {"bounded", r.bounded}, {"all_lengths", r.all_lengths}};
        if (r.violation) {
            const bool amb = r.violation->kind == zerr::SequenceViolation::Kind::ambiguous;
            out["violation"] = {word_json(r.violation->first), word_json(r.violation->second)};
            out["violation_kind"] = amb ? "ambiguous" : "confusable";
            human = std::string("violation (") + (amb ? "ambiguous" : "confusable") +
                    "): " + zerr::format_word(r.violation->first) + " and " +
                    zerr::format_word(r.violation->second);
        } else if (r.all_lengths) {
            human = "ok: zero-error intermingled code (all lengths)";
        } else {
            human = "ok: no violation up to length " + std::to_string(horizon) +
                    (r.bounded ? " (bounded verification)" : "");
        }
    } else {
        throw zerr::invalid_input("verify applies to generator sets and intermingled codes");
    }
    if (cfg.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << human << "\n";
    return ok ? exit_ok : exit_violation;
}

// -- rate --------------------------------------------------------------------

/// Exact text of the root of a z^2 + b z + c nearest `value`, e.g. "(1+√21)/2".
std::optional<std::string> quadratic_root_text(const zerr::IntPolynomial& p, double value) {
    if (p.degree() != 2) return std::nullopt;
    auto small = [](const zerr::BigInt& v) -> std::optional<long long> {
        if (v > 1'000'000'000LL || v < -1'000'000'000LL) return std::nullopt;
        return v.convert_to<long long>();
    };
    auto a0 = small(p.coefficient(2)), b0 = small(p.coefficient(1)), c0 = small(p.coefficient(0));
    if (!a0 || !b0 || !c0) return std::nullopt;
    long long a = *a0, b = *b0, c = *c0;
    long long disc = b * b - 4 * a * c;
    if (disc < 0) return std::nullopt;
    long long s = 1, t = disc;
    for (long long f = 2; f * f <= t; ++f)
        while (t % (f * f) == 0) {
            t /= f * f;
            s *= f;
        }
    if (disc == 0) s = 0, t = 1;
    // root = (-b + sign * s sqrt(t)) / (2a); pick the sign closest to value.
    double plus = (-b + s * std::sqrt(static_cast<double>(t))) / (2.0 * a);
    double minus = (-b - s * std::sqrt(static_cast<double>(t))) / (2.0 * a);
    long long sign = std::abs(plus - value) <= std::abs(minus - value) ? 1 : -1;
    long long num = -b, rad = sign * s, den = 2 * a;
    if (den < 0) num = -num, rad = -rad, den = -den;
    if (t == 1) {
        num += rad;
        rad = 0;
    }
    long long g = std::gcd(std::gcd(std::abs(num), std::abs(rad)), den);
    if (g > 1) num /= g, rad /= g, den /= g;
    std::string text;
    if (rad == 0) {
        text = std::to_string(num);
    } else {
        std::string surd = (std::abs(rad) == 1 ? "" : std::to_string(std::abs(rad))) + "√" + std::to_string(t);
        if (num == 0)
            text = (rad < 0 ? "-" : "") + surd;
        else
            text = std::to_string(num) + (rad < 0 ? "-" : "+") + surd;
    }
    if (den != 1) text = (rad != 0 && num != 0 ? "(" + text + ")" : text) + "/" + std::to_string(den);
    return text;
}

int cmd_rate(const Config& cfg) {
    Code code = load_code(cfg);
    json out;
    std::ostringstream human;
    if (auto* c = std::get_if<zerr::GeneratorSet>(&code)) {
        auto r = zerr::rate(*c);
        auto exact = quadratic_root_text(r.char_poly, r.nu);
        const std::string poly = r.char_poly.to_string("X");
        out = {{"method", "characteristic polynomial"}, {"nu", r.nu}, {"r_bits", r.r_bits},
               {"char_poly", zerr::io::to_json(r.char_poly)}, {"period", r.period}};
        human << "ν = " << fixed(r.nu) << (exact ? " = " + *exact : "") << " root of " << poly << "\n"
              << "r = " << fixed(r.r_bits) << " bits\n"
              << "method: unique positive root of the characteristic polynomial";
        if (r.period != 1) human << " (word lengths share gcd " << r.period << ")";
    } else if (auto* ic = std::get_if<zerr::io::IntermingledCode>(&code)) {
        auto t = zerr::build_transition_graph(ic->generator, ic->rule);
        auto r = zerr::rate(t);
        out = {{"method", "spectral radius"}, {"nu", r.nu}, {"r_bits", r.r_bits}, {"states", t.state_count()}};
        human << "ν = " << fixed(r.nu) << ", spectral radius of the transition graph (" << t.state_count()
              << " states)\n"
              << "r = " << fixed(r.r_bits) << " bits";
    } else {
        const auto& rc = std::get<RegexCode>(code);
        auto r = zerr::rational_code_rate(zerr::RationalCode(rc.expression, rc.alphabet), cfg.tol);
        const std::string den = r.series.denominator().to_string("z");
        out = {{"method", "generator series pole"}, {"nu", r.nu}, {"r_bits", r.r_bits},
               {"dfa_spectral_radius", r.dfa_spectral_radius}, {"series", r.series.to_string("z")},
               {"denominator", zerr::io::to_json(r.series.denominator())}, {"period", r.period}};
        if (r.pole) out["pole"] = zerr::io::to_json(*r.pole);
        if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
        if (r.pole) {
            auto exact = r.pole->imag() == 0 ? quadratic_root_text(r.series.denominator(), r.pole->real()) : std::nullopt;
            human << "pole " << (exact ? *exact + " = " : "") << complex_text(*r.pole) << ", ν = " << fixed(r.nu)
                  << "\n";
        } else {
            human << "ν = " << fixed(r.nu) << "\n";
        }
        human << "r = " << fixed(r.r_bits) << " bits\n"
              << "F(z) = " << r.series.to_string("z") << "\n"
              << "automaton spectral radius = " << fixed(r.dfa_spectral_radius);
        if (!r.diagnostic.empty()) human << "\nnote: " << r.diagnostic;
    }
    if (cfg.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << human.str() << "\n";
    return exit_ok;
}

// -- count / curve -----------------------------------------------------------

zerr::CountSequence counts_for(const Code& code, std::size_t up_to) {
    if (auto* c = std::get_if<zerr::GeneratorSet>(&code)) return zerr::count_concatenations(*c, up_to);
    if (auto* ic = std::get_if<zerr::io::IntermingledCode>(&code))
        return zerr::count_sequences(zerr::build_transition_graph(ic->generator, ic->rule), up_to);
    const auto& rc = std::get<RegexCode>(code);
    return zerr::count_language(zerr::regex_to_dfa(rc.expression, rc.alphabet), up_to);
}

std::optional<double> lth_root(const zerr::BigInt& count, std::size_t l) {
    if (l == 0) return std::nullopt;
    if (count <= 0) return 0.0;
    return std::exp2(zerr::log2_big(count) / static_cast<double>(l));
}

int cmd_count(const Config& cfg) {
    const std::size_t up_to = cfg.length.value_or(10);
    auto counts = counts_for(load_code(cfg), up_to);
    if (cfg.format == "json") {
        std::cout << json{{"counts", zerr::io::to_json(counts)}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "L,count\n";
        for (std::size_t l = cfg.from; l <= up_to; ++l) std::cout << l << "," << counts[l] << "\n";
    } else {
        for (std::size_t l = cfg.from; l <= up_to; ++l) std::cout << "L=" << l << "  " << counts[l] << "\n";
    }
    return exit_ok;
}

int cmd_curve(const Config& cfg) {
    const std::size_t up_to = cfg.length.value_or(30);
    Code code = load_code(cfg);
    auto counts = counts_for(code, up_to);

    std::vector<zerr::ExponentialTerm> closed;
    if (cfg.overlay) {
        auto* c = std::get_if<zerr::GeneratorSet>(&code);
        if (!c) throw zerr::invalid_input("--overlay needs a variable-length generator set");
        auto poly = c->characteristic_polynomial();
        std::vector<zerr::BigInt> seed(counts.terms().begin(),
                                       counts.terms().begin() + std::min<std::ptrdiff_t>(poly.degree(), static_cast<std::ptrdiff_t>(counts.size())));
        if (seed.size() < static_cast<std::size_t>(poly.degree()))
            seed = zerr::count_concatenations(*c, static_cast<std::size_t>(poly.degree())).terms();
        closed = zerr::closed_form_counts(poly, seed);
    }

    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t l = cfg.from; l <= up_to; ++l) {
            auto root = lth_root(counts[l], l);
            json row = {{"L", l}, {"count", zerr::io::to_json(counts[l])}, {"root", root ? json(*root) : json(nullptr)}};
            if (cfg.overlay && l > 0) {
                auto env = zerr::oscillation_envelopes(closed, static_cast<double>(l));
                row["f1"] = env.upper;
                row["f2"] = env.lower;
                row["f3"] = env.dominant;
            }
            rows.push_back(row);
        }
        std::cout << rows.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "L,count,root" << (cfg.overlay ? ",f1,f2,f3" : "") << "\n";
    for (std::size_t l = cfg.from; l <= up_to; ++l) {
        auto root = lth_root(counts[l], l);
        std::cout << l << "," << counts[l] << "," << (root ? fixed(*root) : "");
        if (cfg.overlay) {
            if (l == 0) {
                std::cout << ",,,";
            } else {
                auto env = zerr::oscillation_envelopes(closed, static_cast<double>(l));
                std::cout << "," << fixed(env.upper) << "," << fixed(env.lower) << "," << fixed(env.dominant);
            }
        }
        std::cout << "\n";
    }
    return exit_ok;
}

// -- alpha -------------------------------------------------------------------

int cmd_alpha(const Config& cfg) {
    auto g = load_graph(cfg.graph);
    zerr::ChannelSeriesOptions opt;
    opt.search.node_budget = cfg.budget_nodes;
    auto s = zerr::channel_series_prefix(g, cfg.length.value_or(1), opt);
    bool all_exact = true;
    for (bool e : s.exact) all_exact = all_exact && e;

    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t l = 1; l < s.terms.size(); ++l)
            rows.push_back({{"L", l},
                            {"alpha", zerr::io::to_json(s.terms[l])},
                            {"exact", static_cast<bool>(s.exact[l])},
                            {"running_max_root", s.running_max_root[l]}});
        std::cout << json{{"terms", rows}, {"capacity_lower_bound", s.capacity_lower_bound()}, {"nodes", s.nodes}}.dump(2)
                  << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "L,alpha,exact,running_max_root\n";
        for (std::size_t l = 1; l < s.terms.size(); ++l)
            std::cout << l << "," << s.terms[l] << "," << (s.exact[l] ? "true" : "false") << ","
                      << fixed(s.running_max_root[l]) << "\n";
    } else {
        for (std::size_t l = 1; l < s.terms.size(); ++l)
            std::cout << "L=" << l << "  alpha=" << s.terms[l] << (s.exact[l] ? "" : " (lower bound)")
                      << "  max root=" << fixed(s.running_max_root[l]) << "\n";
        std::cout << "2^C0 >= " << fixed(s.capacity_lower_bound()) << "\n";
    }
    return all_exact ? exit_ok : exit_budget;
}

// -- series / dfa-dump -------------------------------------------------------

int cmd_series(const Config& cfg) {
    Code code = load_code(cfg);
    zerr::RationalFraction f;
    if (auto* c = std::get_if<zerr::GeneratorSet>(&code))
        f = zerr::concatenation_series(c->length_counts());
    else if (auto* rc = std::get_if<RegexCode>(&code))
        f = zerr::generator_series(rc->expression, rc->alphabet);
    else
        throw zerr::invalid_input("series applies to generator sets and regular expressions");
    const std::size_t up_to = cfg.length.value_or(10);
    auto coeffs = zerr::series_coefficients(f, up_to);
    std::optional<zerr::Complex> pole;
    if (f.denominator().degree() > 0) pole = zerr::smallest_modulus_root(f.denominator());

    if (cfg.format == "json") {
        json out = {{"numerator", zerr::io::to_json(f.numerator())},
                    {"denominator", zerr::io::to_json(f.denominator())},
                    {"coefficients", zerr::io::to_json(coeffs)}};
        if (pole) out["pole"] = zerr::io::to_json(*pole);
        std::cout << out.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "F(z) = " << f.to_string("z") << "\n";
    std::cout << "coefficients:";
    for (const auto& c : coeffs.terms()) std::cout << " " << c;
    std::cout << "\n";
    if (pole) std::cout << "smallest pole " << complex_text(*pole) << ", 1/|pole| = " << fixed(1.0 / std::abs(*pole)) << "\n";
    return exit_ok;
}

int cmd_dfa_dump(const Config& cfg) {
    Code code = load_code(cfg);
    auto* rc = std::get_if<RegexCode>(&code);
    if (!rc) throw zerr::invalid_input("dfa-dump needs --regex or a regex file");
    auto d = zerr::regex_to_dfa(rc->expression, rc->alphabet);
    if (cfg.format != "human") {
        std::cout << zerr::io::to_json(d).dump(2) << "\n";
        return exit_ok;
    }
    std::cout << d.state_count() << " states, start " << d.start;
    if (d.sink) std::cout << ", sink " << *d.sink;
    std::cout << "\nstate";
    for (std::size_t x = 0; x < d.alphabet; ++x) std::cout << "\t" << x;
    std::cout << "\n";
    for (std::size_t s = 0; s < d.state_count(); ++s) {
        std::cout << (d.accepting[s] ? "*" : " ") << s;
        for (std::size_t x = 0; x < d.alphabet; ++x) std::cout << "\t" << d.next[s][x];
        std::cout << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-error code analysis: generator sets, intermingled codes, rational codes"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph, "Channel graph: C<n>, K<n>, P<n>, <name>+1, or inline JSON");
        sub->add_option("--words", cfg.words, "Generator set as comma-separated words, e.g. 0,11,23");
        sub->add_option("--rule", cfg.rule, "Succession rule: varlen | single-open");
        sub->add_option("--hub", cfg.hub, "Hub word index for the single-open rule");
        sub->add_option("--regex", cfg.regex, "Regular expression, e.g. (0+11+23)*");
        sub->add_option("--file", cfg.file, "JSON file with a graph, generator set, intermingled code or regex");
        sub->add_option("--L", cfg.length, "Length cap");
        sub->add_option("--from", cfg.from, "First length to print");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
        sub->add_option("--budget-nodes", cfg.budget_nodes, "Node budget of the independence search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol", cfg.tol, "Tolerance of numeric cross-checks")->check(CLI::PositiveNumber);
    };

    struct Entry {
        const char* name;
        const char* help;
        int (*run)(const Config&);
    };
    const Entry entries[] = {
        {"verify", "Check that a code is zero-error", cmd_verify},
        {"rate", "Asymptotic rate of a code", cmd_rate},
        {"count", "Codeword counts by length", cmd_count},
        {"curve", "CSV of counts and L-th roots", cmd_curve},
        {"alpha", "Independence numbers of strong powers", cmd_alpha},
        {"series", "Generator series as a rational fraction", cmd_series},
        {"dfa-dump", "Minimal automaton of a regular expression", cmd_dfa_dump},
    };
    int (*run)(const Config&) = nullptr;
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        add_common(sub);
        if (std::string(e.name) == "curve") sub->add_flag("--overlay", cfg.overlay, "Add closed-form envelopes f1, f2, f3");
        sub->callback([&cfg, &run, e] {
            cfg.command = e.name;
            run = e.run;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return run(cfg);
    } catch (const zerr::resource_limit& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return exit_budget;
    } catch (const zerr::ambiguous_expression& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const zerr::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
