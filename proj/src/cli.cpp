#include "slopelab/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "slopelab/constructions.hpp"
#include "slopelab/fillings.hpp"
#include "slopelab/oracles.hpp"
#include "slopelab/psl2.hpp"
#include "slopelab/quasimorphs.hpp"

namespace slopelab {

namespace {

struct UsageError : Error {
    using Error::Error;
};

constexpr const char* usage_text = R"(usage: slopelab <command> ...

  present fig8 | present torus P Q
  fill KNOT SLOPE
  certify KNOT WORD [--slope R] [budget options]
  scan KNOT WORD --slopes LIST|A..B [denom D] [--jobs N] [--csv] [--seed S] [budget options]
  build bmt G ALPHA | torus-gn P Q N | sep-comm A G SIGMA
        sep-combine H G QSTEP N1 N2 | powered G H M N | alpha-m G S P M
  holonomy trace WORD | peripheral WORD [--tol T]
           invariant nonperipheral ALPHA X U | invariant peripheral ALPHA Z
           (--rep FILE --against KNOT to use a loaded representation)
  qm count PATTERN WORD | homog PATTERN WORD | defect PATTERN G1 H1 [G2 H2 ...]
     bavard PATTERN WORD --defect-bound D   (all accept --power N)

KNOT is fig8, "torus P Q" (two further arguments) or a presentation file.
Budget options: --max-cosets N --sym-max n --psl2 p,q,... --timeout SECONDS
                --max-assignments N --serial
Words accept [u,v] commutators, u^v conjugation and (u)^k powers.
)";

const std::set<std::string> valued_options{"--max-cosets", "--sym-max", "--psl2",     "--timeout",
                                           "--slopes",     "--jobs",    "--seed",     "--slope",
                                           "--power",      "--rep",     "--against",  "--defect-bound",
                                           "--tol",        "--max-assignments"};
const std::set<std::string> flag_options{"--csv", "--serial"};

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;
    std::set<std::string> flags;

    bool has(const std::string& name) const { return options.count(name) || flags.count(name); }
    std::optional<std::string> get(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end()) return std::nullopt;
        return it->second;
    }
};

bool looks_like_option(const std::string& s) {
    return s.size() > 2 && s[0] == '-' && s[1] == '-';
}

Args split_args(const std::vector<std::string>& raw) {
    Args a;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::string& s = raw[i];
        if (!looks_like_option(s)) {
            a.positional.push_back(s);
            continue;
        }
        if (flag_options.count(s)) {
            a.flags.insert(s);
        } else if (valued_options.count(s)) {
            if (i + 1 >= raw.size()) throw UsageError("option " + s + " needs a value");
            a.options[s] = raw[++i];
        } else {
            throw UsageError("unknown option " + s);
        }
    }
    return a;
}

std::int64_t to_int(const std::string& s, const char* what) {
    std::int64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
    return v;
}

double to_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(what) + " must be a number, got '" + s + "'");
}

/// "re,im" or a plain real number.
Complex to_complex(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {to_double(s, what), 0.0};
    return {to_double(s.substr(0, comma), what), to_double(s.substr(comma + 1), what)};
}

void need(const Args& a, std::size_t count, const char* form) {
    if (a.positional.size() != count) throw UsageError(std::string("usage: slopelab ") + form);
}

/// Consumes a knot designation starting at positional[at]; returns the index after it.
std::size_t parse_knot(const Args& a, std::size_t at, Presentation& out) {
    if (at >= a.positional.size()) throw UsageError("missing knot (fig8, torus P Q or a presentation file)");
    const std::string& k = a.positional[at];
    if (k == "fig8") {
        out = figure_eight();
        return at + 1;
    }
    if (k == "torus") {
        if (at + 2 >= a.positional.size()) throw UsageError("torus needs P and Q");
        out = torus_knot(to_int(a.positional[at + 1], "P"), to_int(a.positional[at + 2], "Q"));
        return at + 3;
    }
    out = load_presentation(k);
    return at + 1;
}

Budget budget_from(const Args& a) {
    Budget b;
    if (const char* env = std::getenv("SLOPELAB_MAX_COSETS"); env && *env)
        b.max_cosets = static_cast<std::size_t>(to_int(env, "SLOPELAB_MAX_COSETS"));
    if (auto v = a.get("--max-cosets")) b.max_cosets = static_cast<std::size_t>(to_int(*v, "--max-cosets"));
    if (auto v = a.get("--sym-max")) b.sym_max = static_cast<int>(to_int(*v, "--sym-max"));
    if (auto v = a.get("--psl2")) {
        b.psl2_primes.clear();
        std::stringstream ss(*v);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) b.psl2_primes.push_back(static_cast<int>(to_int(item, "--psl2")));
    }
    if (auto v = a.get("--timeout")) b.timeout_seconds = to_double(*v, "--timeout");
    if (auto v = a.get("--max-assignments"))
        b.max_hom_assignments = static_cast<std::uint64_t>(to_int(*v, "--max-assignments"));
    if (a.has("--serial")) b.parallel = false;
    if (b.sym_max > 6) throw UsageError("--sym-max is limited to 6");
    for (const auto& name : b.targets()) standard_group(name); // validates primes
    return b;
}

nlohmann::ordered_json budget_config_json(const Budget& b) {
    nlohmann::ordered_json j;
    j["max_cosets"] = b.max_cosets;
    j["sym_max"] = b.sym_max;
    j["psl2_primes"] = b.psl2_primes;
    j["max_rewrite_steps"] = b.max_rewrite_steps;
    j["max_hom_assignments"] = b.max_hom_assignments;
    if (b.timeout_seconds) j["timeout_seconds"] = *b.timeout_seconds;
    return j;
}

Word parse_arg_word(const std::string& text, const Alphabet& gens) { return parse_expression(text, gens); }

// ---------------------------------------------------------------------------

int cmd_present(const Args& a, std::ostream& out) {
    Presentation p;
    const std::size_t next = parse_knot(a, 1, p);
    if (next != a.positional.size()) throw UsageError("usage: slopelab present fig8 | torus P Q");
    out << render_presentation(p);
    return 0;
}

int cmd_fill(const Args& a, std::ostream& out) {
    Presentation p;
    const std::size_t next = parse_knot(a, 1, p);
    if (next + 1 != a.positional.size()) throw UsageError("usage: slopelab fill KNOT SLOPE");
    out << render_presentation(fill(p, parse_slope(a.positional[next])));
    return 0;
}

int cmd_certify(const Args& a, std::ostream& out) {
    Presentation p;
    const std::size_t next = parse_knot(a, 1, p);
    if (next + 1 != a.positional.size()) throw UsageError("usage: slopelab certify KNOT WORD [options]");
    if (auto r = a.get("--slope")) p = fill(p, parse_slope(*r));
    const Word w = parse_arg_word(a.positional[next], p.gens);
    const Budget budget = budget_from(a);
    const Verdict v = certify(p, w, budget);
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["presentation"] = p.name;
    j["element"] = render(w);
    j["verdict"] = to_string(v.kind);
    j["stage"] = v.stage;
    j["certificate"] = certificate_json(p, v);
    j["budgets"] = budget_json(v.spent);
    j["meta"] = {{"tool", "slopelab"}, {"version", tool_version}, {"budget", budget_config_json(budget)}};
    out << j.dump(2) << '\n';
    return 0;
}

std::vector<Slope> slopes_from(const Args& a, std::size_t at) {
    const auto spec = a.get("--slopes");
    if (!spec) throw UsageError("scan needs --slopes");
    std::int64_t denom = 1;
    if (at < a.positional.size()) {
        if (a.positional[at] != "denom" || at + 2 != a.positional.size())
            throw UsageError("unexpected argument '" + a.positional[at] + "'");
        denom = to_int(a.positional[at + 1], "denom");
    }
    if (auto dots = spec->find(".."); dots != std::string::npos) {
        if (denom < 1) throw UsageError("denom must be positive");
        return slope_window(to_int(spec->substr(0, dots), "window start"), to_int(spec->substr(dots + 2), "window end"),
                            denom);
    }
    if (denom != 1) throw UsageError("denom applies only to a window a..b");
    std::vector<Slope> out;
    std::stringstream ss(*spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_slope(item));
    if (out.empty()) throw UsageError("empty slope list");
    return out;
}

std::string certificate_summary(const nlohmann::ordered_json& cert) {
    if (!cert.contains("target")) return "";
    std::string t = cert["target"].get<std::string>();
    if (t == "coset_table") return t + "(" + std::to_string(cert["cosets"].get<std::size_t>()) + ")";
    if (t == "homology") return t + "(" + cert["group"].get<std::string>() + ")";
    if (t == "normal_closure") return t + "(" + std::to_string(cert["factors"].size()) + ")";
    return t;
}

int cmd_scan(const Args& a, std::ostream& out) {
    Presentation p;
    const std::size_t next = parse_knot(a, 1, p);
    if (next >= a.positional.size()) throw UsageError("usage: slopelab scan KNOT WORD --slopes ...");
    const Word w = parse_arg_word(a.positional[next], p.gens);
    const auto slopes = slopes_from(a, next + 1);
    const Budget budget = budget_from(a);
    const int jobs = a.get("--jobs") ? static_cast<int>(to_int(*a.get("--jobs"), "--jobs")) : 0;
    const std::int64_t seed = a.get("--seed") ? to_int(*a.get("--seed"), "--seed") : 0;

    const auto rows = sk_scan(p, w, slopes, budget, jobs);
    if (a.has("--csv")) {
        out << "slope,verdict,certificate,stage\n";
        for (const auto& [r, v] : rows)
            out << render(r) << ',' << to_string(v.kind) << ',' << certificate_summary(certificate_json(p, v)) << ','
                << v.stage << '\n';
        return 0;
    }
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["knot"] = p.name;
    j["element"] = render(w);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& [r, v] : rows) {
        const Presentation filled = fill(p, r);
        nlohmann::ordered_json row;
        row["slope"] = render(r);
        row["verdict"] = to_string(v.kind);
        row["certificate"] = certificate_json(filled, v);
        row["budgets"] = budget_json(v.spent);
        j["rows"].push_back(std::move(row));
    }
    j["meta"] = {{"tool", "slopelab"}, {"version", tool_version}, {"seed", seed}, {"budget", budget_config_json(budget)}};
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_build(const Args& a, std::ostream& out) {
    if (a.positional.size() < 2) throw UsageError("usage: slopelab build KIND ...");
    const std::string& kind = a.positional[1];
    const Alphabet any;
    auto word = [&](std::size_t i) { return parse_arg_word(a.positional[i], any); };
    auto num = [&](std::size_t i, const char* what) { return to_int(a.positional[i], what); };
    Word result;
    if (kind == "bmt") {
        need(a, 4, "build bmt G ALPHA");
        result = bmt_conjugate(word(2), word(3));
    } else if (kind == "torus-gn") {
        need(a, 5, "build torus-gn P Q N");
        result = torus_gn(num(2, "P"), num(3, "Q"), num(4, "N"));
    } else if (kind == "sep-comm") {
        need(a, 5, "build sep-comm A G SIGMA");
        result = separation_commutator(word(2), word(3), word(4));
    } else if (kind == "sep-combine") {
        need(a, 7, "build sep-combine H G QSTEP N1 N2");
        result = separation_combine(word(2), word(3), num(4, "QSTEP"), num(5, "N1"), num(6, "N2"));
    } else if (kind == "powered") {
        need(a, 6, "build powered G H M N");
        result = powered_product(word(2), word(3), num(4, "M"), num(5, "N"));
    } else if (kind == "alpha-m") {
        need(a, 6, "build alpha-m G S P M");
        result = nonrigid_alpha(word(2), word(3), num(4, "P"), num(5, "M"));
    } else {
        throw UsageError("unknown builder '" + kind + "'");
    }
    out << render(result) << '\n';
    return 0;
}

nlohmann::ordered_json complex_json(Complex c) { return nlohmann::ordered_json::array({c.real(), c.imag()}); }

int cmd_holonomy(const Args& a, std::ostream& out) {
    if (a.positional.size() < 2) throw UsageError("usage: slopelab holonomy trace|peripheral|invariant ...");
    const std::string& kind = a.positional[1];
    if (kind == "invariant") {
        if (a.positional.size() >= 3 && a.positional[2] == "nonperipheral") {
            need(a, 6, "holonomy invariant nonperipheral ALPHA X U");
            const Complex v = invariant_nonperipheral(to_complex(a.positional[3], "ALPHA"),
                                                      to_complex(a.positional[4], "X"), to_complex(a.positional[5], "U"));
            out << nlohmann::ordered_json{{"invariant", "nonperipheral"}, {"value", complex_json(v)}}.dump() << '\n';
            return 0;
        }
        if (a.positional.size() >= 3 && a.positional[2] == "peripheral") {
            need(a, 5, "holonomy invariant peripheral ALPHA Z");
            const Complex v = invariant_peripheral(to_complex(a.positional[3], "ALPHA"), to_complex(a.positional[4], "Z"));
            out << nlohmann::ordered_json{{"invariant", "peripheral"}, {"value", complex_json(v)}}.dump() << '\n';
            return 0;
        }
        throw UsageError("usage: slopelab holonomy invariant nonperipheral|peripheral ...");
    }
    Representation rep = fig8_holonomy();
    if (auto file = a.get("--rep")) {
        rep = load_representation(*file);
        if (auto against = a.get("--against")) {
            Args knot;
            knot.positional = {*against};
            if (*against == "torus") throw UsageError("--against takes fig8 or a presentation file");
            Presentation p;
            parse_knot(knot, 0, p);
            validate(rep, p);
        }
    }
    need(a, 3, "holonomy trace|peripheral WORD");
    const Word w = parse_arg_word(a.positional[2], rep.gens);
    if (kind == "trace") {
        const ProjectiveMatrix m = evaluate(rep, w);
        nlohmann::ordered_json j;
        j["element"] = render(w);
        j["matrix"] = {complex_json(m.a), complex_json(m.b), complex_json(m.c), complex_json(m.d)};
        j["trace"] = complex_json(trace(m));
        out << j.dump() << '\n';
        return 0;
    }
    if (kind == "peripheral") {
        const double tol = a.get("--tol") ? to_double(*a.get("--tol"), "--tol") : 1e-8;
        const bool per = peripheral_test(rep, w, tol);
        out << nlohmann::ordered_json{{"element", render(w)}, {"peripheral", per}}.dump() << '\n';
        return 0;
    }
    throw UsageError("unknown holonomy query '" + kind + "'");
}

int cmd_qm(const Args& a, std::ostream& out) {
    if (a.positional.size() < 3) throw UsageError("usage: slopelab qm count|homog|defect|bavard PATTERN ...");
    const std::string& kind = a.positional[1];
    const Alphabet any;
    const BrooksSpec spec(parse_arg_word(a.positional[2], any));
    const std::int64_t power =
        a.get("--power") ? to_int(*a.get("--power"), "--power") : default_homogenization_power;
    auto word = [&](std::size_t i) { return parse_arg_word(a.positional[i], any); };
    nlohmann::ordered_json j;
    j["pattern"] = render(spec.pattern());
    if (kind == "count") {
        need(a, 4, "qm count PATTERN WORD");
        j["count"] = brooks_count(spec, word(3));
    } else if (kind == "homog") {
        need(a, 4, "qm homog PATTERN WORD");
        j["power"] = power;
        j["estimate"] = homogenize_estimate(spec, word(3), power);
    } else if (kind == "defect") {
        if (a.positional.size() < 5 || a.positional.size() % 2 == 0)
            throw UsageError("usage: slopelab qm defect PATTERN G1 H1 [G2 H2 ...]");
        std::vector<std::pair<Word, Word>> sample;
        for (std::size_t i = 3; i + 1 < a.positional.size(); i += 2) sample.emplace_back(word(i), word(i + 1));
        j["power"] = power;
        j["defect_lower_estimate"] = defect_estimate(spec, sample, power);
    } else if (kind == "bavard") {
        need(a, 4, "qm bavard PATTERN WORD --defect-bound D");
        const auto bound = a.get("--defect-bound");
        if (!bound) throw UsageError("qm bavard needs --defect-bound");
        const SclEstimate e = bavard_lower_estimate(spec, word(3), power, to_double(*bound, "--defect-bound"));
        j["value"] = e.value;
        j["kind"] = e.kind;
        j["power"] = e.power;
        j["defect_bound"] = e.defect_bound;
    } else {
        throw UsageError("unknown qm query '" + kind + "'");
    }
    out << j.dump() << '\n';
    return 0;
}

} // namespace

int cmd_dispatch(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
    try {
        if (raw.empty() || raw[0] == "--help" || raw[0] == "-h" || raw[0] == "help") {
            (raw.empty() ? err : out) << usage_text;
            return raw.empty() ? 1 : 0;
        }
        const Args a = split_args(raw);
        if (a.positional.empty()) throw UsageError("missing command");
        const std::string& cmd = a.positional[0];
        if (cmd == "present") return cmd_present(a, out);
        if (cmd == "fill") return cmd_fill(a, out);
        if (cmd == "certify") return cmd_certify(a, out);
        if (cmd == "scan") return cmd_scan(a, out);
        if (cmd == "build") return cmd_build(a, out);
        if (cmd == "holonomy") return cmd_holonomy(a, out);
        if (cmd == "qm") return cmd_qm(a, out);
        throw UsageError("unknown command '" + cmd + "'");
    } catch (const UsageError& e) {
        err << "slopelab: " << e.what() << "\n\n" << usage_text;
        return 1;
    } catch (const Error& e) {
        err << "slopelab: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "slopelab: internal error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cmd_dispatch(args, std::cout, std::cerr);
}

} // namespace slopelab
