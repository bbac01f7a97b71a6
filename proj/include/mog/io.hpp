#ifndef MOG_IO_HPP
#define MOG_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mog/analysis.hpp"
#include "mog/errors.hpp"
#include "mog/game.hpp"
#include "mog/outcome.hpp"
#include "mog/rational.hpp"

namespace mog {

using json = nlohmann::ordered_json;

namespace detail {

inline Rational parse_payoff_component(const json& j, const std::string& where) {
    try {
        if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
        if (j.is_number_integer()) {
            const auto v = j.get<std::int64_t>();
            if (v < 0) throw load_error("negative payoff at " + where);
            return Rational(v);
        }
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const input_error& e) {
        throw load_error(std::string(e.what()) + " at " + where);
    }
    throw load_error("payoff component at " + where + " must be an integer or a rational string");
}

inline std::size_t parse_index(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(text, &pos);
        if (pos != text.size()) throw load_error("bad index '" + text + "' in key '" + key + "'");
        return v;
    } catch (const std::logic_error&) {
        throw load_error("bad index '" + text + "' in key '" + key + "'");
    }
}

inline std::string payoff_key(std::size_t agent, const ActionProfile& p) {
    std::string key = std::to_string(agent + 1) + "|";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) key += ",";
        key += std::to_string(p[i] + 1);
    }
    return key;
}

} // namespace detail

/// Game file schema (JSON, 1-based indices in keys and masks):
///   objectives: { names: [...], efficiency_mask: [1-based indices] }
///   agents:     [agent names]
///   actions:    [[action labels per agent], ...]
///   payoffs:    { "i|a1,...,an": [d components], ... }  per agent i
/// Components are nonnegative integers or exact strings ("p/q", decimals).
inline MOGame game_from_json(const json& doc) {
    try {
        if (!doc.contains("objectives") || !doc.contains("agents") || !doc.contains("actions") ||
            !doc.contains("payoffs")) {
            throw load_error("game file needs objectives, agents, actions and payoffs blocks");
        }
        const auto& jobj = doc.at("objectives");
        std::vector<std::string> names = jobj.at("names").get<std::vector<std::string>>();
        std::vector<std::size_t> mask;
        if (jobj.contains("efficiency_mask")) {
            for (const auto& k : jobj.at("efficiency_mask")) {
                const auto idx = k.get<std::int64_t>();
                if (idx < 1 || static_cast<std::size_t>(idx) > names.size()) {
                    throw load_error("efficiency mask index out of range: " + std::to_string(idx));
                }
                mask.push_back(static_cast<std::size_t>(idx - 1));
            }
        } else {
            for (std::size_t k = 0; k < names.size(); ++k) mask.push_back(k);
        }
        ObjectiveSpace space = ObjectiveSpace::masked(std::move(names), std::move(mask));

        const auto agents = doc.at("agents").get<std::vector<std::string>>();
        auto actions = doc.at("actions").get<std::vector<std::vector<std::string>>>();
        if (agents.size() != actions.size()) {
            throw load_error("agents and actions blocks disagree on agent count");
        }
        const std::size_t n = agents.size();
        if (n == 0) throw load_error("at least one agent required");

        std::size_t profiles = 1;
        for (const auto& a : actions) {
            if (a.empty()) throw load_error("every agent needs at least one action");
            profiles *= a.size();
        }

        // reuse MOGame's indexing by building a label-only shell first
        std::vector<std::vector<OutcomeVector>> payoffs(
            n, std::vector<OutcomeVector>(profiles, zero_vector(space.dim())));
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(profiles, false));
        MOGame shell(actions, space, payoffs);

        const auto& jpay = doc.at("payoffs");
        for (const auto& [key, value] : jpay.items()) {
            const auto bar = key.find('|');
            if (bar == std::string::npos) throw load_error("bad payoff key '" + key + "'");
            const std::size_t agent = detail::parse_index(key.substr(0, bar), key);
            if (agent < 1 || agent > n) throw load_error("agent out of range in key '" + key + "'");
            std::vector<std::size_t> digits;
            std::stringstream ss(key.substr(bar + 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) digits.push_back(detail::parse_index(tok, key));
            if (digits.size() != n) throw load_error("profile in key '" + key + "' has wrong length");
            for (std::size_t i = 0; i < n; ++i) {
                if (digits[i] < 1 || digits[i] > actions[i].size()) {
                    throw load_error("action index out of range in key '" + key + "'");
                }
                --digits[i];
            }
            const std::size_t idx = shell.profile_index(ActionProfile(digits));
            if (!value.is_array() || value.size() != space.dim()) {
                throw load_error("payoff at '" + key + "' must list " +
                                 std::to_string(space.dim()) + " components");
            }
            std::vector<Rational> comps(space.dim());
            for (std::size_t k = 0; k < comps.size(); ++k) {
                comps[k] = detail::parse_payoff_component(value.at(k), "'" + key + "'");
            }
            payoffs[agent - 1][idx] = OutcomeVector(std::move(comps));
            seen[agent - 1][idx] = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t p = 0; p < profiles; ++p) {
                if (!seen[i][p]) {
                    throw load_error("missing payoff entry " +
                                     detail::payoff_key(i, shell.profile_at(p)));
                }
            }
        }
        return MOGame(std::move(actions), std::move(space), std::move(payoffs));
    } catch (const json::exception& e) {
        throw load_error(std::string("malformed game file: ") + e.what());
    } catch (const input_error& e) {
        throw load_error(e.what());
    }
}

inline json game_to_json(const MOGame& game, const std::vector<std::string>& agent_names = {}) {
    json doc;
    json jobj;
    jobj["names"] = game.objectives().names;
    std::vector<std::size_t> mask1;
    for (std::size_t k : game.objectives().efficiency_mask) mask1.push_back(k + 1);
    jobj["efficiency_mask"] = mask1;
    doc["objectives"] = jobj;

    std::vector<std::string> agents = agent_names;
    if (agents.empty()) {
        for (std::size_t i = 0; i < game.agent_count(); ++i) {
            agents.push_back("agent" + std::to_string(i + 1));
        }
    }
    doc["agents"] = agents;
    doc["actions"] = game.action_labels();

    json jpay = json::object();
    for (std::size_t i = 0; i < game.agent_count(); ++i) {
        for (std::size_t p = 0; p < game.profile_count(); ++p) {
            const ActionProfile profile = game.profile_at(p);
            json comps = json::array();
            for (const auto& c : game.evaluate_by_index(i, p)) {
                comps.push_back(to_exact_string(c));
            }
            jpay[detail::payoff_key(i, profile)] = comps;
        }
    }
    doc["payoffs"] = jpay;
    return doc;
}

inline MOGame load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw load_error("cannot open game file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw load_error("cannot parse '" + path + "': " + e.what());
    }
    return game_from_json(doc);
}

inline void save_game(const MOGame& game, const std::string& path,
                      const std::vector<std::string>& agent_names = {}) {
    std::ofstream out(path);
    if (!out) throw load_error("cannot write game file '" + path + "'");
    out << game_to_json(game, agent_names).dump(2) << "\n";
}

/// Outcome-set file: one vector per line, comma-separated exact rationals.
/// Blank lines and lines starting with '#' are skipped.
inline OutcomeSet load_outcome_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw load_error("cannot open outcome-set file '" + path + "'");
    OutcomeSet set;
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<Rational> comps;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto b = tok.find_first_not_of(" \t\r");
            const auto e = tok.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw load_error(path + ":" + std::to_string(lineno) +
                                                         ": empty component");
            try {
                comps.push_back(parse_rational(tok.substr(b, e - b + 1)));
            } catch (const input_error& err) {
                throw load_error(path + ":" + std::to_string(lineno) + ": " + err.what());
            }
        }
        if (comps.empty()) continue;
        if (dim == 0) {
            dim = comps.size();
        } else if (comps.size() != dim) {
            throw load_error(path + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(dim) + " components");
        }
        set.insert(OutcomeVector(std::move(comps)));
    }
    return set;
}

inline void write_outcome_set(const OutcomeSet& set, std::ostream& out) {
    for (const auto& v : set) {
        for (std::size_t k = 0; k < v.dim(); ++k) {
            if (k > 0) out << ",";
            out << to_exact_string(v[k]);
        }
        out << "\n";
    }
}

inline void save_outcome_set(const OutcomeSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw load_error("cannot write outcome-set file '" + path + "'");
    write_outcome_set(set, out);
}

struct ReportOptions {
    int decimal_places = 6;
    bool include_timings = true;
    bool clip_ratios_to_unit = false; // presentation only
};

namespace detail {

inline json vector_entry(const OutcomeVector& v, int places) {
    json entry;
    json exact = json::array();
    json dec = json::array();
    for (const auto& c : v) {
        exact.push_back(to_exact_string(c));
        dec.push_back(to_decimal_string(c, places));
    }
    entry["exact"] = exact;
    entry["decimal"] = dec;
    return entry;
}

inline json set_entry(const OutcomeSet& s, int places) {
    json arr = json::array();
    for (const auto& v : s) arr.push_back(vector_entry(v, places));
    return arr;
}

inline OutcomeVector clip_to_unit(const OutcomeVector& v) {
    std::vector<Rational> c(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) c[k] = std::min(v[k], Rational(1));
    return OutcomeVector(std::move(c));
}

} // namespace detail

inline json report_to_json(const EfficiencyReport& report, const MOGame& game,
                           const ReportOptions& opts = {}) {
    json doc;
    doc["agents"] = report.agent_count;
    doc["objectives"] = report.objective_count;
    doc["representation_length"] = report.representation_length;

    json pn = json::array();
    for (const auto& p : report.equilibria.profiles) pn.push_back(game.profile_labels(p));
    doc["pareto_nash"] = pn;
    doc["sizes"] = {{"pn", report.equilibria.profiles.size()},
                    {"outcomes", report.all_outcomes.size()},
                    {"equilibrium_outcomes", report.equilibria.outcomes.size()},
                    {"q", report.q()},
                    {"m", report.m()}};

    doc["outcomes"] = detail::set_entry(report.all_outcomes, opts.decimal_places);
    doc["equilibrium_outcomes"] = detail::set_entry(report.equilibria.outcomes, opts.decimal_places);
    doc["worst_equilibria"] = detail::set_entry(report.equilibria.worst, opts.decimal_places);
    doc["frontier"] = detail::set_entry(report.frontier, opts.decimal_places);

    json mocr;
    mocr["defined"] = report.mocr_defined;
    if (report.mocr_defined) {
        json ratios = json::array();
        for (std::size_t i = 0; i < report.mocr.ratios.size(); ++i) {
            const OutcomeVector& rho = opts.clip_ratios_to_unit
                                           ? detail::clip_to_unit(report.mocr.ratios.point(i))
                                           : report.mocr.ratios.point(i);
            json entry = detail::vector_entry(rho, opts.decimal_places);
            json witnesses = json::array();
            for (std::size_t t = 0; t < report.equilibria.worst.size(); ++t) {
                json w;
                w["worst_equilibrium"] =
                    detail::vector_entry(report.equilibria.worst.point(t), opts.decimal_places);
                w["efficient_outcome"] = detail::vector_entry(
                    report.frontier.point(report.mocr.paths[i][t]), opts.decimal_places);
                witnesses.push_back(w);
            }
            entry["witnesses"] = witnesses;
            ratios.push_back(entry);
        }
        mocr["ratios"] = ratios;
    }
    doc["mocr"] = mocr;

    if (opts.include_timings) {
        doc["timings_ms"] = {{"phase1", report.timings.phase1_ms},
                             {"phase2", report.timings.phase2_ms}};
    }
    return doc;
}

/// Flat CSV point list: one row per vector, tagged by the set it belongs to,
/// with exact components followed by decimal renderings.
inline void write_plot_points(const EfficiencyReport& report, std::ostream& out,
                              const ReportOptions& opts = {}) {
    const std::size_t d = report.all_outcomes.dim();
    out << "set";
    for (std::size_t k = 0; k < d; ++k) out << ",c" << (k + 1);
    for (std::size_t k = 0; k < d; ++k) out << ",c" << (k + 1) << "_decimal";
    out << "\n";
    auto emit = [&](const char* tag, const OutcomeSet& s) {
        for (const auto& v : s) {
            out << tag;
            for (const auto& c : v) out << "," << to_exact_string(c);
            for (const auto& c : v) out << "," << to_decimal_string(c, opts.decimal_places);
            out << "\n";
        }
    };
    emit("A", report.all_outcomes);
    emit("E", report.equilibria.outcomes);
    emit("F", report.frontier);
    emit("WST_E", report.equilibria.worst);
    if (report.mocr_defined) emit("MO-CR", report.mocr.ratios);
}

} // namespace mog

#endif // MOG_IO_HPP
