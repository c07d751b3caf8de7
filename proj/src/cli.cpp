#include "kecore/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "kecore/errors.hpp"
#include "kecore/ke_test.hpp"
#include "kecore/matching.hpp"
#include "kecore/oracle.hpp"

namespace kecore::cli {

namespace {

using nlohmann::json;

Graph read_input(const RunConfig& config, std::istream& in) {
    if (config.input == "-") return parse_graph(in);
    return load_graph_file(config.input);
}

json ids_json(const std::vector<int>& ids) {
    return json(ids);
}

void emit(const json& doc, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json) {
        out << doc.dump() << "\n";
        return;
    }
    // text: one "key value" line per top-level entry, arrays space-joined
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        out << it.key();
        const json& v = it.value();
        if (v.is_array()) {
            for (const auto& x : v) {
                if (x.is_null())
                    out << " -";
                else
                    out << " " << x;
            }
        } else if (v.is_null()) {
            out << " -";
        } else if (v.is_string()) {
            out << " " << v.get<std::string>();
        } else {
            out << " " << v;
        }
        out << "\n";
    }
}

int cmd_core(const RunConfig& config, const Graph& g, std::ostream& out) {
    CoreResult result = compute_core(g, config.mode, config.workers);
    emit(core_result_to_json(g, result), config.format, out);
    return kExitOk;
}

int cmd_is_ke(const RunConfig& config, const Graph& g, std::ostream& out) {
    Matching m = maximum_matching(g);
    KEVerdict verdict = ke_given_matching(g, m);
    json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["mu"] = m.size();
    doc["is_ke"] = verdict.is_ke;
    doc["witness"] = verdict.is_ke ? ids_json(verdict.witness.members()) : json();
    doc["reason"] = verdict.is_ke ? json() : json(verdict.reason);
    emit(doc, config.format, out);
    return kExitOk;
}

int cmd_matching(const RunConfig& config, const Graph& g, std::ostream& out) {
    Matching m = maximum_matching(g);
    json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["mu"] = m.size();
    doc["perfect"] = has_perfect_matching(g, m);
    json edges = json::array();
    for (auto [u, v] : m.pairs()) edges.push_back({u, v});
    doc["edges"] = edges;
    emit(doc, config.format, out);
    return kExitOk;
}

int cmd_alpha(const RunConfig& config, const Graph& g, std::ostream& out) {
    int alpha = alpha_ke(g);
    json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["mu"] = g.vertex_count() - alpha;
    doc["alpha"] = alpha;
    emit(doc, config.format, out);
    return kExitOk;
}

int cmd_unique_mis(const RunConfig& config, const Graph& g, std::ostream& out) {
    UniqueMISResult result = unique_mis(g, config.workers);
    json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["unique"] = result.unique;
    doc["mis"] = result.unique ? ids_json(result.mis.members()) : json();
    emit(doc, config.format, out);
    return kExitOk;
}

int cmd_verify(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err) {
    const int n = g.vertex_count();

    Matching m = maximum_matching(g);
    KEVerdict verdict = ke_given_matching(g, m);

    const int oracle_mu = oracle::brute_mu(g);
    const auto family = oracle::enumerate_mis(g);
    const bool oracle_ke = family.alpha + oracle_mu == n;

    json doc;
    doc["n"] = n;
    doc["m"] = g.edge_count();
    bool ok = true;
    auto compare = [&ok](json& slot, const json& solver, const json& oracle_value) {
        bool match = solver == oracle_value;
        slot = {{"solver", solver}, {"oracle", oracle_value}, {"match", match}};
        ok = ok && match;
    };

    compare(doc["mu"], m.size(), oracle_mu);
    compare(doc["is_ke"], verdict.is_ke, oracle_ke);

    if (verdict.is_ke && oracle_ke) {
        compare(doc["alpha"], alpha_ke(g), family.alpha);

        const std::vector<int> oracle_core = oracle::brute_core(g).members();
        json modes = json::object();
        std::vector<std::pair<std::string, CoreMode>> to_try = {{"auto", CoreMode::Auto},
                                                                {"general", CoreMode::General}};
        if (bipartition(g).is_bipartite()) to_try.emplace_back("bipartite", CoreMode::Bipartite);
        if (has_perfect_matching(g, m)) to_try.emplace_back("perfect", CoreMode::Perfect);
        for (const auto& [name, mode] : to_try) {
            CoreResult result = compute_core(g, mode, config.workers);
            bool match = result.core.members() == oracle_core;
            modes[name] = match;
            ok = ok && match;
        }
        doc["core"] = {{"oracle", ids_json(oracle_core)}, {"modes", modes}};

        json failures = json::array();
        for (int v = 0; v < n; ++v) {
            auto report = oracle::verify_theorem_th(g, v);
            if (!report.pass) failures.push_back(v);
        }
        doc["per_vertex_dichotomy"] = {{"checked", n}, {"failures", failures}};
        ok = ok && failures.empty();
    }

    json structure = json::array();
    auto report = oracle::validate_structure(g);
    for (const auto& check : report.checks) {
        structure.push_back(
            {{"name", check.name}, {"applicable", check.applicable}, {"pass", check.pass}});
        ok = ok && check.pass;
    }
    doc["structure"] = structure;
    doc["ok"] = ok;

    emit(doc, config.format, out);
    if (!ok) {
        err << "verify: solver/oracle mismatch on this graph:\n" << to_edge_list(g);
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
    out << gen_edge_list(config.gen);
    return kExitOk;
}

} // namespace

json core_result_to_json(const Graph& g, const CoreResult& result) {
    json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["mu"] = result.mu;
    doc["alpha"] = result.alpha;
    doc["is_ke"] = true;
    doc["algorithm"] = to_string(result.algorithm);
    doc["core"] = ids_json(result.core.members());
    doc["c"] = json(result.c);
    json ke = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (result.ke_defined(v))
            ke.push_back(static_cast<int>(result.ke[v]));
        else
            ke.push_back(nullptr);
    }
    doc["ke"] = ke;
    return doc;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
        if (config.command == "gen") return cmd_gen(config, out);

        Graph g = read_input(config, in);
        if (config.command == "core") return cmd_core(config, g, out);
        if (config.command == "is-ke") return cmd_is_ke(config, g, out);
        if (config.command == "matching") return cmd_matching(config, g, out);
        if (config.command == "alpha") return cmd_alpha(config, g, out);
        if (config.command == "unique-mis") return cmd_unique_mis(config, g, out);
        if (config.command == "verify") return cmd_verify(config, g, out, err);
        throw std::invalid_argument("unknown command '" + config.command + "'");
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotKEError& e) {
        err << "precondition: NotKE: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotBipartiteError& e) {
        err << "precondition: NotBipartite: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NoPerfectMatchingError& e) {
        err << "precondition: NoPerfectMatching: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const TooLargeError& e) {
        err << "guard: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace kecore::cli
