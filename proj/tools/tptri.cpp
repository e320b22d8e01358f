// Command-line front end: validate and classify .pprs graphs, run the
// reduction calculus with replayable logs, generate catalog families, run the
// exact-rational oracle, and export DOT.
//
// Exit codes: 0 verdict true / success, 1 verdict false (t-imperfect or
// imperfect), 2 invalid input, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tptri/catalog.hpp"
#include "tptri/detectors.hpp"
#include "tptri/embedded_graph.hpp"
#include "tptri/polytope.hpp"
#include "tptri/transforms.hpp"

using nlohmann::json;
using namespace tptri;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

EmbeddedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PprsError("cannot open " + path);
    return parse_pprs(in);
}

void write_graph(const EmbeddedGraph& g, const std::string& path) {
    if (path.empty() || path == "-") {
        write_pprs(g, std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_pprs(g, out);
}

std::vector<int> parse_id_list(const std::string& text, size_t expect) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (expect != 0 && out.size() != expect)
        throw std::invalid_argument("expected " + std::to_string(expect) + " comma-separated ids, got '" + text + "'");
    return out;
}

json cert_json(const Certificate& c) { return json::parse(c.to_json()); }

std::string yesno(bool b) { return b ? "true" : "false"; }

void print_validation(const ValidationReport& rep, bool as_json) {
    if (as_json) {
        json j;
        j["ok"] = rep.ok;
        j["faces"] = rep.faces;
        j["euler_characteristic"] = rep.euler_characteristic;
        j["violations"] = json::array();
        for (auto& v : rep.violations) j["violations"].push_back({{"rule", v.rule}, {"locus", v.locus}});
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "VALID: " << yesno(rep.ok) << "\n";
    std::cout << "FACES: " << rep.faces << "\n";
    std::cout << "EULER_CHARACTERISTIC: " << rep.euler_characteristic << "\n";
    for (auto& v : rep.violations) std::cout << "VIOLATION: " << v.rule << " (" << v.locus << ")\n";
}

void print_classification(const ClassificationReport& rep, bool as_json) {
    if (as_json) {
        json j;
        j["valid"] = rep.input_valid;
        j["eulerian"] = rep.eulerian;
        j["nice"] = rep.nice;
        j["perfect"] = rep.perfect;
        j["t_perfect"] = rep.t_perfect;
        j["strongly_t_perfect"] = rep.strongly_t_perfect;
        j["perfect_without_k4"] = rep.perfect_without_k4;
        auto put = [&](const char* key, const std::optional<Certificate>& c) {
            j[key] = c ? cert_json(*c) : json(nullptr);
        };
        put("non_eulerian", rep.non_eulerian);
        put("k4", rep.k4);
        put("c7bar", rep.c7bar);
        put("loose_odd_wheel", rep.loose_odd_wheel);
        put("odd_hole", rep.odd_hole);
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "VALID: " << yesno(rep.input_valid) << "\n";
    std::cout << "EULERIAN: " << yesno(rep.eulerian) << "\n";
    std::cout << "NICE: " << yesno(rep.nice) << "\n";
    auto put = [&](const char* key, const std::optional<Certificate>& c) {
        std::cout << key << ": " << (c ? c->to_json() : "none") << "\n";
    };
    put("NON_EULERIAN", rep.non_eulerian);
    put("K4", rep.k4);
    put("C7BAR", rep.c7bar);
    put("LOOSE_ODD_WHEEL", rep.loose_odd_wheel);
    put("ODD_HOLE", rep.odd_hole);
    std::cout << "PERFECT: " << yesno(rep.perfect) << "\n";
    std::cout << "T_PERFECT: " << yesno(rep.t_perfect) << "\n";
    std::cout << "STRONGLY_T_PERFECT: " << yesno(rep.strongly_t_perfect) << "\n";
    std::cout << "PERFECT_WITHOUT_K4: " << yesno(rep.perfect_without_k4) << "\n";
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream ss;
    ss << q;
    return ss.str();
}

int run(int argc, char** argv) {
    CLI::App app{"t-perfection of projective-plane triangulations"};
    app.require_subcommand(1);

    std::string input, output, log_path, site, at, gate, attach, del, mode;
    int cap = 14;
    bool as_json = false;
    std::vector<std::string> gen_args;

    auto add_io = [&](CLI::App* cmd, bool with_output) {
        cmd->add_option("--input", input, "input .pprs file")->required();
        if (with_output) cmd->add_option("--output", output, "output file ('-' for stdout)");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the surface invariants");
    add_io(validate_cmd, false);
    validate_cmd->add_flag("--json", as_json);

    auto* classify_cmd = app.add_subcommand("classify", "run the forbidden-structure recogniser");
    add_io(classify_cmd, false);
    classify_cmd->add_flag("--json", as_json);

    auto* contract_cmd = app.add_subcommand("contract", "apply an even-contraction");
    add_io(contract_cmd, true);
    contract_cmd->add_option("--site", site, "x,b,b'")->required();

    auto* split_cmd = app.add_subcommand("split", "apply an even-splitting");
    add_io(split_cmd, true);
    split_cmd->add_option("--at", at, "vertex y")->required();
    split_cmd->add_option("--gate", gate, "a,a'")->required();

    auto* octa_cmd = app.add_subcommand("octa", "attach or delete an octahedron");
    add_io(octa_cmd, true);
    octa_cmd->add_option("--attach", attach, "face u,v,w");
    octa_cmd->add_option("--delete", del, "triangle u,v,w");

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce to an irreducible triangulation");
    add_io(reduce_cmd, true);
    reduce_cmd->add_option("--log", log_path, "write the transform log here");

    auto* gen_cmd = app.add_subcommand("gen", "generate a family instance, e.g. gen i16 1,2,3");
    gen_cmd->add_option("args", gen_args, "family and parameters")->expected(2);
    gen_cmd->add_option("--output", output, "output file ('-' for stdout)");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact-rational brute-force ground truth");
    oracle_cmd->add_option("mode", mode, "tperfect | perfect")->required();
    add_io(oracle_cmd, false);
    oracle_cmd->add_option("--cap", cap, "vertex cap for the oracle");
    oracle_cmd->add_flag("--json", as_json);

    auto* dot_cmd = app.add_subcommand("export-dot", "emit DOT with certificate annotations");
    add_io(dot_cmd, true);

    auto* replay_cmd = app.add_subcommand("replay", "apply a transform log");
    add_io(replay_cmd, true);
    replay_cmd->add_option("--log", log_path, "transform log file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    if (validate_cmd->parsed()) {
        auto g = load_graph(input);
        auto rep = g.validate(true);
        print_validation(rep, as_json);
        return rep.ok ? kExitTrue : kExitInvalid;
    }

    if (classify_cmd->parsed()) {
        auto g = load_graph(input);
        auto rep = classify(g);
        print_classification(rep, as_json);
        if (!rep.input_valid) return kExitInvalid;
        return rep.t_perfect ? kExitTrue : kExitFalse;
    }

    if (contract_cmd->parsed()) {
        auto g = load_graph(input);
        auto ids = parse_id_list(site, 3);
        auto s = site_at(g, ids[0], ids[1], ids[2]);
        if (!s) throw std::invalid_argument("no even-contraction site at " + site);
        auto [h, step] = even_contract(g, *s);
        write_graph(h, output);
        if (!output.empty() && output != "-") std::cout << "CONTRACTED: " << step.args[0] << " " << step.args[1]
                                                        << " " << step.args[2] << "\nVERTICES: " << h.num_vertices()
                                                        << "\n";
        return kExitTrue;
    }

    if (split_cmd->parsed()) {
        auto g = load_graph(input);
        auto gates = parse_id_list(gate, 2);
        auto [h, step] = even_split(g, std::stoi(at), gates[0], gates[1]);
        write_graph(h, output);
        if (!output.empty() && output != "-")
            std::cout << "SPLIT: " << step.args[0] << " " << step.args[1] << " " << step.args[2]
                      << "\nCREATED: " << step.created[0] << " " << step.created[1]
                      << "\nVERTICES: " << h.num_vertices() << "\n";
        return kExitTrue;
    }

    if (octa_cmd->parsed()) {
        if (attach.empty() == del.empty())
            throw std::invalid_argument("octa needs exactly one of --attach or --delete");
        auto g = load_graph(input);
        auto ids = parse_id_list(attach.empty() ? del : attach, 3);
        auto [h, step] = attach.empty() ? delete_octahedron(g, ids[0], ids[1], ids[2])
                                        : attach_octahedron(g, ids[0], ids[1], ids[2]);
        write_graph(h, output);
        if (!output.empty() && output != "-")
            std::cout << (attach.empty() ? "OCTA_DELETED: " : "OCTA_ATTACHED: ") << step.args[0] << " "
                      << step.args[1] << " " << step.args[2] << "\nVERTICES: " << h.num_vertices() << "\n";
        return kExitTrue;
    }

    if (reduce_cmd->parsed()) {
        auto g = load_graph(input);
        auto [irr, log] = reduce_to_irreducible(g);
        write_graph(irr, output);
        if (!log_path.empty()) {
            std::ofstream out(log_path);
            out << log.serialize();
        }
        if (!output.empty() && output != "-")
            std::cout << "STEPS: " << log.steps.size() << "\nVERTICES: " << irr.num_vertices()
                      << "\nIRREDUCIBLE: true\n";
        return kExitTrue;
    }

    if (gen_cmd->parsed()) {
        FamilySpec spec;
        std::string fam = gen_args[0];
        if (fam == "i16") spec.family = Family::I16;
        else if (fam == "i18") spec.family = Family::I18;
        else if (fam == "i19") spec.family = Family::I19;
        else throw std::invalid_argument("unknown family '" + fam + "' (use i16 | i18 | i19)");
        spec.params = parse_id_list(gen_args[1], 0);
        auto entry = build_family(spec);
        write_graph(entry.graph, output);
        if (!output.empty() && output != "-") {
            std::cout << "NAME: " << entry.name << "\nVERTICES: " << entry.graph.num_vertices()
                      << "\nEDGES: " << entry.graph.num_edges() << "\n";
            if (entry.known_certificate) std::cout << "CERTIFICATE: " << entry.known_certificate->to_json() << "\n";
            if (entry.colouring) std::cout << "THREE_COLOURABLE: true\n";
        }
        return kExitTrue;
    }

    if (oracle_cmd->parsed()) {
        auto g = load_graph(input);
        const Graph& sk = g.skeleton();
        bool embeddable = g.validate(true).ok;
        if (mode == "tperfect") {
            auto res = is_t_perfect_bruteforce(sk, cap);
            json j;
            j["t_perfect"] = res.t_perfect;
            std::cout << "T_PERFECT_BRUTEFORCE: " << yesno(res.t_perfect) << "\n";
            if (res.fractional_vertex) {
                std::string w;
                for (auto& q : res.fractional_vertex->coords) w += (w.empty() ? "" : " ") + rational_to_string(q);
                std::cout << "FRACTIONAL_VERTEX: " << w << "\n";
                j["fractional_vertex"] = w;
            }
            if (embeddable) {
                auto rep = classify(g);
                bool agree = rep.t_perfect == res.t_perfect;
                std::cout << "CLASSIFY_T_PERFECT: " << yesno(rep.t_perfect) << "\n";
                std::cout << "AGREEMENT: " << (agree ? "agree" : "DISAGREE") << "\n";
                j["classify_t_perfect"] = rep.t_perfect;
                j["agreement"] = agree;
            }
            if (as_json) std::cout << j.dump() << "\n";
            return res.t_perfect ? kExitTrue : kExitFalse;
        }
        if (mode == "perfect") {
            bool perfect = is_perfect_bruteforce(sk, std::min(cap, 12), std::max(cap, 20));
            std::cout << "PERFECT_BRUTEFORCE: " << yesno(perfect) << "\n";
            if (embeddable) {
                auto [p2, cert] = is_perfect_embedded(sk);
                std::cout << "CLASSIFY_PERFECT: " << yesno(p2) << "\n";
                std::cout << "AGREEMENT: " << (p2 == perfect ? "agree" : "DISAGREE") << "\n";
            }
            if (as_json) std::cout << json{{"perfect", perfect}}.dump() << "\n";
            return perfect ? kExitTrue : kExitFalse;
        }
        throw std::invalid_argument("oracle mode must be tperfect or perfect");
    }

    if (dot_cmd->parsed()) {
        auto g = load_graph(input);
        auto rep = g.validate(true).ok ? classify(g) : ClassificationReport{};
        std::set<int> low_vs, hole_vs;
        int hub = -1;
        if (rep.loose_odd_wheel) {
            hub = rep.loose_odd_wheel->hub;
            low_vs.insert(rep.loose_odd_wheel->cycle.begin(), rep.loose_odd_wheel->cycle.end());
        }
        if (rep.odd_hole) hole_vs.insert(rep.odd_hole->vertices.begin(), rep.odd_hole->vertices.end());
        std::ostringstream dot;
        dot << "graph g {\n";
        for (int v = 0; v < g.num_vertices(); ++v) {
            dot << "  " << v;
            if (v == hub) dot << " [group=\"hub\", color=\"red\"]";
            else if (low_vs.count(v)) dot << " [group=\"loose_odd_wheel\", color=\"blue\"]";
            else if (hole_vs.count(v)) dot << " [group=\"odd_hole\", color=\"orange\"]";
            dot << ";\n";
        }
        for (auto [u, v] : g.skeleton().edges()) {
            dot << "  " << u << " -- " << v;
            if ((low_vs.count(u) || u == hub) && (low_vs.count(v) || v == hub)) dot << " [penwidth=2]";
            dot << ";\n";
        }
        dot << "}\n";
        if (output.empty() || output == "-") std::cout << dot.str();
        else std::ofstream(output) << dot.str();
        return kExitTrue;
    }

    if (replay_cmd->parsed()) {
        auto g = load_graph(input);
        std::ifstream lf(log_path);
        if (!lf) throw std::runtime_error("cannot open log " + log_path);
        auto log = parse_transform_log(lf);
        auto [h, applied] = replay(g, log);
        write_graph(h, output);
        if (!output.empty() && output != "-")
            std::cout << "STEPS: " << applied.steps.size() << "\nVERTICES: " << h.num_vertices() << "\n";
        return kExitTrue;
    }

    return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
