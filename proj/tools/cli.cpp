#include "tde/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tde/blowup.hpp"
#include "tde/capacity.hpp"
#include "tde/embedding.hpp"
#include "tde/io.hpp"
#include "tde/lattice_paths.hpp"
#include "tde/svg.hpp"

namespace tde::cli {

namespace {

constexpr int kOracleMaxK = 12;
constexpr int kWitnessHorizon = 30;
constexpr std::size_t kInlineMoves = 200;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::size_t max_nodes = kDefaultMaxNodes;
    Json inputs = Json::array();

    ToricDomainSpec load(const std::string& path) {
        std::string text = read_file(path);
        inputs.push_back(Json{{"path", path}, {"digest", digest(text)}});
        return parse_domain_text(text);
    }
};

Json strings(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

Json cremona_json(const CremonaVector& v) { return Json{{"b", v.b.str()}, {"a", strings(v.a)}}; }

Json class_json(const HomologyClass& c, int node) {
    Json e = Json::array(), h = Json::array();
    for (auto x : c.E) e.push_back(x);
    for (auto x : c.Ehat) h.push_back(x);
    return Json{{"class", c.str()}, {"node", node}, {"L", c.L}, {"E", e}, {"Ehat", h}, {"square", intersection(c, c)}};
}

Json weights_json(const Expansion& e) {
    Json r;
    r["kind"] = to_string(e.tree.kind);
    r["display"] = e.weights.display();
    r["head"] = e.weights.head ? Json(e.weights.head->str()) : Json(nullptr);
    r["weights"] = strings(e.weights.weights);
    r["sorted"] = strings(e.weights.sorted());
    Json tree = Json::array();
    for (std::size_t i = 0; i < e.tree.nodes.size(); ++i) {
        const auto& n = e.tree.nodes[i];
        tree.push_back(Json{{"index", i},
                            {"value", n.value.str()},
                            {"parent", n.parent},
                            {"left", n.left},
                            {"right", n.right},
                            {"cut", Json::array({point_json(n.frame.apply(n.cut_start)), point_json(n.frame.apply(n.cut_end))})}});
    }
    r["tree"] = std::move(tree);
    SphereChain chain = e.tree.kind == DomainKind::Concave ? chain_classes_concave(e.tree) : chain_classes_convex(e.tree);
    Json ch = Json::array();
    for (std::size_t i = 0; i < chain.classes.size(); ++i) ch.push_back(class_json(chain.classes[i], chain.node[i]));
    r["chain"] = std::move(ch);
    return r;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw InputError("cannot write " + path);
}

std::string count_polygons(const std::string& svg) {
    std::size_t n = 0;
    for (std::size_t pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) ++n;
    return std::to_string(n);
}

Json verdict_json(const Verdict& v) {
    const auto& cert = v.certificate;
    Json r{{"feasible", v.feasible},
           {"failure", to_string(v.failure)},
           {"volume_slack", v.volume_slack.str()},
           {"moves", cert.trace.size()},
           {"start", cremona_json(cert.start)},
           {"terminal", cremona_json(cert.terminal)}};
    if (cert.trace.size() <= kInlineMoves) {
        Json moves = Json::array();
        for (const auto& m : cert.trace) moves.push_back(Json{{"delta", m.delta.str()}, {"after", cremona_json(m.after)}});
        r["trace"] = std::move(moves);
    }
    return r;
}

Json certificate_json(const PackingInstance& p, const Verdict& v) {
    Json moves = Json::array();
    for (const auto& m : v.certificate.trace) moves.push_back(Json{{"delta", m.delta.str()}, {"after", cremona_json(m.after)}});
    return Json{{"instance", p.display()},
                {"start", cremona_json(v.certificate.start)},
                {"moves", std::move(moves)},
                {"terminal", cremona_json(v.certificate.terminal)},
                {"feasible", v.feasible},
                {"failure", to_string(v.failure)}};
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::string norm = text;
    for (auto& ch : norm)
        if (ch == ',' || ch == ';') ch = ' ';
    std::istringstream in(norm);
    while (in >> item) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    return out;
}

Rational parse_rational(const std::string& text, const std::string& what) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(what + ": " + e.what());
    }
}

// Every string that reads as a rational becomes a double.
Json approximate(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>()).to_double();
        } catch (const std::invalid_argument&) {
            return j;
        }
    }
    if (j.is_array() || j.is_object()) {
        Json out = j;
        for (auto it = out.begin(); it != out.end(); ++it) *it = approximate(*it);
        return out;
    }
    return j;
}

std::size_t env_max_nodes() {
    const char* raw = std::getenv("TDE_MAX_NODES");
    if (!raw) return kDefaultMaxNodes;
    std::string s(raw);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("TDE_MAX_NODES must be a positive integer, got \"" + s + "\"");
    std::size_t n = std::stoull(s);
    if (n == 0) throw UsageError("TDE_MAX_NODES must be a positive integer");
    return n;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact embeddings of concave toric domains into convex ones", "tde"};
    app.require_subcommand(1);
    app.fallthrough();
    bool approx = false, timing = false;
    app.add_flag("--approx", approx, "Add decimal approximations, labelled inexact");
    app.add_flag("--timing", timing, "Add wall-clock timing to the report");

    auto* weights_cmd = app.add_subcommand("weights", "Weight expansion, decomposition tree and sphere chain");
    std::string weights_file, weights_svg;
    weights_cmd->add_option("file", weights_file, "Domain file")->required();
    weights_cmd->add_option("--svg", weights_svg, "Write the decomposition as SVG");

    auto* caps_cmd = app.add_subcommand("caps", "Capacity table c_0..c_K");
    std::string caps_file;
    int caps_k = 10, caps_search = -1;
    bool caps_oracle = false;
    caps_cmd->add_option("file", caps_file, "Domain file")->required();
    caps_cmd->add_option("--k", caps_k, "Largest index K")->check(CLI::NonNegativeNumber);
    caps_cmd->add_option("--search", caps_search, "Subtraction horizon for convex domains");
    caps_cmd->add_flag("--oracle", caps_oracle, "Add lattice-path oracle values for k <= 12");

    auto* pack_cmd = app.add_subcommand("pack", "Decide a ball packing by Cremona reduction");
    std::string pack_target, pack_balls, pack_trace;
    pack_cmd->add_option("--target", pack_target, "Target ball capacity b")->required();
    pack_cmd->add_option("--balls", pack_balls, "Ball capacities, comma separated")->required();
    pack_cmd->add_option("--trace", pack_trace, "Write the Cremona certificate to this file");

    auto* embed_cmd = app.add_subcommand("embed", "Decide an embedding of a concave domain into a convex one");
    std::string embed_src, embed_dst, embed_scale;
    int embed_report = -1;
    embed_cmd->add_option("source", embed_src, "Concave domain file")->required();
    embed_cmd->add_option("target", embed_dst, "Convex domain file")->required();
    embed_cmd->add_option("--scale-search", embed_scale, "Bracket the optimal scaling to this precision");
    embed_cmd->add_option("--report", embed_report, "Capacity comparison up to K")->check(CLI::NonNegativeNumber);

    auto* svg_cmd = app.add_subcommand("svg", "Draw a domain as SVG");
    std::string svg_file, svg_out, svg_delta;
    bool svg_decomp = false;
    svg_cmd->add_option("file", svg_file, "Domain file")->required();
    svg_cmd->add_option("out", svg_out, "Output SVG path")->required();
    auto* decomp_flag = svg_cmd->add_flag("--decomposition", svg_decomp, "Draw the weight decomposition");
    auto* approx_opt = svg_cmd->add_option("--approximation", svg_delta, "Overlay an approximation with this delta");
    decomp_flag->excludes(approx_opt);
    approx_opt->excludes(decomp_flag);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    Context ctx;
    Json result;
    std::string command;
    try {
        ctx.max_nodes = env_max_nodes();
        if (weights_cmd->parsed()) {
            command = "weights";
            auto d = ctx.load(weights_file);
            auto e = weights(d, ctx.max_nodes);
            result = weights_json(e);
            result["domain"] = domain_json(d);
            if (!weights_svg.empty()) {
                std::string svg = svg_decomposition(e);
                write_text(weights_svg, svg);
                result["svg"] = Json{{"path", weights_svg}, {"polygons", count_polygons(svg)}};
            }
        } else if (caps_cmd->parsed()) {
            command = "caps";
            auto d = ctx.load(caps_file);
            if (caps_oracle && d.kind() != DomainKind::Convex) throw UsageError("--oracle needs a convex domain");
            CapacitySeq seq;
            result["kind"] = to_string(d.kind());
            result["k"] = caps_k;
            if (d.kind() == DomainKind::Concave) {
                seq = concave_caps(d, caps_k, ctx.max_nodes);
            } else {
                int search = caps_search >= 0 ? caps_search : default_search(caps_k, *weights(d, ctx.max_nodes).weights.head);
                seq = convex_caps(d, caps_k, search, ctx.max_nodes);
                result["search"] = search;
            }
            Json oracle = Json::array();
            if (caps_oracle) {
                for (int k = 0; k <= std::min(caps_k, kOracleMaxK); ++k) {
                    auto o = oracle_convex_cap(d, k);
                    certify_entry(seq, k, o.value);
                    Json w = Json::array();
                    for (const auto& p : o.witness.vertices()) w.push_back(point_json(p));
                    oracle.push_back(Json{{"k", k}, {"value", o.value.str()}, {"agrees", o.value == seq[k]}, {"witness", w}, {"nodes", o.nodes}});
                }
            }
            Json rows = Json::array();
            for (int k = 0; k <= caps_k; ++k)
                rows.push_back(Json{{"k", k}, {"value", seq[k].str()}, {"certified", static_cast<bool>(seq.certified[k])}});
            result["capacities"] = std::move(rows);
            result["all_certified"] = seq.all_certified();
            if (caps_oracle) result["oracle"] = std::move(oracle);
        } else if (pack_cmd->parsed()) {
            command = "pack";
            PackingInstance p{parse_rational(pack_target, "--target"), parse_list(pack_balls)};
            Verdict v = decide_packing(p);
            result = verdict_json(v);
            result["instance"] = p.display();
            if (!pack_trace.empty()) {
                write_text(pack_trace, certificate_json(p, v).dump(2) + "\n");
                result["trace_path"] = pack_trace;
            }
        } else if (embed_cmd->parsed()) {
            command = "embed";
            EmbeddingProblem prob(ctx.load(embed_src), ctx.load(embed_dst));
            auto reduced = reduce_to_packing(prob, ctx.max_nodes);
            Verdict v = decide_packing(reduced.instance);
            result = verdict_json(v);
            result["packing"] = reduced.instance.display();
            result["source_count"] = reduced.source_count;
            result["symplectic_class"] = symplectic_class(prob, Rational(1), ctx.max_nodes).str();
            if (!v.feasible) {
                auto rep = capacity_report(prob, kWitnessHorizon, -1, ctx.max_nodes);
                result["capacity_witness"] = rep.first_violation ? Json(*rep.first_violation) : Json(nullptr);
            }
            if (!embed_scale.empty()) {
                Rational precision = parse_rational(embed_scale, "--scale-search");
                auto s = optimal_embedding_scale(prob, precision, ctx.max_nodes);
                result["scale"] = Json{{"lo", s.lo.str()}, {"hi", s.hi.str()}, {"lo_feasible", s.lo_feasible}, {"precision", precision.str()}};
            }
            if (embed_report >= 0) {
                auto rep = capacity_report(prob, embed_report, -1, ctx.max_nodes);
                Json rows = Json::array();
                for (const auto& r : rep.rows)
                    rows.push_back(Json{{"k", r.k}, {"source", r.source.str()}, {"target", r.target.str()}, {"certified", r.certified}, {"holds", r.holds}});
                result["capacity_report"] = Json{{"K", embed_report},
                                                 {"rows", std::move(rows)},
                                                 {"first_violation", rep.first_violation ? Json(*rep.first_violation) : Json(nullptr)}};
            }
        } else {
            command = "svg";
            if (!svg_decomp && svg_delta.empty()) throw UsageError("svg needs --decomposition or --approximation DELTA");
            auto d = ctx.load(svg_file);
            auto e = weights(d, ctx.max_nodes);
            std::string svg;
            if (svg_decomp) {
                svg = svg_decomposition(e);
            } else {
                auto deltas = admissible_deltas(e.tree, parse_rational(svg_delta, "--approximation"));
                auto a = approximation(e.tree, deltas);
                svg = svg_approximation(d, a);
                result["deltas"] = strings(deltas);
                result["approximation"] = domain_json(a);
                result["contains"] = d.kind() == DomainKind::Concave ? contains(a, d) : contains(d, a);
            }
            write_text(svg_out, svg);
            result["path"] = svg_out;
            result["polygons"] = count_polygons(svg);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimit& e) {
        err << "resource guard: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const HorizonError& e) {
        err << "resource guard: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const InvalidDomain& e) {
        err << "invalid domain (" << to_string(e.violation()) << "): " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ApproximationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    }

    Json report;
    report["command"] = command;
    report["argv"] = args;
    report["inputs"] = ctx.inputs;
    report["exact"] = true;
    report["result"] = result;
    if (approx) report["approx"] = Json{{"note", "decimal approximations of the exact result; inexact"}, {"result", approximate(result)}};
    if (timing) {
        std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - t0;
        report["timing_ms"] = ms.count();
    }
    out << report.dump(2) << "\n";
    return kOk;
}

}  // namespace tde::cli
