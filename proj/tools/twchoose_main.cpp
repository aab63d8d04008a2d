#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "twchoose/certify.hpp"
#include "twchoose/json_io.hpp"
#include "twchoose/oracle.hpp"
#include "twchoose/solver.hpp"

namespace {

using namespace twc;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw error("cannot open '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error("cannot write '" + path + "'");
    f << text;
}

GraphFormat parse_format(const std::string& f) {
    if (f == "graph6") return GraphFormat::graph6;
    if (f == "edgelist") return GraphFormat::edgelist;
    throw error("unknown format '" + f + "' (expected graph6 or edgelist)");
}

int default_d(const Graph& g, int given) {
    if (given >= 0) return given;
    if (g.n == 0) throw error("empty graph has no degeneracy; pass -d");
    return std::max(1, degeneracy_ordering(g).first);
}

struct MethodRun {
    bool certified = false;
    Certificate cert;
    NotCertified neg;
};

// Shared by certify and batch. `orient` is excluded: it needs arc input.
MethodRun run_method(const Graph& g, const std::string& method, int k, int d_flag) {
    MethodRun r;
    auto take = [&r](CertifyOutcome&& out) {
        if (auto* c = std::get_if<Certificate>(&out)) {
            r.certified = true;
            r.cert = std::move(*c);
        } else {
            r.neg = std::move(std::get<NotCertified>(out));
        }
    };
    if (method == "1k") {
        if (k < 0) throw error("--method 1k requires -k");
        take(certify_1k(g, static_cast<uint32_t>(k), default_d(g, d_flag)));
    } else if (method == "almost12") {
        auto out = certify_almost_12(g, default_d(g, d_flag));
        if (auto* a = std::get_if<Almost12>(&out)) {
            r.certified = true;
            r.cert = std::move(a->cert);
        } else {
            r.neg = std::move(std::get<NotCertified>(out));
        }
    } else if (method == "prune12") {
        auto out = certify_12_supergraph(g, default_d(g, d_flag));
        if (auto* s = std::get_if<Supergraph12>(&out)) {
            r.certified = true;
            r.cert = std::move(s->cert);
        } else {
            r.neg = std::move(std::get<NotCertified>(out));
        }
    } else if (method == "d2") {
        take(certify_d2(g, default_d(g, d_flag)));
    } else if (method == "k2mad") {
        if (k < 0) throw error("--method k2mad requires -k");
        take(certify_k2_mad(g, k));
    } else {
        throw error("unknown method '" + method + "'");
    }
    return r;
}

int emit_outcome(const MethodRun& r, const std::string& out_path) {
    if (r.certified) {
        write_output(out_path, certificate_to_json(r.cert));
        return 0;
    }
    std::string msg = "not-certified: " + r.neg.reason + "\n";
    if (!r.neg.witness.empty()) {
        msg += "witness:";
        for (int v : r.neg.witness) msg += " " + std::to_string(v);
        msg += "\n";
    }
    std::cout << msg;
    return 2;
}

struct CertifyCfg {
    std::string input = "-", format = "edgelist", method, out = "-";
    int k = -1, d = -1;
};

int cmd_certify(const CertifyCfg& cfg) {
    std::string text = read_input(cfg.input);
    if (cfg.method == "orient") {
        if (cfg.format != "edgelist")
            throw error("--method orient reads a directed edgelist; graph6 carries no directions");
        auto [g, dir] = parse_digraph(text);
        Certificate c = certify_orientation(g, dir);
        write_output(cfg.out, certificate_to_json(c));
        return 0;
    }
    Graph g = parse_graph(text, parse_format(cfg.format));
    return emit_outcome(run_method(g, cfg.method, cfg.k, cfg.d), cfg.out);
}

struct SolveCfg {
    std::string input = "-", format = "edgelist", cert, lists, out = "-";
};

int cmd_solve(const SolveCfg& cfg) {
    Graph g = parse_graph(read_input(cfg.input), parse_format(cfg.format));
    Certificate c = certificate_from_json(read_input(cfg.cert));
    VerifyResult vr = verify_certificate(g, c);
    if (!vr.ok) throw error("certificate rejected: " + vr.reason);
    ListAssignment lists = lists_from_json(g, read_input(cfg.lists));

    bool big_enough = true;
    for (int v = 0; v < g.n; ++v)
        if (static_cast<int>(lists.vertices[static_cast<size_t>(v)].size()) <
            c.eta.vertices[static_cast<size_t>(v)] + 1)
            big_enough = false;
    for (int e = 0; e < g.m(); ++e)
        if (static_cast<int>(lists.edges[static_cast<size_t>(e)].size()) <
            c.eta.edges[static_cast<size_t>(e)] + 1)
            big_enough = false;

    auto w = find_weighting(g, lists, c.eta, big_enough);
    if (!w) {
        std::cout << "no-weighting\n";
        return 2;
    }
    if (!improper_edges(g, *w).empty()) throw internal_error("solver produced an improper weighting");
    write_output(cfg.out, weighting_to_json(*w));
    return 0;
}

struct VerifyCfg {
    std::string input = "-", format = "edgelist", cert, weighting, lists;
};

int cmd_verify(const VerifyCfg& cfg) {
    if (cfg.cert.empty() == cfg.weighting.empty())
        throw error("verify needs exactly one of --cert and --weighting");
    Graph g = parse_graph(read_input(cfg.input), parse_format(cfg.format));

    if (!cfg.cert.empty()) {
        Certificate c = certificate_from_json(read_input(cfg.cert));
        VerifyResult vr = verify_certificate(g, c);
        if (vr.ok) {
            std::cout << "certificate ok: method=" << c.method << " p=" << c.p
                      << " residue=" << c.residue << "\n";
            return 0;
        }
        std::cout << "certificate invalid: " << vr.reason << "\n";
        return 2;
    }

    Weighting w = weighting_from_json(read_input(cfg.weighting));
    if (static_cast<int>(w.vertices.size()) != g.n || static_cast<int>(w.edges.size()) != g.m())
        throw error("weighting shape does not match the graph");
    bool ok = true;
    std::vector<int> bad = improper_edges(g, w);
    if (!bad.empty()) {
        ok = false;
        std::cout << "improper edges:";
        for (int e : bad) std::cout << " " << e;
        std::cout << "\n";
    }
    if (!cfg.lists.empty()) {
        ListAssignment lists = lists_from_json(g, read_input(cfg.lists));
        auto in_list = [](const std::vector<rational>& l, const rational& x) {
            return std::find(l.begin(), l.end(), x) != l.end();
        };
        for (int v = 0; v < g.n; ++v)
            if (!in_list(lists.vertices[static_cast<size_t>(v)], w.vertices[static_cast<size_t>(v)])) {
                ok = false;
                std::cout << "vertex " << v << " weight outside its list\n";
            }
        for (int e = 0; e < g.m(); ++e)
            if (!in_list(lists.edges[static_cast<size_t>(e)], w.edges[static_cast<size_t>(e)])) {
                ok = false;
                std::cout << "edge " << e << " weight outside its list\n";
            }
    }
    if (!ok) return 2;
    std::cout << "weighting proper\n";
    return 0;
}

struct PermanentCfg {
    std::string input = "-", format = "edgelist", eta;
    int p = -1;
};

int cmd_permanent(const PermanentCfg& cfg) {
    Graph g = parse_graph(read_input(cfg.input), parse_format(cfg.format));
    IndexFunction eta;
    if (cfg.eta.empty()) {
        eta = zero_index_function(g);
        for (auto& x : eta.edges) x = 1;
    } else {
        nlohmann::json j = nlohmann::json::parse(read_input(cfg.eta), nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("vertices") || !j.contains("edges"))
            throw parse_error("eta file must be {\"vertices\": [...], \"edges\": [...]}");
        eta.vertices = j["vertices"].get<std::vector<int>>();
        eta.edges = j["edges"].get<std::vector<int>>();
    }
    if (!eta.valid_for(g))
        throw error("eta does not fit the graph (sizes, signs, or total != m)");
    DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
    IntMatrix M = assemble(A, eta);
    std::ostringstream out;
    out << "dim = " << M.dim << "\n";
    out << "per = " << permanent_exact(M).str() << "\n";
    if (cfg.p >= 0) {
        if (cfg.p < 2 || !is_prime_u32(static_cast<uint32_t>(cfg.p)))
            throw error("-p must be prime");
        out << "residue = " << permanent_mod(M, static_cast<uint32_t>(cfg.p)) << " (mod " << cfg.p
            << ")\n";
    }
    std::cout << out.str();
    return 0;
}

struct BatchCfg {
    int enum_n = -1;
    bool f_connected = false, f_nonbip = false, f_bip = false;
    int f_maxdegen = -1;
    int gen_count = -1, gen_n = 6, gen_d = 2, min_back = 0;
    uint64_t seed = 1;
    std::string method, out = "-";
    int k = -1, d = -1, jobs = 1;
    bool timing = false;
};

int cmd_batch(const BatchCfg& cfg) {
    if ((cfg.enum_n >= 0) == (cfg.gen_count >= 0))
        throw error("batch needs exactly one of --enum and --gen");
    if (cfg.method.empty()) throw error("batch requires --method");
    if (cfg.method == "orient") throw error("batch does not support --method orient");

    std::vector<Graph> items;
    if (cfg.enum_n >= 0) {
        auto pred = [&cfg](const Graph& g) {
            if (cfg.f_connected && !is_connected(g)) return false;
            if (cfg.f_nonbip && is_bipartite(g)) return false;
            if (cfg.f_bip && !is_bipartite(g)) return false;
            if (cfg.f_maxdegen >= 0 && degeneracy_ordering(g).first > cfg.f_maxdegen) return false;
            return true;
        };
        items = enumerate_labeled_graphs(cfg.enum_n, pred);
    } else {
        for (int i = 0; i < cfg.gen_count; ++i)
            items.push_back(gen_d_degenerate(cfg.gen_n, cfg.gen_d, cfg.seed + static_cast<uint64_t>(i),
                                             cfg.min_back)
                                .g);
    }

    struct Row {
        bool certified = false, failed = false;
        uint32_t residue = 0;
        long long wall_ms = 0;
    };
    std::vector<Row> rows(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            try {
                MethodRun r = run_method(items[i], cfg.method, cfg.k, cfg.d);
                rows[i].certified = r.certified;
                if (r.certified) rows[i].residue = r.cert.residue;
            } catch (const std::exception&) {
                rows[i].failed = true;
            }
            if (cfg.timing)
                rows[i].wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count();
        }
    };
    const int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "id,n,m,method,certified,residue,wall_ms\n";
    for (size_t i = 0; i < items.size(); ++i) {
        const Row& r = rows[i];
        csv << i << "," << items[i].n << "," << items[i].m() << "," << cfg.method << ",";
        if (r.failed)
            csv << "error,";
        else
            csv << (r.certified ? "1" : "0") << ",";
        if (r.certified) csv << r.residue;
        csv << "," << r.wall_ms << "\n";
    }
    write_output(cfg.out, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total weight choosability certificates"};
    app.require_subcommand(1);
    int max_dim = -1;
    app.add_option("--max-dim", max_dim, "permanent dimension cap (overrides TWCHOOSE_MAX_DIM)");

    CertifyCfg cc;
    auto* certify = app.add_subcommand("certify", "construct a certificate for a graph");
    certify->fallthrough();
    certify->add_option("input", cc.input, "graph file or - for stdin");
    certify->add_option("--format", cc.format, "graph6 or edgelist");
    certify->add_option("--method", cc.method, "1k, almost12, prune12, d2, orient, k2mad")
        ->required();
    certify->add_option("-k", cc.k, "modulus / out-degree bound, method dependent");
    certify->add_option("-d", cc.d, "degeneracy bound (default: computed)");
    certify->add_option("--out", cc.out, "certificate output path");

    SolveCfg sc;
    auto* solve = app.add_subcommand("solve", "solve a list assignment into a proper weighting");
    solve->fallthrough();
    solve->add_option("input", sc.input, "graph file or - for stdin");
    solve->add_option("--format", sc.format, "graph6 or edgelist");
    solve->add_option("--cert", sc.cert, "certificate JSON")->required();
    solve->add_option("--lists", sc.lists, "list assignment JSON")->required();
    solve->add_option("--out", sc.out, "weighting output path");

    VerifyCfg vc;
    auto* verify = app.add_subcommand("verify", "re-verify a certificate or weighting");
    verify->fallthrough();
    verify->add_option("input", vc.input, "graph file or - for stdin");
    verify->add_option("--format", vc.format, "graph6 or edgelist");
    verify->add_option("--cert", vc.cert, "certificate JSON");
    verify->add_option("--weighting", vc.weighting, "weighting JSON");
    verify->add_option("--lists", vc.lists, "optional list assignment to check membership");

    PermanentCfg pc;
    auto* permanent = app.add_subcommand("permanent", "permanent of the assembled matrix");
    permanent->fallthrough();
    permanent->add_option("input", pc.input, "graph file or - for stdin");
    permanent->add_option("--format", pc.format, "graph6 or edgelist");
    permanent->add_option("--eta", pc.eta, "index function JSON (default: 1 on every edge)");
    permanent->add_option("-p", pc.p, "also report the residue mod this prime");

    BatchCfg bc;
    auto* batch = app.add_subcommand("batch", "sweep a graph family, one CSV row per graph");
    batch->fallthrough();
    batch->add_option("--enum", bc.enum_n, "enumerate labeled graphs on this many vertices");
    batch->add_flag("--connected", bc.f_connected, "keep connected graphs only");
    batch->add_flag("--nonbipartite", bc.f_nonbip, "keep non-bipartite graphs only");
    batch->add_flag("--bipartite", bc.f_bip, "keep bipartite graphs only");
    batch->add_option("--max-degen", bc.f_maxdegen, "keep graphs with degeneracy at most this");
    batch->add_option("--gen", bc.gen_count, "generate this many random graphs");
    batch->add_option("--gen-n", bc.gen_n, "vertices per generated graph");
    batch->add_option("--gen-d", bc.gen_d, "degeneracy target for generated graphs");
    batch->add_option("--min-back", bc.min_back, "minimum back degree (1 keeps them connected)");
    batch->add_option("--seed", bc.seed, "base seed; item i uses seed+i");
    batch->add_option("--method", bc.method, "certification method")->required();
    batch->add_option("-k", bc.k, "modulus / out-degree bound, method dependent");
    batch->add_option("-d", bc.d, "degeneracy bound (default: computed per graph)");
    batch->add_option("--jobs", bc.jobs, "worker threads across items");
    batch->add_flag("--timing", bc.timing, "record real wall times (breaks rerun identity)");
    batch->add_option("--out", bc.out, "CSV output path");

    try {
        app.parse(argc, argv);
        if (max_dim > 0) twc::set_permanent_dim_cap(max_dim);
        if (certify->parsed()) return cmd_certify(cc);
        if (solve->parsed()) return cmd_solve(sc);
        if (verify->parsed()) return cmd_verify(vc);
        if (permanent->parsed()) return cmd_permanent(pc);
        if (batch->parsed()) return cmd_batch(bc);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const twc::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return 1;
    }
}
