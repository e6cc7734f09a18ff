#include "cli.hpp"

#include "deficiency/bounds.hpp"
#include "deficiency/certificate.hpp"
#include "deficiency/constructions.hpp"
#include "deficiency/deficiency.hpp"
#include "deficiency/errors.hpp"
#include "deficiency/factor.hpp"
#include "deficiency/graph_io.hpp"
#include "deficiency/harness.hpp"
#include "deficiency/repair.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <optional>

namespace deficiency::cli {

namespace {

using nlohmann::json;

struct Globals {
    bool json = false;
    int threads = 1;
    std::uint64_t seed = 1;
    bool iso_dedup = false;
};

struct GraphInput {
    std::string file;
    std::string g6;

    Graph load() const
    {
        if (!file.empty() && !g6.empty()) throw InputError("give either --graph or --g6, not both");
        if (!file.empty()) return read_graph_file(file);
        if (!g6.empty()) return parse_graph6(g6);
        throw InputError("a graph is required (--graph FILE or --g6 STRING)");
    }

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--graph", file, "Graph file (graph6 or 'n' + 'u v' lines)");
        cmd->add_option("--g6", g6, "Graph as a graph6 string");
    }
};

void print_json(std::ostream& out, const json& j, bool pretty = true)
{
    out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

std::optional<Graph> pattern_from(const std::string& g6)
{
    if (g6.empty()) return std::nullopt;
    return parse_graph6(g6);
}

Graph h_family(const std::string& family, int n, int t, int s)
{
    const int total = n + t;
    if (family == "cycle") return cycle(total);
    if (family == "isolated-cycle") return disjoint_union(Graph(1), cycle(total - 1));
    if (family == "kss") {
        if (s < 1 || total % (2 * s) != 0) throw ParameterError("kss family needs 2s | n+t");
        return disjoint_copies(complete_bipartite(s, s), total / (2 * s));
    }
    throw InputError("unknown H family: " + family);
}

class Commands {
public:
    Commands(CLI::App& app, std::ostream& out) : out_(out)
    {
        // "--h" names the pattern graph, so help is long-form only
        app.set_help_flag("--help", "Print this help message and exit");
        app.add_flag("--json", g_.json, "Emit JSON");
        app.add_option("--threads", g_.threads, "Worker threads for sweeps (0 = all cores)")->check(CLI::NonNegativeNumber);
        app.add_option("--seed", g_.seed, "Seed for randomized checks");
        app.add_flag("--iso-dedup", g_.iso_dedup, "Sweep one graph per isomorphism class");
        app.require_subcommand(1);
        app.fallthrough();  // global flags may follow the subcommand

        add_construct(app);
        add_bound(app);
        add_factor(app);
        add_deficiency(app);
        add_verify(app);
        add_repair(app);
    }

    int result() const { return result_; }

private:
    void add_construct(CLI::App& app)
    {
        auto* cmd = app.add_subcommand("construct", "Build an extremal graph and print it as graph6");
        cmd->add_option("kind", c_kind_, "ex1 | ex2 | ex1band | ex2band | exh | exhprime")
            ->required()
            ->check(CLI::IsMember({"ex1", "ex2", "ex1band", "ex2band", "exh", "exhprime"}));
        cmd->add_option("--n", c_n_, "Vertices of G")->required();
        cmd->add_option("--t", c_t_, "Size of the joined clique")->required();
        cmd->add_option("--r", c_r_, "Clique size (ex1, ex2)");
        cmd->add_option("--s", c_s_, "Star size s for K_{1,s} (exhprime)");
        cmd->add_option("--h", c_h_, "Pattern H as graph6 (exh)");
        cmd->callback([this] {
            Graph g;
            if (c_kind_ == "ex1" || c_kind_ == "ex2") {
                const auto p = RFactorParams::make(c_n_, c_t_, c_r_);
                g = c_kind_ == "ex1" ? ex1_factor(p) : ex2_factor(p);
            } else if (c_kind_ == "ex1band") {
                g = ex1_band(c_n_, c_t_);
            } else if (c_kind_ == "ex2band") {
                g = ex2_band(c_n_, c_t_);
            } else if (c_kind_ == "exh") {
                auto h = pattern_from(c_h_);
                if (!h) throw InputError("exh needs --h");
                g = ex_h(c_n_, c_t_, *h);
            } else {
                g = ex_h_prime(c_n_, c_t_, c_s_);
            }
            if (g_.json)
                print_json(out_, {{"kind", c_kind_}, {"graph6", emit_graph6(g)}, {"n", g.order()}, {"edges", g.edge_count()}});
            else
                out_ << emit_graph6(g) << '\n';
        });
    }

    void add_bound(CLI::App& app)
    {
        auto* cmd = app.add_subcommand("bound", "Evaluate an edge bound");
        cmd->add_option("kind", b_kind_, "kr | triangle | hamilton | bandwidth")
            ->required()
            ->check(CLI::IsMember({"kr", "triangle", "hamilton", "bandwidth"}));
        cmd->add_option("--n", b_n_)->required();
        cmd->add_option("--t", b_t_)->required();
        cmd->add_option("--r", b_r_, "Clique size (kr)");
        cmd->add_option("--eps", b_eps_, "Slack epsilon as p/q or decimal (bandwidth)");
        cmd->callback([this] {
            json j;
            if (b_kind_ == "kr") {
                j = kr_bound(RFactorParams::make(static_cast<int>(b_n_), static_cast<int>(b_t_), b_r_));
            } else if (b_kind_ == "triangle") {
                j = triangle_bound(b_n_, b_t_);
            } else if (b_kind_ == "hamilton") {
                j = hamilton_bound(b_n_, b_t_);
            } else {
                j = bandwidth_bound(b_n_, b_t_, parse_rational(b_eps_));
            }
            j["bound"] = b_kind_;
            j["n"] = b_n_;
            j["t"] = b_t_;
            print_json(out_, j, !g_.json);
        });
    }

    void add_factor(CLI::App& app)
    {
        auto* cmd = app.add_subcommand("factor", "Search G*K_t for a K_r-factor, H-factor or Hamilton cycle");
        f_graph_.attach(cmd);
        cmd->add_option("--r", f_r_, "Clique size");
        cmd->add_option("--h", f_h_, "Pattern H as graph6 for an H-factor");
        cmd->add_flag("--hamilton", f_ham_, "Look for a Hamilton cycle");
        cmd->add_option("--t", f_t_, "Join with K_t first")->check(CLI::NonNegativeNumber);
        cmd->callback([this] {
            const Graph g = join(f_graph_.load(), f_t_);
            const int modes = (f_r_ > 0) + (!f_h_.empty()) + (f_ham_ ? 1 : 0);
            if (modes != 1) throw InputError("factor needs exactly one of --r, --h, --hamilton");
            std::optional<FactorCertificate> cert;
            Validation check;
            if (f_r_ > 0) {
                cert = kr_factor(g, f_r_);
                if (cert) check = validate_kr_factor(g, f_r_, *cert);
            } else if (!f_h_.empty()) {
                const Graph h = parse_graph6(f_h_);
                cert = h_factor(g, h);
                if (cert) check = validate_h_factor(g, h, *cert);
            } else {
                cert = g.order() >= 3 ? hamilton_cycle(g) : std::nullopt;
                if (cert) check = validate_hamilton_cycle(g, *cert);
            }
            if (cert && !check) throw ContractError("solver returned an invalid certificate: " + check.reason);
            if (g_.json) {
                json j{{"found", cert.has_value()}, {"n", g.order()}, {"t", f_t_}};
                if (cert) j["certificate"] = *cert;
                print_json(out_, j);
            } else if (!cert) {
                out_ << "none\n";
            } else {
                for (const auto& tile : cert->tiles) {
                    for (std::size_t i = 0; i < tile.size(); ++i) out_ << (i ? " " : "") << tile[i];
                    out_ << '\n';
                }
            }
        });
    }

    void add_deficiency(CLI::App& app)
    {
        auto* cmd = app.add_subcommand("deficiency", "Smallest t such that G*K_t has the property");
        d_graph_.attach(cmd);
        cmd->add_option("--property", d_prop_, "kr | ham | h")->required()->check(CLI::IsMember({"kr", "ham", "h"}));
        cmd->add_option("--r", d_r_, "Clique size (kr)");
        cmd->add_option("--h", d_h_, "Pattern H as graph6 (h)");
        cmd->add_option("--tcap", d_cap_, "Scan limit for t")->check(CLI::NonNegativeNumber);
        cmd->callback([this] {
            DeficiencyQuery q;
            q.graph = d_graph_.load();
            if (d_prop_ == "kr") {
                q.property = KrFactor{d_r_};
            } else if (d_prop_ == "h") {
                auto h = pattern_from(d_h_);
                if (!h) throw InputError("--property h needs --h");
                q.property = HFactor{*h};
            } else {
                q.property = Hamiltonicity{};
            }
            if (d_cap_ >= 0) q.t_cap = d_cap_;
            const int value = deficiency(q);
            if (g_.json)
                print_json(out_, {{"property", d_prop_}, {"n", q.graph.order()}, {"deficiency", value}});
            else
                out_ << value << '\n';
        });
    }

    void add_verify(CLI::App& app)
    {
        auto* cmd = app.add_subcommand("verify", "Run an exhaustive verification sweep (JSON report)");
        cmd->require_subcommand(1);

        auto* kr = cmd->add_subcommand("kr", "Edge bound for K_r-factors in G*K_t");
        kr->add_option("--nmax", v_nmax_)->required();
        kr->add_option("--r", v_r_)->required();
        kr->callback([this] { emit(verify_kr_bound(v_nmax_, v_r_, sweep())); });

        auto* ham = cmd->add_subcommand("hamilton", "Edge bound for Hamilton cycles in G*K_t");
        ham->add_option("--nmax", v_nmax_)->required();
        ham->callback([this] { emit(verify_hamilton_bound(v_nmax_, sweep())); });

        auto* hc = cmd->add_subcommand("hclasses", "No copy of H_1/H_2 members in the bandwidth constructions");
        hc->add_option("--n", v_n_)->required();
        hc->add_option("--t", v_t_)->required();
        hc->add_option("--h", v_h_, "H as graph6");
        hc->add_option("--family", v_family_, "cycle | isolated-cycle | kss");
        hc->add_option("--s", v_s_, "Part size for kss");
        hc->callback([this] {
            Graph h;
            if (!v_h_.empty())
                h = parse_graph6(v_h_);
            else if (!v_family_.empty())
                h = h_family(v_family_, v_n_, v_t_, v_s_);
            else
                throw InputError("hclasses needs --h or --family");
            emit(verify_h_classes(v_n_, v_t_, h));
        });

        auto* lemma = cmd->add_subcommand("step-inequality", "Integer sweep of the EX_2 step inequality");
        lemma->alias("lemma43");
        lemma->add_option("--nmax", v_nmax_)->required();
        lemma->add_option("--rmax", v_rmax_)->required();
        lemma->callback([this] { emit(verify_step_inequality(v_nmax_, v_rmax_)); });

        auto* rep = cmd->add_subcommand("repair", "Randomized soundness check of both rewiring procedures");
        rep->add_option("--samples", rp_.samples, "Instances per procedure");
        rep->add_option("--nmax", rp_.n_max);
        rep->add_option("--tmax", rp_.t_max);
        rep->add_option("--r", rp_.r);
        rep->callback([this] {
            rp_.seed = g_.seed;
            emit(verify_repair(rp_));
        });
    }

    void add_repair(CLI::App& app)
    {
        auto* cmd = app.add_subcommand("repair", "Apply a rewiring procedure to one instance");
        cmd->require_subcommand(1);

        auto* vertex = cmd->add_subcommand("vertex", "Saturate v, solve G'*K_t, rewire into G*K_t");
        r_graph_.attach(vertex);
        vertex->add_option("--t", r_t_)->required();
        vertex->add_option("--r", r_r_)->required();
        vertex->add_option("--v", r_v_)->required();
        vertex->callback([this] {
            const Graph g = r_graph_.load();
            const Graph saturated = saturate_vertex(g, r_v_);
            json j{{"saturated_graph6", emit_graph6(saturated)}};
            const auto factor = kr_factor(join(saturated, r_t_), r_r_);
            j["factor_found"] = factor.has_value();
            if (factor) {
                const auto out = rewire_factor_vertex(g, r_t_, r_v_, *factor);
                j["input_factor"] = *factor;
                j["case"] = to_string(out.used);
                j["factor"] = out.factor;
                j["valid"] = static_cast<bool>(validate_kr_factor(join(g, r_t_), r_r_, out.factor));
            }
            print_json(out_, j);
        });

        auto* edge = cmd->add_subcommand("edge", "Clique transform at edge xy, solve G'*K_t, rewire");
        r_graph_.attach(edge);
        edge->add_option("--t", r_t_)->required();
        edge->add_option("--r", r_r_)->required();
        edge->add_option("--x", r_x_)->required();
        edge->add_option("--y", r_y_)->required();
        edge->callback([this] {
            const Graph g = r_graph_.load();
            auto [g_prime, ctx] = edge_clique_transform(g, r_x_, r_y_, r_r_);
            json j{{"transformed_graph6", emit_graph6(g_prime)},
                   {"q", ctx.q},
                   {"ell", ctx.ell},
                   {"edges_before", g.edge_count()},
                   {"edges_after", g_prime.edge_count()}};
            const auto factor = kr_factor(join(g_prime, r_t_), r_r_);
            j["factor_found"] = factor.has_value();
            if (factor) {
                const auto out = rewire_factor_clique(g_prime, r_t_, ctx, *factor);
                j["input_factor"] = *factor;
                j["factor"] = out;
                json f = json::object();
                for (auto [a, b] : ctx.injection) f[std::to_string(a)] = b;
                j["injection"] = f;
                j["valid"] = static_cast<bool>(validate_kr_factor(join(g, r_t_), r_r_, out));
            }
            print_json(out_, j);
        });
    }

    SweepOptions sweep() const { return {g_.threads, g_.iso_dedup}; }

    void emit(VerificationReport report)
    {
        print_json(out_, report, !g_.json);
        result_ = report.pass() ? kOk : kFail;
    }

    std::ostream& out_;
    Globals g_;
    int result_ = kOk;

    std::string c_kind_;
    int c_n_ = 0, c_t_ = 0, c_r_ = 3, c_s_ = 2;
    std::string c_h_;

    std::string b_kind_;
    std::int64_t b_n_ = 0, b_t_ = 0;
    int b_r_ = 3;
    std::string b_eps_ = "1/100";

    GraphInput f_graph_;
    int f_r_ = 0, f_t_ = 0;
    std::string f_h_;
    bool f_ham_ = false;

    GraphInput d_graph_;
    std::string d_prop_, d_h_;
    int d_r_ = 3, d_cap_ = -1;

    int v_nmax_ = 0, v_r_ = 3, v_n_ = 0, v_t_ = 0, v_rmax_ = 3, v_s_ = 2;
    std::string v_h_, v_family_;
    RepairSweepOptions rp_;

    GraphInput r_graph_;
    int r_t_ = 0, r_r_ = 3, r_v_ = 0, r_x_ = 0, r_y_ = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact deficiency solvers, extremal constructions and verification sweeps"};
    app.name("defcheck");
    Commands commands(app, out);

    std::vector<std::string> storage{"defcheck"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError& e) {
        err << "contract violation: " << e.what() << '\n';
        return kContract;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << '\n';
        return kUsage;
    } catch (const SizeError& e) {
        err << "size limit: " << e.what() << '\n';
        return kUsage;
    }
    return commands.result();
}

}  // namespace deficiency::cli
