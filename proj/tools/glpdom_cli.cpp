#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "glpdom/graph_io.hpp"
#include "glpdom/theorems.hpp"
#include "json.hpp"

using namespace glpdom;
using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit-code contract: 0 ok, 2 parse error, 3 guard breach, 4 theorem violation.
enum ExitCode { kOk = 0, kParseError = 2, kGuardBreach = 3, kViolation = 4 };

struct GraphInput {
    std::string g6;
    std::string edgelist_path;

    Graph load() const {
        if (!g6.empty()) return parse_graph6(g6);
        std::ifstream in(edgelist_path);
        if (!in) throw ParseError("cannot open " + edgelist_path, 0);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_edgelist(buf.str());
    }
    bool present() const { return !g6.empty() || !edgelist_path.empty(); }
};

void add_graph_flags(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--g6", in.g6, "graph6 string");
    cmd->add_option("--edgelist", in.edgelist_path, "edgelist file path");
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

void print_header(std::ostream& out, const std::string& command, std::uint64_t seed,
                  const Guards& guards, const std::string& flags) {
    out << "# glpdom " << kVersion << " command=" << command << " seed=" << seed
        << " guard-n=" << guards.subset << " guard-family=" << guards.family << " " << flags
        << "\n";
}

json witness_json(VertexSet s) {
    json arr = json::array();
    for (int v : vs_vertices(s)) arr.push_back(v);
    return arr;
}

std::vector<PoolEntry> load_pool(const std::string& spec) {
    if (spec == "default" || spec == "tiny" || spec == "contains-K1") return named_pool(spec);
    std::ifstream in(spec);
    if (!in) throw InvalidParameter("pool is neither a known name nor a readable file: " + spec);
    std::vector<PoolEntry> pool;
    std::string line;
    int idx = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        pool.push_back({"pool" + std::to_string(idx++), parse_graph6(line)});
    }
    if (pool.empty()) throw InvalidParameter("pool file contains no graphs");
    return pool;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (A,B)-domination computations on generalized lexicographic products"};
    app.require_subcommand(1);
    app.fallthrough();

    Guards guards = Guards::from_env();
    int guard_n = 0;
    app.add_option("--guard-n", guard_n, "override the subset-search guard");

    // compute
    auto* compute = app.add_subcommand("compute", "compute a domination parameter");
    GraphInput compute_in;
    add_graph_flags(compute, compute_in);
    std::string param_name = "gamma";
    bool upper = false;
    compute->add_option("--param", param_name, "parameter name (gamma, i, beta0, gamma_t, ...)");
    compute->add_flag("--upper", upper, "compute the upper variant");

    // product
    auto* product = app.add_subcommand("product", "build a generalized lexicographic product");
    std::string spec_path;
    product->add_option("--spec", spec_path, "JSON product spec file")->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "enumerate minimal or efficient families");
    GraphInput enum_in;
    add_graph_flags(enumerate, enum_in);
    std::string pair_spec;
    bool efficient = false;
    enumerate->add_option("--pair", pair_spec, "property pair A,B (e.g. all,all or total,all)");
    enumerate->add_flag("--efficient", efficient, "enumerate efficient dominating sets");

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem checkers over an instance space");
    std::string suite = "all", pool_spec = "default", out_path;
    SweepConfig sweep_cfg;
    verify->add_option("--suite", suite, "comma-separated theorem ids or 'all'");
    verify->add_option("--bmax", sweep_cfg.bmax, "max base order (exhaustive, connected)");
    verify->add_option("--fmax", sweep_cfg.fmax, "max factor order");
    verify->add_option("--samples", sweep_cfg.samples, "factor assignments per base");
    verify->add_option("--seed", sweep_cfg.seed, "sweep seed");
    verify->add_option("--jobs", sweep_cfg.jobs, "worker threads");
    verify->add_option("--pool", pool_spec, "factor pool name or graph6 file");
    verify->add_option("--out", out_path, "JSON-lines report path (default stdout)");

    // hunt
    auto* hunt_cmd = app.add_subcommand("hunt", "search open-problem instance spaces");
    HuntConfig hunt_cfg;
    std::string hunt_out;
    hunt_cmd->add_option("--target", hunt_cfg.target, "eff-gt-half or well-mu-glp:<param>")
        ->required();
    hunt_cmd->add_option("--budget", hunt_cfg.budget, "random instances to try");
    hunt_cmd->add_option("--seed", hunt_cfg.seed, "rng seed");
    hunt_cmd->add_option("--out", hunt_out, "JSON-lines report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }
    if (guard_n > 0) guards.subset = guard_n;

    try {
        if (compute->parsed()) {
            if (!compute_in.present()) {
                std::cerr << "compute: need --g6 or --edgelist\n";
                return kParseError;
            }
            Graph g = compute_in.load();
            ParamName pn = parse_param(param_name);
            ParamValue v = param(g, pn, upper, guards);
            json rec{{"param", param_name}, {"upper", upper || pn.upper}};
            if (v.value) {
                rec["value"] = *v.value;
                rec["witness"] = witness_json(v.witness);
                // every reported witness re-validates before output
                if (!is_minimal_ab_dominating(g, v.witness, pn.pair)) {
                    std::cerr << "internal error: witness failed re-validation\n";
                    return 1;
                }
            } else {
                rec["value"] = nullptr;
            }
            std::cout << rec << "\n";
            return kOk;
        }

        if (product->parsed()) {
            std::ifstream in(spec_path);
            if (!in) {
                std::cerr << "product: cannot open " << spec_path << "\n";
                return kParseError;
            }
            json spec = json::parse(in);
            auto load_graph = [](const json& obj) {
                return parse_graph(obj.at("data").get<std::string>(),
                                   parse_format(obj.at("format").get<std::string>()));
            };
            Graph base = load_graph(spec.at("base"));
            Factors fs;
            for (const json& f : spec.at("factors")) fs.push_back(load_graph(f));
            ProductGraph p = build_product(base, fs);
            std::cout << emit_graph6(p.graph) << "\n";
            return kOk;
        }

        if (enumerate->parsed()) {
            if (!enum_in.present()) {
                std::cerr << "enumerate: need --g6 or --edgelist\n";
                return kParseError;
            }
            Graph g = enum_in.load();
            if (efficient) {
                for (VertexSet s : enumerate_efficient(g, guards))
                    std::cout << json{{"set", witness_json(s)}} << "\n";
                return kOk;
            }
            auto comma = pair_spec.find(',');
            if (comma == std::string::npos) {
                std::cerr << "enumerate: --pair wants A,B\n";
                return kParseError;
            }
            PropertyPair pair{Property::parse(pair_spec.substr(0, comma)),
                              Property::parse(pair_spec.substr(comma + 1))};
            for (VertexSet s : enumerate_minimal(g, pair, guards)) {
                if (!is_minimal_ab_dominating(g, s, pair)) {
                    std::cerr << "internal error: set failed re-validation\n";
                    return 1;
                }
                std::cout << json{{"set", witness_json(s)}} << "\n";
            }
            return kOk;
        }

        if (verify->parsed()) {
            sweep_cfg.pool = load_pool(pool_spec);
            sweep_cfg.guards = guards;
            std::vector<TheoremId> ids;
            if (suite == "all") {
                ids = all_theorems();
            } else {
                std::stringstream ss(suite);
                std::string tok;
                while (std::getline(ss, tok, ',')) ids.push_back(parse_theorem(tok));
            }
            std::ofstream file;
            std::ostream& out = open_out(out_path, file);
            std::ostringstream flags;
            flags << "suite=" << suite << " bmax=" << sweep_cfg.bmax << " fmax=" << sweep_cfg.fmax
                  << " samples=" << sweep_cfg.samples << " pool=" << pool_spec
                  << " jobs=" << sweep_cfg.jobs;
            print_header(out, "verify", sweep_cfg.seed, guards, flags.str());
            long violations = 0;
            std::optional<SweepRecord> first;
            for (TheoremId id : ids) {
                SweepSummary s =
                    sweep(id, sweep_cfg, [&](const SweepRecord& rec) { out << rec.to_json() << "\n"; });
                out << json{{"summary", theorem_name(id)},
                            {"holds", s.holds},
                            {"violated", s.violated},
                            {"not_applicable", s.not_applicable}}
                    << "\n";
                violations += s.violated;
                if (!first && s.first_violation) first = s.first_violation;
            }
            if (violations > 0) {
                std::cerr << "violations: " << violations << "\n";
                if (first) std::cerr << "first witness: " << first->to_json() << "\n";
                return kViolation;
            }
            return kOk;
        }

        if (hunt_cmd->parsed()) {
            hunt_cfg.guards = guards;
            std::ofstream file;
            std::ostream& out = open_out(hunt_out, file);
            print_header(out, "hunt", hunt_cfg.seed, guards,
                         "target=" + hunt_cfg.target + " budget=" + std::to_string(hunt_cfg.budget));
            long finds = hunt(hunt_cfg, out);
            out << json{{"summary", hunt_cfg.target}, {"finds", finds}} << "\n";
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "guard breach: " << e.what() << "\n";
        return kGuardBreach;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}
