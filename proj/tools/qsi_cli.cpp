#include "CLI11.hpp"

#include "qsi/conjectures.hpp"
#include "qsi/errors.hpp"
#include "qsi/flag.hpp"
#include "qsi/json_io.hpp"
#include "qsi/partition.hpp"
#include "qsi/quiver.hpp"
#include "qsi/rep.hpp"
#include "qsi/si.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qsi;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDomain = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QSI_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "warning: ignoring malformed QSI_SEED\n";
    }
    return 1;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        vals.push_back(std::stoll(item));
    }
    return vals;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

// quiver file, either a bare quiver or an instance carrying alpha/beta
struct QuiverInput {
    Quiver quiver;
    std::optional<VertexMap> alpha;
    std::optional<VertexMap> beta;
};

QuiverInput load_quiver_input(const std::string& path) {
    const json j = load_json_file(path);
    if (j.contains("quiver")) {
        QuiverInput in{quiver_from_json(j.at("quiver")), std::nullopt, std::nullopt};
        if (j.contains("alpha")) in.alpha = vertex_map_from_json(j.at("alpha"));
        if (j.contains("beta")) in.beta = vertex_map_from_json(j.at("beta"));
        return in;
    }
    return QuiverInput{quiver_from_json(j), std::nullopt, std::nullopt};
}

VertexMap map_from_list(const Quiver& q, const std::vector<long long>& vals,
                        const std::string& what) {
    if (vals.size() != q.vertices().size())
        throw std::invalid_argument(what + " needs one entry per vertex (" +
                                    std::to_string(q.vertices().size()) + ")");
    VertexMap m;
    for (size_t i = 0; i < vals.size(); ++i) m[q.vertices()[i]] = vals[i];
    return m;
}

// file beats flag, with a warning on conflict
VertexMap resolve_map(const Quiver& q, const std::optional<VertexMap>& from_file,
                      const std::string& flag_value, const std::string& what) {
    std::optional<VertexMap> from_flag;
    if (!flag_value.empty()) from_flag = map_from_list(q, parse_int_list(flag_value), what);
    if (from_file) {
        if (from_flag && !(*from_flag == *from_file))
            std::cerr << "warning: " << what << " given both in the file and on the command line; "
                      << "using the file\n";
        return *from_file;
    }
    if (from_flag) return *from_flag;
    throw std::invalid_argument(what + " is required (flag or file)");
}

int run_lr(const std::string& lam, const std::string& mu, const std::string& nu, int n,
           const std::string& format) {
    const Partition l = parse_partition(lam), m = parse_partition(mu), v = parse_partition(nu);
    const long long value = stretched_lr(l, m, v, n);
    if (format == "json") {
        json out{{"lam", partition_to_json(l)}, {"mu", partition_to_json(m)},
                 {"nu", partition_to_json(v)},  {"n", n},
                 {"value", value}};
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n" << n << "," << value << "\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

int run_si(const std::string& file, const std::string& alpha_flag, const std::string& beta_flag,
           int stretch, bool oracle, int samples, std::uint64_t seed, const std::string& format) {
    const QuiverInput in = load_quiver_input(file);
    const VertexMap alpha = resolve_map(in.quiver, in.alpha, alpha_flag, "alpha");
    const VertexMap beta = resolve_map(in.quiver, in.beta, beta_flag, "beta");

    StretchTable table;
    std::vector<long long> oracle_values;
    std::vector<bool> agree;
    if (oracle) {
        StretchCrossCheck cc = stretch_function_checked(in.quiver, alpha, beta, stretch, seed);
        table = std::move(cc.table);
        oracle_values = std::move(cc.oracle_values);
        agree = std::move(cc.agree);
        (void)samples;
    } else {
        table = stretch_function(in.quiver, alpha, beta, stretch);
    }

    if (format == "json") {
        json out{{"alpha", vertex_map_to_json(alpha)},
                 {"beta", vertex_map_to_json(beta)},
                 {"values", table.values}};
        if (oracle) {
            out["oracle"] = oracle_values;
            out["agree"] = agree;
        }
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,value" << (oracle ? ",oracle,agree" : "") << "\n";
        for (int n = 1; n <= table.max_n(); ++n) {
            std::cout << n << "," << table.at(n);
            if (oracle)
                std::cout << "," << oracle_values[n - 1] << "," << (agree[n - 1] ? "yes" : "no");
            std::cout << "\n";
        }
    } else {
        for (int n = 1; n <= table.max_n(); ++n)
            std::cout << (n > 1 ? " " : "") << table.at(n);
        std::cout << "\n";
        if (oracle) {
            std::cout << "oracle:";
            for (long long v : oracle_values) std::cout << " " << v;
            std::cout << "\nagree:";
            for (bool a : agree) std::cout << " " << (a ? "yes" : "no");
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_translate(const std::string& file, int n, const std::string& format) {
    const FlagProblem fp = flag_problem_from_json(load_json_file(file));
    const TranslationReport report = verify_translation(fp, n);
    if (format == "json") {
        json out{{"n", n},
                 {"quiver_dim", report.quiver_dim},
                 {"tensor_dim", report.tensor_dim},
                 {"equal", report.equal}};
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,quiver_dim,tensor_dim,equal\n"
                  << n << "," << report.quiver_dim << "," << report.tensor_dim << ","
                  << (report.equal ? "yes" : "no") << "\n";
    } else {
        std::cout << report.quiver_dim << " " << report.tensor_dim << " "
                  << (report.equal ? "equal" : "DIFFER") << "\n";
    }
    return report.equal ? kExitOk : kExitDomain;
}

int run_search(int vertex_bound, int dim_bound, int max_n, std::uint64_t seed) {
    const auto witnesses = search_ktt_witnesses(vertex_bound, dim_bound, max_n, seed);
    for (const KttWitness& w : witnesses) {
        json line{{"quiver", quiver_to_json(w.quiver)},
                  {"alpha", vertex_map_to_json(w.alpha)},
                  {"beta", vertex_map_to_json(w.beta)},
                  {"table", w.table.values},
                  {"ktt_holds", w.ktt_holds},
                  {"oracle_agrees", w.oracle_agrees}};
        std::cout << line.dump() << "\n";
    }
    bool violation = false;
    for (const KttWitness& w : witnesses) violation = violation || !w.ktt_holds;
    if (violation) {
        std::cerr << "CRITICAL: a stretch table with value 2 at n=1 broke the n+1 law\n";
        return kExitDomain;
    }
    return kExitOk;
}

int run_ext_descent(const std::string& file, const std::string& alpha_flag,
                    const std::string& beta_flag, int trials, std::uint64_t seed,
                    const std::string& format) {
    const QuiverInput in = load_quiver_input(file);
    const VertexMap alpha = resolve_map(in.quiver, in.alpha, alpha_flag, "alpha");
    const VertexMap beta = resolve_map(in.quiver, in.beta, beta_flag, "beta");
    const ExtDescentReport report = check_ext_descent(in.quiver, alpha, beta, trials, seed);
    if (format == "json") {
        json out{{"hom_vw", report.hom_vw},   {"gamma", vertex_map_to_json(report.gamma)},
                 {"ext_vw", report.ext_vw},   {"ext_sw", report.ext_sw},
                 {"equal", report.equal},     {"trivial", report.trivial},
                 {"generic_found", report.generic_found}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "hom(V,W) = " << report.hom_vw << "\n";
        std::cout << "ext(V,W) = " << report.ext_vw << ", ext(S,W) = " << report.ext_sw << " ("
                  << (report.equal ? "equal" : "DIFFER") << (report.trivial ? ", trivial" : "")
                  << ")\n";
    }
    return kExitOk;
}

int run_semistable(const std::string& file, const std::string& alpha_flag,
                   const std::string& sigma_flag, const std::string& beta_flag, bool stable,
                   int trials, std::uint64_t seed, const std::string& format) {
    const QuiverInput in = load_quiver_input(file);
    const VertexMap alpha = resolve_map(in.quiver, in.alpha, alpha_flag, "alpha");
    VertexMap sigma;
    if (!sigma_flag.empty()) {
        sigma = map_from_list(in.quiver, parse_int_list(sigma_flag), "sigma");
    } else {
        const VertexMap beta = resolve_map(in.quiver, in.beta, beta_flag, "beta");
        sigma = sigma_beta(in.quiver, beta);
    }
    const bool result = stable ? is_generically_stable(in.quiver, alpha, sigma, trials, seed)
                               : is_generically_semistable(in.quiver, alpha, sigma, trials, seed);
    if (format == "json") {
        json out{{"alpha", vertex_map_to_json(alpha)},
                 {"sigma", vertex_map_to_json(sigma)},
                 {stable ? "stable" : "semistable", result}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (result ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-invariants of acyclic quivers and stretched tensor invariants"};
    app.require_subcommand(1);

    std::string format = "table";
    std::uint64_t seed = default_seed();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "RNG seed (default: QSI_SEED or 1)");

    auto* lr = app.add_subcommand("lr", "stretched Littlewood-Richardson coefficient");
    std::string lam, mu, nu;
    int lr_n = 1;
    lr->add_option("--lam", lam, "first partition, e.g. 2,1")->required();
    lr->add_option("--mu", mu, "second partition")->required();
    lr->add_option("--nu", nu, "outer partition")->required();
    lr->add_option("--n", lr_n, "stretch factor")->check(CLI::PositiveNumber);

    auto* si = app.add_subcommand("si", "semi-invariant stretch table of a quiver");
    std::string si_file, si_alpha, si_beta;
    int si_stretch = 1, si_samples = 0;
    bool si_oracle = false;
    si->add_option("--quiver", si_file, "quiver or instance JSON file")->required();
    si->add_option("--alpha", si_alpha, "dimension vector, file vertex order");
    si->add_option("--beta", si_beta, "dimension vector defining the weight");
    si->add_option("--stretch", si_stretch, "table length N")->check(CLI::PositiveNumber);
    si->add_flag("--oracle", si_oracle, "cross-check with the evaluation oracle");
    si->add_option("--samples", si_samples, "initial oracle sample count");

    auto* translate = app.add_subcommand("translate", "tensor invariants vs flag quiver");
    std::string tr_file;
    int tr_n = 1;
    translate->add_option("--file", tr_file, "flag problem JSON file")->required();
    translate->add_option("--n", tr_n, "stretch factor")->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "search for stretch tables starting at 2");
    int sb_vertices = 3, sb_dim = 2, sb_n = 5;
    search->add_option("--vertex-bound", sb_vertices, "max vertices")->check(CLI::PositiveNumber);
    search->add_option("--dim-bound", sb_dim, "max dimension entry")->check(CLI::PositiveNumber);
    search->add_option("--max-n", sb_n, "table length")->check(CLI::PositiveNumber);

    auto* extd = app.add_subcommand("ext-descent", "kernel descent of Ext on random pairs");
    std::string ed_file, ed_alpha, ed_beta;
    int ed_trials = 20;
    extd->add_option("--quiver", ed_file, "quiver or instance JSON file")->required();
    extd->add_option("--alpha", ed_alpha, "dimension vector");
    extd->add_option("--beta", ed_beta, "dimension vector");
    extd->add_option("--trials", ed_trials, "morphism samples")->check(CLI::PositiveNumber);

    auto* semi = app.add_subcommand("semistable", "generic semistability against a weight");
    std::string ss_file, ss_alpha, ss_sigma, ss_beta;
    int ss_trials = 20;
    bool ss_stable = false;
    semi->add_option("--quiver", ss_file, "quiver or instance JSON file")->required();
    semi->add_option("--alpha", ss_alpha, "dimension vector");
    semi->add_option("--sigma", ss_sigma, "weight, file vertex order");
    semi->add_option("--beta", ss_beta, "dimension vector standing in for sigma_beta");
    semi->add_flag("--stable", ss_stable, "require strict inequalities");
    semi->add_option("--trials", ss_trials, "sampling trials")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(lr)) return run_lr(lam, mu, nu, lr_n, format);
        if (app.got_subcommand(si))
            return run_si(si_file, si_alpha, si_beta, si_stretch, si_oracle, si_samples, seed,
                          format);
        if (app.got_subcommand(translate)) return run_translate(tr_file, tr_n, format);
        if (app.got_subcommand(search)) return run_search(sb_vertices, sb_dim, sb_n, seed);
        if (app.got_subcommand(extd))
            return run_ext_descent(ed_file, ed_alpha, ed_beta, ed_trials, seed, format);
        if (app.got_subcommand(semi))
            return run_semistable(ss_file, ss_alpha, ss_sigma, ss_beta, ss_stable, ss_trials,
                                  seed, format);
    } catch (const NotOrthogonal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const WeightNotOrthogonal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const InsufficientData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
