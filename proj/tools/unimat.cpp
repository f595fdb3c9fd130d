// unimat: command-line front end for the exact completion library.
// Every subcommand is a thin wrapper over a library call; exit codes are
// 0 success / domain-true, 1 domain failure, 2 usage or parse error,
// 3 restart cap reached.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unimat/bounds.hpp"
#include "unimat/completion.hpp"
#include "unimat/exact_linalg.hpp"
#include "unimat/experiments.hpp"
#include "unimat/int_mat.hpp"
#include "unimat/primitivity.hpp"

namespace {

using namespace unimat;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << text;
}

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Int parse_big(const std::string& tok, const char* what) {
    std::size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (start == tok.size()) throw ParseError(std::string(what) + ": bad integer");
    for (std::size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError(std::string(what) + ": bad integer '" + tok + "'");
    return Int(tok);
}

std::vector<ExperimentConfig> load_config_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<ExperimentConfig> configs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string n, k, s, lambda, trials, seed, extra;
        if (!(ls >> n)) continue;  // blank line
        if (n[0] == '#') continue;
        if (!(ls >> k >> s >> lambda >> trials >> seed) || (ls >> extra))
            throw ParseError("config line " + std::to_string(lineno) +
                             ": expected 'n k s lambda trials seed'");
        ExperimentConfig cfg;
        cfg.n = static_cast<int>(parse_big(n, "n").get_si());
        cfg.k = static_cast<int>(parse_big(k, "k").get_si());
        cfg.s = static_cast<int>(parse_big(s, "s").get_si());
        cfg.lambda = parse_big(lambda, "lambda");
        Int t = parse_big(trials, "trials");
        if (t < 1 || !t.fits_ulong_p())
            throw ParseError("config line " + std::to_string(lineno) + ": bad trials");
        cfg.trials = t.get_ui();
        Int sd = parse_big(seed, "seed");
        if (sd < 0) throw ParseError("config line " + std::to_string(lineno) + ": bad seed");
        cfg.seed = static_cast<std::uint64_t>(sd.get_ui());
        configs.push_back(std::move(cfg));
    }
    if (configs.empty()) throw ParseError("config file has no configurations");
    return configs;
}

template <typename T>
T broadcast_at(const std::vector<T>& v, std::size_t i, const char* name, std::size_t total) {
    if (v.size() == 1) return v[0];
    if (v.size() != total)
        throw ParseError(std::string("--") + name + " must appear once or once per config");
    return v[i];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact primitive-matrix toolkit: unimodular completion, "
                 "primitivity bounds, Monte-Carlo rates"};
    app.require_subcommand(1);

    std::string matrix_path, out_path, config_path, format_name = "csv";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int arg_n = 0, arg_k = 0, arg_s = 0;
    std::string arg_lambda;
    std::vector<int> exp_n, exp_k, exp_s;
    std::vector<std::string> exp_lambda;
    std::vector<unsigned long> exp_trials;
    std::vector<std::uint64_t> exp_seed;
    bool all_ones = false, fresh_base = false;
    unsigned threads = 0;

    auto* c_check = app.add_subcommand("check", "decide primitivity of a matrix file");
    c_check->add_option("matrix", matrix_path)->required();

    auto* c_complete = app.add_subcommand("complete", "complete a primitive k x n matrix "
                                          "to an n x n unimodular matrix");
    c_complete->add_option("matrix", matrix_path)->required();
    c_complete->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    c_complete->add_option("--out", out_path);

    auto* c_detred = app.add_subcommand("detred", "determinant reduction of a nonsingular "
                                        "square matrix");
    c_detred->add_option("matrix", matrix_path)->required();
    c_detred->add_option("--out", out_path);

    auto* c_hnf = app.add_subcommand("hnf", "Hermite normal form");
    c_hnf->add_option("matrix", matrix_path)->required();

    auto* c_det = app.add_subcommand("det", "exact determinant");
    c_det->add_option("matrix", matrix_path)->required();

    auto* c_bound = app.add_subcommand("bound", "closed-form lower bound on the "
                                       "primitivity probability");
    c_bound->add_option("--n", arg_n)->required();
    c_bound->add_option("--k", arg_k)->required();
    c_bound->add_option("--s", arg_s)->required();
    c_bound->add_option("--lambda", arg_lambda)->required();

    auto* c_limit = app.add_subcommand("limit-prob", "zeta-product limit probability");
    c_limit->add_option("--n", arg_n)->required();
    c_limit->add_option("--s", arg_s)->required();

    auto* c_exp = app.add_subcommand("experiment", "Monte-Carlo primitivity rates");
    c_exp->add_option("--config", config_path, "file with one 'n k s lambda trials seed' per line");
    c_exp->add_option("--n", exp_n);
    c_exp->add_option("--k", exp_k);
    c_exp->add_option("--s", exp_s);
    c_exp->add_option("--lambda", exp_lambda);
    c_exp->add_option("--trials", exp_trials);
    c_exp->add_option("--seed", exp_seed);
    c_exp->add_flag("--all-ones-base", all_ones, "use the fixed (1,...,1) base row (k = 1)");
    c_exp->add_flag("--fresh-base-per-trial", fresh_base);
    c_exp->add_option("--format", format_name)->check(CLI::IsMember({"csv", "markdown"}));
    c_exp->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_check->parsed()) {
            bool ok = is_primitive(parse_matrix(read_file(matrix_path)));
            std::cout << (ok ? "primitive" : "not primitive") << "\n";
            return ok ? 0 : 1;
        }
        if (c_complete->parsed()) {
            if (!seed_given) seed = entropy_seed();
            std::cerr << "seed: " << seed << "\n";
            CompletionResult res =
                complete_unimodular(parse_matrix(read_file(matrix_path)), RngSpec{seed});
            std::cerr << "restarts: " << res.restarts
                      << "\nmax_norm: " << max_norm(res.U).get_str() << "\n";
            write_output(out_path, serialize_matrix(res.U));
            return 0;
        }
        if (c_detred->parsed()) {
            write_output(out_path,
                         serialize_matrix(determinant_reduce(parse_matrix(read_file(matrix_path)))));
            return 0;
        }
        if (c_hnf->parsed()) {
            std::cout << serialize_matrix(hnf(parse_matrix(read_file(matrix_path))).H);
            return 0;
        }
        if (c_det->parsed()) {
            std::cout << det(parse_matrix(read_file(matrix_path))).get_str() << "\n";
            return 0;
        }
        if (c_bound->parsed()) {
            Rat v = theorem1_bound({arg_n, arg_k, arg_s, parse_big(arg_lambda, "lambda")});
            std::cout << rat_to_decimal(v, 4) << "\n"
                      << "exact: " << v.get_num().get_str() << "/" << v.get_den().get_str()
                      << "\n";
            return 0;
        }
        if (c_limit->parsed()) {
            long double v = limit_probability(arg_n, arg_s);
            std::cout << real_to_decimal(v, 4, Rounding::trunc) << "\n";
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12Lg", v);
            std::cout << "value: " << buf << "\n";
            return 0;
        }
        if (c_exp->parsed()) {
            bool have_flags = !exp_n.empty() || !exp_k.empty() || !exp_s.empty() ||
                              !exp_lambda.empty() || !exp_trials.empty() || !exp_seed.empty();
            if (!config_path.empty() && have_flags) {
                std::cerr << "error: --config and flag-group configs are mutually exclusive\n";
                return 2;
            }
            std::vector<ExperimentConfig> configs;
            if (!config_path.empty()) {
                configs = load_config_file(config_path);
            } else {
                if (exp_n.empty()) {
                    std::cerr << "error: experiment needs --config or at least --n\n";
                    return 2;
                }
                std::size_t count = exp_n.size();
                if (exp_seed.empty()) {
                    exp_seed.push_back(entropy_seed());
                    std::cerr << "seed: " << exp_seed[0] << "\n";
                }
                if (exp_k.empty()) exp_k.push_back(0);
                if (exp_s.empty()) exp_s.push_back(3);
                if (exp_lambda.empty()) exp_lambda.push_back("100000");
                if (exp_trials.empty()) exp_trials.push_back(10000);
                for (std::size_t i = 0; i < count; ++i) {
                    ExperimentConfig cfg;
                    cfg.n = exp_n[i];
                    cfg.k = broadcast_at(exp_k, i, "k", count);
                    cfg.s = broadcast_at(exp_s, i, "s", count);
                    cfg.lambda = parse_big(broadcast_at(exp_lambda, i, "lambda", count), "lambda");
                    cfg.trials = broadcast_at(exp_trials, i, "trials", count);
                    cfg.seed = broadcast_at(exp_seed, i, "seed", count);
                    cfg.base_mode = all_ones ? BaseMode::fixed_all_ones : BaseMode::random_signed;
                    cfg.fresh_base_per_trial = fresh_base;
                    configs.push_back(std::move(cfg));
                }
            }
            TableFormat fmt = format_name == "csv" ? TableFormat::csv : TableFormat::markdown;
            std::cout << run_table(configs, fmt, threads);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RestartLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
