#include "unimat/experiments.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "unimat/completion.hpp"
#include "unimat/primitivity.hpp"

namespace unimat {

void ExperimentConfig::validate() const {
    BoundParams{n, k, s, lambda}.validate();
    if (trials < 1) throw InvalidParams("ExperimentConfig: need trials >= 1");
    if (base_mode == BaseMode::fixed_all_ones && k != 1)
        throw InvalidParams("ExperimentConfig: fixed_all_ones requires k == 1");
    if (base_mode == BaseMode::provided) {
        if (!base) throw InvalidParams("ExperimentConfig: provided mode needs a base matrix");
        if (base->rows() != static_cast<std::size_t>(k) ||
            base->cols() != static_cast<std::size_t>(n))
            throw InvalidParams("ExperimentConfig: base matrix shape mismatch");
    }
}

IntMat generate_base_primitive(int n, int k, const Int& lambda, const RngSpec& spec) {
    if (n < 1 || k < 0 || k >= n) throw BadShape("generate_base_primitive: need 0 <= k < n");
    if (lambda < 2) throw InvalidParams("generate_base_primitive: need lambda >= 2");
    if (k == 0) return IntMat::empty(static_cast<std::size_t>(n));
    Rng rng(spec);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        IntMat a(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rng.signed_range(lambda);
        if (is_primitive(a)) return a;
    }
    throw RestartLimitExceeded("generate_base_primitive: 10,000 regenerations exhausted");
}

namespace {

IntMat make_base(const ExperimentConfig& cfg, std::uint64_t base_seed) {
    switch (cfg.base_mode) {
        case BaseMode::random_signed:
            return generate_base_primitive(cfg.n, cfg.k, cfg.lambda, RngSpec{base_seed});
        case BaseMode::fixed_all_ones: {
            IntMat a(1, static_cast<std::size_t>(cfg.n));
            for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = 1;
            return a;
        }
        case BaseMode::provided:
            return *cfg.base;
    }
    throw InvalidParams("ExperimentConfig: unknown base mode");
}

}  // namespace

WilsonInterval wilson95(unsigned long successes, unsigned long trials) {
    const long double z = 1.959963984540054L;
    const long double nn = static_cast<long double>(trials);
    const long double p = static_cast<long double>(successes) / nn;
    const long double z2 = z * z;
    const long double denom = 1 + z2 / nn;
    const long double center = (p + z2 / (2 * nn)) / denom;
    const long double half =
        z * sqrtl(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    return {center - half, center + half};
}

ExperimentReport empirical_probability(const ExperimentConfig& cfg, unsigned threads) {
    cfg.validate();
    const std::size_t ext_rows = static_cast<std::size_t>(cfg.n - cfg.s - 1);

    IntMat base = cfg.fresh_base_per_trial
                      ? IntMat::empty(static_cast<std::size_t>(cfg.n))
                      : make_base(cfg, Rng::derive(cfg.seed, 0));

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<unsigned long>(threads, std::max<unsigned long>(1, cfg.trials)));

    std::atomic<unsigned long> next{0};
    std::atomic<unsigned long> hits{0};
    auto worker = [&]() {
        unsigned long local = 0;
        for (;;) {
            unsigned long t = next.fetch_add(1);
            if (t >= cfg.trials) break;
            std::uint64_t trial_seed = Rng::derive(cfg.seed, t + 1);
            if (cfg.fresh_base_per_trial) {
                IntMat fresh = make_base(cfg, Rng::derive(trial_seed, 0));
                Rng rng(Rng::derive(trial_seed, 1));
                IntMat ext = random_extension(fresh, ext_rows, cfg.lambda, rng);
                if (is_primitive(ext)) ++local;
            } else {
                Rng rng(trial_seed);
                IntMat ext = random_extension(base, ext_rows, cfg.lambda, rng);
                if (is_primitive(ext)) ++local;
            }
        }
        hits.fetch_add(local);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ExperimentReport rep;
    rep.config = cfg;
    rep.successes = hits.load();
    rep.empirical_rate = make_rat(Int(rep.successes), Int(cfg.trials));
    rep.theorem1 = theorem1_bound({cfg.n, cfg.k, cfg.s, cfg.lambda});
    rep.theorem1_usable = bound_usable(rep.theorem1);
    rep.limit_prob = limit_probability(cfg.n, cfg.s);
    rep.wilson95 = wilson95(rep.successes, cfg.trials);
    return rep;
}

namespace {

std::string render_fields(const ExperimentReport& r, const char* sep) {
    std::ostringstream out;
    out << r.config.n << sep << r.config.k << sep << r.config.s << sep
        << r.config.lambda.get_str() << sep << r.config.trials << sep << r.config.seed
        << sep << r.successes << sep << rat_to_decimal(r.empirical_rate, 4) << sep
        << (r.theorem1_usable ? rat_to_decimal(r.theorem1, 4) : std::string("n/a")) << sep
        << real_to_decimal(r.limit_prob, 4) << sep
        << real_to_decimal(r.wilson95.low, 4) << sep << real_to_decimal(r.wilson95.high, 4);
    return out.str();
}

}  // namespace

std::string run_table(const std::vector<ExperimentConfig>& configs, TableFormat format,
                      unsigned threads) {
    if (configs.empty()) throw InvalidParams("run_table: no configs");
    std::ostringstream out;
    const char* headers[] = {"n",      "k",         "s",        "lambda",
                             "trials", "seed",      "successes", "exp_rate",
                             "th1_bound", "limit_prob", "ci_low", "ci_high"};
    if (format == TableFormat::csv) {
        out << "n,k,s,lambda,trials,seed,successes,exp_rate,th1_bound,limit_prob,ci_low,ci_high\n";
        for (const auto& cfg : configs)
            out << render_fields(empirical_probability(cfg, threads), ",") << "\n";
    } else {
        out << "|";
        for (const char* h : headers) out << " " << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < std::size(headers); ++i) out << " --- |";
        out << "\n";
        for (const auto& cfg : configs)
            out << "| " << render_fields(empirical_probability(cfg, threads), " | ") << " |\n";
    }
    return out.str();
}

}  // namespace unimat
