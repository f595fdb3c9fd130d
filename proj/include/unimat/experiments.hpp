#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unimat/bounds.hpp"
#include "unimat/int_mat.hpp"
#include "unimat/rng.hpp"

namespace unimat {

enum class BaseMode {
    random_signed,    // k x n base with entries uniform on [-lambda, lambda],
                      // regenerated until primitive
    fixed_all_ones,   // the 1 x n row (1, 1, ..., 1); requires k == 1
    provided,         // caller-supplied base matrix
};

struct ExperimentConfig {
    int n = 0;
    int k = 0;
    int s = 0;
    Int lambda = 2;
    unsigned long trials = 1;
    std::uint64_t seed = 0;
    BaseMode base_mode = BaseMode::random_signed;
    std::optional<IntMat> base;       // for BaseMode::provided
    bool fresh_base_per_trial = false;

    void validate() const;
};

struct WilsonInterval {
    long double low = 0;
    long double high = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    unsigned long successes = 0;
    Rat empirical_rate;          // successes / trials, exact
    Rat theorem1;                // closed-form lower bound at (n, k, s, lambda)
    bool theorem1_usable = false;
    long double limit_prob = 0;  // zeta-product limit for (n, s)
    WilsonInterval wilson95;
};

/// k x n matrix with entries uniform on [-lambda, lambda], regenerated until
/// primitive (k = 0 gives EmptyMat). Throws RestartLimitExceeded after
/// 10,000 regenerations.
IntMat generate_base_primitive(int n, int k, const Int& lambda, const RngSpec& spec);

/// Runs cfg.trials extensions of one base matrix to (n-s-1) x n with entries
/// uniform on {0, ..., lambda-1} and counts how many stay primitive.
/// Per-trial seeds are derived from cfg.seed, so the report is reproducible
/// regardless of the worker count (0 = hardware default).
ExperimentReport empirical_probability(const ExperimentConfig& cfg, unsigned threads = 0);

enum class TableFormat { csv, markdown };

/// One row per config. CSV header (bit-exact):
/// n,k,s,lambda,trials,seed,successes,exp_rate,th1_bound,limit_prob,ci_low,ci_high
std::string run_table(const std::vector<ExperimentConfig>& configs, TableFormat format,
                      unsigned threads = 0);

WilsonInterval wilson95(unsigned long successes, unsigned long trials);

}  // namespace unimat
