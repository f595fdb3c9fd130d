#include <doctest.h>

#include <cmath>
#include <sstream>

#include "unimat/experiments.hpp"
#include "unimat/primitivity.hpp"

using namespace unimat;

namespace {

ExperimentConfig small_cfg() {
    ExperimentConfig cfg;
    cfg.n = 7;
    cfg.k = 1;
    cfg.s = 2;
    cfg.lambda = 1000;
    cfg.trials = 400;
    cfg.seed = 99;
    return cfg;
}

std::vector<std::string> numeric_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty() && cur.find_first_of("0123456789") != std::string::npos)
            out.push_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-')
            cur += ch;
        else
            flush();
    }
    flush();
    return out;
}

}  // namespace

TEST_CASE("generate_base_primitive") {
    CHECK(generate_base_primitive(6, 0, 10, RngSpec{1}).is_empty());

    IntMat row = generate_base_primitive(8, 1, 10, RngSpec{2});
    REQUIRE(row.rows() == 1);
    Int g = 0;
    for (std::size_t j = 0; j < row.cols(); ++j) {
        CHECK(abs(row(0, j)) <= 10);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row(0, j).get_mpz_t());
    }
    CHECK(g == 1);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        IntMat a = generate_base_primitive(7, 3, 50, RngSpec{seed});
        CHECK(is_primitive(a));
    }
    CHECK_THROWS_AS(generate_base_primitive(5, 5, 10, RngSpec{1}), BadShape);
}

TEST_CASE("empirical_probability is deterministic and thread-invariant") {
    ExperimentConfig cfg = small_cfg();
    ExperimentReport a = empirical_probability(cfg, 1);
    ExperimentReport b = empirical_probability(cfg, 1);
    ExperimentReport c = empirical_probability(cfg, 2);
    ExperimentReport d = empirical_probability(cfg, 4);  // oversubscribed
    CHECK(a.successes == b.successes);
    CHECK(a.successes == c.successes);
    CHECK(a.successes == d.successes);
    CHECK(a.empirical_rate == make_rat(Int(a.successes), Int(cfg.trials)));
}

TEST_CASE("single-trial reports are reproducible") {
    ExperimentConfig cfg = small_cfg();
    cfg.trials = 1;
    ExperimentReport r = empirical_probability(cfg);
    CHECK(r.successes <= 1);
    CHECK(empirical_probability(cfg).successes == r.successes);
}

TEST_CASE("report carries a sound bound and interval") {
    ExperimentConfig cfg = small_cfg();
    cfg.n = 9;
    cfg.k = 0;
    cfg.s = 4;
    cfg.lambda = 100000;
    cfg.trials = 1500;
    ExperimentReport r = empirical_probability(cfg);

    long double rate = r.empirical_rate.get_d();
    CHECK(r.wilson95.low <= rate);
    CHECK(r.wilson95.high >= rate);

    REQUIRE(r.theorem1_usable);
    long double bound = r.theorem1.get_d();
    long double se = sqrtl(rate * (1 - rate) / cfg.trials);
    CHECK(bound <= rate + 3 * se);

    CHECK(r.limit_prob > 0.9L);
    CHECK(r.limit_prob < 1.0L);
}

TEST_CASE("unusable bounds are flagged") {
    ExperimentConfig cfg = small_cfg();
    cfg.s = 0;
    cfg.trials = 50;
    ExperimentReport r = empirical_probability(cfg);
    CHECK(!r.theorem1_usable);
    CHECK(r.theorem1 < 0);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg = small_cfg();
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);

    cfg = small_cfg();
    cfg.s = cfg.n;  // s > n-k-2
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);

    cfg = small_cfg();
    cfg.base_mode = BaseMode::fixed_all_ones;
    cfg.k = 2;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);

    cfg = small_cfg();
    cfg.base_mode = BaseMode::provided;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);  // no matrix attached
}

TEST_CASE("all-ones base mode uses the fixed row") {
    ExperimentConfig cfg;
    cfg.n = 6;
    cfg.k = 1;
    cfg.s = 1;
    cfg.lambda = 50;
    cfg.trials = 120;
    cfg.seed = 5;
    cfg.base_mode = BaseMode::fixed_all_ones;
    ExperimentReport r = empirical_probability(cfg);
    CHECK(r.successes <= cfg.trials);
    CHECK(r.successes > 0);  // rates in this regime sit far from zero
}

TEST_CASE("provided base mode") {
    ExperimentConfig cfg;
    cfg.n = 5;
    cfg.k = 2;
    cfg.s = 1;
    cfg.lambda = 100;
    cfg.trials = 60;
    cfg.seed = 11;
    cfg.base_mode = BaseMode::provided;
    IntMat base(2, 5);
    base(0, 0) = 1;
    base(1, 1) = 1;
    cfg.base = base;
    ExperimentReport r = empirical_probability(cfg);
    CHECK(r.successes <= cfg.trials);
}

TEST_CASE("run_table emits the pinned CSV header and matching markdown") {
    std::vector<ExperimentConfig> cfgs{small_cfg()};
    cfgs[0].trials = 150;
    std::string csv = run_table(cfgs, TableFormat::csv);
    std::string md = run_table(cfgs, TableFormat::markdown);

    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "n,k,s,lambda,trials,seed,successes,exp_rate,th1_bound,limit_prob,ci_low,ci_high");
    std::string row;
    REQUIRE(std::getline(lines, row));
    CHECK(numeric_tokens(row) == numeric_tokens(md.substr(md.rfind("| 7"))));

    CHECK_THROWS_AS(run_table({}, TableFormat::csv), InvalidParams);
}

TEST_CASE("huge lambda flows through sampling and the rate lands near the limit") {
    // lambda = 10^20 exercises the multi-word rejection sampler end to end;
    // a single appended row of n entries is primitive iff its gcd is 1, with
    // probability near 1/zeta(5) = 0.9644 at this size
    ExperimentConfig cfg;
    cfg.n = 5;
    cfg.k = 0;
    cfg.s = 3;
    mpz_ui_pow_ui(cfg.lambda.get_mpz_t(), 10, 20);
    cfg.trials = 3000;
    cfg.seed = 314159;
    ExperimentReport r = empirical_probability(cfg);
    double rate = r.empirical_rate.get_d();
    CHECK(std::fabs(rate - 0.9644) < 0.02);
    CHECK(std::fabs(static_cast<double>(r.limit_prob) - 0.96438734) < 1e-6);
}

TEST_CASE("a four-config set renders four data rows") {
    std::vector<ExperimentConfig> cfgs;
    for (int n : {5, 6, 7, 8}) {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.k = 0;
        cfg.s = 3;
        cfg.lambda = 100000;
        cfg.trials = 40;
        cfg.seed = 17;
        cfgs.push_back(cfg);
    }
    std::string csv = run_table(cfgs, TableFormat::csv);
    std::size_t rows = 0;
    for (char ch : csv) rows += ch == '\n';
    CHECK(rows == 5);  // header + one row per config
    CHECK(csv.find("exp_rate") != std::string::npos);
    CHECK(csv.find("th1_bound") != std::string::npos);
    CHECK(csv.find("limit_prob") != std::string::npos);
}

TEST_CASE("fresh-base-per-trial stays reproducible") {
    ExperimentConfig cfg = small_cfg();
    cfg.trials = 60;
    cfg.fresh_base_per_trial = true;
    ExperimentReport a = empirical_probability(cfg, 1);
    ExperimentReport b = empirical_probability(cfg, 2);
    CHECK(a.successes == b.successes);
}
