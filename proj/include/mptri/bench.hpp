#ifndef MPTRI_BENCH_HPP
#define MPTRI_BENCH_HPP

#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "mptri/poly.hpp"

namespace mptri {

struct BenchConfig {
    std::vector<std::pair<int, int>> degree_pairs; // [deg f1, deg f2], total degrees
    int count = 100;
    unsigned long seed = 1;
    double verify_fraction = 0.1; // share of cases cross-checked by the oracle
};

struct BenchSummary {
    std::pair<int, int> pair;
    int cases = 0;
    double mean_ms = 0.0;
    int verified = 0;
    int oracle_failures = 0;
};

// dense polynomial of exact total degree d with coefficients uniform in
// [-100, 100] (protocol of the benchmark harness)
Poly random_dense_poly(std::mt19937_64& rng, const VarOrderPtr& order, int d);

// coprime pair of dense polynomials of exact total degrees d1 >= d2
std::pair<Poly, Poly> random_coprime_system(std::mt19937_64& rng, const VarOrderPtr& order,
                                            int d1, int d2);

// runs the benchmark, streaming one CSV row per case plus one summary row per
// degree pair; returns the summaries
std::vector<BenchSummary> run_bench(const BenchConfig& cfg, std::ostream& csv);

} // namespace mptri

#endif
