#include "mptri/bench.hpp"

#include <chrono>

#include "mptri/decomp.hpp"
#include "mptri/oracle.hpp"

namespace mptri {

Poly random_dense_poly(std::mt19937_64& rng, const VarOrderPtr& order, int d) {
    std::uniform_int_distribution<long> coeff(-100, 100);
    while (true) {
        std::vector<std::pair<Exponents, mpz_class>> terms;
        for (int i = 0; i <= d; ++i) {
            for (int j = 0; j + i <= d; ++j) {
                long c = coeff(rng);
                if (c == 0) continue;
                Exponents e(order->size(), 0);
                e[0] = static_cast<std::uint32_t>(j);
                e[1] = static_cast<std::uint32_t>(i);
                terms.emplace_back(std::move(e), mpz_class(c));
            }
        }
        Poly p = Poly::from_terms(order, std::move(terms));
        if (p.total_degree() == d) return p;
    }
}

std::pair<Poly, Poly> random_coprime_system(std::mt19937_64& rng, const VarOrderPtr& order,
                                            int d1, int d2) {
    while (true) {
        Poly f1 = random_dense_poly(rng, order, d1);
        Poly f2 = random_dense_poly(rng, order, d2);
        if (f1.degree(1) < f2.degree(1)) continue;
        if (f2.degree(1) < 1) continue;
        if (!gcd(f1, f2).is_constant()) continue;
        return {f1, f2};
    }
}

std::vector<BenchSummary> run_bench(const BenchConfig& cfg, std::ostream& csv) {
    const VarOrderPtr order = VarOrder::make({"x", "y"});
    std::vector<BenchSummary> summaries;
    csv << "pair,case,ms,components,total_multiplicity,verification\n";

    int verify_every = cfg.verify_fraction > 0.0
                           ? std::max(1, static_cast<int>(1.0 / cfg.verify_fraction))
                           : 0;

    for (const auto& pair : cfg.degree_pairs) {
        std::mt19937_64 rng(cfg.seed ^ (static_cast<unsigned long>(pair.first) << 16) ^
                            static_cast<unsigned long>(pair.second));
        BenchSummary sum;
        sum.pair = pair;
        double total_ms = 0.0;
        for (int i = 0; i < cfg.count; ++i) {
            auto [f1, f2] = random_coprime_system(rng, order, pair.first, pair.second);
            auto t0 = std::chrono::steady_clock::now();
            Decomposition d = bivariate_decompose(f1, f2);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            total_ms += ms;

            MultZeroReport rep = report_multiplicities(d);
            std::string verdict = "skip";
            if (verify_every > 0 && i % verify_every == 0) {
                try {
                    OracleReport oracle = multiplicities_by_shear(f1, f2);
                    CrossCheckResult cc = cross_check(d, oracle);
                    verdict = cc.match ? "ok" : "FAIL";
                    if (cc.match) ++sum.verified;
                    else ++sum.oracle_failures;
                } catch (const OracleFailure&) {
                    verdict = "oracle-unavailable";
                }
            }
            csv << pair.first << "x" << pair.second << "," << i << "," << ms << ","
                << d.positives.size() << "," << rep.total << "," << verdict << "\n";
            ++sum.cases;
        }
        sum.mean_ms = cfg.count > 0 ? total_ms / cfg.count : 0.0;
        csv << "summary," << pair.first << "x" << pair.second << "," << sum.mean_ms << ","
            << sum.cases << "," << sum.verified << "," << sum.oracle_failures << "\n";
        summaries.push_back(sum);
    }
    return summaries;
}

} // namespace mptri
