#ifndef MPTRI_ORACLE_HPP
#define MPTRI_ORACLE_HPP

#include <string>
#include <vector>

#include "mptri/decomp.hpp"

namespace mptri {

// substitution var_x -> var_x + s * var_y
Poly shear_substitution(const Poly& f, long s, std::size_t var_x, std::size_t var_y);

// determinant of the Sylvester matrix w.r.t. var, exact (fraction-free
// elimination); error if either input is free of var
Poly sylvester_resultant(const Poly& f, const Poly& g, std::size_t var);

struct ShearedSystem {
    long shear = 0;
    Poly f1s, f2s;
    bool lc_constant = false; // both y-leading coefficients are nonzero constants
};
ShearedSystem apply_shear(const Poly& f1, const Poly& f2, long s);

struct OraclePointClass {
    Poly factor;      // squarefree factor of the sheared resultant
    int multiplicity; // shared multiplicity of every point above its roots
    int count;        // number of roots
};

struct OracleReport {
    std::vector<long> shears;     // the two certified shears
    std::vector<Poly> resultants; // sheared resultant per certified shear
    std::vector<OraclePointClass> per_point; // from the first certified shear
    long long total = 0;
};

// Multiplicity multiset of a zero-dimensional coprime bivariate system via a
// certified generic shear: deterministic shear sequence 1, -1, 2, -2, ...;
// a shear is accepted once a second one reproduces the same multiset at the
// maximal number of distinct projected roots.  Throws OracleFailure when the
// retries are exhausted.
OracleReport multiplicities_by_shear(const Poly& f1, const Poly& f2);

struct CrossCheckResult {
    bool match = true;
    std::vector<std::string> diff;
};

// exact point-by-point comparison of an all-positive bivariate decomposition
// against the oracle report (checked under both certified shears)
CrossCheckResult cross_check(const Decomposition& d, const OracleReport& r);

} // namespace mptri

#endif
