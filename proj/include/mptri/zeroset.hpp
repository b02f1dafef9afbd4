#ifndef MPTRI_ZEROSET_HPP
#define MPTRI_ZEROSET_HPP

#include <cstdint>
#include <vector>

#include "mptri/poly.hpp"
#include "mptri/quotient.hpp"

namespace mptri {

// One cluster of zeros of a zero-dimensional bivariate system: u is monic
// squarefree (stored as a primitive integer polynomial), v is the upper part
// reduced modulo u, monic in y and squarefree above every root of u.  Every
// root alpha of u carries deg_y(v) distinct points (alpha, beta), each with
// the same multiplicity.
struct Cluster {
    Poly u;
    Poly v;
    long long mult = 0;
    int points = 0; // deg(u) * deg_y(v): distinct zeros in the cluster
};

// Exact weighted zero-set of a bivariate system, kept as pairwise disjoint
// clusters.  Multiplicities are signed while accumulating; a consistent set
// has every cluster positive.
class WeightedZeroSet {
public:
    WeightedZeroSet(VarOrderPtr order, std::size_t var_x, std::size_t var_y);

    // explode a triangular pair (lower in K[x], upper in K[x,y]) into clusters;
    // throws MathError if the pair has infinitely many zeros
    void add_triset(const Poly& lower, const Poly& upper, long long weight);
    void add(const WeightedZeroSet& other);
    void negate();

    bool all_positive() const;
    // throws MathError if a subtracted zero has no positive counterpart
    void require_positive() const;

    bool equals(const WeightedZeroSet& other) const;
    const std::vector<Cluster>& clusters() const { return clusters_; }
    long long total_multiplicity() const;
    bool empty() const { return clusters_.empty(); }

    std::size_t var_x() const { return var_x_; }
    std::size_t var_y() const { return var_y_; }
    const VarOrderPtr& order() const { return order_; }

private:
    struct Raw {
        QX u;
        YQ v;
        long long mult;
    };
    void push_raw(QX u, const YQ& v, long long mult);
    void rebuild();

    VarOrderPtr order_;
    std::size_t var_x_, var_y_;
    std::vector<Raw> raw_;
    std::vector<Cluster> clusters_;
};

} // namespace mptri

#endif
