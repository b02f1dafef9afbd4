#include "mptri/zeroset.hpp"

#include <algorithm>

namespace mptri {

WeightedZeroSet::WeightedZeroSet(VarOrderPtr order, std::size_t var_x, std::size_t var_y)
    : order_(std::move(order)), var_x_(var_x), var_y_(var_y) {}

namespace {

// split a monic squarefree modulus on its small integer roots
std::vector<QX> split_integer_roots(const QX& m) {
    std::vector<QX> out;
    QX rest = m;
    for (const auto& r : qx_small_integer_roots(m)) {
        QX lin;
        lin.c = {mpq_class(-r), mpq_class(1)};
        rest = qx_div(rest, lin);
        out.push_back(lin);
    }
    if (rest.deg() > 0) out.push_back(rest);
    return out;
}

} // namespace

void WeightedZeroSet::push_raw(QX u, const YQ& v, long long mult) {
    if (mult == 0 || u.deg() < 1 || v.deg() < 1) return;
    raw_.push_back({std::move(u), v, mult});
}

void WeightedZeroSet::add_triset(const Poly& lower, const Poly& upper, long long weight) {
    if (weight == 0) return;
    if (lower.is_zero() || upper.is_zero())
        throw MathError("zero polynomial in a triangular pair");
    if (lower.degree(var_y_) > 0)
        throw MathError("lower part of a triangular pair depends on the main variable");
    if (lower.is_constant()) return; // no zeros above a nonzero constant
    if (!upper.depends_on(var_y_)) {
        // both parts univariate in x: finitely many zeros only when coprime,
        // in which case the pair has no common zeros at all
        QX a = qx_from_poly(lower, var_x_), b = qx_from_poly(upper, var_x_);
        if (!qx_gcd(a, b).is_constant())
            throw MathError("triangular pair with infinitely many zeros");
        return;
    }

    QX u_full = qx_monic(qx_from_poly(lower, var_x_));
    for (const auto& [sq_factor, exp] : qx_squarefree(u_full)) {
        for (const auto& piece : split_integer_roots(sq_factor)) {
            // reduce the upper part and take its y-squarefree structure
            YQ a = yq_from_poly(upper, var_x_, var_y_, piece);
            if (a.is_zero())
                throw MathError("triangular pair with infinitely many zeros");
            if (a.deg() == 0) {
                if (!qx_gcd(a.c[0], piece).is_constant())
                    throw MathError("triangular pair with infinitely many zeros");
                continue; // nonzero constant above every root: no points
            }
            for (const auto& [mod_piece, parts] : yq_squarefree_split(a, piece)) {
                for (const auto& part : parts)
                    push_raw(mod_piece, part.factor,
                             weight * static_cast<long long>(exp) * part.exponent);
            }
        }
    }
    rebuild();
}

void WeightedZeroSet::add(const WeightedZeroSet& other) {
    for (const auto& c : other.clusters_) {
        QX u = qx_monic(qx_from_poly(c.u, var_x_));
        YQ v = yq_from_poly(c.v, var_x_, var_y_, u);
        push_raw(std::move(u), v, c.mult);
    }
    rebuild();
}

void WeightedZeroSet::negate() {
    for (auto& c : clusters_) c.mult = -c.mult;
}

bool WeightedZeroSet::all_positive() const {
    return std::all_of(clusters_.begin(), clusters_.end(),
                       [](const Cluster& c) { return c.mult > 0; });
}

void WeightedZeroSet::require_positive() const {
    for (const auto& c : clusters_) {
        if (c.mult < 0)
            throw MathError("negative zero set has no positive counterpart at (" +
                            c.u.to_string() + ", " + c.v.to_string() + ")");
    }
}

bool WeightedZeroSet::equals(const WeightedZeroSet& other) const {
    if (clusters_.size() != other.clusters_.size()) return false;
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
        if (clusters_[i].mult != other.clusters_[i].mult) return false;
        if (clusters_[i].u != other.clusters_[i].u) return false;
        if (clusters_[i].v != other.clusters_[i].v) return false;
    }
    return true;
}

long long WeightedZeroSet::total_multiplicity() const {
    long long t = 0;
    for (const auto& c : clusters_) t += c.mult * c.points;
    return t;
}

void WeightedZeroSet::rebuild() {
    // carry existing clusters back into the working set
    for (const auto& c : clusters_) {
        QX u = qx_monic(qx_from_poly(c.u, var_x_));
        YQ v = yq_from_poly(c.v, var_x_, var_y_, u);
        raw_.push_back({std::move(u), v, c.mult});
    }
    clusters_.clear();
    if (raw_.empty()) return;

    // 1. coprime basis of all moduli
    std::vector<QX> basis;
    auto insert_into_basis = [&](QX f) {
        std::vector<QX> queue{std::move(f)};
        while (!queue.empty()) {
            QX cur = queue.back();
            queue.pop_back();
            if (cur.deg() < 1) continue;
            bool absorbed = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                QX g = qx_gcd(cur, basis[i]);
                if (g.is_constant()) continue;
                if (g.deg() == basis[i].deg()) {
                    // basis[i] divides cur
                    queue.push_back(qx_div(cur, basis[i]));
                    absorbed = true;
                    break;
                }
                QX rest = qx_div(basis[i], g);
                basis[i] = g;
                basis.push_back(rest);
                queue.push_back(cur);
                absorbed = true;
                break;
            }
            if (!absorbed) basis.push_back(cur);
        }
    };
    for (const auto& r : raw_) insert_into_basis(r.u);

    // 2. distribute clusters over basis pieces, refining y-parts per piece
    struct YPart {
        YQ v;
        long long mult;
    };
    std::vector<Cluster> result;

    for (const auto& b : basis) {
        std::vector<YPart> parts;
        for (const auto& r : raw_) {
            if (!qx_mod(r.u, b).is_zero()) continue; // b does not divide this modulus
            parts.push_back({r.v, r.mult});
        }
        if (parts.empty()) continue;

        // refine within this piece; SplitRequest splits the piece itself
        std::function<std::vector<YPart>(const QX&)> refine =
            [&parts](const QX& mod) -> std::vector<YPart> {
            std::vector<YPart> work;
            for (const auto& p : parts) {
                YQ red = yq_monic(yq_reduce(p.v, mod), mod);
                if (red.deg() >= 1) work.push_back({red, p.mult});
            }
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = 0; i < work.size() && !changed; ++i) {
                    for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                        if (yq_eq(work[i].v, work[j].v)) {
                            work[i].mult += work[j].mult;
                            work.erase(work.begin() + static_cast<long>(j));
                            if (work[i].mult == 0)
                                work.erase(work.begin() + static_cast<long>(i));
                            changed = true;
                            break;
                        }
                        YQ g = yq_gcd(work[i].v, work[j].v, mod);
                        if (g.deg() < 1) continue;
                        YQ a = yq_divide_exact(work[i].v, g, mod);
                        YQ bq = yq_divide_exact(work[j].v, g, mod);
                        long long mi = work[i].mult, mj = work[j].mult;
                        work.erase(work.begin() + static_cast<long>(j));
                        work.erase(work.begin() + static_cast<long>(i));
                        work.push_back({g, mi + mj});
                        if (a.deg() >= 1) work.push_back({a, mi});
                        if (bq.deg() >= 1) work.push_back({bq, mj});
                        changed = true;
                    }
                }
            }
            std::vector<YPart> out;
            for (auto& p : work)
                if (p.mult != 0) out.push_back(std::move(p));
            return out;
        };
        std::vector<std::pair<QX, std::vector<YPart>>> branches;
        for_each_branch<std::vector<YPart>>(b, refine, branches);
        for (auto& [piece, plist] : branches) {
            for (auto& p : plist) {
                Cluster c;
                c.u = qx_to_poly(piece, order_, var_x_);
                c.v = yq_to_poly(p.v, order_, var_x_, var_y_);
                c.mult = p.mult;
                c.points = piece.deg() * p.v.deg();
                result.push_back(std::move(c));
            }
        }
    }

    std::sort(result.begin(), result.end(), [](const Cluster& a, const Cluster& b) {
        int c = Poly::compare(a.u, b.u);
        if (c != 0) return c < 0;
        return Poly::compare(a.v, b.v) < 0;
    });
    clusters_ = std::move(result);
    raw_.clear();
}

} // namespace mptri
