#include "insider/tree/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace insider {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPriceTol = 1e-12;

struct MinMax {
    double value;
    double hedge;
    bool unbounded;
};

// min over h of max_c (v_c - h d_c): convex piecewise-linear in h, minimized
// at a kink (or along a flat line). Exact pair enumeration.
MinMax min_max_lines(const std::vector<double>& v, const std::vector<double>& d) {
    const std::size_t k = v.size();
    bool has_pos = false, has_neg = false, has_zero = false;
    double zero_max = -kInf;
    for (std::size_t c = 0; c < k; ++c) {
        if (d[c] > kPriceTol)
            has_pos = true;
        else if (d[c] < -kPriceTol)
            has_neg = true;
        else {
            has_zero = true;
            zero_max = std::max(zero_max, v[c]);
        }
    }
    auto F = [&](double h) {
        double m = -kInf;
        for (std::size_t c = 0; c < k; ++c) m = std::max(m, v[c] - h * d[c]);
        return m;
    };
    if (!has_pos && !has_neg) return {zero_max, 0.0, false};
    if (!(has_pos && has_neg)) {
        // One-sided slopes: the max decays toward the zero-line floor (if any)
        // as |h| grows; without a flat line the infimum is -infinity.
        if (!has_zero) return {0.0, 0.0, true};
        return {zero_max, has_pos ? kInf : -kInf, false};
    }
    double best = kInf, best_h = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (std::abs(d[i] - d[j]) <= kPriceTol) continue;
            const double h = (v[i] - v[j]) / (d[i] - d[j]);
            const double val = F(h);
            if (val < best) {
                best = val;
                best_h = h;
            }
        }
    return {best, best_h, false};
}

// Vertices of {q >= 0, sum q = 1, sum q d = 0}: singletons on d = 0 children
// and straddling pairs d_i < 0 < d_j.
template <class Fn>
void for_each_vertex(const std::vector<double>& d, Fn&& fn) {
    const std::size_t k = d.size();
    for (std::size_t c = 0; c < k; ++c)
        if (std::abs(d[c]) <= kPriceTol) {
            std::vector<double> q(k, 0.0);
            q[c] = 1.0;
            fn(q);
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!(d[i] < -kPriceTol && d[j] > kPriceTol)) continue;
            std::vector<double> q(k, 0.0);
            q[i] = d[j] / (d[j] - d[i]);
            q[j] = -d[i] / (d[j] - d[i]);
            fn(q);
        }
}

std::vector<double> child_gaps(const MarketTree& t, int i) {
    std::vector<double> d(t.nodes[i].children.size());
    for (std::size_t c = 0; c < d.size(); ++c)
        d[c] = t.nodes[t.nodes[i].children[c]].price - t.nodes[i].price;
    return d;
}

// One-step no-arbitrage fails when all price moves lean one way.
bool one_sided(const std::vector<double>& d) {
    bool pos = false, neg = false, nonzero = false;
    for (double x : d) {
        if (x > kPriceTol) pos = true;
        if (x < -kPriceTol) neg = true;
        if (std::abs(x) > kPriceTol) nonzero = true;
    }
    return nonzero && !(pos && neg);
}

std::vector<double> leaf_claim_to_node_values(const MarketTree& t,
                                              const std::vector<double>& leaf_claim) {
    const auto leaves = t.leaves();
    if (leaf_claim.size() != leaves.size())
        throw std::domain_error("claim vector must have one entry per leaf");
    std::vector<double> value(t.size(), 0.0);
    for (std::size_t j = 0; j < leaves.size(); ++j) {
        if (leaf_claim[j] < 0.0) throw std::domain_error("claims must be >= 0");
        value[leaves[j]] = leaf_claim[j];
    }
    return value;
}

}  // namespace

SuperhedgeResult superhedge_tree(const MarketTree& tree, const std::vector<double>& leaf_claim) {
    tree.validate();
    std::vector<double> value = leaf_claim_to_node_values(tree, leaf_claim);
    std::vector<double> hedge(tree.size(), 0.0);
    for (int i = int(tree.size()) - 1; i >= 0; --i) {
        if (tree.is_leaf(i)) continue;
        std::vector<double> v(tree.nodes[i].children.size());
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = value[tree.nodes[i].children[c]];
        const MinMax mm = min_max_lines(v, child_gaps(tree, i));
        // Nonnegative wealth caps the value below at 0 even where the
        // unconstrained min-max is unbounded.
        value[i] = mm.unbounded ? 0.0 : std::max(0.0, mm.value);
        hedge[i] = mm.unbounded ? 0.0 : (std::isfinite(mm.hedge) ? mm.hedge : 0.0);
    }
    return {value[0], value, hedge};
}

double sup_over_emm(const MarketTree& tree, const std::vector<double>& leaf_claim) {
    tree.validate();
    std::vector<double> value = leaf_claim_to_node_values(tree, leaf_claim);
    for (int i = int(tree.size()) - 1; i >= 0; --i) {
        if (tree.is_leaf(i)) continue;
        if (tree.nodes[i].children.size() > 8)
            throw std::domain_error("sup_over_emm: branching factor exceeds enumeration budget");
        const auto d = child_gaps(tree, i);
        double best = -kInf;
        for_each_vertex(d, [&](const std::vector<double>& q) {
            double s = 0.0;
            for (std::size_t c = 0; c < q.size(); ++c)
                s += q[c] * value[tree.nodes[i].children[c]];
            best = std::max(best, s);
        });
        if (best == -kInf)
            throw std::domain_error("sup_over_emm: no one-step martingale measure at a node");
        value[i] = best;
    }
    return value[0];
}

namespace {

// max over admissible pi of sum_c p_c log(1 + pi r_c); returns_dual is the
// derivative, strictly decreasing on the open admissibility interval.
double solve_log_fraction(const std::vector<double>& p, const std::vector<double>& r) {
    double lo = -kInf, hi = kInf;
    for (double rc : r) {
        if (rc > 0.0) lo = std::max(lo, -1.0 / rc);
        if (rc < 0.0) hi = std::min(hi, -1.0 / rc);
    }
    auto deriv = [&](double pi) {
        double s = 0.0;
        for (std::size_t c = 0; c < r.size(); ++c) s += p[c] * r[c] / (1.0 + pi * r[c]);
        return s;
    };
    // Bisection on the strictly decreasing derivative.
    double a = lo + 1e-14 * (hi - lo), b = hi - 1e-14 * (hi - lo);
    if (deriv(0.0) == 0.0) return 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (deriv(mid) > 0.0)
            a = mid;
        else
            b = mid;
        if (b - a < 1e-16 * std::max(1.0, std::abs(a))) break;
    }
    return 0.5 * (a + b);
}

}  // namespace

LogUtilityResult log_utility_primal(const MarketTree& tree) {
    tree.validate();
    const auto reach = tree.reach_probabilities();
    LogUtilityResult out;
    out.fractions.assign(tree.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        if (tree.is_leaf(int(i))) continue;
        const auto d = child_gaps(tree, int(i));
        if (one_sided(d)) {
            out.value = {0.0, true, int(i)};
            return out;
        }
        std::vector<double> r(d.size());
        bool all_zero = true;
        for (std::size_t c = 0; c < d.size(); ++c) {
            r[c] = d[c] / tree.nodes[i].price;
            if (std::abs(d[c]) > kPriceTol) all_zero = false;
        }
        if (all_zero) continue;
        const double pi = solve_log_fraction(tree.nodes[i].probs, r);
        out.fractions[i] = pi;
        double node_val = 0.0;
        for (std::size_t c = 0; c < r.size(); ++c)
            node_val += tree.nodes[i].probs[c] * std::log(1.0 + pi * r[c]);
        total += reach[i] * node_val;
    }
    out.value = {total, false, -1};
    return out;
}

MaybeValue log_utility_dual(const MarketTree& tree) {
    tree.validate();
    const auto reach = tree.reach_probabilities();
    double total = 0.0;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        if (tree.is_leaf(int(i))) continue;
        const auto d = child_gaps(tree, int(i));
        if (one_sided(d)) return {0.0, true, int(i)};
        const auto& p = tree.nodes[i].probs;
        const std::size_t k = d.size();
        // Minimize sum p log(p/q) over the martingale polytope; the optimum
        // has q_c = p_c / (a + b d_c) with multipliers solving the two
        // constraint equations.
        double a = 1.0, b = 0.0;
        bool converged = false;
        for (int it = 0; it < 200; ++it) {
            double f1 = -1.0, f2 = 0.0;
            double j11 = 0.0, j12 = 0.0, j22 = 0.0;
            for (std::size_t c = 0; c < k; ++c) {
                const double den = a + b * d[c];
                const double q = p[c] / den;
                f1 += q;
                f2 += q * d[c];
                const double w = q / den;
                j11 -= w;
                j12 -= w * d[c];
                j22 -= w * d[c] * d[c];
            }
            if (std::abs(f1) + std::abs(f2) < 1e-13) {
                converged = true;
                break;
            }
            const double det = j11 * j22 - j12 * j12;
            if (det == 0.0) break;
            double da = -(j22 * f1 - j12 * f2) / det;
            double db = -(-j12 * f1 + j11 * f2) / det;
            // Damp to keep every denominator strictly positive.
            double step = 1.0;
            for (int halving = 0; halving < 60; ++halving) {
                bool ok = true;
                for (std::size_t c = 0; c < k; ++c)
                    if (a + step * da + (b + step * db) * d[c] <= 0.0) ok = false;
                if (ok) break;
                step *= 0.5;
            }
            a += step * da;
            b += step * db;
        }
        if (!converged)
            throw std::runtime_error("log_utility_dual: Newton failed at node " + std::to_string(i));
        double kl = 0.0;
        for (std::size_t c = 0; c < k; ++c) kl += p[c] * std::log(a + b * d[c]);
        total += reach[i] * kl;
    }
    return {total, false, -1};
}

std::vector<double> indicator_claim(const MarketTree& tree, int g) {
    const auto leaves = tree.leaves();
    std::vector<double> claim(leaves.size(), 0.0);
    for (std::size_t j = 0; j < leaves.size(); ++j)
        if (tree.nodes[leaves[j]].label == g) claim[j] = 1.0;
    return claim;
}

bool is_complete(const MarketTree& tree) {
    for (std::size_t i = 0; i < tree.size(); ++i) {
        if (tree.is_leaf(int(i))) continue;
        const auto d = child_gaps(tree, int(i));
        if (d.size() == 1) {
            if (std::abs(d[0]) > kPriceTol) return false;
            continue;
        }
        if (d.size() != 2) return false;
        if (!((d[0] < -kPriceTol && d[1] > kPriceTol) || (d[1] < -kPriceTol && d[0] > kPriceTol)))
            return false;
    }
    return true;
}

std::vector<double> unique_emm_leaf_mass(const MarketTree& tree) {
    tree.validate();
    if (!is_complete(tree))
        throw std::domain_error("unique_emm_leaf_mass: tree is not complete");
    std::vector<double> mass(tree.size(), 0.0);
    mass[0] = 1.0;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        if (tree.is_leaf(int(i))) continue;
        const auto d = child_gaps(tree, int(i));
        if (d.size() == 1) {
            mass[tree.nodes[i].children[0]] += mass[i];
            continue;
        }
        const double q0 = d[1] / (d[1] - d[0]);
        mass[tree.nodes[i].children[0]] += mass[i] * q0;
        mass[tree.nodes[i].children[1]] += mass[i] * (1.0 - q0);
    }
    std::vector<double> out;
    for (int leaf : tree.leaves()) out.push_back(mass[leaf]);
    return out;
}

}  // namespace insider
