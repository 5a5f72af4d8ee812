#include "insider/tree/insider_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace insider {

namespace {

constexpr double kPriceTol = 1e-12;

// Conditional mass of {G = g} below each node under the one-step probs.
std::vector<double> label_mass(const MarketTree& tree, int g) {
    std::vector<double> m(tree.size(), 0.0);
    for (int i = int(tree.size()) - 1; i >= 0; --i) {
        if (tree.is_leaf(i)) {
            m[i] = tree.nodes[i].label == g ? 1.0 : 0.0;
            continue;
        }
        double s = 0.0;
        for (std::size_t c = 0; c < tree.nodes[i].children.size(); ++c)
            s += tree.nodes[i].probs[c] * m[tree.nodes[i].children[c]];
        m[i] = s;
    }
    return m;
}

double solve_log_fraction_weighted(const std::vector<double>& w, const std::vector<double>& r) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < r.size(); ++c) {
        if (w[c] <= 0.0) continue;
        if (r[c] > 0.0) lo = std::max(lo, -1.0 / r[c]);
        if (r[c] < 0.0) hi = std::min(hi, -1.0 / r[c]);
    }
    auto deriv = [&](double pi) {
        double s = 0.0;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (w[c] > 0.0) s += w[c] * r[c] / (1.0 + pi * r[c]);
        return s;
    };
    if (deriv(0.0) == 0.0) return 0.0;
    double a = lo + 1e-14 * (hi - lo), b = hi - 1e-14 * (hi - lo);
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

ConditionedTree condition_tree(const MarketTree& tree, int g) {
    tree.validate();
    const auto m = label_mass(tree, g);
    if (m[0] <= 0.0) throw std::domain_error("condition_tree: P[G = g] = 0");
    ConditionedTree out;
    out.label = g;
    out.label_prob = tree.label_probability(g);
    out.pruned.assign(tree.size(), 0);
    out.weight.assign(tree.size(), 0.0);
    out.tree = tree;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        out.weight[i] = m[i] / m[0];
        if (m[i] == 0.0) {
            out.pruned[i] = 1;
            out.tree.nodes[i].children.clear();
            out.tree.nodes[i].probs.clear();
            continue;
        }
        if (tree.is_leaf(int(i))) continue;
        std::vector<int> kids;
        std::vector<double> probs;
        for (std::size_t c = 0; c < tree.nodes[i].children.size(); ++c) {
            const int child = tree.nodes[i].children[c];
            if (m[child] == 0.0) continue;
            kids.push_back(child);
            probs.push_back(tree.nodes[i].probs[c] * m[child] / m[i]);
        }
        out.tree.nodes[i].children = std::move(kids);
        out.tree.nodes[i].probs = std::move(probs);
    }
    return out;
}

std::optional<NupbrWitness> nupbr_witness(const MarketTree& tree) {
    tree.validate();
    const auto labels = tree.label_set();
    if (labels.size() < 2) return std::nullopt;
    const auto reach = tree.reach_probabilities();
    std::optional<NupbrWitness> best;
    for (int g : labels) {
        const auto m = label_mass(tree, g);
        if (m[0] <= 0.0) continue;
        for (std::size_t i = 0; i < tree.size(); ++i) {
            if (tree.is_leaf(int(i)) || m[i] == 0.0) continue;
            // Price gaps over surviving children only.
            bool pos = false, neg = false;
            double min_abs = std::numeric_limits<double>::infinity();
            bool any = false;
            for (std::size_t c = 0; c < tree.nodes[i].children.size(); ++c) {
                const int child = tree.nodes[i].children[c];
                if (m[child] == 0.0) continue;
                const double d = tree.nodes[child].price - tree.nodes[i].price;
                if (d > kPriceTol) pos = true;
                else if (d < -kPriceTol) neg = true;
                else { pos = neg = true; }  // a flat child blocks a sure gain
                min_abs = std::min(min_abs, std::abs(d));
                any = true;
            }
            if (!any || (pos && neg)) continue;
            const NupbrWitness w{int(i), g, pos ? +1 : -1, min_abs, reach[i] * m[i]};
            if (!best || w.prob_floor > best->prob_floor) best = w;
        }
    }
    return best;
}

CostDecayResult first_kind_cost_decay(const MarketTree& tree, int n_cells,
                                      const std::vector<int>& target_leaves) {
    if (n_cells < 1) throw std::domain_error("first_kind_cost_decay: n_cells must be >= 1");
    const auto emm = unique_emm_leaf_mass(tree);  // throws when not complete
    const auto leaves = tree.leaves();
    std::vector<int> target = target_leaves;
    if (target.empty()) {
        target.resize(leaves.size());
        std::iota(target.begin(), target.end(), 0);
    }
    if (int(target.size()) < n_cells)
        throw std::domain_error("first_kind_cost_decay: fewer target leaves than cells");
    double total = 0.0;
    for (int j : target) total += emm[j];

    CostDecayResult out;
    out.n_cells = n_cells;
    double cum = 0.0;
    CostDecayCell cell;
    int filled = 0;
    for (int j : target) {
        cell.leaves.push_back(j);
        cell.cost += emm[j];
        cum += emm[j];
        if (filled + 1 < n_cells && cum >= total * double(filled + 1) / double(n_cells) - 1e-12) {
            out.cells.push_back(cell);
            cell = CostDecayCell{};
            ++filled;
        }
    }
    out.cells.push_back(cell);
    out.max_cost = 0.0;
    for (const auto& c : out.cells) out.max_cost = std::max(out.max_cost, c.cost);
    return out;
}

DecompositionCheck insider_log_decomposition(const MarketTree& tree) {
    tree.validate();
    DecompositionCheck out;

    // Route 1: per label, the standard log DP on the rebuilt conditioned tree.
    double lhs = 0.0;
    bool lhs_unbounded = false;
    int lhs_witness = -1;
    for (int g : tree.label_set()) {
        const ConditionedTree ct = condition_tree(tree, g);
        const LogUtilityResult r = log_utility_primal(ct.tree);
        if (r.value.unbounded) {
            lhs_unbounded = true;
            lhs_witness = r.value.witness_node;
            break;
        }
        lhs += ct.label_prob * r.value.value;
    }
    out.conditioned_route = {lhs_unbounded ? 0.0 : lhs, lhs_unbounded, lhs_witness};

    // Route 2: indicator-weighted DP on the raw tree, maximizing
    // E[1_{G=g} log V_T] label by label.
    const auto reach = tree.reach_probabilities();
    double rhs = 0.0;
    bool rhs_unbounded = false;
    int rhs_witness = -1;
    for (int g : tree.label_set()) {
        const auto m = label_mass(tree, g);
        for (std::size_t i = 0; i < tree.size() && !rhs_unbounded; ++i) {
            if (tree.is_leaf(int(i)) || m[i] == 0.0) continue;
            const auto& nd = tree.nodes[i];
            std::vector<double> w(nd.children.size()), r(nd.children.size());
            bool pos = false, neg = false, nonzero = false;
            for (std::size_t c = 0; c < nd.children.size(); ++c) {
                const int child = nd.children[c];
                w[c] = nd.probs[c] * m[child];
                r[c] = (tree.nodes[child].price - nd.price) / nd.price;
                if (w[c] > 0.0) {
                    if (r[c] > kPriceTol) pos = true;
                    else if (r[c] < -kPriceTol) neg = true;
                    if (std::abs(r[c]) > kPriceTol) nonzero = true;
                }
            }
            if (nonzero && !(pos && neg)) {
                rhs_unbounded = true;
                rhs_witness = int(i);
                break;
            }
            if (!nonzero) continue;
            const double pi = solve_log_fraction_weighted(w, r);
            double node_val = 0.0;
            for (std::size_t c = 0; c < w.size(); ++c)
                if (w[c] > 0.0) node_val += w[c] * std::log(1.0 + pi * r[c]);
            rhs += reach[i] * node_val;
        }
        if (rhs_unbounded) break;
    }
    out.weighted_route = {rhs_unbounded ? 0.0 : rhs, rhs_unbounded, rhs_witness};
    return out;
}

}  // namespace insider
