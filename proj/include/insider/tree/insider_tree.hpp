#pragma once

#include <optional>
#include <vector>

#include "insider/tree/pricing.hpp"

namespace insider {

// The original tree reweighted by conditioning on {G = g}: one-step
// probabilities become p_c m(child)/m(node) where m is the conditional mass
// of the label below each node; branches with zero mass are pruned.
struct ConditionedTree {
    MarketTree tree;            // same node indexing, reweighted, pruned
    std::vector<char> pruned;   // per node of the original tree
    std::vector<double> weight; // density m(node)/m(root) per node
    int label = 0;
    double label_prob = 0.0;    // P[G = g]
};

ConditionedTree condition_tree(const MarketTree& tree, int g);

// A one-step sure gain available to the insider on {G = g}: scaling the
// position by n yields terminal wealth >= n * gain on an event of
// probability >= prob_floor, an unbounded-profit family.
struct NupbrWitness {
    int node;
    int label;
    int direction;     // +1 buy, -1 sell
    double gain;       // sure one-step profit per unit of the asset
    double prob_floor; // P[reach node and G = g]
};

std::optional<NupbrWitness> nupbr_witness(const MarketTree& tree);

struct CostDecayCell {
    std::vector<int> leaves;
    double cost = 0.0;  // unique-EMM mass of the cell = insider superhedge cost
};

struct CostDecayResult {
    int n_cells;
    std::vector<CostDecayCell> cells;
    double max_cost;
};

// Insider cost profile of hedging 1_{G in B} on a complete tree after
// splitting B into n cells of (near-)equal unique-EMM mass: on each cell
// event the insider pays only that cell's measure, which decays with n.
CostDecayResult first_kind_cost_decay(const MarketTree& tree, int n_cells,
                                      const std::vector<int>& target_leaves = {});

struct DecompositionCheck {
    MaybeValue conditioned_route;  // sum_g P[G=g] * log-DP on the conditioned tree
    MaybeValue weighted_route;     // sum_g indicator-weighted log-DP on the raw tree
};

// The insider's log-utility computed by two independent dynamic programs;
// they agree when every conditioned subtree keeps one-step no-arbitrage and
// are flagged unbounded together otherwise.
DecompositionCheck insider_log_decomposition(const MarketTree& tree);

}  // namespace insider
