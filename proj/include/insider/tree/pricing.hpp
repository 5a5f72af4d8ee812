#pragma once

#include <vector>

#include "insider/tree/market_tree.hpp"

namespace insider {

// Value carrying an explicit unbounded flag; reports never hold float inf.
struct MaybeValue {
    double value = 0.0;
    bool unbounded = false;
    int witness_node = -1;  // node where one-step no-arbitrage failed
};

struct SuperhedgeResult {
    double root_price;
    std::vector<double> node_values;
    std::vector<double> hedge_ratios;  // units of the asset held at each node
};

// Nonnegative-wealth superhedging by backward recursion
//   v(node) = max(0, min_h max_c (v_child - h (S_child - S_node))),
// exact via enumeration of the piecewise-linear kinks.
SuperhedgeResult superhedge_tree(const MarketTree& tree, const std::vector<double>& leaf_claim);

// sup over one-step martingale-measure compositions of the expected claim,
// via explicit vertex enumeration (supports of at most two children). The
// independent cross-check of superhedge_tree under one-step no-arbitrage.
double sup_over_emm(const MarketTree& tree, const std::vector<double>& leaf_claim);

struct LogUtilityResult {
    MaybeValue value;
    std::vector<double> fractions;  // optimal pi per node
};

// Myopic dynamic program for max E[log V_T] with per-node 1-d concave search.
LogUtilityResult log_utility_primal(const MarketTree& tree);

// inf over martingale measures of E[log(dP/dQ)]: per node, minimize KL(p||q)
// subject to the one-step martingale constraint via a two-multiplier damped
// Newton solve with q_c = p_c / (a + b (S_child - S_node)).
MaybeValue log_utility_dual(const MarketTree& tree);

// Claim vector helper: 1 on leaves whose label equals g, else 0.
std::vector<double> indicator_claim(const MarketTree& tree, int g);

// Unique one-step martingale measure probabilities of every leaf; throws if
// some node is not complete (at most two children, price strictly inside).
std::vector<double> unique_emm_leaf_mass(const MarketTree& tree);

bool is_complete(const MarketTree& tree);

}  // namespace insider
