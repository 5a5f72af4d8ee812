#pragma once

#include <string>
#include <vector>

#include "insider/kernels/rng.hpp"

namespace insider {

// One-asset event tree. Nodes are stored parent-before-children (children
// indices strictly larger), so backward passes run in reverse index order.
struct TreeNode {
    double price = 1.0;
    std::vector<int> children;
    std::vector<double> probs;  // strictly positive, sum to 1 per node
    int label = 0;              // G label; meaningful on leaves only
};

struct MarketTree {
    std::vector<TreeNode> nodes;

    bool is_leaf(int i) const { return nodes[i].children.empty(); }
    std::size_t size() const { return nodes.size(); }

    void validate() const;

    // P-probability of reaching each node.
    std::vector<double> reach_probabilities() const;

    std::vector<int> leaves() const;

    // Distinct leaf labels in increasing order.
    std::vector<int> label_set() const;

    // P[G = g] for a leaf label.
    double label_probability(int g) const;
};

// Depth-1 node with given child prices and probabilities.
MarketTree make_one_step(double price, const std::vector<double>& child_prices,
                         const std::vector<double>& probs);

// Recombining-free binomial tree; leaf labels number the leaves 0..2^depth-1.
MarketTree make_binomial(int depth, double up, double down, double p_up, double s0 = 1.0);

// Random tree satisfying one-step no-arbitrage at every node: each node's
// price lies strictly between its extreme child prices, with a margin so the
// duality gap stays well-conditioned. Leaf labels drawn from {0,...,n_labels-1}.
MarketTree make_random_na_tree(SeededStream& stream, int max_depth = 4, int max_branching = 3,
                               int n_labels = 2);

std::string tree_to_json(const MarketTree& tree);
MarketTree tree_from_json(const std::string& text);

}  // namespace insider
