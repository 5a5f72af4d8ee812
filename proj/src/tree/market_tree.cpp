#include "insider/tree/market_tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace insider {

void MarketTree::validate() const {
    if (nodes.empty()) throw std::domain_error("MarketTree: empty tree");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TreeNode& nd = nodes[i];
        if (!(nd.price > 0.0)) throw std::domain_error("MarketTree: prices must be > 0");
        if (nd.children.size() != nd.probs.size())
            throw std::domain_error("MarketTree: children/probs size mismatch");
        double sum = 0.0;
        for (std::size_t c = 0; c < nd.children.size(); ++c) {
            if (nd.children[c] <= int(i) || nd.children[c] >= int(nodes.size()))
                throw std::domain_error("MarketTree: children must come after their parent");
            if (!(nd.probs[c] > 0.0)) throw std::domain_error("MarketTree: probs must be > 0");
            sum += nd.probs[c];
        }
        if (!nd.children.empty() && std::abs(sum - 1.0) > 1e-12)
            throw std::domain_error("MarketTree: probs must sum to 1");
    }
}

std::vector<double> MarketTree::reach_probabilities() const {
    std::vector<double> reach(nodes.size(), 0.0);
    reach[0] = 1.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t c = 0; c < nodes[i].children.size(); ++c)
            reach[nodes[i].children[c]] += reach[i] * nodes[i].probs[c];
    return reach;
}

std::vector<int> MarketTree::leaves() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (is_leaf(int(i))) out.push_back(int(i));
    return out;
}

std::vector<int> MarketTree::label_set() const {
    std::set<int> s;
    for (int leaf : leaves()) s.insert(nodes[leaf].label);
    return std::vector<int>(s.begin(), s.end());
}

double MarketTree::label_probability(int g) const {
    const auto reach = reach_probabilities();
    double p = 0.0;
    for (int leaf : leaves())
        if (nodes[leaf].label == g) p += reach[leaf];
    return p;
}

MarketTree make_one_step(double price, const std::vector<double>& child_prices,
                         const std::vector<double>& probs) {
    MarketTree t;
    TreeNode root;
    root.price = price;
    t.nodes.push_back(root);
    for (std::size_t c = 0; c < child_prices.size(); ++c) {
        TreeNode child;
        child.price = child_prices[c];
        child.label = int(c);
        t.nodes[0].children.push_back(int(t.nodes.size()));
        t.nodes[0].probs.push_back(probs[c]);
        t.nodes.push_back(child);
    }
    t.validate();
    return t;
}

namespace {

int build_binomial(MarketTree& t, int depth, double up, double down, double p_up, double price,
                   int& leaf_counter) {
    const int idx = int(t.nodes.size());
    TreeNode nd;
    nd.price = price;
    t.nodes.push_back(nd);
    if (depth == 0) {
        t.nodes[idx].label = leaf_counter++;
        return idx;
    }
    const int c_up = build_binomial(t, depth - 1, up, down, p_up, price * up, leaf_counter);
    // Vector may have reallocated; index again.
    t.nodes[idx].children.push_back(c_up);
    t.nodes[idx].probs.push_back(p_up);
    const int c_dn = build_binomial(t, depth - 1, up, down, p_up, price * down, leaf_counter);
    t.nodes[idx].children.push_back(c_dn);
    t.nodes[idx].probs.push_back(1.0 - p_up);
    return idx;
}

int build_random(MarketTree& t, SeededStream& stream, int depth, double price, int max_branching,
                 int n_labels) {
    const int idx = int(t.nodes.size());
    TreeNode nd;
    nd.price = price;
    t.nodes.push_back(nd);
    if (depth == 0) {
        t.nodes[idx].label = int(stream.next_u64() % std::uint64_t(n_labels));
        return idx;
    }
    const int k = 2 + int(stream.next_u64() % std::uint64_t(max_branching - 1));
    // One child strictly below and one strictly above the parent price, the
    // rest anywhere in [0.55, 1.9]x; 5% margins avoid the degenerate boundary.
    std::vector<double> factors(k);
    factors[0] = 0.55 + 0.40 * stream.uniform();  // in (0.55, 0.95)
    factors[1] = 1.05 + 0.85 * stream.uniform();  // in (1.05, 1.90)
    for (int c = 2; c < k; ++c) {
        double f = 0.55 + 1.35 * stream.uniform();
        if (std::abs(f - 1.0) < 0.05) f = f < 1.0 ? 0.94 : 1.06;
        factors[c] = f;
    }
    std::vector<double> probs(k);
    double sum = 0.0;
    for (int c = 0; c < k; ++c) {
        probs[c] = 0.1 + stream.uniform();
        sum += probs[c];
    }
    for (int c = 0; c < k; ++c) probs[c] /= sum;
    for (int c = 0; c < k; ++c) {
        const int child = build_random(t, stream, depth - 1, price * factors[c], max_branching, n_labels);
        t.nodes[idx].children.push_back(child);
        t.nodes[idx].probs.push_back(probs[c]);
    }
    return idx;
}

nlohmann::json node_to_json(const MarketTree& t, int i) {
    nlohmann::json j;
    j["price"] = t.nodes[i].price;
    if (t.is_leaf(i)) {
        j["label"] = t.nodes[i].label;
    } else {
        nlohmann::json kids = nlohmann::json::array();
        for (std::size_t c = 0; c < t.nodes[i].children.size(); ++c)
            kids.push_back({{"prob", t.nodes[i].probs[c]},
                            {"node", node_to_json(t, t.nodes[i].children[c])}});
        j["children"] = kids;
    }
    return j;
}

int node_from_json(MarketTree& t, const nlohmann::json& j) {
    const int idx = int(t.nodes.size());
    TreeNode nd;
    nd.price = j.at("price").get<double>();
    if (j.contains("label")) nd.label = j.at("label").get<int>();
    t.nodes.push_back(nd);
    if (j.contains("children")) {
        for (const auto& kid : j.at("children")) {
            const double prob = kid.at("prob").get<double>();
            const int child = node_from_json(t, kid.at("node"));
            t.nodes[idx].children.push_back(child);
            t.nodes[idx].probs.push_back(prob);
        }
    }
    return idx;
}

}  // namespace

MarketTree make_binomial(int depth, double up, double down, double p_up, double s0) {
    if (depth < 1) throw std::domain_error("make_binomial: depth must be >= 1");
    MarketTree t;
    int leaves = 0;
    build_binomial(t, depth, up, down, p_up, s0, leaves);
    t.validate();
    return t;
}

MarketTree make_random_na_tree(SeededStream& stream, int max_depth, int max_branching,
                               int n_labels) {
    if (max_depth < 1 || max_branching < 2)
        throw std::domain_error("make_random_na_tree: need depth >= 1, branching >= 2");
    const int depth = 1 + int(stream.next_u64() % std::uint64_t(max_depth));
    MarketTree t;
    build_random(t, stream, depth, 1.0, max_branching, n_labels);
    t.validate();
    return t;
}

std::string tree_to_json(const MarketTree& tree) { return node_to_json(tree, 0).dump(2); }

MarketTree tree_from_json(const std::string& text) {
    MarketTree t;
    node_from_json(t, nlohmann::json::parse(text));
    t.validate();
    return t;
}

}  // namespace insider
