#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace insider {

// Runs fn over [0, n_items) in fixed-size blocks. Blocks are claimed
// dynamically by worker threads but each block's work depends only on its
// index range, so results are identical for any thread count.
void parallel_for_blocks(std::size_t n_items, std::size_t block_size, int threads,
                         const std::function<void(std::size_t begin, std::size_t end)>& fn);

// Fixed-shape pairwise summation: the addition tree depends only on n, never
// on thread count or data, so reductions are bit-identical run to run.
double pairwise_sum(const double* data, std::size_t n);
double pairwise_sum(const std::vector<double>& v);

}  // namespace insider
