#include "insider/kernels/parallel.hpp"

#include <atomic>
#include <thread>

namespace insider {

void parallel_for_blocks(std::size_t n_items, std::size_t block_size, int threads,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n_items == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = (n_items + block_size - 1) / block_size;
    if (threads <= 1 || n_blocks == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b)
            fn(b * block_size, std::min(n_items, (b + 1) * block_size));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            fn(b * block_size, std::min(n_items, (b + 1) * block_size));
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_workers = std::min<std::size_t>(std::size_t(threads), n_blocks);
    pool.reserve(n_workers);
    for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

double pairwise_sum(const double* data, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = data[0];
        for (std::size_t i = 1; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

}  // namespace insider
