#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace hcg {

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream for sample `index` under `master`. Depends only on the
// pair, so results do not change with the number of workers.
std::mt19937_64 sample_stream(std::uint64_t master, std::uint64_t index);

// 0 means hardware concurrency
unsigned resolve_workers(unsigned requested);

// Runs fn(i) for i in [0, n). Callers write into pre-sized, index-addressed
// storage; ordering of execution is irrelevant to the result.
void parallel_for(long n, unsigned workers, const std::function<void(long)>& fn);

// Pairwise summation, fixed tree shape for a given length.
double pairwise_sum(const double* x, long n);
inline double pairwise_sum(const std::vector<double>& x) { return pairwise_sum(x.data(), long(x.size())); }

struct Moments {
    double mean = 0.0;
    double variance = 0.0;   // unbiased
    double standard_error = 0.0;
    long count = 0;
};
Moments moments(const std::vector<double>& x);

} // namespace hcg
