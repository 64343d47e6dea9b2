#include "hcg/parallel.hpp"
#include "hcg/errors.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace hcg {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 sample_stream(std::uint64_t master, std::uint64_t index)
{
    const std::uint64_t a = splitmix64(master);
    const std::uint64_t b = splitmix64(a ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{std::uint32_t(b), std::uint32_t(b >> 32), std::uint32_t(a), std::uint32_t(a >> 32)};
    return std::mt19937_64(seq);
}

unsigned resolve_workers(unsigned requested)
{
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for(long n, unsigned workers, const std::function<void(long)>& fn)
{
    workers = resolve_workers(workers);
    if (workers <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex guard;
    auto body = [&] {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(guard);
                if (!failure) failure = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const long count = std::min<long>(workers, n);
    for (long w = 0; w < count; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

double pairwise_sum(const double* x, long n)
{
    if (n <= 8) {
        double s = 0.0;
        for (long i = 0; i < n; ++i) s += x[i];
        return s;
    }
    const long h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

Moments moments(const std::vector<double>& x)
{
    Moments m;
    m.count = long(x.size());
    if (m.count == 0) return m;
    m.mean = pairwise_sum(x) / double(m.count);
    if (m.count < 2) return m;
    std::vector<double> dev(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) dev[i] = (x[i] - m.mean) * (x[i] - m.mean);
    m.variance = pairwise_sum(dev) / double(m.count - 1);
    m.standard_error = std::sqrt(m.variance / double(m.count));
    return m;
}

} // namespace hcg
