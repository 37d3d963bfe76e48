#include "odd/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "odd/numfmt.hpp"

namespace odd {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (count == 0)
        return;
    if (threads > static_cast<int>(count))
        threads = static_cast<int>(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; i++)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!first_error)
                    first_error = std::current_exception();
                next.store(count, std::memory_order_relaxed); // stop handing out work
                return;
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; t++)
        pool.emplace_back(worker);
    pool.clear(); // join

    if (first_error)
        std::rethrow_exception(first_error);
}

int default_thread_count() {
    if (const char* env = std::getenv("ODDKERNEL_THREADS")) {
        try {
            long long n = parse_int_token(env);
            if (n >= 1)
                return static_cast<int>(n);
        } catch (const std::exception&) {
            // ignore malformed values, fall through to autodetection
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace odd
