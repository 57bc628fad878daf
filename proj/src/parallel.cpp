#include "tightcx/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tightcx {

namespace {
std::atomic<std::size_t> g_threads{0};
}

std::size_t thread_count() {
    std::size_t n = g_threads.load();
    if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    return n;
}

void set_thread_count(std::size_t n) { g_threads.store(n); }

void parallel_chunks(std::size_t total, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (chunks == 0) chunks = 1;
    const std::size_t workers = std::min(thread_count(), chunks);
    auto bounds = [&](std::size_t c) { return total * c / chunks; };

    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) body(bounds(c), bounds(c + 1), c);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < chunks; c = next++) {
                try {
                    body(bounds(c), bounds(c + 1), c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace tightcx
