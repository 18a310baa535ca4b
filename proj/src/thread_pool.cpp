#include <honei/util/thread_pool.hpp>

#include <exception>
#include <thread>
#include <vector>

namespace honei {

IndexRange partition_range(std::size_t n, std::size_t parts, std::size_t index) {
    return {n * index / parts, n * (index + 1) / parts};
}

void parallel_run(std::size_t workers, const std::function<void(std::size_t)>& body) {
    if (workers <= 1) {
        body(0);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                body(w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    try {
        body(0);
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto& t : threads) t.join();

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace honei
