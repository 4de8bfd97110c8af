#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lf {

namespace detail {

inline void cpu_relax() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_ia32_pause();
#elif defined(__aarch64__)
    asm volatile("yield");
#endif
}

}  // namespace detail

/// Fixed pool of worker threads. A parallel region hands every worker the
/// same closure; workers coordinate through barrier(), which spins briefly
/// and then yields so oversubscribed hosts stay live. Workers sleep between
/// regions, keeping wall-clock measurements of the update loops clean.
class WorkerPool {
public:
    explicit WorkerPool(int workers) : n_(workers < 1 ? 1 : workers) {
        threads_.reserve(static_cast<std::size_t>(n_));
        for (int w = 0; w < n_; ++w) {
            threads_.emplace_back([this, w] { worker_loop(w); });
        }
    }

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    ~WorkerPool() {
        {
            std::lock_guard<std::mutex> lock(m_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    int size() const { return n_; }

    /// Execute body(worker_id) on every worker; returns once all finished.
    void run(const std::function<void(int)>& body) {
        {
            std::lock_guard<std::mutex> lock(m_);
            body_ = &body;
            ++epoch_;
        }
        cv_.notify_all();
        std::unique_lock<std::mutex> lock(m_);
        cv_done_.wait(lock, [this] { return done_ == n_; });
        done_ = 0;
        body_ = nullptr;
    }

    /// Synchronize all workers of the current region.
    void barrier() {
        const std::uint64_t gen = b_gen_.load(std::memory_order_acquire);
        if (b_count_.fetch_add(1, std::memory_order_acq_rel) + 1 == n_) {
            b_count_.store(0, std::memory_order_relaxed);
            b_gen_.store(gen + 1, std::memory_order_release);
            return;
        }
        int spins = 0;
        while (b_gen_.load(std::memory_order_acquire) == gen) {
            if (++spins < 1024) {
                detail::cpu_relax();
            } else {
                std::this_thread::yield();
            }
        }
    }

private:
    void worker_loop(int id) {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(int)>* body = nullptr;
            {
                std::unique_lock<std::mutex> lock(m_);
                cv_.wait(lock, [&] { return stop_ || epoch_ != seen; });
                if (stop_) return;
                seen = epoch_;
                body = body_;
            }
            (*body)(id);
            {
                std::lock_guard<std::mutex> lock(m_);
                ++done_;
            }
            cv_done_.notify_one();
        }
    }

    int n_;
    std::vector<std::thread> threads_;
    std::mutex m_;
    std::condition_variable cv_, cv_done_;
    const std::function<void(int)>* body_ = nullptr;
    std::uint64_t epoch_ = 0;
    int done_ = 0;
    bool stop_ = false;

    std::atomic<int> b_count_{0};
    std::atomic<std::uint64_t> b_gen_{0};
};

}  // namespace lf
