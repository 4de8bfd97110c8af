#pragma once

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

namespace lf {

/// Instrumentation for the write-disjointness check: every site mutation is
/// recorded against the task (cell/domain activation) that performed it, and
/// tasks carry start/end stamps from a global clock. Two writes to the same
/// site conflict iff their tasks ran concurrently (overlapping stamp
/// intervals) on distinct workers; synchronization edges (barriers, block
/// done-flags) order the stamps, so legally serialized rewrites never flag.
class WriteLog {
public:
    explicit WriteLog(int workers)
        : tasks_(static_cast<std::size_t>(workers)),
          writes_(static_cast<std::size_t>(workers)) {}

    std::int32_t begin_task(int worker) {
        auto& v = tasks_[static_cast<std::size_t>(worker)];
        v.push_back({clock_.fetch_add(1, std::memory_order_acq_rel), 0});
        return static_cast<std::int32_t>(v.size() - 1);
    }
    void end_task(int worker, std::int32_t task) {
        tasks_[static_cast<std::size_t>(worker)][static_cast<std::size_t>(task)].end =
            clock_.fetch_add(1, std::memory_order_acq_rel);
    }
    void log_write(int worker, std::int32_t task, std::int64_t site) {
        writes_[static_cast<std::size_t>(worker)].push_back({site, task});
    }

    struct Violation {
        std::int64_t site;
        int worker_a, worker_b;
    };
    std::vector<Violation> violations() const;
    std::int64_t write_count() const;

private:
    struct TaskSpan {
        std::uint64_t begin, end;
    };
    std::atomic<std::uint64_t> clock_{1};
    std::vector<std::vector<TaskSpan>> tasks_;
    std::vector<std::vector<std::pair<std::int64_t, std::int32_t>>> writes_;
};

/// Per-task handle threaded through kernels; null log means no instrumentation.
struct WriteCtx {
    WriteLog* log = nullptr;
    std::int32_t worker = 0;
    std::int32_t task = -1;

    void record(std::int64_t site) const {
        if (log) log->log_write(worker, task, site);
    }
};

}  // namespace lf
