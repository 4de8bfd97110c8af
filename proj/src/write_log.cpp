#include "lf/write_log.hpp"

#include <algorithm>
#include <tuple>

namespace lf {

std::vector<WriteLog::Violation> WriteLog::violations() const {
    struct Rec {
        std::int64_t site;
        std::uint64_t begin, end;
        int worker;
    };
    std::vector<Rec> recs;
    std::size_t total = 0;
    for (const auto& w : writes_) total += w.size();
    recs.reserve(total);
    for (std::size_t w = 0; w < writes_.size(); ++w) {
        for (const auto& [site, task] : writes_[w]) {
            const auto& span = tasks_[w][static_cast<std::size_t>(task)];
            recs.push_back({site, span.begin, span.end, static_cast<int>(w)});
        }
    }
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        return std::tie(a.site, a.begin) < std::tie(b.site, b.begin);
    });

    std::vector<Violation> out;
    for (std::size_t lo = 0; lo < recs.size();) {
        std::size_t hi = lo;
        while (hi < recs.size() && recs[hi].site == recs[lo].site) ++hi;
        // Sorted by begin within the site group: record a conflict whenever a
        // later task starts before an earlier one from another worker ended.
        std::uint64_t max_end = 0;
        int max_end_worker = -1;
        for (std::size_t k = lo; k < hi; ++k) {
            if (max_end_worker >= 0 && recs[k].worker != max_end_worker &&
                recs[k].begin < max_end) {
                out.push_back({recs[k].site, max_end_worker, recs[k].worker});
            }
            if (recs[k].end > max_end) {
                max_end = recs[k].end;
                max_end_worker = recs[k].worker;
            }
        }
        lo = hi;
    }
    return out;
}

std::int64_t WriteLog::write_count() const {
    std::int64_t n = 0;
    for (const auto& w : writes_) n += static_cast<std::int64_t>(w.size());
    return n;
}

}  // namespace lf
