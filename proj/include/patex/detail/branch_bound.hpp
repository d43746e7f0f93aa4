#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <concepts>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace patex::detail {

/// Item i of a search occupies bit i.
using ItemMask = std::uint64_t;

inline ItemMask item_bit(int i) { return ItemMask{1} << i; }

inline ItemMask items_from(int i, int count)
{
    if (i >= count)
        return 0;
    const ItemMask all = count >= 64 ? ~ItemMask{0} : (item_bit(count) - 1);
    return all & ~(item_bit(i) - 1);
}

/**
 * A monotone avoidance problem over up to 64 ordered items: a selection is
 * feasible when the structure it builds avoids the pattern, and every subset
 * of a feasible selection is feasible.
 *
 *   blocked(sel, i)        sel is feasible; is sel + {i} infeasible?
 *   avoids(sel)            full feasibility test
 *   upper_bound(sel, i, w) bound on the best value reachable once items < i are decided
 */
template <class P>
concept AvoidanceProblem = requires(const P& p, ItemMask sel, int i, long long w) {
    { p.item_count() } -> std::convertible_to<int>;
    { p.weight(i) } -> std::convertible_to<long long>;
    { p.blocked(sel, i) } -> std::convertible_to<bool>;
    { p.avoids(sel) } -> std::convertible_to<bool>;
    { p.upper_bound(sel, i, w) } -> std::convertible_to<long long>;
};

struct BranchOutcome {
    long long value = -1;
    ItemMask selection = 0;
};

/**
 * Branch-and-bound maximization of total item weight over feasible selections.
 *
 * Items are decided in index order, include before exclude. The returned
 * selection is the first optimal leaf in that order (the lexicographically
 * greatest optimal indicator vector). With several workers the tree is split
 * into prefix subtrees; each subtree prunes on its own best and only strictly
 * below the shared best, and ties are resolved by subtree order, so the
 * outcome is identical for every worker count.
 */
template <AvoidanceProblem P>
class BranchAndBound {
public:
    BranchAndBound(const P& problem, unsigned workers) : p_(problem), workers_(std::max(1u, workers))
    {
        m_ = p_.item_count();
        suffix_.assign(static_cast<std::size_t>(m_) + 1, 0);
        for (int i = m_ - 1; i >= 0; --i)
            suffix_[static_cast<std::size_t>(i)] = suffix_[static_cast<std::size_t>(i) + 1] + p_.weight(i);
    }

    /// Empty optional when even the empty selection is infeasible.
    std::optional<BranchOutcome> run()
    {
        if (!p_.avoids(0))
            return std::nullopt;
        if (workers_ == 1) {
            BranchOutcome best;
            dfs(0, 0, 0, best);
            return best;
        }
        return run_parallel();
    }

private:
    struct Task {
        int depth;
        ItemMask selection;
        long long value;
    };

    void dfs(int i, ItemMask sel, long long cur, BranchOutcome& best)
    {
        if (i == m_) {
            if (cur > best.value) {
                best = {cur, sel};
                publish(cur);
            }
            return;
        }
        const long long ub = p_.upper_bound(sel, i, cur);
        if (ub <= best.value || ub < shared_best_.load(std::memory_order_relaxed))
            return;
        const ItemMask rest = items_from(i, m_);
        if (p_.avoids(sel | rest)) {
            const long long total = cur + suffix_[static_cast<std::size_t>(i)];
            if (total > best.value) {
                best = {total, sel | rest};
                publish(total);
            }
            return;
        }
        if (!p_.blocked(sel, i))
            dfs(i + 1, sel | item_bit(i), cur + p_.weight(i), best);
        dfs(i + 1, sel, cur, best);
    }

    void publish(long long value)
    {
        long long seen = shared_best_.load(std::memory_order_relaxed);
        while (value > seen && !shared_best_.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
        }
    }

    void collect_prefixes(int i, int depth, ItemMask sel, long long cur, std::vector<Task>& out) const
    {
        if (i == depth) {
            out.push_back({i, sel, cur});
            return;
        }
        if (!p_.blocked(sel, i))
            collect_prefixes(i + 1, depth, sel | item_bit(i), cur + p_.weight(i), out);
        collect_prefixes(i + 1, depth, sel, cur, out);
    }

    BranchOutcome run_parallel()
    {
        const int depth = std::min(m_, static_cast<int>(std::bit_width(workers_ * 8u)) + 1);
        std::vector<Task> tasks;
        collect_prefixes(0, depth, 0, 0, tasks);
        std::vector<BranchOutcome> results(tasks.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
                dfs(tasks[t].depth, tasks[t].selection, tasks[t].value, results[t]);
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers_; ++w)
            pool.emplace_back(work);
        pool.clear();
        BranchOutcome best;
        for (const auto& r : results)
            if (r.value > best.value)
                best = r;
        return best;
    }

    const P& p_;
    unsigned workers_;
    int m_ = 0;
    std::vector<long long> suffix_;
    std::atomic<long long> shared_best_{-1};
};

/// Number of feasible selections; whole subtrees whose full completion is feasible are counted in closed form.
template <AvoidanceProblem P>
boost::multiprecision::cpp_int count_feasible(const P& p)
{
    using boost::multiprecision::cpp_int;
    const int m = p.item_count();
    cpp_int total = 0;
    auto dfs = [&](auto&& self, int i, ItemMask sel) -> void {
        if (p.avoids(sel | items_from(i, m))) {
            total += cpp_int(1) << (m - i);
            return;
        }
        if (!p.blocked(sel, i))
            self(self, i + 1, sel | item_bit(i));
        self(self, i + 1, sel);
    };
    if (p.avoids(0))
        dfs(dfs, 0, 0);
    return total;
}

}  // namespace patex::detail
