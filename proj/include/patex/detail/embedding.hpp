#pragma once

#include "patex/matrix.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace patex::detail {

/// Per-axis index lists, 1-indexed, strictly increasing.
using AxisSelection = std::vector<std::vector<int>>;

/// Forces pattern position `position` (0-based) on each axis to host index `value`; position -1 leaves the axis free.
struct Pins {
    std::vector<int> position;
    std::vector<int> value;
};

template <class Host>
concept PrefixHost = requires(const Host& h, std::span<const int> c, std::size_t n) {
    { h.has_prefix(c, n) } -> std::convertible_to<bool>;
};

/**
 * Backtracking search for a submatrix of a host that represents a pattern.
 *
 * Index choices are made axis by axis (axis 1 first), position by position,
 * always trying the smallest admissible host index first, so the first
 * selection found is the lexicographically least one. After each choice
 * every pattern 1-entry whose coordinates are now all selected is checked
 * against the host. When the host can answer prefix queries, finishing an
 * axis also rejects the partial choice if some pattern 1-entry has no host
 * 1-entry agreeing with it on the axes selected so far.
 */
template <class Host>
class EmbeddingSearch {
public:
    EmbeddingSearch(const Host& host, std::span<const int> host_extents, const BinaryMatrix& pattern,
                    const Pins* pins = nullptr)
        : host_(host), host_extents_(host_extents.begin(), host_extents.end()), pattern_(pattern), pins_(pins)
    {
        const int d = pattern.dimension();
        std::size_t slot = 0;
        for (int l = 0; l < d; ++l) {
            slot_offset_.push_back(slot);
            for (int j = 0; j < pattern.extents()[static_cast<std::size_t>(l)]; ++j)
                slot_axis_.push_back(l), slot_pos_.push_back(j), ++slot;
        }
        complete_at_.resize(slot);
        for (const auto& b : pattern.ones()) {
            std::size_t last = 0;
            for (int l = 0; l < d; ++l)
                last = std::max(last, slot_offset_[static_cast<std::size_t>(l)] + static_cast<std::size_t>(b[static_cast<std::size_t>(l)] - 1));
            complete_at_[last].push_back(&b);
        }
        selection_.resize(static_cast<std::size_t>(d));
        for (int l = 0; l < d; ++l)
            selection_[static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(pattern.extents()[static_cast<std::size_t>(l)]), 0);
        coord_.resize(static_cast<std::size_t>(d));
    }

    std::optional<AxisSelection> run()
    {
        const auto d = static_cast<std::size_t>(pattern_.dimension());
        if (host_extents_.size() != d)
            return std::nullopt;
        for (std::size_t l = 0; l < d; ++l)
            if (pattern_.extents()[l] > host_extents_[l])
                return std::nullopt;
        if (dfs(0))
            return selection_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t slot)
    {
        if (slot == slot_axis_.size())
            return true;
        const auto l = static_cast<std::size_t>(slot_axis_[slot]);
        const int j = slot_pos_[slot];
        const int k = pattern_.extents()[l];
        auto& axis = selection_[l];
        int lo = j == 0 ? 1 : axis[static_cast<std::size_t>(j - 1)] + 1;
        int hi = host_extents_[l] - (k - 1 - j);
        if (pins_ && pins_->position[l] >= 0) {
            const int p = pins_->position[l];
            const int v = pins_->value[l];
            if (j < p)
                hi = std::min(hi, v - (p - j));
            else if (j == p)
                lo = std::max(lo, v), hi = std::min(hi, v);
        }
        const bool axis_done = j == k - 1;
        for (int v = lo; v <= hi; ++v) {
            axis[static_cast<std::size_t>(j)] = v;
            if (!entries_ok(slot))
                continue;
            if (axis_done && !prefixes_ok(l))
                continue;
            if (dfs(slot + 1))
                return true;
        }
        return false;
    }

    void fill_coord(const Coord& b, std::size_t axes)
    {
        for (std::size_t l = 0; l < axes; ++l)
            coord_[l] = selection_[l][static_cast<std::size_t>(b[l] - 1)];
    }

    bool entries_ok(std::size_t slot)
    {
        for (const Coord* b : complete_at_[slot]) {
            fill_coord(*b, b->size());
            if (!host_.one(std::span<const int>(coord_)))
                return false;
        }
        return true;
    }

    bool prefixes_ok(std::size_t axis)
    {
        if constexpr (PrefixHost<Host>) {
            if (axis + 1 >= selection_.size())
                return true;
            for (const auto& b : pattern_.ones()) {
                fill_coord(b, axis + 1);
                if (!host_.has_prefix(std::span<const int>(coord_), axis + 1))
                    return false;
            }
        }
        return true;
    }

    const Host& host_;
    std::vector<int> host_extents_;
    const BinaryMatrix& pattern_;
    const Pins* pins_;
    std::vector<std::size_t> slot_offset_;
    std::vector<int> slot_axis_, slot_pos_;
    std::vector<std::vector<const Coord*>> complete_at_;
    AxisSelection selection_;
    std::vector<int> coord_;
};

}  // namespace patex::detail
