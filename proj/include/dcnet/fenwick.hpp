#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dcnet {

// Fenwick (binary indexed) tree over unsigned integer weights, indexed by
// dense 0-based slots. Supports append at the end, point update, prefix sum
// and weighted search, all in O(log n). Weights here are node degrees, so
// every stored value and partial sum is an exact integer.
class FenwickTree {
public:
    std::size_t size() const { return tree_.size() - 1; }

    std::uint64_t total() const { return total_; }

    // Appends a new slot carrying `weight`.
    void append(std::uint64_t weight) {
        std::size_t i = tree_.size();
        std::size_t lo = i - (i & (0 - i)) + 1;
        std::uint64_t fold = prefix_1based(i - 1) - prefix_1based(lo - 1);
        tree_.push_back(fold + weight);
        total_ += weight;
    }

    void add(std::size_t slot, std::int64_t delta) {
        total_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(total_) + delta);
        for (std::size_t i = slot + 1; i < tree_.size(); i += i & (0 - i))
            tree_[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(tree_[i]) + delta);
    }

    std::uint64_t weight(std::size_t slot) const {
        return prefix_1based(slot + 1) - prefix_1based(slot);
    }

    // Smallest 0-based slot whose inclusive prefix sum exceeds x; selects a
    // slot with probability weight/total when x is uniform on [0, total).
    std::size_t search(std::uint64_t x) const {
        if (x >= total_) throw std::out_of_range("FenwickTree::search: x beyond total weight");
        std::size_t idx = 0;
        std::size_t bit = 1;
        while ((bit << 1) < tree_.size()) bit <<= 1;
        for (; bit > 0; bit >>= 1) {
            std::size_t nxt = idx + bit;
            if (nxt < tree_.size() && tree_[nxt] <= x) {
                idx = nxt;
                x -= tree_[nxt];
            }
        }
        return idx;
    }

private:
    std::uint64_t prefix_1based(std::size_t i) const {
        std::uint64_t s = 0;
        for (; i > 0; i -= i & (0 - i)) s += tree_[i];
        return s;
    }

    std::vector<std::uint64_t> tree_{0}; // 1-based layout
    std::uint64_t total_ = 0;
};

} // namespace dcnet
