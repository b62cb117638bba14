#include "euler/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace euler {

SetPartition::SetPartition(int k, std::vector<std::vector<int>> blocks)
    : k_(k), blocks_(std::move(blocks))
{
    if (k_ < 1)
        throw std::domain_error("set partition: empty ground set");
    std::vector<char> seen(static_cast<size_t>(k_), 0);
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::domain_error("set partition: empty block");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 0 || e >= k_)
                throw std::domain_error("set partition: element out of range");
            if (seen[static_cast<size_t>(e)])
                throw std::domain_error("set partition: repeated element");
            seen[static_cast<size_t>(e)] = 1;
        }
    }
    for (char s : seen)
        if (!s)
            throw std::domain_error("set partition: incomplete cover");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
}

SetPartition SetPartition::singletons(int k)
{
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(k));
    for (int e = 0; e < k; ++e)
        blocks.push_back({e});
    return SetPartition(k, std::move(blocks));
}

std::vector<SetPartition> enumerate_set_partitions(int k)
{
    if (k < 1 || k > 10)
        throw std::domain_error("enumerate_set_partitions: k out of [1, 10]");
    std::vector<SetPartition> out;
    // restricted growth strings: a[0] = 0, a[t] <= 1 + max(a[0..t-1])
    std::vector<int> a(static_cast<size_t>(k), 0);
    auto emit = [&]() {
        int q = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<size_t>(q));
        for (int e = 0; e < k; ++e)
            blocks[static_cast<size_t>(a[static_cast<size_t>(e)])].push_back(e);
        out.emplace_back(k, std::move(blocks));
    };
    auto rec = [&](auto&& self, int t, int maxv) -> void {
        if (t == k) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[static_cast<size_t>(t)] = v;
            self(self, t + 1, std::max(maxv, v));
        }
    };
    a[0] = 0;
    rec(rec, 1, 0);
    return out;
}

Integer c_coefficient(const SetPartition& B)
{
    int k = B.ground_size(), q = B.block_count();
    Integer value = 1;
    for (const auto& block : B.blocks())
        value *= factorial(static_cast<int>(block.size()) - 1);
    return (k - q) % 2 == 0 ? value : -value;
}

namespace {

// block index of each element
std::vector<int> block_labels(const SetPartition& p)
{
    std::vector<int> label(static_cast<size_t>(p.ground_size()), -1);
    for (int b = 0; b < p.block_count(); ++b)
        for (int e : p.blocks()[static_cast<size_t>(b)])
            label[static_cast<size_t>(e)] = b;
    return label;
}

}  // namespace

bool is_coarsening_of(const SetPartition& B, const SetPartition& C)
{
    if (B.ground_size() != C.ground_size())
        return false;
    std::vector<int> b_label = block_labels(B);
    // every C-block must lie inside a single B-block
    for (const auto& cblock : C.blocks()) {
        int home = b_label[static_cast<size_t>(cblock.front())];
        for (int e : cblock)
            if (b_label[static_cast<size_t>(e)] != home)
                return false;
    }
    return true;
}

Integer partition_mobius(const SetPartition& B, const SetPartition& C)
{
    if (!is_coarsening_of(B, C))
        throw std::domain_error("partition_mobius: incomparable partitions");
    std::vector<int> c_label = block_labels(C);
    Integer value = 1;
    for (const auto& bblock : B.blocks()) {
        std::vector<char> seen(static_cast<size_t>(C.block_count()), 0);
        int merged = 0;
        for (int e : bblock) {
            int cb = c_label[static_cast<size_t>(e)];
            if (!seen[static_cast<size_t>(cb)]) {
                seen[static_cast<size_t>(cb)] = 1;
                ++merged;
            }
        }
        Integer f = factorial(merged - 1);
        value *= (merged - 1) % 2 == 0 ? f : -f;
    }
    return value;
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw std::domain_error("integer partition: no parts");
    total_ = 0;
    for (size_t t = 0; t < parts_.size(); ++t) {
        if (parts_[t] < 1)
            throw std::domain_error("integer partition: nonpositive part");
        if (t > 0 && parts_[t] > parts_[t - 1])
            throw std::domain_error("integer partition: parts not weakly decreasing");
        total_ += parts_[t];
    }
}

std::vector<int> IntegerPartition::multiplicities() const
{
    std::vector<int> m(static_cast<size_t>(total_) + 1, 0);
    for (int p : parts_)
        ++m[static_cast<size_t>(p)];
    return m;
}

std::vector<IntegerPartition> enumerate_integer_partitions(int k)
{
    if (k < 1)
        throw std::domain_error("enumerate_integer_partitions: k must be positive");
    std::vector<IntegerPartition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            parts.push_back(p);
            self(self, rest - p, p);
            parts.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

}  // namespace euler
