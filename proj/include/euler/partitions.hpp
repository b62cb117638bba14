#ifndef EULER_PARTITIONS_HPP
#define EULER_PARTITIONS_HPP

#include <vector>

#include "euler/rational.hpp"

namespace euler {

// Partition of the ground set {0,...,k-1} into disjoint nonempty blocks.
// Canonical form: elements ascending within blocks, blocks ordered by least
// element.
class SetPartition {
public:
    SetPartition(int k, std::vector<std::vector<int>> blocks);

    static SetPartition singletons(int k);

    int ground_size() const { return k_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    friend bool operator==(const SetPartition& a, const SetPartition& b)
    {
        return a.k_ == b.k_ && a.blocks_ == b.blocks_;
    }

private:
    int k_;
    std::vector<std::vector<int>> blocks_;
};

// All partitions of {0,...,k-1} in restricted-growth-string order.
// Desk scale: 1 <= k <= 10.
std::vector<SetPartition> enumerate_set_partitions(int k);

// c(B) = (-1)^{k-q} (|B_1|-1)! ... (|B_q|-1)!, the Moebius value against the
// all-singletons partition.
Integer c_coefficient(const SetPartition& B);

// B precedes C in the refinement order used here: every block of B is a
// union of blocks of C.  The all-singletons partition is the top element.
bool is_coarsening_of(const SetPartition& B, const SetPartition& C);

// Moebius function of the partition lattice on the interval [B, C]:
// multiplicative over blocks of B with factor (-1)^{n_t - 1} (n_t - 1)!
// where n_t counts the C-blocks merged into the t-th B-block.
// Incomparable pairs are a domain error.
Integer partition_mobius(const SetPartition& B, const SetPartition& C);

// Integer partition b_1 >= ... >= b_q >= 1.
class IntegerPartition {
public:
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }

    // multiplicities()[s] = number of parts equal to s, for s = 1..total.
    std::vector<int> multiplicities() const;

    friend bool operator==(const IntegerPartition& a, const IntegerPartition& b)
    {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    int total_;
};

// All integer partitions of k, descending-lex order of part vectors.
std::vector<IntegerPartition> enumerate_integer_partitions(int k);

}  // namespace euler

#endif
