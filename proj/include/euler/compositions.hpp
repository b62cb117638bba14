#ifndef EULER_COMPOSITIONS_HPP
#define EULER_COMPOSITIONS_HPP

#include <vector>

namespace euler {

// Nonempty ordered sequence of positive integers.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    int length() const { return static_cast<int>(parts_.size()); }

    friend bool operator==(const Composition& a, const Composition& b)
    {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    int total_;
};

// All 2^{n-1} compositions of n, ordered lexicographically by parts:
// (1,1,1), (1,2), (2,1), (3) for n = 3.
std::vector<Composition> enumerate_compositions(int n);

// Block-sum composition J o I: groups consecutive parts of I into blocks of
// sizes j_1,...,j_p and sums each block.  Requires total(J) == length(I).
Composition compose_compositions(const Composition& J, const Composition& I);

// Action of J on a string of root-of-unity indices: per-block sums mod r.
// Requires total(J) == X.size().
std::vector<int> act_on_args(const Composition& J, const std::vector<int>& X, int r);

}  // namespace euler

#endif
