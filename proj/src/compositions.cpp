#include "euler/compositions.hpp"

#include <numeric>
#include <stdexcept>

namespace euler {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw std::domain_error("composition: no parts");
    for (int p : parts_)
        if (p < 1)
            throw std::domain_error("composition: nonpositive part");
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Composition> enumerate_compositions(int n)
{
    if (n < 1)
        throw std::domain_error("enumerate_compositions: n must be positive");
    std::vector<Composition> out;
    out.reserve(static_cast<size_t>(1) << (n - 1));
    std::vector<int> parts;
    // lexicographic order by parts: grow the first part last
    auto emit = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            parts.push_back(p);
            self(self, rest - p);
            parts.pop_back();
        }
    };
    emit(emit, n);
    return out;
}

Composition compose_compositions(const Composition& J, const Composition& I)
{
    if (J.total() != I.length())
        throw std::domain_error("compose_compositions: total(J) != length(I)");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(J.length()));
    int pos = 0;
    for (int block : J.parts()) {
        int sum = 0;
        for (int t = 0; t < block; ++t)
            sum += I.parts()[static_cast<size_t>(pos++)];
        out.push_back(sum);
    }
    return Composition(std::move(out));
}

std::vector<int> act_on_args(const Composition& J, const std::vector<int>& X, int r)
{
    if (J.total() != static_cast<int>(X.size()))
        throw std::domain_error("act_on_args: total(J) != length(X)");
    if (r < 1)
        throw std::domain_error("act_on_args: r must be positive");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(J.length()));
    size_t pos = 0;
    for (int block : J.parts()) {
        long long sum = 0;
        for (int t = 0; t < block; ++t)
            sum += X[pos++];
        out.push_back(static_cast<int>(((sum % r) + r) % r));
    }
    return out;
}

}  // namespace euler
