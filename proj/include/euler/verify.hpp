#ifndef EULER_VERIFY_HPP
#define EULER_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "euler/words.hpp"

namespace euler {

// Fixed linear congruential generator so verification runs are reproducible
// across platforms and standard libraries:
//   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64),
// output = top 32 bits, below(b) = output mod b.
class Lcg {
public:
    explicit Lcg(uint64_t seed) : state_(seed) {}

    uint32_t next()
    {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<uint32_t>(state_ >> 32);
    }

    int below(int bound) { return static_cast<int>(next() % static_cast<uint32_t>(bound)); }

private:
    uint64_t state_;
};

// Rejection sampler: length uniform in [1, max_length], each letter's first
// subscript uniform in [1, max_degree] and second uniform in [0, r); words
// whose degree exceeds max_degree are discarded and redrawn.
Word random_word(Lcg& gen, int r, int max_degree, int max_length);

struct VerifyFailure {
    std::string case_id;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string suite;
    long cases = 0;
    std::vector<VerifyFailure> failures;
    double wall_ms = 0;  // reporting only; excluded from serialized output

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    int r = 1;
    int max_degree = 6;
    int max_length = 4;
    int max_n = 8;
    uint64_t seed = 1;
};

// Coassociativity, counit laws, antipode convolution, unit laws, and
// commutativity/associativity/grading of the product.
VerifyReport verify_hopf(const VerifyOptions& opt);

// Agreement of the two antipode formulas, S o S = id, and S as a product
// homomorphism on sampled pairs; overline inversion and the signed
// overline product rule.
VerifyReport verify_antipode(const VerifyOptions& opt);

// rho_n(u * v) = rho_n(u) rho_n(v) on sampled pairs and oracle equivalence
// of the recursive evaluators against the nested-sum definitions.
VerifyReport verify_homomorphism(const VerifyOptions& opt);

// Weak/strict conversion, Moebius inversion, product expansions, and the
// length-reduction identity.
VerifyReport verify_duality(const VerifyOptions& opt);

// Symmetrization identities, power-sum formulas, and the partition Moebius
// recurrence.
VerifyReport verify_symmetric(const VerifyOptions& opt);

// Suites by name: hopf, antipode, homomorphism, duality, symmetric, all.
// Unknown names are a domain error.
std::vector<VerifyReport> run_verify(const std::string& suite, const VerifyOptions& opt);

}  // namespace euler

#endif
