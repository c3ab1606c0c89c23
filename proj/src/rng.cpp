#include "kuhnnet/rng.hpp"

#include <cmath>

namespace kuhnnet {

namespace {
constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
} // namespace

HaltonSequence::HaltonSequence(std::size_t dim, std::uint64_t seed) {
    bases_.reserve(dim);
    shifts_.reserve(dim);
    Rng rng(seed ^ 0x5ca1ab1edeadbeefULL);
    for (std::size_t i = 0; i < dim; ++i) {
        bases_.push_back(kPrimes[i % (sizeof(kPrimes) / sizeof(kPrimes[0]))]);
        shifts_.push_back(rng.uniform());
    }
}

std::vector<double> HaltonSequence::next() {
    ++index_;
    std::vector<double> p(bases_.size());
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        const int b = bases_[i];
        double f = 1.0, r = 0.0;
        for (std::uint64_t k = index_; k > 0; k /= b) {
            f /= b;
            r += f * static_cast<double>(k % b);
        }
        r += shifts_[i];
        p[i] = r - std::floor(r);
    }
    return p;
}

} // namespace kuhnnet
