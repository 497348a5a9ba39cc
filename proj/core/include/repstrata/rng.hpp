#pragma once

#include <cstdint>

#include <random>

#include "repstrata/matrix.hpp"

namespace repstrata {

// Deterministic seeded generator. All randomized operations in the
// library draw through this class so that identical seeds reproduce
// identical outputs byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // uniform in [0, k); k >= 1
    std::uint64_t below(std::uint64_t k) { return eng_() % k; }

    Scalar scalar(const FieldSpec& f);
    Scalar nonzero_scalar(const FieldSpec& f);

    // stream derivation (splitmix64 mix), for independent per-iteration seeds
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 eng_;
};

Matrix random_matrix(const FieldSpec& f, int rows, int cols, Rng& rng);
Matrix random_invertible(const FieldSpec& f, int n, Rng& rng);

} // namespace repstrata
