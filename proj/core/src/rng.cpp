#include "repstrata/rng.hpp"

namespace repstrata {

Scalar Rng::scalar(const FieldSpec& f) {
    if (f.is_prime_field()) return f.from_int(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(f.modulus()))));
    // small integers; used only where Q sampling is needed in tests
    return f.from_int(static_cast<std::int64_t>(below(19)) - 9);
}

Scalar Rng::nonzero_scalar(const FieldSpec& f) {
    for (;;) {
        Scalar s = scalar(f);
        if (!s.is_zero()) return s;
    }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 on seed xor a stream-spread constant
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Matrix random_matrix(const FieldSpec& f, int rows, int cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, rng.scalar(f));
    return m;
}

Matrix random_invertible(const FieldSpec& f, int n, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

} // namespace repstrata
