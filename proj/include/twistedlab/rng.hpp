#pragma once

#include <cstdint>
#include <random>

#include "twistedlab/cyclotomic.hpp"

namespace twistedlab {

/// Deterministic RNG for scans and property tests. Draws go through the
/// raw mt19937_64 stream (whose sequence the standard pins down exactly);
/// std::uniform_int_distribution is avoided because its mapping differs
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
    /// for test-input generation and keeps the mapping portable.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    Rational rational(long num_bound, long den_bound) {
        long n = static_cast<long>(uniform(-num_bound, num_bound));
        long d = static_cast<long>(uniform(1, den_bound));
        return Rational(n, d);
    }

    /// Random field element with all coordinates drawn from [-height, height].
    CycScalar scalar(const FieldPtr& f, long height, long den_bound = 1) {
        std::vector<Rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(f->degree()));
        for (int i = 0; i < f->degree(); ++i) coeffs.push_back(rational(height, den_bound));
        return CycScalar::from_coeffs(f, std::move(coeffs));
    }

    /// Sparse field element: a single power of zeta times a small integer.
    CycScalar sparse_scalar(const FieldPtr& f, long height) {
        long c = static_cast<long>(uniform(-height, height));
        if (c == 0) c = 1;
        CycScalar z = CycScalar::root_power(f, uniform(0, f->conductor() - 1));
        return z * CycScalar::from_rational(f, Rational(c));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace twistedlab
