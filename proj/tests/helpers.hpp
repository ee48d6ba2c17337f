#pragma once

#include "bgd/algebra.hpp"
#include "bgd/matrix.hpp"

#include <random>

namespace bgd::testing {

// Deterministic small-value generator for property tests.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Scalar scalar(const Field& f) {
        if (f.is_prime_field()) {
            std::uniform_int_distribution<long> d(0, static_cast<long>(f.modulus()) - 1);
            return f.from_long(d(gen_));
        }
        std::uniform_int_distribution<long> num(-4, 4);
        std::uniform_int_distribution<long> den(1, 3);
        Scalar s(num(gen_), den(gen_));
        s.canonicalize();
        return s;
    }

    Matrix matrix(const Field& f, std::size_t r, std::size_t c) {
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar(f);
        return m;
    }

    Vec vec(const Field& f, std::size_t n) {
        Vec v(n);
        for (auto& x : v) x = scalar(f);
        return v;
    }

    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(gen_);
    }

    /// Product of unipotent triangular matrices with entries in {-1,0,1};
    /// unimodular, so the inverse is integral and conjugation keeps entries
    /// small.
    Matrix unimodular(const Field& f, std::size_t d) {
        std::uniform_int_distribution<long> pick(-1, 1);
        Matrix l = Matrix::identity(f, d), u = Matrix::identity(f, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                l.at(i, j) = f.from_long(pick(gen_));
                u.at(j, i) = f.from_long(pick(gen_));
            }
        return l * u;
    }

private:
    std::mt19937 gen_;
};

inline FDAlgebra ground_field(const Field& f) {
    return FDAlgebra(f, 1, {f.one()}, {f.one()});
}

// k x k, componentwise product, unit (1,1).
inline FDAlgebra split_pair(const Field& f) {
    std::vector<Scalar> sc(8, f.zero());
    sc[(0 * 2 + 0) * 2 + 0] = f.one();
    sc[(1 * 2 + 1) * 2 + 1] = f.one();
    return FDAlgebra(f, 2, sc, {f.one(), f.one()});
}

// Group algebra of Z/2 on basis {1, g}.
inline FDAlgebra group_z2(const Field& f) {
    std::vector<Scalar> sc(8, f.zero());
    sc[(0 * 2 + 0) * 2 + 0] = f.one();  // 1*1 = 1
    sc[(0 * 2 + 1) * 2 + 1] = f.one();  // 1*g = g
    sc[(1 * 2 + 0) * 2 + 1] = f.one();  // g*1 = g
    sc[(1 * 2 + 1) * 2 + 0] = f.one();  // g*g = 1
    return FDAlgebra(f, 2, sc, {f.one(), f.zero()});
}

// Upper-triangular 2x2 matrices on basis {e11, e12, e22}.
inline FDAlgebra upper_triangular2(const Field& f) {
    std::size_t n = 3;
    std::vector<Scalar> sc(n * n * n, f.zero());
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        sc[(i * n + j) * n + k] = f.one();
    };
    set(0, 0, 0);  // e11 e11 = e11
    set(0, 1, 1);  // e11 e12 = e12
    set(1, 2, 1);  // e12 e22 = e12
    set(2, 2, 2);  // e22 e22 = e22
    return FDAlgebra(f, n, sc, {f.one(), f.zero(), f.one()});
}

}  // namespace bgd::testing
