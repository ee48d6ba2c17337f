#pragma once

#include "bgd/report.hpp"
#include "bgd/subspace.hpp"

#include <string>
#include <vector>

namespace bgd {

/// Finite-dimensional associative unital algebra presented by structure
/// constants: e_i * e_j = sum_k c[i][j][k] e_k. Associativity and the
/// two-sided unit law are verified on construction, with the offending basis
/// triple reported on failure; downstream code may assume validity.
class FDAlgebra {
public:
    FDAlgebra(Field f, std::size_t dim, const std::vector<Scalar>& structure_constants,
              Vec unit);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return left_mult_[i].at(k, j);
    }

    /// Matrix of left multiplication by e_i acting on coordinate columns.
    const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
    Matrix right_mult(std::size_t i) const;

    Matrix left_mult_by(const Vec& x) const;
    Matrix right_mult_by(const Vec& x) const;

    /// Multiplication as a linear map A (x) A -> A on lex tensor coordinates.
    Matrix mult_map() const;

    Vec mul(const Vec& x, const Vec& y) const;
    bool commutative() const;

    bool operator==(const FDAlgebra& o) const;
    bool operator!=(const FDAlgebra& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t dim_;
    std::vector<Matrix> left_mult_;
    Vec unit_;
};

FDAlgebra opposite(const FDAlgebra& a);

/// Componentwise structure constants on the lex basis e_i (x) f_j.
FDAlgebra tensor_algebra(const FDAlgebra& a, const FDAlgebra& b);

/// Canonical reindexing (a (x) b) (x) c -> a (x) (b (x) c). On lex indices
/// this is the identity permutation; returned explicitly so callers can
/// verify it as an algebra isomorphism.
Matrix tensor_algebra_reindex(const FDAlgebra& a, const FDAlgebra& b, const FDAlgebra& c);

/// Algebra homomorphism candidate; validity is established by
/// check_algebra_map, not assumed at construction.
struct AlgebraMap {
    FDAlgebra source;
    FDAlgebra target;
    Matrix matrix;  // target.dim x source.dim

    Vec apply(const Vec& x) const { return matrix.apply(x); }
};

/// Pass iff f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j) for all basis pairs;
/// the first failing pair is reported as witness.
Report check_algebra_map(const AlgebraMap& f);

bool is_algebra_map(const FDAlgebra& src, const FDAlgebra& tgt, const Matrix& m);

/// Left module over an FDAlgebra given by representing matrices, one per
/// algebra basis element. rep(unit) = id and multiplicativity are checked.
class AModule {
public:
    AModule(FDAlgebra alg, std::vector<Matrix> rep);

    const FDAlgebra& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const Matrix& rep(std::size_t i) const { return rep_[i]; }
    Matrix rep_of(const Vec& a) const;

    bool operator==(const AModule& o) const;

private:
    FDAlgebra alg_;
    std::size_t dim_;
    std::vector<Matrix> rep_;
};

/// The regular representation (the algebra acting on itself from the left).
AModule regular_module(const FDAlgebra& a);

}  // namespace bgd
