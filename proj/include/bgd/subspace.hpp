#pragma once

#include "bgd/matrix.hpp"

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace bgd {

/// Sparse row: (index, value) pairs sorted by index, values nonzero.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incrementally maintained reduced-echelon row basis. Rows are kept sparse;
/// the reduced form (pivot entry 1, pivot column cleared in every other row)
/// makes the basis canonical for the spanned subspace, so two spans are equal
/// iff their bases are identical.
class EchelonBasis {
public:
    EchelonBasis(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    /// Reduce v against the basis and adjoin the remainder if nonzero.
    /// Returns true if the rank grew.
    bool insert(Vec v);

    /// Same, for a sparse input; runs on a reused scratch buffer so bulk
    /// relation insertion does not thrash the allocator.
    bool insert_sparse(const SparseRow& v);

    /// Remainder of v after subtracting the unique combination of basis rows
    /// matching its pivot coordinates. Zero iff v lies in the span.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const Field& field() const { return field_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const SparseRow& sparse_row(std::size_t i) const { return rows_[i]; }

    Matrix to_matrix() const;

    bool operator==(const EchelonBasis& o) const {
        return ambient_ == o.ambient_ && field_ == o.field_ && pivots_ == o.pivots_ &&
               rows_ == o.rows_;
    }

private:
    Field field_;
    std::size_t ambient_;
    std::vector<SparseRow> rows_;         // sorted by pivot column
    std::vector<std::size_t> pivots_;     // pivot column of each row, ascending
    Vec scratch_;                         // lazily sized to ambient, kept zero
    std::vector<std::size_t> dirty_;
};

/// A linear subspace in canonical form: the unique reduced-echelon basis of
/// its span, one basis vector per matrix row.
class Subspace {
public:
    Subspace(Field f, std::size_t ambient);  // zero subspace
    static Subspace from_rows(Field f, std::size_t ambient, const std::vector<Vec>& rows);
    static Subspace from_echelon(EchelonBasis eb);
    static Subspace full(Field f, std::size_t ambient);

    std::size_t ambient_dim() const { return eb_.ambient(); }
    std::size_t dim() const { return eb_.rank(); }
    const Matrix& basis() const;  // materialized lazily, shared by copies
    const EchelonBasis& echelon() const { return eb_; }
    const Field& field() const { return eb_.field(); }

    bool contains(const Vec& v) const { return eb_.contains(v); }
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return eb_ == o.eb_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Coefficients of v in the echelon basis (read off the pivot
    /// coordinates). Throws if v is outside the subspace.
    Vec coordinates_of(const Vec& v) const;

private:
    EchelonBasis eb_;
    mutable std::shared_ptr<const Matrix> basis_memo_;
};

struct RrefResult {
    Matrix mat;                         // reduced row echelon form
    std::vector<std::size_t> pivots;    // pivot column per nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Canonical echelon basis of { v : m v = 0 }.
Subspace kernel(const Matrix& m);

/// One solution of m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square matrix, if it is invertible.
std::optional<Matrix> inverse(const Matrix& m);

/// Canonical presentation of the quotient of k^ambient by a relation
/// subspace. The quotient coordinates are the non-pivot ("free") columns of
/// the relation echelon basis, so proj is determined by the relations alone
/// and section embeds each quotient coordinate as the matching unit vector.
class Quot {
public:
    Quot(Field f, std::size_t ambient);                 // zero relations
    Quot(std::size_t ambient, Subspace relations);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return free_cols_.size(); }
    const Subspace& relations() const { return relations_; }
    const std::vector<std::size_t>& free_cols() const { return free_cols_; }

    /// Quotient coordinates of the class of an ambient vector.
    Vec reduce_class(const Vec& v) const;
    /// Canonical ambient representative of a class (unit-vector embedding).
    Vec lift(const Vec& cls) const;

    Matrix proj() const;      // dim x ambient
    Matrix section() const;   // ambient x dim, proj * section = id

    /// proj materialized once and shared between copies; the fast path for
    /// code that projects many sparse ambient vectors.
    const Matrix& proj_cached() const;

    /// proj composed with an (ambient_out x ambient_in)-level map given
    /// column-wise: returns the dim x n matrix whose column j is
    /// reduce_class(col(j)).
    Matrix project_cols(const Matrix& m) const;

    bool operator==(const Quot& o) const {
        return ambient_ == o.ambient_ && relations_ == o.relations_;
    }

private:
    std::size_t ambient_;
    Subspace relations_;
    std::vector<std::size_t> free_cols_;
    mutable std::shared_ptr<const Matrix> proj_memo_;
};

/// The two structure maps of the canonical quotient, as plain matrices.
struct QuotientMaps {
    Matrix proj;
    Matrix section;
};

QuotientMaps quotient(std::size_t ambient_dim, const Subspace& relations);

/// g restricted/induced on canonical quotients: cod.proj * g * dom.section.
/// Throws unless g descends, i.e. maps dom relations into cod relations.
Matrix induced_map(const Quot& dom, const Quot& cod, const Matrix& g);

/// Same, but only checks well-definedness and reports instead of throwing.
bool map_descends(const Quot& dom, const Quot& cod, const Matrix& g);

}  // namespace bgd
