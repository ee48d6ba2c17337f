#include "bgd/algebra.hpp"

#include <stdexcept>

namespace bgd {

FDAlgebra::FDAlgebra(Field f, std::size_t dim, const std::vector<Scalar>& sc, Vec unit)
    : field_(f), dim_(dim), unit_(std::move(unit)) {
    if (sc.size() != dim * dim * dim)
        throw std::invalid_argument("structure constant table has wrong size");
    if (unit_.size() != dim) throw std::invalid_argument("unit vector has wrong size");
    for (auto& u : unit_) u = field_.reduce(u);
    left_mult_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Matrix li(field_, dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                li.at(k, j) = field_.reduce(sc[(i * dim + j) * dim + k]);
        left_mult_.push_back(std::move(li));
    }
    // unit law on every basis element
    for (std::size_t i = 0; i < dim; ++i) {
        if (mul(unit_, unit_vec(dim, i)) != unit_vec(dim, i))
            throw std::invalid_argument("unit fails on the left at basis " + std::to_string(i));
        if (mul(unit_vec(dim, i), unit_) != unit_vec(dim, i))
            throw std::invalid_argument("unit fails on the right at basis " + std::to_string(i));
    }
    // associativity on every basis triple
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vec eij = mul(unit_vec(dim, i), unit_vec(dim, j));
            for (std::size_t k = 0; k < dim; ++k) {
                Vec lhs = mul(eij, unit_vec(dim, k));
                Vec rhs = mul(unit_vec(dim, i), mul(unit_vec(dim, j), unit_vec(dim, k)));
                if (lhs != rhs)
                    throw std::invalid_argument("associativity fails at basis triple (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
            }
        }
}

Matrix FDAlgebra::right_mult(std::size_t j) const {
    Matrix r(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) r.at(k, i) = c(i, j, k);
    return r;
}

Matrix FDAlgebra::left_mult_by(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("left_mult_by dimension mismatch");
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!Field::is_zero(x[i])) m = m + left_mult_[i].scaled(x[i]);
    return m;
}

Matrix FDAlgebra::right_mult_by(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("right_mult_by dimension mismatch");
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        if (!Field::is_zero(x[j])) m = m + right_mult(j).scaled(x[j]);
    return m;
}

Matrix FDAlgebra::mult_map() const {
    Matrix m(field_, dim_, dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) m.at(k, i * dim_ + j) = c(i, j, k);
    return m;
}

Vec FDAlgebra::mul(const Vec& x, const Vec& y) const {
    return left_mult_by(x).apply(y);
}

bool FDAlgebra::commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != c(j, i, k)) return false;
    return true;
}

bool FDAlgebra::operator==(const FDAlgebra& o) const {
    if (field_ != o.field_ || dim_ != o.dim_ || unit_ != o.unit_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
        if (left_mult_[i] != o.left_mult_[i]) return false;
    return true;
}

FDAlgebra opposite(const FDAlgebra& a) {
    std::size_t n = a.dim();
    std::vector<Scalar> sc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = a.c(j, i, k);
    return FDAlgebra(a.field(), n, sc, a.unit());
}

FDAlgebra tensor_algebra(const FDAlgebra& a, const FDAlgebra& b) {
    if (a.field() != b.field()) throw std::invalid_argument("tensor_algebra field mismatch");
    const Field& f = a.field();
    std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<Scalar> sc(n * n * n, f.zero());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    std::size_t x = i * nb + j, y = k * nb + l;
                    for (std::size_t m = 0; m < na; ++m) {
                        const Scalar& cm = a.c(i, k, m);
                        if (Field::is_zero(cm)) continue;
                        for (std::size_t q = 0; q < nb; ++q) {
                            const Scalar& cq = b.c(j, l, q);
                            if (Field::is_zero(cq)) continue;
                            sc[(x * n + y) * n + (m * nb + q)] = f.mul(cm, cq);
                        }
                    }
                }
    return FDAlgebra(f, n, sc, vec_kron(f, a.unit(), b.unit()));
}

Matrix tensor_algebra_reindex(const FDAlgebra& a, const FDAlgebra& b, const FDAlgebra& c) {
    return Matrix::identity(a.field(), a.dim() * b.dim() * c.dim());
}

Report check_algebra_map(const AlgebraMap& f) {
    Report rep;
    if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
        throw std::invalid_argument("algebra map matrix has wrong shape");
    bool unit_ok = f.apply(f.source.unit()) == f.target.unit();
    rep.add("preserves-unit", unit_ok,
            unit_ok ? Json::object() : Json{{"witness", "unit"}});
    std::size_t n = f.source.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = f.apply(f.source.mul(unit_vec(n, i), unit_vec(n, j)));
            Vec rhs = f.target.mul(f.apply(unit_vec(n, i)), f.apply(unit_vec(n, j)));
            if (lhs != rhs) {
                rep.add("preserves-multiplication", false,
                        Json{{"witness", {{"i", i}, {"j", j}}}});
                return rep;
            }
        }
    rep.add("preserves-multiplication", true);
    return rep;
}

bool is_algebra_map(const FDAlgebra& src, const FDAlgebra& tgt, const Matrix& m) {
    return check_algebra_map(AlgebraMap{src, tgt, m}).all_pass();
}

AModule::AModule(FDAlgebra alg, std::vector<Matrix> rep)
    : alg_(std::move(alg)), rep_(std::move(rep)) {
    if (rep_.size() != alg_.dim()) throw std::invalid_argument("one action matrix per basis element required");
    dim_ = rep_.empty() ? 0 : rep_[0].rows();
    for (const auto& m : rep_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("module action matrices must be square of equal size");
    if (!rep_of(alg_.unit()).is_identity())
        throw std::invalid_argument("module action does not send the unit to the identity");
    std::size_t n = alg_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rep_of(alg_.mul(unit_vec(n, i), unit_vec(n, j))) != rep_[i] * rep_[j])
                throw std::invalid_argument("module action not multiplicative at basis pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
}

Matrix AModule::rep_of(const Vec& a) const {
    if (a.size() != alg_.dim()) throw std::invalid_argument("rep_of dimension mismatch");
    Matrix m(alg_.field(), dim_, dim_);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!Field::is_zero(a[i])) m = m + rep_[i].scaled(a[i]);
    return m;
}

bool AModule::operator==(const AModule& o) const {
    return alg_ == o.alg_ && dim_ == o.dim_ &&
           [&] {
               for (std::size_t i = 0; i < rep_.size(); ++i)
                   if (rep_[i] != o.rep_[i]) return false;
               return true;
           }();
}

AModule regular_module(const FDAlgebra& a) {
    std::vector<Matrix> rep;
    rep.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) rep.push_back(a.left_mult(i));
    return AModule(a, std::move(rep));
}

}  // namespace bgd
