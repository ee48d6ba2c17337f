#include "bgd/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgd {

namespace {


// a -= c * b, sparse merge
SparseRow axpy(const Field& f, const SparseRow& a, const Scalar& c, const SparseRow& b) {
    SparseRow r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, f.mul(f.neg(c), b[j].second));
            ++j;
        } else {
            Scalar v = f.sub(a[i].second, f.mul(c, b[j].second));
            if (!Field::is_zero(v)) r.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace

bool EchelonBasis::insert(Vec v) {
    if (v.size() != ambient_) throw std::invalid_argument("echelon insert dimension mismatch");
    SparseRow sv;
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!Field::is_zero(v[i])) sv.emplace_back(i, field_.reduce(v[i]));
    return insert_sparse(sv);
}

bool EchelonBasis::insert_sparse(const SparseRow& v) {
    if (scratch_.size() != ambient_) scratch_ = zero_vec(ambient_);
    dirty_.clear();
    for (const auto& [idx, val] : v) {
        if (idx >= ambient_) throw std::invalid_argument("echelon insert index out of range");
        if (Field::is_zero(scratch_[idx])) dirty_.push_back(idx);
        mpq_add(scratch_[idx].get_mpq_t(), scratch_[idx].get_mpq_t(), val.get_mpq_t());
    }
    if (field_.is_prime_field())
        for (std::size_t idx : dirty_) scratch_[idx] = field_.reduce(scratch_[idx]);
    // Forward reduction against existing rows, touching only hit supports.
    static thread_local Scalar coef;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar& cell = scratch_[pivots_[r]];
        if (Field::is_zero(cell)) continue;
        mpq_set(coef.get_mpq_t(), cell.get_mpq_t());
        for (const auto& [idx, val] : rows_[r]) {
            if (Field::is_zero(scratch_[idx])) dirty_.push_back(idx);
            field_.submul(scratch_[idx], coef, val);
        }
    }
    std::sort(dirty_.begin(), dirty_.end());
    dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());
    std::size_t piv = ambient_;
    for (std::size_t idx : dirty_)
        if (!Field::is_zero(scratch_[idx])) {
            piv = idx;
            break;
        }
    if (piv == ambient_) {
        for (std::size_t idx : dirty_) scratch_[idx] = 0;
        return false;
    }
    Scalar linv = field_.inv(scratch_[piv]);
    SparseRow nr;
    for (std::size_t idx : dirty_) {
        if (!Field::is_zero(scratch_[idx])) nr.emplace_back(idx, field_.mul(scratch_[idx], linv));
        scratch_[idx] = 0;
    }
    // Back-eliminate the new pivot column from existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), piv,
                                   [](const auto& p, std::size_t x) { return p.first < x; });
        if (it != rows_[r].end() && it->first == piv) {
            Scalar c = it->second;
            rows_[r] = axpy(field_, rows_[r], c, nr);
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t k = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(nr));
    return true;
}

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("echelon reduce dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (Field::is_zero(c)) continue;
        Scalar coef = c;
        for (const auto& [idx, val] : rows_[r]) field_.submul(v[idx], coef, val);
    }
    return v;
}

Matrix EchelonBasis::to_matrix() const {
    Matrix m(field_, rows_.size(), ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [idx, val] : rows_[r]) m.at(r, idx) = val;
    return m;
}

Subspace::Subspace(Field f, std::size_t ambient) : eb_(f, ambient) {}

Subspace Subspace::from_rows(Field f, std::size_t ambient, const std::vector<Vec>& rows) {
    EchelonBasis eb(f, ambient);
    for (const auto& r : rows) eb.insert(r);
    return from_echelon(std::move(eb));
}

Subspace Subspace::from_echelon(EchelonBasis eb) {
    Subspace s(eb.field(), eb.ambient());
    s.eb_ = std::move(eb);
    return s;
}

const Matrix& Subspace::basis() const {
    if (!basis_memo_) basis_memo_ = std::make_shared<const Matrix>(eb_.to_matrix());
    return *basis_memo_;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
    EchelonBasis eb(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) eb.insert(unit_vec(ambient, i));
    return from_echelon(std::move(eb));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) return false;
    for (std::size_t r = 0; r < other.dim(); ++r) {
        Vec v = zero_vec(ambient_dim());
        for (const auto& [idx, val] : other.eb_.sparse_row(r)) v[idx] = val;
        if (!contains(v)) return false;
    }
    return true;
}

Vec Subspace::coordinates_of(const Vec& v) const {
    if (!contains(v)) throw std::invalid_argument("vector outside subspace");
    Vec c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = field().reduce(v[eb_.pivots()[r]]);
    return c;
}

RrefResult rref(const Matrix& m) {
    EchelonBasis eb(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
    return RrefResult{eb.to_matrix(), eb.pivots()};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const Field f = m.field();
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    EchelonBasis eb(f, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec v = zero_vec(n);
        v[j] = f.one();
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = f.neg(r.mat.at(i, j));
        eb.insert(std::move(v));
    }
    return Subspace::from_echelon(std::move(eb));
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve dimension mismatch");
    // Echelonize [m | b] and read a particular solution off the pivots.
    const Field f = m.field();
    std::size_t n = m.cols();
    Matrix aug(f, m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = f.reduce(b[i]);
    }
    RrefResult r = rref(aug);
    Vec x = zero_vec(n);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == n) return std::nullopt;  // inconsistent row 0 .. 0 | 1
        x[r.pivots[i]] = r.mat.at(i, n);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    RrefResult r = rref(m.hstack(Matrix::identity(m.field(), n)));
    // invertible iff the left block reduces to the identity
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        if (r.pivots[i] != i) return std::nullopt;
    if (r.pivots.size() != n) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

Quot::Quot(Field f, std::size_t ambient) : Quot(ambient, Subspace(f, ambient)) {}

Quot::Quot(std::size_t ambient, Subspace relations)
    : ambient_(ambient), relations_(std::move(relations)) {
    if (relations_.ambient_dim() != ambient_)
        throw std::invalid_argument("relation subspace has wrong ambient dimension");
    const auto& piv = relations_.echelon().pivots();
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (k < piv.size() && piv[k] == j) {
            ++k;
        } else {
            free_cols_.push_back(j);
        }
    }
}

Vec Quot::reduce_class(const Vec& v) const {
    Vec w = relations_.echelon().reduce(v);
    Vec c(free_cols_.size());
    for (std::size_t a = 0; a < free_cols_.size(); ++a)
        c[a] = relations_.field().reduce(w[free_cols_[a]]);
    return c;
}

Vec Quot::lift(const Vec& cls) const {
    if (cls.size() != dim()) throw std::invalid_argument("lift dimension mismatch");
    Vec v = zero_vec(ambient_);
    for (std::size_t a = 0; a < free_cols_.size(); ++a) v[free_cols_[a]] = cls[a];
    return v;
}

Matrix Quot::proj() const {
    const Field f = relations_.field();
    Matrix p(f, dim(), ambient_);
    for (std::size_t a = 0; a < free_cols_.size(); ++a) p.at(a, free_cols_[a]) = f.one();
    const auto& eb = relations_.echelon();
    for (std::size_t r = 0; r < eb.rank(); ++r) {
        std::size_t pivcol = eb.pivots()[r];
        const SparseRow& row = eb.sparse_row(r);
        // class of e_pivcol is minus the free part of the relation row
        for (const auto& [idx, val] : row) {
            if (idx == pivcol) continue;
            auto it = std::lower_bound(free_cols_.begin(), free_cols_.end(), idx);
            if (it != free_cols_.end() && *it == idx) {
                std::size_t a = static_cast<std::size_t>(it - free_cols_.begin());
                p.at(a, pivcol) = f.neg(val);
            }
        }
    }
    return p;
}

const Matrix& Quot::proj_cached() const {
    if (!proj_memo_) proj_memo_ = std::make_shared<const Matrix>(proj());
    return *proj_memo_;
}

Matrix Quot::section() const {
    const Field f = relations_.field();
    Matrix s(f, ambient_, dim());
    for (std::size_t a = 0; a < free_cols_.size(); ++a) s.at(free_cols_[a], a) = f.one();
    return s;
}

Matrix Quot::project_cols(const Matrix& m) const {
    if (m.rows() != ambient_) throw std::invalid_argument("project_cols dimension mismatch");
    Matrix out(relations_.field(), dim(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_col(j, reduce_class(m.col(j)));
    return out;
}

QuotientMaps quotient(std::size_t ambient_dim, const Subspace& relations) {
    Quot q(ambient_dim, relations);
    return QuotientMaps{q.proj(), q.section()};
}

bool map_descends(const Quot& dom, const Quot& cod, const Matrix& g) {
    if (g.cols() != dom.ambient() || g.rows() != cod.ambient())
        throw std::invalid_argument("map_descends dimension mismatch");
    const auto& rel = dom.relations();
    for (std::size_t r = 0; r < rel.dim(); ++r)
        if (!vec_is_zero(cod.reduce_class(g.apply(rel.basis().row(r))))) return false;
    return true;
}

Matrix induced_map(const Quot& dom, const Quot& cod, const Matrix& g) {
    if (!map_descends(dom, cod, g))
        throw std::runtime_error("map does not descend to the quotient");
    Matrix out(g.field(), cod.dim(), dom.dim());
    for (std::size_t a = 0; a < dom.dim(); ++a)
        out.set_col(a, cod.reduce_class(g.col(dom.free_cols()[a])));
    return out;
}

}  // namespace bgd
