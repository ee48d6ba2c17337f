#include "bgd/matrix.hpp"

#include <stdexcept>

namespace bgd {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.reduce(rows[i][j]);
    }
    return m;
}

Matrix Matrix::col_vector(Field f, const Vec& v) {
    Matrix m(f, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = f.reduce(v[i]);
    return m;
}

Matrix Matrix::row_vector(Field f, const Vec& v) {
    Matrix m(f, 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = f.reduce(v[j]);
    return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(field_, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            const Scalar& a_il = at(i, l);
            if (Field::is_zero(a_il)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& b_lj = b.at(l, j);
                if (Field::is_zero(b_lj)) continue;
                c.at(i, j) += a_il * b_lj;
            }
        }
    }
    if (field_.is_prime_field())
        for (auto& x : c.e_) x = field_.reduce(x);
    return c;
}

Matrix Matrix::operator+(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix c(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = field_.add(e_[k], b.e_[k]);
    return c;
}

Matrix Matrix::operator-(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix c(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = field_.sub(e_[k], b.e_[k]);
    return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix c(field_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = field_.mul(e_[k], s);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Scalar& aij = a.at(i, j);
            if (Field::is_zero(aij)) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (Field::is_zero(bkl)) continue;
                    c.at(i * b.rows_ + k, j * b.cols_ + l) = a.field_.mul(aij, bkl);
                }
        }
    return c;
}

Matrix Matrix::hstack(const Matrix& b) const {
    if (rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix c(field_, rows_, cols_ + b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) c.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, cols_ + j) = b.at(i, j);
    }
    return c;
}

Matrix Matrix::vstack(const Matrix& b) const {
    if (cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix c(field_, rows_ + b.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) c.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) c.at(rows_ + i, j) = b.at(i, j);
    return c;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply dimension mismatch");
    Vec r(rows_, field_.zero());
    for (std::size_t j = 0; j < cols_; ++j) {
        if (Field::is_zero(v[j])) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& m_ij = at(i, j);
            if (!Field::is_zero(m_ij)) r[i] += m_ij * v[j];
        }
    }
    if (field_.is_prime_field())
        for (auto& x : r) x = field_.reduce(x);
    return r;
}

Vec Matrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec Matrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_col dimension mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::operator==(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || field_ != b.field_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != b.e_[k]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!Field::is_zero(x)) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

std::optional<std::size_t> Matrix::first_diff_col(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
        throw std::invalid_argument("first_diff_col shape mismatch");
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            if (at(i, j) != b.at(i, j)) return j;
    return std::nullopt;
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!Field::is_zero(x)) return false;
    return true;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_kron(const Field& f, const Vec& v, const Vec& w) {
    Vec r(v.size() * w.size(), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (Field::is_zero(v[i])) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!Field::is_zero(w[j])) r[i * w.size() + j] = f.mul(v[i], w[j]);
    }
    return r;
}

}  // namespace bgd
