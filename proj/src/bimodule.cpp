#include "bgd/bimodule.hpp"

#include <stdexcept>

namespace bgd {

namespace {

void check_rep(const FDAlgebra& base, const std::vector<Matrix>& action, std::size_t dim,
               const char* what) {
    if (action.size() != base.dim())
        throw std::invalid_argument(std::string(what) + ": one action matrix per base basis element required");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument(std::string(what) + ": action matrices must be square of equal size");
}

Matrix combine(const Field& f, const std::vector<Matrix>& mats, const Vec& e, std::size_t dim) {
    Matrix m(f, dim, dim);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!Field::is_zero(e[i])) m = m + mats[i].scaled(e[i]);
    return m;
}

}  // namespace

Bimodule::Bimodule(FDAlgebra base, std::vector<Matrix> action)
    : base_(std::move(base)), dim_(action.empty() ? 0 : action[0].rows()), action_(std::move(action)) {
    check_rep(base_, action_, dim_, "module");
    if (!action_of(base_.unit()).is_identity())
        throw std::invalid_argument("module: unit does not act as identity");
    std::size_t n = base_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (action_of(base_.mul(unit_vec(n, i), unit_vec(n, j))) != action_[i] * action_[j])
                throw std::invalid_argument("module: action not multiplicative at basis pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
}

Bimodule::Bimodule(unchecked_t, FDAlgebra base, std::vector<Matrix> action)
    : base_(std::move(base)), dim_(action.empty() ? 0 : action[0].rows()), action_(std::move(action)) {
    check_rep(base_, action_, dim_, "module");
}

Bimodule Bimodule::unchecked(FDAlgebra base, std::vector<Matrix> action) {
    return Bimodule(unchecked_t{}, std::move(base), std::move(action));
}

Matrix Bimodule::action_of(const Vec& e) const {
    if (e.size() != base_.dim()) throw std::invalid_argument("action_of dimension mismatch");
    return combine(base_.field(), action_, e, dim_);
}

bool Bimodule::operator==(const Bimodule& o) const {
    if (!(base_ == o.base_) || dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < action_.size(); ++i)
        if (action_[i] != o.action_[i]) return false;
    return true;
}

ModuleMap make_module_map(BimodulePtr src, BimodulePtr tgt, Matrix mat) {
    if (!intertwines(*src, *tgt, mat))
        throw std::invalid_argument("matrix does not intertwine the module actions");
    return ModuleMap{std::move(src), std::move(tgt), std::move(mat)};
}

bool intertwines(const Bimodule& src, const Bimodule& tgt, const Matrix& mat) {
    if (mat.rows() != tgt.dim() || mat.cols() != src.dim()) return false;
    for (std::size_t i = 0; i < src.base().dim(); ++i)
        if (mat * src.action(i) != tgt.action(i) * mat) return false;
    return true;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    if (f.source.get() != g.target.get() && !(*f.source == *g.target))
        throw std::invalid_argument("composition source/target mismatch");
    return ModuleMap{g.source, f.target, f.mat * g.mat};
}

ModuleMap identity_map(BimodulePtr x) {
    Matrix id = Matrix::identity(x->base().field(), x->dim());
    return ModuleMap{x, x, std::move(id)};
}

EEBimodule::EEBimodule(FDAlgebra base, std::vector<Matrix> left, std::vector<Matrix> right)
    : base_(std::move(base)),
      dim_(left.empty() ? 0 : left[0].rows()),
      left_(std::move(left)),
      right_(std::move(right)) {
    check_rep(base_, left_, dim_, "carrier(left)");
    check_rep(base_, right_, dim_, "carrier(right)");
    if (!left_of(base_.unit()).is_identity())
        throw std::invalid_argument("carrier: unit does not act as identity on the left");
    if (!right_of(base_.unit()).is_identity())
        throw std::invalid_argument("carrier: unit does not act as identity on the right");
    std::size_t n = base_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec eij = base_.mul(unit_vec(n, i), unit_vec(n, j));
            if (left_of(eij) != left_[i] * left_[j])
                throw std::invalid_argument("carrier: left action not multiplicative");
            if (right_of(eij) != right_[j] * right_[i])
                throw std::invalid_argument("carrier: right action not anti-multiplicative");
            if (left_[i] * right_[j] != right_[j] * left_[i])
                throw std::invalid_argument("carrier: left and right actions do not commute");
        }
}

Matrix EEBimodule::left_of(const Vec& e) const { return combine(base_.field(), left_, e, dim_); }
Matrix EEBimodule::right_of(const Vec& e) const { return combine(base_.field(), right_, e, dim_); }

Vec Envelope::s_elt(std::size_t i) const {
    std::size_t n = R.dim();
    Vec v = zero_vec(n * n);
    for (std::size_t b = 0; b < n; ++b) v[i * n + b] = R.unit()[b];
    return v;
}

Vec Envelope::t_elt(std::size_t j) const {
    std::size_t n = R.dim();
    Vec v = zero_vec(n * n);
    for (std::size_t a = 0; a < n; ++a) v[a * n + j] = R.unit()[a];
    return v;
}

Matrix Envelope::s_map() const {
    Matrix m(R.field(), E.dim(), R.dim());
    for (std::size_t i = 0; i < R.dim(); ++i) m.set_col(i, s_elt(i));
    return m;
}

Matrix Envelope::t_map() const {
    Matrix m(R.field(), E.dim(), R.dim());
    for (std::size_t i = 0; i < R.dim(); ++i) m.set_col(i, t_elt(i));
    return m;
}

Envelope make_envelope(const FDAlgebra& R) {
    return Envelope{R, tensor_algebra(R, opposite(R))};
}

Matrix induced_kron(const Quot& dom, const Quot& cod, const Matrix& A, const Matrix& B) {
    const Field& f = A.field();
    std::size_t dY = B.cols(), dYc = B.rows();
    const Matrix& P = cod.proj_cached();
    // class of (A (x) B) e_idx accumulated directly in quotient coordinates
    auto add_image = [&](Vec& acc, const Scalar& scale, std::size_t idx) {
        std::size_t x = idx / dY, y = idx % dY;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            const Scalar& ai = A.at(i, x);
            if (Field::is_zero(ai)) continue;
            for (std::size_t j = 0; j < dYc; ++j) {
                const Scalar& bj = B.at(j, y);
                if (Field::is_zero(bj)) continue;
                Scalar coef = f.mul(scale, f.mul(ai, bj));
                std::size_t amb = i * dYc + j;
                for (std::size_t q = 0; q < cod.dim(); ++q) {
                    const Scalar& pq = P.at(q, amb);
                    if (!Field::is_zero(pq)) f.addmul(acc[q], coef, pq);
                }
            }
        }
    };
    const Subspace& rel = dom.relations();
    Scalar one = f.one();
    for (std::size_t r = 0; r < rel.dim(); ++r) {
        Vec acc = zero_vec(cod.dim());
        for (const auto& [idx, val] : rel.echelon().sparse_row(r)) add_image(acc, val, idx);
        if (!vec_is_zero(acc))
            throw std::runtime_error("tensor-level map does not descend to the quotient");
    }
    Matrix out(f, cod.dim(), dom.dim());
    for (std::size_t c = 0; c < dom.dim(); ++c) {
        Vec acc = zero_vec(cod.dim());
        add_image(acc, one, dom.free_cols()[c]);
        out.set_col(c, std::move(acc));
    }
    return out;
}

TensorResult kernel_tensor(const EEBimodule& A, const Bimodule& X) {
    if (!(A.base() == X.base())) throw std::invalid_argument("kernel_tensor base mismatch");
    const FDAlgebra& E = A.base();
    const Field& f = E.field();
    std::size_t dA = A.dim(), dX = X.dim(), amb = dA * dX;
    EchelonBasis rels(f, amb);
    SparseRow row;
    for (std::size_t e = 0; e < E.dim(); ++e) {
        const Matrix& ra = A.right(e);
        const Matrix& lx = X.action(e);
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t x = 0; x < dX; ++x) {
                row.clear();
                for (std::size_t i = 0; i < dA; ++i) {
                    const Scalar& c = ra.at(i, a);
                    if (!Field::is_zero(c)) row.emplace_back(i * dX + x, c);
                }
                for (std::size_t j = 0; j < dX; ++j) {
                    const Scalar& c = lx.at(j, x);
                    if (!Field::is_zero(c)) row.emplace_back(a * dX + j, f.neg(c));
                }
                rels.insert_sparse(row);
            }
    }
    Quot q(amb, Subspace::from_echelon(std::move(rels)));
    std::vector<Matrix> action;
    action.reserve(E.dim());
    Matrix idX = Matrix::identity(f, dX);
    for (std::size_t e = 0; e < E.dim(); ++e)
        action.push_back(induced_kron(q, q, A.left(e), idX));
    auto obj = std::make_shared<Bimodule>(Bimodule::unchecked(E, std::move(action)));
    return TensorResult{std::move(obj), std::move(q)};
}

RCategory::RCategory(FDAlgebra R) : env_(make_envelope(std::move(R))) {
    const FDAlgebra& Ralg = env_.R;
    const FDAlgebra& E = env_.E;
    std::size_t n = Ralg.dim();
    // R as R-R-bimodule: (r (x) r') . x = r x r'
    std::vector<Matrix> unit_action;
    unit_action.reserve(E.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            unit_action.push_back(Ralg.left_mult(i) * Ralg.right_mult(j));
    unit_ = std::make_shared<Bimodule>(E, std::move(unit_action));
    std::vector<Matrix> reg;
    reg.reserve(E.dim());
    for (std::size_t i = 0; i < E.dim(); ++i) reg.push_back(E.left_mult(i));
    regE_ = std::make_shared<Bimodule>(E, std::move(reg));
}

const TensorResult& RCategory::tensor(const BimodulePtr& X, const BimodulePtr& Y) {
    auto key = std::make_pair(X, Y);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const Field& f = E().field();
    std::size_t dX = X->dim(), dY = Y->dim(), amb = dX * dY;
    std::size_t n = R().dim();
    EchelonBasis rels(f, amb);
    SparseRow row;
    for (std::size_t r = 0; r < n; ++r) {
        Matrix xr = X->action_of(env_.t_elt(r));  // right R-action on X
        Matrix ry = Y->action_of(env_.s_elt(r));  // left R-action on Y
        for (std::size_t x = 0; x < dX; ++x)
            for (std::size_t y = 0; y < dY; ++y) {
                row.clear();
                for (std::size_t i = 0; i < dX; ++i) {
                    const Scalar& c = xr.at(i, x);
                    if (!Field::is_zero(c)) row.emplace_back(i * dY + y, c);
                }
                for (std::size_t j = 0; j < dY; ++j) {
                    const Scalar& c = ry.at(j, y);
                    if (!Field::is_zero(c)) row.emplace_back(x * dY + j, f.neg(c));
                }
                rels.insert_sparse(row);
            }
    }
    Quot q(amb, Subspace::from_echelon(std::move(rels)));
    std::vector<Matrix> action;
    action.reserve(env_.E.dim());
    for (std::size_t i = 0; i < n; ++i) {
        Matrix lx = X->action_of(env_.s_elt(i));
        for (std::size_t j = 0; j < n; ++j)
            action.push_back(induced_kron(q, q, lx, Y->action_of(env_.t_elt(j))));
    }
    auto obj = std::make_shared<Bimodule>(Bimodule::unchecked(env_.E, std::move(action)));
    auto [pos, inserted] = cache_.emplace(key, TensorResult{std::move(obj), std::move(q)});
    (void)inserted;
    return pos->second;
}

ModuleMap RCategory::tensor_map(const ModuleMap& fm, const ModuleMap& gm) {
    const TensorResult dom = tensor(fm.source, gm.source);
    const TensorResult cod = tensor(fm.target, gm.target);
    Matrix m = induced_kron(dom.quot, cod.quot, fm.mat, gm.mat);
    return ModuleMap{dom.object, cod.object, std::move(m)};
}

namespace {

// Class of e_x (x) e_y (x) e_z in ((X (x) Y) (x) Z): project the left pair,
// embed against z, project again. Runs on the cached projections.
Vec left_nested_class(const Quot& qXY, const Quot& qXYZ, std::size_t dY, std::size_t dZ,
                      std::size_t x, std::size_t y, std::size_t z) {
    const Field& f = qXY.relations().field();
    const Matrix& P1 = qXY.proj_cached();
    const Matrix& P2 = qXYZ.proj_cached();
    Vec acc = zero_vec(qXYZ.dim());
    std::size_t inner = qXY.dim();
    for (std::size_t w = 0; w < inner; ++w) {
        const Scalar& c = P1.at(w, x * dY + y);
        if (Field::is_zero(c)) continue;
        std::size_t amb = w * dZ + z;
        for (std::size_t q = 0; q < acc.size(); ++q) {
            const Scalar& p = P2.at(q, amb);
            if (!Field::is_zero(p)) f.addmul(acc[q], c, p);
        }
    }
    return acc;
}

// Class of e_x (x) e_y (x) e_z in (X (x) (Y (x) Z)).
Vec right_nested_class(const Quot& qYZ, const Quot& qXYZ, std::size_t dZ, std::size_t x,
                       std::size_t y, std::size_t z) {
    const Field& f = qYZ.relations().field();
    const Matrix& P1 = qYZ.proj_cached();
    const Matrix& P2 = qXYZ.proj_cached();
    Vec acc = zero_vec(qXYZ.dim());
    std::size_t inner = qYZ.dim();
    for (std::size_t w = 0; w < inner; ++w) {
        const Scalar& c = P1.at(w, y * dZ + z);
        if (Field::is_zero(c)) continue;
        std::size_t amb = x * inner + w;
        for (std::size_t q = 0; q < acc.size(); ++q) {
            const Scalar& p = P2.at(q, amb);
            if (!Field::is_zero(p)) f.addmul(acc[q], c, p);
        }
    }
    return acc;
}

void accumulate(const Field& f, Vec& acc, const Scalar& val, const Vec& img) {
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (!Field::is_zero(img[k])) acc[k] = f.add(acc[k], f.mul(val, img[k]));
}

}  // namespace

ModuleMap RCategory::associator(const BimodulePtr& X, const BimodulePtr& Y, const BimodulePtr& Z) {
    const Field& f = env_.E.field();
    std::size_t dY = Y->dim(), dZ = Z->dim();
    const Quot qYZ = tensor(Y, Z).quot;
    const Quot qXY = tensor(X, Y).quot;
    const TensorResult dom = tensor(X, tensor(Y, Z).object);  // X (x) (Y (x) Z)
    const TensorResult cod = tensor(tensor(X, Y).object, Z);  // (X (x) Y) (x) Z

    auto col_for = [&](std::size_t x, std::size_t y, std::size_t z) {
        return left_nested_class(qXY, cod.quot, dY, dZ, x, y, z);
    };
    // image of a domain-ambient basis vector (x, w): lift w to its canonical
    // pair (y, z) and push through the identity on the triple tensor
    std::size_t inner = qYZ.dim();
    auto col_dom = [&](std::size_t idx) {
        std::size_t yz = qYZ.free_cols()[idx % inner];
        return col_for(idx / inner, yz / dZ, yz % dZ);
    };

    // Well-definedness: both relation layers of the nested domain must die
    // in the codomain quotient.
    const Subspace& rel1 = dom.quot.relations();
    for (std::size_t r = 0; r < rel1.dim(); ++r) {
        Vec acc = zero_vec(cod.quot.dim());
        for (const auto& [idx, val] : rel1.echelon().sparse_row(r)) accumulate(f, acc, val, col_dom(idx));
        if (!vec_is_zero(acc)) throw std::runtime_error("associator does not descend (outer layer)");
    }
    const Subspace& rel2 = qYZ.relations();
    for (std::size_t x = 0; x < X->dim(); ++x)
        for (std::size_t r = 0; r < rel2.dim(); ++r) {
            Vec acc = zero_vec(cod.quot.dim());
            for (const auto& [idx, val] : rel2.echelon().sparse_row(r))
                accumulate(f, acc, val, col_for(x, idx / dZ, idx % dZ));
            if (!vec_is_zero(acc)) throw std::runtime_error("associator does not descend (inner layer)");
        }

    Matrix m(f, cod.quot.dim(), dom.quot.dim());
    for (std::size_t c = 0; c < dom.quot.dim(); ++c) m.set_col(c, col_dom(dom.quot.free_cols()[c]));
    return ModuleMap{dom.object, cod.object, std::move(m)};
}

ModuleMap RCategory::associator_inv(const BimodulePtr& X, const BimodulePtr& Y,
                                    const BimodulePtr& Z) {
    const Field& f = env_.E.field();
    std::size_t dY = Y->dim(), dZ = Z->dim();
    const Quot qYZ = tensor(Y, Z).quot;
    const Quot qXY = tensor(X, Y).quot;
    const TensorResult dom = tensor(tensor(X, Y).object, Z);
    const TensorResult cod = tensor(X, tensor(Y, Z).object);

    auto col_for = [&](std::size_t x, std::size_t y, std::size_t z) {
        return right_nested_class(qYZ, cod.quot, dZ, x, y, z);
    };
    auto col_dom = [&](std::size_t idx) {
        std::size_t xy = qXY.free_cols()[idx / dZ];
        return col_for(xy / dY, xy % dY, idx % dZ);
    };

    const Subspace& rel1 = dom.quot.relations();
    for (std::size_t r = 0; r < rel1.dim(); ++r) {
        Vec acc = zero_vec(cod.quot.dim());
        for (const auto& [idx, val] : rel1.echelon().sparse_row(r)) accumulate(f, acc, val, col_dom(idx));
        if (!vec_is_zero(acc)) throw std::runtime_error("associator inverse does not descend (outer layer)");
    }
    const Subspace& rel2 = qXY.relations();
    for (std::size_t z = 0; z < dZ; ++z)
        for (std::size_t r = 0; r < rel2.dim(); ++r) {
            Vec acc = zero_vec(cod.quot.dim());
            for (const auto& [idx, val] : rel2.echelon().sparse_row(r))
                accumulate(f, acc, val, col_for(idx / dY, idx % dY, z));
            if (!vec_is_zero(acc)) throw std::runtime_error("associator inverse does not descend (inner layer)");
        }

    Matrix m(f, cod.quot.dim(), dom.quot.dim());
    for (std::size_t c = 0; c < dom.quot.dim(); ++c) m.set_col(c, col_dom(dom.quot.free_cols()[c]));

    ModuleMap fwd = associator(X, Y, Z);
    if (!(m * fwd.mat).is_identity() || !(fwd.mat * m).is_identity())
        throw std::runtime_error("associator is not invertible");
    return ModuleMap{dom.object, cod.object, std::move(m)};
}

ModuleMap RCategory::left_unitor(const BimodulePtr& X) {
    const Field& f = env_.E.field();
    std::size_t n = env_.R.dim(), dX = X->dim();
    const TensorResult RX = tensor(unit_, X);
    std::vector<Matrix> acts;
    acts.reserve(n);
    for (std::size_t r = 0; r < n; ++r) acts.push_back(X->action_of(env_.s_elt(r)));
    auto col_amb = [&](std::size_t idx) { return acts[idx / dX].col(idx % dX); };

    const Subspace& rel = RX.quot.relations();
    for (std::size_t r = 0; r < rel.dim(); ++r) {
        Vec acc = zero_vec(dX);
        for (const auto& [idx, val] : rel.echelon().sparse_row(r)) accumulate(f, acc, val, col_amb(idx));
        if (!vec_is_zero(acc)) throw std::runtime_error("left unitor does not descend");
    }
    Matrix m(f, dX, RX.quot.dim());
    for (std::size_t c = 0; c < RX.quot.dim(); ++c) m.set_col(c, col_amb(RX.quot.free_cols()[c]));
    return ModuleMap{RX.object, X, std::move(m)};
}

ModuleMap RCategory::left_unitor_inv(const BimodulePtr& X) {
    const Field& f = env_.E.field();
    std::size_t dX = X->dim();
    const TensorResult RX = tensor(unit_, X);
    Matrix m(f, RX.quot.dim(), dX);
    for (std::size_t x = 0; x < dX; ++x)
        m.set_col(x, RX.quot.reduce_class(vec_kron(f, env_.R.unit(), unit_vec(dX, x))));
    ModuleMap fwd = left_unitor(X);
    if (!(fwd.mat * m).is_identity() || !(m * fwd.mat).is_identity())
        throw std::runtime_error("left unitor is not invertible");
    return ModuleMap{X, RX.object, std::move(m)};
}

ModuleMap RCategory::right_unitor(const BimodulePtr& X) {
    const Field& f = env_.E.field();
    std::size_t n = env_.R.dim(), dX = X->dim();
    const TensorResult XR = tensor(X, unit_);
    std::vector<Matrix> acts;
    acts.reserve(n);
    for (std::size_t r = 0; r < n; ++r) acts.push_back(X->action_of(env_.t_elt(r)));
    auto col_amb = [&](std::size_t idx) { return acts[idx % n].col(idx / n); };

    const Subspace& rel = XR.quot.relations();
    for (std::size_t r = 0; r < rel.dim(); ++r) {
        Vec acc = zero_vec(dX);
        for (const auto& [idx, val] : rel.echelon().sparse_row(r)) accumulate(f, acc, val, col_amb(idx));
        if (!vec_is_zero(acc)) throw std::runtime_error("right unitor does not descend");
    }
    Matrix m(f, dX, XR.quot.dim());
    for (std::size_t c = 0; c < XR.quot.dim(); ++c) m.set_col(c, col_amb(XR.quot.free_cols()[c]));
    return ModuleMap{XR.object, X, std::move(m)};
}

ModuleMap RCategory::right_unitor_inv(const BimodulePtr& X) {
    const Field& f = env_.E.field();
    std::size_t dX = X->dim();
    const TensorResult XR = tensor(X, unit_);
    Matrix m(f, XR.quot.dim(), dX);
    for (std::size_t x = 0; x < dX; ++x)
        m.set_col(x, XR.quot.reduce_class(vec_kron(f, unit_vec(dX, x), env_.R.unit())));
    ModuleMap fwd = right_unitor(X);
    if (!(fwd.mat * m).is_identity() || !(m * fwd.mat).is_identity())
        throw std::runtime_error("right unitor is not invertible");
    return ModuleMap{X, XR.object, std::move(m)};
}

HomModule hom_module(const EEBimodule& A, const Bimodule& X) {
    if (!(A.base() == X.base())) throw std::invalid_argument("hom_module base mismatch");
    const FDAlgebra& E = A.base();
    const Field& f = E.field();
    std::size_t dA = A.dim(), dX = X.dim(), nvars = dX * dA;
    // left-E-linearity f(e.a) = e.f(a), vectorized row-major:
    // (I (x) left_A(e)^T - left_X(e) (x) I) vec(f) = 0
    Matrix idX = Matrix::identity(f, dX), idA = Matrix::identity(f, dA);
    Matrix constraints(f, 0, nvars);
    for (std::size_t e = 0; e < E.dim(); ++e) {
        Matrix block = Matrix::kron(idX, A.left(e).transpose()) - Matrix::kron(X.action(e), idA);
        constraints = constraints.vstack(block);
    }
    Subspace space = kernel(constraints);
    std::size_t h = space.dim();
    std::vector<Matrix> basis;
    basis.reserve(h);
    for (std::size_t b = 0; b < h; ++b) {
        Vec v = space.basis().row(b);
        Matrix fb(f, dX, dA);
        for (std::size_t x = 0; x < dX; ++x)
            for (std::size_t a = 0; a < dA; ++a) fb.at(x, a) = v[x * dA + a];
        basis.push_back(std::move(fb));
    }
    // (e.f)(a) = f(a.e)
    std::vector<Matrix> action;
    action.reserve(E.dim());
    for (std::size_t e = 0; e < E.dim(); ++e) {
        Matrix act(f, h, h);
        for (std::size_t b = 0; b < h; ++b) {
            Matrix img = basis[b] * A.right(e);
            Vec v(nvars);
            for (std::size_t x = 0; x < dX; ++x)
                for (std::size_t a = 0; a < dA; ++a) v[x * dA + a] = img.at(x, a);
            act.set_col(b, space.coordinates_of(v));
        }
        action.push_back(std::move(act));
    }
    return HomModule{Bimodule(E, std::move(action)), std::move(basis), std::move(space)};
}

std::vector<Matrix> module_hom_basis(const Bimodule& X, const Bimodule& Y) {
    if (!(X.base() == Y.base())) throw std::invalid_argument("module_hom_basis base mismatch");
    const Field& f = X.base().field();
    std::size_t dX = X.dim(), dY = Y.dim(), nvars = dY * dX;
    Matrix idY = Matrix::identity(f, dY), idX = Matrix::identity(f, dX);
    Matrix constraints(f, 0, nvars);
    for (std::size_t e = 0; e < X.base().dim(); ++e) {
        Matrix block = Matrix::kron(idY, X.action(e).transpose()) - Matrix::kron(Y.action(e), idX);
        constraints = constraints.vstack(block);
    }
    Subspace space = kernel(constraints);
    std::vector<Matrix> out;
    out.reserve(space.dim());
    for (std::size_t b = 0; b < space.dim(); ++b) {
        Vec v = space.basis().row(b);
        Matrix fb(f, dY, dX);
        for (std::size_t y = 0; y < dY; ++y)
            for (std::size_t x = 0; x < dX; ++x) fb.at(y, x) = v[y * dX + x];
        out.push_back(std::move(fb));
    }
    return out;
}

}  // namespace bgd
