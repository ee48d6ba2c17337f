#pragma once

#include "bgd/algebra.hpp"

#include <map>
#include <memory>
#include <vector>

namespace bgd {

/// Left module over an FDAlgebra, given by one action matrix per basis
/// element of the acting algebra. With base R^e = R (x) R^op this is exactly
/// an R-R-bimodule: (r (x) r') . x = r . x . r'.
class Bimodule {
public:
    Bimodule(FDAlgebra base, std::vector<Matrix> action);

    /// Skips the representation checks; reserved for actions whose validity
    /// is a consequence of an already-verified descent (tensor-product
    /// outer actions and endofunctor evaluations).
    static Bimodule unchecked(FDAlgebra base, std::vector<Matrix> action);

    const FDAlgebra& base() const { return base_; }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    Matrix action_of(const Vec& e) const;

    bool operator==(const Bimodule& o) const;

private:
    struct unchecked_t {};
    Bimodule(unchecked_t, FDAlgebra base, std::vector<Matrix> action);

    FDAlgebra base_;
    std::size_t dim_;
    std::vector<Matrix> action_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

/// Map of modules over the same base; the matrix intertwines the actions.
struct ModuleMap {
    BimodulePtr source;
    BimodulePtr target;
    Matrix mat;
};

/// Validates the intertwining property before wrapping.
ModuleMap make_module_map(BimodulePtr src, BimodulePtr tgt, Matrix mat);
bool intertwines(const Bimodule& src, const Bimodule& tgt, const Matrix& mat);

/// f after g.
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
ModuleMap identity_map(BimodulePtr x);

/// Carrier with commuting left and right actions of the same algebra; the
/// shape of the kernel bimodule A of a presented bimonad. The right action
/// is an anti-representation: right(e f) = right(f) right(e).
class EEBimodule {
public:
    EEBimodule(FDAlgebra base, std::vector<Matrix> left, std::vector<Matrix> right);

    const FDAlgebra& base() const { return base_; }
    std::size_t dim() const { return dim_; }
    const Matrix& left(std::size_t i) const { return left_[i]; }
    const Matrix& right(std::size_t i) const { return right_[i]; }
    Matrix left_of(const Vec& e) const;
    Matrix right_of(const Vec& e) const;

    Bimodule as_left_module() const { return Bimodule(base_, left_); }

private:
    FDAlgebra base_;
    std::size_t dim_;
    std::vector<Matrix> left_, right_;
};

/// The enveloping algebra E = R (x) R^op together with the coordinate
/// embeddings of the source r |-> r (x) 1 and target r |-> 1 (x) r.
struct Envelope {
    FDAlgebra R;
    FDAlgebra E;

    Vec s_elt(std::size_t i) const;
    Vec t_elt(std::size_t i) const;
    Matrix s_map() const;  // E.dim x R.dim
    Matrix t_map() const;
};

Envelope make_envelope(const FDAlgebra& R);

/// Relative tensor product realized as the canonical quotient of the plain
/// k-tensor by the middle-action relations x.r (x) y - x (x) r.y.
struct TensorResult {
    BimodulePtr object;
    Quot quot;  // over the k-tensor of the factors, lex basis

    Matrix proj() const { return quot.proj(); }
    Matrix section() const { return quot.section(); }
};

/// A (x)_E X for a two-sided carrier A and a left module X over the same
/// base; relations are (a.e) (x) x - a (x) (e.x), the left action descends
/// from A's. This is the endofunctor evaluation of every kernel-presented
/// bimonad.
TensorResult kernel_tensor(const EEBimodule& A, const Bimodule& X);

/// Quotient-level matrix induced by A (x) B between canonical quotients of
/// k-tensors. Throws if the map fails to send domain relations into codomain
/// relations.
Matrix induced_kron(const Quot& dom, const Quot& cod, const Matrix& A, const Matrix& B);

/// The monoidal category of R-R-bimodules for a fixed base ring R, with
/// cached tensor products, the coherence isomorphisms, and the unit object.
/// Quotient bases are canonical, so every arrow built here is reproducible
/// bit for bit; coherence maps are genuine nonidentity matrices and must be
/// inserted explicitly into any diagram that rebrackets tensors.
class RCategory {
public:
    explicit RCategory(FDAlgebra R);

    const FDAlgebra& R() const { return env_.R; }
    const FDAlgebra& E() const { return env_.E; }
    const Envelope& env() const { return env_; }

    BimodulePtr unit() const { return unit_; }       // R as R-R-bimodule
    BimodulePtr regular_E() const { return regE_; }  // E as left E-module

    const TensorResult& tensor(const BimodulePtr& X, const BimodulePtr& Y);

    /// f (x)_R g on the canonical quotients.
    ModuleMap tensor_map(const ModuleMap& f, const ModuleMap& g);

    /// a_{X,Y,Z} : X (x) (Y (x) Z) -> (X (x) Y) (x) Z, induced by the
    /// identity on the triple k-tensor. Verified invertible.
    ModuleMap associator(const BimodulePtr& X, const BimodulePtr& Y, const BimodulePtr& Z);
    ModuleMap associator_inv(const BimodulePtr& X, const BimodulePtr& Y, const BimodulePtr& Z);

    ModuleMap left_unitor(const BimodulePtr& X);       // R (x) X -> X
    ModuleMap left_unitor_inv(const BimodulePtr& X);
    ModuleMap right_unitor(const BimodulePtr& X);      // X (x) R -> X
    ModuleMap right_unitor_inv(const BimodulePtr& X);

private:
    Envelope env_;
    BimodulePtr unit_, regE_;
    // keyed on the operand handles themselves so cached entries pin their
    // operands and pointer identity stays unambiguous
    std::map<std::pair<BimodulePtr, BimodulePtr>, TensorResult> cache_;
};

/// Hom_E(A, X): the left-E-linear maps A -> X as a module via
/// (e.f)(a) = f(a.e); the right adjoint of kernel_tensor(A, -).
struct HomModule {
    Bimodule module;
    std::vector<Matrix> basis;  // f_b : A -> X, canonical kernel basis
    Subspace space;             // row space of vectorized maps
};

HomModule hom_module(const EEBimodule& A, const Bimodule& X);

/// Solution space of the intertwining equations between two modules,
/// one dimX x dimY matrix per basis vector.
std::vector<Matrix> module_hom_basis(const Bimodule& X, const Bimodule& Y);

}  // namespace bgd
