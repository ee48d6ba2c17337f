#pragma once

#include "bgd/bimodule.hpp"

#include <memory>

namespace bgd {

/// Left bialgebroid data over R: a total algebra A with source and target
/// maps s : R -> A, t : R^op -> A whose images commute, and an R-coring
/// structure (comul, counit) on A for the bimodule action
/// r . a . r' = s(r) t(r') a. comul is expressed through the canonical
/// quotient coordinates of A (x)_R A (see RCategory::tensor).
struct BialgebroidData {
    FDAlgebra R;
    FDAlgebra A;
    Matrix s;       // A.dim x R.dim
    Matrix t;       // A.dim x R.dim
    Matrix comul;   // dim(A (x)_R A) x A.dim
    Matrix counit;  // R.dim x A.dim

    bool operator==(const BialgebroidData& o) const {
        return R == o.R && A == o.A && s == o.s && t == o.t && comul == o.comul &&
               counit == o.counit;
    }
};

/// Derived data shared by every bialgebroid computation: the bimodule
/// category over R, the algebra map st : E -> A and the induced two-sided
/// action of E on A, and the canonical A (x)_R A quotient. Structural
/// validity of (s, t) is established before anything here is built.
class BgdContext {
public:
    explicit BgdContext(BialgebroidData data);

    const BialgebroidData& data() const { return data_; }
    RCategory& cat() { return cat_; }
    const Envelope& env() const { return cat_.env(); }
    const Matrix& st() const { return st_; }
    const EEBimodule& carrier() const { return carrier_; }
    const BimodulePtr& carrier_module() const { return carrier_mod_; }
    const TensorResult& AxA() { return cat_.tensor(carrier_mod_, carrier_mod_); }

    /// Product of two elements of A (x)_k A, factorwise.
    Vec pair_mul(const Vec& u, const Vec& v) const;

private:
    BialgebroidData data_;
    RCategory cat_;
    Matrix st_;
    EEBimodule carrier_;
    BimodulePtr carrier_mod_;
};

/// Structural prechecks: s and t are algebra maps with commuting images and
/// comul/counit are bimodule maps. These gate the axiom checks proper.
Report check_bgd_structure(const BialgebroidData& b);

/// The Takeuchi product A x_R A inside A (x)_R A: the joint kernel of
/// right-t on the first leg minus right-s on the second leg, per basis
/// element of R.
Subspace takeuchi_subspace(BgdContext& ctx);

/// Full axiom report: comonoid-coassoc, comonoid-counit, BGD 1.a,
/// BGD 1.b(mult), BGD 1.b(unit), BGD 2.a, BGD 2.b, each as an exact matrix
/// identity with a witness basis vector on failure. Structural failures are
/// reported and short-circuit the rest.
Report check_bgd(const BialgebroidData& b);

/// The trivial left bialgebroid E = R (x) R^op over R.
BialgebroidData trivial_bialgebroid(const FDAlgebra& R);

/// Bialgebroid map checks for phi : B -> A over omega : S -> R, where B is a
/// bialgebroid over S and A one over R: compatibility with source, target,
/// comultiplication and counit, plus the determinacy identity
/// omega = counit_A . phi . s_B. Throws if omega is not an algebra map.
Report check_bialgebroid_map(const BialgebroidData& b_over_s, const BialgebroidData& a_over_r,
                             const Matrix& omega, const Matrix& phi);

/// U(M): the underlying R-R-bimodule of a left A-module, acting through st.
Bimodule restrict_module(BgdContext& ctx, const AModule& m);

/// The monoidal product of A-modules: U(M) (x)_R U(N) with the action pushed
/// through the comultiplication.
AModule module_tensor(BgdContext& ctx, const AModule& m, const AModule& n);

}  // namespace bgd
