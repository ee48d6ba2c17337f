#pragma once

#include "bgd/bialgebroid.hpp"

#include <map>
#include <vector>

namespace bgd {

/// Kernel presentation of a bimonad on the category of R-R-bimodules: the
/// endofunctor is A (x)_E - for a two-sided E-module A (E = R (x) R^op),
/// with multiplication induced by mult_k, unit element 1_A, and comonoidal
/// data (coprod, counit_k) evaluated through the structure-map formulas.
struct BimonadPresentation {
    FDAlgebra R;
    EEBimodule A;
    Matrix mult_k;    // A (x)_k A -> A
    Vec unit_elt;
    Matrix coprod;    // A -> A (x)_R A, canonical quotient coordinates
    Matrix counit_k;  // A -> R
};

/// Invariants of a presentation: mult_k is an associative unital E-balanced
/// product compatible with both actions, coprod is a bimodule map whose
/// image satisfies the Takeuchi compatibility (right-t on the first leg
/// equals right-s on the second), and counit_k is a bimodule map with
/// eps(a.t(r)) = eps(a.s(r)). Failures carry (r, basis) witnesses.
Report validate_presentation(const BimonadPresentation& p);

/// Builds the presentation of the bimonad attached to a bialgebroid. Unless
/// `force` is set, the bialgebroid axioms are checked first and an
/// invalid_argument carrying the first failing axiom is thrown.
BimonadPresentation from_bialgebroid(const BialgebroidData& b, bool force = false);

/// Evaluation engine: structure maps of the presented bimonad at concrete
/// objects, with cached tensor and endofunctor evaluations. All maps are
/// exact matrices on canonical quotient coordinates; every induced map is
/// checked to descend, so an ill-defined map reports a violated
/// precondition instead of producing garbage.
class BimonadOps {
public:
    explicit BimonadOps(BimonadPresentation p);

    const BimonadPresentation& pres() const { return pres_; }
    RCategory& cat() { return cat_; }
    const BimodulePtr& carrier_module() const { return carrier_mod_; }

    const TensorResult& T(const BimodulePtr& X);
    ModuleMap T_map(const ModuleMap& f);

    ModuleMap eta(const BimodulePtr& X);  // x -> 1_A (x) x
    ModuleMap mu(const BimodulePtr& X);   // a (x) (b (x) x) -> ab (x) x
    ModuleMap gamma(const BimodulePtr& X, const BimodulePtr& Y);
    ModuleMap pi();                       // a (x) r -> eps(a . s(r))

    /// iota : E -> A, e -> e . 1_A (the algebra embedding of a valid
    /// presentation).
    Matrix iota() const;

private:
    BimonadPresentation pres_;
    RCategory cat_;
    BimodulePtr carrier_mod_;
    std::map<BimodulePtr, TensorResult> t_cache_;
    std::map<BimodulePtr, ModuleMap> mu_cache_;
    std::map<BimodulePtr, ModuleMap> eta_cache_;
    std::map<std::pair<BimodulePtr, BimodulePtr>, ModuleMap> gamma_cache_;
};

/// All ten bimonad diagrams evaluated over the test family (triples for the
/// coassociativity hexagon, pairs for the comonoidality squares, single
/// objects elsewhere; the two unit-object diagrams once per presentation).
/// The mandatory objects {R, E, A} are always included; the report records
/// the family evaluated.
Report check_bmd(BimonadOps& ops, const std::vector<BimodulePtr>& tests);

std::vector<std::string> bmd_diagram_names();

/// Recovers bialgebroid data from a presentation: the comultiplication and
/// counit are rebuilt by composing the comonoidal structure at the regular
/// E-module with the canonical isomorphism T(E) = A, and the source/target
/// maps come from the E-algebra structure. Throws if the Takeuchi
/// compatibilities fail (with an (r, basis) witness) or, when the recovered
/// data fails an axiom, names the bimonad diagram whose failure it reflects.
BialgebroidData extract_bialgebroid(BimonadOps& ops);

/// Lax monoidal functor presentations supported in monad-morphism checks:
/// restriction along an algebra map omega : S -> R, or a kernel bimodule
/// G (x)_k - for a k-algebra G (base rings R = S = k).
struct LaxMonoidalFunctorPresentation {
    enum class Kind { restriction, kernel };
    Kind kind;
    FDAlgebra S;      // base ring of the morphism target side
    Matrix omega;     // restriction: R.dim x S.dim
    FDAlgebra G;      // kernel case; ignored for restriction
};

LaxMonoidalFunctorPresentation restriction_functor(FDAlgebra S, Matrix omega);
LaxMonoidalFunctorPresentation kernel_functor(const Field& f, FDAlgebra G);

/// The two monad-morphism squares for <G, phi> from the bimonad of `src`
/// (over R) to the bimonad of `tgt` (over S), with phi presented by its
/// generating map: restriction case phi : B -> A, kernel case
/// phi : B (x) G -> G (x) A. Evaluated on all objects of the test family.
Report check_monad_morphism(BimonadOps& src, BimonadOps& tgt,
                            const LaxMonoidalFunctorPresentation& g, const Matrix& phi,
                            const std::vector<BimodulePtr>& tests);

/// The two mixed compatibility diagrams between the comonoidal structures
/// and the lax monoidal structure of G, on all pairs from the test family.
Report check_ambimonoidal(BimonadOps& src, BimonadOps& tgt,
                          const LaxMonoidalFunctorPresentation& g, const Matrix& phi,
                          const std::vector<BimodulePtr>& tests);

/// Uniqueness of the generating map of a restriction morphism at instance
/// level: the affine space of bimodule maps B -> A reproducing the given
/// transported actions on the catalogue modules. For the bialgebroid-map
/// morphisms this space is a single point, namely phi itself.
struct PhiSolution {
    std::size_t solution_dim = 0;  // dimension of the homogeneous part
    bool unique_and_matches = false;
    Matrix solution;
};

PhiSolution solve_phi_from_actions(const BialgebroidData& b_over_s,
                                   const BialgebroidData& a_over_r, const Matrix& omega,
                                   const Matrix& phi, const std::vector<AModule>& catalogue);

}  // namespace bgd
