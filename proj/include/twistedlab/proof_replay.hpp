#pragma once

#include "twistedlab/ideal_lab.hpp"

namespace twistedlab {

/// Default cap on the operator-group closure.
inline constexpr std::size_t kDefaultGroupCap = 100000;

/// The representation pi of B on X = B/I by left multiplication on coset
/// coordinates: pi(Phi)(Psi + I) = Phi*Psi + I.
struct Representation {
    SystemPtr sys;
    QuotientAlgebra quo;
    std::vector<CycMat> pi;  // one q x q matrix per coordinate basis element of B

    /// pi extended linearly to arbitrary coordinates.
    CycMat pi_of_vector(const CycVec& coords) const;
    CycMat pi_of(const ConvElement& phi) const { return pi_of_vector(phi.to_vector()); }
};

/// Builds pi; verifies per basis element that left multiplication maps I
/// into I (throws NotInvariant on the impossible failure, NotAnIdeal when
/// I is not two-sided).
Representation build_pi(const SystemPtr& sys, const Subspace& ideal);

/// The finite operator group K = closure of {pi(m_{w,y})} under products
/// and the adjoint formula, acting on quotient coordinates.
struct MultiplierGroup {
    std::vector<CycMat> operators;                    // sorted canonically
    std::vector<std::pair<int, int>> generator_tags;  // (w index; negative = adjoint of |w|-1, y)

    std::size_t order() const { return operators.size(); }
};

/// w_gen entries must be unitary (NotUnitary otherwise); closure past cap
/// raises CapExceeded. The unit of A is always included as a generator.
MultiplierGroup multiplier_group(const SystemPtr& sys, const QuotientAlgebra& quo,
                                 const std::vector<AlgElement>& w_gen, std::size_t cap = kDefaultGroupCap);
MultiplierGroup multiplier_group(const SystemPtr& sys, const Subspace& ideal,
                                 const std::vector<AlgElement>& w_gen, std::size_t cap = kDefaultGroupCap);

/// Default generating unitaries: every cocycle value plus the unit.
std::vector<AlgElement> default_wgen(const SystemPtr& sys);

/// gram = (1/|K|) sum_{T in K} T^H T: the K-averaged inner product on the
/// quotient, exact over the instance field (counting measure = Haar on a
/// finite group). Hermitian and positive definite by construction.
struct AveragedForm {
    CycMat gram;
};
AveragedForm average_form(const MultiplierGroup& k);

bool gram_is_hermitian(const AveragedForm& form);
bool gram_is_k_invariant(const MultiplierGroup& k, const AveragedForm& form);
/// Smallest eigenvalue of the float embedding (+inf for the 0-dim form).
double gram_min_eigenvalue(const AveragedForm& form);

/// Checks gram * pi(Phi) = pi(Phi*)^H * gram exactly for every coordinate
/// basis element Phi of B — the matrix form of
/// <pi(Phi) x, y>_nu = <x, pi(Phi*) y>_nu.
struct StarReport {
    bool pass = true;
    int witness_basis = -1;
};
StarReport verify_star_property(const Representation& rep, const AveragedForm& form);

/// Exact null space {Phi : pi(Phi) = 0}, compared with I as echelon bases.
struct KernelReport {
    bool pass = false;
    Subspace kernel;
};
KernelReport kernel_of_pi(const Representation& rep, const Subspace& ideal);

}  // namespace twistedlab
