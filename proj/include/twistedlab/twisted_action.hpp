#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twistedlab/coeff_algebra.hpp"
#include "twistedlab/group.hpp"

namespace twistedlab {

/// A *-automorphism of A, stored as its exact linear action on the
/// matrix-unit coordinates. Construct through validate_automorphism, which
/// proves multiplicativity, star-compatibility, unitality and invertibility
/// on the basis; the structure theorem for Aut of a block algebra is never
/// assumed.
class AutoMap {
public:
    AutoMap() = default;
    const CycMat& matrix() const { return matrix_; }
    AlgElement apply(const AlgElement& a) const;
    const BlockShape& shape() const { return shape_; }

    friend AutoMap validate_automorphism(const CycMat& map, const BlockShape& shape);

private:
    CycMat matrix_;
    BlockShape shape_;
};

/// Checks, exactly and on all basis pairs: alpha(e_i e_j) = alpha(e_i)
/// alpha(e_j), alpha(e_i*) = alpha(e_i)*, alpha(1) = 1, invertibility.
/// Throws AutomorphismError with the witness pair.
AutoMap validate_automorphism(const CycMat& map, const BlockShape& shape);

/// Identity automorphism.
AutoMap trivial_automorphism(const FieldPtr& f, const BlockShape& shape);
/// Automorphism permuting equal-size blocks: block b is sent to perm[b].
AutoMap block_permutation_automorphism(const FieldPtr& f, const BlockShape& shape, const std::vector<int>& perm);
/// Inner automorphism a -> u a u*; u must be unitary.
AutoMap inner_automorphism(const AlgElement& u);

/// The 2-cocycle omega as a full |G| x |G| table of algebra elements.
class Cocycle {
public:
    Cocycle() = default;
    Cocycle(int group_order, std::vector<AlgElement> table);

    const AlgElement& at(int x, int y) const {
        return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(y)];
    }
    int group_order() const { return order_; }

private:
    int order_ = 0;
    std::vector<AlgElement> table_;
};

Cocycle trivial_cocycle(const FieldPtr& f, const BlockShape& shape, int group_order);

/// omega((a,b),(c,d)) = zeta_n^{bc} * 1 on G = Z_n x Z_n (indexed a*n+b).
/// Requires n | m so that zeta_n lives in the field.
Cocycle bicharacter_cocycle(const FieldPtr& f, const BlockShape& shape, int n);

/// The validated 4-tuple (G, alpha, omega, A).
struct TwistedSystem {
    FiniteGroup group;
    BlockShape shape;
    FieldPtr field;
    std::vector<AutoMap> alphas;  // one per group element
    Cocycle omega;

    const AutoMap& alpha(int x) const { return alphas[static_cast<std::size_t>(x)]; }
};

using SystemPtr = std::shared_ptr<const TwistedSystem>;

/// Structural assembly only; run validate_axioms to certify.
SystemPtr make_system(FiniteGroup group, BlockShape shape, FieldPtr field, std::vector<AutoMap> alphas,
                      Cocycle omega);

/// Convenience: trivial action and trivial cocycle on (group, shape).
SystemPtr trivial_system(FiniteGroup group, BlockShape shape, FieldPtr field);

/// Outcome of the exhaustive axiom check. Witnesses are group indices (and
/// a basis index for axiom (ii)).
struct AxiomReport {
    enum class Failure { None, NonUnitaryEntry, AxiomI, AxiomII, AxiomIII };
    Failure failure = Failure::None;
    int x = -1, y = -1, z = -1;  // z doubles as the basis index for AxiomII

    bool pass() const { return failure == Failure::None; }
    std::string describe() const;
};

/// Exhaustive validation of the twisted-action axioms:
///   (i)  alpha_x(w(y,z)) w(x,yz) = w(x,y) w(xy,z)      over all |G|^3 triples
///   (ii) alpha_x(alpha_y(a)) w(x,y) = w(x,y) alpha_xy(a) over |G|^2 x basis
///   (iii) w(x,e) = w(e,y) = 1, alpha_e = id
/// plus unitarity of every cocycle entry. Exact equality throughout; stops
/// at the first failure and reports its witness.
AxiomReport validate_axioms(const TwistedSystem& sys);

}  // namespace twistedlab
