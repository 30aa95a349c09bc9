#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twistedlab/conv_algebra.hpp"

namespace twistedlab {

/// Exact linear subspace of a coordinate space, stored as a reduced
/// row-echelon basis with strictly increasing pivots. Two subspaces are
/// equal iff their echelon bases are identical, which makes the
/// representation canonical.
class Subspace {
public:
    Subspace() : builder_(CycField::get(1), 0) {}

    static Subspace zero(const FieldPtr& f, int ambient_dim);
    static Subspace full(const FieldPtr& f, int ambient_dim);
    static Subspace span(const FieldPtr& f, int ambient_dim, const std::vector<CycVec>& vectors);
    static Subspace from_builder(SpanBuilder b) {
        Subspace s;
        s.builder_ = std::move(b);
        return s;
    }

    int dim() const { return builder_.rank(); }
    int ambient_dim() const { return builder_.ambient_dim(); }
    int codim() const { return ambient_dim() - dim(); }
    const std::vector<CycVec>& rows() const { return builder_.rows(); }
    const std::vector<int>& pivots() const { return builder_.pivots(); }
    const FieldPtr& field() const { return builder_.field(); }

    bool contains(const CycVec& v) const { return builder_.contains(v); }
    /// Canonical coset representative: pivot coordinates eliminated.
    CycVec reduce(const CycVec& v) const { return builder_.reduce(v); }

    std::vector<int> nonpivot_columns() const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    std::string canonical_key() const;

private:
    SpanBuilder builder_;
};

// ---------------------------------------------------------------------------
// subspaces of B and ideal predicates

struct ProductWitness {
    bool pass = true;
    bool left_side = true;  // which multiplication failed
    int basis_index = -1, row_index = -1;
};
struct StarWitness {
    bool pass = true;
    int row_index = -1;
};
struct TranslationWitness {
    bool pass = true;
    int u_index = -1, y = -1, row_index = -1;
};

/// Least subspace containing gens that is closed under left and right
/// multiplication by B; rank-growth fixpoint, termination bounded by dim B.
Subspace generate_two_sided_ideal(const SystemPtr& sys, const std::vector<ConvElement>& gens);

ProductWitness is_left_ideal(const SystemPtr& sys, const Subspace& s);
ProductWitness is_right_ideal(const SystemPtr& sys, const Subspace& s);
ProductWitness is_two_sided(const SystemPtr& sys, const Subspace& s);
StarWitness is_star_closed(const SystemPtr& sys, const Subspace& s);

/// Stability under every multiplier m_{u,y}, u ranging over the basis of A
/// (sufficient by linearity) and y over G. Checked through the multiplier
/// formula, independently of the convolution route used by is_left_ideal.
TranslationWitness is_translation_invariant(const SystemPtr& sys, const Subspace& s);

// ---------------------------------------------------------------------------
// structure-constant algebras

struct AssocWitness {
    bool pass = true;
    int i = -1, j = -1, k = -1;
};

/// A finite-dimensional algebra given by its structure tensor
/// (structure[i][j] = coordinates of e_i * e_j), with an optional
/// involution matrix. Backs quotients, raw oracle fixtures, and B itself.
struct StructureAlgebra {
    FieldPtr field;
    int dim = 0;
    std::vector<std::vector<CycVec>> structure;
    std::optional<CycMat> star;

    CycVec mul(const CycVec& x, const CycVec& y) const;
    CycMat left_mult(int i) const;
    CycMat right_mult(int i) const;
    AssocWitness validate_associative() const;
    bool is_commutative() const;
};

/// Structure constants of B in the delta (x) matrix-unit basis.
StructureAlgebra structure_of(const SystemPtr& sys);

/// The quotient B/I with deterministic section: the non-pivot coordinates
/// of I's echelon basis. Star matrix present iff I is a *-ideal.
struct QuotientAlgebra {
    StructureAlgebra alg;
    Subspace ideal;
    std::vector<int> section_columns;

    CycVec project(const CycVec& ambient) const;
    CycVec lift(const CycVec& quotient_coords) const;
};

/// Throws NotAnIdeal unless I is two-sided. Validates associativity of the
/// induced product exactly.
QuotientAlgebra quotient(const SystemPtr& sys, const Subspace& ideal);

/// Structure-level quotient (used for raw oracle algebras).
StructureAlgebra quotient_structure(const StructureAlgebra& alg, const Subspace& ideal);
bool struct_is_two_sided(const StructureAlgebra& alg, const Subspace& s);

/// Jacobson radical by the trace-form criterion (valid in characteristic
/// zero): the null space of G_{ij} = Tr(L_{e_i} L_{e_j}). Semisimple iff
/// the result is zero.
Subspace radical(const StructureAlgebra& alg);

int center_dim(const StructureAlgebra& alg);

/// Span of pairwise products of basis rows; re-closed as a two-sided ideal
/// when both inputs are ideals.
Subspace ideal_product(const SystemPtr& sys, const Subspace& a, const Subspace& b);

// ---------------------------------------------------------------------------
// scans and enumeration

struct IdealInfo {
    Subspace ideal;
    bool star_closed = false;
    int radical_dim = -1;
    bool idempotent = false;  // ideal_product(I, I) == I
};

IdealInfo analyze_ideal(const SystemPtr& sys, Subspace ideal);

/// Seeded, reproducible scan: draws `count` random generators, builds the
/// two-sided ideal of each, and reports every distinct ideal found. The
/// trivial ideals {0} and B are always included.
struct ScanReport {
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<IdealInfo> ideals;  // distinct, sorted by (dim, echelon key)
};
ScanReport random_ideal_scan(const SystemPtr& sys, std::uint64_t seed, int count);

/// Exhaustive ideal lattice for commutative B of dimension <= dim_cap.
/// Splits B into one-dimensional minimal ideals by exact common-eigenspace
/// refinement (eigenvalue candidates: 0 and +-zeta_m^k), validates the
/// resulting Peirce system, and lists all 2^q subset-sum ideals. When B
/// does not split over the instance field the report says so instead.
struct EnumerationReport {
    bool available = false;
    std::string reason;
    int minimal_ideal_count = 0;
    std::vector<IdealInfo> ideals;
};
EnumerationReport enumerate_ideals(const SystemPtr& sys, int dim_cap = 8);

}  // namespace twistedlab
