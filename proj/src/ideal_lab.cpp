#include "twistedlab/ideal_lab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twistedlab/rng.hpp"

namespace twistedlab {

Subspace Subspace::zero(const FieldPtr& f, int ambient_dim) {
    return from_builder(SpanBuilder(f, ambient_dim));
}

Subspace Subspace::full(const FieldPtr& f, int ambient_dim) {
    SpanBuilder b(f, ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) b.insert(unit_vec(f, ambient_dim, i));
    return from_builder(std::move(b));
}

Subspace Subspace::span(const FieldPtr& f, int ambient_dim, const std::vector<CycVec>& vectors) {
    SpanBuilder b(f, ambient_dim);
    for (const auto& v : vectors) b.insert(v);
    return from_builder(std::move(b));
}

std::vector<int> Subspace::nonpivot_columns() const {
    std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_dim()), false);
    for (int p : pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> out;
    for (int c = 0; c < ambient_dim(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_dim() != o.ambient_dim() || dim() != o.dim()) return false;
    if (pivots() != o.pivots()) return false;
    for (std::size_t r = 0; r < rows().size(); ++r)
        for (std::size_t c = 0; c < rows()[r].size(); ++c)
            if (rows()[r][c] != o.rows()[r][c]) return false;
    return true;
}

std::string Subspace::canonical_key() const {
    std::ostringstream os;
    os << dim() << '/' << ambient_dim() << ':';
    for (const auto& r : rows()) os << vec_key(r);
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ConvElement> conv_basis(const SystemPtr& sys) {
    std::vector<ConvElement> out;
    int d = conv_dim(*sys);
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out.push_back(ConvElement::basis_element(sys, i));
    return out;
}

}  // namespace

Subspace generate_two_sided_ideal(const SystemPtr& sys, const std::vector<ConvElement>& gens) {
    const int d = conv_dim(*sys);
    SpanBuilder b(sys->field, d);
    for (const auto& g : gens) {
        if (g.system() != sys) throw SystemMismatch();
        b.insert(g.to_vector());
    }
    auto basis = conv_basis(sys);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<CycVec> snapshot = b.rows();
        for (const auto& row : snapshot) {
            ConvElement v = ConvElement::from_vector(sys, row);
            for (const auto& e : basis) {
                if (b.insert(convolve(e, v).to_vector())) grew = true;
                if (b.insert(convolve(v, e).to_vector())) grew = true;
            }
        }
    }
    return Subspace::from_builder(std::move(b));
}

namespace {
ProductWitness one_sided_check(const SystemPtr& sys, const Subspace& s, bool left) {
    ProductWitness w;
    auto basis = conv_basis(sys);
    for (std::size_t r = 0; r < s.rows().size(); ++r) {
        ConvElement v = ConvElement::from_vector(sys, s.rows()[r]);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            ConvElement p = left ? convolve(basis[i], v) : convolve(v, basis[i]);
            if (!s.contains(p.to_vector())) {
                w.pass = false;
                w.left_side = left;
                w.basis_index = static_cast<int>(i);
                w.row_index = static_cast<int>(r);
                return w;
            }
        }
    }
    return w;
}
}  // namespace

ProductWitness is_left_ideal(const SystemPtr& sys, const Subspace& s) { return one_sided_check(sys, s, true); }
ProductWitness is_right_ideal(const SystemPtr& sys, const Subspace& s) { return one_sided_check(sys, s, false); }

ProductWitness is_two_sided(const SystemPtr& sys, const Subspace& s) {
    ProductWitness w = is_left_ideal(sys, s);
    if (!w.pass) return w;
    return is_right_ideal(sys, s);
}

StarWitness is_star_closed(const SystemPtr& sys, const Subspace& s) {
    StarWitness w;
    for (std::size_t r = 0; r < s.rows().size(); ++r) {
        ConvElement v = ConvElement::from_vector(sys, s.rows()[r]);
        if (!s.contains(v.involve().to_vector())) {
            w.pass = false;
            w.row_index = static_cast<int>(r);
            return w;
        }
    }
    return w;
}

TranslationWitness is_translation_invariant(const SystemPtr& sys, const Subspace& s) {
    TranslationWitness w;
    auto abasis = algebra_basis(sys->field, sys->shape);
    for (std::size_t r = 0; r < s.rows().size(); ++r) {
        ConvElement v = ConvElement::from_vector(sys, s.rows()[r]);
        for (int y = 0; y < sys->group.order(); ++y)
            for (std::size_t u = 0; u < abasis.size(); ++u)
                if (!s.contains(multiplier_apply(abasis[u], y, v).to_vector())) {
                    w.pass = false;
                    w.u_index = static_cast<int>(u);
                    w.y = y;
                    w.row_index = static_cast<int>(r);
                    return w;
                }
    }
    return w;
}

// ---------------------------------------------------------------------------

CycVec StructureAlgebra::mul(const CycVec& x, const CycVec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw DimensionMismatch("structure product dimension mismatch");
    CycVec out = zero_vec(field, dim);
    for (int i = 0; i < dim; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero()) continue;
            CycScalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            const CycVec& sij = structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < dim; ++k)
                if (!sij[static_cast<std::size_t>(k)].is_zero())
                    out[static_cast<std::size_t>(k)] += c * sij[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

CycMat StructureAlgebra::left_mult(int i) const {
    CycMat m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            m.at(k, j) = structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    return m;
}

CycMat StructureAlgebra::right_mult(int i) const {
    CycMat m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            m.at(k, j) = structure[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    return m;
}

AssocWitness StructureAlgebra::validate_associative() const {
    AssocWitness w;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                CycVec lhs = mul(structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                 unit_vec(field, dim, k));
                CycVec rhs = mul(unit_vec(field, dim, i),
                                 structure[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
                if (!vec_is_zero(vec_sub(lhs, rhs))) {
                    w.pass = false;
                    w.i = i;
                    w.j = j;
                    w.k = k;
                    return w;
                }
            }
    return w;
}

bool StructureAlgebra::is_commutative() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (!vec_is_zero(vec_sub(structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                     structure[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])))
                return false;
    return true;
}

StructureAlgebra structure_of(const SystemPtr& sys) {
    const int d = conv_dim(*sys);
    StructureAlgebra a;
    a.field = sys->field;
    a.dim = d;
    auto basis = conv_basis(sys);
    a.structure.assign(static_cast<std::size_t>(d), std::vector<CycVec>());
    for (int i = 0; i < d; ++i) {
        a.structure[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            a.structure[static_cast<std::size_t>(i)].push_back(
                convolve(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]).to_vector());
    }
    CycMat star(sys->field, d, d);
    for (int j = 0; j < d; ++j) {
        CycVec col = basis[static_cast<std::size_t>(j)].involve().to_vector();
        for (int i = 0; i < d; ++i) star.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    a.star = std::move(star);
    return a;
}

CycVec QuotientAlgebra::project(const CycVec& ambient) const {
    CycVec red = ideal.reduce(ambient);
    CycVec out;
    out.reserve(section_columns.size());
    for (int c : section_columns) out.push_back(red[static_cast<std::size_t>(c)]);
    return out;
}

CycVec QuotientAlgebra::lift(const CycVec& quotient_coords) const {
    if (quotient_coords.size() != section_columns.size())
        throw DimensionMismatch("quotient coordinate length mismatch");
    CycVec out = zero_vec(alg.field, ideal.ambient_dim());
    for (std::size_t k = 0; k < section_columns.size(); ++k)
        out[static_cast<std::size_t>(section_columns[k])] = quotient_coords[k];
    return out;
}

QuotientAlgebra quotient(const SystemPtr& sys, const Subspace& ideal) {
    ProductWitness tw = is_two_sided(sys, ideal);
    if (!tw.pass)
        throw NotAnIdeal("subspace is not a two-sided ideal (basis " + std::to_string(tw.basis_index) + ", row " +
                         std::to_string(tw.row_index) + ", " + (tw.left_side ? "left" : "right") + ")");

    QuotientAlgebra q;
    q.ideal = ideal;
    q.section_columns = ideal.nonpivot_columns();
    const int qd = static_cast<int>(q.section_columns.size());
    q.alg.field = sys->field;
    q.alg.dim = qd;

    std::vector<ConvElement> reps;
    reps.reserve(static_cast<std::size_t>(qd));
    for (int c : q.section_columns)
        reps.push_back(ConvElement::basis_element(sys, c));

    q.alg.structure.assign(static_cast<std::size_t>(qd), std::vector<CycVec>());
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < qd; ++j)
            q.alg.structure[static_cast<std::size_t>(i)].push_back(
                q.project(convolve(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]).to_vector()));

    if (is_star_closed(sys, ideal).pass) {
        CycMat star(sys->field, qd, qd);
        for (int j = 0; j < qd; ++j) {
            CycVec col = q.project(reps[static_cast<std::size_t>(j)].involve().to_vector());
            for (int i = 0; i < qd; ++i) star.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        q.alg.star = std::move(star);
    }

    AssocWitness aw = q.alg.validate_associative();
    if (!aw.pass)
        throw Error("internal: quotient product not associative at (" + std::to_string(aw.i) + "," +
                    std::to_string(aw.j) + "," + std::to_string(aw.k) + ")");
    return q;
}

StructureAlgebra quotient_structure(const StructureAlgebra& alg, const Subspace& ideal) {
    if (!struct_is_two_sided(alg, ideal)) throw NotAnIdeal("subspace is not a two-sided ideal");
    std::vector<int> section;
    {
        std::vector<bool> is_pivot(static_cast<std::size_t>(alg.dim), false);
        for (int p : ideal.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        for (int c = 0; c < alg.dim; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) section.push_back(c);
    }
    auto project = [&](const CycVec& v) {
        CycVec red = ideal.reduce(v);
        CycVec out;
        for (int c : section) out.push_back(red[static_cast<std::size_t>(c)]);
        return out;
    };
    StructureAlgebra q;
    q.field = alg.field;
    q.dim = static_cast<int>(section.size());
    q.structure.assign(static_cast<std::size_t>(q.dim), std::vector<CycVec>());
    for (int i = 0; i < q.dim; ++i)
        for (int j = 0; j < q.dim; ++j) {
            CycVec prod = alg.mul(unit_vec(alg.field, alg.dim, section[static_cast<std::size_t>(i)]),
                                  unit_vec(alg.field, alg.dim, section[static_cast<std::size_t>(j)]));
            q.structure[static_cast<std::size_t>(i)].push_back(project(prod));
        }
    AssocWitness aw = q.validate_associative();
    if (!aw.pass) throw Error("internal: raw quotient product not associative");
    return q;
}

bool struct_is_two_sided(const StructureAlgebra& alg, const Subspace& s) {
    for (const auto& row : s.rows())
        for (int i = 0; i < alg.dim; ++i) {
            CycVec e = unit_vec(alg.field, alg.dim, i);
            if (!s.contains(alg.mul(e, row)) || !s.contains(alg.mul(row, e))) return false;
        }
    return true;
}

Subspace radical(const StructureAlgebra& alg) {
    const int q = alg.dim;
    std::vector<CycMat> lmats;
    lmats.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) lmats.push_back(alg.left_mult(i));
    CycMat gram(alg.field, q, q);
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            CycScalar t = CycScalar::zero(alg.field);
            for (int k = 0; k < q; ++k)
                for (int l = 0; l < q; ++l) {
                    const CycScalar& a = lmats[static_cast<std::size_t>(i)].at(k, l);
                    const CycScalar& b = lmats[static_cast<std::size_t>(j)].at(l, k);
                    if (!a.is_zero() && !b.is_zero()) t += a * b;
                }
            gram.at(i, j) = t;
            gram.at(j, i) = t;  // trace form is symmetric
        }
    return Subspace::span(alg.field, q, null_space(gram));
}

int center_dim(const StructureAlgebra& alg) {
    const int q = alg.dim;
    if (q == 0) return 0;
    CycMat m(alg.field, q * q, q);
    for (int i = 0; i < q; ++i) {
        CycMat diff = alg.left_mult(i) - alg.right_mult(i);
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) m.at(r * q + c, i) = diff.at(r, c);
    }
    return static_cast<int>(null_space(m).size());
}

Subspace ideal_product(const SystemPtr& sys, const Subspace& a, const Subspace& b) {
    const int d = conv_dim(*sys);
    std::vector<CycVec> prods;
    for (const auto& ra : a.rows())
        for (const auto& rb : b.rows())
            prods.push_back(
                convolve(ConvElement::from_vector(sys, ra), ConvElement::from_vector(sys, rb)).to_vector());
    Subspace sp = Subspace::span(sys->field, d, prods);
    if (is_two_sided(sys, a).pass && is_two_sided(sys, b).pass) {
        std::vector<ConvElement> gens;
        for (const auto& r : sp.rows()) gens.push_back(ConvElement::from_vector(sys, r));
        return generate_two_sided_ideal(sys, gens);
    }
    return sp;
}

// ---------------------------------------------------------------------------

IdealInfo analyze_ideal(const SystemPtr& sys, Subspace ideal) {
    IdealInfo info;
    info.star_closed = is_star_closed(sys, ideal).pass;
    info.radical_dim = radical(quotient(sys, ideal).alg).dim();
    info.idempotent = ideal_product(sys, ideal, ideal) == ideal;
    info.ideal = std::move(ideal);
    return info;
}

namespace {

ConvElement random_generator(Rng& rng, const SystemPtr& sys) {
    const int d = conv_dim(*sys);
    CycVec v = zero_vec(sys->field, d);
    int support = static_cast<int>(rng.uniform(1, 2));
    for (int s = 0; s < support; ++s) {
        int idx = static_cast<int>(rng.uniform(0, d - 1));
        v[static_cast<std::size_t>(idx)] = rng.sparse_scalar(sys->field, 2);
    }
    return ConvElement::from_vector(sys, v);
}

void sort_ideal_infos(std::vector<IdealInfo>& infos) {
    std::sort(infos.begin(), infos.end(), [](const IdealInfo& a, const IdealInfo& b) {
        if (a.ideal.dim() != b.ideal.dim()) return a.ideal.dim() < b.ideal.dim();
        return a.ideal.canonical_key() < b.ideal.canonical_key();
    });
}

}  // namespace

ScanReport random_ideal_scan(const SystemPtr& sys, std::uint64_t seed, int count) {
    ScanReport rep;
    rep.seed = seed;
    rep.count = count;
    Rng rng(seed);
    const int d = conv_dim(*sys);

    std::map<std::string, Subspace> found;
    Subspace zero = Subspace::zero(sys->field, d);
    Subspace full = generate_two_sided_ideal(sys, {ConvElement::unit(sys)});
    found.emplace(zero.canonical_key(), zero);
    found.emplace(full.canonical_key(), full);

    for (int k = 0; k < count; ++k) {
        Subspace ideal = generate_two_sided_ideal(sys, {random_generator(rng, sys)});
        found.emplace(ideal.canonical_key(), ideal);
    }

    for (auto& [key, ideal] : found) rep.ideals.push_back(analyze_ideal(sys, std::move(ideal)));
    sort_ideal_infos(rep.ideals);
    return rep;
}

// ---------------------------------------------------------------------------
// exhaustive enumeration for split commutative instances

namespace {

Subspace intersect(const Subspace& p, const Subspace& q) {
    const FieldPtr& f = p.field();
    const int r = p.dim();
    if (r == 0) return p;
    CycMat residuals(f, p.ambient_dim(), r);
    for (int k = 0; k < r; ++k) {
        CycVec red = q.reduce(p.rows()[static_cast<std::size_t>(k)]);
        for (int i = 0; i < p.ambient_dim(); ++i) residuals.at(i, k) = red[static_cast<std::size_t>(i)];
    }
    std::vector<CycVec> combos = null_space(residuals);
    std::vector<CycVec> vectors;
    for (const auto& c : combos) {
        CycVec v = zero_vec(f, p.ambient_dim());
        for (int k = 0; k < r; ++k)
            if (!c[static_cast<std::size_t>(k)].is_zero())
                v = vec_add(v, vec_scaled(p.rows()[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]));
        vectors.push_back(std::move(v));
    }
    return Subspace::span(f, p.ambient_dim(), vectors);
}

Subspace eigenspace(const CycMat& op, const CycScalar& lambda) {
    CycMat shifted = op - CycMat::identity(op.field(), op.rows()).scaled(lambda);
    return Subspace::span(op.field(), op.rows(), null_space(shifted));
}

}  // namespace

EnumerationReport enumerate_ideals(const SystemPtr& sys, int dim_cap) {
    EnumerationReport rep;
    StructureAlgebra b = structure_of(sys);
    if (!b.is_commutative()) {
        rep.reason = "B is not commutative";
        return rep;
    }
    if (b.dim > dim_cap) {
        rep.reason = "dim(B) exceeds enumeration cap";
        return rep;
    }
    const FieldPtr& f = sys->field;
    const int d = b.dim;

    // eigenvalue candidates: 0 and +-zeta_m^k (left multiplications by
    // basis elements of a split commutative B only ever have such spectra
    // in the shipped families; anything else fails the split check below)
    std::vector<CycScalar> candidates;
    candidates.push_back(CycScalar::zero(f));
    for (int k = 0; k < f->conductor(); ++k) {
        CycScalar z = CycScalar::root_power(f, k);
        candidates.push_back(z);
        candidates.push_back(-z);
    }

    std::vector<Subspace> pieces{Subspace::full(f, d)};
    for (int i = 0; i < d; ++i) {
        CycMat op = b.left_mult(i);
        std::vector<Subspace> next;
        for (const auto& piece : pieces) {
            if (piece.dim() <= 1) {
                next.push_back(piece);
                continue;
            }
            std::vector<Subspace> split;
            int covered = 0;
            for (const auto& lambda : candidates) {
                Subspace es = intersect(piece, eigenspace(op, lambda));
                if (es.dim() > 0) {
                    covered += es.dim();
                    split.push_back(std::move(es));
                }
            }
            if (covered == piece.dim())
                for (auto& s : split) next.push_back(std::move(s));
            else
                next.push_back(piece);  // this refiner does not split the piece
        }
        pieces = std::move(next);
    }

    for (const auto& piece : pieces)
        if (piece.dim() != 1) {
            rep.reason = "B does not split into one-dimensional ideals over the instance field";
            return rep;
        }

    // Peirce validation: decompose 1 across the pieces and check the
    // resulting idempotents are orthogonal and multiply back correctly.
    CycMat basis_mat(f, d, d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) basis_mat.at(i, k) = pieces[static_cast<std::size_t>(k)].rows()[0][static_cast<std::size_t>(i)];
    CycVec unit_coords = ConvElement::unit(sys).to_vector();
    CycVec combo = basis_mat.inverse().apply(unit_coords);
    std::vector<CycVec> idem;
    for (int k = 0; k < d; ++k)
        idem.push_back(vec_scaled(pieces[static_cast<std::size_t>(k)].rows()[0], combo[static_cast<std::size_t>(k)]));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            CycVec prod = b.mul(idem[static_cast<std::size_t>(i)], idem[static_cast<std::size_t>(j)]);
            CycVec expect = i == j ? idem[static_cast<std::size_t>(i)] : zero_vec(f, d);
            if (!vec_is_zero(vec_sub(prod, expect))) {
                rep.reason = "Peirce validation failed (pieces are not orthogonal idempotent factors)";
                return rep;
            }
        }
    for (const auto& piece : pieces)
        if (!is_two_sided(sys, piece).pass) {
            rep.reason = "a refinement piece is not an ideal";
            return rep;
        }

    rep.available = true;
    rep.minimal_ideal_count = d;

    // all ideals of K^d: subset sums of the minimal pieces
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<CycVec> vectors;
        for (int k = 0; k < d; ++k)
            if (mask & (1u << k)) vectors.push_back(pieces[static_cast<std::size_t>(k)].rows()[0]);
        rep.ideals.push_back(analyze_ideal(sys, Subspace::span(f, d, vectors)));
    }
    sort_ideal_infos(rep.ideals);
    return rep;
}

}  // namespace twistedlab
