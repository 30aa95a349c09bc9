#include "twistedlab/twisted_action.hpp"

#include <sstream>

namespace twistedlab {

AlgElement AutoMap::apply(const AlgElement& a) const {
    return AlgElement::from_coords(a.field(), shape_, matrix_.apply(a.to_coords()));
}

AutoMap validate_automorphism(const CycMat& map, const BlockShape& shape) {
    const int d = shape.dim();
    if (map.rows() != d || map.cols() != d)
        throw AutomorphismError(AutomorphismError::Kind::NotInvertible, "automorphism matrix must be dim(A) square");
    const FieldPtr& f = map.field();

    AutoMap am;
    am.matrix_ = map;
    am.shape_ = shape;

    auto basis = algebra_basis(f, shape);
    std::vector<AlgElement> images;
    images.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) images.push_back(am.apply(basis[static_cast<std::size_t>(i)]));

    AlgElement one = AlgElement::unit(f, shape);
    if (am.apply(one) != one)
        throw AutomorphismError(AutomorphismError::Kind::NotUnital, "map does not fix the unit");

    for (int i = 0; i < d; ++i) {
        if (am.apply(basis[static_cast<std::size_t>(i)].star()) != images[static_cast<std::size_t>(i)].star())
            throw AutomorphismError(AutomorphismError::Kind::NotStarPreserving,
                                    "map does not commute with * on basis element " + std::to_string(i), i);
        for (int j = 0; j < d; ++j) {
            AlgElement lhs = am.apply(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]);
            AlgElement rhs = images[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(j)];
            if (lhs != rhs)
                throw AutomorphismError(AutomorphismError::Kind::NotMultiplicative,
                                        "map is not multiplicative on basis pair (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")",
                                        i, j);
        }
    }

    try {
        (void)map.inverse();
    } catch (const SingularMatrix&) {
        throw AutomorphismError(AutomorphismError::Kind::NotInvertible, "automorphism matrix is singular");
    }
    return am;
}

AutoMap trivial_automorphism(const FieldPtr& f, const BlockShape& shape) {
    return validate_automorphism(CycMat::identity(f, shape.dim()), shape);
}

AutoMap block_permutation_automorphism(const FieldPtr& f, const BlockShape& shape, const std::vector<int>& perm) {
    const auto& blocks = shape.blocks();
    if (static_cast<int>(perm.size()) != shape.block_count())
        throw ShapeMismatch("permutation length != block count");
    std::vector<bool> seen(perm.size(), false);
    for (int b = 0; b < shape.block_count(); ++b) {
        int t = perm[static_cast<std::size_t>(b)];
        if (t < 0 || t >= shape.block_count() || seen[static_cast<std::size_t>(t)])
            throw ShapeMismatch("not a permutation of blocks");
        seen[static_cast<std::size_t>(t)] = true;
        if (blocks[static_cast<std::size_t>(b)] != blocks[static_cast<std::size_t>(t)])
            throw ShapeMismatch("permuted blocks must have equal sizes");
    }
    CycMat m(f, shape.dim(), shape.dim());
    for (int b = 0; b < shape.block_count(); ++b) {
        int n = blocks[static_cast<std::size_t>(b)];
        int from = shape.offset(b), to = shape.offset(perm[static_cast<std::size_t>(b)]);
        for (int k = 0; k < n * n; ++k) m.at(to + k, from + k) = CycScalar::one(f);
    }
    return validate_automorphism(m, shape);
}

AutoMap inner_automorphism(const AlgElement& u) {
    if (!u.is_unitary()) throw NotUnitary("inner automorphism requires a unitary element");
    const BlockShape& shape = u.shape();
    const FieldPtr& f = u.field();
    CycMat m(f, shape.dim(), shape.dim());
    auto basis = algebra_basis(f, shape);
    AlgElement us = u.star();
    for (int j = 0; j < shape.dim(); ++j) {
        CycVec col = (u * basis[static_cast<std::size_t>(j)] * us).to_coords();
        for (int i = 0; i < shape.dim(); ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return validate_automorphism(m, shape);
}

Cocycle::Cocycle(int group_order, std::vector<AlgElement> table) : order_(group_order), table_(std::move(table)) {
    if (table_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_))
        throw ShapeMismatch("cocycle table must have |G|^2 entries");
}

Cocycle trivial_cocycle(const FieldPtr& f, const BlockShape& shape, int group_order) {
    std::vector<AlgElement> t(static_cast<std::size_t>(group_order) * static_cast<std::size_t>(group_order),
                              AlgElement::unit(f, shape));
    return Cocycle(group_order, std::move(t));
}

Cocycle bicharacter_cocycle(const FieldPtr& f, const BlockShape& shape, int n) {
    if (n < 1) throw ConductorIncompatible("bicharacter parameter must be >= 1");
    if (f->conductor() % n != 0)
        throw ConductorIncompatible("bicharacter needs n | m (n = " + std::to_string(n) +
                                    ", conductor = " + std::to_string(f->conductor()) + ")");
    const int ord = n * n;
    const long step = f->conductor() / n;  // zeta_n = zeta_m^step
    std::vector<AlgElement> t;
    t.reserve(static_cast<std::size_t>(ord) * ord);
    AlgElement one = AlgElement::unit(f, shape);
    for (int i = 0; i < ord; ++i)
        for (int j = 0; j < ord; ++j) {
            int b = i % n, c = j / n;
            t.push_back(one.scaled(CycScalar::root_power(f, step * b * c)));
        }
    return Cocycle(ord, std::move(t));
}

SystemPtr make_system(FiniteGroup group, BlockShape shape, FieldPtr field, std::vector<AutoMap> alphas,
                      Cocycle omega) {
    if (static_cast<int>(alphas.size()) != group.order())
        throw ShapeMismatch("need one automorphism per group element");
    if (omega.group_order() != group.order()) throw ShapeMismatch("cocycle table order != |G|");
    auto sys = std::make_shared<TwistedSystem>();
    sys->group = std::move(group);
    sys->shape = std::move(shape);
    sys->field = std::move(field);
    sys->alphas = std::move(alphas);
    sys->omega = std::move(omega);
    return sys;
}

SystemPtr trivial_system(FiniteGroup group, BlockShape shape, FieldPtr field) {
    std::vector<AutoMap> alphas(static_cast<std::size_t>(group.order()), trivial_automorphism(field, shape));
    Cocycle omega = trivial_cocycle(field, shape, group.order());
    return make_system(std::move(group), std::move(shape), std::move(field), std::move(alphas), std::move(omega));
}

std::string AxiomReport::describe() const {
    std::ostringstream os;
    switch (failure) {
        case Failure::None:
            os << "all axioms hold";
            break;
        case Failure::NonUnitaryEntry:
            os << "cocycle entry omega(" << x << "," << y << ") is not unitary";
            break;
        case Failure::AxiomI:
            os << "axiom (i) fails at triple (" << x << "," << y << "," << z << ")";
            break;
        case Failure::AxiomII:
            os << "axiom (ii) fails at pair (" << x << "," << y << "), basis index " << z;
            break;
        case Failure::AxiomIII:
            os << "axiom (iii) fails at element " << x;
            break;
    }
    return os.str();
}

AxiomReport validate_axioms(const TwistedSystem& sys) {
    AxiomReport rep;
    const int n = sys.group.order();
    const int e = sys.group.identity();
    AlgElement one = AlgElement::unit(sys.field, sys.shape);

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!sys.omega.at(x, y).is_unitary()) {
                rep.failure = AxiomReport::Failure::NonUnitaryEntry;
                rep.x = x;
                rep.y = y;
                return rep;
            }

    // (iii) first: cheap, and (i)/(ii) proofs lean on normalization
    for (int x = 0; x < n; ++x)
        if (sys.omega.at(x, e) != one || sys.omega.at(e, x) != one) {
            rep.failure = AxiomReport::Failure::AxiomIII;
            rep.x = x;
            return rep;
        }
    if (sys.alpha(e).matrix() != CycMat::identity(sys.field, sys.shape.dim())) {
        rep.failure = AxiomReport::Failure::AxiomIII;
        rep.x = e;
        return rep;
    }

    auto basis = algebra_basis(sys.field, sys.shape);

    // (ii) over all pairs x,y and all basis elements a
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const AlgElement& w = sys.omega.at(x, y);
            int xy = sys.group.mul(x, y);
            for (int a = 0; a < sys.shape.dim(); ++a) {
                AlgElement lhs = sys.alpha(x).apply(sys.alpha(y).apply(basis[static_cast<std::size_t>(a)])) * w;
                AlgElement rhs = w * sys.alpha(xy).apply(basis[static_cast<std::size_t>(a)]);
                if (lhs != rhs) {
                    rep.failure = AxiomReport::Failure::AxiomII;
                    rep.x = x;
                    rep.y = y;
                    rep.z = a;
                    return rep;
                }
            }
        }

    // (i) over all |G|^3 triples
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                AlgElement lhs = sys.alpha(x).apply(sys.omega.at(y, z)) * sys.omega.at(x, sys.group.mul(y, z));
                AlgElement rhs = sys.omega.at(x, y) * sys.omega.at(sys.group.mul(x, y), z);
                if (lhs != rhs) {
                    rep.failure = AxiomReport::Failure::AxiomI;
                    rep.x = x;
                    rep.y = y;
                    rep.z = z;
                    return rep;
                }
            }

    return rep;
}

}  // namespace twistedlab
