#include "twistedlab/proof_replay.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace twistedlab {

CycMat Representation::pi_of_vector(const CycVec& coords) const {
    const int q = quo.alg.dim;
    CycMat out(sys->field, q, q);
    if (static_cast<int>(coords.size()) != static_cast<int>(pi.size()))
        throw DimensionMismatch("coordinate length != dim(B)");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        out = out + pi[i].scaled(coords[i]);
    }
    return out;
}

Representation build_pi(const SystemPtr& sys, const Subspace& ideal) {
    Representation rep;
    rep.sys = sys;
    rep.quo = quotient(sys, ideal);  // throws NotAnIdeal when I is not two-sided
    const int d = conv_dim(*sys);
    const int q = rep.quo.alg.dim;

    for (int i = 0; i < d; ++i) {
        ConvElement b = ConvElement::basis_element(sys, i);
        // well-definedness: left multiplication by b must map I into I
        for (const auto& row : ideal.rows())
            if (!ideal.contains(convolve(b, ConvElement::from_vector(sys, row)).to_vector()))
                throw NotInvariant("left multiplication does not preserve the ideal (translation-invariance"
                                   " broken for basis element " +
                                   std::to_string(i) + ")");
        CycMat m(sys->field, q, q);
        for (int k = 0; k < q; ++k) {
            ConvElement repk = ConvElement::basis_element(sys, rep.quo.section_columns[static_cast<std::size_t>(k)]);
            CycVec col = rep.quo.project(convolve(b, repk).to_vector());
            for (int r = 0; r < q; ++r) m.at(r, k) = col[static_cast<std::size_t>(r)];
        }
        rep.pi.push_back(std::move(m));
    }
    return rep;
}

std::vector<AlgElement> default_wgen(const SystemPtr& sys) {
    std::vector<AlgElement> out{AlgElement::unit(sys->field, sys->shape)};
    std::map<std::string, bool> seen{{out[0].canonical_key(), true}};
    for (int x = 0; x < sys->group.order(); ++x)
        for (int y = 0; y < sys->group.order(); ++y) {
            const AlgElement& w = sys->omega.at(x, y);
            auto [it, fresh] = seen.emplace(w.canonical_key(), true);
            if (fresh) out.push_back(w);
        }
    return out;
}

namespace {

CycMat multiplier_on_quotient(const SystemPtr& sys, const QuotientAlgebra& quo, const AlgElement& u, int y) {
    const int q = quo.alg.dim;
    // m_{u,y} maps I into I whenever I is a left ideal; verify before
    // projecting so a violation cannot silently corrupt the quotient action
    for (const auto& row : quo.ideal.rows())
        if (!quo.ideal.contains(multiplier_apply(u, y, ConvElement::from_vector(sys, row)).to_vector()))
            throw NotInvariant("multiplier does not preserve the ideal");
    CycMat m(sys->field, q, q);
    for (int k = 0; k < q; ++k) {
        ConvElement repk = ConvElement::basis_element(sys, quo.section_columns[static_cast<std::size_t>(k)]);
        CycVec col = quo.project(multiplier_apply(u, y, repk).to_vector());
        for (int r = 0; r < q; ++r) m.at(r, k) = col[static_cast<std::size_t>(r)];
    }
    return m;
}

}  // namespace

MultiplierGroup multiplier_group(const SystemPtr& sys, const QuotientAlgebra& quo,
                                 const std::vector<AlgElement>& w_gen, std::size_t cap) {
    if (cap < 1) throw CapExceeded(cap);
    const int q = quo.alg.dim;

    std::vector<AlgElement> gens_w{AlgElement::unit(sys->field, sys->shape)};
    for (const auto& w : w_gen) {
        if (!w.is_unitary()) throw NotUnitary("multiplier group generators must be unitary");
        gens_w.push_back(w);
    }

    MultiplierGroup group;
    std::vector<CycMat> gen_ops;
    for (std::size_t wi = 0; wi < gens_w.size(); ++wi)
        for (int y = 0; y < sys->group.order(); ++y) {
            gen_ops.push_back(multiplier_on_quotient(sys, quo, gens_w[wi], y));
            group.generator_tags.emplace_back(static_cast<int>(wi), y);
            // the adjoint formula supplies the inverse generator
            auto [u_adj, y_adj] = multiplier_adjoint_params(sys, gens_w[wi], y);
            gen_ops.push_back(multiplier_on_quotient(sys, quo, u_adj, y_adj));
            group.generator_tags.emplace_back(-static_cast<int>(wi) - 1, y_adj);
        }

    std::map<std::string, std::size_t> seen;
    std::deque<CycMat> frontier;
    CycMat id = CycMat::identity(sys->field, q);
    seen.emplace(id.canonical_key(), 0);
    group.operators.push_back(id);
    frontier.push_back(id);

    while (!frontier.empty()) {
        CycMat t = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gen_ops) {
            CycMat p = t * g;
            std::string key = p.canonical_key();
            if (seen.count(key)) continue;
            if (group.operators.size() >= cap) throw CapExceeded(cap);
            seen.emplace(std::move(key), group.operators.size());
            group.operators.push_back(p);
            frontier.push_back(std::move(p));
        }
    }

    // closure sanity: inverses stay inside (finite cancellative => group)
    for (const auto& t : group.operators)
        if (!seen.count(t.inverse().canonical_key()))
            throw Error("internal: operator closure is not inverse-closed");

    std::sort(group.operators.begin(), group.operators.end(),
              [](const CycMat& a, const CycMat& b) { return a.cmp(b) < 0; });
    return group;
}

MultiplierGroup multiplier_group(const SystemPtr& sys, const Subspace& ideal,
                                 const std::vector<AlgElement>& w_gen, std::size_t cap) {
    return multiplier_group(sys, quotient(sys, ideal), w_gen, cap);
}

AveragedForm average_form(const MultiplierGroup& k) {
    if (k.operators.empty()) throw Error("empty operator set has no average");
    const CycMat& first = k.operators.front();
    const FieldPtr& f = first.field();
    const int q = first.rows();
    CycMat sum(f, q, q);
    for (const auto& t : k.operators) sum = sum + t.conj_transpose() * t;
    CycScalar inv_order = CycScalar::from_rational(f, Rational(1, static_cast<long>(k.operators.size())));
    return AveragedForm{sum.scaled(inv_order)};
}

bool gram_is_hermitian(const AveragedForm& form) { return form.gram == form.gram.conj_transpose(); }

bool gram_is_k_invariant(const MultiplierGroup& k, const AveragedForm& form) {
    for (const auto& t : k.operators)
        if (t.conj_transpose() * form.gram * t != form.gram) return false;
    return true;
}

double gram_min_eigenvalue(const AveragedForm& form) {
    const int q = form.gram.rows();
    if (q == 0) return std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd m(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m(i, j) = form.gram.at(i, j).embed();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    return solver.eigenvalues().minCoeff();
}

StarReport verify_star_property(const Representation& rep, const AveragedForm& form) {
    StarReport out;
    const int d = conv_dim(*rep.sys);
    for (int i = 0; i < d; ++i) {
        ConvElement b = ConvElement::basis_element(rep.sys, i);
        CycMat lhs = form.gram * rep.pi[static_cast<std::size_t>(i)];
        CycMat rhs = rep.pi_of(b.involve()).conj_transpose() * form.gram;
        if (lhs != rhs) {
            out.pass = false;
            out.witness_basis = i;
            return out;
        }
    }
    return out;
}

KernelReport kernel_of_pi(const Representation& rep, const Subspace& ideal) {
    const int d = conv_dim(*rep.sys);
    const int q = rep.quo.alg.dim;
    CycMat m(rep.sys->field, q * q, d);
    for (int i = 0; i < d; ++i)
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) m.at(r * q + c, i) = rep.pi[static_cast<std::size_t>(i)].at(r, c);
    KernelReport out;
    out.kernel = Subspace::span(rep.sys->field, d, null_space(m));
    out.pass = out.kernel == ideal;
    return out;
}

}  // namespace twistedlab
