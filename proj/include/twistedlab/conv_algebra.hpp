#pragma once

#include "twistedlab/twisted_action.hpp"

namespace twistedlab {

/// Element of B = l^1_{alpha,omega}(G, A): one algebra value per group
/// element. Haar measure is counting measure with weight 1 and modular
/// function 1 throughout; this is fixed, not configurable.
class ConvElement {
public:
    ConvElement() = default;

    static ConvElement zero(const SystemPtr& sys);
    /// Function supported at x with value a (delta_x^a).
    static ConvElement delta(const SystemPtr& sys, int x, AlgElement a);
    /// The unit delta_e^1.
    static ConvElement unit(const SystemPtr& sys);
    /// Basis vector delta_x (x) matrix-unit j, with index x*dim(A)+j.
    static ConvElement basis_element(const SystemPtr& sys, int index);
    static ConvElement from_vector(const SystemPtr& sys, const CycVec& v);
    static ConvElement from_values(const SystemPtr& sys, std::vector<AlgElement> values);

    const SystemPtr& system() const { return sys_; }
    const AlgElement& at(int x) const { return values_[static_cast<std::size_t>(x)]; }

    CycVec to_vector() const;

    ConvElement operator+(const ConvElement& o) const;
    ConvElement operator-(const ConvElement& o) const;
    ConvElement operator-() const;
    ConvElement scaled(const CycScalar& c) const;

    /// Involution Phi*(x) = omega(x,x^-1)* alpha_x(Phi(x^-1)*).
    ConvElement involve() const;

    /// l1 norm: sum over G of the block operator norms. Float diagnostic.
    double l1_norm() const;

    bool operator==(const ConvElement& o) const;
    bool operator!=(const ConvElement& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    SystemPtr sys_;
    std::vector<AlgElement> values_;
};

/// Coordinate dimension of B: |G| * dim(A).
int conv_dim(const TwistedSystem& sys);

/// Twisted convolution:
///   (Phi*Psi)(x) = sum_y Phi(y) alpha_y(Psi(y^-1 x)) omega(y, y^-1 x).
ConvElement convolve(const ConvElement& a, const ConvElement& b);

/// The multiplier m_{u,y}: (m_{u,y} Phi)(x) = u alpha_y(Phi(y^-1 x)) omega(y, y^-1 x).
/// u may be any algebra element.
ConvElement multiplier_apply(const AlgElement& u, int y, const ConvElement& phi);

/// Adjoint multiplier m_{u,y}* = m_{omega(y^-1,y)* alpha_{y^-1}(u*), y^-1};
/// defined for unitary u (throws NotUnitary otherwise).
ConvElement multiplier_adjoint_apply(const AlgElement& u, int y, const ConvElement& phi);

/// The adjoint's parameters (u', y') with m_{u,y}* = m_{u',y'}.
std::pair<AlgElement, int> multiplier_adjoint_params(const SystemPtr& sys, const AlgElement& u, int y);

/// d x d matrix of left multiplication by phi on coordinates:
/// left_mult_matrix(Phi) * to_vector(Psi) = to_vector(Phi * Psi).
CycMat left_mult_matrix(const ConvElement& phi);
CycMat right_mult_matrix(const ConvElement& phi);

/// d x d matrix of m_{u,y} on coordinates.
CycMat multiplier_matrix(const SystemPtr& sys, const AlgElement& u, int y);

}  // namespace twistedlab
