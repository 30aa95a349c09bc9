#include "twistedlab/conv_algebra.hpp"

#include <functional>

namespace twistedlab {

namespace {
void check_same_system(const ConvElement& a, const ConvElement& b) {
    if (a.system() != b.system()) throw SystemMismatch();
}
}  // namespace

int conv_dim(const TwistedSystem& sys) { return sys.group.order() * sys.shape.dim(); }

ConvElement ConvElement::zero(const SystemPtr& sys) {
    ConvElement c;
    c.sys_ = sys;
    c.values_.assign(static_cast<std::size_t>(sys->group.order()), AlgElement::zero(sys->field, sys->shape));
    return c;
}

ConvElement ConvElement::delta(const SystemPtr& sys, int x, AlgElement a) {
    if (a.shape() != sys->shape) throw ShapeMismatch("delta value has wrong shape");
    ConvElement c = zero(sys);
    c.values_[static_cast<std::size_t>(x)] = std::move(a);
    return c;
}

ConvElement ConvElement::unit(const SystemPtr& sys) {
    return delta(sys, sys->group.identity(), AlgElement::unit(sys->field, sys->shape));
}

ConvElement ConvElement::from_values(const SystemPtr& sys, std::vector<AlgElement> values) {
    if (static_cast<int>(values.size()) != sys->group.order())
        throw DimensionMismatch("need one algebra value per group element");
    for (const auto& a : values)
        if (a.shape() != sys->shape) throw ShapeMismatch("value has wrong shape");
    ConvElement c;
    c.sys_ = sys;
    c.values_ = std::move(values);
    return c;
}

ConvElement ConvElement::basis_element(const SystemPtr& sys, int index) {
    int da = sys->shape.dim();
    return delta(sys, index / da, AlgElement::basis_element(sys->field, sys->shape, index % da));
}

ConvElement ConvElement::from_vector(const SystemPtr& sys, const CycVec& v) {
    if (static_cast<int>(v.size()) != conv_dim(*sys))
        throw DimensionMismatch("coordinate vector length != |G|*dim(A)");
    ConvElement c = zero(sys);
    int da = sys->shape.dim();
    for (int x = 0; x < sys->group.order(); ++x) {
        CycVec coords(v.begin() + static_cast<std::ptrdiff_t>(x) * da,
                      v.begin() + static_cast<std::ptrdiff_t>(x + 1) * da);
        c.values_[static_cast<std::size_t>(x)] = AlgElement::from_coords(sys->field, sys->shape, coords);
    }
    return c;
}

CycVec ConvElement::to_vector() const {
    CycVec out;
    out.reserve(static_cast<std::size_t>(conv_dim(*sys_)));
    for (const auto& a : values_) {
        CycVec coords = a.to_coords();
        out.insert(out.end(), coords.begin(), coords.end());
    }
    return out;
}

ConvElement ConvElement::operator+(const ConvElement& o) const {
    check_same_system(*this, o);
    ConvElement out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = out.values_[i] + o.values_[i];
    return out;
}

ConvElement ConvElement::operator-(const ConvElement& o) const {
    check_same_system(*this, o);
    ConvElement out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = out.values_[i] - o.values_[i];
    return out;
}

ConvElement ConvElement::operator-() const {
    ConvElement out = *this;
    for (auto& v : out.values_) v = -v;
    return out;
}

ConvElement ConvElement::scaled(const CycScalar& c) const {
    ConvElement out = *this;
    for (auto& v : out.values_) v = v.scaled(c);
    return out;
}

ConvElement ConvElement::involve() const {
    const TwistedSystem& s = *sys_;
    ConvElement out = zero(sys_);
    for (int x = 0; x < s.group.order(); ++x) {
        int xi = s.group.inv(x);
        // Delta = 1 on finite groups; the modular factor drops out
        out.values_[static_cast<std::size_t>(x)] =
            s.omega.at(x, xi).star() * s.alpha(x).apply(values_[static_cast<std::size_t>(xi)].star());
    }
    return out;
}

double ConvElement::l1_norm() const {
    double sum = 0.0;
    for (const auto& a : values_) sum += a.op_norm();
    return sum;
}

bool ConvElement::operator==(const ConvElement& o) const {
    check_same_system(*this, o);
    return values_ == o.values_;
}

bool ConvElement::is_zero() const {
    for (const auto& a : values_)
        if (!a.is_zero()) return false;
    return true;
}

ConvElement convolve(const ConvElement& a, const ConvElement& b) {
    check_same_system(a, b);
    const SystemPtr& sys = a.system();
    const TwistedSystem& s = *sys;
    std::vector<AlgElement> acc(static_cast<std::size_t>(s.group.order()), AlgElement::zero(s.field, s.shape));
    for (int y = 0; y < s.group.order(); ++y) {
        if (a.at(y).is_zero()) continue;
        for (int x = 0; x < s.group.order(); ++x) {
            int yx = s.group.mul(s.group.inv(y), x);
            if (b.at(yx).is_zero()) continue;
            acc[static_cast<std::size_t>(x)] =
                acc[static_cast<std::size_t>(x)] + a.at(y) * s.alpha(y).apply(b.at(yx)) * s.omega.at(y, yx);
        }
    }
    return ConvElement::from_values(sys, std::move(acc));
}

ConvElement multiplier_apply(const AlgElement& u, int y, const ConvElement& phi) {
    const SystemPtr& sys = phi.system();
    const TwistedSystem& s = *sys;
    if (u.shape() != s.shape) throw ShapeMismatch("multiplier element has wrong shape");
    std::vector<AlgElement> vals(static_cast<std::size_t>(s.group.order()), AlgElement::zero(s.field, s.shape));
    for (int x = 0; x < s.group.order(); ++x) {
        int yx = s.group.mul(s.group.inv(y), x);
        if (phi.at(yx).is_zero()) continue;
        vals[static_cast<std::size_t>(x)] = u * s.alpha(y).apply(phi.at(yx)) * s.omega.at(y, yx);
    }
    return ConvElement::from_values(sys, std::move(vals));
}

std::pair<AlgElement, int> multiplier_adjoint_params(const SystemPtr& sys, const AlgElement& u, int y) {
    const TwistedSystem& s = *sys;
    int yi = s.group.inv(y);
    AlgElement u_adj = s.omega.at(yi, y).star() * s.alpha(yi).apply(u.star());
    return {u_adj, yi};
}

ConvElement multiplier_adjoint_apply(const AlgElement& u, int y, const ConvElement& phi) {
    if (!u.is_unitary()) throw NotUnitary("multiplier adjoint is defined for unitary u");
    auto [u_adj, yi] = multiplier_adjoint_params(phi.system(), u, y);
    return multiplier_apply(u_adj, yi, phi);
}

namespace {
CycMat operator_matrix(const SystemPtr& sys, const std::function<ConvElement(const ConvElement&)>& op) {
    int d = conv_dim(*sys);
    CycMat m(sys->field, d, d);
    for (int j = 0; j < d; ++j) {
        CycVec col = op(ConvElement::basis_element(sys, j)).to_vector();
        for (int i = 0; i < d; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}
}  // namespace

CycMat left_mult_matrix(const ConvElement& phi) {
    return operator_matrix(phi.system(), [&](const ConvElement& b) { return convolve(phi, b); });
}

CycMat right_mult_matrix(const ConvElement& phi) {
    return operator_matrix(phi.system(), [&](const ConvElement& b) { return convolve(b, phi); });
}

CycMat multiplier_matrix(const SystemPtr& sys, const AlgElement& u, int y) {
    return operator_matrix(sys, [&](const ConvElement& b) { return multiplier_apply(u, y, b); });
}

}  // namespace twistedlab
