#include "twistedlab/coeff_algebra.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <sstream>

namespace twistedlab {

BlockShape::BlockShape(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw ShapeMismatch("block list must be nonempty");
    offsets_.reserve(blocks_.size());
    for (int n : blocks_) {
        if (n < 1) throw ShapeMismatch("block sizes must be positive");
        offsets_.push_back(dim_);
        dim_ += n * n;
    }
}

AlgElement AlgElement::zero(const FieldPtr& f, const BlockShape& s) {
    AlgElement a;
    a.shape_ = s;
    a.field_ = f;
    a.mats_.reserve(static_cast<std::size_t>(s.block_count()));
    for (int n : s.blocks()) a.mats_.emplace_back(f, n, n);
    return a;
}

AlgElement AlgElement::unit(const FieldPtr& f, const BlockShape& s) {
    AlgElement a = zero(f, s);
    for (int b = 0; b < s.block_count(); ++b)
        a.mats_[static_cast<std::size_t>(b)] = CycMat::identity(f, s.blocks()[static_cast<std::size_t>(b)]);
    return a;
}

AlgElement AlgElement::basis_element(const FieldPtr& f, const BlockShape& s, int index) {
    if (index < 0 || index >= s.dim()) throw DimensionMismatch("basis index out of range");
    AlgElement a = zero(f, s);
    for (int b = 0; b < s.block_count(); ++b) {
        int n = s.blocks()[static_cast<std::size_t>(b)];
        int off = s.offset(b);
        if (index < off + n * n) {
            int local = index - off;
            a.mats_[static_cast<std::size_t>(b)].at(local / n, local % n) = CycScalar::one(f);
            break;
        }
    }
    return a;
}

AlgElement AlgElement::from_coords(const FieldPtr& f, const BlockShape& s, const CycVec& coords) {
    if (static_cast<int>(coords.size()) != s.dim()) throw DimensionMismatch("coordinate length != dim(A)");
    AlgElement a = zero(f, s);
    for (int b = 0; b < s.block_count(); ++b) {
        int n = s.blocks()[static_cast<std::size_t>(b)];
        int off = s.offset(b);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                a.mats_[static_cast<std::size_t>(b)].at(r, c) = coords[static_cast<std::size_t>(off + r * n + c)];
    }
    return a;
}

AlgElement AlgElement::from_blocks(const FieldPtr& f, const BlockShape& s, std::vector<CycMat> mats) {
    if (static_cast<int>(mats.size()) != s.block_count()) throw ShapeMismatch("block count mismatch");
    for (int b = 0; b < s.block_count(); ++b) {
        int n = s.blocks()[static_cast<std::size_t>(b)];
        if (mats[static_cast<std::size_t>(b)].rows() != n || mats[static_cast<std::size_t>(b)].cols() != n)
            throw ShapeMismatch("block " + std::to_string(b) + " has wrong size");
    }
    AlgElement a;
    a.shape_ = s;
    a.field_ = f;
    a.mats_ = std::move(mats);
    return a;
}

CycVec AlgElement::to_coords() const {
    CycVec out;
    out.reserve(static_cast<std::size_t>(shape_.dim()));
    for (int b = 0; b < shape_.block_count(); ++b) {
        int n = shape_.blocks()[static_cast<std::size_t>(b)];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) out.push_back(mats_[static_cast<std::size_t>(b)].at(r, c));
    }
    return out;
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    if (shape_ != o.shape_) throw ShapeMismatch("algebra element shape mismatch");
    AlgElement out = *this;
    for (std::size_t b = 0; b < mats_.size(); ++b) out.mats_[b] = out.mats_[b] + o.mats_[b];
    return out;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    if (shape_ != o.shape_) throw ShapeMismatch("algebra element shape mismatch");
    AlgElement out = *this;
    for (std::size_t b = 0; b < mats_.size(); ++b) out.mats_[b] = out.mats_[b] - o.mats_[b];
    return out;
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    if (shape_ != o.shape_) throw ShapeMismatch("algebra element shape mismatch");
    AlgElement out = *this;
    for (std::size_t b = 0; b < mats_.size(); ++b) out.mats_[b] = out.mats_[b] * o.mats_[b];
    return out;
}

AlgElement AlgElement::operator-() const {
    AlgElement out = *this;
    for (auto& m : out.mats_) m = m.scaled(CycScalar::from_rational(field_, Rational(-1)));
    return out;
}

AlgElement AlgElement::scaled(const CycScalar& c) const {
    AlgElement out = *this;
    for (auto& m : out.mats_) m = m.scaled(c);
    return out;
}

AlgElement AlgElement::star() const {
    AlgElement out = *this;
    for (auto& m : out.mats_) m = m.conj_transpose();
    return out;
}

bool AlgElement::operator==(const AlgElement& o) const {
    if (shape_ != o.shape_) return false;
    for (std::size_t b = 0; b < mats_.size(); ++b)
        if (mats_[b] != o.mats_[b]) return false;
    return true;
}

bool AlgElement::is_zero() const {
    for (const auto& m : mats_)
        if (!m.is_zero()) return false;
    return true;
}

bool AlgElement::is_unitary() const {
    AlgElement s = star();
    AlgElement id = unit(field_, shape_);
    return (*this * s) == id && (s * *this) == id;
}

double AlgElement::op_norm() const {
    double best = 0.0;
    for (const auto& m : mats_) {
        Eigen::MatrixXcd em(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) em(i, j) = m.at(i, j).embed();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
        if (em.rows() > 0) best = std::max(best, svd.singularValues()(0));
    }
    return best;
}

std::string AlgElement::canonical_key() const {
    std::ostringstream os;
    for (const auto& m : mats_) os << m.canonical_key() << '|';
    return os.str();
}

std::vector<AlgElement> algebra_basis(const FieldPtr& f, const BlockShape& s) {
    std::vector<AlgElement> out;
    out.reserve(static_cast<std::size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) out.push_back(AlgElement::basis_element(f, s, i));
    return out;
}

}  // namespace twistedlab
