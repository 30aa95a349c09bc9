#pragma once

#include <vector>

#include "twistedlab/cyc_matrix.hpp"

namespace twistedlab {

/// Shape of the coefficient C*-algebra A = M_{n_1} + ... + M_{n_k}
/// (direct sum); dim(A) = sum of n_i^2.
class BlockShape {
public:
    BlockShape() = default;
    explicit BlockShape(std::vector<int> blocks);

    const std::vector<int>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int dim() const { return dim_; }
    /// Coordinate offset of block b in the matrix-unit basis.
    int offset(int b) const { return offsets_[static_cast<std::size_t>(b)]; }

    bool operator==(const BlockShape& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const BlockShape& o) const { return !(*this == o); }

private:
    std::vector<int> blocks_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

/// Element of A as one exact matrix per block. The basis used throughout
/// is the matrix units, concatenated block by block in row-major order.
class AlgElement {
public:
    AlgElement() = default;

    static AlgElement zero(const FieldPtr& f, const BlockShape& s);
    static AlgElement unit(const FieldPtr& f, const BlockShape& s);
    /// Matrix unit with the given coordinate index (0 <= index < dim).
    static AlgElement basis_element(const FieldPtr& f, const BlockShape& s, int index);
    static AlgElement from_coords(const FieldPtr& f, const BlockShape& s, const CycVec& coords);
    static AlgElement from_blocks(const FieldPtr& f, const BlockShape& s, std::vector<CycMat> mats);

    const BlockShape& shape() const { return shape_; }
    const FieldPtr& field() const { return field_; }
    const CycMat& block(int b) const { return mats_[static_cast<std::size_t>(b)]; }
    CycMat& block(int b) { return mats_[static_cast<std::size_t>(b)]; }

    CycVec to_coords() const;

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator*(const AlgElement& o) const;  // blockwise matrix product
    AlgElement operator-() const;
    AlgElement scaled(const CycScalar& c) const;
    /// Involution: blockwise conjugate transpose.
    AlgElement star() const;

    bool operator==(const AlgElement& o) const;
    bool operator!=(const AlgElement& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Exact test u u* = u* u = 1.
    bool is_unitary() const;

    /// Largest singular value across blocks of the float embedding.
    /// Diagnostic only (~1e-9); no exact decision depends on it.
    double op_norm() const;

    std::string canonical_key() const;

private:
    BlockShape shape_;
    FieldPtr field_;
    std::vector<CycMat> mats_;
};

/// All matrix units of the shape, in coordinate order; spans A.
std::vector<AlgElement> algebra_basis(const FieldPtr& f, const BlockShape& s);

}  // namespace twistedlab
