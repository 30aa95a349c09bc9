#pragma once

#include <string>
#include <vector>

#include "twistedlab/cyclotomic.hpp"

namespace twistedlab {

using CycVec = std::vector<CycScalar>;

/// Dense matrix over Q(zeta_m). All arithmetic exact.
class CycMat {
public:
    CycMat() : field_(CycField::get(1)), rows_(0), cols_(0) {}
    CycMat(FieldPtr f, int rows, int cols)
        : field_(std::move(f)),
          rows_(rows),
          cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), CycScalar::zero(field_)) {}

    static CycMat identity(const FieldPtr& f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    CycScalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const CycScalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    CycMat operator*(const CycMat& o) const;
    CycMat operator+(const CycMat& o) const;
    CycMat operator-(const CycMat& o) const;
    CycMat scaled(const CycScalar& c) const;
    CycVec apply(const CycVec& v) const;  // matrix * column vector

    CycMat transpose() const;
    CycMat conj_transpose() const;
    CycScalar trace() const;

    bool operator==(const CycMat& o) const;
    bool operator!=(const CycMat& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Exact inverse by Gauss-Jordan. Throws SingularMatrix.
    CycMat inverse() const;

    /// Entry-wise canonical string; stable dedup key for operator sets.
    std::string canonical_key() const;
    /// Lexicographic entry order; used to sort operator lists canonically.
    int cmp(const CycMat& o) const;

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<CycScalar> a_;
};

/// Incremental exact row reduction: maintains a reduced row-echelon basis
/// with strictly increasing pivots. The workhorse behind Subspace, null
/// spaces and rank decisions.
class SpanBuilder {
public:
    SpanBuilder(FieldPtr f, int ambient_dim) : field_(std::move(f)), ambient_(ambient_dim) {}

    /// Reduces v against the current basis; if a nonzero residual remains,
    /// normalizes, inserts, back-eliminates, and returns true (rank grew).
    bool insert(CycVec v);

    bool contains(const CycVec& v) const;
    /// Canonical residual of v: pivot coordinates eliminated.
    CycVec reduce(CycVec v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return ambient_; }
    const std::vector<CycVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const FieldPtr& field() const { return field_; }

private:
    FieldPtr field_;
    int ambient_;
    std::vector<CycVec> rows_;   // RREF rows
    std::vector<int> pivots_;    // strictly increasing
};

/// Basis (as RREF rows) of the right null space {x : M x = 0}.
std::vector<CycVec> null_space(const CycMat& m);

CycVec zero_vec(const FieldPtr& f, int n);
CycVec unit_vec(const FieldPtr& f, int n, int k);
CycVec vec_add(const CycVec& a, const CycVec& b);
CycVec vec_sub(const CycVec& a, const CycVec& b);
CycVec vec_scaled(const CycVec& a, const CycScalar& c);
bool vec_is_zero(const CycVec& a);
std::string vec_key(const CycVec& a);

}  // namespace twistedlab
