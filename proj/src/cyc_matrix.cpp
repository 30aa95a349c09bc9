#include "twistedlab/cyc_matrix.hpp"

#include <sstream>

namespace twistedlab {

CycMat CycMat::identity(const FieldPtr& f, int n) {
    CycMat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(f);
    return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    CycMat out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycScalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const CycScalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

CycMat CycMat::operator+(const CycMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    CycMat out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

CycMat CycMat::operator-(const CycMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
    CycMat out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = out.a_[i] - o.a_[i];
    return out;
}

CycMat CycMat::scaled(const CycScalar& c) const {
    CycMat out = *this;
    for (auto& x : out.a_) x = x * c;
    return out;
}

CycVec CycMat::apply(const CycVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
    CycVec out(static_cast<std::size_t>(rows_), CycScalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const CycScalar& aij = at(i, j);
            if (aij.is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            out[static_cast<std::size_t>(i)] += aij * v[static_cast<std::size_t>(j)];
        }
    return out;
}

CycMat CycMat::transpose() const {
    CycMat out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

CycMat CycMat::conj_transpose() const {
    CycMat out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

CycScalar CycMat::trace() const {
    CycScalar t = CycScalar::zero(field_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool CycMat::operator==(const CycMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool CycMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

CycMat CycMat::inverse() const {
    if (rows_ != cols_) throw ShapeMismatch("only square matrices invert");
    int n = rows_;
    CycMat work = *this;
    CycMat inv = identity(field_, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrix();
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(piv, j), work.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        CycScalar s = work.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            work.at(col, j) = work.at(col, j) * s;
            inv.at(col, j) = inv.at(col, j) * s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            CycScalar f = work.at(r, col);
            for (int j = 0; j < n; ++j) {
                work.at(r, j) = work.at(r, j) - f * work.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string CycMat::canonical_key() const {
    std::ostringstream os;
    os << rows_ << 'x' << cols_ << ':';
    for (const auto& x : a_) {
        for (const auto& c : x.coeffs()) os << c.str() << ',';
        os << ';';
    }
    return os.str();
}

int CycMat::cmp(const CycMat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
    if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        int c = a_[i].cmp(o.a_[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool SpanBuilder::insert(CycVec v) {
    if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("vector length != ambient dimension");
    v = reduce(std::move(v));
    int pivot = -1;
    for (int i = 0; i < ambient_; ++i)
        if (!v[static_cast<std::size_t>(i)].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) return false;

    CycScalar inv = v[static_cast<std::size_t>(pivot)].inverse();
    for (int i = pivot; i < ambient_; ++i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] * inv;

    // keep pivots strictly increasing
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);

    // back-eliminate the new pivot from every other row
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r == pos) continue;
        CycScalar c = rows_[r][static_cast<std::size_t>(pivot)];
        if (c.is_zero()) continue;
        for (int i = pivot; i < ambient_; ++i)
            rows_[r][static_cast<std::size_t>(i)] =
                rows_[r][static_cast<std::size_t>(i)] - c * v[static_cast<std::size_t>(i)];
    }
    return true;
}

CycVec SpanBuilder::reduce(CycVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const CycScalar& c = v[static_cast<std::size_t>(pivots_[r])];
        if (c.is_zero()) continue;
        CycScalar f = c;  // pivot entries are 1
        for (int i = pivots_[r]; i < ambient_; ++i)
            v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - f * rows_[r][static_cast<std::size_t>(i)];
    }
    return v;
}

bool SpanBuilder::contains(const CycVec& v) const { return vec_is_zero(reduce(v)); }

std::vector<CycVec> null_space(const CycMat& m) {
    // RREF the rows of m, then read a basis from the free columns.
    SpanBuilder rowspace(m.field(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        CycVec row(static_cast<std::size_t>(m.cols()), CycScalar::zero(m.field()));
        for (int j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
        rowspace.insert(std::move(row));
    }
    const auto& pivots = rowspace.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<CycVec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        CycVec v = zero_vec(m.field(), m.cols());
        v[static_cast<std::size_t>(free)] = CycScalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -rowspace.rows()[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

CycVec zero_vec(const FieldPtr& f, int n) { return CycVec(static_cast<std::size_t>(n), CycScalar::zero(f)); }

CycVec unit_vec(const FieldPtr& f, int n, int k) {
    CycVec v = zero_vec(f, n);
    v[static_cast<std::size_t>(k)] = CycScalar::one(f);
    return v;
}

CycVec vec_add(const CycVec& a, const CycVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
    CycVec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

CycVec vec_sub(const CycVec& a, const CycVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector difference length mismatch");
    CycVec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
    return out;
}

CycVec vec_scaled(const CycVec& a, const CycScalar& c) {
    CycVec out = a;
    for (auto& x : out) x = x * c;
    return out;
}

bool vec_is_zero(const CycVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::string vec_key(const CycVec& a) {
    std::ostringstream os;
    for (const auto& x : a) {
        for (const auto& c : x.coeffs()) os << c.str() << ',';
        os << ';';
    }
    return os.str();
}

}  // namespace twistedlab
