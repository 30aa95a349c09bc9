#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "twistedlab/rational.hpp"

namespace twistedlab {

class CycField;
using FieldPtr = std::shared_ptr<const CycField>;

/// Shared context for the cyclotomic field Q(zeta_m): the cyclotomic
/// polynomial Phi_m, its degree phi(m), and a table of reduced powers of
/// zeta. One instance per conductor, cached process-wide.
class CycField {
public:
    /// Returns the (cached) field context for conductor m >= 1.
    static FieldPtr get(int conductor);

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }  // phi(m)

    /// Coefficients of Phi_m, constant term first; monic of degree phi(m).
    const std::vector<Rational>& modulus() const { return modulus_; }

    /// Coordinates of zeta^k in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
    /// Valid for 0 <= k < max(m, 2*phi(m)-1); larger k reduce via k mod m.
    const std::vector<Rational>& zeta_power(int k) const;

private:
    explicit CycField(int conductor);

    int conductor_;
    int degree_;
    std::vector<Rational> modulus_;
    std::vector<std::vector<Rational>> powers_;
};

/// Element of Q(zeta_m), stored as phi(m) rational coordinates in the power
/// basis, always reduced modulo Phi_m. Immutable value type; all arithmetic
/// is exact. Elements of different conductors do not interoperate
/// (ConductorMismatch).
class CycScalar {
public:
    /// Zero of Q(zeta_1). Exists for container mechanics; any mixed-conductor
    /// arithmetic throws.
    CycScalar();

    static CycScalar zero(const FieldPtr& f);
    static CycScalar one(const FieldPtr& f);
    static CycScalar from_rational(const FieldPtr& f, const Rational& r);
    static CycScalar from_coeffs(const FieldPtr& f, std::vector<Rational> coeffs);

    /// zeta_m, a primitive m-th root of unity in its own field.
    static CycScalar root(int m);
    /// zeta_m^k inside an existing field (k may be any integer).
    static CycScalar root_power(const FieldPtr& f, long k);

    const FieldPtr& field() const { return field_; }
    int conductor() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);

    /// Exact field inverse via the extended Euclidean algorithm against
    /// Phi_m (irreducible over Q). Throws DivisionByZero on zero.
    CycScalar inverse() const;

    /// Complex conjugation: the automorphism zeta -> zeta^{m-1}.
    CycScalar conj() const;

    CycScalar pow(std::uint64_t e) const;

    /// Float evaluation at exp(2*pi*i/m). Diagnostics only; no exact
    /// decision depends on this.
    std::complex<double> embed() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_part() const;

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }
    /// Total order (lexicographic on coordinates); used for canonical sorting.
    int cmp(const CycScalar& o) const;

    /// Human-readable form, e.g. "1-1/2*z^3".
    std::string str() const;

private:
    CycScalar(FieldPtr f, std::vector<Rational> coeffs)
        : field_(std::move(f)), coeffs_(std::move(coeffs)) {}
    void check_same_field(const CycScalar& o) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

}  // namespace twistedlab
