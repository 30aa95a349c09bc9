#include "twistedlab/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace twistedlab {

namespace {

using Poly = std::vector<Rational>;  // coefficient vector, constant term first

int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

void poly_trim(Poly& p) { p.resize(static_cast<std::size_t>(poly_deg(p) + 1)); }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out = a;
    if (out.size() < b.size()) out.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    poly_trim(out);
    return out;
}

// Quotient and remainder of a by b (b != 0).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    int db = poly_deg(b);
    poly_trim(a);
    if (db < 0) throw DivisionByZero();
    Poly q(a.size() > static_cast<std::size_t>(db) ? a.size() - db : 1, Rational(0));
    Rational lead_inv = Rational(1) / b[static_cast<std::size_t>(db)];
    for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
        Rational c = a[static_cast<std::size_t>(da)] * lead_inv;
        q[static_cast<std::size_t>(da - db)] = c;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(da)] = Rational(0);  // force exact cancellation of the lead
        poly_trim(a);
    }
    poly_trim(q);
    return {q, a};
}

// Phi_m by the standard recursion x^m - 1 = prod_{d | m} Phi_d.
const Poly& cyclotomic_poly(int m) {
    static std::map<int, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::function<const Poly&(int)> compute = [&](int n) -> const Poly& {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        Poly num(static_cast<std::size_t>(n) + 1, Rational(0));
        num[0] = Rational(-1);
        num[static_cast<std::size_t>(n)] = Rational(1);
        Poly den{Rational(1)};
        for (int d = 1; d < n; ++d)
            if (n % d == 0) den = poly_mul(den, compute(d));
        auto [q, r] = poly_divmod(num, den);
        if (poly_deg(r) >= 0) throw Error("internal: cyclotomic division not exact");
        return cache.emplace(n, std::move(q)).first->second;
    };
    return compute(m);
}

int euler_phi_of_deg(const Poly& phi) { return poly_deg(phi); }

}  // namespace

CycField::CycField(int conductor) : conductor_(conductor) {
    if (conductor < 1) throw Error("conductor must be >= 1");
    modulus_ = cyclotomic_poly(conductor);
    degree_ = euler_phi_of_deg(modulus_);

    // powers_[k] = coordinates of zeta^k, built by shift-and-reduce; the
    // table reaches far enough for products (2*deg - 2) and conjugation (m - 1).
    int reach = std::max(conductor_, 2 * degree_ - 1);
    powers_.reserve(static_cast<std::size_t>(reach));
    std::vector<Rational> cur(static_cast<std::size_t>(degree_), Rational(0));
    cur[0] = Rational(1);
    powers_.push_back(cur);
    for (int k = 1; k < reach; ++k) {
        // multiply by zeta: shift up, then fold the overflow back with
        // zeta^deg = -(Phi - x^deg)
        Rational overflow = cur[static_cast<std::size_t>(degree_ - 1)];
        for (int i = degree_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = Rational(0);
        if (!overflow.is_zero())
            for (int i = 0; i < degree_; ++i)
                cur[static_cast<std::size_t>(i)] -= overflow * modulus_[static_cast<std::size_t>(i)];
        powers_.push_back(cur);
    }
}

FieldPtr CycField::get(int conductor) {
    static std::map<int, FieldPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    FieldPtr f(new CycField(conductor));
    cache.emplace(conductor, f);
    return f;
}

const std::vector<Rational>& CycField::zeta_power(int k) const {
    k %= conductor_;
    if (k < 0) k += conductor_;
    if (k < static_cast<int>(powers_.size())) return powers_[static_cast<std::size_t>(k)];
    throw Error("internal: zeta power out of table range");
}

CycScalar::CycScalar() : field_(CycField::get(1)), coeffs_{Rational(0)} {}

CycScalar CycScalar::zero(const FieldPtr& f) {
    return CycScalar(f, std::vector<Rational>(static_cast<std::size_t>(f->degree()), Rational(0)));
}

CycScalar CycScalar::one(const FieldPtr& f) { return from_rational(f, Rational(1)); }

CycScalar CycScalar::from_rational(const FieldPtr& f, const Rational& r) {
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()), Rational(0));
    c[0] = r;
    return CycScalar(f, std::move(c));
}

CycScalar CycScalar::from_coeffs(const FieldPtr& f, std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != f->degree())
        throw DimensionMismatch("coefficient vector length must equal phi(m)");
    return CycScalar(f, std::move(coeffs));
}

CycScalar CycScalar::root(int m) { return root_power(CycField::get(m), 1); }

CycScalar CycScalar::root_power(const FieldPtr& f, long k) {
    long m = f->conductor();
    long r = k % m;
    if (r < 0) r += m;
    return CycScalar(f, f->zeta_power(static_cast<int>(r)));
}

int CycScalar::conductor() const { return field_->conductor(); }

void CycScalar::check_same_field(const CycScalar& o) const {
    if (field_->conductor() != o.field_->conductor())
        throw ConductorMismatch(field_->conductor(), o.field_->conductor());
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
    check_same_field(o);
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return CycScalar(field_, std::move(c));
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    check_same_field(o);
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return CycScalar(field_, std::move(c));
}

CycScalar CycScalar::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return CycScalar(field_, std::move(c));
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    check_same_field(o);
    int deg = field_->degree();
    // full product, then fold powers >= deg through the reduction table
    std::vector<Rational> conv(static_cast<std::size_t>(2 * deg - 1), Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < deg; ++j) {
            if (o.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
            conv[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<Rational> out(static_cast<std::size_t>(deg), Rational(0));
    for (int k = 0; k < deg; ++k) out[static_cast<std::size_t>(k)] = conv[static_cast<std::size_t>(k)];
    for (int k = deg; k < 2 * deg - 1; ++k) {
        const Rational& c = conv[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const auto& zp = field_->zeta_power(k);
        for (int i = 0; i < deg; ++i) out[static_cast<std::size_t>(i)] += c * zp[static_cast<std::size_t>(i)];
    }
    return CycScalar(field_, std::move(out));
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    int deg = field_->degree();
    if (deg == 1) return from_rational(field_, Rational(1) / coeffs_[0]);

    // extended Euclid in Q[x]: s*a + t*Phi = gcd = nonzero constant
    Poly r0 = field_->modulus();
    Poly r1 = coeffs_;
    poly_trim(r1);
    Poly s0{}, s1{Rational(1)};
    while (poly_deg(r1) > 0) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly_deg(r1) != 0) throw Error("internal: gcd with irreducible Phi_m is not constant");
    Rational c_inv = Rational(1) / r1[0];
    std::vector<Rational> out(static_cast<std::size_t>(deg), Rational(0));
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] * c_inv;  // deg(s1) < deg(Phi)
    return CycScalar(field_, std::move(out));
}

CycScalar CycScalar::conj() const {
    int m = field_->conductor();
    int deg = field_->degree();
    if (m <= 2) return *this;  // real fields are fixed
    std::vector<Rational> out(static_cast<std::size_t>(deg), Rational(0));
    for (int i = 0; i < deg; ++i) {
        const Rational& a = coeffs_[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        const auto& zp = field_->zeta_power(i == 0 ? 0 : m - i);  // zeta^i -> zeta^{-i}
        for (int j = 0; j < deg; ++j) out[static_cast<std::size_t>(j)] += a * zp[static_cast<std::size_t>(j)];
    }
    return CycScalar(field_, std::move(out));
}

CycScalar CycScalar::pow(std::uint64_t e) const {
    CycScalar acc = one(field_);
    CycScalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> CycScalar::embed() const {
    // accumulate in extended precision; coefficient heights at desk scale
    // stay below 2^53 so the num/den conversions are exact
    int m = field_->conductor();
    long double re = 0.0L, im = 0.0L;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        long double a = coeffs_[i].to_long_double();
        long double theta =
            2.0L * 3.14159265358979323846264338327950288L * static_cast<long double>(i) / static_cast<long double>(m);
        re += a * std::cos(theta);
        im += a * std::sin(theta);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

bool CycScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycScalar::is_one() const {
    if (!coeffs_[0].is_zero() && coeffs_[0] == Rational(1)) {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }
    return false;
}

bool CycScalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycScalar::rational_part() const {
    if (!is_rational()) throw Error("scalar is not rational: " + str());
    return coeffs_[0];
}

bool CycScalar::operator==(const CycScalar& o) const {
    check_same_field(o);
    return coeffs_ == o.coeffs_;
}

int CycScalar::cmp(const CycScalar& o) const {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int c = coeffs_[i].cmp(o.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string c = coeffs_[i].str();
        if (!first && c[0] != '-') os << '+';
        if (i == 0) {
            os << c;
        } else {
            if (c == "1")
                ;
            else if (c == "-1")
                os << '-';
            else
                os << c << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace twistedlab
