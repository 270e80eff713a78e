#pragma once

#include "qsymp/symplectic.hpp"

namespace qsymp {

/// Berezinian of a degree-preserving invertible map: det of the even-parity
/// block divided by det of the odd-parity block.
inline Rational berezinian(const Matrix& a, const GradedSpace& space)
{
    const std::size_t n = space.dim();
    if (a.rows() != n || a.cols() != n)
        throw NotInvertible();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != 0 && space.degree(i) != space.degree(j))
                throw NotInvertible();
    std::vector<std::size_t> even, odd;
    for (std::size_t i = 0; i < n; ++i)
        (space.parity(i) == 0 ? even : odd).push_back(i);
    Matrix ae(even.size(), even.size()), ao(odd.size(), odd.size());
    for (std::size_t i = 0; i < even.size(); ++i)
        for (std::size_t j = 0; j < even.size(); ++j)
            ae(i, j) = a(even[i], even[j]);
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = 0; j < odd.size(); ++j)
            ao(i, j) = a(odd[i], odd[j]);
    const Rational de = ae.determinant();
    const Rational dodd = ao.determinant();
    if (de == 0 || dodd == 0)
        throw NotInvertible();
    return de / dodd;
}

/// q * sqrt(r) * (2 pi)^{a/2} * hbar^{b/2} with r a positive squarefree
/// integer. Multiplication folds square factors of r into q.
class Prefactor {
public:
    Prefactor() : q_(1), sqrt_(1), two_pi_half_(0), hbar_half_(0) {}
    explicit Prefactor(Rational q) : q_(std::move(q)), sqrt_(1), two_pi_half_(0), hbar_half_(0) {}
    Prefactor(Rational q, Integer sqrt_part, int two_pi_half, int hbar_half)
        : q_(std::move(q)), sqrt_(std::move(sqrt_part)), two_pi_half_(two_pi_half),
          hbar_half_(hbar_half)
    {
        if (sqrt_ <= 0)
            throw DomainError("sqrt part must be positive");
        normalize();
    }

    /// The positive square root of |r| for rational r, as a prefactor.
    static Prefactor sqrt_of(const Rational& r)
    {
        if (r == 0)
            return zero();
        const Rational ar = r < 0 ? Rational(-r) : r;
        const Integer num = boost::multiprecision::numerator(ar);
        const Integer den = boost::multiprecision::denominator(ar);
        // sqrt(n/d) = sqrt(n d) / d
        Prefactor p(Rational(1) / Rational(den), num * den, 0, 0);
        return p;
    }

    static Prefactor zero() { return Prefactor(Rational(0)); }

    const Rational& q() const { return q_; }
    const Integer& sqrt_part() const { return sqrt_; }
    int two_pi_half_exponent() const { return two_pi_half_; }
    int hbar_half_exponent() const { return hbar_half_; }
    bool is_zero() const { return q_ == 0; }

    Prefactor operator*(const Prefactor& o) const
    {
        Prefactor r;
        r.q_ = q_ * o.q_;
        r.sqrt_ = sqrt_ * o.sqrt_;
        r.two_pi_half_ = two_pi_half_ + o.two_pi_half_;
        r.hbar_half_ = hbar_half_ + o.hbar_half_;
        r.normalize();
        return r;
    }

    Prefactor operator*(const Rational& c) const
    {
        Prefactor r = *this;
        r.q_ *= c;
        r.normalize();
        return r;
    }

    Prefactor operator/(const Prefactor& o) const
    {
        if (o.is_zero())
            throw DomainError("division by zero prefactor");
        Prefactor r;
        r.q_ = q_ / (o.q_ * Rational(o.sqrt_));
        r.sqrt_ = sqrt_ * o.sqrt_;
        r.two_pi_half_ = two_pi_half_ - o.two_pi_half_;
        r.hbar_half_ = hbar_half_ - o.hbar_half_;
        r.normalize();
        return r;
    }

    bool operator==(const Prefactor& o) const
    {
        return q_ == o.q_ && sqrt_ == o.sqrt_ && two_pi_half_ == o.two_pi_half_ &&
               hbar_half_ == o.hbar_half_;
    }
    bool operator!=(const Prefactor& o) const { return !(*this == o); }

private:
    void normalize()
    {
        if (q_ == 0) {
            sqrt_ = 1;
            two_pi_half_ = 0;
            hbar_half_ = 0;
            return;
        }
        // pull square factors out of sqrt_
        Integer s = 1, m = sqrt_;
        for (Integer p = 2; p * p <= m; ++p) {
            while (m % (p * p) == 0) {
                m /= p * p;
                s *= p;
            }
        }
        sqrt_ = m;
        q_ *= Rational(s);
    }

    Rational q_;
    Integer sqrt_;
    int two_pi_half_;
    int hbar_half_;
};

/// Weight-1/2 linear density held against the canonical ordered basis of its
/// space: the value on any other homogeneous basis e.A is
/// coefficient * |Ber A|^{1/2}.
struct LinHalfDensity {
    GradedSpace space;
    Prefactor coefficient;

    LinHalfDensity() = default;
    LinHalfDensity(GradedSpace s, Prefactor c) : space(std::move(s)), coefficient(std::move(c)) {}

    static LinHalfDensity standard(GradedSpace s)
    {
        return LinHalfDensity(std::move(s), Prefactor());
    }
};

/// Value of the density on the given basis (columns expressed in the
/// reference basis). Throws NotABasis unless the columns form a homogeneous
/// basis of the space.
inline Prefactor evaluate(const LinHalfDensity& rho, const Matrix& basis)
{
    if (basis.rows() != rho.space.dim() || basis.cols() != rho.space.dim())
        throw NotABasis();
    for (std::size_t j = 0; j < basis.cols(); ++j)
        try {
            homogeneous_degree(rho.space, basis.column(j));
        } catch (const NotHomogeneous&) {
            throw NotABasis();
        }
    Rational ber;
    try {
        ber = berezinian(basis, rho.space);
    } catch (const NotInvertible&) {
        throw NotABasis();
    }
    return rho.coefficient * Prefactor::sqrt_of(abs(ber));
}

/// Density transformation law for general weight alpha = p/2 (half-integer),
/// used in tests of the transformation law beyond alpha = 1/2.
inline Prefactor evaluate_weight(const LinHalfDensity& rho, const Matrix& basis,
                                 int twice_alpha)
{
    if (basis.rows() != rho.space.dim() || basis.cols() != rho.space.dim())
        throw NotABasis();
    Rational ber;
    try {
        ber = berezinian(basis, rho.space);
    } catch (const NotInvertible&) {
        throw NotABasis();
    }
    Prefactor factor(Rational(1));
    const Rational a_ber = abs(ber);
    const int whole = twice_alpha / 2;
    for (int i = 0; i < std::abs(whole); ++i)
        factor = factor * (whole > 0 ? Prefactor(a_ber)
                                     : Prefactor(Rational(1) / a_ber));
    if (twice_alpha % 2 != 0) {
        const Prefactor root = Prefactor::sqrt_of(a_ber);
        factor = twice_alpha > 0 ? factor * root : factor / root;
    }
    return rho.coefficient * factor;
}

struct SplitDensity {
    LinHalfDensity on_first;
    LinHalfDensity on_second;
};

/// Split a half-density on V along a decomposition V = A (+) B. The value is
/// carried on A against A's canonical basis; the B-factor is normalized to 1.
inline SplitDensity split_density(const LinHalfDensity& rho, const Subspace& a,
                                  const Subspace& b)
{
    if (a.ambient() != rho.space || b.ambient() != rho.space)
        throw NotComplementary();
    if (a.dim() + b.dim() != rho.space.dim())
        throw NotComplementary();
    const Matrix joint = a.basis().hcat(b.basis());
    Prefactor value;
    try {
        value = evaluate(rho, joint);
    } catch (const NotABasis&) {
        throw NotComplementary();
    }
    SplitDensity s;
    s.on_first = LinHalfDensity(a.as_space(), value);
    s.on_second = LinHalfDensity(b.as_space(), Prefactor());
    return s;
}

/// Inverse of split_density: rebuild the half-density on V whose value on the
/// concatenated basis [A | B] is the product of the two coefficients.
inline LinHalfDensity fuse_density(const SplitDensity& s, const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw NotComplementary();
    const GradedSpace& v = a.ambient();
    const Matrix joint = a.basis().hcat(b.basis());
    if (joint.rows() != v.dim() || joint.cols() != v.dim())
        throw NotComplementary();
    Rational ber;
    try {
        ber = berezinian(joint, v);
    } catch (const NotInvertible&) {
        throw NotComplementary();
    }
    // rho(e_V) = rho(joint) * |Ber joint|^{-1/2}
    const Prefactor inv_root =
        Prefactor(Rational(1) / abs(ber)) * Prefactor::sqrt_of(abs(ber));
    const Prefactor coeff = s.on_first.coefficient * s.on_second.coefficient * inv_root;
    return LinHalfDensity(v, coeff);
}

} // namespace qsymp
