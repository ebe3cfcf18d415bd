#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace patav {

/// Univariate polynomial in u with exact rational coefficients. Stored
/// densely, lowest degree first, with no trailing zeros (the zero
/// polynomial has no coefficients).
class UPoly {
public:
    UPoly() = default;
    UPoly(int c);  // NOLINT(google-explicit-constructor): ring embedding
    UPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    UPoly(std::initializer_list<mpq_class> coeffs);
    explicit UPoly(std::vector<mpq_class> coeffs);

    static UPoly u() { return UPoly{0, 1}; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Zero beyond the degree.
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    UPoly& operator+=(const UPoly& rhs);
    UPoly& operator-=(const UPoly& rhs);
    UPoly& operator*=(const mpq_class& scalar);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(UPoly a) { return a *= mpq_class(-1); }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const mpq_class& s) { return a *= s; }
    friend UPoly operator*(UPoly a, int s) { return a *= mpq_class(s); }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Exact division by u. Throws InternalConsistencyError when the
    /// constant term is nonzero.
    UPoly divide_by_u() const;

    /// Substitutes u = value.
    mpq_class evaluate(const mpq_class& value) const;
    long double evaluate(long double value) const;

    /// "c0+c1*u+c2*u^2+...", dense; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

} // namespace patav
