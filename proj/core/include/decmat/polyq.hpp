#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "decmat/rational.hpp"

namespace decmat {

/// Univariate polynomial in q with exact rational coefficients, stored as a
/// dense coefficient vector without trailing zeros.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(Rational constant);
    PolyQ(std::initializer_list<Rational> coeffs);
    static PolyQ from_coeffs(std::vector<Rational> coeffs);

    /// The monomial q^k.
    static PolyQ q_power(int k);
    static PolyQ q() { return q_power(1); }
    static PolyQ one() { return PolyQ(Rational(1)); }
    static PolyQ zero() { return PolyQ(); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator-() const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rational& s) const;
    PolyQ& operator+=(const PolyQ& o) { return *this = *this + o; }
    PolyQ& operator-=(const PolyQ& o) { return *this = *this - o; }
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

    bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PolyQ& o) const { return coeffs_ != o.coeffs_; }

    Rational eval_at(const Rational& q0) const;

    /// Exact division; returns nothing if the remainder is nonzero.
    std::optional<PolyQ> divide_exact(const PolyQ& divisor) const;

    /// Expanded form, e.g. "1/2q^3 - q + 1".
    std::string to_string() const;

    /// Factored form over {q, phi1, phi2, phi3, phi4, phi6}, e.g. "1/2 q phi4".
    /// Falls back to the expanded form when the polynomial does not factor
    /// over that list.
    std::string to_factored_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

PolyQ operator*(const Rational& s, const PolyQ& p);

/// The cyclotomic-style abbreviations phi1 = q-1, phi2 = q+1, phi3 = q^2+q+1,
/// phi4 = q^2+1, phi6 = q^2-q+1. Any other index is an error.
PolyQ cyclotomic(int index);

/// Case split on the power of ell dividing q+1. The exceptional multiplicity
/// m_exp = ((q+1)_ell - 1)/2 equals 1, 2, or stays a free symbol m with the
/// side condition m >= 3.
enum class EllCase { Case3, Case5, Large };

std::string to_string(EllCase c);
std::optional<EllCase> parse_ell_case(const std::string& s);

/// m_exp as a concrete value, or nothing in the symbolic Large case.
std::optional<long> m_exp_value(EllCase c);

}  // namespace decmat
