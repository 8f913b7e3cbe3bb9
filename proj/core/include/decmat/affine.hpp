#pragma once

#include <array>
#include <optional>
#include <string>

#include "decmat/polyq.hpp"
#include "decmat/rational.hpp"

namespace decmat {

/// The named unknowns appearing in decomposition-matrix entries and bounds.
/// MExp is the exceptional multiplicity ((q+1)_ell - 1)/2, written "m".
enum class Unknown { Alpha = 0, Beta = 1, Gamma = 2, MExp = 3 };

inline constexpr int kNumUnknowns = 4;

const char* unknown_name(Unknown u);

/// constant + sum of rational multiples of the unknowns.
class Affine {
public:
    Affine() : constant_(0) { coeff_.fill(Rational(0)); }
    explicit Affine(Rational c) : constant_(std::move(c)) { coeff_.fill(Rational(0)); }
    explicit Affine(long c) : Affine(Rational(c)) {}
    static Affine unknown(Unknown u, Rational scale = Rational(1));

    const Rational& constant() const { return constant_; }
    const Rational& coeff(Unknown u) const { return coeff_[static_cast<int>(u)]; }
    bool is_constant() const;
    bool is_zero() const { return is_constant() && constant_ == 0; }

    Affine operator+(const Affine& o) const;
    Affine operator-(const Affine& o) const;
    Affine operator-() const;
    Affine operator*(const Rational& s) const;
    Affine& operator+=(const Affine& o) { return *this = *this + o; }
    Affine& operator-=(const Affine& o) { return *this = *this - o; }
    bool operator==(const Affine& o) const;
    bool operator!=(const Affine& o) const { return !(*this == o); }

    /// Replace one unknown by an affine value.
    Affine substitute(Unknown u, const Affine& value) const;

    /// Value when no unknowns occur.
    std::optional<Rational> constant_value() const;

    /// Canonical display with the unknowns in the fixed order a, b, g, m and
    /// the constant last, e.g. "2g-4".
    std::string to_string() const;

    /// Product, defined only when at least one factor is constant.
    static Affine multiply(const Affine& a, const Affine& b);

private:
    Rational constant_;
    std::array<Rational, kNumUnknowns> coeff_;
};

/// m_exp for the given case: 1, 2, or the symbol m.
Affine m_exp_affine(EllCase c);

/// a <= b for every admissible assignment. Unknowns other than m must not
/// occur; m ranges over integers >= m_min (the Large-case side condition).
bool affine_leq(const Affine& a, const Affine& b, long m_min = 3);

}  // namespace decmat
