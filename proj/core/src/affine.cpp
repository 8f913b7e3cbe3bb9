#include "decmat/affine.hpp"

#include <sstream>
#include <stdexcept>

namespace decmat {

const char* unknown_name(Unknown u) {
    switch (u) {
        case Unknown::Alpha: return "a";
        case Unknown::Beta: return "b";
        case Unknown::Gamma: return "g";
        case Unknown::MExp: return "m";
    }
    return "?";
}

Affine Affine::unknown(Unknown u, Rational scale) {
    Affine a;
    a.coeff_[static_cast<int>(u)] = std::move(scale);
    return a;
}

bool Affine::is_constant() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

Affine Affine::operator+(const Affine& o) const {
    Affine r = *this;
    r.constant_ += o.constant_;
    for (int i = 0; i < kNumUnknowns; ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

Affine Affine::operator-(const Affine& o) const { return *this + (-o); }

Affine Affine::operator-() const {
    Affine r = *this;
    r.constant_ = -r.constant_;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Affine Affine::operator*(const Rational& s) const {
    Affine r = *this;
    r.constant_ *= s;
    for (auto& c : r.coeff_) c *= s;
    return r;
}

bool Affine::operator==(const Affine& o) const {
    return constant_ == o.constant_ && coeff_ == o.coeff_;
}

Affine Affine::substitute(Unknown u, const Affine& value) const {
    const Rational k = coeff(u);
    if (k == 0) return *this;
    Affine r = *this;
    r.coeff_[static_cast<int>(u)] = 0;
    return r + value * k;
}

std::optional<Rational> Affine::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return constant_;
}

Affine Affine::multiply(const Affine& a, const Affine& b) {
    if (a.is_constant()) return b * a.constant_;
    if (b.is_constant()) return a * b.constant_;
    throw std::logic_error("Affine::multiply: product of two non-constant expressions");
}

std::string Affine::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const char* sym) {
        if (c == 0) return;
        Rational v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? "-" : "+");
            if (v < 0) v = -v;
        }
        first = false;
        if (!sym) {
            os << decmat::to_string(v);
            return;
        }
        if (v != 1) os << decmat::to_string(v);
        os << sym;
    };
    for (int i = 0; i < kNumUnknowns; ++i) emit(coeff_[i], unknown_name(static_cast<Unknown>(i)));
    emit(constant_, nullptr);
    if (first) return "0";
    return os.str();
}

Affine m_exp_affine(EllCase c) {
    if (auto v = m_exp_value(c)) return Affine(*v);
    return Affine::unknown(Unknown::MExp);
}

bool affine_leq(const Affine& a, const Affine& b, long m_min) {
    const Affine d = b - a;
    for (Unknown u : {Unknown::Alpha, Unknown::Beta, Unknown::Gamma})
        if (d.coeff(u) != 0) throw std::logic_error("affine_leq: comparison involves " + std::string(unknown_name(u)));
    const Rational k = d.coeff(Unknown::MExp);
    if (k < 0) return false;  // fails for large m
    return d.constant() + k * m_min >= 0;
}

}  // namespace decmat
