#include "decmat/polyq.hpp"

#include <sstream>
#include <stdexcept>

namespace decmat {

PolyQ::PolyQ(Rational constant) {
    coeffs_.push_back(std::move(constant));
    trim();
}

PolyQ::PolyQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

PolyQ PolyQ::from_coeffs(std::vector<Rational> coeffs) {
    PolyQ p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

PolyQ PolyQ::q_power(int k) {
    PolyQ p;
    p.coeffs_.assign(k + 1, Rational(0));
    p.coeffs_[k] = 1;
    return p;
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return from_coeffs(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator-() const {
    std::vector<Rational> r = coeffs_;
    for (auto& c : r) c = -c;
    return from_coeffs(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(r));
}

PolyQ PolyQ::operator*(const Rational& s) const {
    std::vector<Rational> r = coeffs_;
    for (auto& c : r) c *= s;
    return from_coeffs(std::move(r));
}

PolyQ operator*(const Rational& s, const PolyQ& p) { return p * s; }

Rational PolyQ::eval_at(const Rational& q0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

std::optional<PolyQ> PolyQ::divide_exact(const PolyQ& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("PolyQ: division by zero polynomial");
    if (is_zero()) return PolyQ();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(degree() - divisor.degree() + 1, Rational(0));
    const Rational lead = divisor.coeffs_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rational c = rem[k + divisor.degree()] / lead;
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= divisor.degree(); ++j) rem[k + j] -= c * divisor.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return from_coeffs(std::move(quot));
}

std::string PolyQ::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        if (c != 1 || k == 0) os << decmat::to_string(c);
        if (k >= 1) {
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string PolyQ::to_factored_string() const {
    if (is_zero()) return "0";
    PolyQ rest = *this;
    int qpow = 0;
    while (rest.coeff(0) == 0) {
        rest = *rest.divide_exact(PolyQ::q());
        ++qpow;
    }
    struct Factor {
        int index;
        int mult = 0;
    };
    Factor factors[] = {{1}, {2}, {3}, {4}, {6}};
    for (auto& f : factors) {
        while (true) {
            auto d = rest.divide_exact(cyclotomic(f.index));
            if (!d) break;
            rest = *d;
            ++f.mult;
        }
    }
    if (rest.degree() > 0) return to_string();  // does not factor over the fixed list
    std::ostringstream os;
    const Rational unit = rest.coeff(0);
    bool wrote = false;
    if (unit == -1) {
        os << "-";
    } else if (unit != 1) {
        os << decmat::to_string(unit);
        wrote = true;
    }
    auto put = [&](const std::string& sym, int mult) {
        if (mult == 0) return;
        if (wrote) os << " ";
        os << sym;
        if (mult > 1) os << "^" << mult;
        wrote = true;
    };
    if (qpow > 0) put("q", qpow);
    for (const auto& f : factors) put("phi" + std::to_string(f.index), f.mult);
    if (!wrote) os << "1";
    return os.str();
}

PolyQ cyclotomic(int index) {
    switch (index) {
        case 1: return PolyQ{Rational(-1), Rational(1)};
        case 2: return PolyQ{Rational(1), Rational(1)};
        case 3: return PolyQ{Rational(1), Rational(1), Rational(1)};
        case 4: return PolyQ{Rational(1), Rational(0), Rational(1)};
        case 6: return PolyQ{Rational(1), Rational(-1), Rational(1)};
        default:
            throw std::invalid_argument("cyclotomic: unsupported index " + std::to_string(index) +
                                        " (expected one of 1,2,3,4,6)");
    }
}

std::string to_string(EllCase c) {
    switch (c) {
        case EllCase::Case3: return "3";
        case EllCase::Case5: return "5";
        case EllCase::Large: return "large";
    }
    return "?";
}

std::optional<EllCase> parse_ell_case(const std::string& s) {
    if (s == "3") return EllCase::Case3;
    if (s == "5") return EllCase::Case5;
    if (s == "large" || s == "Large" || s == "LARGE") return EllCase::Large;
    return std::nullopt;
}

std::optional<long> m_exp_value(EllCase c) {
    switch (c) {
        case EllCase::Case3: return 1;
        case EllCase::Case5: return 2;
        case EllCase::Large: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace decmat
