#include "decmat/lusztig.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace decmat {

VirtualUniChar VirtualUniChar::zero(int rank) {
    return VirtualUniChar{rank, std::vector<Rational>(UniCharSet::enumerate(rank).size(), Rational(0))};
}

VirtualUniChar VirtualUniChar::unit(int rank, const UniLabel& l) {
    VirtualUniChar v = zero(rank);
    v.coeff[UniCharSet::enumerate(rank).index_of(l)] = 1;
    return v;
}

Rational VirtualUniChar::inner(const VirtualUniChar& o) const {
    if (rank != o.rank) throw std::invalid_argument("VirtualUniChar::inner: rank mismatch");
    Rational s(0);
    for (size_t i = 0; i < coeff.size(); ++i) s += coeff[i] * o.coeff[i];
    return s;
}

PolyQ VirtualUniChar::degree() const {
    const auto& set = UniCharSet::enumerate(rank);
    PolyQ d;
    for (size_t i = 0; i < coeff.size(); ++i)
        if (coeff[i] != 0) d += set.degree(static_cast<int>(i)) * coeff[i];
    return d;
}

VirtualUniChar& VirtualUniChar::add_scaled(const VirtualUniChar& o, const Rational& s) {
    for (size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i] * s;
    return *this;
}

bool VirtualUniChar::is_integral() const {
    return std::all_of(coeff.begin(), coeff.end(), [](const Rational& c) { return is_integer(c); });
}

std::string VirtualUniChar::to_string() const {
    const auto& set = UniCharSet::enumerate(rank);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff.size(); ++i) {
        Rational c = coeff[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1) os << decmat::to_string(c) << "*";
        os << set.label(static_cast<int>(i)).name();
    }
    if (first) return "0";
    return os.str();
}

LusztigContext::LusztigContext(int rank)
    : weyl_(&WeylGroup::get(rank)), chars_(&UniCharSet::enumerate(rank)) {
    build_fourier();
    dl_by_class_.reserve(weyl_->classes().size());
    for (size_t c = 0; c < weyl_->classes().size(); ++c) {
        VirtualUniChar v = VirtualUniChar::zero(rank);
        for (const auto& b : weyl_->bipartition_labels()) {
            const Rational val = weyl_->character_table()[weyl_->bipartition_index(b)][c];
            if (val != 0) v.add_scaled(almost_character(b), val);
        }
        dl_by_class_.push_back(std::move(v));
    }

    // normalization certificate: R_1 carries deg(phi) at [alpha,beta,1], 0 elsewhere
    const VirtualUniChar& r1 = dl_by_class_[weyl_->class_of(SignedPerm::identity(rank))];
    for (int i = 0; i < chars_->size(); ++i) {
        const UniLabel& l = chars_->label(i);
        const Rational want = l.defect == 1
                                  ? Rational(weyl_->character_degree({l.alpha, l.beta}))
                                  : Rational(0);
        if (r1.coeff[i] != want)
            throw std::logic_error("LusztigContext: Fourier normalization is inconsistent at " + l.name());
    }
}

const LusztigContext& LusztigContext::get(int rank) {
    if (rank != 2 && rank != 3)
        throw std::invalid_argument("LusztigContext: rank " + std::to_string(rank) + " not supported");
    static LusztigContext c2(2);
    static LusztigContext c3(3);
    return rank == 2 ? c2 : c3;
}

void LusztigContext::build_fourier() {
    const int rank = chars_->rank();
    fourier_.clear();
    for (size_t f = 0; f < chars_->families().size(); ++f) {
        const auto& members = chars_->families()[f];
        FourierBlock blk;
        blk.family_id = static_cast<int>(f);
        if (members.size() == 1) {
            blk.member_labels = members;
            blk.matrix = {{Rational(1)}};
        } else if (members.size() == 4) {
            // head slot: the series member whose W-degree is the sum of the
            // other series members' degrees
            std::vector<int> series, rest;
            for (int i : members)
                (chars_->label(i).defect == 1 ? series : rest).push_back(i);
            if (series.size() != 3 || rest.size() != 1)
                throw std::logic_error("LusztigContext: unexpected family shape");
            int head = -1;
            for (int i : series) {
                long others = 0;
                for (int j : series)
                    if (j != i)
                        others += weyl_->character_degree(
                            {chars_->label(j).alpha, chars_->label(j).beta});
                if (weyl_->character_degree({chars_->label(i).alpha, chars_->label(i).beta}) == others) {
                    if (head >= 0) throw std::logic_error("LusztigContext: ambiguous family head");
                    head = i;
                }
            }
            if (head < 0) throw std::logic_error("LusztigContext: no consistent family head");
            blk.member_labels = {head};
            for (int i : members)
                if (i != head) blk.member_labels.push_back(i);
            const Rational h = frac(1, 2);
            blk.matrix.assign(4, std::vector<Rational>(4, -h));
            for (int i = 0; i < 4; ++i) blk.matrix[i][i] = h;
            for (int i = 0; i < 4; ++i) blk.matrix[0][i] = blk.matrix[i][0] = h;
        } else {
            throw std::logic_error("LusztigContext: unexpected family size");
        }
        // involution check
        const size_t n = blk.matrix.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rational s(0);
                for (size_t k = 0; k < n; ++k) s += blk.matrix[i][k] * blk.matrix[k][j];
                if (s != (i == j ? Rational(1) : Rational(0)) || blk.matrix[i][j] != blk.matrix[j][i])
                    throw std::logic_error("LusztigContext: Fourier block is not a symmetric involution");
            }
        fourier_.push_back(std::move(blk));
    }

    almost_.clear();
    for (const auto& b : weyl_->bipartition_labels()) {
        const UniLabel series_label{b.first, b.second, 1};
        const int li = chars_->index_of(series_label);
        const FourierBlock& blk = fourier_[chars_->family_of(li)];
        const auto slot = std::find(blk.member_labels.begin(), blk.member_labels.end(), li);
        const size_t col = static_cast<size_t>(slot - blk.member_labels.begin());
        VirtualUniChar v = VirtualUniChar::zero(rank);
        for (size_t row = 0; row < blk.member_labels.size(); ++row)
            v.coeff[blk.member_labels[row]] = blk.matrix[row][col];
        almost_.push_back(std::move(v));
    }
}

const VirtualUniChar& LusztigContext::almost_character(const Bipartition& b) const {
    return almost_[weyl_->bipartition_index(b)];
}

VirtualUniChar LusztigContext::dl_character(const SignedPerm& w) const {
    return dl_by_class_[weyl_->class_of(w)];
}

VirtualUniChar LusztigContext::dl_character(const std::vector<int>& word) const {
    return dl_character(weyl_->word_element(word));
}

VirtualUniChar LusztigContext::dl_character_of_class(int class_id) const {
    return dl_by_class_.at(class_id);
}

PolyQ LusztigContext::group_order_prime_part() const {
    PolyQ p = PolyQ::one();
    for (int k = 1; k <= chars_->rank(); ++k) p *= PolyQ::q_power(2 * k) - PolyQ::one();
    return p;
}

int LusztigContext::degree_identity_sign(const SignedPerm& w) const {
    const int diff = chars_->rank() - weyl_->fixed_space_dim(w);
    return diff % 2 ? -1 : 1;
}

std::vector<Relation> LusztigContext::relation_vectors(EllCase c) const {
    struct Def {
        const char* name;
        bool needs5;   // only once (q+1)_ell > 3
        bool needs7;   // only once (q+1)_ell > 5
        std::vector<std::pair<Rational, std::vector<int>>> combo;
    };
    const int rank = chars_->rank();
    std::vector<Def> defs;
    if (rank == 2) {
        const std::vector<int> w212 = {2, 1, 2};
        auto ext = [&](std::vector<int> extra) {
            std::vector<int> w = w212;
            w.insert(w.end(), extra.begin(), extra.end());
            return w;
        };
        defs = {
            {"chi1", false, false, {{frac(-1, 2), w212}, {frac(-1, 2), ext({1})}}},
            {"chi2", false, false, {{frac(-1, 2), w212}, {frac(1, 2), ext({1})}}},
            {"chi3", true, false, {{Rational(1), {1, 2, 1, 2}}}},
        };
    } else {
        const std::vector<int> w9 = {1, 2, 1, 3, 2, 1};
        const std::vector<int> w13 = {2, 1, 3, 2, 1, 3, 2};
        const std::vector<int> w23 = {2, 1, 3, 2, 1, 3, 2, 3};
        const std::vector<int> w32 = {1, 2, 1, 2, 3, 2, 1, 2, 3};  // reduced word for the longest element
        auto ext = [](std::vector<int> base, std::vector<int> extra) {
            base.insert(base.end(), extra.begin(), extra.end());
            return base;
        };
        defs = {
            {"chi9_1", false, false,
             {{frac(1, 6), ext(w9, {2, 3, 2})}, {frac(3, 6), w9}, {frac(2, 6), ext(w9, {2})}}},
            {"chi9_2", false, false, {{frac(2, 6), ext(w9, {2, 3, 2})}, {frac(-2, 6), ext(w9, {2})}}},
            {"chi9_3", false, false,
             {{frac(-1, 6), ext(w9, {2, 3, 2})}, {frac(3, 6), w9}, {frac(-2, 6), ext(w9, {2})}}},
            {"chi13_1", false, false,
             {{frac(-1, 4), w13}, {frac(-1, 4), ext(w13, {1})}, {frac(-1, 4), ext(w13, {3})},
              {frac(-1, 4), ext(w13, {1, 3})}}},
            {"chi13_2", false, false,
             {{frac(-1, 4), w13}, {frac(-1, 4), ext(w13, {1})}, {frac(1, 4), ext(w13, {3})},
              {frac(1, 4), ext(w13, {1, 3})}}},
            {"chi13_3", false, false,
             {{frac(-1, 4), w13}, {frac(1, 4), ext(w13, {1})}, {frac(-1, 4), ext(w13, {3})},
              {frac(1, 4), ext(w13, {1, 3})}}},
            {"chi13_4", false, false,
             {{frac(-1, 4), w13}, {frac(1, 4), ext(w13, {1})}, {frac(1, 4), ext(w13, {3})},
              {frac(-1, 4), ext(w13, {1, 3})}}},
            {"chi23_1", true, false, {{frac(1, 2), w23}, {frac(1, 2), ext(w23, {1})}}},
            {"chi23_2", true, false, {{frac(1, 2), w23}, {frac(-1, 2), ext(w23, {1})}}},
            {"chi32", false, true, {{Rational(-1), w32}}},
        };
    }
    std::vector<Relation> out;
    for (const auto& d : defs) {
        if (d.needs5 && c == EllCase::Case3) continue;
        if (d.needs7 && c != EllCase::Large) continue;
        VirtualUniChar v = VirtualUniChar::zero(rank);
        for (const auto& [coeff, word] : d.combo) v.add_scaled(dl_character(word), coeff);
        if (!v.is_integral())
            throw std::logic_error(std::string("relation_vectors: non-integral result for ") + d.name +
                                   " (labeling or Fourier convention is broken)");
        out.push_back(Relation{d.name, std::move(v)});
    }
    return out;
}

Affine LusztigContext::brauer_pairing(const VirtualUniChar& r, const std::vector<Affine>& phi) const {
    if (r.rank != chars_->rank())
        throw std::invalid_argument("brauer_pairing: rank mismatch");
    Affine s;
    for (size_t i = 0; i < phi.size() && i < r.coeff.size(); ++i)
        if (r.coeff[i] != 0) s += phi[i] * r.coeff[i];
    return s;
}

PairingScan LusztigContext::minimal_nonvanishing(const std::vector<Affine>& phi) const {
    PairingScan scan;
    const auto& classes = weyl_->classes();
    std::vector<Affine> expr(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
        expr[c] = brauer_pairing(dl_by_class_[c], phi);
    for (size_t c = 0; c < classes.size(); ++c) {
        if (expr[c].is_zero()) continue;
        if (!scan.found() || classes[c].min_length < scan.length) {
            scan.class_id = static_cast<int>(c);
            scan.length = classes[c].min_length;
            scan.expression = expr[c];
        }
    }
    if (!scan.found()) return scan;
    for (size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].min_length < scan.length)
            scan.vanishing_shorter_classes.push_back(static_cast<int>(c));
        else if (classes[c].min_length == scan.length && !expr[c].is_zero())
            scan.at_min_length.emplace_back(static_cast<int>(c), expr[c]);
    }
    return scan;
}

}  // namespace decmat
