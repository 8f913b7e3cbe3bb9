#include "decmat/unipotent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace decmat {

std::vector<int> Symbol::entry_multiset() const {
    std::vector<int> all = top;
    all.insert(all.end(), bottom.begin(), bottom.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::string Symbol::to_string() const {
    auto row = [](const std::vector<int>& r) {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) os << " ";
            os << r[i];
        }
        os << ")";
        return os.str();
    };
    return row(top) + "/" + row(bottom);
}

Symbol UniLabel::symbol() const {
    const int la = static_cast<int>(alpha.size());
    const int lb = static_cast<int>(beta.size());
    const int a = std::max(la, lb + defect);
    const int b = a - defect;
    auto make_row = [](const Partition& p, int width) {
        std::vector<int> asc(p.rbegin(), p.rend());         // ascending parts
        asc.insert(asc.begin(), width - p.size(), 0);       // pad with zeros in front
        for (int i = 0; i < width; ++i) asc[i] += i;
        return asc;
    };
    return Symbol{make_row(alpha, a), make_row(beta, b)};
}

std::string UniLabel::name() const {
    return "[" + partition_name(alpha) + "," + partition_name(beta) + "," + std::to_string(defect) + "]";
}

std::string to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Principal: return "principal";
        case BlockKind::Cyclic: return "cyclic";
        case BlockKind::Defect0: return "defect0";
    }
    return "?";
}

namespace {

PolyQ half_q_times(const PolyQ& p) { return PolyQ::q() * p * frac(1, 2); }

}  // namespace

UniCharSet::UniCharSet(int m) : m_(m) {
    const PolyQ p1 = cyclotomic(1), p2 = cyclotomic(2), p3 = cyclotomic(3), p4 = cyclotomic(4),
                p6 = cyclotomic(6);
    auto L = [](Partition a, Partition b, int d) { return UniLabel{std::move(a), std::move(b), d}; };
    if (m == 2) {
        principal_count_ = 5;
        labels_ = {L({2}, {}, 1), L({}, {}, 3), L({1, 1}, {}, 1), L({}, {2}, 1), L({}, {1, 1}, 1),
                   L({1}, {1}, 1)};
        degrees_ = {PolyQ::one(),
                    half_q_times(p1 * p1),
                    half_q_times(p4),
                    half_q_times(p4),
                    PolyQ::q_power(4),
                    half_q_times(p2 * p2)};
        blocks_ = {BlockKind::Principal, BlockKind::Principal, BlockKind::Principal,
                   BlockKind::Principal, BlockKind::Principal, BlockKind::Defect0};
    } else if (m == 3) {
        principal_count_ = 10;
        labels_ = {L({3}, {}, 1),       L({2}, {1}, 1),  L({}, {3}, 1),    L({1}, {}, 3),
                   L({1}, {2}, 1),      L({1, 1}, {1}, 1), L({1}, {1, 1}, 1), L({1, 1, 1}, {}, 1),
                   L({}, {1}, 3),       L({}, {1, 1, 1}, 1), L({2, 1}, {}, 1), L({}, {2, 1}, 1)};
        degrees_ = {PolyQ::one(),
                    half_q_times(p3 * p4),
                    half_q_times(p4 * p6),
                    half_q_times(p1 * p1 * p3),
                    PolyQ::q_power(2) * p3 * p6,
                    PolyQ::q_power(3) * p3 * p6,
                    PolyQ::q_power(4) * p3 * p4 * frac(1, 2),
                    PolyQ::q_power(4) * p4 * p6 * frac(1, 2),
                    PolyQ::q_power(4) * p1 * p1 * p3 * frac(1, 2),
                    PolyQ::q_power(9),
                    half_q_times(p2 * p2 * p6),
                    PolyQ::q_power(4) * p2 * p2 * p6 * frac(1, 2)};
        blocks_.assign(12, BlockKind::Principal);
        blocks_[10] = BlockKind::Cyclic;
        blocks_[11] = BlockKind::Cyclic;
    } else {
        throw std::invalid_argument("UniCharSet: rank " + std::to_string(m) + " not supported (2 or 3)");
    }

    // consistency of the label/symbol correspondence
    for (const auto& l : labels_) {
        const Symbol s = l.symbol();
        if (s.defect() != l.defect)
            throw std::logic_error("UniCharSet: symbol defect mismatch for " + l.name());
    }

    // families: equal symbol entry multisets
    std::map<std::vector<int>, int> fam_index;
    family_of_.resize(labels_.size());
    for (size_t i = 0; i < labels_.size(); ++i) {
        const auto key = labels_[i].symbol().entry_multiset();
        auto it = fam_index.find(key);
        if (it == fam_index.end()) {
            it = fam_index.emplace(key, static_cast<int>(families_.size())).first;
            families_.emplace_back();
        }
        family_of_[i] = it->second;
        families_[it->second].push_back(static_cast<int>(i));
    }
    const size_t want_families = (m == 2) ? 3 : 6;
    if (families_.size() != want_families)
        throw std::logic_error("UniCharSet: unexpected family count");

    hc_.resize(labels_.size());
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].defect == 1)
            hc_[i] = HcSeries::PrincipalSeries;
        else
            hc_[i] = (m == 2) ? HcSeries::CuspidalUnipotent : HcSeries::B2Series;
    }
}

const UniCharSet& UniCharSet::enumerate(int m) {
    if (m != 2 && m != 3)
        throw std::invalid_argument("UniCharSet: rank " + std::to_string(m) + " not supported (2 or 3)");
    static UniCharSet s2(2);
    static UniCharSet s3(3);
    return m == 2 ? s2 : s3;
}

int UniCharSet::index_of(const UniLabel& l) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == l) return static_cast<int>(i);
    throw std::invalid_argument("UniCharSet: unknown label " + l.name());
}

int UniCharSet::index_by_name(const std::string& name) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i].name() == name) return static_cast<int>(i);
    throw std::invalid_argument("UniCharSet: unknown label name " + name);
}

}  // namespace decmat
