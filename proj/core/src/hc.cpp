#include "decmat/hc.hpp"

#include "decmat/blocks.hpp"

#include <map>
#include <stdexcept>

namespace decmat {

std::string to_string(ModSeries s) {
    switch (s) {
        case ModSeries::PS: return "ps";
        case ModSeries::A1: return "A1";
        case ModSeries::A1Long: return "A1'";
        case ModSeries::A1xA1: return "A1xA1'";
        case ModSeries::B2Eta: return "[B2,eta]";
        case ModSeries::B2St: return "[B2,St]";
        case ModSeries::TildeA1: return "~A1";
        case ModSeries::Cuspidal: return "c";
    }
    return "?";
}

namespace {

/// Class function on W_J given by a bipartition character of the B-type
/// subgroup on positions 1..k (J = {1,...,k}).
Rational sub_character(const Bipartition& b, const SignedPerm& h, int k) {
    SignedPerm sub;
    sub.img.assign(h.img.begin(), h.img.begin() + k);
    for (int i = k; i < h.rank(); ++i)
        if (std::abs(h.img[i]) != i + 1)
            throw std::logic_error("sub_character: element moves a point outside the subgroup");
    return Rational(signed_character(b, sub));
}

VirtualUniChar from_decomposition(const WeylGroup& w, const ClassFunction& f) {
    const int rank = w.rank();
    VirtualUniChar v = VirtualUniChar::zero(rank);
    const auto& set = UniCharSet::enumerate(rank);
    for (const auto& [b, mult] : w.decompose(f))
        v.coeff[set.index_of(UniLabel{b.first, b.second, 1})] = mult;
    return v;
}

}  // namespace

VirtualUniChar hc_induce(int rank, const ParabolicSubset& J, const UniLabel& levi_label) {
    const WeylGroup& w = WeylGroup::get(rank);
    if (!J.valid_for_rank(rank))
        throw std::invalid_argument("hc_induce: parabolic subset " + J.to_string() +
                                    " invalid for rank " + std::to_string(rank));
    if (levi_label.defect == 3) {
        if (rank != 3 || !(levi_label == UniLabel{{}, {}, 3}))
            throw std::invalid_argument("hc_induce: unsupported cuspidal Levi label " +
                                        levi_label.name());
        VirtualUniChar v = VirtualUniChar::zero(3);
        const auto& set = UniCharSet::enumerate(3);
        v.coeff[set.index_of(UniLabel{{1}, {}, 3})] = 1;
        v.coeff[set.index_of(UniLabel{{}, {1}, 3})] = 1;
        return v;
    }
    // improper "induction" is the identity map on labels
    if (static_cast<int>(J.indices().size()) == rank) return VirtualUniChar::unit(rank, levi_label);

    const int k = static_cast<int>(J.indices().size());
    for (int i = 0; i < k; ++i)
        if (J.indices()[i] != i + 1)
            throw std::invalid_argument("hc_induce: expected a standard B-type subset {1..k}, got " +
                                        J.to_string());
    const Bipartition b{levi_label.alpha, levi_label.beta};
    const ClassFunction ind = w.induce_from_parabolic(
        J, [&](const SignedPerm& h) { return sub_character(b, h, k); });
    return from_decomposition(w, ind);
}

namespace {

ProjColumn make_column(const std::string& name, const UniCharSet& set,
                       const std::vector<Affine>& full, PsiSource src,
                       std::optional<ModSeries> series) {
    ProjColumn col;
    col.name = name;
    col.source = src;
    col.source_series = series;
    for (int i = 0; i < set.size(); ++i) {
        if (set.block(i) == BlockKind::Principal) {
            col.values.push_back(full[i]);
        } else if (!full[i].is_zero()) {
            const auto cv = full[i].constant_value();
            if (!cv) throw std::logic_error("psi_columns: symbolic coefficient outside the block");
            col.dropped.emplace_back(set.label(i).name(), *cv);
        }
    }
    col.diag_row = -1;
    for (size_t r = 0; r < col.values.size(); ++r) {
        if (col.values[r].is_zero()) continue;
        col.diag_row = static_cast<int>(r);
        if (col.values[r] != Affine(1))
            throw std::logic_error("psi_columns: column " + name + " is not unitriangular");
        break;
    }
    if (col.diag_row < 0) throw std::logic_error("psi_columns: empty column " + name);
    return col;
}

std::vector<Affine> to_affine(const VirtualUniChar& v) {
    std::vector<Affine> out;
    out.reserve(v.coeff.size());
    for (const auto& c : v.coeff) out.emplace_back(c);
    return out;
}

/// Harish-Chandra induction of a rank-2 projective's unipotent part along
/// the B2 Levi of the rank-3 group.
VirtualUniChar induce_levi_pim(const VirtualUniChar& pim) {
    const auto& set2 = UniCharSet::enumerate(2);
    VirtualUniChar out = VirtualUniChar::zero(3);
    for (int i = 0; i < set2.size(); ++i)
        if (pim.coeff[i] != 0)
            out.add_scaled(hc_induce(3, ParabolicSubset{1, 2}, set2.label(i)), pim.coeff[i]);
    return out;
}

/// Induction of the sign character of W_J, the Weyl-level shadow of the
/// modular Steinberg PIM of an A1-type Levi.
VirtualUniChar induce_sign(int rank, const ParabolicSubset& J) {
    const WeylGroup& w = WeylGroup::get(rank);
    const ClassFunction ind = w.induce_from_parabolic(
        J, [](const SignedPerm& h) { return Rational(h.det()); });
    return from_decomposition(w, ind);
}

}  // namespace

std::vector<ProjColumn> psi_columns(int rank, EllCase c, const LeviPims* so5) {
    const auto& set = UniCharSet::enumerate(rank);
    std::vector<ProjColumn> cols;
    if (rank == 2) {
        const VirtualUniChar borel = hc_induce(2, ParabolicSubset{}, UniLabel{{}, {}, 1});
        cols.push_back(make_column("Psi1", set, to_affine(borel), PsiSource::HarishChandra, ModSeries::PS));
        cols.push_back(make_column("Psi2", set, so5_parabolic_pim(c), PsiSource::ParabolicInduction,
                                   std::nullopt));
        cols.push_back(make_column("Psi3", set, to_affine(induce_sign(2, ParabolicSubset{2})),
                                   PsiSource::HarishChandra, ModSeries::TildeA1));
        cols.push_back(make_column("Psi4", set, to_affine(induce_sign(2, ParabolicSubset{1})),
                                   PsiSource::HarishChandra, ModSeries::A1));
        cols.push_back(make_column("Psi5", set, to_affine(gg_part(2)), PsiSource::GelfandGraev,
                                   std::nullopt));
        return cols;
    }
    if (rank != 3) throw std::invalid_argument("psi_columns: rank must be 2 or 3");
    if (!so5 || so5->columns.size() != 5)
        throw std::invalid_argument("psi_columns: rank 3 needs the five solved rank-2 PIM columns");

    const VirtualUniChar levi_defect0 = VirtualUniChar::unit(2, UniLabel{{1}, {1}, 1});
    auto hc_col = [&](const std::string& name, const VirtualUniChar& pim, ModSeries s) {
        return make_column(name, set, to_affine(induce_levi_pim(pim)), PsiSource::HarishChandra, s);
    };
    cols.push_back(hc_col("Psi1", so5->columns[0], ModSeries::PS));
    cols.push_back(hc_col("Psi2", levi_defect0, ModSeries::PS));
    cols.push_back(hc_col("Psi3", so5->columns[3], ModSeries::A1));
    cols.push_back(hc_col("Psi4", so5->columns[1], ModSeries::B2Eta));
    cols.push_back(make_column("Psi5", set, to_affine(induce_sign(3, ParabolicSubset{1, 3})),
                               PsiSource::HarishChandra, ModSeries::A1xA1));
    cols.push_back(hc_col("Psi6", so5->columns[2], ModSeries::A1Long));
    cols.push_back(hc_col("Psi7", so5->columns[4], ModSeries::B2St));
    const auto [pim1, pim2] = induced_pim_parts(c);
    cols.push_back(make_column("Psi8", set, pim1, PsiSource::ParabolicInduction, std::nullopt));
    cols.push_back(make_column("Psi9", set, pim2, PsiSource::ParabolicInduction, std::nullopt));
    cols.push_back(make_column("Psi10", set, to_affine(gg_part(3)), PsiSource::GelfandGraev,
                               std::nullopt));
    return cols;
}

std::vector<Rational> parabolic_permutation_character(int rank) {
    const ParabolicSubset J = rank == 3 ? ParabolicSubset{1, 2} : ParabolicSubset{1};
    const VirtualUniChar ind = hc_induce(rank, J, UniLabel{Partition{rank == 3 ? 2 : 1}, {}, 1});
    const auto& set = UniCharSet::enumerate(rank);
    std::vector<Rational> out;
    for (int i = 0; i < set.size(); ++i)
        if (set.block(i) == BlockKind::Principal) out.push_back(ind.coeff[i]);
    return out;
}

}  // namespace decmat
