#include "decmat/blocks.hpp"

namespace decmat {

BrauerTreeLine parabolic_tree(ParabolicGroup group, EllCase c) {
    BrauerTreeLine t;
    t.exceptional_multiplicity = m_exp_affine(c);
    switch (group) {
        case ParabolicGroup::P5:
            t.xi1 = "psi-(1)";
            t.xi2 = "psi-(nu1-)";
            t.xi_exc = "psi-(Xi)";
            break;
        case ParabolicGroup::P7:
            t.xi1 = "psi0(psi-(1))";
            t.xi2 = "psi0(psi-(nu1-))";
            t.xi_exc = "psi0(psi-(Xi))";
            break;
        case ParabolicGroup::P6star:
            // valid for odd q only
            t.xi1 = "psi2(psi3(nu7))";
            t.xi2 = "psi2(psi3(nu8))";
            t.xi_exc = "psi2(psi3(Xi))";
            break;
    }
    return t;
}

namespace {

std::vector<Affine> affine_unit(int rank, const UniLabel& l, const Affine& steinberg_mult) {
    const auto& set = UniCharSet::enumerate(rank);
    std::vector<Affine> v(set.size(), Affine());
    v[set.index_of(l)] = Affine(1);
    v[set.index_of(UniLabel{{}, Partition(rank, 1), 1})] += steinberg_mult;
    return v;
}

}  // namespace

std::pair<std::vector<Affine>, std::vector<Affine>> induced_pim_parts(EllCase c) {
    const Affine m = m_exp_affine(c);
    return {affine_unit(3, UniLabel{{1, 1, 1}, {}, 1}, m), affine_unit(3, UniLabel{{}, {1}, 3}, m)};
}

std::vector<Affine> so5_parabolic_pim(EllCase c) {
    return affine_unit(2, UniLabel{{}, {}, 3}, m_exp_affine(c));
}

VirtualUniChar gg_part(int rank) {
    return VirtualUniChar::unit(rank, UniLabel{{}, Partition(rank, 1), 1});
}

}  // namespace decmat
