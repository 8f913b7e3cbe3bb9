#pragma once

#include <string>
#include <utility>
#include <vector>

#include "decmat/affine.hpp"
#include "decmat/lusztig.hpp"

namespace decmat {

/// Line tree with an exceptional middle node: xi1 -- xi_exc -- xi2. The PIM
/// attached to the edge at xi_j has ordinary character xi_j + xi_exc, and
/// the exceptional node aggregates m_exp ordinary characters.
struct BrauerTreeLine {
    std::string xi1;
    std::string xi_exc;
    std::string xi2;
    Affine exceptional_multiplicity;

    /// Ordinary characters (with multiplicity names) of the two edge PIMs.
    std::pair<std::string, std::string> pim_characters() const {
        return {xi1 + " + " + xi_exc, xi2 + " + " + xi_exc};
    }
};

enum class ParabolicGroup { P5, P7, P6star };

/// Tree data of the cyclic block of the given maximal parabolic subgroup.
/// The P6star block assumes odd q; for even q the P7 block is the one used
/// downstream, so rank-3 consumers always read P7 data.
BrauerTreeLine parabolic_tree(ParabolicGroup group, EllCase c);

/// Unipotent parts of the two induced edge PIMs of the rank-3 parabolic
/// block: [1^3,-,1] + m_exp*[-,1^3,1] and [-,1,3] + m_exp*[-,1^3,1].
std::pair<std::vector<Affine>, std::vector<Affine>> induced_pim_parts(EllCase c);

/// Unipotent part of the induced edge PIM of the rank-2 parabolic block:
/// [-,-,3] + m_exp*[-,1^2,1].
std::vector<Affine> so5_parabolic_pim(EllCase c);

/// Unipotent part of the Gelfand-Graev character: the unit vector at the
/// Steinberg label [-,1^m,1].
VirtualUniChar gg_part(int rank);

}  // namespace decmat
