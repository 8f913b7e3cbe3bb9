#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decmat/affine.hpp"
#include "decmat/lusztig.hpp"

namespace decmat {

/// How a projective column was produced; this determines which modular
/// series its PIM expansion can touch.
enum class PsiSource { HarishChandra, ParabolicInduction, GelfandGraev };

/// Modular Harish-Chandra series tags of the Brauer-character columns.
enum class ModSeries { PS, A1, A1Long, A1xA1, B2Eta, B2St, TildeA1, Cuspidal };

std::string to_string(ModSeries s);

/// A projective character restricted to the principal-block rows, with the
/// provenance needed by the solver. Entries may involve the symbol m.
struct ProjColumn {
    std::string name;
    std::vector<Affine> values;  // per principal-block row
    int diag_row = 0;            // first nonzero row, value 1 there
    PsiSource source = PsiSource::HarishChandra;
    std::optional<ModSeries> source_series;  // set for HarishChandra columns
    std::vector<std::pair<std::string, Rational>> dropped;  // coefficients outside the block
};

/// Harish-Chandra induction of a Levi unipotent character along the standard
/// Levi with Weyl group W_J. Principal-series labels go through Weyl-group
/// induction of the matching bipartition character; the rank-2 cuspidal
/// label [-,-,3] induces to [1,-,3] + [-,1,3].
VirtualUniChar hc_induce(int rank, const ParabolicSubset& J, const UniLabel& levi_label);

/// PIM columns of the solved rank-2 decomposition matrix, used as the Levi
/// input of the rank-3 table. Column j lists the unipotent part of the j-th
/// projective cover; alpha is already a number here.
struct LeviPims {
    std::vector<VirtualUniChar> columns;  // five columns, rank-2 vectors
};

/// The projective columns Psi_1..Psi_10 (rank 3) or Psi_1..Psi_5 (rank 2).
/// Rank 3 requires the solved rank-2 matrix. Coefficients landing outside
/// the principal block are recorded in ProjColumn::dropped.
std::vector<ProjColumn> psi_columns(int rank, EllCase c, const LeviPims* so5 = nullptr);

/// Principal-block part of the permutation character of G on the cosets of
/// the maximal parabolic (Weyl-level induction of the trivial character),
/// as multiplicities per principal-block row.
std::vector<Rational> parabolic_permutation_character(int rank);

}  // namespace decmat
