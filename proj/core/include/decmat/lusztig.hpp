#pragma once

#include <string>
#include <vector>

#include "decmat/affine.hpp"
#include "decmat/unipotent.hpp"
#include "decmat/weyl.hpp"

namespace decmat {

/*
  Virtual characters R_w attached to twisted maximal tori decompose over the
  ordinary unipotent characters. Within a family the transition from the
  principal-series basis goes through the family's Fourier matrix: writing
  A_phi for the almost character of phi in Irr(W),

      R_w = sum_phi phi(w) * A_phi,

  and A_phi is the Fourier image of the basis vector at the label [alpha,
  beta, 1] inside its family. Singleton families are fixed; a four-element
  family carries the involution 1/2 * [[1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],
  [1,-1,-1,1]] once one member is designated as the head slot. That choice
  is pinned here by requiring R_1 to expand with coefficient deg(phi) at
  each principal-series label and 0 elsewhere, which forces the head to be
  the member whose Weyl-character degree is the sum of the other two
  series members' degrees. Everything downstream (the printed expansions,
  the degree identity, integrality of the relation combinations) is checked
  against this normalization and fails loudly rather than silently drifting
  to another convention.
*/

/// Rational vector over the unipotent labels of a fixed rank.
struct VirtualUniChar {
    int rank = 0;
    std::vector<Rational> coeff;  // indexed like UniCharSet::labels()

    static VirtualUniChar zero(int rank);
    static VirtualUniChar unit(int rank, const UniLabel& l);

    Rational inner(const VirtualUniChar& o) const;
    PolyQ degree() const;
    VirtualUniChar& add_scaled(const VirtualUniChar& o, const Rational& s);
    bool is_integral() const;
    bool operator==(const VirtualUniChar& o) const { return rank == o.rank && coeff == o.coeff; }
    std::string to_string() const;
};

struct FourierBlock {
    int family_id = 0;
    std::vector<int> member_labels;              // label indices, head slot first
    std::vector<std::vector<Rational>> matrix;   // symmetric involution
};

struct Relation {
    std::string name;
    VirtualUniChar vec;  // integral, supported on the rank's label set
};

struct PairingScan {
    int class_id = -1;
    int length = -1;
    Affine expression;
    /// All classes of the same minimal length with nonvanishing expression
    /// (normally exactly one) and the certified-zero shorter classes.
    std::vector<std::pair<int, Affine>> at_min_length;
    std::vector<int> vanishing_shorter_classes;
    bool found() const { return class_id >= 0; }
};

/// Per-rank bundle of Weyl data, unipotent labels, Fourier blocks and almost
/// characters. Immutable after construction.
class LusztigContext {
public:
    static const LusztigContext& get(int rank);

    const WeylGroup& weyl() const { return *weyl_; }
    const UniCharSet& chars() const { return *chars_; }
    const std::vector<FourierBlock>& fourier_blocks() const { return fourier_; }
    const VirtualUniChar& almost_character(const Bipartition& b) const;

    VirtualUniChar dl_character(const SignedPerm& w) const;
    VirtualUniChar dl_character(const std::vector<int>& word) const;
    VirtualUniChar dl_character_of_class(int class_id) const;

    /// The product of (q^{2k} - 1) over k = 1..rank.
    PolyQ group_order_prime_part() const;

    /// Sign of the degree identity deg R_w = sign * |G|_{p'} / det(q - w).
    int degree_identity_sign(const SignedPerm& w) const;

    std::vector<Relation> relation_vectors(EllCase c) const;

    /// Dot product against an affine vector over the labels; labels outside
    /// the vector's support contribute nothing.
    Affine brauer_pairing(const VirtualUniChar& r, const std::vector<Affine>& phi) const;

    /// Scan conjugacy classes by increasing minimal length for the first
    /// nonvanishing pairing with phi.
    PairingScan minimal_nonvanishing(const std::vector<Affine>& phi) const;

private:
    explicit LusztigContext(int rank);
    void build_fourier();

    const WeylGroup* weyl_;
    const UniCharSet* chars_;
    std::vector<FourierBlock> fourier_;
    std::vector<VirtualUniChar> almost_;          // by bipartition index
    std::vector<VirtualUniChar> dl_by_class_;     // memoized R_w per class
};

}  // namespace decmat
