#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "decmat/polyq.hpp"
#include "decmat/rational.hpp"

namespace decmat {

/*
  The Weyl group of type B_m realized as signed permutations of {1,...,m}.
  The generator g_1 negates position 1 and g_j (j > 1) swaps positions j-1
  and j; every element is stored by its images, so img[i-1] = w(i) with a
  sign. Words multiply left to right: word {1,2} is g_1 * g_2, and products
  apply the right factor first.

  An element splits into signed cycles; the cycle sign is the product of the
  entry signs met along the cycle. The pair (positive cycle type, negative
  cycle type) is a complete conjugacy invariant, and bipartitions of m index
  the irreducible characters: chi_{(alpha,beta)} is induced from B_a x B_b
  with the alpha factor inflated from S_a and the beta factor twisted by the
  product-of-signs character. Values are computed by distributing the cycles
  of an element over the two factors (Murnaghan-Nakayama on each side).
*/

using Partition = std::vector<int>;  // weakly decreasing positive parts
using Bipartition = std::pair<Partition, Partition>;

std::string partition_name(const Partition& p);    // e.g. "21", "1^3", "-" for empty
std::string bipartition_name(const Bipartition& b);

/// All partitions of n, reverse-lex so (n) comes first and (1^n) last.
std::vector<Partition> partitions_of(int n);

/// All bipartitions (alpha, beta) with |alpha| + |beta| = m, ordered by
/// decreasing |alpha| and then by the partition order above on each side.
std::vector<Bipartition> bipartitions_of(int m);

/// Symmetric group character chi_lambda at cycle type mu (Murnaghan-Nakayama).
long symmetric_character(const Partition& lambda, const Partition& mu);

/// Product of hook lengths dimension formula.
long partition_dimension(const Partition& lambda);

struct SignedPerm {
    std::vector<int> img;  // img[i-1] = signed image of i; |img| is a permutation

    int rank() const { return static_cast<int>(img.size()); }
    static SignedPerm identity(int m);
    SignedPerm operator*(const SignedPerm& o) const;  // apply o first
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img == o.img; }
    bool operator<(const SignedPerm& o) const { return img < o.img; }

    /// (positive cycle lengths, negative cycle lengths), each weakly decreasing.
    std::pair<Partition, Partition> cycle_type() const;

    /// Determinant of the reflection-representation matrix, i.e. (-1)^length.
    int det() const;

    std::string to_string() const;
};

struct ConjClass {
    SignedPerm min_rep;       // a representative of minimal Coxeter length
    int min_length = 0;
    long size = 0;
    long centralizer_order = 0;
    Partition positive_type;
    Partition negative_type;
};

class ParabolicSubset {
public:
    ParabolicSubset() = default;
    ParabolicSubset(std::initializer_list<int> js);
    explicit ParabolicSubset(std::vector<int> js);
    const std::vector<int>& indices() const { return js_; }
    bool valid_for_rank(int m) const;
    std::string to_string() const;

private:
    std::vector<int> js_;  // sorted simple-root indices, 1-based
};

class WeylGroup;

/// Exact class function on W(B_m), one value per conjugacy class.
struct ClassFunction {
    const WeylGroup* group = nullptr;
    std::vector<Rational> values;  // indexed by class id

    Rational inner(const ClassFunction& o) const;
};

class WeylGroup {
public:
    /// Builds the full group by closing the generators; supports m in {2,3}.
    static const WeylGroup& get(int m);

    int rank() const { return m_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<SignedPerm>& elements() const { return elements_; }
    const std::vector<SignedPerm>& generators() const { return generators_; }
    const std::vector<ConjClass>& classes() const { return classes_; }
    int class_of(const SignedPerm& w) const;
    int length(const SignedPerm& w) const;

    SignedPerm word_element(const std::vector<int>& word) const;

    /// Irreducible characters, rows indexed like bipartition_labels().
    const std::vector<Bipartition>& bipartition_labels() const { return bips_; }
    const std::vector<std::vector<Rational>>& character_table() const { return char_table_; }
    int bipartition_index(const Bipartition& b) const;
    ClassFunction irreducible(const Bipartition& b) const;
    long character_degree(const Bipartition& b) const;

    /// Elements of the reflection subgroup generated by {g_j : j in J}.
    std::vector<SignedPerm> parabolic_elements(const ParabolicSubset& J) const;

    /// Induction of a class function on W_J given by its values on elements.
    ClassFunction induce_from_parabolic(const ParabolicSubset& J,
                                        const std::function<Rational(const SignedPerm&)>& f) const;

    /// Multiplicity decomposition of a class function over the irreducibles.
    std::vector<std::pair<Bipartition, Rational>> decompose(const ClassFunction& f) const;

    /// det(q*id - w) on the reflection representation.
    PolyQ char_poly(const SignedPerm& w) const;

    /// Dimension of the fixed space of w.
    int fixed_space_dim(const SignedPerm& w) const;

    struct ClassData {
        int class_id;
        int length;  // Coxeter length of the element itself
        long centralizer_order;
        PolyQ char_poly;
    };
    ClassData class_data(const std::vector<int>& word) const;

private:
    explicit WeylGroup(int m);
    void build();

    int m_;
    std::vector<SignedPerm> generators_;
    std::vector<SignedPerm> elements_;
    std::map<SignedPerm, int> index_;
    std::vector<int> lengths_;    // by element index
    std::vector<int> class_of_;   // by element index
    std::vector<ConjClass> classes_;
    std::vector<Bipartition> bips_;
    std::vector<std::vector<Rational>> char_table_;  // [bip][class]
};

/// chi_{(alpha,beta)} evaluated at w, via the signed-cycle distribution rule.
long signed_character(const Bipartition& b, const SignedPerm& w);

}  // namespace decmat
