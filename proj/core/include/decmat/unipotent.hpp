#pragma once

#include <string>
#include <vector>

#include "decmat/polyq.hpp"
#include "decmat/weyl.hpp"

namespace decmat {

/// Two-row symbol attached to a label; defect = |top size - bottom size|.
struct Symbol {
    std::vector<int> top;
    std::vector<int> bottom;

    int defect() const { return static_cast<int>(top.size() - bottom.size()); }
    std::vector<int> entry_multiset() const;  // sorted union of both rows
    std::string to_string() const;
};

struct UniLabel {
    Partition alpha;
    Partition beta;
    int defect = 1;

    Symbol symbol() const;
    std::string name() const;  // e.g. "[21,-,1]"
    bool operator==(const UniLabel& o) const {
        return alpha == o.alpha && beta == o.beta && defect == o.defect;
    }
};

enum class BlockKind { Principal, Cyclic, Defect0 };
enum class HcSeries { PrincipalSeries, B2Series, CuspidalUnipotent };

std::string to_string(BlockKind k);

/// The unipotent characters of the rank-m group: labels in a fixed row order
/// (principal-block rows first), exact degrees, family partition, block
/// distribution for ell | q+1 and ordinary Harish-Chandra series tags.
class UniCharSet {
public:
    static const UniCharSet& enumerate(int m);

    int rank() const { return m_; }
    int size() const { return static_cast<int>(labels_.size()); }
    int principal_count() const { return principal_count_; }
    const std::vector<UniLabel>& labels() const { return labels_; }
    const UniLabel& label(int i) const { return labels_[i]; }
    int index_of(const UniLabel& l) const;
    int index_by_name(const std::string& name) const;

    const PolyQ& degree(const UniLabel& l) const { return degrees_[index_of(l)]; }
    const PolyQ& degree(int i) const { return degrees_[i]; }

    /// Partition into families (symbols with equal entry multisets).
    const std::vector<std::vector<int>>& families() const { return families_; }
    int family_of(int i) const { return family_of_[i]; }

    BlockKind block(int i) const { return blocks_[i]; }
    HcSeries hc_series(int i) const { return hc_[i]; }

private:
    explicit UniCharSet(int m);

    int m_;
    int principal_count_;
    std::vector<UniLabel> labels_;
    std::vector<PolyQ> degrees_;
    std::vector<std::vector<int>> families_;
    std::vector<int> family_of_;
    std::vector<BlockKind> blocks_;
    std::vector<HcSeries> hc_;
};

}  // namespace decmat
