#include "decmat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace decmat {

std::string partition_name(const Partition& p) {
    if (p.empty()) return "-";
    std::ostringstream os;
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        os << p[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

std::string bipartition_name(const Bipartition& b) {
    return partition_name(b.first) + "," + partition_name(b.second);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int mx) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, mx); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Bipartition> bipartitions_of(int m) {
    std::vector<Bipartition> out;
    for (int k = m; k >= 0; --k)
        for (const auto& a : partitions_of(k))
            for (const auto& b : partitions_of(m - k)) out.emplace_back(a, b);
    return out;
}

namespace {

// Border-strip removal on beta-numbers.
long mn_recursive(const Partition& lambda, const Partition& mu) {
    const long n = std::accumulate(lambda.begin(), lambda.end(), 0L);
    if (n == 0) return 1;
    const int k = mu.front();
    Partition rest(mu.begin() + 1, mu.end());
    std::vector<int> beta(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i)
        beta[i] = lambda[i] + static_cast<int>(lambda.size() - 1 - i);
    long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i] - k;
        if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int height = 0;
        for (int x : beta)
            if (b < x && x < beta[i]) ++height;
        std::vector<int> nb;
        for (size_t j = 0; j < beta.size(); ++j)
            if (j != i) nb.push_back(beta[j]);
        nb.push_back(b);
        std::sort(nb.rbegin(), nb.rend());
        Partition nl;
        for (size_t j = 0; j < nb.size(); ++j) {
            const int part = nb[j] - static_cast<int>(nb.size() - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        total += (height % 2 ? -1 : 1) * mn_recursive(nl, rest);
    }
    return total;
}

}  // namespace

long symmetric_character(const Partition& lambda, const Partition& mu) {
    const long a = std::accumulate(lambda.begin(), lambda.end(), 0L);
    const long b = std::accumulate(mu.begin(), mu.end(), 0L);
    if (a != b) throw std::invalid_argument("symmetric_character: size mismatch");
    Partition m = mu;
    std::sort(m.rbegin(), m.rend());
    return mn_recursive(lambda, m);
}

long partition_dimension(const Partition& lambda) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    long hooks = 1;
    for (size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            int leg = 0;
            for (size_t ii = i + 1; ii < lambda.size(); ++ii)
                if (lambda[ii] > j) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return fact / hooks;
}

SignedPerm SignedPerm::identity(int m) {
    SignedPerm w;
    w.img.resize(m);
    std::iota(w.img.begin(), w.img.end(), 1);
    return w;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    SignedPerm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
        const int v = o.img[i];
        r.img[i] = v > 0 ? img[v - 1] : -img[-v - 1];
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
        const int v = img[i];
        if (v > 0)
            r.img[v - 1] = static_cast<int>(i) + 1;
        else
            r.img[-v - 1] = -(static_cast<int>(i) + 1);
    }
    return r;
}

std::pair<Partition, Partition> SignedPerm::cycle_type() const {
    const int m = rank();
    std::vector<bool> seen(m, false);
    Partition pos, neg;
    for (int i = 1; i <= m; ++i) {
        if (seen[i - 1]) continue;
        int j = i, len = 0, sign = 1;
        do {
            seen[j - 1] = true;
            ++len;
            const int v = img[j - 1];
            if (v < 0) sign = -sign;
            j = std::abs(v);
        } while (j != i);
        (sign > 0 ? pos : neg).push_back(len);
    }
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    return {pos, neg};
}

int SignedPerm::det() const {
    int d = 1;
    const int m = rank();
    std::vector<bool> seen(m, false);
    for (int i = 1; i <= m; ++i) {
        if (seen[i - 1]) continue;
        int j = i, len = 0;
        do {
            seen[j - 1] = true;
            ++len;
            j = std::abs(img[j - 1]);
        } while (j != i);
        if (len % 2 == 0) d = -d;  // even cycle is an odd permutation
    }
    for (int v : img)
        if (v < 0) d = -d;
    return d;
}

std::string SignedPerm::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) os << ",";
        os << img[i];
    }
    os << ")";
    return os.str();
}

long signed_character(const Bipartition& b, const SignedPerm& w) {
    const auto [pos, neg] = w.cycle_type();
    struct Cycle {
        int len;
        bool negative;
    };
    std::vector<Cycle> cycles;
    for (int l : pos) cycles.push_back({l, false});
    for (int l : neg) cycles.push_back({l, true});
    const int na = std::accumulate(b.first.begin(), b.first.end(), 0);
    const int n = static_cast<int>(cycles.size());
    long total = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Partition ta, tb;
        int sgn = 1;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                ta.push_back(cycles[i].len);
            } else {
                tb.push_back(cycles[i].len);
                if (cycles[i].negative) sgn = -sgn;  // the beta side carries the sign character
            }
        }
        if (std::accumulate(ta.begin(), ta.end(), 0) != na) continue;
        std::sort(ta.rbegin(), ta.rend());
        std::sort(tb.rbegin(), tb.rend());
        total += sgn * symmetric_character(b.first, ta) * symmetric_character(b.second, tb);
    }
    return total;
}

ParabolicSubset::ParabolicSubset(std::initializer_list<int> js) : js_(js) {
    std::sort(js_.begin(), js_.end());
}

ParabolicSubset::ParabolicSubset(std::vector<int> js) : js_(std::move(js)) {
    std::sort(js_.begin(), js_.end());
}

bool ParabolicSubset::valid_for_rank(int m) const {
    for (int j : js_)
        if (j < 1 || j > m) return false;
    return true;
}

std::string ParabolicSubset::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < js_.size(); ++i) {
        if (i) os << ",";
        os << js_[i];
    }
    os << "}";
    return os.str();
}

Rational ClassFunction::inner(const ClassFunction& o) const {
    if (group != o.group) throw std::invalid_argument("ClassFunction::inner: different groups");
    Rational s(0);
    const auto& cls = group->classes();
    for (size_t i = 0; i < values.size(); ++i) s += Rational(cls[i].size) * values[i] * o.values[i];
    return s / Rational(group->order());
}

WeylGroup::WeylGroup(int m) : m_(m) {}

const WeylGroup& WeylGroup::get(int m) {
    if (m != 2 && m != 3)
        throw std::invalid_argument("WeylGroup: rank " + std::to_string(m) + " not supported (2 or 3)");
    static WeylGroup b2(2);
    static WeylGroup b3(3);
    static bool built = [] {
        b2.build();
        b3.build();
        return true;
    }();
    (void)built;
    return m == 2 ? b2 : b3;
}

void WeylGroup::build() {
    generators_.clear();
    {
        SignedPerm g1 = SignedPerm::identity(m_);
        g1.img[0] = -1;
        generators_.push_back(g1);
        for (int j = 2; j <= m_; ++j) {
            SignedPerm g = SignedPerm::identity(m_);
            std::swap(g.img[j - 2], g.img[j - 1]);
            generators_.push_back(g);
        }
    }

    // breadth-first closure gives both the element list and the length function
    std::map<SignedPerm, int> len;
    std::deque<SignedPerm> frontier;
    const SignedPerm id = SignedPerm::identity(m_);
    len[id] = 0;
    frontier.push_back(id);
    while (!frontier.empty()) {
        SignedPerm w = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators_) {
            SignedPerm x = w * g;
            if (!len.count(x)) {
                len[x] = len[w] + 1;
                frontier.push_back(x);
            }
        }
    }
    elements_.clear();
    for (const auto& [w, l] : len) elements_.push_back(w);
    index_.clear();
    lengths_.resize(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i) {
        index_[elements_[i]] = static_cast<int>(i);
        lengths_[i] = len[elements_[i]];
    }

    // conjugacy classes by orbit partition
    class_of_.assign(elements_.size(), -1);
    classes_.clear();
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (class_of_[i] >= 0) continue;
        const int cid = static_cast<int>(classes_.size());
        std::vector<int> members;
        for (const auto& x : elements_) {
            const SignedPerm y = x * elements_[i] * x.inverse();
            const int yi = index_.at(y);
            if (class_of_[yi] < 0) {
                class_of_[yi] = cid;
                members.push_back(yi);
            }
        }
        ConjClass c;
        c.size = static_cast<long>(members.size());
        c.centralizer_order = order() / c.size;
        int best = members.front();
        for (int mi : members)
            if (lengths_[mi] < lengths_[best] ||
                (lengths_[mi] == lengths_[best] && elements_[mi] < elements_[best]))
                best = mi;
        c.min_rep = elements_[best];
        c.min_length = lengths_[best];
        std::tie(c.positive_type, c.negative_type) = c.min_rep.cycle_type();
        classes_.push_back(std::move(c));
    }

    bips_ = bipartitions_of(m_);
    char_table_.assign(bips_.size(), std::vector<Rational>(classes_.size(), Rational(0)));
    for (size_t b = 0; b < bips_.size(); ++b)
        for (size_t c = 0; c < classes_.size(); ++c)
            char_table_[b][c] = Rational(signed_character(bips_[b], classes_[c].min_rep));

    // orthonormality is the correctness certificate for the table
    for (size_t b1 = 0; b1 < bips_.size(); ++b1)
        for (size_t b2 = 0; b2 < bips_.size(); ++b2) {
            Rational s(0);
            for (size_t c = 0; c < classes_.size(); ++c)
                s += Rational(classes_[c].size) * char_table_[b1][c] * char_table_[b2][c];
            if (s != (b1 == b2 ? Rational(order()) : Rational(0)))
                throw std::logic_error("WeylGroup: character table fails orthogonality");
        }
}

int WeylGroup::class_of(const SignedPerm& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("WeylGroup: element of wrong rank");
    return class_of_[it->second];
}

int WeylGroup::length(const SignedPerm& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("WeylGroup: element of wrong rank");
    return lengths_[it->second];
}

SignedPerm WeylGroup::word_element(const std::vector<int>& word) const {
    SignedPerm w = SignedPerm::identity(m_);
    for (int j : word) {
        if (j < 1 || j > m_)
            throw std::invalid_argument("WeylGroup: generator index " + std::to_string(j) +
                                        " out of range 1.." + std::to_string(m_));
        w = w * generators_[j - 1];
    }
    return w;
}

int WeylGroup::bipartition_index(const Bipartition& b) const {
    for (size_t i = 0; i < bips_.size(); ++i)
        if (bips_[i] == b) return static_cast<int>(i);
    throw std::invalid_argument("WeylGroup: unknown bipartition " + bipartition_name(b));
}

ClassFunction WeylGroup::irreducible(const Bipartition& b) const {
    return ClassFunction{this, char_table_[bipartition_index(b)]};
}

long WeylGroup::character_degree(const Bipartition& b) const {
    long binom = 1;
    const int a = std::accumulate(b.first.begin(), b.first.end(), 0);
    for (int i = 1; i <= a; ++i) binom = binom * (m_ - i + 1) / i;
    return binom * partition_dimension(b.first) * partition_dimension(b.second);
}

std::vector<SignedPerm> WeylGroup::parabolic_elements(const ParabolicSubset& J) const {
    if (!J.valid_for_rank(m_))
        throw std::invalid_argument("WeylGroup: parabolic subset " + J.to_string() +
                                    " invalid for rank " + std::to_string(m_));
    std::map<SignedPerm, bool> seen;
    std::deque<SignedPerm> frontier;
    const SignedPerm id = SignedPerm::identity(m_);
    seen[id] = true;
    frontier.push_back(id);
    while (!frontier.empty()) {
        SignedPerm w = frontier.front();
        frontier.pop_front();
        for (int j : J.indices()) {
            SignedPerm x = w * generators_[j - 1];
            if (!seen.count(x)) {
                seen[x] = true;
                frontier.push_back(x);
            }
        }
    }
    std::vector<SignedPerm> out;
    for (const auto& [w, _] : seen) out.push_back(w);
    return out;
}

ClassFunction WeylGroup::induce_from_parabolic(
    const ParabolicSubset& J, const std::function<Rational(const SignedPerm&)>& f) const {
    const auto sub = parabolic_elements(J);
    std::map<SignedPerm, bool> in_sub;
    for (const auto& h : sub) in_sub[h] = true;
    ClassFunction out{this, std::vector<Rational>(classes_.size(), Rational(0))};
    for (size_t c = 0; c < classes_.size(); ++c) {
        Rational s(0);
        for (const auto& x : elements_) {
            const SignedPerm y = x * classes_[c].min_rep * x.inverse();
            if (in_sub.count(y)) s += f(y);
        }
        out.values[c] = s / Rational(static_cast<long>(sub.size()));
    }
    return out;
}

std::vector<std::pair<Bipartition, Rational>> WeylGroup::decompose(const ClassFunction& f) const {
    std::vector<std::pair<Bipartition, Rational>> out;
    for (size_t b = 0; b < bips_.size(); ++b) {
        Rational s(0);
        for (size_t c = 0; c < classes_.size(); ++c)
            s += Rational(classes_[c].size) * f.values[c] * char_table_[b][c];
        s /= Rational(order());
        if (s != 0) out.emplace_back(bips_[b], s);
    }
    return out;
}

PolyQ WeylGroup::char_poly(const SignedPerm& w) const {
    // reflection representation: w sends e_i to sign * e_|w(i)|
    std::vector<std::vector<Rational>> mat(m_, std::vector<Rational>(m_, Rational(0)));
    for (int i = 1; i <= m_; ++i) {
        const int v = w.img[i - 1];
        mat[std::abs(v) - 1][i - 1] = v > 0 ? 1 : -1;
    }
    // det(q*I - M) by Leibniz expansion; fine at rank <= 3
    std::vector<int> perm(m_);
    std::iota(perm.begin(), perm.end(), 0);
    PolyQ det = PolyQ::zero();
    do {
        int sgn = 1;
        std::vector<bool> seen(m_, false);
        for (int i = 0; i < m_; ++i) {
            if (seen[i]) continue;
            int j = i, len = 0;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) sgn = -sgn;
        }
        PolyQ term = PolyQ(Rational(sgn));
        for (int r = 0; r < m_; ++r) {
            PolyQ entry = (r == perm[r]) ? PolyQ::q() : PolyQ::zero();
            entry -= PolyQ(mat[r][perm[r]]);
            term *= entry;
        }
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

int WeylGroup::fixed_space_dim(const SignedPerm& w) const {
    // rank of (M - I) over Q by Gaussian elimination
    std::vector<std::vector<Rational>> a(m_, std::vector<Rational>(m_, Rational(0)));
    for (int i = 1; i <= m_; ++i) {
        const int v = w.img[i - 1];
        a[std::abs(v) - 1][i - 1] = v > 0 ? 1 : -1;
    }
    for (int i = 0; i < m_; ++i) a[i][i] -= 1;
    int rank = 0;
    for (int col = 0; col < m_; ++col) {
        int piv = -1;
        for (int row = rank; row < m_; ++row)
            if (a[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int row = 0; row < m_; ++row) {
            if (row == rank || a[row][col] == 0) continue;
            const Rational f = a[row][col] / a[rank][col];
            for (int cc = 0; cc < m_; ++cc) a[row][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return m_ - rank;
}

WeylGroup::ClassData WeylGroup::class_data(const std::vector<int>& word) const {
    const SignedPerm w = word_element(word);
    const int cid = class_of(w);
    return ClassData{cid, length(w), classes_[cid].centralizer_order, char_poly(w)};
}

}  // namespace decmat
