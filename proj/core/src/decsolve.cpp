#include "decmat/decsolve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace decmat {

namespace {

std::vector<ColumnInfo> column_infos(int rank) {
    if (rank == 2)
        return {{"5phi1", ModSeries::PS},
                {"5phi2", ModSeries::Cuspidal},
                {"5phi3", ModSeries::TildeA1},
                {"5phi4", ModSeries::A1},
                {"5phi5", ModSeries::Cuspidal}};
    return {{"phi1", ModSeries::PS},      {"phi2", ModSeries::PS},
            {"phi3", ModSeries::A1},      {"phi4", ModSeries::B2Eta},
            {"phi5", ModSeries::A1xA1},   {"phi6", ModSeries::A1Long},
            {"phi7", ModSeries::B2St},    {"phi8", ModSeries::Cuspidal},
            {"phi9", ModSeries::Cuspidal}, {"phi10", ModSeries::Cuspidal}};
}

std::string cell(int r, int c, const DecModel& m) {
    return "(" + m.rows()[r].name() + "," + m.cols()[c].name + ")";
}

}  // namespace

DecModel::DecModel(int rank, EllCase c) : rank_(rank), case_(c) {
    const auto& set = UniCharSet::enumerate(rank);
    for (int i = 0; i < set.size(); ++i)
        if (set.block(i) == BlockKind::Principal) rows_.push_back(set.label(i));
    cols_ = column_infos(rank);
    const int n = size();
    entries_.assign(n, std::vector<EntryBound>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (c > r) {
                entries_[r][c] = {Affine(0), Affine(0)};
            } else if (c == r) {
                entries_[r][c] = {Affine(1), Affine(1)};
            } else {
                entries_[r][c] = {Affine(0), std::nullopt};
            }
        }
    if (rank == 2) {
        unknowns_[Unknown::Alpha] = {4, 1};
    } else {
        unknowns_[Unknown::Beta] = {9, 7};
        unknowns_[Unknown::Gamma] = {9, 8};
    }
}

DecModel build_model(int rank, EllCase c) { return DecModel(rank, c); }

std::optional<Unknown> DecModel::unknown_at(int r, int c) const {
    for (const auto& [u, pos] : unknowns_)
        if (pos.first == r && pos.second == c) return u;
    return std::nullopt;
}

bool DecModel::tighten_lo(int r, int c, const Affine& v, const std::string& family,
                          const std::string& why) {
    EntryBound& e = entries_[r][c];
    if (affine_leq(v, e.lo)) return false;  // no improvement
    if (!affine_leq(e.lo, v)) {
        log_.push_back({family, "skipped incomparable lower bound " + v.to_string() + " at " +
                                    cell(r, c, *this)});
        return false;
    }
    e.lo = v;
    log_.push_back({family, cell(r, c, *this) + " >= " + v.to_string() + "  [" + why + "]"});
    if (e.hi && !affine_leq(e.lo, *e.hi))
        throw std::logic_error("DecModel: infeasible entry " + cell(r, c, *this) + ": " +
                               e.lo.to_string() + " > " + e.hi->to_string());
    return true;
}

bool DecModel::tighten_hi(int r, int c, const Affine& v, const std::string& family,
                          const std::string& why) {
    EntryBound& e = entries_[r][c];
    if (e.hi) {
        if (affine_leq(*e.hi, v)) return false;
        if (!affine_leq(v, *e.hi)) {
            log_.push_back({family, "skipped incomparable upper bound " + v.to_string() + " at " +
                                        cell(r, c, *this)});
            return false;
        }
    }
    e.hi = v;
    log_.push_back({family, cell(r, c, *this) + " <= " + v.to_string() + "  [" + why + "]"});
    if (!affine_leq(e.lo, *e.hi))
        throw std::logic_error("DecModel: infeasible entry " + cell(r, c, *this) + ": " +
                               e.lo.to_string() + " > " + e.hi->to_string());
    return true;
}

void DecModel::set_exact(int r, int c, const Affine& v, const std::string& family,
                         const std::string& why) {
    tighten_lo(r, c, v, family, why);
    tighten_hi(r, c, v, family, why);
}

bool DecModel::resolved() const {
    for (int r = 0; r < size(); ++r)
        for (int c = 0; c < size(); ++c) {
            const EntryBound& e = entries_[r][c];
            if (!e.fixed() || !e.lo.is_constant()) return false;
        }
    return true;
}

std::vector<std::string> DecModel::unresolved_report() const {
    std::vector<std::string> out;
    for (int r = 0; r < size(); ++r)
        for (int c = 0; c < size(); ++c) {
            const EntryBound& e = entries_[r][c];
            if (e.fixed() && e.lo.is_constant()) continue;
            out.push_back(cell(r, c, *this) + " in [" + e.lo.to_string() + ", " +
                          (e.hi ? e.hi->to_string() : "inf") + "]");
        }
    return out;
}

Affine DecModel::entry_affine(int r, int c) const {
    const EntryBound& e = entries_[r][c];
    if (e.fixed() && e.lo.is_constant()) return e.lo;
    if (auto u = unknown_at(r, c)) return Affine::unknown(*u);
    throw std::logic_error("DecModel: entry " + cell(r, c, *this) +
                           " is neither resolved nor a designated unknown");
}

std::vector<std::vector<Rational>> DecModel::matrix() const {
    if (!resolved()) throw std::logic_error("DecModel: matrix requested before resolution");
    std::vector<std::vector<Rational>> out(size(), std::vector<Rational>(size()));
    for (int r = 0; r < size(); ++r)
        for (int c = 0; c < size(); ++c) out[r][c] = entries_[r][c].lo.constant();
    return out;
}

std::vector<std::string> DecModel::load_bearing_families() const {
    std::vector<std::string> fams;
    for (const auto& l : log_)
        if (std::find(fams.begin(), fams.end(), l.family) == fams.end()) fams.push_back(l.family);
    return fams;
}

namespace {

/// One peeling pass of Psi = sum a_j Phi_j over the allowed columns.
bool peel_column(DecModel& model, const ProjColumn& psi, bool series_matching,
                 const std::string& family) {
    const int n = model.size();
    const int i = psi.diag_row;
    bool changed = false;

    std::vector<int> allowed;
    for (int j = i; j < n; ++j) {
        if (series_matching && psi.source == PsiSource::HarishChandra &&
            model.cols()[j].series != *psi.source_series)
            continue;
        allowed.push_back(j);
    }
    if (allowed.empty() || allowed.front() != i)
        throw std::logic_error("peel_column: " + psi.name + " has no diagonal column");

    // coefficient upper bounds from the diagonal rows: a_j <= Psi(j) - lo(E(j,i))
    std::vector<std::pair<int, Affine>> alive;  // (column, upper bound for a_j)
    for (size_t t = 1; t < allowed.size(); ++t) {
        const int j = allowed[t];
        const Affine u = psi.values[j] - model.entry(j, i).lo;
        if (affine_leq(u, Affine(0))) continue;  // coefficient forced to zero
        alive.emplace_back(j, u);
    }

    for (int r = i; r < n; ++r) {
        changed |= model.tighten_hi(r, i, psi.values[r], family, psi.name);
        // lower bound: Psi(r) minus the most the other columns could carry
        Affine lo = psi.values[r];
        bool usable = true;
        for (const auto& [j, u] : alive) {
            const EntryBound& e = model.entry(r, j);
            if (!e.hi) {
                usable = false;
                break;
            }
            if (!u.is_constant() && !e.hi->is_constant()) {
                usable = false;
                break;
            }
            lo -= Affine::multiply(u, *e.hi);
        }
        if (usable && affine_leq(Affine(0), lo))
            changed |= model.tighten_lo(r, i, lo, family, psi.name);
    }
    return changed;
}

struct LinearConstraint {
    std::string name;
    std::vector<Rational> coeff;  // per row
    Rational rhs;                 // sum coeff * entry >= rhs
    int column = -1;              // -1 = applies to every column
};

bool propagate_constraint(DecModel& model, const LinearConstraint& lc, int col,
                          const std::string& family) {
    const int n = model.size();
    bool changed = false;
    for (int t = 0; t < n; ++t) {
        const Rational ct = lc.coeff[t];
        if (ct == 0) continue;
        // bound sum_{r != t} c_r E(r) from above
        Affine other(0);
        bool usable = true;
        for (int r = 0; r < n && usable; ++r) {
            if (r == t || lc.coeff[r] == 0) continue;
            const EntryBound& e = model.entry(r, col);
            if (lc.coeff[r] > 0) {
                if (!e.hi) {
                    usable = false;
                    break;
                }
                other += *e.hi * lc.coeff[r];
            } else {
                other += e.lo * lc.coeff[r];
            }
        }
        if (!usable) continue;
        const std::string why = lc.name + " @ " + model.cols()[col].name;
        if (ct > 0) {
            // E(t) >= (rhs - other) / ct
            Affine bound = (Affine(lc.rhs) - other) * (Rational(1) / ct);
            if (bound.is_constant())
                bound = Affine(Rational(rational_ceil(bound.constant())));
            else if (!is_integer(bound.constant()) || !is_integer(bound.coeff(Unknown::MExp)))
                continue;  // cannot round a fractional symbolic bound
            if (affine_leq(Affine(0), bound))
                changed |= model.tighten_lo(t, col, bound, family, why);
        } else {
            // E(t) <= (other - rhs) / |ct|
            Affine bound = (other - Affine(lc.rhs)) * (Rational(1) / -ct);
            if (bound.is_constant())
                bound = Affine(Rational(rational_floor(bound.constant())));
            else if (!is_integer(bound.constant()) || !is_integer(bound.coeff(Unknown::MExp)))
                continue;
            changed |= model.tighten_hi(t, col, bound, family, why);
        }
    }
    return changed;
}

std::vector<Rational> relation_principal_part(const DecModel& model, const Relation& rel) {
    const auto& set = UniCharSet::enumerate(model.rank());
    std::vector<Rational> out;
    for (int i = 0; i < set.size(); ++i)
        if (set.block(i) == BlockKind::Principal) out.push_back(rel.vec.coeff[i]);
    return out;
}

}  // namespace

bool apply_projective_columns(DecModel& model, const std::vector<ProjColumn>& columns) {
    bool changed = false;
    for (const auto& psi : columns) changed |= peel_column(model, psi, false, "projectives");
    return changed;
}

bool apply_cuspidal_support(DecModel& model, const std::vector<ProjColumn>& columns) {
    bool changed = false;
    for (const auto& psi : columns) changed |= peel_column(model, psi, true, "cuspidal-support");
    return changed;
}

bool apply_relations(DecModel& model, const std::vector<Relation>& relations) {
    bool changed = false;
    for (const auto& rel : relations) {
        LinearConstraint lc{rel.name, relation_principal_part(model, rel), Rational(0), -1};
        for (int col = 0; col < model.size(); ++col)
            changed |= propagate_constraint(model, lc, col, "relations");
    }
    return changed;
}

bool apply_permutation_bound(DecModel& model) {
    // ell divides the parabolic index, so the trivial Brauer character occurs
    // at least twice in the principal-block part of the permutation character
    LinearConstraint lc{"perm-module", parabolic_permutation_character(model.rank()), Rational(2), 0};
    return propagate_constraint(model, lc, 0, "relations");
}

std::vector<Affine> steinberg_brauer_vector(const DecModel& model) {
    const int n = model.size();
    std::vector<Affine> x(n);
    x[n - 1] = Affine(1);
    for (int j = n - 2; j >= 0; --j) {
        Affine s(0);
        for (int k = j + 1; k < n; ++k)
            s += Affine::multiply(x[k], model.entry_affine(k, j));
        x[j] = -s;
    }
    return x;
}

namespace {

/// Every entry is either resolved or a designated unknown, so the symbolic
/// inversion behind the sign bound is defined.
bool dudas_ready(const DecModel& model) {
    for (int r = 0; r < model.size(); ++r)
        for (int c = 0; c < model.size(); ++c) {
            const EntryBound& e = model.entry(r, c);
            if (e.fixed() && e.lo.is_constant()) continue;
            if (!model.unknown_at(r, c)) return false;
        }
    return true;
}

}  // namespace

bool apply_dudas(DecModel& model) {
    if (!dudas_ready(model)) return false;
    const LusztigContext& ctx = LusztigContext::get(model.rank());
    bool any = false;
    for (int round = 0; round < 8; ++round) {
        const std::vector<Affine> phi = steinberg_brauer_vector(model);
        const PairingScan scan = ctx.minimal_nonvanishing(phi);
        if (!scan.found()) break;
        bool changed = false;
        for (const auto& [cid, expr] : scan.at_min_length) {
            const int sign = scan.length % 2 ? -1 : 1;
            const Affine bounded = expr * Rational(sign);  // bounded >= 0 must hold
            const std::string why = "len-" + std::to_string(scan.length) + " class pairing " +
                                    expr.to_string();
            // single-unknown inequalities tighten the designated entry
            for (const auto& [u, pos] : model.unknown_positions()) {
                const Rational k = bounded.coeff(u);
                if (k == 0) continue;
                Affine rest = bounded.substitute(u, Affine(0));
                bool usable = true;
                Affine extreme(0);
                for (const auto& [v, vpos] : model.unknown_positions()) {
                    if (v == u) continue;
                    const Rational kv = rest.coeff(v);
                    if (kv == 0) continue;
                    rest = rest.substitute(v, Affine(0));
                    const EntryBound& ev = model.entry(vpos.first, vpos.second);
                    if (kv > 0) {
                        if (!ev.hi) {
                            usable = false;
                            break;
                        }
                        extreme += *ev.hi * kv;
                    } else {
                        extreme += ev.lo * kv;
                    }
                }
                if (!usable) continue;
                // k*u + rest_const + extreme >= 0 in the worst case
                const Affine budget = -(rest + extreme) * (Rational(1) / k);
                if (k > 0) {
                    if (budget.is_constant())
                        changed |= model.tighten_lo(pos.first, pos.second,
                                                    Affine(Rational(rational_ceil(budget.constant()))),
                                                    "dudas", why);
                } else {
                    if (budget.is_constant())
                        changed |= model.tighten_hi(pos.first, pos.second,
                                                    Affine(Rational(rational_floor(budget.constant()))),
                                                    "dudas", why);
                    else if (affine_leq(Affine(0), budget))
                        changed |= model.tighten_hi(pos.first, pos.second, budget, "dudas", why);
                }
            }
            if (const auto v = bounded.constant_value(); v && *v < 0)
                throw std::logic_error("apply_dudas: sign bound violated at the current model");
        }
        if (!changed) break;
        any = true;
    }
    return any;
}

namespace {

void run_linear_fixpoint(DecModel& model, const std::vector<ProjColumn>& psi,
                         const std::vector<Relation>& rels, const SolveOptions& opt) {
    for (int round = 0; round < 64; ++round) {
        bool changed = false;
        if (opt.use_projectives) {
            changed |= apply_projective_columns(model, psi);
            if (opt.use_cuspidal_support) changed |= apply_cuspidal_support(model, psi);
        }
        if (opt.use_relations) {
            changed |= apply_relations(model, rels);
            changed |= apply_permutation_bound(model);
        }
        if (!changed) return;
    }
    throw std::logic_error("solve: linear fixpoint did not stabilize");
}

}  // namespace

LeviPims levi_pims_from(const SolveResult& rank2) {
    if (rank2.model.rank() != 2 || !rank2.resolved)
        throw std::invalid_argument("levi_pims_from: need a resolved rank-2 result");
    const auto& set = UniCharSet::enumerate(2);
    const auto mat = rank2.model.matrix();
    LeviPims pims;
    for (int c = 0; c < 5; ++c) {
        VirtualUniChar col = VirtualUniChar::zero(2);
        for (int r = 0; r < 5; ++r)
            col.coeff[set.index_of(rank2.model.rows()[r])] = mat[r][c];
        pims.columns.push_back(std::move(col));
    }
    return pims;
}

SolveResult solve(int rank, EllCase c, const SolveOptions& options) {
    const LusztigContext& ctx = LusztigContext::get(rank);

    LeviPims pims;
    if (rank == 3) {
        SolveResult sub = solve(2, c);  // the staged input is always fully solved
        if (!sub.resolved)
            throw std::logic_error("solve: rank-2 stage did not resolve");
        pims = levi_pims_from(sub);
    }
    SolveResult result{build_model(rank, c)};
    result.psi = psi_columns(rank, c, rank == 3 ? &pims : nullptr);
    result.relations = ctx.relation_vectors(c);

    run_linear_fixpoint(result.model, result.psi, result.relations, options);
    if (!result.model.resolved() && options.use_dudas) {
        for (int round = 0; round < 8; ++round) {
            if (!apply_dudas(result.model)) break;
            result.dudas_used = true;
            run_linear_fixpoint(result.model, result.psi, result.relations, options);
            if (result.model.resolved()) break;
        }
    }
    result.resolved = result.model.resolved();
    if (result.resolved) {
        for (const auto& [u, pos] : result.model.unknown_positions())
            result.unknown_values[u] = result.model.entry(pos.first, pos.second).lo.constant();
        result.audit = run_audit(result);
    }
    return result;
}

std::vector<std::vector<Affine>> final_table(int rank) {
    auto A = [] { return Affine::unknown(Unknown::Alpha); };
    std::vector<std::vector<Affine>> t;
    auto row = [&](std::initializer_list<Affine> cells) { t.emplace_back(cells); };
    const Affine o(1), z(0);
    if (rank == 2) {
        row({o, z, z, z, z});
        row({z, o, z, z, z});
        row({o, z, o, z, z});
        row({o, z, z, o, z});
        row({o, A(), o, o, o});
        return t;
    }
    const Affine B = Affine::unknown(Unknown::Beta), G = Affine::unknown(Unknown::Gamma);
    row({o, z, z, z, z, z, z, z, z, z});
    row({o, o, z, z, z, z, z, z, z, z});
    row({o, z, o, z, z, z, z, z, z, z});
    row({z, z, z, o, z, z, z, z, z, z});
    row({o, o, o, z, o, z, z, z, z, z});
    row({o, o, z, z, o, o, z, z, z, z});
    row({o, o, o, A(), o, o, o, z, z, z});
    row({o, z, z, z, z, o, z, o, z, z});
    row({z, z, z, o, z, z, z, z, o, z});
    row({o, z, o, A(), o, o, o, B, G, o});
    return t;
}

std::map<Unknown, Rational> published_values(int rank, EllCase c) {
    std::map<Unknown, Rational> v;
    if (rank == 2) {
        v[Unknown::Alpha] = c == EllCase::Case3 ? 1 : 2;
        return v;
    }
    switch (c) {
        case EllCase::Case3:
            v[Unknown::Alpha] = 1;
            v[Unknown::Beta] = 1;
            v[Unknown::Gamma] = 1;
            break;
        case EllCase::Case5:
            v[Unknown::Alpha] = 2;
            v[Unknown::Beta] = 2;
            v[Unknown::Gamma] = 2;
            break;
        case EllCase::Large:
            v[Unknown::Alpha] = 2;
            v[Unknown::Beta] = 3;
            v[Unknown::Gamma] = 2;
            break;
    }
    return v;
}

SolveResult verify_tables(int rank, EllCase c) {
    const LusztigContext& ctx = LusztigContext::get(rank);
    SolveResult result{build_model(rank, c)};
    const auto table = final_table(rank);
    const auto vals = published_values(rank, c);
    for (int r = 0; r < result.model.size(); ++r)
        for (int cc = 0; cc < result.model.size(); ++cc) {
            Affine v = table[r][cc];
            for (const auto& [u, value] : vals) v = v.substitute(u, Affine(value));
            result.model.set_exact(r, cc, v, "published", "table entry");
        }
    if (rank == 3) {
        SolveResult sub = verify_tables(2, c);
        const LeviPims pims = levi_pims_from(sub);
        result.psi = psi_columns(rank, c, &pims);
    } else {
        result.psi = psi_columns(rank, c, nullptr);
    }
    result.relations = ctx.relation_vectors(c);
    result.resolved = result.model.resolved();
    for (const auto& [u, pos] : result.model.unknown_positions())
        result.unknown_values[u] = result.model.entry(pos.first, pos.second).lo.constant();
    result.audit = run_audit(result);
    return result;
}

bool SolveResult::audit_passed() const {
    return !audit.empty() &&
           std::all_of(audit.begin(), audit.end(), [](const AuditCheck& c) { return c.pass; });
}

namespace {

AuditCheck audit_psi_decomposition(const SolveResult& res) {
    AuditCheck check{"psi columns decompose nonnegatively over the PIM columns", true, ""};
    const auto mat = res.model.matrix();
    const int n = res.model.size();
    for (const auto& psi : res.psi) {
        std::vector<Affine> residual = psi.values;
        for (int j = psi.diag_row; j < n; ++j) {
            const Affine a = residual[j];
            if (!affine_leq(Affine(0), a)) {
                check.pass = false;
                check.detail += psi.name + " has negative coefficient " + a.to_string() + " on " +
                                res.model.cols()[j].name + "; ";
                break;
            }
            if (!is_integer(a.constant()) || !is_integer(a.coeff(Unknown::MExp))) {
                check.pass = false;
                check.detail += psi.name + " has non-integral coefficient on " +
                                res.model.cols()[j].name + "; ";
                break;
            }
            for (int r = 0; r < n; ++r) residual[r] -= a * mat[r][j];
        }
        for (int r = 0; r < n; ++r)
            if (!residual[r].is_zero()) {
                check.pass = false;
                check.detail += psi.name + " leaves a nonzero residual; ";
                break;
            }
    }
    return check;
}

AuditCheck audit_relations(const SolveResult& res) {
    AuditCheck check{"relations expand nonnegatively over the Brauer characters", true, ""};
    const auto mat = res.model.matrix();
    const int n = res.model.size();
    const auto& set = UniCharSet::enumerate(res.model.rank());
    for (const auto& rel : res.relations) {
        for (int c = 0; c < n; ++c) {
            Rational s(0);
            for (int r = 0; r < n; ++r)
                s += rel.vec.coeff[set.index_of(res.model.rows()[r])] * mat[r][c];
            if (s < 0 || !is_integer(s)) {
                check.pass = false;
                check.detail += rel.name + " has multiplicity " + to_string(s) + " at " +
                                res.model.cols()[c].name + "; ";
            }
        }
    }
    return check;
}

AuditCheck audit_dudas(const SolveResult& res) {
    AuditCheck check{"minimal-length sign bounds hold at the solution", true, ""};
    const LusztigContext& ctx = LusztigContext::get(res.model.rank());
    std::vector<Affine> phi = steinberg_brauer_vector(res.model);
    for (auto& a : phi)
        for (const auto& [u, value] : res.unknown_values) a = a.substitute(u, Affine(value));
    // the minimal nonvanishing class must pair with the right sign
    const PairingScan scan = ctx.minimal_nonvanishing(phi);
    for (const auto& [cid, expr] : scan.at_min_length) {
        const Rational v = *expr.constant_value() * Rational(scan.length % 2 ? -1 : 1);
        if (v < 0) {
            check.pass = false;
            check.detail += "class " + std::to_string(cid) + " pairs to " + expr.to_string() + "; ";
        }
    }
    // and the named bounds themselves are satisfied
    auto word_pairing = [&](const std::vector<int>& w) {
        return *ctx.brauer_pairing(ctx.dl_character(w), phi).constant_value();
    };
    if (res.model.rank() == 2) {
        if (word_pairing({1, 2}) < 0) {
            check.pass = false;
            check.detail += "pairing at the length-2 class is negative; ";
        }
    } else {
        if (word_pairing({1, 2, 3}) > 0 || word_pairing({1, 2, 1, 2, 3}) > 0) {
            check.pass = false;
            check.detail += "an odd-length pairing is positive; ";
        }
    }
    return check;
}

AuditCheck audit_shape(const SolveResult& res) {
    AuditCheck check{"resolved matrix is lower unitriangular and nonnegative", true, ""};
    const auto mat = res.model.matrix();
    const int n = res.model.size();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Rational& v = mat[r][c];
            const bool ok = c > r ? v == 0 : (c == r ? v == 1 : (v >= 0 && is_integer(v)));
            if (!ok) {
                check.pass = false;
                check.detail += "bad entry at (" + std::to_string(r) + "," + std::to_string(c) + "); ";
            }
        }
    return check;
}

}  // namespace

std::vector<AuditCheck> run_audit(const SolveResult& result) {
    std::vector<AuditCheck> checks;
    checks.push_back(audit_shape(result));
    checks.push_back(audit_psi_decomposition(result));
    checks.push_back(audit_relations(result));
    checks.push_back(audit_dudas(result));
    return checks;
}

}  // namespace decmat
