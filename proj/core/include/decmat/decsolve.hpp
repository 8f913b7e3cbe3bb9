#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decmat/hc.hpp"
#include "decmat/lusztig.hpp"

namespace decmat {

/*
  The decomposition matrix of the principal block is modeled as a lower
  unitriangular integer matrix whose sub-diagonal entries start as the
  interval [0, inf) and are tightened to a point by four constraint
  families:

    - projective columns: each Psi is a nonnegative integral combination of
      the unknown PIM columns with unit diagonal coefficient, which yields
      upper bounds and, once the combination collapses, exact values;
    - cuspidal support: a Harish-Chandra induced projective only contains
      PIMs of the modular series determined by its source, which shrinks
      the combination above to the matching columns (cuspidal columns are
      never hit);
    - relations: restrictions of actual characters expand nonnegatively
      over the Brauer characters, giving one linear inequality per column;
      the same machinery carries the permutation-module bound, since ell
      divides the parabolic index the trivial Brauer character appears at
      least twice in the principal-block part of the permutation character;
    - the sign bound: for the minimal-length class pairing nontrivially
      with the cuspidal Steinberg column, (-1)^l(w) times the pairing is
      nonnegative, and the scan is repeated after substitution.

  Propagation is monotone interval tightening, so the fixpoint exists; the
  solver reports surviving intervals instead of guessing.
*/

struct EntryBound {
    Affine lo;                 // always >= 0
    std::optional<Affine> hi;  // empty = unbounded

    bool fixed() const { return hi && lo == *hi; }
};

struct ColumnInfo {
    std::string name;
    ModSeries series;
};

class DecModel {
public:
    DecModel(int rank, EllCase c);

    int rank() const { return rank_; }
    EllCase ell_case() const { return case_; }
    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<UniLabel>& rows() const { return rows_; }
    const std::vector<ColumnInfo>& cols() const { return cols_; }
    const EntryBound& entry(int r, int c) const { return entries_[r][c]; }

    std::optional<Unknown> unknown_at(int r, int c) const;
    const std::map<Unknown, std::pair<int, int>>& unknown_positions() const { return unknowns_; }

    bool tighten_lo(int r, int c, const Affine& v, const std::string& family, const std::string& why);
    bool tighten_hi(int r, int c, const Affine& v, const std::string& family, const std::string& why);
    void set_exact(int r, int c, const Affine& v, const std::string& family, const std::string& why);

    bool resolved() const;
    std::vector<std::string> unresolved_report() const;

    /// Fixed value, or the unknown's symbol at a designated position.
    Affine entry_affine(int r, int c) const;

    /// Resolved integer matrix; throws when not resolved.
    std::vector<std::vector<Rational>> matrix() const;

    struct LogLine {
        std::string family;
        std::string what;
    };
    const std::vector<LogLine>& log() const { return log_; }
    std::vector<std::string> load_bearing_families() const;

private:
    int rank_;
    EllCase case_;
    std::vector<UniLabel> rows_;
    std::vector<ColumnInfo> cols_;
    std::vector<std::vector<EntryBound>> entries_;
    std::map<Unknown, std::pair<int, int>> unknowns_;
    std::vector<LogLine> log_;
};

DecModel build_model(int rank, EllCase c);

/// One peeling pass over all Psi columns without series information.
bool apply_projective_columns(DecModel& model, const std::vector<ProjColumn>& columns);

/// One peeling pass restricted by modular series matching; subsumes the rule
/// that columns induced from proper Levi subgroups avoid cuspidal PIMs.
bool apply_cuspidal_support(DecModel& model, const std::vector<ProjColumn>& columns);

/// One propagation pass of the relation inequalities over every column.
bool apply_relations(DecModel& model, const std::vector<Relation>& relations);

/// The permutation-module lower bound on the first column.
bool apply_permutation_bound(DecModel& model);

/// Iterated minimal-length sign bound; returns true if anything tightened.
bool apply_dudas(DecModel& model);

/// Brauer-character coordinates of the cuspidal Steinberg column in the
/// basic set, affine in the designated unknowns (last row of the inverse).
std::vector<Affine> steinberg_brauer_vector(const DecModel& model);

struct SolveOptions {
    bool use_projectives = true;
    bool use_cuspidal_support = true;
    bool use_relations = true;
    bool use_dudas = true;
};

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SolveResult {
    explicit SolveResult(DecModel m) : model(std::move(m)) {}

    DecModel model;
    bool resolved = false;
    bool dudas_used = false;
    std::map<Unknown, Rational> unknown_values;
    std::vector<ProjColumn> psi;
    std::vector<Relation> relations;
    std::vector<AuditCheck> audit;

    bool audit_passed() const;
};

/// Derivation mode: staged rank-2 -> rank-3 constraint propagation.
SolveResult solve(int rank, EllCase c, const SolveOptions& options = {});

/// Verification mode: load the published matrix for the case and run the
/// soundness audit against the same constraint data.
SolveResult verify_tables(int rank, EllCase c);

/// Published final matrix with symbolic entries (0, 1, alpha, beta, gamma).
std::vector<std::vector<Affine>> final_table(int rank);

/// The known values of the unknowns per case.
std::map<Unknown, Rational> published_values(int rank, EllCase c);

/// PIM columns of a resolved rank-2 model, for the staged rank-3 run.
LeviPims levi_pims_from(const SolveResult& rank2);

/// Soundness audit: Psi columns decompose nonnegatively over the final PIM
/// columns, relations expand nonnegatively over the Brauer characters, and
/// the sign bounds hold at the solution.
std::vector<AuditCheck> run_audit(const SolveResult& result);

}  // namespace decmat
