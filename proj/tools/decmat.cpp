#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decmat/blocks.hpp"
#include "decmat/decsolve.hpp"
#include "decmat/report.hpp"
#include "decmat/verify.hpp"

namespace {

using namespace decmat;

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> word;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        for (char& c : tok)
            if (c == ',') c = ' ';
        std::istringstream inner(tok);
        int v;
        while (inner >> v) word.push_back(v);
    }
    return word;
}

std::string echo(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

Report degrees_report(int rank) {
    const auto& set = UniCharSet::enumerate(rank);
    Table t;
    t.title = "unipotent character degrees, rank " + std::to_string(rank);
    t.column_labels = {"symbol", "degree", "family", "block"};
    for (int i = 0; i < set.size(); ++i) {
        t.row_labels.push_back(set.label(i).name());
        t.cells.push_back({set.label(i).symbol().to_string(), set.degree(i).to_factored_string(),
                           std::to_string(set.family_of(i) + 1), to_string(set.block(i))});
    }
    Report r;
    r.tables.push_back(std::move(t));
    return r;
}

Report tree_report(const std::string& group, EllCase cs) {
    ParabolicGroup g;
    if (group == "P5")
        g = ParabolicGroup::P5;
    else if (group == "P7")
        g = ParabolicGroup::P7;
    else if (group == "P6star")
        g = ParabolicGroup::P6star;
    else
        throw CLI::ValidationError("--group", "expected P5, P7 or P6star");
    const BrauerTreeLine tree = parabolic_tree(g, cs);
    Table t;
    t.title = "cyclic block of " + group + ", case " + to_string(cs);
    t.column_labels = {"value"};
    t.row_labels = {"xi1", "xi_exc", "xi2", "exceptional multiplicity", "PIM(xi1)", "PIM(xi2)"};
    const auto [p1, p2] = tree.pim_characters();
    t.cells = {{tree.xi1},
               {tree.xi_exc},
               {tree.xi2},
               {tree.exceptional_multiplicity.to_string()},
               {p1},
               {p2}};
    if (g == ParabolicGroup::P6star) t.notes.push_back("assumes odd q");
    Report r;
    r.tables.push_back(std::move(t));
    return r;
}

Report dl_report(int rank, const std::vector<int>& word) {
    const LusztigContext& ctx = LusztigContext::get(rank);
    const SignedPerm w = ctx.weyl().word_element(word);
    const VirtualUniChar v = ctx.dl_character(w);
    const auto data = ctx.weyl().class_data(word);
    Table t;
    t.title = "R_w expansion";
    t.column_labels = {"coefficient"};
    const auto& set = UniCharSet::enumerate(rank);
    for (int i = 0; i < set.size(); ++i) {
        if (v.coeff[i] == 0) continue;
        t.row_labels.push_back(set.label(i).name());
        t.cells.push_back({to_string(v.coeff[i])});
    }
    t.notes.push_back("element " + w.to_string() + ", length " + std::to_string(data.length) +
                      ", class " + std::to_string(data.class_id) + ", centralizer order " +
                      std::to_string(data.centralizer_order));
    t.notes.push_back("det(q*id - w) = " + data.char_poly.to_string());
    t.notes.push_back("degree = " + v.degree().to_factored_string());
    Report r;
    r.tables.push_back(std::move(t));
    return r;
}

Report psi_report(int rank, EllCase cs) {
    std::vector<ProjColumn> cols;
    if (rank == 3) {
        const SolveResult so5 = solve(2, cs);
        const LeviPims pims = levi_pims_from(so5);
        cols = psi_columns(3, cs, &pims);
    } else {
        cols = psi_columns(2, cs, nullptr);
    }
    const DecModel model = build_model(rank, cs);
    Table t;
    t.title = "projective column scalar products, rank " + std::to_string(rank) + ", case " +
              to_string(cs);
    for (const auto& col : cols) t.column_labels.push_back(col.name);
    for (int r = 0; r < model.size(); ++r) {
        t.row_labels.push_back(model.rows()[r].name());
        std::vector<std::string> row;
        for (const auto& col : cols) row.push_back(col.values[r].to_string());
        t.cells.push_back(std::move(row));
    }
    for (const auto& col : cols)
        for (const auto& [label, coeff] : col.dropped)
            t.notes.push_back(col.name + " drops " + to_string(coeff) + " * " + label +
                              " outside the principal block");
    Report r;
    r.tables.push_back(std::move(t));
    return r;
}

Report relations_report(int rank, EllCase cs) {
    const auto rels = LusztigContext::get(rank).relation_vectors(cs);
    const auto& set = UniCharSet::enumerate(rank);
    Table t;
    t.title = "relation vectors, rank " + std::to_string(rank) + ", case " + to_string(cs);
    for (int i = 0; i < set.size(); ++i) t.column_labels.push_back(set.label(i).name());
    for (const auto& rel : rels) {
        t.row_labels.push_back(rel.name);
        std::vector<std::string> row;
        for (const auto& c : rel.vec.coeff) row.push_back(to_string(c));
        t.cells.push_back(std::move(row));
    }
    Report r;
    r.tables.push_back(std::move(t));
    return r;
}

Report solve_report(int rank, EllCase cs, const std::string& mode) {
    const SolveResult res = mode == "verify" ? verify_tables(rank, cs) : solve(rank, cs);
    Report r;
    Table t;
    t.title = "decomposition matrix, rank " + std::to_string(rank) + ", case " + to_string(cs) +
              " (" + mode + " mode)";
    for (const auto& c : res.model.cols()) t.column_labels.push_back(c.name);
    if (res.resolved) {
        const auto mat = res.model.matrix();
        for (int rr = 0; rr < res.model.size(); ++rr) {
            t.row_labels.push_back(res.model.rows()[rr].name());
            std::vector<std::string> row;
            for (int cc = 0; cc < res.model.size(); ++cc)
                row.push_back(mat[rr][cc] == 0 ? "." : to_string(mat[rr][cc]));
            t.cells.push_back(std::move(row));
        }
        std::string series = "series:";
        for (const auto& c : res.model.cols()) series += " " + to_string(c.series);
        t.notes.push_back(series);
        for (const auto& [u, v] : res.unknown_values)
            t.notes.push_back(std::string(unknown_name(u)) + " = " + to_string(v));
        std::string fams = "load-bearing constraint families:";
        for (const auto& f : res.model.load_bearing_families()) fams += " " + f;
        t.notes.push_back(fams);
        if (res.dudas_used) t.notes.push_back("sign bound used");
        for (const auto& check : res.audit) r.checks.emplace_back(check.name, check.pass);
    } else {
        t.notes.push_back("unresolved entries remain:");
        for (const auto& line : res.model.unresolved_report()) t.notes.push_back("  " + line);
        r.checks.emplace_back("model resolved", false);
    }
    r.tables.push_back(std::move(t));
    return r;
}

Report verify_all_report() {
    Report r;
    for (const auto& cr : run_acceptance())
        r.checks.emplace_back("criterion " + std::to_string(cr.number) + ": " + cr.name +
                                  (cr.pass ? "" : " -- " + cr.detail),
                              cr.pass);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decomposition-matrix pipeline for the rank-2/3 orthogonal and symplectic groups"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format: text, json, csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json", "csv"}));

    int rank = 3;
    std::string case_str = "large";
    std::string word_str;
    std::string mode = "derive";
    std::string which = "degrees";
    std::string group = "P7";

    auto add_rank = [&](CLI::App* cmd) {
        cmd->add_option("--rank", rank, "group rank: 2 or 3")->check(CLI::IsMember({2, 3}));
    };
    auto add_case = [&](CLI::App* cmd) {
        cmd->add_option("--case", case_str, "ell-adic case: 3, 5 or large")
            ->check(CLI::IsMember({"3", "5", "large"}));
    };

    CLI::App* table = app.add_subcommand("table", "print a data table");
    table->add_option("which", which, "degrees or tree")->check(CLI::IsMember({"degrees", "tree"}));
    add_rank(table);
    add_case(table);
    table->add_option("--group", group, "parabolic subgroup for 'tree': P5, P7 or P6star");

    CLI::App* dl = app.add_subcommand("dl", "expand a torus character over the unipotent basis");
    add_rank(dl);
    dl->add_option("--word", word_str, "generator word, e.g. \"1 2 3\"")->required();

    CLI::App* psi = app.add_subcommand("psi", "print the projective column table");
    add_rank(psi);
    add_case(psi);

    CLI::App* relations = app.add_subcommand("relations", "print the relation vectors");
    add_rank(relations);
    add_case(relations);

    CLI::App* solve_cmd = app.add_subcommand("solve", "derive or verify the decomposition matrix");
    add_rank(solve_cmd);
    add_case(solve_cmd);
    solve_cmd->add_option("--mode", mode, "derive or verify")
        ->check(CLI::IsMember({"derive", "verify"}));

    CLI::App* verify_all = app.add_subcommand("verify-all", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const EllCase cs = *parse_ell_case(case_str);
        Report report;
        if (table->parsed())
            report = which == "tree" ? tree_report(group, cs) : degrees_report(rank);
        else if (dl->parsed())
            report = dl_report(rank, parse_word(word_str));
        else if (psi->parsed())
            report = psi_report(rank, cs);
        else if (relations->parsed())
            report = relations_report(rank, cs);
        else if (solve_cmd->parsed())
            report = solve_report(rank, cs, mode);
        else if (verify_all->parsed())
            report = verify_all_report();
        report.command = echo(argc, argv);
        std::cout << report.render(parse_format_or_throw(format));
        return report.all_checks_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
