#pragma once

#include <string>
#include <vector>

namespace decmat {

enum class OutputFormat { Text, Json, Csv };

std::string to_string(OutputFormat f);
OutputFormat parse_format_or_throw(const std::string& s);

/// Row/column labeled table of exact values rendered as strings; the
/// structured formats round-trip the cell strings losslessly.
struct Table {
    std::string title;
    std::vector<std::string> column_labels;
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> notes;
};

/// A command's structured output: the echoed command line, its tables and
/// any pass/fail lines from verification runs.
struct Report {
    std::string command;
    std::vector<Table> tables;
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks_pass() const;
    std::string render(OutputFormat f) const;
};

}  // namespace decmat
