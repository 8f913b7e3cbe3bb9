#include "decmat/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace decmat {

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "?";
}

OutputFormat parse_format_or_throw(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format '" + s + "' (text, json, csv)");
}

bool Report::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

std::string render_text(const Report& r) {
    std::ostringstream os;
    for (const auto& t : r.tables) {
        if (!t.title.empty()) os << t.title << "\n";
        size_t label_w = 0;
        for (const auto& l : t.row_labels) label_w = std::max(label_w, l.size());
        std::vector<size_t> col_w(t.column_labels.size());
        for (size_t c = 0; c < t.column_labels.size(); ++c) {
            col_w[c] = t.column_labels[c].size();
            for (const auto& row : t.cells)
                if (c < row.size()) col_w[c] = std::max(col_w[c], row[c].size());
        }
        os << std::string(label_w, ' ');
        for (size_t c = 0; c < t.column_labels.size(); ++c)
            os << "  " << std::string(col_w[c] - t.column_labels[c].size(), ' ')
               << t.column_labels[c];
        os << "\n";
        for (size_t rr = 0; rr < t.cells.size(); ++rr) {
            const std::string& lbl = rr < t.row_labels.size() ? t.row_labels[rr] : "";
            os << lbl << std::string(label_w - lbl.size(), ' ');
            for (size_t c = 0; c < t.cells[rr].size(); ++c)
                os << "  " << std::string(col_w[c] - t.cells[rr][c].size(), ' ') << t.cells[rr][c];
            os << "\n";
        }
        for (const auto& n : t.notes) os << "note: " << n << "\n";
        os << "\n";
    }
    for (const auto& [name, pass] : r.checks)
        os << (pass ? "PASS" : "FAIL") << "  " << name << "\n";
    return os.str();
}

std::string render_json(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["tables"] = nlohmann::json::array();
    for (const auto& t : r.tables) {
        nlohmann::json jt;
        jt["title"] = t.title;
        jt["columns"] = t.column_labels;
        jt["rows"] = t.row_labels;
        jt["cells"] = t.cells;
        jt["notes"] = t.notes;
        j["tables"].push_back(jt);
    }
    j["checks"] = nlohmann::json::array();
    for (const auto& [name, pass] : r.checks)
        j["checks"].push_back({{"name", name}, {"pass", pass}});
    return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    for (const auto& t : r.tables) {
        if (!t.title.empty()) os << "# " << t.title << "\n";
        os << "label";
        for (const auto& c : t.column_labels) os << "," << csv_escape(c);
        os << "\n";
        for (size_t rr = 0; rr < t.cells.size(); ++rr) {
            os << csv_escape(rr < t.row_labels.size() ? t.row_labels[rr] : "");
            for (const auto& cell : t.cells[rr]) os << "," << csv_escape(cell);
            os << "\n";
        }
    }
    for (const auto& [name, pass] : r.checks)
        os << csv_escape(name) << "," << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace

std::string Report::render(OutputFormat f) const {
    switch (f) {
        case OutputFormat::Text: return render_text(*this);
        case OutputFormat::Json: return render_json(*this);
        case OutputFormat::Csv: return render_csv(*this);
    }
    return {};
}

}  // namespace decmat
