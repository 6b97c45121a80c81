#include "sonn/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sonn {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

double parse_double_cell(const std::string& cell, const std::string& name, std::size_t line_no) {
    const std::string t = trim(cell);
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (t.empty() || end != begin + t.size()) {
        throw Error(name + ": line " + std::to_string(line_no) + ": non-numeric cell '" + cell + "'");
    }
    if (!std::isfinite(v)) {
        throw Error(name + ": line " + std::to_string(line_no) + ": non-finite value '" + cell + "'");
    }
    return v;
}

long long parse_int_cell(const std::string& cell, const std::string& name, std::size_t line_no) {
    const std::string t = trim(cell);
    const char* begin = t.c_str();
    char* end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (t.empty() || end != begin + t.size()) {
        throw Error(name + ": line " + std::to_string(line_no) + ": non-integer cell '" + cell + "'");
    }
    return v;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return in;
}

// Physical lines, with a trailing \r stripped; the final newline does
// not produce a phantom empty line.
std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

Dataset parse_csv(std::istream& in, bool has_header, const std::string& name) {
    const std::vector<std::string> lines = read_lines(in);
    if (lines.empty()) throw Error(name + ": empty file");

    std::size_t first_data = 0;
    bool with_labels = false;
    std::size_t columns = 0;
    if (has_header) {
        const std::vector<std::string> header = split(lines[0], ',');
        if (header.empty()) throw Error(name + ": line 1: empty header");
        columns = header.size();
        with_labels = trim(header.back()) == "label";
        first_data = 1;
    }

    std::vector<Vector> rows;
    std::vector<int> labels;
    for (std::size_t i = first_data; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (trim(lines[i]).empty()) {
            throw Error(name + ": line " + std::to_string(line_no) + ": blank line");
        }
        const std::vector<std::string> cells = split(lines[i], ',');
        if (columns == 0) columns = cells.size();
        if (cells.size() != columns) {
            throw Error(name + ": line " + std::to_string(line_no) + ": expected " +
                        std::to_string(columns) + " columns, got " + std::to_string(cells.size()));
        }
        const std::size_t dim = with_labels ? columns - 1 : columns;
        if (dim == 0) throw Error(name + ": line " + std::to_string(line_no) + ": no feature columns");
        Vector row(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            row[j] = parse_double_cell(cells[j], name, line_no);
        }
        rows.push_back(std::move(row));
        if (with_labels) {
            labels.push_back(static_cast<int>(parse_int_cell(cells.back(), name, line_no)));
        }
    }
    if (rows.empty()) throw Error(name + ": no data rows");
    return Dataset(std::move(rows), std::move(labels));
}

Dataset ingest_csv(const std::string& path, bool has_header) {
    std::ifstream in = open_input(path);
    return parse_csv(in, has_header, path);
}

void write_dataset_csv(std::ostream& out, const Dataset& d) {
    for (std::size_t j = 0; j < d.dim; ++j) {
        out << (j == 0 ? "" : ",") << "x" << j;
    }
    if (d.has_labels()) out << ",label";
    out << "\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.dim; ++j) {
            out << (j == 0 ? "" : ",") << format_double(d.rows[i][j]);
        }
        if (d.has_labels()) out << "," << d.labels[i];
        out << "\n";
    }
}

void write_codebook(std::ostream& out, const Codebook& cb) {
    const std::size_t dim = cb.vectors.empty() ? 0 : cb.vectors.front().size();
    out << "id";
    for (std::size_t j = 0; j < dim; ++j) out << ",w" << j;
    out << "," << cb.aux_name << "\n";
    for (std::size_t i = 0; i < cb.ids.size(); ++i) {
        out << cb.ids[i];
        for (double v : cb.vectors[i]) out << "," << format_double(v);
        out << "," << format_double(cb.aux[i]) << "\n";
    }
}

Codebook read_codebook(const std::string& path) {
    std::ifstream in = open_input(path);
    const std::vector<std::string> lines = read_lines(in);
    if (lines.empty()) throw Error(path + ": empty file");
    const std::vector<std::string> header = split(lines[0], ',');
    if (header.size() < 3 || trim(header.front()) != "id") {
        throw Error(path + ": line 1: expected header id,w0,...,<aux>");
    }
    Codebook cb;
    cb.aux_name = trim(header.back());
    const std::size_t dim = header.size() - 2;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::vector<std::string> cells = split(lines[i], ',');
        if (cells.size() != header.size()) {
            throw Error(path + ": line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " columns, got " + std::to_string(cells.size()));
        }
        cb.ids.push_back(static_cast<int>(parse_int_cell(cells[0], path, line_no)));
        Vector w(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            w[j] = parse_double_cell(cells[j + 1], path, line_no);
        }
        cb.vectors.push_back(std::move(w));
        cb.aux.push_back(parse_double_cell(cells.back(), path, line_no));
    }
    if (cb.ids.empty()) throw Error(path + ": no codebook rows");
    return cb;
}

void write_edges(std::ostream& out, std::span<const EdgeRecord> edges) {
    for (const EdgeRecord& e : edges) {
        out << e.a << " " << e.b;
        if (e.tag) out << " " << *e.tag;
        out << "\n";
    }
}

std::vector<EdgeRecord> read_edges(const std::string& path) {
    std::ifstream in = open_input(path);
    const std::vector<std::string> lines = read_lines(in);
    std::vector<EdgeRecord> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        std::istringstream row(lines[i]);
        EdgeRecord e;
        long long tag = 0;
        if (!(row >> e.a >> e.b)) {
            throw Error(path + ": line " + std::to_string(i + 1) + ": expected 'a b [tag]'");
        }
        if (row >> tag) e.tag = tag;
        out.push_back(e);
    }
    return out;
}

void write_assignments(std::ostream& out, std::span<const std::pair<std::size_t, long long>> rows) {
    out << "row_index,unit_id\n";
    for (const auto& [row, unit] : rows) {
        out << row << "," << unit << "\n";
    }
}

std::vector<std::pair<std::size_t, long long>> read_assignments(const std::string& path) {
    std::ifstream in = open_input(path);
    const std::vector<std::string> lines = read_lines(in);
    if (lines.empty() || trim(lines[0]) != "row_index,unit_id") {
        throw Error(path + ": expected header row_index,unit_id");
    }
    std::vector<std::pair<std::size_t, long long>> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split(lines[i], ',');
        if (cells.size() != 2) {
            throw Error(path + ": line " + std::to_string(i + 1) + ": expected two columns");
        }
        out.emplace_back(static_cast<std::size_t>(parse_int_cell(cells[0], path, i + 1)),
                         parse_int_cell(cells[1], path, i + 1));
    }
    return out;
}

void write_key_values(std::ostream& out, std::span<const std::pair<std::string, std::string>> kv) {
    for (const auto& [key, value] : kv) {
        out << key << " = " << value << "\n";
    }
}

std::vector<std::pair<std::string, std::string>> parse_key_values(std::istream& in,
                                                                  const std::string& name) {
    const std::vector<std::string> lines = read_lines(in);
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(name + ": line " + std::to_string(i + 1) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw Error(name + ": line " + std::to_string(i + 1) + ": empty key");
        }
        out.emplace_back(key, value);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_key_values(const std::string& path) {
    std::ifstream in = open_input(path);
    return parse_key_values(in, path);
}

}  // namespace sonn
