#include "ncm/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncm::io {

namespace {

constexpr int kMaxDim = 256;

std::string entry_pos(int i, int j) {
    return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

double number_field(const nlohmann::json& cell, const char* key, int i, int j) {
    if (!cell.contains(key))
        throw std::invalid_argument("matrix " + entry_pos(i, j) + ": missing '" + key + "'");
    const auto& f = cell.at(key);
    if (!f.is_number())
        throw std::invalid_argument("matrix " + entry_pos(i, j) + ": '" + key +
                                    "' is not a number");
    return f.get<double>();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    std::ostringstream out;
    out << "{\"n\": " << m.dim() << ", \"entries\": [";
    for (int i = 0; i < m.dim(); ++i) {
        if (i) out << ", ";
        out << "[";
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ", ";
            out << "{\"re\": " << format_double(m(i, j).real())
                << ", \"im\": " << format_double(m(i, j).imag()) << "}";
        }
        out << "]";
    }
    out << "]}\n";
    return out.str();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix file must be an object with 'n' and 'entries'");
    if (!j.at("n").is_number_integer())
        throw std::invalid_argument("matrix field 'n' must be an integer");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    if (n > kMaxDim)
        throw std::invalid_argument("matrix dimension exceeds the supported maximum of " +
                                    std::to_string(kMaxDim));
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("'entries' must be an array of " + std::to_string(n) +
                                    " rows");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " must have " +
                                        std::to_string(n) + " entries");
        for (int jcol = 0; jcol < n; ++jcol) {
            const auto& cell = row.at(jcol);
            if (!cell.is_object())
                throw std::invalid_argument("matrix " + entry_pos(i, jcol) +
                                            ": expected {\"re\":..., \"im\":...}");
            const double re = number_field(cell, "re", i, jcol);
            const double im = number_field(cell, "im", i, jcol);
            if (!std::isfinite(re) || !std::isfinite(im))
                throw std::invalid_argument("matrix " + entry_pos(i, jcol) +
                                            ": entries must be finite");
            m(i, jcol) = cplx{re, im};
        }
    }
    return m;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return matrix_from_json(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void save_matrix(const ComplexMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << matrix_to_json(m);
}

}  // namespace ncm::io
