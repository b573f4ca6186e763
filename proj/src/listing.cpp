#include "halfcode/listing.hpp"

#include <sstream>

#include "halfcode/poly.hpp"

namespace halfcode {

std::string format_listing(const std::vector<LinearCode>& codes) {
    std::string out;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        out += "# " + std::to_string(i + 1) + "\n";
        out += format_matrix(codes[i].generator());
        out += "\n";
    }
    return out;
}

std::vector<LinearCode> parse_listing(const std::string& text, PrimeModulus p) {
    std::vector<LinearCode> codes;
    std::vector<std::vector<Residue>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    auto flush_block = [&](std::size_t at_line) {
        if (rows.empty()) return;
        try {
            codes.push_back(LinearCode::from_generator(MatrixFp::from_rows(rows, p)));
        } catch (const rank_deficiency&) {
            throw parse_error("code block has linearly dependent rows", at_line);
        }
        rows.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        // strip whitespace-only lines down to block separators
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            flush_block(line_no);
            continue;
        }
        if (line[first] == '#') {
            flush_block(line_no);
            continue;
        }
        std::istringstream ls(line);
        std::vector<Residue> row;
        std::int64_t v;
        while (ls >> v) row.push_back(p.reduce(v));
        if (!ls.eof()) throw parse_error("malformed row entry", line_no);
        if (row.empty()) throw parse_error("empty row", line_no);
        if (!rows.empty() && row.size() != rows[0].size())
            throw parse_error("row length differs from previous rows", line_no);
        rows.push_back(std::move(row));
    }
    flush_block(line_no + 1);
    if (codes.empty()) throw parse_error("listing contains no codes", line_no);
    return codes;
}

nlohmann::json matrix_to_json(const MatrixFp& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixFp matrix_from_json(const nlohmann::json& j, PrimeModulus p) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix JSON must be a nonempty array");
    std::vector<std::vector<Residue>> rows;
    for (const auto& jr : j) {
        if (!jr.is_array()) throw parse_error("matrix row must be an array");
        std::vector<Residue> row;
        for (const auto& v : jr) row.push_back(p.reduce(v.get<std::int64_t>()));
        rows.push_back(std::move(row));
    }
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw parse_error("ragged matrix JSON");
    return MatrixFp::from_rows(rows, p);
}

nlohmann::json listing_to_json(const DecompositionCtx& ctx, const std::vector<LinearCode>& codes) {
    nlohmann::json doc;
    doc["p"] = ctx.field->modulus().value();
    doc["k"] = ctx.k;
    doc["n"] = ctx.field->degree();
    doc["f"] = ctx.field->poly().coeffs();
    doc["xi"] = ctx.xi.coords();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : codes) arr.push_back(matrix_to_json(c.generator()));
    doc["codes"] = std::move(arr);
    return doc;
}

std::vector<LinearCode> listing_from_json(const nlohmann::json& doc) {
    if (!doc.contains("p") || !doc.contains("codes"))
        throw parse_error("listing JSON needs 'p' and 'codes'");
    PrimeModulus p(doc["p"].get<std::uint64_t>());
    std::vector<LinearCode> codes;
    for (const auto& jc : doc["codes"])
        codes.push_back(LinearCode::from_generator(matrix_from_json(jc, p)));
    return codes;
}

} // namespace halfcode
