#include "unimat/int_mat.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace unimat {

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    if (r == 0) throw BadShape("from_rows: no rows");
    std::size_t c = rows.begin()->size();
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw BadShape("from_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMat transpose(const IntMat& a) {
    if (a.is_empty()) throw EmptyInput("transpose: empty matrix");
    IntMat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

IntMat mul(const IntMat& a, const IntMat& b) {
    if (a.is_empty() || b.is_empty()) throw EmptyInput("mul: empty matrix");
    if (a.cols() != b.rows()) throw BadShape("mul: inner dimensions disagree");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw BadShape("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

Int max_norm(const IntMat& a) {
    if (a.is_empty()) throw EmptyInput("max_norm: empty matrix");
    Int best = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (mpz_cmpabs(a(i, j).get_mpz_t(), best.get_mpz_t()) > 0) best = abs(a(i, j));
        }
    return best;
}

namespace {

bool is_integer_token(const std::string& tok) {
    std::size_t start = (tok[0] == '-') ? 1 : 0;
    if (start == tok.size()) return false;
    for (std::size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

Int parse_int_token(const std::string& tok, const char* what) {
    if (tok.empty() || !is_integer_token(tok))
        throw NonIntegerToken(std::string(what) + ": bad integer token '" + tok + "'");
    return Int(tok);
}

IntMat parse_matrix_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedHeader(std::string("parse_matrix: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw MalformedHeader("parse_matrix: JSON object needs rows/cols/data");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw MalformedHeader("parse_matrix: rows/cols must be nonnegative integers");
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    if (cols == 0) throw MalformedHeader("parse_matrix: cols must be >= 1");
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != rows)
        throw RowLengthMismatch("parse_matrix: data must hold exactly 'rows' rows");
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = data[i];
        if (!row.is_array() || row.size() != cols)
            throw RowLengthMismatch("parse_matrix: JSON row " + std::to_string(i + 1) +
                                    " has wrong length");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = row[k];
            if (cell.is_number_integer()) {
                m(i, k) = Int(static_cast<long>(cell.get<std::int64_t>()));
            } else if (cell.is_string()) {
                // big entries travel as decimal strings
                m(i, k) = parse_int_token(cell.get<std::string>(), "parse_matrix");
            } else {
                throw NonIntegerToken("parse_matrix: JSON entries must be integers or strings");
            }
        }
    }
    return m;
}

}  // namespace

IntMat parse_matrix(std::string_view text) {
    std::size_t p = 0;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (p == text.size()) throw MalformedHeader("parse_matrix: empty input");
    if (text[p] == '{') return parse_matrix_json(text.substr(p));

    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw MalformedHeader("parse_matrix: missing header line");
    std::istringstream head(line);
    std::string rtok, ctok, extra;
    if (!(head >> rtok >> ctok) || (head >> extra))
        throw MalformedHeader("parse_matrix: header must be '<rows> <cols>'");
    Int rz = parse_int_token(rtok, "parse_matrix header");
    Int cz = parse_int_token(ctok, "parse_matrix header");
    if (rz < 0 || cz < 1 || !rz.fits_ulong_p() || !cz.fits_ulong_p())
        throw MalformedHeader("parse_matrix: bad dimensions in header");
    std::size_t rows = rz.get_ui(), cols = cz.get_ui();

    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!std::getline(in, line))
            throw RowLengthMismatch("parse_matrix: expected " + std::to_string(rows) +
                                    " rows, got " + std::to_string(i));
        std::istringstream ls(line);
        std::string tok;
        std::size_t j = 0;
        while (ls >> tok) {
            if (j >= cols)
                throw RowLengthMismatch("parse_matrix: row " + std::to_string(i + 1) +
                                        " has more than " + std::to_string(cols) + " entries");
            m(i, j++) = parse_int_token(tok, "parse_matrix");
        }
        if (j != cols)
            throw RowLengthMismatch("parse_matrix: row " + std::to_string(i + 1) + " has " +
                                    std::to_string(j) + " entries, expected " +
                                    std::to_string(cols));
    }
    std::string rest;
    while (std::getline(in, rest)) {
        for (char ch : rest)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                throw RowLengthMismatch("parse_matrix: trailing data after last row");
    }
    return m;
}

std::string serialize_matrix(const IntMat& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ' ';
            out += a(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

std::string to_string(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    out += ")";
    return out;
}

}  // namespace unimat
