#include "achro/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace achro {

bool ColorMatrix::total() const {
    return std::none_of(cells.begin(), cells.end(),
                        [](Color c) { return c == kUnassigned; });
}

bool ColorMatrix::well_formed() const {
    if (rows < 1 || cols < 1 || palette < 1) return false;
    if (cells.size() != static_cast<size_t>(rows) * cols) return false;
    return std::all_of(cells.begin(), cells.end(),
                       [this](Color c) { return c >= 0 && c <= palette; });
}

ColorMatrix make_matrix(std::initializer_list<std::initializer_list<Color>> rows, int k) {
    const int p = static_cast<int>(rows.size());
    const int q = p > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    Color maxc = 0;
    for (const auto& r : rows)
        for (Color c : r) maxc = std::max(maxc, c);
    ColorMatrix m(p, q, k > 0 ? k : maxc);
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (Color c : r) m.at(i, j++) = c;
        ++i;
    }
    return m;
}

bool is_proper(const ColorMatrix& m) {
    for (int i = 0; i < m.rows; ++i)
        for (int j1 = 0; j1 < m.cols; ++j1) {
            const Color c = m.at(i, j1);
            if (c == kUnassigned) continue;
            for (int j2 = j1 + 1; j2 < m.cols; ++j2)
                if (m.at(i, j2) == c) return false;
        }
    for (int j = 0; j < m.cols; ++j)
        for (int i1 = 0; i1 < m.rows; ++i1) {
            const Color c = m.at(i1, j);
            if (c == kUnassigned) continue;
            for (int i2 = i1 + 1; i2 < m.rows; ++i2)
                if (m.at(i2, j) == c) return false;
        }
    return true;
}

bool is_complete(const ColorMatrix& m) {
    const int k = m.palette;
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    for (Color c : m.cells)
        if (c != kUnassigned) seen[c] = 1;
    for (Color c = 1; c <= k; ++c)
        if (!seen[c]) return false;

    std::vector<char> good(static_cast<size_t>(k + 1) * (k + 1), 0);
    auto mark = [&](Color a, Color b) {
        if (a == kUnassigned || b == kUnassigned || a == b) return;
        good[static_cast<size_t>(a) * (k + 1) + b] = 1;
        good[static_cast<size_t>(b) * (k + 1) + a] = 1;
    };
    for (int i = 0; i < m.rows; ++i)
        for (int j1 = 0; j1 < m.cols; ++j1)
            for (int j2 = j1 + 1; j2 < m.cols; ++j2) mark(m.at(i, j1), m.at(i, j2));
    for (int j = 0; j < m.cols; ++j)
        for (int i1 = 0; i1 < m.rows; ++i1)
            for (int i2 = i1 + 1; i2 < m.rows; ++i2) mark(m.at(i1, j), m.at(i2, j));

    for (Color a = 1; a <= k; ++a)
        for (Color b = a + 1; b <= k; ++b)
            if (!good[static_cast<size_t>(a) * (k + 1) + b]) return false;
    return true;
}

const char* to_string(FamilyCheck c) {
    switch (c) {
        case FamilyCheck::Ok: return "ok";
        case FamilyCheck::DimensionMismatch: return "dimension mismatch";
        case FamilyCheck::NotTotal: return "matrix not total";
        case FamilyCheck::NotProper: return "matrix not proper";
        case FamilyCheck::NotComplete: return "colouring not complete";
    }
    return "?";
}

FamilyCheck check_family(const ColorMatrix& m, int p, int q, int k) {
    if (m.rows != p || m.cols != q || m.palette != k)
        return FamilyCheck::DimensionMismatch;
    if (!m.total()) return FamilyCheck::NotTotal;
    if (!is_proper(m)) return FamilyCheck::NotProper;
    if (!is_complete(m)) return FamilyCheck::NotComplete;
    return FamilyCheck::Ok;
}

bool in_family(const ColorMatrix& m, int p, int q, int k) {
    return check_family(m, p, q, k) == FamilyCheck::Ok;
}

ColorMatrix transpose(const ColorMatrix& m) {
    ColorMatrix t(m.cols, m.rows, m.palette);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

ColorMatrix permuted(const ColorMatrix& m, std::span<const int> row_perm,
                     std::span<const int> col_perm) {
    ColorMatrix r(m.rows, m.cols, m.palette);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(row_perm[i], col_perm[j]);
    return r;
}

ColorMatrix recolored(const ColorMatrix& m, std::span<const Color> color_map) {
    ColorMatrix r = m;
    for (Color& c : r.cells)
        if (c != kUnassigned) c = color_map[c];
    return r;
}

ParseOutcome parse_matrix(std::istream& in) {
    ParseOutcome out;
    auto fail = [&out](std::string msg, int line, int col) {
        out.matrix.reset();
        out.error = std::move(msg);
        out.line = line;
        out.column = col;
        return out;
    };

    std::string raw;
    int lineno = 0;
    int p = -1, q = -1, k = -1;
    ColorMatrix m;
    int filled_rows = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;

        std::istringstream ls(raw);
        if (p < 0) {
            if (!(ls >> p >> q >> k) || p < 1 || q < 1 || k < 1)
                return fail("expected header 'p q k' with positive values", lineno, 1);
            std::string extra;
            if (ls >> extra)
                return fail("trailing token '" + extra + "' after header", lineno, 1);
            m = ColorMatrix(p, q, k);
            continue;
        }
        if (filled_rows == p)
            return fail("extra row after " + std::to_string(p) + " data rows", lineno, 1);

        std::string tok;
        for (int j = 0; j < q; ++j) {
            if (!(ls >> tok))
                return fail("row has fewer than " + std::to_string(q) + " entries", lineno,
                            j + 1);
            if (tok == "*") {
                m.at(filled_rows, j) = kUnassigned;
                continue;
            }
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size() || v < 1 || v > k)
                    return fail("entry '" + tok + "' outside [1," + std::to_string(k) + "]",
                                lineno, j + 1);
                m.at(filled_rows, j) = v;
            } catch (const std::exception&) {
                return fail("entry '" + tok + "' is not a colour id or '*'", lineno, j + 1);
            }
        }
        std::string extra;
        if (ls >> extra)
            return fail("trailing token '" + extra + "' after " + std::to_string(q) +
                            " entries",
                        lineno, q + 1);
        ++filled_rows;
    }

    if (p < 0) return fail("empty input, expected header 'p q k'", lineno, 1);
    if (filled_rows != p)
        return fail("expected " + std::to_string(p) + " data rows, found " +
                        std::to_string(filled_rows),
                    lineno, 1);
    out.matrix = std::move(m);
    return out;
}

ParseOutcome parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

ParseOutcome parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseOutcome out;
        out.error = "cannot open '" + path + "'";
        return out;
    }
    return parse_matrix(in);
}

std::string format_matrix(const ColorMatrix& m) {
    std::ostringstream os;
    os << m.rows << ' ' << m.cols << ' ' << m.palette << '\n';
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) os << ' ';
            const Color c = m.at(i, j);
            if (c == kUnassigned)
                os << '*';
            else
                os << c;
        }
        os << '\n';
    }
    return os.str();
}

bool write_matrix_file(const ColorMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) return false;
    out << format_matrix(m);
    return static_cast<bool>(out);
}

}  // namespace achro
