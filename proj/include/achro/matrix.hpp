#ifndef ACHRO_MATRIX_HPP
#define ACHRO_MATRIX_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace achro {

// Colour ids are 1..palette; 0 marks an unassigned cell.
using Color = int;
inline constexpr Color kUnassigned = 0;

// A p x q grid of colour ids, possibly partially assigned.
struct ColorMatrix {
    int rows = 0;
    int cols = 0;
    int palette = 0;
    std::vector<Color> cells;  // row-major, rows*cols entries

    ColorMatrix() = default;
    ColorMatrix(int p, int q, int k)
        : rows(p), cols(q), palette(k), cells(static_cast<size_t>(p) * q, kUnassigned) {}

    Color& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
    Color at(int i, int j) const { return cells[static_cast<size_t>(i) * cols + j]; }

    bool total() const;
    // Structural sanity: positive dims, entries in [0, palette].
    bool well_formed() const;

    bool operator==(const ColorMatrix&) const = default;
};

// Convenience constructor from row lists, inferring palette when k == 0.
ColorMatrix make_matrix(std::initializer_list<std::initializer_list<Color>> rows, int k = 0);

// True iff no line (row or column) holds two equal assigned colours.
bool is_proper(const ColorMatrix& m);

// True iff every colour in [1,k] occurs and every colour pair shares a line.
// Pre: m total and proper.
bool is_complete(const ColorMatrix& m);

enum class FamilyCheck {
    Ok,
    DimensionMismatch,  // wrong shape or palette, reported apart from colouring failures
    NotTotal,
    NotProper,
    NotComplete,
};

const char* to_string(FamilyCheck c);

// Membership test for the family of total proper complete p x q matrices on k colours.
FamilyCheck check_family(const ColorMatrix& m, int p, int q, int k);
bool in_family(const ColorMatrix& m, int p, int q, int k);

ColorMatrix transpose(const ColorMatrix& m);

// new[i][j] = m[row_perm[i]][col_perm[j]]; perms are 0-based images.
ColorMatrix permuted(const ColorMatrix& m, std::span<const int> row_perm,
                     std::span<const int> col_perm);
// color_map[c] gives the image of colour c (index 0 unused); unassigned stays put.
ColorMatrix recolored(const ColorMatrix& m, std::span<const Color> color_map);

// --- text format ---------------------------------------------------------
// Line 1: "p q k".  Then p lines of q tokens, each an id in [1,k] or '*'.
// Lines whose first non-blank character is '#' are comments.

struct ParseOutcome {
    std::optional<ColorMatrix> matrix;
    std::string error;  // empty on success
    int line = 0;       // 1-based position of the offending token
    int column = 0;
};

ParseOutcome parse_matrix(std::istream& in);
ParseOutcome parse_matrix(const std::string& text);
ParseOutcome parse_matrix_file(const std::string& path);

std::string format_matrix(const ColorMatrix& m);
bool write_matrix_file(const ColorMatrix& m, const std::string& path);

}  // namespace achro

#endif
