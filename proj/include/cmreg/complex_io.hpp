// Text format for graded complexes.
//
//   field: Q                  (or "field: Fp 101")
//   vars: x y z t
//   order: grevlex
//   twists: 0 | 3 4 5 | 6 6
//   matrix: 1
//   row: y^2*z - x^2*t, z^4 - x*t^3, x^2*z^3 - x*y^2*t^2
//   matrix: 2
//   row: -x*t^2, -z^3
//   row: x^2, y^2
//   row: z, t
//
// '#' starts a comment.  "matrix: k" introduces map number k (the map
// F_k -> F_{k-1}); its rows must match the rank of F_{k-1} and its columns
// the rank of F_k.  A rank-0 level takes an empty "twists" segment and an
// empty "matrix:" block.  Zero entries are written "0".
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cmreg/io.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

struct ComplexFileText {
    long characteristic = 0;
    std::vector<std::string> vars;
    std::string order_name = "grevlex";
    std::vector<std::vector<int>> twists;
    // matrices[k] = rows of "matrix: k+1", each row a list of polynomial strings
    std::vector<std::vector<std::vector<std::string>>> matrices;
    std::vector<int> matrix_lines;  // source line of each "matrix:" header
};

inline ComplexFileText read_complex_file_text(const std::string& content) {
    ComplexFileText out;
    bool saw_field = false, saw_vars = false, saw_twists = false;
    std::istringstream in(content);
    std::string raw;
    int lineno = 0;
    int current_matrix = -1;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto starts_with = [&](const char* kw) { return line.rfind(kw, 0) == 0; };

        if (starts_with("field:")) {
            std::istringstream ls(line.substr(6));
            std::string f;
            ls >> f;
            if (f == "Q") {
                out.characteristic = 0;
            } else if (f == "Fp") {
                long p = 0;
                if (!(ls >> p)) throw ParseError("expected a prime after 'Fp'", lineno, 7);
                out.characteristic = p;
            } else {
                throw ParseError("field must be 'Q' or 'Fp <prime>'", lineno, 8);
            }
            saw_field = true;
        } else if (starts_with("vars:")) {
            std::istringstream ls(line.substr(5));
            std::string v;
            while (ls >> v) out.vars.push_back(v);
            if (out.vars.empty()) throw ParseError("no variables listed", lineno, 6);
            saw_vars = true;
        } else if (starts_with("order:")) {
            std::istringstream ls(line.substr(6));
            std::string o;
            ls >> o;
            if (o != "grevlex" && o != "lex")
                throw ParseError("order must be grevlex or lex", lineno, 8);
            out.order_name = o;
        } else if (starts_with("twists:")) {
            std::string rest = line.substr(7);
            std::string seg;
            std::istringstream rs(rest);
            out.twists.clear();
            while (std::getline(rs, seg, '|')) {
                std::vector<int> level;
                std::istringstream ss(seg);
                int t;
                while (ss >> t) level.push_back(t);
                out.twists.push_back(std::move(level));
            }
            if (out.twists.empty()) throw ParseError("empty twist list", lineno, 8);
            saw_twists = true;
        } else if (starts_with("matrix:")) {
            std::istringstream ls(line.substr(7));
            int k = 0;
            if (!(ls >> k)) throw ParseError("expected a map number after 'matrix:'", lineno, 9);
            if (k != static_cast<int>(out.matrices.size()) + 1)
                throw ParseError("matrix blocks must appear as 1, 2, ... in order", lineno, 9);
            out.matrices.emplace_back();
            out.matrix_lines.push_back(lineno);
            current_matrix = k - 1;
        } else if (starts_with("row:")) {
            if (current_matrix < 0)
                throw ParseError("'row:' before any 'matrix:' header", lineno, 1);
            std::string rest = line.substr(4);
            std::vector<std::string> entries;
            std::string piece;
            std::istringstream rs(rest);
            while (std::getline(rs, piece, ',')) {
                auto pb = piece.find_first_not_of(" \t");
                if (pb == std::string::npos)
                    throw ParseError("empty matrix entry", lineno, 5);
                auto pe = piece.find_last_not_of(" \t");
                entries.push_back(piece.substr(pb, pe - pb + 1));
            }
            if (entries.empty()) throw ParseError("empty matrix row", lineno, 5);
            out.matrices.back().push_back(std::move(entries));
        } else {
            throw ParseError(
                "expected 'field:', 'vars:', 'order:', 'twists:', 'matrix:' or 'row:'", lineno, 1);
        }
    }
    if (!saw_field) throw ParseError("missing 'field:' line", lineno ? lineno : 1, 1);
    if (!saw_vars) throw ParseError("missing 'vars:' line", lineno ? lineno : 1, 1);
    if (!saw_twists) throw ParseError("missing 'twists:' line", lineno ? lineno : 1, 1);
    return out;
}

// Builds the typed complex and checks shape and homogeneity.
template <class K>
GradedComplex<K> complex_from_text(const ComplexFileText& data, const RingPtr& ring,
                                   const MonomialOrder& ord) {
    GradedComplex<K> C;
    C.ctx = ring;
    C.ord = ord;
    C.twists = data.twists;
    if (data.matrices.size() + 1 != data.twists.size())
        throw ParseError("complex has " + std::to_string(data.twists.size()) +
                             " levels but " + std::to_string(data.matrices.size()) +
                             " matrix blocks (need levels - 1)",
                         1, 1);
    for (std::size_t k = 0; k < data.matrices.size(); ++k) {
        int nrows = static_cast<int>(data.twists[k].size());
        int ncols = static_cast<int>(data.twists[k + 1].size());
        int hdr = data.matrix_lines[k];
        if (static_cast<int>(data.matrices[k].size()) != nrows)
            throw ParseError("matrix " + std::to_string(k + 1) + " needs " +
                                 std::to_string(nrows) + " rows, found " +
                                 std::to_string(data.matrices[k].size()),
                             hdr, 1);
        PolyMatrix<K> M = PolyMatrix<K>::zero(ring, ord, nrows, ncols);
        for (int r = 0; r < nrows; ++r) {
            if (static_cast<int>(data.matrices[k][r].size()) != ncols)
                throw ParseError("matrix " + std::to_string(k + 1) + " row " +
                                     std::to_string(r + 1) + " needs " + std::to_string(ncols) +
                                     " entries, found " +
                                     std::to_string(data.matrices[k][r].size()),
                                 hdr, 1);
            for (int c = 0; c < ncols; ++c)
                M.e[r][c] = parse_polynomial<K>(ring, ord, data.matrices[k][r][c], hdr);
        }
        C.maps.push_back(std::move(M));
    }
    C.validate_graded();
    return C;
}

template <class K>
std::string write_complex_file_text(const GradedComplex<K>& C,
                                    const std::vector<std::string>& vars) {
    std::string s;
    long p = C.ctx->characteristic();
    s += p == 0 ? "field: Q\n" : "field: Fp " + std::to_string(p) + "\n";
    s += "vars:";
    for (const auto& v : vars) s += " " + v;
    s += "\norder: ";
    s += (C.ord.kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex");
    s += "\ntwists:";
    for (std::size_t k = 0; k < C.twists.size(); ++k) {
        if (k) s += " |";
        for (int t : C.twists[k]) s += " " + std::to_string(t);
    }
    s += "\n";
    for (std::size_t k = 0; k < C.maps.size(); ++k) {
        s += "matrix: " + std::to_string(k + 1) + "\n";
        for (int r = 0; r < C.maps[k].nrows; ++r) {
            s += "row:";
            for (int c = 0; c < C.maps[k].ncols; ++c) {
                s += c ? ", " : " ";
                s += poly_to_string(C.maps[k].e[r][c]);
            }
            s += "\n";
        }
    }
    return s;
}

}  // namespace cmreg
