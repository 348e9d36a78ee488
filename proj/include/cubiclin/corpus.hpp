#ifndef CUBICLIN_CORPUS_HPP
#define CUBICLIN_CORPUS_HPP

#include <sstream>

#include "exact_matrix.hpp"
#include "poly_system.hpp"

namespace cubiclin {

/// Published nilpotency class: A^2 = 0, or A^3 = 0 with A^2 != 0, or neither.
enum class NilClass { None, Square, Cube };

struct CorpusEntry {
    std::string id;
    ExactMatrix matrix;
    size_t expected_rank = 0;
    NilClass nilclass = NilClass::None;
    bool druzkowski = true;
    bool c1_published = false;  // false: no published C1 claim, assert nothing
    bool jc_published = false;
    std::string note;
};

namespace corpus_detail {

/// Rows separated by ';', entries by ','; entries in the scalar grammar.
inline ExactMatrix parse_matrix(size_t n, const std::string& text) {
    std::vector<GaussianRational> entries;
    entries.reserve(n * n);
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) entries.push_back(parse_scalar(cell));
    }
    return ExactMatrix(n, std::move(entries));
}

// 15x15, rank 5, A^2 = 0 (Gorni-Zampieri pairing example)
inline const char* example1_rows() {
    return "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0;"
           "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0;"
           "0,0,0,-2,-1,1,1,1,0,0,-1,0,0,-1,0;"
           "0,0,-1,0,-1,0,1/2,0,0,1/2,0,-1/2,-1/2,0,0;"
           "0,0,1,-2,0,0,0,1,-1,-1,-1,0,0,0,1;"
           "1,0,1,-2,0,0,0,1,-1,-1,-1,0,0,0,1;"
           "0,1,1,-2,0,0,0,1,-1,-1,-1,0,0,0,1;"
           "1,0,-1,0,-1,0,1/2,0,0,1/2,0,-1/2,-1/2,0,0;"
           "1,0,0,-2,-1,1,1,1,0,0,-1,0,0,-1,0;"
           "0,1,0,-2,-1,1,1,1,0,0,-1,0,0,-1,0;"
           "1,0,1,0,1,0,-1/2,0,0,-1/2,0,1/2,1/2,0,0;"
           "0,1,-1,2,0,0,0,-1,1,1,1,0,0,0,-1;"
           "0,1,0,2,1,-1,-1,-1,0,0,1,0,0,1,0;"
           "1,1,1,-2,0,0,0,1,-1,-1,-1,0,0,0,1;"
           "1,1,0,-2,-1,1,1,1,0,0,-1,0,0,-1,0";
}

// 17x17, rank 5, A^2 != 0, A^3 = 0
inline const char* example2_rows() {
    return "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,0,0,0,0,1;"
           "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,0,0,0,0,-1;"
           "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,0,0,0,0,0;"
           "1/6,1/6,-1/3,0,0,0,0,0,0,0,0,0,0,0,0,0,1;"
           "-1/6,-1/6,1/3,0,0,0,0,0,0,0,0,0,0,0,0,0,1;"
           "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1;"
           "0,0,0,0,0,0,0,0,0,-1/6,-1/6,1/3,1/12,1/12,-1/12,-1/12,1;"
           "0,0,0,0,0,0,0,0,0,-1/6,-1/6,1/3,1/12,1/12,-1/12,-1/12,-1;"
           "0,0,0,0,0,0,0,0,0,-1/6,-1/6,1/3,1/12,1/12,-1/12,-1/12,0;"
           "1/6,-1/6,-1/6,0,0,0,0,0,0,0,0,0,0,0,0,0,1;"
           "1/6,-1/6,-1/6,0,0,0,0,0,0,0,0,0,0,0,0,0,-1;"
           "1/6,-1/6,-1/6,0,0,0,0,0,0,0,0,0,0,0,0,0,0;"
           "1/6,1/6,-1/3,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,0,0,0,0,1;"
           "1/6,1/6,-1/3,-1/6,-1/6,1/3,1/6,1/6,-1/3,0,0,0,0,0,0,0,-1;"
           "1/6,1/6,-1/3,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,0,0,0,0,-1;"
           "1/6,1/6,-1/3,-1/6,-1/6,1/3,1/6,1/6,-1/3,0,0,0,0,0,0,0,1;"
           "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0";
}

// 13x13, rank 5, A^2 = 0
inline const char* example3_rows() {
    return "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,1;"
           "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,-1;"
           "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,0,0;"
           "1/6,1/6,-1/3,0,0,0,0,0,0,0,0,1,0;"
           "1/6,1/6,-1/3,0,0,0,0,0,0,0,0,-1,0;"
           "1/6,1/6,-1/3,0,0,0,0,0,0,0,0,0,0;"
           "0,0,-1/3,0,0,0,0,0,0,1/6,1/6,0,1;"
           "0,0,-1/3,0,0,0,0,0,0,1/6,1/6,0,-1;"
           "0,0,-1/3,0,0,0,0,0,0,1/6,1/6,0,0;"
           "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,1,0;"
           "0,0,0,1/6,1/6,-1/3,-1/6,-1/6,1/3,0,0,-1,0;"
           "0,0,0,0,0,0,0,0,0,0,0,0,0;"
           "0,0,0,0,0,0,0,0,0,0,0,0,0";
}

// 4x4, rank 2, char poly t^2(t^2-2t+4)
inline const char* example5_rows() {
    return "1,i,1,1;"
           "-i,1,-i,-i;"
           "-1,-i,1,-1;"
           "-1,-i,1,-1";
}

// Published as 16x16 but printed with 17 rows, two of which (the
// [...,-1,-1] row of the second block) are identical; the duplicate is
// dropped to obtain a square 16x16 matrix. rank 4, A^2 != 0, A^3 = 0.
inline const char* example6_rows() {
    return "0,0,0,0,0,0,0,-1/3,1/6,1/6,1/24,-1/24,-1/24,1/24,0,0;"
           "0,0,0,0,0,0,0,-1/3,1/6,1/6,1/24,-1/24,-1/24,1/24,0,-1;"
           "1/3,-1/6,-1/24,1/24,-1/6,1/24,-1/24,0,0,0,0,0,0,0,1,-1;"
           "1/3,-1/6,-1/24,1/24,-1/6,1/24,-1/24,0,0,0,0,0,0,0,-1,-1;"
           "0,0,0,0,0,0,0,-1/3,1/6,1/6,1/24,-1/24,-1/24,1/24,0,1;"
           "1/3,-1/6,-1/24,1/24,-1/6,1/24,-1/24,0,0,0,0,0,0,0,1,1;"
           "1/3,-1/6,-1/24,1/24,-1/6,1/24,-1/24,0,0,0,0,0,0,0,-1,1;"
           "1/3,-1/6,-1/24,1/24,-1/6,1/24,-1/24,0,0,0,0,0,0,0,0,0;"
           "1/3,-1/6,-1/24,1/24,-1/6,1/24,-1/24,0,0,0,0,0,0,0,1,0;"
           "1/3,-1/6,-1/24,1/24,-1/6,1/24,-1/24,0,0,0,0,0,0,0,-1,0;"
           "0,0,0,0,0,0,0,-1/3,1/6,1/6,1/24,-1/24,-1/24,1/24,1,-1;"
           "0,0,0,0,0,0,0,-1/3,1/6,1/6,1/24,-1/24,-1/24,1/24,-1,-1;"
           "0,0,0,0,0,0,0,-1/3,1/6,1/6,1/24,-1/24,-1/24,1/24,1,1;"
           "0,0,0,0,0,0,0,-1/3,1/6,1/6,1/24,-1/24,-1/24,1/24,-1,1;"
           "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1;"
           "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0";
}

}  // namespace corpus_detail

inline std::vector<std::string> corpus_ids() {
    return {"example1", "example2", "example3", "example5", "example6", "a0"};
}

inline CorpusEntry load_example(const std::string& id) {
    using namespace corpus_detail;
    CorpusEntry e;
    e.id = id;
    if (id == "example1") {
        e.matrix = parse_matrix(15, example1_rows());
        e.expected_rank = 5;
        e.nilclass = NilClass::Square;
        e.c1_published = true;
        e.jc_published = true;
    } else if (id == "example2") {
        e.matrix = parse_matrix(17, example2_rows());
        e.expected_rank = 5;
        e.nilclass = NilClass::Cube;
        e.druzkowski = false;
        e.c1_published = false;  // explicitly unknown in the source
        e.jc_published = false;
        e.note =
            "the printed entries fail the Keller identity: det(Id+Delta[(Av)^2]A)-1 = "
            "-(1/1944)*v17^4*(v4+v5-2*v6-v7-v8+2*v9)^2, and the map has an exact collision "
            "(see the transcription-check tests); the source describes the matrix as "
            "Druzkowski, so the printed copy likely carries a transcription error. "
            "Structural metadata (rank 5, A^2 != 0, A^3 = 0) does reproduce, and "
            "Condition C2 with the pencil constraints included still holds.";
    } else if (id == "example3") {
        e.matrix = parse_matrix(13, example3_rows());
        e.expected_rank = 5;
        e.nilclass = NilClass::Square;
        e.c1_published = true;
        e.jc_published = true;
    } else if (id == "example5") {
        e.matrix = parse_matrix(4, example5_rows());
        e.expected_rank = 2;
        e.nilclass = NilClass::None;
        e.c1_published = true;
        e.jc_published = true;
    } else if (id == "example6") {
        e.matrix = parse_matrix(16, example6_rows());
        e.expected_rank = 4;
        e.nilclass = NilClass::Cube;
        e.c1_published = true;
        e.jc_published = true;
        e.note = "source prints 17 rows for a 16x16 matrix; the row duplicated "
                 "verbatim was dropped";
    } else if (id == "a0") {
        e.matrix = parse_matrix(2, "1,-1;1,-1");
        e.expected_rank = 1;
        e.nilclass = NilClass::Square;
        e.c1_published = true;
        e.jc_published = true;
    } else {
        throw structural_error("unknown corpus id: " + id);
    }
    return e;
}

/// Upper-triangular 5x5 family with free entries a2..a5 (first row) and
/// b3..b5 (second row); every instantiation satisfies C1 by triangularity.
inline ExactMatrix example4_instance(const std::vector<GaussianRational>& a2345,
                                     const std::vector<GaussianRational>& b345) {
    if (a2345.size() != 4 || b345.size() != 3)
        throw structural_error("example4_instance expects 4 a-entries and 3 b-entries");
    ExactMatrix m(5);
    for (size_t j = 0; j < 4; ++j) m.at(0, j + 1) = a2345[j];
    for (size_t j = 0; j < 3; ++j) m.at(1, j + 2) = b345[j];
    return m;
}

/// Canonical text serialization of a matrix; the corpus checksum hashes this.
inline std::string canonical_matrix_text(const ExactMatrix& m) {
    std::string out = std::to_string(m.n()) + ":";
    for (size_t i = 0; i < m.n(); ++i) {
        for (size_t j = 0; j < m.n(); ++j) {
            out += m.at(i, j).to_string();
            out += j + 1 == m.n() ? ';' : ',';
        }
    }
    return out;
}

inline uint64_t matrix_checksum(const ExactMatrix& m) {
    return fnv1a64(canonical_matrix_text(m));
}

/// Re-verifies the published structural metadata; returns "" or a violation.
inline std::string verify_entry_metadata(const CorpusEntry& e) {
    if (e.matrix.rank() != e.expected_rank)
        return e.id + ": rank " + std::to_string(e.matrix.rank()) + " != expected " +
               std::to_string(e.expected_rank);
    ExactMatrix sq = e.matrix * e.matrix;
    switch (e.nilclass) {
        case NilClass::Square:
            if (!sq.is_zero()) return e.id + ": A^2 != 0";
            break;
        case NilClass::Cube:
            if (sq.is_zero()) return e.id + ": A^2 = 0 but class says A^2 != 0";
            if (!(sq * e.matrix).is_zero()) return e.id + ": A^3 != 0";
            break;
        case NilClass::None:
            if (e.matrix.is_nilpotent()) return e.id + ": unexpectedly nilpotent";
            break;
    }
    return "";
}

}  // namespace cubiclin

#endif
