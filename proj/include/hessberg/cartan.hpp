#pragma once

#include <string>
#include <vector>

namespace hessberg {

// An irreducible Cartan matrix with its classification label.
//
// matrix[i][j] = <alpha_i, alpha_j^vee>, so a reflection acts by
// s_j(gamma) = gamma - (sum_i c_i * matrix[i][j]) * alpha_j.
//
// Labeling convention for the non-simply-laced families: the special node
// comes first. B_n has alpha_1 short, C_n has alpha_1 long, F4 is the
// standard table (alpha_1, alpha_2 long), G2 has alpha_1 short.
struct CartanDatum {
    char family = 'A';
    int rank = 0;
    std::vector<std::vector<int>> matrix;

    // Standard matrix for a supported (family, rank) pair. Supported:
    // A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6..E8, F4, G2.
    static CartanDatum standard(char family, int rank);

    std::string name() const;  // "A3", "G2", ...

    // Structural invariants: 2 on the diagonal, off-diagonal <= 0 with
    // symmetric zeroes, and equality with the standard table.
    void check() const;
};

// Parses a type label like "A3" or "G2".
CartanDatum parse_cartan_type(const std::string& type);

// Classical order of the Weyl group of the given type. Throws InputError if
// the value does not fit in 64 bits.
unsigned long long weyl_order_classical(char family, int rank);

}  // namespace hessberg
