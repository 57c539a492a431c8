#include "hessberg/cartan.hpp"

#include <cctype>

#include "hessberg/errors.hpp"

namespace hessberg {

static bool supported(char family, int rank) {
    switch (family) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 3;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

CartanDatum CartanDatum::standard(char family, int rank) {
    if (!supported(family, rank))
        throw InputError("unsupported Cartan type " + std::string(1, family) +
                         std::to_string(rank));

    CartanDatum c;
    c.family = family;
    c.rank = rank;
    c.matrix.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c.matrix[i][i] = 2;

    auto edge = [&](int i, int j) { c.matrix[i][j] = c.matrix[j][i] = -1; };
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edge(i, i + 1);
    };

    switch (family) {
        case 'A':
            chain(rank);
            break;
        case 'B':
            // alpha_1 short: <alpha_2, alpha_1^vee> = -2.
            chain(rank);
            c.matrix[1][0] = -2;
            break;
        case 'C':
            // alpha_1 long: <alpha_1, alpha_2^vee> = -2.
            chain(rank);
            c.matrix[0][1] = -2;
            break;
        case 'D':
            chain(rank - 1);
            edge(rank - 3, rank - 1);
            break;
        case 'E':
            // Branch node is alpha_2, attached to alpha_4.
            edge(0, 2);
            edge(2, 3);
            edge(3, 4);
            edge(4, 5);
            edge(1, 3);
            if (rank >= 7) edge(5, 6);
            if (rank == 8) edge(6, 7);
            break;
        case 'F':
            // alpha_1, alpha_2 long: <alpha_2, alpha_3^vee> = -2.
            chain(rank);
            c.matrix[1][2] = -2;
            break;
        case 'G':
            // alpha_1 short: <alpha_2, alpha_1^vee> = -3.
            c.matrix[0][1] = -1;
            c.matrix[1][0] = -3;
            break;
    }
    return c;
}

std::string CartanDatum::name() const { return std::string(1, family) + std::to_string(rank); }

void CartanDatum::check() const {
    if (rank < 1) throw InputError("Cartan rank must be at least 1");
    if (static_cast<int>(matrix.size()) != rank)
        throw InputError("Cartan matrix has wrong number of rows");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(matrix[i].size()) != rank)
            throw InputError("Cartan matrix has wrong number of columns");
        if (matrix[i][i] != 2) throw InputError("Cartan matrix diagonal entry is not 2");
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0) throw InputError("positive off-diagonal Cartan entry");
            if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
                throw InputError("asymmetric zero pattern in Cartan matrix");
        }
    }
    CartanDatum ref = standard(family, rank);
    if (ref.matrix != matrix)
        throw InputError("Cartan matrix does not match the standard table for " + name());
}

CartanDatum parse_cartan_type(const std::string& type) {
    if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0])))
        throw InputError("malformed Cartan type '" + type + "' (expected e.g. A3, G2)");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    int rank = 0;
    for (std::size_t k = 1; k < type.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(type[k])))
            throw InputError("malformed Cartan type '" + type + "' (expected e.g. A3, G2)");
        rank = rank * 10 + (type[k] - '0');
        if (rank > 512) throw InputError("Cartan rank out of range in '" + type + "'");
    }
    return CartanDatum::standard(family, rank);
}

unsigned long long weyl_order_classical(char family, int rank) {
    auto mul = [](unsigned long long a, unsigned long long b) {
        if (b != 0 && a > ~0ull / b) throw InputError("Weyl group order exceeds 64 bits");
        return a * b;
    };
    auto fact = [&](int n) {
        unsigned long long f = 1;
        for (int i = 2; i <= n; ++i) f = mul(f, i);
        return f;
    };
    auto pow2 = [&](int n) {
        unsigned long long p = 1;
        for (int i = 0; i < n; ++i) p = mul(p, 2);
        return p;
    };
    switch (family) {
        case 'A': return fact(rank + 1);
        case 'B':
        case 'C': return mul(pow2(rank), fact(rank));
        case 'D': return mul(pow2(rank - 1), fact(rank));
        case 'E':
            if (rank == 6) return 51840ull;
            if (rank == 7) return 2903040ull;
            return 696729600ull;
        case 'F': return 1152ull;
        case 'G': return 12ull;
        default: throw InputError("unsupported family");
    }
}

}  // namespace hessberg
