/**
 * Signed cochain complex of a flow category and its cohomology via Smith
 * normal form over exact integers.
 */
#ifndef FFC_ALGEBRA_HPP
#define FFC_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ffc/model.hpp"

namespace ffc {

struct IntMatrix
{
    size_t rows = 0;
    size_t cols = 0;
    std::vector<mpz_class> data;    // row-major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}

    mpz_class& at(size_t i, size_t j) { return data[i * cols + j]; }
    const mpz_class& at(size_t i, size_t j) const { return data[i * cols + j]; }
    bool isZero() const;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct CochainComplex
{
    int minDegree = 0;
    int maxDegree = -1;                                // empty when max < min
    std::map<int, std::vector<std::string> > basis;    // object ids in id order
    std::map<int, IntMatrix> delta;                    // delta[i] : C^i -> C^{i+1}

    size_t dim(int i) const;
    bool empty() const { return maxDegree < minDegree; }
};

CochainComplex to_complex(const FlowCategory& category);

/** True when delta[i+1] * delta[i] = 0 for every i. */
bool squaresToZero(const CochainComplex& complex);

/** Nonzero diagonal entries of the Smith normal form, each positive, d_i | d_{i+1}. */
std::vector<mpz_class> smithInvariants(IntMatrix m);

/** Rank over Z/p for a prime p. */
size_t rankModP(const IntMatrix& m, unsigned long p);

enum class Coefficients { Z, Z2 };

struct CohomologyGroup
{
    size_t rank = 0;                  // free rank, or F_2-dimension for Z2
    std::vector<mpz_class> torsion;   // invariant factors > 1 (Z only)

    bool zero() const { return rank == 0 && torsion.empty(); }
    bool operator==(const CohomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
};

/** Nonzero groups only, keyed by degree. Throws InvalidCategory if d^2 != 0. */
std::map<int, CohomologyGroup> cohomology(const CochainComplex& complex, Coefficients coeff);

/** "Z", "Z^3", "Z/2", "Z + Z/2", "0"; for Z2 coefficients "(Z/2)^k". */
std::string formatGroup(const CohomologyGroup& g, Coefficients coeff);

}   // namespace ffc

#endif
