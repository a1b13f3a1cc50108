// SPDX-License-Identifier: Apache-2.0
//
// Complete discrimination system of a univariate polynomial.
//
// For f = a_0 x^n + ... + a_n the discrimination matrix is the 2n x 2n matrix
// whose rows alternate the coefficients of f and f' (f' padded with a leading
// zero), each pair shifted one column to the right of the previous pair. D_k
// is its leading principal minor of order 2k. With v sign changes in the
// revised sign list of (D_1, ..., D_n) and l nonzero members, f has v pairs of
// distinct conjugate imaginary roots and l - 2v distinct real roots.

#pragma once

#include "certipoly/execution.hpp"
#include "certipoly/polynomial.hpp"

#include <string>
#include <vector>

namespace certipoly {

using IntMatrix = std::vector<std::vector<Integer>>;

struct DiscriminantSequence {
    std::vector<Rational> values;  // D_1 .. D_n
};

struct SignList {
    std::vector<int> signs;
    bool revised = false;

    friend bool operator==(const SignList&, const SignList&) = default;
};

struct RootCount {
    int distinct_real = 0;
    int imaginary_pairs = 0;

    friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Discrimination matrix of the primitive integer form of f (deg f >= 1).
IntMatrix discrimination_matrix(const Polynomial& f);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Integer determinant(IntMatrix m);

/// D_1..D_n for the primitive integer form of f with positive leading
/// coefficient. Throws InvalidInput when f is constant.
DiscriminantSequence discriminant_sequence(const Polynomial& f, Execution exec = Execution::parallel);

SignList sign_list(const DiscriminantSequence& d);
/// Replaces each internal zero run between nonzero s_i and s_j by the
/// period-4 pattern -s_i, -s_i, s_i, s_i, ...; trailing zeros are kept.
SignList revise_sign_list(const SignList& s);

int sign_changes(const SignList& s);
int nonvanishing(const SignList& s);

RootCount count_roots(const Polynomial& f, Execution exec = Execution::parallel);

/// "[1, 1, -1, ...]", the bracketed form used for visual comparison.
std::string format_sign_list(const SignList& s);
/// Inverse of format_sign_list (whitespace-insensitive); result is unrevised.
SignList parse_sign_list(const std::string& text);

}  // namespace certipoly
