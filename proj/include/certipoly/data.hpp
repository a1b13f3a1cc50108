// SPDX-License-Identifier: Apache-2.0
//
// Loading of the checked-in polynomial, expression and constant files.
// Every file read is digested; polynomial files are checked against
// manifest.json (degree and leading coefficient).

#pragma once

#include "certipoly/bivariate.hpp"
#include "certipoly/discrimination.hpp"
#include "certipoly/expr.hpp"
#include "certipoly/polynomial.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace certipoly {

/// Raised for missing, malformed or manifest-inconsistent data.
class DataError : public Error {
public:
    using Error::Error;
};

struct Theorem1Constants {
    Rational left_endpoint;       // 3
    Rational g3_probe;            // 4
    Rational g3_at_left;          // 3
    Rational probe_offset;
    Rational left_cut;
    Rational equilateral_value;   // both sides of the inequality at the left endpoint
    Rational x0, x4, x1, lambda_max;  // published decimals
    Rational x1_eval_width;
    Rational lambda_max_width;
    Rational equality_tolerance;
    long subdivision_limit = 0;
};

struct Theorem2Constants {
    std::pair<Rational, Rational> t_range, t1_range, k_range;
    std::vector<std::pair<Rational, Rational>> p5_intervals;
    int p2_real_roots = 0;
    int p5_real_roots = 0;
    Rational t1, t2, k0;  // published decimals
    Rational t1_eval_width;
    Rational equality_tolerance;
};

struct ConjectureConstants {
    Rational lambda;
    Rational k_squared;
};

struct DataSet {
    Polynomial p, p2, p4, p5, c;
    BivariatePolynomial p3;
    Integer m;
    SignList signs_p, signs_p2, signs_p5;
    int p_real_roots = 0;

    Expr g, f, power_base, power_rhs, fprime_factor, g4_numerator_factor, g4_denominator, g3_at_4;
    Expr h, hprime_numerator, hprime_denominator, rationalized_cofactor;

    Theorem1Constants t1;
    Theorem2Constants t2;
    ConjectureConstants conjecture;

    /// step id -> location of the statement the step checks.
    std::map<std::string, std::string> anchors;

    /// file name -> lowercase hex SHA-256 of its bytes.
    std::map<std::string, std::string> digests;
};

/// Throws DataError naming the file (and line, for parse errors).
DataSet load_data_set(const std::filesystem::path& dir);

/// Univariate or bivariate polynomial file, selected by the ".bipoly" suffix.
Polynomial load_polynomial(const std::filesystem::path& path);
BivariatePolynomial load_bivariate(const std::filesystem::path& path);

}  // namespace certipoly
