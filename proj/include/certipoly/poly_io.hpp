// SPDX-License-Identifier: Apache-2.0
//
// Text formats.
//
// Univariate (".poly"): first line "degree N", then one "exponent coefficient"
// line per nonzero coefficient; unlisted exponents are zero. The writer emits
// exponents in descending order, so write(read(s)) == s for files it produced.
//
// Bivariate (".bipoly"): one "t_exp k_exp coefficient" line per nonzero term,
// written in descending t then descending k order.
//
// Coefficients use the rational text format ("num" or "num/den").

#pragma once

#include "certipoly/bivariate.hpp"
#include "certipoly/polynomial.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace certipoly {

Polynomial parse_polynomial(std::string_view text);
std::string format_polynomial(const Polynomial& f);

BivariatePolynomial parse_bivariate(std::string_view text);
std::string format_bivariate(const BivariatePolynomial& f);

/// Whole-file read; throws ParseError if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace certipoly
