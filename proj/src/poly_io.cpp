// SPDX-License-Identifier: Apache-2.0

#include "certipoly/poly_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace certipoly {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size())
                out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what)
{
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

long parse_exponent(std::string_view tok, std::size_t line_no)
{
    if (tok.empty() || tok.size() > 9)
        fail(line_no, "malformed exponent '" + std::string(tok) + "'");
    long v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            fail(line_no, "malformed exponent '" + std::string(tok) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

Rational parse_coefficient(std::string_view tok, std::size_t line_no)
{
    try {
        return parse_rational(tok);
    } catch (const ParseError& e) {
        fail(line_no, e.what());
    }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text)
{
    auto lines = lines_of(text);
    std::size_t idx = 0;
    while (idx < lines.size() && split_ws(lines[idx]).empty())
        ++idx;
    if (idx == lines.size())
        throw ParseError("line 1: missing 'degree N' header");
    auto header = split_ws(lines[idx]);
    if (header.size() != 2 || header[0] != "degree")
        fail(idx + 1, "expected 'degree N'");
    long declared = -1;
    if (header[1] != "-1")
        declared = parse_exponent(header[1], idx + 1);
    std::vector<Rational> coeffs(static_cast<std::size_t>(declared + 1));
    std::vector<bool> seen(coeffs.size(), false);
    for (++idx; idx < lines.size(); ++idx) {
        auto tok = split_ws(lines[idx]);
        if (tok.empty())
            continue;
        if (tok.size() != 2)
            fail(idx + 1, "expected 'exponent coefficient'");
        long e = parse_exponent(tok[0], idx + 1);
        if (e > declared)
            fail(idx + 1, "exponent " + std::to_string(e) + " exceeds declared degree");
        auto ue = static_cast<std::size_t>(e);
        if (seen[ue])
            fail(idx + 1, "duplicate exponent " + std::to_string(e));
        seen[ue] = true;
        coeffs[ue] = parse_coefficient(tok[1], idx + 1);
    }
    Polynomial p(std::move(coeffs));
    if (p.degree() != declared)
        throw ParseError("declared degree " + std::to_string(declared) + " but leading coefficient is zero");
    return p;
}

std::string format_polynomial(const Polynomial& f)
{
    std::ostringstream out;
    out << "degree " << f.degree() << "\n";
    for (int i = f.degree(); i >= 0; --i) {
        const Rational c = f.coeff(static_cast<std::size_t>(i));
        if (c != 0)
            out << i << " " << to_string(c) << "\n";
    }
    return out.str();
}

BivariatePolynomial parse_bivariate(std::string_view text)
{
    std::map<std::pair<long, long>, Rational> terms;
    auto lines = lines_of(text);
    long max_t = -1;
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        auto tok = split_ws(lines[idx]);
        if (tok.empty())
            continue;
        if (tok.size() != 3)
            fail(idx + 1, "expected 't_exp k_exp coefficient'");
        long te = parse_exponent(tok[0], idx + 1);
        long ke = parse_exponent(tok[1], idx + 1);
        if (!terms.emplace(std::pair{te, ke}, parse_coefficient(tok[2], idx + 1)).second)
            fail(idx + 1, "duplicate term t^" + std::to_string(te) + " k^" + std::to_string(ke));
        max_t = std::max(max_t, te);
    }
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(max_t + 1));
    for (const auto& [key, c] : terms) {
        auto& row = rows[static_cast<std::size_t>(key.first)];
        if (row.size() <= static_cast<std::size_t>(key.second))
            row.resize(static_cast<std::size_t>(key.second) + 1);
        row[static_cast<std::size_t>(key.second)] = c;
    }
    std::vector<Polynomial> coeffs;
    coeffs.reserve(rows.size());
    for (auto& r : rows)
        coeffs.emplace_back(std::move(r));
    return BivariatePolynomial(std::move(coeffs));
}

std::string format_bivariate(const BivariatePolynomial& f)
{
    std::ostringstream out;
    for (int i = f.degree_t(); i >= 0; --i) {
        const Polynomial c = f.coeff_t(static_cast<std::size_t>(i));
        for (int j = c.degree(); j >= 0; --j) {
            const Rational a = c.coeff(static_cast<std::size_t>(j));
            if (a != 0)
                out << i << " " << j << " " << to_string(a) << "\n";
        }
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << contents;
    if (!out)
        throw Error("write failed for " + path.string());
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 0xF]);
    }
    return out;
}

}  // namespace certipoly
