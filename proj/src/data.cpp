// SPDX-License-Identifier: Apache-2.0

#include "certipoly/data.hpp"

#include "certipoly/poly_io.hpp"

#include "json.hpp"

namespace certipoly {

using nlohmann::json;

Polynomial load_polynomial(const std::filesystem::path& path)
{
    try {
        return parse_polynomial(read_text_file(path));
    } catch (const ParseError& e) {
        throw DataError(path.filename().string() + ": " + e.what());
    }
}

BivariatePolynomial load_bivariate(const std::filesystem::path& path)
{
    try {
        return parse_bivariate(read_text_file(path));
    } catch (const ParseError& e) {
        throw DataError(path.filename().string() + ": " + e.what());
    }
}

namespace {

class Loader {
public:
    explicit Loader(std::filesystem::path dir) : dir_(std::move(dir))
    {
        manifest_ = parse_json("manifest.json");
    }

    std::string text(const std::string& name)
    {
        std::string s;
        try {
            s = read_text_file(dir_ / name);
        } catch (const Error& e) {
            throw DataError(name + ": " + e.what());
        }
        digests[name] = sha256_hex(s);
        return s;
    }

    json parse_json(const std::string& name)
    {
        const std::string s = text(name);
        try {
            return json::parse(s);
        } catch (const json::exception& e) {
            throw DataError(name + ": " + e.what());
        }
    }

    Polynomial poly(const std::string& name)
    {
        Polynomial p;
        try {
            p = parse_polynomial(text(name));
        } catch (const ParseError& e) {
            throw DataError(name + ": " + e.what());
        }
        const json& entry = manifest_entry(name);
        if (p.degree() != entry.at("degree").get<int>())
            throw DataError(name + ": degree " + std::to_string(p.degree()) + " differs from manifest");
        if (p.leading() != parse_rational(entry.at("leading").get<std::string>()))
            throw DataError(name + ": leading coefficient differs from manifest");
        return p;
    }

    BivariatePolynomial bipoly(const std::string& name)
    {
        BivariatePolynomial p;
        try {
            p = parse_bivariate(text(name));
        } catch (const ParseError& e) {
            throw DataError(name + ": " + e.what());
        }
        const json& entry = manifest_entry(name);
        if (p.degree_t() != entry.at("degree_t").get<int>() || p.degree_k() != entry.at("degree_k").get<int>())
            throw DataError(name + ": degrees differ from manifest");
        const Polynomial lead = p.coeff_t(static_cast<std::size_t>(p.degree_t()));
        if (lead.leading() != parse_rational(entry.at("leading").get<std::string>()))
            throw DataError(name + ": leading coefficient differs from manifest");
        return p;
    }

    Expr expr(const std::string& name)
    {
        try {
            return parse_expr(text(name));
        } catch (const ParseError& e) {
            throw DataError(name + ": " + e.what());
        }
    }

    SignList signs(const std::string& name)
    {
        try {
            return parse_sign_list(text(name));
        } catch (const ParseError& e) {
            throw DataError(name + ": " + e.what());
        }
    }

    std::map<std::string, std::string> digests;

private:
    const json& manifest_entry(const std::string& name)
    {
        if (!manifest_.contains(name))
            throw DataError(name + ": no manifest entry");
        return manifest_.at(name);
    }

    std::filesystem::path dir_;
    json manifest_;
};

Rational q(const json& j, const char* key)
{
    return parse_rational(j.at(key).get<std::string>());
}

Rational decimal(const json& j, const char* key)
{
    return parse_decimal(j.at(key).get<std::string>());
}

std::pair<Rational, Rational> range(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw DataError("constants.json: a range must be a two-element array");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

}  // namespace

DataSet load_data_set(const std::filesystem::path& dir)
{
    Loader ld(dir);
    DataSet d;
    d.p = ld.poly("p.poly");
    d.p2 = ld.poly("p2.poly");
    d.p4 = ld.poly("p4.poly");
    d.p5 = ld.poly("p5.poly");
    d.c = ld.poly("c.poly");
    d.p3 = ld.bipoly("p3.bipoly");
    try {
        d.m = parse_integer(ld.text("m.txt"));
    } catch (const ParseError& e) {
        throw DataError(std::string("m.txt: ") + e.what());
    }
    d.signs_p = ld.signs("signlist_p.txt");
    d.signs_p2 = ld.signs("signlist_p2.txt");
    d.signs_p5 = ld.signs("signlist_p5.txt");

    d.g = ld.expr("g.expr");
    d.f = ld.expr("f.expr");
    d.power_base = ld.expr("power_base.expr");
    d.power_rhs = ld.expr("power_rhs.expr");
    d.fprime_factor = ld.expr("fprime_factor.expr");
    d.g4_numerator_factor = ld.expr("g4_numerator_factor.expr");
    d.g4_denominator = ld.expr("g4_denominator.expr");
    d.g3_at_4 = ld.expr("g3_at_4.expr");
    d.h = ld.expr("h.expr");
    d.hprime_numerator = ld.expr("hprime_numerator.expr");
    d.hprime_denominator = ld.expr("hprime_denominator.expr");
    d.rationalized_cofactor = ld.expr("rationalized_cofactor.expr");

    const json k = ld.parse_json("constants.json");
    try {
        const json& a = k.at("theorem1");
        d.t1.left_endpoint = q(a, "left_endpoint");
        d.t1.g3_probe = q(a, "g3_probe");
        d.t1.g3_at_left = q(a, "g3_at_left");
        d.t1.probe_offset = q(a, "probe_offset");
        d.t1.left_cut = q(a, "left_cut");
        d.t1.equilateral_value = q(a, "equilateral_value");
        d.t1.x0 = decimal(a, "x0");
        d.t1.x4 = decimal(a, "x4");
        d.t1.x1 = decimal(a, "x1");
        d.t1.lambda_max = decimal(a, "lambda_max");
        d.t1.x1_eval_width = q(a, "x1_eval_width");
        d.t1.lambda_max_width = q(a, "lambda_max_width");
        d.t1.equality_tolerance = q(a, "equality_tolerance");
        d.t1.subdivision_limit = a.at("subdivision_limit").get<long>();

        const json& b = k.at("theorem2");
        d.t2.t_range = range(b.at("t_range"));
        d.t2.t1_range = range(b.at("t1_range"));
        d.t2.k_range = range(b.at("k_range"));
        for (const auto& iv : b.at("p5_intervals"))
            d.t2.p5_intervals.push_back(range(iv));
        d.t2.p2_real_roots = b.at("p2_real_roots").get<int>();
        d.t2.p5_real_roots = b.at("p5_real_roots").get<int>();
        d.t2.t1 = decimal(b, "t1");
        d.t2.t2 = decimal(b, "t2");
        d.t2.k0 = decimal(b, "k0");
        d.t2.t1_eval_width = q(b, "t1_eval_width");
        d.t2.equality_tolerance = q(b, "equality_tolerance");

        const json& c = k.at("conjecture");
        d.conjecture.lambda = q(c, "lambda");
        d.conjecture.k_squared = q(c, "k_squared");
        d.p_real_roots = k.at("p_real_roots").get<int>();
    } catch (const json::exception& e) {
        throw DataError(std::string("constants.json: ") + e.what());
    } catch (const ParseError& e) {
        throw DataError(std::string("constants.json: ") + e.what());
    }
    const json anchors = ld.parse_json("anchors.json");
    if (!anchors.is_object())
        throw DataError("anchors.json: expected an object");
    for (const auto& [id, text] : anchors.items())
        d.anchors[id] = text.get<std::string>();
    d.digests = std::move(ld.digests);
    return d;
}

}  // namespace certipoly
