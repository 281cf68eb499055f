#include "hdepth/json_io.hpp"

#include "hdepth/errors.hpp"

#include <limits>

namespace hdepth::json_io {

namespace {

[[noreturn]] void schema(const std::string& what)
{
    throw input_error("Schema", what);
}

std::int64_t get_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        schema(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

Integer get_big(const json& j, const char* what)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            schema(std::string(what) + " is not a decimal integer");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    }
    schema(std::string(what) + " must be an integer or a decimal string");
}

DenomSet parse_denom(const json& j, bool swapped)
{
    if (!j.is_array())
        schema("denom must be an array");
    DenomSet d;
    for (const auto& name : j) {
        if (name == "alpha")
            d.alpha = true;
        else if (name == "beta")
            d.beta = true;
        else
            schema("denom entries must be \"alpha\" or \"beta\"");
    }
    if (swapped)
        std::swap(d.alpha, d.beta);
    return d;
}

json denom_to_json(DenomSet d)
{
    json out = json::array();
    if (d.alpha)
        out.push_back("alpha");
    if (d.beta)
        out.push_back("beta");
    return out;
}

json index_array(std::span<const std::int64_t> xs)
{
    return json(std::vector<std::int64_t>(xs.begin(), xs.end()));
}

} // namespace

SeriesDocument parse_series(const json& j)
{
    if (!j.is_object())
        schema("series must be a JSON object");
    if (!j.contains("alpha") || !j.contains("beta"))
        schema("series needs \"alpha\" and \"beta\"");
    const std::int64_t a = get_int(j["alpha"], "alpha");
    const std::int64_t b = get_int(j["beta"], "beta");
    if (a < 1 || b < 1)
        throw input_error("NonPositive", "weights must be positive");
    const int forms = int(j.contains("terms")) + int(j.contains("atoms")) + int(j.contains("numerator"));
    if (forms != 1)
        schema("exactly one of \"terms\", \"atoms\", \"numerator\" is required");
    const bool swapped = a > b;
    SeriesDocument doc;
    doc.alpha = std::min(a, b);
    doc.beta = std::max(a, b);
    if (j.contains("numerator")) {
        const auto& num = j["numerator"];
        if (!num.is_array())
            schema("numerator must be an array of [exponent, coefficient] pairs");
        if (!j.contains("den_alpha") || !j.contains("den_beta"))
            schema("numerator form needs \"den_alpha\" and \"den_beta\"");
        LaurentPoly p;
        for (const auto& entry : num) {
            if (!entry.is_array() || entry.size() != 2)
                schema("numerator entries must be [exponent, coefficient]");
            p.add_term(get_int(entry[0], "exponent"), get_big(entry[1], "coefficient"));
        }
        auto flag = [&](const char* key) {
            const std::int64_t v = get_int(j[key], key);
            if (v != 0 && v != 1)
                schema(std::string(key) + " must be 0 or 1");
            return v == 1;
        };
        doc.series = RationalSeries(a, b, std::move(p), flag("den_alpha"), flag("den_beta"));
        return doc;
    }
    const auto& list = j.contains("terms") ? j["terms"] : j["atoms"];
    if (!list.is_array())
        schema("terms must be an array");
    TermList terms;
    for (const auto& t : list) {
        if (!t.is_object() || !t.contains("shift") || !t.contains("coeff") || !t.contains("denom"))
            schema("each term needs \"shift\", \"coeff\" and \"denom\"");
        Term term{get_int(t["shift"], "shift"), get_big(t["coeff"], "coeff"), parse_denom(t["denom"], swapped)};
        if (term.coeff < 1)
            schema("term coefficients must be positive");
        terms.push_back(std::move(term));
    }
    doc.series = to_rational(doc.alpha, doc.beta, terms);
    doc.terms = std::move(terms);
    return doc;
}

json integer(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

json terms_to_json(const TermList& terms)
{
    json out = json::array();
    for (const auto& t : terms)
        out.push_back({{"shift", t.shift}, {"coeff", integer(t.coeff)}, {"denom", denom_to_json(t.denom)}});
    return out;
}

json to_json(const FundamentalCouple& c)
{
    return {{"I", c.lhs}, {"J", c.rhs}};
}

json to_json(const StarVerdict& v)
{
    json out{{"holds", v.holds}};
    if (v.violation) {
        const auto& x = *v.violation;
        out["violation"] = {{"I", index_array(x.couple.lhs)},
                            {"J", index_array(x.couple.rhs)},
                            {"n", x.n},
                            {"lhs", integer(x.lhs)},
                            {"rhs", integer(x.rhs)}};
    }
    return out;
}

json to_json(const SlicedStarVerdict& v)
{
    if (v.delta == 1)
        return to_json(v.slices.front());
    json slices = json::array();
    for (std::size_t k = 0; k < v.slices.size(); ++k) {
        json s = to_json(v.slices[k]);
        s["residue"] = k;
        slices.push_back(std::move(s));
    }
    return {{"holds", v.holds}, {"delta", v.delta}, {"slices", std::move(slices)}};
}

json to_json(std::int64_t alpha, std::int64_t beta, const Decomposition& d)
{
    return {{"decomposable", true},
            {"alpha", alpha},
            {"beta", beta},
            {"atoms", terms_to_json(d.atoms)},
            {"witness_module", witness_module(d)},
            {"provenance", to_string(d.provenance)}};
}

json to_json(std::int64_t alpha, std::int64_t beta, const DepthReport& r)
{
    json out{{"hdep", r.hdep}, {"verdict", to_json(r.verdict)}};
    if (r.witness)
        out["witness"] = to_json(alpha, beta, *r.witness);
    if (r.caveat)
        out["caveat"] = *r.caveat;
    if (!r.slice_depths.empty())
        out["slice_depths"] = r.slice_depths;
    return out;
}

} // namespace hdepth::json_io
