#pragma once

#include "hdepth/couples.hpp"
#include "hdepth/decomp.hpp"
#include "hdepth/series.hpp"
#include "hdepth/star.hpp"

#include "json.hpp"

#include <optional>

namespace hdepth::json_io {

using json = nlohmann::ordered_json;

/// A parsed series document. `terms` is set when the input was a term list
/// (keys "terms" or "atoms"), with denominators relative to the stored,
/// ordered weights.
struct SeriesDocument {
    std::int64_t alpha = 1;
    std::int64_t beta = 1;
    std::optional<TermList> terms;
    RationalSeries series = RationalSeries::zero(1, 1);
};

/// Throws InputError("Schema") on anything malformed.
SeriesDocument parse_series(const json& j);

/// Machine integer when it fits in int64, decimal string otherwise.
json integer(const Integer& x);

json terms_to_json(const TermList& terms);
json to_json(const FundamentalCouple& c);
json to_json(const StarVerdict& v);
json to_json(const SlicedStarVerdict& v);
json to_json(std::int64_t alpha, std::int64_t beta, const Decomposition& d);
json to_json(std::int64_t alpha, std::int64_t beta, const DepthReport& r);

} // namespace hdepth::json_io
