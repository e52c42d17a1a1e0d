#pragma once

#include "hahnrank/rank.hpp"
#include "hahnrank/report.hpp"

namespace hahnrank {

// Element serializations are sorted-by-support lists of (term, "p/q") pairs,
// so equal elements serialize identically.

inline json group_element_json(const HahnGroupElement& g) {
    json out = json::array();
    for (const auto& [gamma, coeff] : g.terms())
        out.push_back(json::array({render_value(gamma), coeff.str_explicit()}));
    return out;
}

inline json series_json(const HahnSeries& s) {
    json out = json::array();
    for (const auto& [exponent, coeff] : s.terms())
        out.push_back(json::array({group_element_json(exponent), coeff.str_explicit()}));
    return out;
}

inline json rank_json(const RankDescriptor& r) {
    json out;
    out["kind"] = rank_kind_name(r.kind);
    out["order_type"] = r.order_type_str();
    if (r.cardinality)
        out["cardinality"] = *r.cardinality;
    else
        out["cardinality"] = "infinite";
    out["provenance"] = r.provenance;
    return out;
}

inline json classification_json(const Classification& c) {
    return json{{"isometry", c.isometry.str()},
                {"weak_isometry", c.weak_isometry.str()},
                {"omega_increasing", c.omega_increasing.str()},
                {"square_growth", c.square_growth.str()}};
}

} // namespace hahnrank
