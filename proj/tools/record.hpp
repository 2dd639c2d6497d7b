#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "quatrace/trace.hpp"

namespace quatrace::cli {

using Json = nlohmann::ordered_json;

/// Integers fitting in a double-exact range serialize as JSON numbers,
/// anything larger as decimal strings, so records stay lossless.
inline Json int_value(const Int& v) {
    static const Int kMaxExact = (Int(1) << 53) - 1;
    if (v <= kMaxExact && v >= -kMaxExact) return Json(v.convert_to<long long>());
    return Json(v.str());
}

/// "p" for integers, "p/q" otherwise (canonical lowest terms).
inline std::string rat_string(const Rat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

inline void add_trace_fields(Json& rec, const TraceResult& t) {
    rec["trace"] = int_value(t.value);
    rec["identity_term"] = rat_string(t.identity_term);
    rec["elliptic_term"] = rat_string(t.elliptic_term);
    rec["hyperbolic_term"] = rat_string(t.hyperbolic_term);
    rec["parabolic_term"] = rat_string(t.parabolic_term);
}

} // namespace quatrace::cli
