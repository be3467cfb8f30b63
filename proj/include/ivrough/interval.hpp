#pragma once
// Closed real intervals [lo, hi] and the three similarity degrees used to
// compare them: SF (overlap/hull length ratio), SS (endpoint-distance based)
// and ST (possibility-degree based).

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ivrough {

// Thrown for malformed values and misuse of preconditions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Interval {
    double lo{0.0};
    double hi{0.0};

    Interval() = default;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw Error("interval endpoints must be finite");
        if (lo > hi)
            throw Error("lower endpoint exceeds upper");
    }

    // A point interval has zero length.
    double length() const { return hi - lo; }
    bool is_point() const { return lo == hi; }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const Interval& o) const { return !(*this == o); }
};

// [max(lo), min(hi)] when the operands overlap; empty otherwise.
inline std::optional<Interval> intersect(const Interval& u, const Interval& v) {
    const double lo = std::max(u.lo, v.lo);
    const double hi = std::min(u.hi, v.hi);
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

// Smallest interval containing both operands (their common hull).
inline Interval hull(const Interval& u, const Interval& v) {
    return Interval(std::min(u.lo, v.lo), std::max(u.hi, v.hi));
}

// Overlap ratio: |u n v| / |u U v|, where an empty intersection or a point
// counts as length zero.  Two identical point intervals have a zero-length
// hull; they are equal, so the degree is 1 by the identity requirement.
inline double sim_sf(const Interval& u, const Interval& v) {
    const double hull_len = std::max(u.hi, v.hi) - std::min(u.lo, v.lo);
    if (hull_len == 0.0) return 1.0;
    const double inter_len = std::min(u.hi, v.hi) - std::max(u.lo, v.lo);
    return inter_len > 0.0 ? inter_len / hull_len : 0.0;
}

// Endpoint-distance degree: 1 - (|u+ - v+| + |u- - v-|) / (2 * hull length).
// A zero denominator means both operands are the same point: degree 1.
inline double sim_ss(const Interval& u, const Interval& v) {
    const double den = std::max(u.hi, v.hi) - std::min(u.lo, v.lo);
    if (den == 0.0) return 1.0;
    return 1.0 - 0.5 * (std::abs(u.hi - v.hi) + std::abs(u.lo - v.lo)) / den;
}

// Possibility-degree similarity: 1 - |P(u>=v) - P(v>=u)| with
// P(u>=v) = clamp((u+ - v-) / (|u| + |v|), 0, 1).
// When both operands are points the length sum is zero; P degenerates to a
// step comparison so that equal points give 1 and distinct points give 0.
inline double sim_st(const Interval& u, const Interval& v) {
    const double len_sum = (u.hi - u.lo) + (v.hi - v.lo);
    double pu;  // P(u >= v)
    double pv;  // P(v >= u)
    if (len_sum == 0.0) {
        pu = u.lo >= v.lo ? 1.0 : 0.0;
        pv = v.lo >= u.lo ? 1.0 : 0.0;
    } else {
        pu = std::min(1.0, std::max((u.hi - v.lo) / len_sum, 0.0));
        pv = std::min(1.0, std::max((v.hi - u.lo) / len_sum, 0.0));
    }
    return 1.0 - std::abs(pu - pv);
}

enum class Family { SF, SS, ST };

inline double similarity(Family f, const Interval& u, const Interval& v) {
    switch (f) {
        case Family::SF: return sim_sf(u, v);
        case Family::SS: return sim_ss(u, v);
        case Family::ST: return sim_st(u, v);
    }
    throw Error("unknown similarity family");
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::SF: return "SF";
        case Family::SS: return "SS";
        case Family::ST: return "ST";
    }
    return "?";
}

// Accepts "sf"/"SF"/"ss"/... ; anything else is an error.
inline Family parse_family(std::string_view text) {
    std::string t(text);
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "sf") return Family::SF;
    if (t == "ss") return Family::SS;
    if (t == "st") return Family::ST;
    throw Error("unknown similarity family '" + std::string(text) + "' (expected sf, ss or st)");
}

// Element-wise average of a non-empty collection; repeated values count with
// their multiplicity (the collection is a multiset of per-object values).
inline Interval mean_interval(const std::vector<Interval>& vs) {
    if (vs.empty()) throw Error("mean_interval: empty collection");
    double lo = 0.0;
    double hi = 0.0;
    for (const Interval& v : vs) {
        lo += v.lo;
        hi += v.hi;
    }
    const double n = static_cast<double>(vs.size());
    return Interval(lo / n, hi / n);
}

// ---- interval text form -------------------------------------------------
// "lo:hi" with plain decimal literals; a bare "v" is shorthand for "v:v".

namespace detail {

inline double parse_double_token(std::string_view token, const char* what) {
    // Trim surrounding spaces/tabs.
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (token.empty()) throw Error(std::string(what) + ": empty numeric field");
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw Error(std::string(what) + ": bad numeric token '" + std::string(token) + "'");
    if (!std::isfinite(value))
        throw Error(std::string(what) + ": non-finite value '" + std::string(token) + "'");
    return value;
}

}  // namespace detail

inline Interval parse_interval(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        const double v = detail::parse_double_token(text, "interval");
        return Interval(v, v);
    }
    const double lo = detail::parse_double_token(text.substr(0, colon), "interval");
    const double hi = detail::parse_double_token(text.substr(colon + 1), "interval");
    if (lo > hi) throw Error("interval '" + std::string(text) + "': lower endpoint exceeds upper");
    return Interval(lo, hi);
}

// Shortest decimal text that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw Error("format_double failed");
    return std::string(buf, ptr);
}

inline std::string format_interval(const Interval& u) {
    return format_double(u.lo) + ":" + format_double(u.hi);
}

}  // namespace ivrough
