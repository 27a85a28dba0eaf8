#pragma once
// Report serialization: JSON with a fixed key order and %.17g doubles, plus a
// flat CSV projection. Two runs under the same config produce byte-identical
// bytes apart from the timestamp and the wall_ms fields.

#include <cstdio>
#include <ostream>
#include <string>

#include "constants.hpp"
#include "suite.hpp"

namespace cliff {
namespace detail {

// Shortest round-trip decimal; non-finite values are clamped to the double
// range so the output stays strict JSON.
inline std::string fmt_double(double v) {
    if (!std::isfinite(v)) v = v > 0 ? 1.7976931348623157e308 : -1.7976931348623157e308;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline const char* field_name(Field f) { return f == Field::real ? "real" : "complex"; }

inline void write_result_json(std::ostream& os, const CheckResult& r, const char* indent) {
    os << indent << "{\"check_id\": \"" << json_escape(r.check_id) << "\", "
       << "\"case_id\": " << r.case_id << ", "
       << "\"family\": \"" << json_escape(r.family) << "\", "
       << "\"lhs\": " << fmt_double(r.lhs) << ", "
       << "\"rhs\": " << fmt_double(r.rhs) << ", "
       << "\"ratio\": " << fmt_double(r.ratio) << ", "
       << "\"tolerance\": " << fmt_double(r.tolerance) << ", "
       << "\"margin\": " << fmt_double(r.margin) << ", "
       << "\"pass\": " << (r.pass ? "true" : "false") << ", "
       << "\"grid\": {\"n\": " << r.n << ", \"N\": " << r.N << ", \"L\": " << fmt_double(r.L)
       << "}, \"params\": {";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) os << ", ";
        first = false;
        os << "\"" << json_escape(k) << "\": " << fmt_double(v);
    }
    os << "}, \"flags\": [";
    first = true;
    for (const auto& f : r.flags) {
        if (!first) os << ", ";
        first = false;
        os << "\"" << json_escape(f) << "\"";
    }
    os << "], \"wall_ms\": " << fmt_double(r.wall_ms) << "}";
}

}  // namespace detail

inline void write_constants_json(std::ostream& os, const ConstantsTable& t,
                                 const char* indent = "") {
    using detail::fmt_double;
    os << indent << "{\n";
    os << indent << "  \"n\": " << t.n << ",\n";
    os << indent << "  \"m\": " << t.m << ",\n";
    os << indent << "  \"field\": \"" << detail::field_name(t.field) << "\",\n";
    os << indent << "  \"omega_variant\": \"" << omega_variant_name(t.omega_variant) << "\",\n";
    os << indent << "  \"omega\": " << fmt_double(t.omega) << ",\n";
    os << indent << "  \"K\": " << fmt_double(t.K) << ",\n";
    os << indent << "  \"C1_plancherel\": " << fmt_double(t.C1_plancherel) << ",\n";
    os << indent << "  \"C1_young\": " << fmt_double(t.C1_young) << ",\n";
    os << indent << "  \"C1_min\": " << fmt_double(t.C1_min) << ",\n";
    os << indent << "  \"gaussian_k\": " << fmt_double(t.gaussian_k) << ",\n";
    os << indent << "  \"hls\": [";
    for (std::size_t i = 0; i < t.hls.size(); ++i) {
        const auto& h = t.hls[i];
        os << (i ? ", " : "") << "{\"lambda\": " << fmt_double(h.lambda) << ", \"mode\": \""
           << (h.mode == HlsMode::diagonal ? "diagonal" : "l2")
           << "\", \"p\": " << fmt_double(h.p) << ", \"q\": " << fmt_double(h.q)
           << ", \"value\": " << fmt_double(h.value) << "}";
    }
    os << "],\n";
    os << indent << "  \"fundamental\": [";
    for (std::size_t i = 0; i < t.fundamental.size(); ++i) {
        const auto& f = t.fundamental[i];
        os << (i ? ", " : "") << "{\"l\": " << f.l << ", \"c_l\": " << fmt_double(f.c_l)
           << ", \"C_l\": " << fmt_double(f.C_l) << "}";
    }
    os << "]\n" << indent << "}";
}

inline void write_report_json(std::ostream& os, const VerificationReport& rep) {
    using detail::fmt_double;
    const RunConfig& c = rep.cfg;
    os << "{\n";
    os << "  \"suite\": \"" << detail::json_escape(c.suite) << "\",\n";
    os << "  \"seed\": " << c.seed << ",\n";
    os << "  \"cases\": " << c.cases << ",\n";
    os << "  \"timestamp\": \"" << rep.timestamp << "\",\n";
    os << "  \"grid\": {\"n\": " << c.grid.n << ", \"N\": " << c.grid.N
       << ", \"L\": " << fmt_double(c.grid.L) << "},\n";
    os << "  \"algebra\": {\"m\": " << c.m << ", \"field\": \"" << detail::field_name(c.field)
       << "\"},\n";
    os << "  \"conventions\": {\"omega_variant\": \"" << omega_variant_name(c.omega)
       << "\", \"kernel_omega\": \"sphere\", \"kernel_sign\": \"plus\"},\n";
    os << "  \"constants\": ";
    write_constants_json(os, build_constants(c.grid.n, c.m, c.field, c.omega), "  ");
    os << ",\n";
    os << "  \"results\": [\n";
    for (std::size_t i = 0; i < rep.results.size(); ++i) {
        detail::write_result_json(os, rep.results[i], "    ");
        os << (i + 1 < rep.results.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"summary\": {\"checks\": " << rep.checks << ", \"passed\": " << rep.passed
       << ", \"failed\": " << rep.failed << ", \"min_margin\": " << fmt_double(rep.min_margin)
       << ", \"wall_ms\": " << fmt_double(rep.wall_ms) << "}\n";
    os << "}\n";
}

// Flat projection, one row per check. Params are packed key=value with ';'
// so the column set stays fixed across suites.
inline void write_report_csv(std::ostream& os, const VerificationReport& rep) {
    using detail::fmt_double;
    os << "check_id,case_id,family,lhs,rhs,ratio,tolerance,margin,pass,n,N,L,params,flags,"
          "wall_ms\n";
    for (const auto& r : rep.results) {
        os << r.check_id << "," << r.case_id << "," << r.family << "," << fmt_double(r.lhs) << ","
           << fmt_double(r.rhs) << "," << fmt_double(r.ratio) << "," << fmt_double(r.tolerance)
           << "," << fmt_double(r.margin) << "," << (r.pass ? "1" : "0") << "," << r.n << ","
           << r.N << "," << fmt_double(r.L) << ",";
        for (std::size_t i = 0; i < r.params.size(); ++i)
            os << (i ? ";" : "") << r.params[i].first << "=" << fmt_double(r.params[i].second);
        os << ",";
        for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? ";" : "") << r.flags[i];
        os << "," << fmt_double(r.wall_ms) << "\n";
    }
}

}  // namespace cliff
