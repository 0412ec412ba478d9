#pragma once

// Text and JSON forms: nested integer lists for matrices and polynomials,
// "[a,b,c,d]" quaternions, and the report objects the CLI prints.

#include <array>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclelaw.hpp"
#include "errors.hpp"
#include "fq.hpp"
#include "fqmat.hpp"
#include "hurwitz.hpp"
#include "projperm.hpp"
#include "zmat.hpp"

namespace metacomm::io {

using json = nlohmann::ordered_json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error("invalid JSON '" + text + "': " + e.what());
    }
}

inline std::int64_t as_int(const json& v) {
    if (!v.is_number_integer()) throw input_error("expected an integer, got " + v.dump());
    return v.get<std::int64_t>();
}

inline std::vector<std::vector<std::int64_t>> parse_int_rows(const json& v) {
    if (!v.is_array() || v.empty()) throw input_error("expected a non-empty list of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : v) {
        if (!row.is_array()) throw input_error("matrix row is not a list: " + row.dump());
        std::vector<std::int64_t> r;
        for (const auto& x : row) r.push_back(as_int(x));
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw input_error("matrix must be square");
    return rows;
}

// An F_q entry: an integer (prime subfield) or a coefficient list of length <= e.
inline FieldElem parse_field_elem(const Field& f, const json& v) {
    if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
    if (!v.is_array()) throw input_error("field element must be an integer or coefficient list: " + v.dump());
    std::vector<std::int64_t> cs;
    for (const auto& x : v) cs.push_back(as_int(x));
    if (cs.size() > f.e()) throw input_error("coefficient list longer than the extension degree: " + v.dump());
    return f.from_coeffs(cs);
}

inline MatFq parse_fq_matrix(const Field& f, const std::string& text) {
    const json v = parse_json(text);
    if (!v.is_array() || v.empty()) throw input_error("expected a non-empty list of rows");
    const std::size_t m = v.size();
    MatFq out(f, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!v[i].is_array() || v[i].size() != m) throw input_error("matrix must be square");
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = parse_field_elem(f, v[i][j]);
    }
    return out;
}

inline Poly parse_poly(const Field& f, const std::string& text) {
    const json v = parse_json(text);
    if (!v.is_array()) throw input_error("polynomial must be a coefficient list");
    std::vector<FieldElem> cs;
    for (const auto& x : v) cs.push_back(parse_field_elem(f, x));
    return Poly(f, std::move(cs));
}

inline MatZ parse_int_matrix(const std::string& text) { return MatZ::from_ints(parse_int_rows(parse_json(text))); }

// "[a,b,c,d]" in the {1,i,j,w0} basis, or "[w,x,y,z]/1" (Lipschitz) and
// "[w,x,y,z]/2" (halves) in the {1,i,j,k} basis.
inline HQuat parse_quat(const std::string& text) {
    std::string body = text;
    int denom = 0;
    if (auto slash = text.rfind('/'); slash != std::string::npos) {
        const std::string d = text.substr(slash + 1);
        if (d == "1") denom = 1;
        else if (d == "2") denom = 2;
        else throw input_error("quaternion denominator must be 1 or 2: " + text);
        body = text.substr(0, slash);
    }
    const json v = parse_json(body);
    if (!v.is_array() || v.size() != 4) throw input_error("quaternion must have four coordinates: " + text);
    std::array<std::int64_t, 4> c{};
    for (int i = 0; i < 4; ++i) c[i] = as_int(v[i]);
    if (denom == 0) return {c[0], c[1], c[2], c[3]};
    if (denom == 1)
        for (auto& x : c) x *= 2;
    try {
        return HQuat::from_doubled(c);
    } catch (const domain_error& e) {
        throw input_error(std::string(e.what()) + ": " + text);
    }
}

inline std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v <= 0) throw input_error("bad prime '" + item + "'");
            out.push_back(static_cast<std::uint64_t>(v));
        } catch (const std::logic_error&) {
            throw input_error("bad prime list '" + text + "'");
        }
    }
    if (out.empty()) throw input_error("empty prime list");
    return out;
}

inline json to_json(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<std::int64_t>::max()) || v < BigInt(std::numeric_limits<std::int64_t>::min()))
        throw capacity_error("integer " + v.str() + " does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

inline json to_json(const MatZ& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const Field& f, FieldElem x) {
    if (f.is_prime_field()) return x.code;
    json cs = json::array();
    for (auto c : f.coeffs(x)) cs.push_back(c);
    return cs;
}

inline json to_json(const MatFq& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m.field(), m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const Poly& p) {
    json cs = json::array();
    for (auto c : p.coeffs()) cs.push_back(to_json(p.field(), c));
    return cs;
}

inline json to_json(const HQuat& x) { return json::array({x.a, x.b, x.c, x.d}); }

// {"cycles": {...ascending lengths}, "fixed": n, "sign": +-1}
inline json to_json(const CycleType& ct) {
    json cycles = json::object();
    for (auto [len, count] : ct.cycles) cycles[std::to_string(len)] = count;
    json out = json::object();
    out["cycles"] = std::move(cycles);
    out["fixed"] = ct.fixed;
    out["sign"] = ct.sign;
    return out;
}

inline json to_json(const CycleReport& r) {
    json out = json::object();
    const json base = to_json(r.type);
    out["cycles"] = base["cycles"];
    if (r.ell) out["ell"] = *r.ell;
    out["fixed"] = base["fixed"];
    out["sign"] = base["sign"];
    out["source"] = to_string(r.source);
    return out;
}

}  // namespace metacomm::io
