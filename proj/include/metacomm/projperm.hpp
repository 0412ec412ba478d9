#pragma once

// P^{m-1}(F_q), the action v -> Q^{-1} v of GL_m(F_q) on it, and
// permutation cycle types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"
#include "fqmat.hpp"

namespace metacomm {

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// (q^m - 1) / (q - 1)
inline std::uint64_t projective_size(std::uint64_t q, unsigned m) { return (ipow(q, m) - 1) / (q - 1); }

inline std::vector<ProjPoint> enumerate_projective(const Field& f, std::size_t m) {
    if (m == 0) throw domain_error("projective space needs m >= 1");
    const std::uint64_t q = f.q();
    std::vector<ProjPoint> out;
    for (std::size_t lead = 0; lead < m; ++lead) {
        const std::size_t free = m - lead - 1;
        const std::uint64_t count = ipow(q, static_cast<unsigned>(free));
        for (std::uint64_t t = 0; t < count; ++t) {
            ProjPoint v;
            v.coords.assign(m, f.zero());
            v.coords[lead] = f.one();
            std::uint64_t r = t;
            for (std::size_t i = m; i-- > lead + 1;) {
                v.coords[i] = FieldElem{static_cast<std::uint32_t>(r % q)};
                r /= q;
            }
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Enumerated points plus a dense index from coordinates to position.
class ProjectiveSpace {
public:
    ProjectiveSpace(Field f, std::size_t m) : f_(std::move(f)), m_(m), points_(enumerate_projective(f_, m)) {
        const std::uint64_t slots = ipow(f_.q(), static_cast<unsigned>(m));
        if (slots > (std::uint64_t{1} << 24)) throw capacity_error("projective space too large to index");
        index_.assign(slots, 0);
        for (std::size_t i = 0; i < points_.size(); ++i) index_[key(points_[i])] = i;
    }

    const Field& field() const { return f_; }
    std::size_t dim() const { return m_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<ProjPoint>& points() const { return points_; }
    const ProjPoint& operator[](std::size_t i) const { return points_[i]; }

    std::size_t index_of(const ProjPoint& v) const { return index_[key(v)]; }

private:
    std::uint64_t key(const ProjPoint& v) const {
        std::uint64_t k = 0;
        for (auto c : v.coords) k = k * f_.q() + c.code;
        return k;
    }

    Field f_;
    std::size_t m_;
    std::vector<ProjPoint> points_;
    std::vector<std::size_t> index_;
};

// Bijection on 0..N-1.
struct Perm {
    std::vector<std::size_t> images;

    std::size_t size() const { return images.size(); }

    static Perm identity(std::size_t n) {
        Perm p;
        p.images.resize(n);
        std::iota(p.images.begin(), p.images.end(), std::size_t{0});
        return p;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != i) return false;
        return true;
    }

    bool is_bijection() const {
        std::vector<bool> seen(images.size(), false);
        for (auto x : images) {
            if (x >= images.size() || seen[x]) return false;
            seen[x] = true;
        }
        return true;
    }

    Perm inverse() const {
        Perm p;
        p.images.resize(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) p.images[images[i]] = i;
        return p;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
};

// (a o b)(i) = a(b(i)): b is applied first.
inline Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw domain_error("composing permutations of different sizes");
    Perm out;
    out.images.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out.images[i] = a.images[b.images[i]];
    return out;
}

struct CycleType {
    std::map<std::size_t, std::size_t> cycles;  // length -> count
    std::size_t fixed = 0;
    int sign = 1;

    std::size_t domain_size() const {
        std::size_t n = 0;
        for (auto [len, count] : cycles) n += len * count;
        return n;
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

// Sign and fixed-point count derived from a cycle-length multiset.
inline CycleType make_cycle_type(std::map<std::size_t, std::size_t> cycles) {
    CycleType ct;
    for (auto it = cycles.begin(); it != cycles.end();) {
        if (it->second == 0) it = cycles.erase(it);
        else ++it;
    }
    ct.cycles = std::move(cycles);
    ct.fixed = ct.cycles.contains(1) ? ct.cycles.at(1) : 0;
    std::size_t transpositions = 0;
    for (auto [len, count] : ct.cycles) transpositions += (len - 1) * count;
    ct.sign = transpositions % 2 == 0 ? 1 : -1;
    return ct;
}

inline CycleType cycle_type(const Perm& perm) {
    std::map<std::size_t, std::size_t> cycles;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t i = start; !seen[i]; i = perm.images[i]) {
            seen[i] = true;
            ++len;
        }
        ++cycles[len];
    }
    return make_cycle_type(std::move(cycles));
}

// tau_Q(v) = Q^{-1} v, canonicalized.
inline ProjPoint tau_apply(const MatFq& q, const ProjPoint& v) {
    if (v.coords.size() != q.dim()) throw domain_error("point and matrix dimensions differ");
    const MatFq qinv = inverse(q);
    return canonicalize_point(q.field(), qinv.apply(v.coords));
}

inline Perm tau_permutation(const MatFq& q, const ProjectiveSpace& space) {
    if (space.dim() != q.dim() || !(space.field() == q.field())) throw domain_error("projective space does not match matrix");
    const MatFq qinv = inverse(q);
    Perm out;
    out.images.resize(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        out.images[i] = space.index_of(canonicalize_point(q.field(), qinv.apply(space[i].coords)));
    return out;
}

inline Perm tau_permutation(const MatFq& q) { return tau_permutation(q, ProjectiveSpace(q.field(), q.dim())); }

}  // namespace metacomm
