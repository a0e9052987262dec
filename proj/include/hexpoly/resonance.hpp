#pragma once

// Matching-based invariants of a hexagonal system: the Kekule count, the
// sextet polynomial (resonant pattern counts), the Clar covering
// polynomial, the proper-sextet polynomial, the Clar number, and the
// coronene-freeness test. Everything is counted exactly.

#include "hexsys.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

#include <bit>
#include <bitset>
#include <unordered_map>

namespace hexpoly {

struct NotKekulean : std::domain_error {
    NotKekulean() : std::domain_error("system has no perfect matching") {}
};

// Which alternating edge triple of a hexagon counts as the proper one.
// Indexing the hexagon's edges e1..e6 clockwise from the topmost vertex,
// "odd" selects {e1, e3, e5}. The shifted-argument identity linking the
// Clar covering and proper-sextet polynomials holds for either choice.
enum class SextetParity { odd, even };

namespace detail {

constexpr std::size_t kMaxVertices = 192;
using VertexMask = std::bitset<kMaxVertices>;

// Memoized count of perfect matchings of the subgraph induced by a vertex
// mask: eliminate the lowest live vertex, branch over its matched partner.
class MatchingCounter {
  public:
    explicit MatchingCounter(const HexSystem& h) : h_(h) {
        if (h.vertex_count() > static_cast<int>(kMaxVertices))
            throw std::length_error("system too large for exact matching counts");
        neighbor_masks_.resize(h.vertex_count());
        for (int v = 0; v < h.vertex_count(); ++v)
            for (int u : h.adjacency[v]) neighbor_masks_[v].set(u);
    }

    VertexMask full_mask() const {
        VertexMask m;
        for (int v = 0; v < h_.vertex_count(); ++v) m.set(v);
        return m;
    }

    const BigInt& count(const VertexMask& mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        BigInt total = 0;
        std::size_t v = mask._Find_first();
        if (v == kMaxVertices) {
            total = 1;  // empty graph: the empty matching
        } else {
            VertexMask candidates = neighbor_masks_[v] & mask;
            for (std::size_t u = candidates._Find_first(); u < kMaxVertices;
                 u = candidates._Find_next(u)) {
                VertexMask rest = mask;
                rest.reset(v);
                rest.reset(u);
                total += count(rest);
            }
        }
        return memo_.emplace(mask, std::move(total)).first->second;
    }

  private:
    const HexSystem& h_;
    std::vector<VertexMask> neighbor_masks_;
    std::unordered_map<VertexMask, BigInt> memo_;
};

inline std::vector<VertexMask> hexagon_masks(const HexSystem& h) {
    std::vector<VertexMask> masks(h.hexagon_count());
    for (int i = 0; i < h.hexagon_count(); ++i)
        for (int v : h.hexagon_vertices[i]) masks[i].set(v);
    return masks;
}

}  // namespace detail

inline BigInt kekule_count(const HexSystem& h) {
    detail::MatchingCounter counter(h);
    return counter.count(counter.full_mask());
}

// Sextet and Clar covering polynomials share one sweep: for every
// independent set S of hexagons (pairwise vertex-disjoint), the number of
// perfect matchings of H minus V(S) contributes to the Clar coefficient
// c(H, |S|), and contributes 1 to s(H, |S|) when positive (S is then a
// resonant pattern). Requires a Kekulean system.
inline std::pair<Polynomial, Polynomial> sextet_and_clar_polynomials(const HexSystem& h) {
    detail::MatchingCounter counter(h);
    const detail::VertexMask full = counter.full_mask();
    if (counter.count(full) == 0) throw NotKekulean();
    auto hex_masks = detail::hexagon_masks(h);
    const int nh = h.hexagon_count();

    std::vector<BigInt> s(nh + 1), c(nh + 1);
    std::vector<int> chosen;
    auto sweep = [&](auto&& self, int i, const detail::VertexMask& removed) -> void {
        if (i == nh) {
            BigInt matchings = counter.count(full & ~removed);
            c[chosen.size()] += matchings;
            if (matchings > 0) s[chosen.size()] += 1;
            return;
        }
        self(self, i + 1, removed);
        if ((hex_masks[i] & removed).none()) {
            chosen.push_back(i);
            self(self, i + 1, removed | hex_masks[i]);
            chosen.pop_back();
        }
    };
    sweep(sweep, 0, detail::VertexMask{});
    return {Polynomial(std::move(s)), Polynomial(std::move(c))};
}

inline Polynomial sextet_polynomial(const HexSystem& h) {
    return sextet_and_clar_polynomials(h).first;
}

inline Polynomial clar_covering_polynomial(const HexSystem& h) {
    return sextet_and_clar_polynomials(h).second;
}

// Largest resonant pattern, the degree of the sextet polynomial.
inline int clar_number(const HexSystem& h) { return sextet_polynomial(h).degree(); }

// Proper-sextet polynomial: classify each perfect matching by how many
// hexagons it hits in exactly the proper alternating triple, and count
// matchings by that statistic. Enumerates all matchings, so the cost is
// proportional to the Kekule count.
inline Polynomial proper_sextet_polynomial(const HexSystem& h,
                                           SextetParity parity = SextetParity::odd) {
    detail::MatchingCounter counter(h);
    if (counter.count(counter.full_mask()) == 0) throw NotKekulean();

    const int nv = h.vertex_count();
    std::vector<int> partner(nv, -1);
    std::vector<BigInt> p(h.hexagon_count() + 1);

    auto classify = [&]() {
        int proper = 0;
        for (const auto& hex : h.hexagon_vertices) {
            bool match;
            if (parity == SextetParity::odd)
                match = partner[hex[0]] == hex[1] && partner[hex[2]] == hex[3] &&
                        partner[hex[4]] == hex[5];
            else
                match = partner[hex[1]] == hex[2] && partner[hex[3]] == hex[4] &&
                        partner[hex[5]] == hex[0];
            if (match) ++proper;
        }
        ++p[proper];
    };
    auto enumerate = [&](auto&& self, int v) -> void {
        while (v < nv && partner[v] != -1) ++v;
        if (v == nv) {
            classify();
            return;
        }
        for (int u : h.adjacency[v]) {
            if (partner[u] != -1) continue;
            partner[v] = u;
            partner[u] = v;
            self(self, v + 1);
            partner[v] = -1;
            partner[u] = -1;
        }
    };
    enumerate(enumerate, 0);
    return Polynomial(std::move(p));
}

// A system is thin when no translate of the coronene pattern sits inside
// it as a nice subgraph (removing those 24 vertices leaves a perfectly
// matchable, possibly empty, remainder).
inline bool is_thin(const HexSystem& h) {
    if (h.hexagon_count() < 7) return true;
    std::set<Cell> occupied(h.cells.begin(), h.cells.end());
    detail::MatchingCounter counter(h);
    const detail::VertexMask full = counter.full_mask();
    for (const Cell& center : h.cells) {
        bool all_in = true;
        for (const Cell& d : kNeighborOffsets)
            if (!occupied.count(center + d)) {
                all_in = false;
                break;
            }
        if (!all_in) continue;
        detail::VertexMask removed;
        std::vector<Cell> wreath{center};
        for (const Cell& d : kNeighborOffsets) wreath.push_back(center + d);
        for (const Cell& c : wreath) {
            auto it = std::lower_bound(h.cells.begin(), h.cells.end(), c);
            int idx = static_cast<int>(it - h.cells.begin());
            for (int v : h.hexagon_vertices[idx]) removed.set(v);
        }
        if (counter.count(full & ~removed) > 0) return false;
    }
    return true;
}

// Matching generating polynomial sum_k m_k x^k of a small abstract graph
// (m_k = matchings with k edges). Vertices are 0..n-1; memoized on the
// set of still-unused vertices.
inline Polynomial matching_generating_polynomial(int n,
                                                 const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > 64) throw std::invalid_argument("vertex count out of range");
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::invalid_argument("bad edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::unordered_map<std::uint64_t, Polynomial> memo;
    auto rec = [&](auto&& self, std::uint64_t live) -> Polynomial {
        if (live == 0) return Polynomial(1);
        auto it = memo.find(live);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(live);
        // matchings avoiding v, plus x * matchings using each edge at v
        Polynomial total = self(self, live & ~(1ull << v));
        Polynomial covered;
        for (int u : adj[v])
            if (live >> u & 1) covered += self(self, live & ~(1ull << v) & ~(1ull << u));
        total += covered.shifted_up(1);
        memo.emplace(live, total);
        return total;
    };
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    return rec(rec, all);
}

struct ResonanceProfile {
    std::string code;
    BigInt kekule;
    bool kekulean = false;
    int clar = -1;
    Polynomial sigma;
    Polynomial chi;
    Polynomial phi;
    bool thin = false;
};

// Full profile; for a non-Kekulean system the polynomial fields are left
// zero and kekulean is false rather than raising NotKekulean.
inline ResonanceProfile analyze(const HexSystem& h,
                                SextetParity parity = SextetParity::odd) {
    ResonanceProfile profile;
    profile.code = h.code;
    profile.kekule = kekule_count(h);
    profile.kekulean = profile.kekule > 0;
    profile.thin = is_thin(h);
    if (profile.kekulean) {
        auto [sigma, chi] = sextet_and_clar_polynomials(h);
        profile.sigma = std::move(sigma);
        profile.chi = std::move(chi);
        profile.phi = proper_sextet_polynomial(h, parity);
        profile.clar = profile.sigma.degree();
    }
    return profile;
}

}  // namespace hexpoly
