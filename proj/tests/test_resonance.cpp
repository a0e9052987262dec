#include <catch2/catch_amalgamated.hpp>

#include <hexpoly/families.hpp>
#include <hexpoly/resonance.hpp>

#include <vector>

using namespace hexpoly;

namespace {

Polynomial poly(std::vector<BigInt> coeffs) { return Polynomial(std::move(coeffs)); }

}  // namespace

TEST_CASE("pinned profiles of small systems") {
    struct Row {
        std::vector<Cell> cells;
        BigInt kekule;
        int clar;
        Polynomial sigma;
        Polynomial chi;
        Polynomial phi;
        bool thin;
    };
    const std::vector<Row> rows{
        // benzene
        {{{0, 0}}, 2, 1, poly({1, 1}), poly({2, 1}), poly({1, 1}), true},
        // naphthalene
        {{{0, 0}, {1, 0}}, 3, 1, poly({1, 2}), poly({3, 2}), poly({1, 2}), true},
        // anthracene
        {line_cells(3), 4, 1, poly({1, 3}), poly({4, 3}), poly({1, 3}), true},
        // bent three-chain
        {{{0, 0}, {0, 1}, {1, 1}}, 5, 2, poly({1, 3, 1}), poly({5, 5, 1}), poly({1, 3, 1}), true},
        // triphenylene
        {{{0, 0}, {1, 0}, {-1, 1}, {0, -1}},
         9, 3, poly({1, 4, 3, 1}), poly({9, 13, 6, 1}), poly({1, 4, 3, 1}), true},
        // pyrene
        {pyrene_cells(1), 6, 2, poly({1, 4, 1}), poly({6, 6, 1}), poly({1, 4, 1}), true},
        // two fused pyrene blocks
        {pyrene_cells(2), 35, 4, poly({1, 8, 17, 8, 1}), poly({35, 70, 47, 12, 1}),
         poly({1, 8, 17, 8, 1}), true},
        // coronene: not thin, and the proper-sextet count differs from the
        // resonant-pattern count in the linear coefficient
        {coronene_cells(), 20, 3, poly({1, 7, 9, 2}), poly({20, 32, 15, 2}),
         poly({1, 8, 9, 2}), false},
    };
    for (const Row& row : rows) {
        HexSystem h = build_from_cells(row.cells);
        ResonanceProfile prof = analyze(h);
        CHECK(prof.kekulean);
        CHECK(prof.kekule == row.kekule);
        CHECK(prof.clar == row.clar);
        CHECK(prof.sigma == row.sigma);
        CHECK(prof.chi == row.chi);
        CHECK(prof.phi == row.phi);
        CHECK(prof.thin == row.thin);
        CHECK(clar_number(h) == row.clar);
        CHECK(kekule_count(h) == row.kekule);
    }
}

TEST_CASE("coronene with an extra hexagon stays outside the thin class") {
    auto cells = coronene_cells();
    cells.push_back({2, 0});
    HexSystem h = build_from_cells(cells);
    ResonanceProfile prof = analyze(h);
    CHECK(prof.kekule == 34);
    CHECK_FALSE(prof.thin);
    CHECK(prof.sigma == poly({1, 8, 15, 8, 1}));
    CHECK(prof.phi == poly({1, 9, 15, 8, 1}));
    CHECK(prof.sigma.evaluate(BigInt(1)) == 33);  // one short of the Kekule count
}

TEST_CASE("non-Kekulean systems") {
    // odd vertex count
    auto odd_cells = coronene_cells();
    odd_cells.push_back({2, -1});
    // even vertex count, still without a perfect matching
    std::vector<Cell> triangle{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};

    for (const auto& cells : {odd_cells, triangle}) {
        HexSystem h = build_from_cells(cells);
        CHECK(kekule_count(h) == 0);
        CHECK_THROWS_AS(sextet_polynomial(h), NotKekulean);
        CHECK_THROWS_AS(clar_covering_polynomial(h), NotKekulean);
        CHECK_THROWS_AS(proper_sextet_polynomial(h), NotKekulean);
        ResonanceProfile prof = analyze(h);
        CHECK_FALSE(prof.kekulean);
        CHECK(prof.clar == -1);
        CHECK(prof.sigma.is_zero());
        CHECK(prof.chi.is_zero());
        CHECK(prof.phi.is_zero());
    }
    HexSystem tri = build_from_cells(triangle);
    CHECK(tri.vertex_count() == 22);  // even, so parity alone does not explain it
}

TEST_CASE("shifted-argument identity across every system with up to five hexagons") {
    int kekulean_seen = 0;
    enumerate_polyhexes(5, [&](const HexSystem& h) {
        ResonanceProfile prof = analyze(h);
        if (!prof.kekulean) return;
        ++kekulean_seen;
        // the Clar covering polynomial is the proper-sextet polynomial at x+1
        CHECK(prof.chi == prof.phi.shift_compose(BigInt(1)));
        // evaluations: chi(0) and phi(1) both count perfect matchings
        CHECK(prof.chi[0] == prof.kekule);
        CHECK(prof.phi.evaluate(BigInt(1)) == prof.kekule);
        CHECK(prof.sigma[0] == 1);
        // all three polynomials peak at the Clar number
        CHECK(prof.sigma.degree() == prof.clar);
        CHECK(prof.chi.degree() == prof.clar);
        CHECK(prof.phi.degree() == prof.clar);
        // small systems cannot contain the coronene pattern, hence are thin,
        // and for thin systems the sextet statistics collapse
        CHECK(prof.thin);
        CHECK(prof.phi == prof.sigma);
        CHECK(prof.sigma.evaluate(BigInt(1)) == prof.kekule);
        // the proper triple can be chosen with either parity
        CHECK(proper_sextet_polynomial(h, SextetParity::even) == prof.phi);
    });
    CHECK(kekulean_seen > 20);
}

TEST_CASE("parity choice does not change the coronene proper-sextet counts") {
    HexSystem h = build_from_cells(coronene_cells());
    CHECK(proper_sextet_polynomial(h, SextetParity::odd) ==
          proper_sextet_polynomial(h, SextetParity::even));
}

TEST_CASE("straight chains") {
    for (int n = 1; n <= 6; ++n) {
        HexSystem h = build_from_cells(line_cells(n));
        CHECK(kekule_count(h) == n + 1);
        CHECK(sextet_polynomial(h) == line_poly(n));
        CHECK(clar_number(h) == 1);
    }
}

TEST_CASE("segmented chains realize the segment recurrence") {
    for (int m = 2; m <= 5; ++m)
        for (int n = 1; n <= 4; ++n) {
            HexSystem h = build_from_cells(line_m_cells(m, n));
            CHECK(sextet_polynomial(h) == line_m_poly(m, n));
        }
}

TEST_CASE("pyrene chains realize the pyrene recurrence and Kekule closed form") {
    for (int n = 1; n <= 3; ++n) {
        HexSystem h = build_from_cells(pyrene_cells(n));
        ResonanceProfile prof = analyze(h);
        CHECK(prof.sigma == pyrene(n));
        CHECK(prof.phi == pyrene(n));
        CHECK(prof.thin);
        CHECK(prof.kekule == pyrene_kekule_floor(n));
        CHECK(prof.clar == 2 * n);
    }
}

TEST_CASE("matching generating polynomials of small graphs") {
    // path on four vertices
    CHECK(matching_generating_polynomial(4, {{0, 1}, {1, 2}, {2, 3}}) == poly({1, 3, 1}));
    // six-cycle
    CHECK(matching_generating_polynomial(
              6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}) == poly({1, 6, 9, 2}));
    // complete graph on four vertices
    CHECK(matching_generating_polynomial(
              4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) == poly({1, 6, 3}));
    // star with three leaves
    CHECK(matching_generating_polynomial(4, {{0, 1}, {0, 2}, {0, 3}}) == poly({1, 3}));
    // edgeless graphs have only the empty matching
    CHECK(matching_generating_polynomial(0, {}) == poly({1}));
    CHECK(matching_generating_polynomial(5, {}) == poly({1}));

    CHECK_THROWS_AS(matching_generating_polynomial(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(matching_generating_polynomial(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(matching_generating_polynomial(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("segmented-chain polynomials are caterpillar matching polynomials") {
    // Spine v1..vn, m-2 pendant leaves on every spine vertex and one extra
    // on v1: its matchings grouped by size obey the same recurrence as the
    // segmented chains.
    for (int m = 2; m <= 5; ++m)
        for (int n = 1; n <= 6; ++n) {
            std::vector<std::pair<int, int>> edges;
            int next = n;  // leaves take ids after the spine
            for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
            for (int v = 0; v < n; ++v) {
                int leaves = (v == 0) ? m - 1 : m - 2;
                for (int l = 0; l < leaves; ++l) edges.push_back({v, next++});
            }
            CHECK(matching_generating_polynomial(next, edges) == line_m_poly(m, n));
        }
}

TEST_CASE("systems beyond the vertex capacity are rejected") {
    HexSystem h = build_from_cells(line_cells(48));  // 194 vertices
    CHECK(h.vertex_count() == 194);
    CHECK_THROWS_AS(kekule_count(h), std::length_error);
}
