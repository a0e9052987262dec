#include <catch2/catch_amalgamated.hpp>

#include <hexpoly/hexsys.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace hexpoly;

TEST_CASE("single hexagon has the benzene skeleton") {
    HexSystem h = build_from_cells({{0, 0}});
    CHECK(h.hexagon_count() == 1);
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 6);
    CHECK(h.code == "0,0");
    for (const auto& nbrs : h.adjacency) CHECK(nbrs.size() == 2);
}

TEST_CASE("vertex and edge counts of small systems") {
    struct Row {
        std::vector<Cell> cells;
        int vertices;
        int edges;
    };
    const std::vector<Row> rows{
        {{{0, 0}, {1, 0}}, 10, 11},                          // naphthalene
        {line_cells(3), 14, 16},                             // anthracene
        {{{0, 0}, {0, 1}, {1, 1}}, 14, 16},                  // bent three-chain
        {pyrene_cells(1), 16, 19},                           // pyrene
        {{{0, 0}, {1, 0}, {-1, 1}, {0, -1}}, 18, 21},        // triphenylene
        {coronene_cells(), 24, 30},                          // coronene
    };
    for (const Row& row : rows) {
        HexSystem h = build_from_cells(row.cells);
        CHECK(h.vertex_count() == row.vertices);
        CHECK(h.edge_count() == row.edges);
        CHECK(h.vertex_count() <= 4 * h.hexagon_count() + 2);
    }
}

TEST_CASE("catacondensed chains meet the 4h+2 vertex bound with equality") {
    for (int n = 1; n <= 8; ++n) {
        HexSystem h = build_from_cells(line_cells(n));
        CHECK(h.vertex_count() == 4 * n + 2);
        CHECK(h.edge_count() == 5 * n + 1);
    }
}

TEST_CASE("every hexagon's corner list is a 6-cycle in the graph") {
    HexSystem h = build_from_cells({{0, 0}, {1, 0}, {0, 1}, {1, -1}});
    for (const auto& hex : h.hexagon_vertices)
        for (int i = 0; i < 6; ++i) {
            int a = hex[i], b = hex[(i + 1) % 6];
            const auto& nbrs = h.adjacency[a];
            CHECK(std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end());
        }
}

TEST_CASE("disconnected cell sets are rejected") {
    CHECK_THROWS_AS(build_from_cells({{0, 0}, {2, 0}}), DisconnectedCells);
    CHECK_THROWS_AS(build_from_cells({{0, 0}, {0, 2}, {3, 3}}), DisconnectedCells);
}

TEST_CASE("cell sets enclosing a hole are rejected") {
    // The six neighbors of the origin form a ring with an empty center.
    std::vector<Cell> ring(kNeighborOffsets.begin(), kNeighborOffsets.end());
    CHECK_THROWS_AS(build_from_cells(ring), HasHole);
    // Filling the center makes it the 7-cell wreath, which is fine.
    ring.push_back({0, 0});
    CHECK_NOTHROW(build_from_cells(ring));
}

TEST_CASE("empty and duplicated input cells") {
    CHECK_THROWS_AS(build_from_cells({}), std::invalid_argument);
    HexSystem h = build_from_cells({{0, 0}, {1, 0}, {0, 0}});
    CHECK(h.hexagon_count() == 2);
    CHECK(h.vertex_count() == 10);
}

TEST_CASE("canonical code is invariant under the twelve symmetries and translation") {
    const std::vector<std::vector<Cell>> shapes{
        {{0, 0}, {0, 1}, {1, 1}},
        {{0, 0}, {1, 0}, {-1, 1}, {0, -1}},
        pyrene_cells(1),
        line_cells(4),
        line_m_cells(3, 2),
    };
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> offset(-7, 7);
    for (const auto& cells : shapes) {
        std::string code = canonical_code(cells);
        for (int t = 0; t < 12; ++t) {
            std::vector<Cell> image;
            Cell shift{offset(rng), offset(rng)};
            for (Cell c : cells) image.push_back(apply_symmetry(c, t) + shift);
            CHECK(canonical_code(image) == code);
        }
    }
}

TEST_CASE("the twelve images of a domino give exactly three placements") {
    const std::vector<Cell> domino{{0, 0}, {1, 0}};
    std::set<std::string> placements;
    for (int t = 0; t < 12; ++t) {
        std::vector<Cell> image;
        for (Cell c : domino) image.push_back(apply_symmetry(c, t));
        placements.insert(serialize_cells(image));
    }
    CHECK(placements.size() == 3);
}

TEST_CASE("symmetry generators have the expected orders") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coord(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        Cell c{coord(rng), coord(rng)};
        Cell r = c;
        for (int i = 0; i < 6; ++i) r = rotate60(r);
        CHECK(r == c);
        CHECK(mirror(mirror(c)) == c);
    }
}

TEST_CASE("serialize and parse round-trip") {
    const std::vector<Cell> cells{{2, -1}, {1, 0}, {1, 1}, {2, 0}};
    std::string s = serialize_cells(cells);
    std::vector<Cell> back = parse_cells(s);
    CHECK(serialize_cells(back) == s);
    CHECK(back.size() == cells.size());

    CHECK_THROWS_AS(parse_cells(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_cells("1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cells("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cells("0,0;x"), std::invalid_argument);
}

TEST_CASE("build_from_code matches build_from_cells") {
    HexSystem a = build_from_cells({{0, 0}, {1, 0}, {1, 1}});
    HexSystem b = build_from_code(a.code);
    CHECK(a.code == b.code);
    CHECK(a.vertex_count() == b.vertex_count());
    CHECK(a.edge_count() == b.edge_count());
}

TEST_CASE("enumeration counts hole-free systems up to six hexagons") {
    // Distinct shapes under rotation/reflection/translation, holes excluded.
    const std::vector<std::size_t> expected{1, 1, 3, 7, 22, 81};
    std::vector<std::size_t> counts(7, 0);
    int last_h = 0;
    std::string last_code;
    enumerate_polyhexes(6, [&](const HexSystem& h) {
        int n = h.hexagon_count();
        REQUIRE(n >= 1);
        REQUIRE(n <= 6);
        ++counts[n];
        // visit order: by size, then by canonical code
        if (n == last_h) CHECK(h.code > last_code);
        else CHECK(n == last_h + 1);
        last_h = n;
        last_code = h.code;
        CHECK(h.code == canonical_code(h.cells));
        CHECK(h.vertex_count() <= 4 * n + 2);
    });
    for (int n = 1; n <= 6; ++n) CHECK(counts[n] == expected[n - 1]);
}

namespace {

// Independent oracle: enumerate fixed (translation-only) polyhexes by
// breadth-first growth over translation-normalized serializations, then
// group them under the canonical code. Up to five cells no shape can
// enclose a hole, so no filtering is needed.
std::map<int, std::map<std::string, int>> fixed_polyhex_classes(int h_max) {
    std::map<int, std::map<std::string, int>> classes;  // size -> code -> fixed count
    std::set<std::string> level{"0,0"};
    for (int h = 1; h <= h_max; ++h) {
        std::set<std::string> next_level;
        for (const std::string& s : level) {
            std::vector<Cell> cells = parse_cells(s);
            ++classes[h][canonical_code(cells)];
            if (h == h_max) continue;
            std::set<Cell> occupied(cells.begin(), cells.end());
            std::set<Cell> candidates;
            for (const Cell& c : cells)
                for (const Cell& d : kNeighborOffsets)
                    if (!occupied.count(c + d)) candidates.insert(c + d);
            for (const Cell& n : candidates) {
                cells.push_back(n);
                next_level.insert(serialize_cells(cells));
                cells.pop_back();
            }
        }
        level = std::move(next_level);
    }
    return classes;
}

}  // namespace

TEST_CASE("canonical classes agree with a translation-only enumeration") {
    const std::vector<std::size_t> fixed_expected{1, 3, 11, 44, 186};
    const std::vector<std::size_t> free_expected{1, 1, 3, 7, 22};
    auto classes = fixed_polyhex_classes(5);
    for (int h = 1; h <= 5; ++h) {
        std::size_t fixed_total = 0;
        for (const auto& [code, count] : classes[h]) fixed_total += count;
        CHECK(fixed_total == fixed_expected[h - 1]);
        CHECK(classes[h].size() == free_expected[h - 1]);
        // each class size is the symmetry group order over the stabilizer order
        for (const auto& [code, count] : classes[h]) CHECK(12 % count == 0);
    }

    // The enumerator must visit exactly the canonical representatives.
    std::map<int, std::set<std::string>> visited;
    enumerate_polyhexes(5, [&](const HexSystem& h) { visited[h.hexagon_count()].insert(h.code); });
    for (int h = 1; h <= 5; ++h) {
        std::set<std::string> oracle;
        for (const auto& [code, count] : classes[h]) oracle.insert(code);
        CHECK(visited[h] == oracle);
    }
}

TEST_CASE("family geometries") {
    CHECK(serialize_cells(family_cells({"line", 4, 0})) == serialize_cells(line_cells(4)));
    CHECK(serialize_cells(family_cells({"pyrene", 2, 0})) == serialize_cells(pyrene_cells(2)));
    CHECK(serialize_cells(family_cells({"line-m", 3, 4})) == serialize_cells(line_m_cells(4, 3)));

    // a single segment of the segmented chain is a straight chain one short
    for (int m = 2; m <= 6; ++m)
        CHECK(canonical_code(line_m_cells(m, 1)) == canonical_code(line_cells(m - 1)));

    CHECK(build_from_cells(pyrene_cells(2)).vertex_count() == 30);
    CHECK(build_from_cells(pyrene_cells(3)).vertex_count() == 44);

    CHECK_THROWS_AS(family_cells({"u", 3, 0}), UnknownFamily);
    CHECK_THROWS_AS(family_cells({"v", 3, 0}), UnknownFamily);
    CHECK_THROWS_AS(family_cells({"hexagon-spiral", 3, 0}), UnknownFamily);

    CHECK_THROWS_AS(line_cells(0), std::invalid_argument);
    CHECK_THROWS_AS(line_m_cells(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(line_m_cells(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(pyrene_cells(0), std::invalid_argument);
}
