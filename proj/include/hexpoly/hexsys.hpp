#pragma once

// Hexagonal systems on the axial lattice: cell sets are validated into
// vertex/edge structures, normalized into canonical codes under the twelve
// lattice symmetries, enumerated exhaustively by hexagon count, and built
// for the named catacondensed/pericondensed families.
//
// Conventions: pointy-top hexagons, axial coordinates (q, r) with
// neighbors (+-1,0), (0,+-1), (1,-1), (-1,1). The cell (q, r) has center
// (2q + r, -3r) in doubled vertex coordinates, and its six corners are
// listed clockwise starting from the topmost vertex.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <functional>
#include <vector>

namespace hexpoly {

struct DisconnectedCells : std::domain_error {
    DisconnectedCells() : std::domain_error("cells do not form a connected system") {}
};

struct HasHole : std::domain_error {
    HasHole() : std::domain_error("cell set encloses a hole") {}
};

struct UnknownFamily : std::domain_error {
    explicit UnknownFamily(const std::string& what) : std::domain_error(what) {}
};

struct Cell {
    int q = 0;
    int r = 0;
    auto operator<=>(const Cell&) const = default;
};

inline constexpr std::array<Cell, 6> kNeighborOffsets{
    Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}, Cell{1, -1}, Cell{-1, 1}};

inline Cell operator+(Cell a, Cell b) { return {a.q + b.q, a.r + b.r}; }

// 60-degree rotation about the origin and the reflection swapping the two
// axial coordinates; together they generate the 12 lattice symmetries.
inline Cell rotate60(Cell c) { return {-c.r, c.q + c.r}; }
inline Cell mirror(Cell c) { return {c.r, c.q}; }

inline Cell apply_symmetry(Cell c, int t) {
    if (t >= 6) {
        c = mirror(c);
        t -= 6;
    }
    for (int i = 0; i < t; ++i) c = rotate60(c);
    return c;
}

// Translate so min q = min r = 0, sort, and render "q,r;q,r;...".
inline std::string serialize_cells(std::vector<Cell> cells) {
    if (cells.empty()) throw std::invalid_argument("empty cell set");
    int min_q = cells[0].q, min_r = cells[0].r;
    for (const Cell& c : cells) {
        min_q = std::min(min_q, c.q);
        min_r = std::min(min_r, c.r);
    }
    for (Cell& c : cells) {
        c.q -= min_q;
        c.r -= min_r;
    }
    std::sort(cells.begin(), cells.end());
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ";";
        out << cells[i].q << "," << cells[i].r;
    }
    return out.str();
}

// Lexicographically least serialization over the symmetry group: a
// translation/rotation/reflection invariant of the cell set.
inline std::string canonical_code(const std::vector<Cell>& cells) {
    std::string best;
    std::vector<Cell> image(cells.size());
    for (int t = 0; t < 12; ++t) {
        for (std::size_t i = 0; i < cells.size(); ++i) image[i] = apply_symmetry(cells[i], t);
        std::string s = serialize_cells(image);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

inline std::vector<Cell> parse_cells(const std::string& code) {
    std::vector<Cell> cells;
    std::istringstream in(code);
    std::string item;
    while (std::getline(in, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad cell: " + item);
        try {
            Cell c{std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))};
            cells.push_back(c);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cell: " + item);
        }
    }
    if (cells.empty()) throw std::invalid_argument("empty cell list");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

struct HexSystem {
    std::vector<Cell> cells;  // sorted, deduplicated
    std::string code;         // canonical code

    // vertex ids index vertex_coords; edges store id pairs with a < b
    std::vector<std::pair<int, int>> vertex_coords;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<std::vector<int>> adjacency;
    // per cell, vertex ids clockwise from the topmost corner
    std::vector<std::array<int, 6>> hexagon_vertices;

    int hexagon_count() const { return static_cast<int>(cells.size()); }
    int vertex_count() const { return static_cast<int>(vertex_coords.size()); }
    int edge_count() const { return static_cast<int>(edge_list.size()); }
};

namespace detail {

inline std::array<std::pair<int, int>, 6> cell_corners(Cell c) {
    int x = 2 * c.q + c.r;
    int y = -3 * c.r;
    return {{{x, y + 2}, {x + 1, y + 1}, {x + 1, y - 1}, {x, y - 2}, {x - 1, y - 1}, {x - 1, y + 1}}};
}

inline void require_connected(const std::vector<Cell>& cells) {
    std::set<Cell> todo(cells.begin(), cells.end());
    std::queue<Cell> frontier;
    frontier.push(*todo.begin());
    todo.erase(todo.begin());
    while (!frontier.empty()) {
        Cell c = frontier.front();
        frontier.pop();
        for (const Cell& d : kNeighborOffsets) {
            auto it = todo.find(c + d);
            if (it != todo.end()) {
                frontier.push(*it);
                todo.erase(it);
            }
        }
    }
    if (!todo.empty()) throw DisconnectedCells();
}

// Flood the complement from the box ring; unreachable empty cells inside
// the box are enclosed holes.
inline bool has_enclosed_hole(const std::vector<Cell>& cells) {
    std::set<Cell> occupied(cells.begin(), cells.end());
    int q0 = cells[0].q, q1 = cells[0].q, r0 = cells[0].r, r1 = cells[0].r;
    for (const Cell& c : cells) {
        q0 = std::min(q0, c.q);
        q1 = std::max(q1, c.q);
        r0 = std::min(r0, c.r);
        r1 = std::max(r1, c.r);
    }
    --q0, --r0, ++q1, ++r1;
    auto inside = [&](Cell c) { return c.q >= q0 && c.q <= q1 && c.r >= r0 && c.r <= r1; };
    std::set<Cell> seen;
    std::queue<Cell> frontier;
    for (int q = q0; q <= q1; ++q)
        for (int r : {r0, r1})
            if (!occupied.count({q, r})) {
                seen.insert({q, r});
                frontier.push({q, r});
            }
    for (int r = r0; r <= r1; ++r)
        for (int q : {q0, q1})
            if (!occupied.count({q, r})) {
                seen.insert({q, r});
                frontier.push({q, r});
            }
    while (!frontier.empty()) {
        Cell c = frontier.front();
        frontier.pop();
        for (const Cell& d : kNeighborOffsets) {
            Cell n = c + d;
            if (!inside(n) || occupied.count(n) || seen.count(n)) continue;
            seen.insert(n);
            frontier.push(n);
        }
    }
    long long empties = static_cast<long long>(q1 - q0 + 1) * (r1 - r0 + 1) -
                        static_cast<long long>(cells.size());
    return static_cast<long long>(seen.size()) != empties;
}

// Depth-first articulation-point scan; a hexagonal system must be
// 2-connected, so finding one means the construction itself is broken.
inline bool has_articulation_point(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool found = false;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : adj[v]) {
            if (u == parent) continue;
            if (disc[u] != -1) {
                low[v] = std::min(low[v], disc[u]);
                continue;
            }
            ++children;
            dfs(u, v);
            low[v] = std::min(low[v], low[u]);
            if (parent != -1 && low[u] >= disc[v]) found = true;
        }
        if (parent == -1 && children > 1) found = true;
    };
    dfs(0, -1);
    return found;
}

}  // namespace detail

// Validate a cell set and assemble the vertex/edge structure. Throws
// DisconnectedCells or HasHole for inputs outside the domain; internal
// structural invariants (2-connectivity, edge sharing, the vertex bound)
// are checked and raise logic_error if ever violated.
inline HexSystem build_from_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.empty()) throw std::invalid_argument("empty cell set");
    detail::require_connected(cells);
    if (detail::has_enclosed_hole(cells)) throw HasHole();

    HexSystem h;
    h.cells = cells;
    h.code = canonical_code(cells);

    std::map<std::pair<int, int>, int> vertex_id;
    for (const Cell& c : cells)
        for (const auto& corner : detail::cell_corners(c)) vertex_id.emplace(corner, 0);
    int next = 0;
    for (auto& [coord, id] : vertex_id) {
        id = next++;
        h.vertex_coords.push_back(coord);
    }

    std::map<std::pair<int, int>, int> edge_sharing;
    for (const Cell& c : cells) {
        auto corners = detail::cell_corners(c);
        std::array<int, 6>& hex = h.hexagon_vertices.emplace_back();
        for (int i = 0; i < 6; ++i) hex[i] = vertex_id.at(corners[i]);
        for (int i = 0; i < 6; ++i) {
            int a = hex[i], b = hex[(i + 1) % 6];
            if (a > b) std::swap(a, b);
            ++edge_sharing[{a, b}];
        }
    }

    h.adjacency.resize(h.vertex_coords.size());
    for (const auto& [edge, count] : edge_sharing) {
        if (count != 1 && count != 2) throw std::logic_error("edge shared by more than two hexagons");
        h.edge_list.push_back(edge);
        h.adjacency[edge.first].push_back(edge.second);
        h.adjacency[edge.second].push_back(edge.first);
    }
    for (auto& nbrs : h.adjacency) std::sort(nbrs.begin(), nbrs.end());

    if (h.vertex_count() > 4 * h.hexagon_count() + 2)
        throw std::logic_error("vertex count exceeds 4h + 2");
    if (detail::has_articulation_point(h.adjacency))
        throw std::logic_error("hexagonal system is not 2-connected");
    return h;
}

inline HexSystem build_from_code(const std::string& code) { return build_from_cells(parse_cells(code)); }

// Visit every hexagonal system (free polyhex, no enclosed holes) with 1 to
// h_max cells, ordered by cell count and then canonical code. Growth runs
// through all connected polyhexes, holes included, because removing a cell
// from a hole-free system can leave a holed one (a ring is a hole-free
// 7-cell system minus its center); holed shapes are filtered at yield.
inline void enumerate_polyhexes(int h_max, const std::function<void(const HexSystem&)>& visit) {
    if (h_max < 1) return;
    std::set<std::string> level{"0,0"};
    for (int h = 1; h <= h_max; ++h) {
        std::set<std::string> next_level;
        for (const std::string& code : level) {
            std::vector<Cell> cells = parse_cells(code);
            if (!detail::has_enclosed_hole(cells)) visit(build_from_cells(cells));
            if (h == h_max) continue;
            std::set<Cell> occupied(cells.begin(), cells.end());
            std::set<Cell> candidates;
            for (const Cell& c : cells)
                for (const Cell& d : kNeighborOffsets)
                    if (!occupied.count(c + d)) candidates.insert(c + d);
            for (const Cell& n : candidates) {
                cells.push_back(n);
                next_level.insert(canonical_code(cells));
                cells.pop_back();
            }
        }
        level = std::move(next_level);
    }
}

// ---------------------------------------------------------------------------
// Named family geometries.

// n collinear hexagons.
inline std::vector<Cell> line_cells(int n) {
    if (n < 1) throw std::invalid_argument("need at least one hexagon");
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i) cells.push_back({i, 0});
    return cells;
}

// Segmented catacondensed chain: n maximal straight runs, the first n-1 of
// m hexagons and the last of m-1, consecutive runs sharing their kink
// hexagon and turning alternately left and right (every kink is angular).
inline std::vector<Cell> line_m_cells(int m, int n) {
    if (m < 2) throw std::invalid_argument("segment length must be at least 2");
    if (n < 1) throw std::invalid_argument("need at least one segment");
    std::vector<Cell> cells{{0, 0}};
    Cell pos{0, 0};
    const Cell dir_straight{1, 0};  // east
    const Cell dir_up{1, -1};       // northeast
    for (int seg = 1; seg <= n; ++seg) {
        Cell dir = (seg % 2 == 1) ? dir_straight : dir_up;
        int extend = (seg == n) ? m - 2 : m - 1;
        for (int i = 0; i < extend; ++i) {
            pos = pos + dir;
            cells.push_back(pos);
        }
    }
    return cells;
}

// The 7-cell wreath: a hexagon and all six of its neighbors.
inline std::vector<Cell> coronene_cells() {
    std::vector<Cell> cells{{0, 0}};
    for (const Cell& d : kNeighborOffsets) cells.push_back(d);
    return cells;
}

// Four cells in the pyrene arrangement: a vertical pair flanked east and
// west. Chains of fused pyrene units repeat this block shifted two rows
// south; the shift was fixed by matching the resulting sextet polynomials
// against the pyrene-chain recurrence.
inline std::vector<Cell> pyrene_cells(int n) {
    if (n < 1) throw std::invalid_argument("need at least one unit");
    const std::array<Cell, 4> unit{Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{-1, 1}};
    const Cell shift{0, 2};
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i)
        for (const Cell& c : unit) cells.push_back({c.q + i * shift.q, c.r + i * shift.r});
    return cells;
}

struct FamilyRequest {
    std::string name;  // "pyrene", "line", "line-m"
    int n = 0;
    int m = 0;  // only for line-m
};

inline std::vector<Cell> family_cells(const FamilyRequest& req) {
    if (req.name == "pyrene") return pyrene_cells(req.n);
    if (req.name == "line") return line_cells(req.n);
    if (req.name == "line-m") return line_m_cells(req.m, req.n);
    if (req.name == "u" || req.name == "v")
        throw UnknownFamily("no cell geometry for family '" + req.name +
                            "'; its polynomials are available through the recurrence");
    throw UnknownFamily("unknown family '" + req.name + "'");
}

}  // namespace hexpoly
