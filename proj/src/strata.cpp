// Copyright 2026 The sphtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphtri/strata.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "json.hpp"
#include "sphtri/error.hpp"

namespace sphtri {

namespace {

// The twelve edge directions +-e_i +-e_j at a vertex.
std::vector<Int3> edge_directions() {
  std::vector<Int3> dirs;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) {
          Int3 d{0, 0, 0};
          d[i] = si;
          d[j] = sj;
          dirs.push_back(d);
        }
  return dirs;
}

Int3 add(const Int3& a, const Int3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Int3 unit(int axis, int scale = 1) {
  Int3 e{0, 0, 0};
  e[axis] = scale;
  return e;
}

bool in_box(const Int3& v, int box) {
  return v[0] >= 0 && v[1] >= 0 && v[2] >= 0 && v[0] <= box && v[1] <= box && v[2] <= box;
}

}  // namespace

StrataInventory enumerate(int box) {
  if (box < 1) throw Error(ErrorCode::BadInput, "box must be >= 1");
  StrataInventory inv;
  inv.box = box;
  const auto dirs = edge_directions();
  for (int m = 0; m <= box; ++m)
    for (int n = 0; n <= box; ++n)
      for (int k = 0; k <= box; ++k) {
        if ((m + n + k) % 2 == 0) continue;
        const LatticeVertex v{m, n, k};
        inv.vertices.push_back({v, vertex_balance(v)});
        for (const auto& d : dirs) {
          const Int3 w = add(v.coords(), d);
          if (!in_box(w, box) || !(v.coords() < w)) continue;
          const EdgeRef e = EdgeRef::between(v, LatticeVertex{w});
          inv.edges.push_back({e, edge_in_x1(e), edge_balance(e)});
        }
      }
  std::sort(inv.edges.begin(), inv.edges.end(),
            [](const InventoryEdge& a, const InventoryEdge& b) { return a.edge < b.edge; });
  for (int m = 0; m <= box; ++m)
    for (int n = 0; n <= box; ++n)
      for (int k = 0; k <= box; ++k) {
        const TetraIndex t{{m, n, k}};
        InventoryTetra it{t, tetra_balance(t), {}};
        for (const auto& e : tetra_edges(t)) {
          if (edge_in_x1(e)) it.x1_edges.push_back(e);
        }
        std::sort(it.x1_edges.begin(), it.x1_edges.end());
        inv.tetrahedra.push_back(std::move(it));
      }
  return inv;
}

std::vector<EdgeRef> edges_at_vertex(const LatticeVertex& v) {
  std::vector<EdgeRef> out;
  for (const auto& d : edge_directions()) {
    const Int3 w = add(v.coords(), d);
    if (w[0] < 0 || w[1] < 0 || w[2] < 0) continue;
    const EdgeRef e = EdgeRef::between(v, LatticeVertex{w});
    if (edge_in_x1(e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

UnbalancedSequence::UnbalancedSequence(const EdgeRef& seed)
    : seed_(seed), balanced_(seed.first()), marginal_(seed.second()) {
  if (edge_balance(seed).balance != Balance::SemiBalanced || !edge_in_x1(seed)) {
    throw Error(ErrorCode::NotSemiBalanced,
                to_string(seed) + " is not a semi-balanced edge of X_1");
  }
  if (!is_balanced(balanced_.coords())) std::swap(balanced_, marginal_);
  axis_ = dominant_axis(marginal_.coords());
}

TetraIndex UnbalancedSequence::tetra(int j) const {
  if (j < 0) throw Error(ErrorCode::BadInput, "negative sequence position");
  return TetraIndex{add(marginal_.coords(), unit(axis_, j))};
}

EdgeRef UnbalancedSequence::edge(int j) const {
  if (j < 0) throw Error(ErrorCode::BadInput, "negative sequence position");
  if (j == 0) return seed_;
  const int o1 = (axis_ + 1) % 3, o2 = (axis_ + 2) % 3;
  const Int3 base = add(marginal_.coords(), unit(axis_, j));
  if (j % 2 == 1) {
    return EdgeRef::between(LatticeVertex{add(base, unit(o1))}, LatticeVertex{add(base, unit(o2))});
  }
  return EdgeRef::between(LatticeVertex{add(base, add(unit(o1), unit(o2)))}, LatticeVertex{base});
}

std::vector<UnbalancedSequence::Item> UnbalancedSequence::items(int horizon) const {
  std::vector<Item> out;
  out.emplace_back(tetra(0));
  for (int j = 1; j <= horizon; ++j) {
    out.emplace_back(edge(j));
    out.emplace_back(tetra(j));
  }
  return out;
}

UnbalancedSequence sequence_from_seed(const EdgeRef& seed) { return UnbalancedSequence(seed); }

namespace {

// Marginal vertex (n+k+1, n, k) (up to the axis permutation) and the seed
// edge rising from it.
std::optional<EdgeRef> seed_from_marginal(int axis, int o1_value, int o2_value) {
  Int3 w{};
  const int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
  w[axis] = o1_value + o2_value + 1;
  w[o1] = o1_value;
  w[o2] = o2_value;
  Int3 v = w;
  v[o1] += 1;
  v[o2] += 1;
  const EdgeRef seed = EdgeRef::between(LatticeVertex{w}, LatticeVertex{v});
  if (edge_balance(seed).balance != Balance::SemiBalanced || !edge_in_x1(seed)) {
    return std::nullopt;
  }
  return seed;
}

}  // namespace

std::optional<SequencePosition> sequence_of(const TetraIndex& t) {
  const BalanceClass bc = tetra_balance(t);
  if (bc.balance == Balance::Balanced) return std::nullopt;
  if (bc.balance == Balance::SemiBalanced && bc.pointed) return std::nullopt;
  for (int axis = 0; axis < 3; ++axis) {
    const int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
    const int j = t[axis] - (t[o1] + t[o2] + 1);
    if (j < 0) continue;
    const auto seed = seed_from_marginal(axis, t[o1], t[o2]);
    if (!seed) continue;
    if (UnbalancedSequence(*seed).tetra(j) == t) return SequencePosition{*seed, j};
  }
  return std::nullopt;
}

std::optional<SequencePosition> sequence_of(const EdgeRef& e) {
  if (!edge_in_x1(e)) return std::nullopt;
  const Balance b = edge_balance(e).balance;
  if (b == Balance::Balanced) return std::nullopt;
  if (b == Balance::SemiBalanced) return SequencePosition{e, 0};
  const auto& u = e.first();
  const auto& v = e.second();
  for (int axis = 0; axis < 3; ++axis) {
    if (u[axis] != v[axis]) continue;
    const int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
    const int n = std::min(u[o1], v[o1]), k = std::min(u[o2], v[o2]);
    const int j = u[axis] - (n + k + 1);
    if (j < 1) continue;
    const auto seed = seed_from_marginal(axis, n, k);
    if (!seed) continue;
    if (UnbalancedSequence(*seed).edge(j) == e) return SequencePosition{*seed, j};
  }
  return std::nullopt;
}

std::optional<SequencePosition> sequence_of(const Stratum& s) {
  if (s.is<InteriorStratum>()) return sequence_of(s.as<InteriorStratum>().tetra);
  if (s.is<EdgeStratum>()) return sequence_of(s.as<EdgeStratum>().edge);
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

struct Halfspace {
  std::array<std::int64_t, 3> normal;  // normal . x <= offset
  std::int64_t offset;
};

std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<Halfspace> tetra_halfspaces(const TetraIndex& idx) {
  const auto verts = tetra_vertices(idx);
  std::vector<Halfspace> out;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<Int3, 3> f{};
    int c = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) f[c++] = verts[i].coords();
    const std::array<std::int64_t, 3> u{f[1][0] - f[0][0], f[1][1] - f[0][1], f[1][2] - f[0][2]};
    const std::array<std::int64_t, 3> w{f[2][0] - f[0][0], f[2][1] - f[0][1], f[2][2] - f[0][2]};
    std::array<std::int64_t, 3> n{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                                  u[0] * w[1] - u[1] * w[0]};
    std::int64_t off = n[0] * f[0][0] + n[1] * f[0][1] + n[2] * f[0][2];
    const auto& o = verts[skip].coords();
    if (n[0] * o[0] + n[1] * o[1] + n[2] * o[2] > off) {
      for (auto& x : n) x = -x;
      off = -off;
    }
    out.push_back({n, off});
  }
  return out;
}

}  // namespace

BalancedPolytope balanced_subpolytope(const TetraIndex& idx) {
  std::vector<Halfspace> hs = tetra_halfspaces(idx);
  hs.push_back({{1, -1, -1}, 0});
  hs.push_back({{-1, 1, -1}, 0});
  hs.push_back({{-1, -1, 1}, 0});

  // Vertex enumeration: every feasible solution of three independent active
  // constraints, in exact rational arithmetic (numerators over det > 0).
  std::set<Int3> doubled;
  const int h = static_cast<int>(hs.size());
  for (int a = 0; a < h; ++a)
    for (int b = a + 1; b < h; ++b)
      for (int c = b + 1; c < h; ++c) {
        const std::array<const Halfspace*, 3> rows{&hs[a], &hs[b], &hs[c]};
        std::array<std::array<std::int64_t, 3>, 3> m{};
        for (int r = 0; r < 3; ++r) m[r] = rows[r]->normal;
        std::int64_t det = det3(m);
        if (det == 0) continue;
        std::array<std::int64_t, 3> num{};
        for (int col = 0; col < 3; ++col) {
          auto mc = m;
          for (int r = 0; r < 3; ++r) mc[r][col] = rows[r]->offset;
          num[col] = det3(mc);
        }
        if (det < 0) {
          det = -det;
          for (auto& x : num) x = -x;
        }
        bool feasible = true;
        for (const auto& H : hs) {
          const std::int64_t lhs = H.normal[0] * num[0] + H.normal[1] * num[1] + H.normal[2] * num[2];
          if (lhs > H.offset * det) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        Int3 d{};
        for (int i = 0; i < 3; ++i) {
          if ((2 * num[i]) % det != 0) {
            throw Error(ErrorCode::BadInput, "non half-integral vertex of T ∩ K in T" +
                                                 to_string(idx.idx));
          }
          d[i] = static_cast<int>(2 * num[i] / det);
        }
        doubled.insert(d);
      }

  BalancedPolytope out{idx, {doubled.begin(), doubled.end()}};
  // Lower-dimensional intersections touch T only on its boundary.
  bool full = false;
  const auto& p = out.doubled_vertices;
  for (std::size_t i = 1; i < p.size() && !full; ++i)
    for (std::size_t j = i + 1; j < p.size() && !full; ++j)
      for (std::size_t k = j + 1; k < p.size() && !full; ++k) {
        std::array<std::array<std::int64_t, 3>, 3> m{};
        for (int c = 0; c < 3; ++c) {
          m[0][c] = p[i][c] - p[0][c];
          m[1][c] = p[j][c] - p[0][c];
          m[2][c] = p[k][c] - p[0][c];
        }
        full = det3(m) != 0;
      }
  if (!full) out.doubled_vertices.clear();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

SkeletonGraph normalized(const std::vector<Int3>& nodes,
                         const std::vector<std::pair<Int3, Int3>>& arcs, Labeling labeling) {
  SkeletonGraph g;
  g.labeling = labeling;
  g.nodes = nodes;
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  auto index = [&](const Int3& v) {
    return static_cast<int>(std::lower_bound(g.nodes.begin(), g.nodes.end(), v) - g.nodes.begin());
  };
  for (const auto& [u, v] : arcs) {
    int a = index(u), b = index(v);
    if (a > b) std::swap(a, b);
    g.arcs.emplace_back(a, b);
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  return g;
}

}  // namespace

SkeletonGraph lambda1_graph(int n) {
  if (n < 0) throw Error(ErrorCode::BadInput, "lambda1_graph size must be >= 0");
  std::vector<Int3> nodes;
  std::vector<std::pair<Int3, Int3>> arcs;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      for (int r = 0; r <= n; ++r) {
        const Int3 v{p, q, r};
        nodes.push_back(v);
        for (int axis = 0; axis < 3; ++axis) {
          if (v[axis] < n) arcs.emplace_back(v, add(v, unit(axis)));
        }
      }
  return normalized(nodes, arcs, Labeling::Pqr);
}

SkeletonGraph balanced_graph(int box) {
  if (box < 1) throw Error(ErrorCode::BadInput, "box must be >= 1");
  std::vector<Int3> nodes;
  std::vector<std::pair<Int3, Int3>> arcs;
  const auto dirs = edge_directions();
  for (int m = 1; m <= box; ++m)
    for (int n = 1; n <= box; ++n)
      for (int k = 1; k <= box; ++k) {
        const Int3 v{m, n, k};
        if ((m + n + k) % 2 == 0 || !is_balanced(v)) continue;
        nodes.push_back(v);
        for (const auto& d : dirs) {
          const Int3 w = add(v, d);
          if (!in_box(w, box) || !(v < w) || !is_balanced(w)) continue;
          if (edge_in_x1(EdgeRef::between(LatticeVertex{v}, LatticeVertex{w}))) {
            arcs.emplace_back(v, w);
          }
        }
      }
  return normalized(nodes, arcs, Labeling::Mnk);
}

SkeletonGraph relabel_to_pqr(const SkeletonGraph& g) {
  if (g.labeling == Labeling::Pqr) return g;
  std::vector<Int3> nodes;
  for (const auto& v : g.nodes) {
    const auto pqr = pqr_from_vertex(LatticeVertex{v});
    if (!pqr) throw Error(ErrorCode::BadInput, "unbalanced node " + to_string(v));
    nodes.push_back(*pqr);
  }
  std::vector<std::pair<Int3, Int3>> arcs;
  for (const auto& [a, b] : g.arcs) arcs.emplace_back(nodes[a], nodes[b]);
  return normalized(nodes, arcs, Labeling::Pqr);
}

SkeletonGraph induced_subgraph(const SkeletonGraph& g, const std::vector<Int3>& nodes) {
  const std::set<Int3> keep(nodes.begin(), nodes.end());
  std::vector<Int3> kept;
  for (const auto& v : g.nodes)
    if (keep.count(v)) kept.push_back(v);
  std::vector<std::pair<Int3, Int3>> arcs;
  for (const auto& [a, b] : g.arcs) {
    if (keep.count(g.nodes[a]) && keep.count(g.nodes[b])) arcs.emplace_back(g.nodes[a], g.nodes[b]);
  }
  return normalized(kept, arcs, g.labeling);
}

bool check_lambda1_isomorphism(int box) {
  const SkeletonGraph mapped = relabel_to_pqr(balanced_graph(box));
  int extent = 0;
  for (const auto& v : mapped.nodes) extent = std::max({extent, v[0], v[1], v[2]});
  const SkeletonGraph cubic = induced_subgraph(lambda1_graph(extent), mapped.nodes);
  return cubic.nodes == mapped.nodes && cubic.arcs == mapped.arcs;
}

// ---------------------------------------------------------------------------

std::string export_graph(const SkeletonGraph& g, GraphFormat format) {
  const char* label = g.labeling == Labeling::Pqr ? "pqr" : "mnk";
  if (format == GraphFormat::Json) {
    nlohmann::json j;
    j["labeling"] = label;
    j["nodes"] = nlohmann::json::array();
    for (const auto& v : g.nodes) j["nodes"].push_back(v);
    j["arcs"] = nlohmann::json::array();
    for (const auto& [a, b] : g.arcs) j["arcs"].push_back({a, b});
    return j.dump() + "\n";
  }
  std::string out = "graph skeleton {\n  label=\"";
  out += label;
  out += "\";\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& v = g.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"" + std::to_string(v[0]) + "," +
           std::to_string(v[1]) + "," + std::to_string(v[2]) + "\"];\n";
  }
  for (const auto& [a, b] : g.arcs) {
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

SkeletonGraph parse_graph_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SkeletonGraph g;
    const std::string label = j.at("labeling").get<std::string>();
    if (label != "pqr" && label != "mnk") throw Error(ErrorCode::BadInput, "unknown labeling");
    g.labeling = label == "pqr" ? Labeling::Pqr : Labeling::Mnk;
    for (const auto& v : j.at("nodes")) g.nodes.push_back(v.get<Int3>());
    for (const auto& a : j.at("arcs")) {
      const auto pair = a.get<std::array<int, 2>>();
      if (pair[0] < 0 || pair[1] < 0 || pair[0] >= static_cast<int>(g.nodes.size()) ||
          pair[1] >= static_cast<int>(g.nodes.size())) {
        throw Error(ErrorCode::BadInput, "arc index out of range");
      }
      g.arcs.emplace_back(pair[0], pair[1]);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, e.what());
  }
}

namespace {

std::string balance_json(const BalanceClass& b) { return to_string(b.balance); }

nlohmann::ordered_json edge_json(const EdgeRef& e) {
  return nlohmann::ordered_json::array({e.first().coords(), e.second().coords()});
}

}  // namespace

std::string inventory_to_json(const StrataInventory& inv) {
  nlohmann::ordered_json j;
  std::map<std::string, int> vcount, ecount, tcount;
  j["box"] = inv.box;
  auto& verts = j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : inv.vertices) {
    nlohmann::ordered_json o;
    o["vertex"] = v.vertex.coords();
    o["balance"] = balance_json(v.balance);
    o["marginal"] = v.balance.marginal;
    ++vcount[o["balance"].get<std::string>()];
    verts.push_back(std::move(o));
  }
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : inv.edges) {
    nlohmann::ordered_json o;
    o["edge"] = edge_json(e.edge);
    o["in_x1"] = e.in_x1;
    o["balance"] = balance_json(e.balance);
    if (e.in_x1) ++ecount[o["balance"].get<std::string>()];
    edges.push_back(std::move(o));
  }
  auto& tetras = j["tetrahedra"] = nlohmann::ordered_json::array();
  for (const auto& t : inv.tetrahedra) {
    nlohmann::ordered_json o;
    o["tetra"] = t.tetra.idx;
    o["balance"] = balance_json(t.balance);
    o["pointed"] = t.balance.pointed;
    o["x1_edges"] = nlohmann::ordered_json::array();
    for (const auto& e : t.x1_edges) o["x1_edges"].push_back(edge_json(e));
    ++tcount[o["balance"].get<std::string>()];
    tetras.push_back(std::move(o));
  }
  auto& counts = j["counts"];
  counts["vertices"] = inv.vertices.size();
  counts["x1_edges"] = std::count_if(inv.edges.begin(), inv.edges.end(),
                                     [](const InventoryEdge& e) { return e.in_x1; });
  counts["tetrahedra"] = inv.tetrahedra.size();
  for (const char* name : {"balanced", "semi-balanced", "unbalanced"}) {
    counts["vertices_" + std::string(name)] = vcount[name];
    counts["x1_edges_" + std::string(name)] = ecount[name];
    counts["tetrahedra_" + std::string(name)] = tcount[name];
  }
  return j.dump() + "\n";
}

}  // namespace sphtri
