#include "hesscoh/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hesscoh {

bool LabeledGraph::has_vertex(std::uint32_t r) const {
  return std::binary_search(vertices.begin(), vertices.end(), r);
}

std::vector<std::size_t> LabeledGraph::degree_sequence() const {
  std::map<std::uint32_t, std::size_t> deg;
  for (auto r : vertices) deg[r] = 0;
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<std::size_t> out;
  out.reserve(vertices.size());
  for (auto r : vertices) out.push_back(deg[r]);
  return out;
}

bool LabeledGraph::is_regular(std::size_t d) const {
  for (auto x : degree_sequence())
    if (x != d) return false;
  return true;
}

bool LabeledGraph::is_cycle() const {
  if (vertices.size() < 3 || edges.size() != vertices.size()) return false;
  if (!is_regular(2)) return false;
  // Walk the cycle; it must close up through every vertex.
  std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::uint32_t start = vertices[0], prev = start, cur = adj[start][0];
  std::size_t steps = 1;
  while (cur != start) {
    auto& nb = adj[cur];
    std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++steps;
    if (steps > edges.size()) return false;
  }
  return steps == vertices.size();
}

namespace {

GraphEdge make_edge(const Perm& w, std::uint32_t wr, std::uint32_t vr, int j, int i) {
  GraphEdge e;
  e.u = std::min(wr, vr);
  e.v = std::max(wr, vr);
  e.pos_j = static_cast<std::uint8_t>(j);
  e.pos_i = static_cast<std::uint8_t>(i);
  int a = w(i), b = w(j);
  e.label_a = static_cast<std::uint8_t>(std::min(a, b));
  e.label_b = static_cast<std::uint8_t>(std::max(a, b));
  return e;
}

void sort_edges(std::vector<GraphEdge>& es) {
  std::sort(es.begin(), es.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.u, x.v, x.pos_j, x.pos_i) < std::tie(y.u, y.v, y.pos_j, y.pos_i);
  });
}

}  // namespace

LabeledGraph build_graph(const HessenbergFunction& h, int max_n) {
  const int n = h.size();
  if (n > max_n)
    throw Error(ErrorKind::TooLarge,
                "graph on " + std::to_string(n) + "! vertices exceeds the size gate");
  LabeledGraph g;
  g.n = n;
  const std::uint32_t N = static_cast<std::uint32_t>(factorial(n));
  g.vertices.resize(N);
  for (std::uint32_t r = 0; r < N; ++r) g.vertices[r] = r;
  for_each_permutation(n, [&](const Perm& w) {
    const std::uint32_t wr = w.lex_rank();
    for (int j = 1; j < n; ++j)
      for (int i = j + 1; i <= h(j); ++i) {
        const std::uint32_t vr = w.swap_positions(i, j).lex_rank();
        if (wr < vr) g.edges.push_back(make_edge(w, wr, vr, j, i));
      }
  });
  sort_edges(g.edges);
  return g;
}

std::vector<LabeledGraph> fixed_level_components(const HessenbergFunction& h, int r,
                                                 int max_n) {
  const int n = h.size();
  if (n > max_n) throw Error(ErrorKind::TooLarge, "size gate");
  if (r < 1 || r > n) throw Error(ErrorKind::BadParameters, "level out of range");

  // Vertices with w(r) = n, and the induced edges.
  std::vector<std::uint32_t> verts;
  for_each_permutation(n, [&](const Perm& w) {
    if (w(r) == n) verts.push_back(w.lex_rank());
  });
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t k = 0; k < verts.size(); ++k) index[verts[k]] = k;

  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::size_t>> adj(verts.size());
  for (std::size_t k = 0; k < verts.size(); ++k) {
    const Perm w = Perm::from_lex_rank(verts[k], n);
    for (int j = 1; j < n; ++j)
      for (int i = j + 1; i <= h(j); ++i) {
        const std::uint32_t vr = w.swap_positions(i, j).lex_rank();
        auto it = index.find(vr);
        if (it == index.end()) continue;
        if (verts[k] < vr) {
          edges.push_back(make_edge(w, verts[k], vr, j, i));
          adj[k].push_back(it->second);
          adj[it->second].push_back(k);
        }
      }
  }

  // Flood fill, components keyed by smallest member.
  std::vector<int> comp(verts.size(), -1);
  int ncomp = 0;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (comp[k] >= 0) continue;
    std::vector<std::size_t> stack{k};
    comp[k] = ncomp;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x])
        if (comp[y] < 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }

  std::vector<LabeledGraph> out(ncomp);
  for (auto& g : out) g.n = n;
  for (std::size_t k = 0; k < verts.size(); ++k) out[comp[k]].vertices.push_back(verts[k]);
  for (const auto& e : edges) out[comp[index[e.u]]].edges.push_back(e);
  for (auto& g : out) {
    std::sort(g.vertices.begin(), g.vertices.end());
    sort_edges(g.edges);
  }
  return out;
}

bool phi_r_check(const HessenbergFunction& h, int r, const LabeledGraph& component) {
  const int n = h.size();
  if (n < 2) return false;
  const HessenbergFunction hr = minor(h, r);
  const Perm cr = Perm::cycle_r(r, n);

  // phi(w) = w c_r restricted to the first n-1 positions; w(r) = n makes the
  // restriction a permutation of [n-1].
  auto phi = [&](std::uint32_t rank) {
    const Perm w = Perm::from_lex_rank(rank, n);
    const Perm wc = w.compose(cr);
    std::vector<int> line(n - 1);
    for (int x = 1; x <= n - 1; ++x) line[x - 1] = wc(x);
    return Perm::from_one_line(line).lex_rank();
  };

  std::vector<std::uint32_t> image;
  image.reserve(component.vertices.size());
  for (auto v : component.vertices) image.push_back(phi(v));
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;

  // The image must be exactly one component of the target graph.
  const auto target_components = [&] {
    std::vector<LabeledGraph> comps;
    // Components of the full graph of h^r: reuse the induced machinery by
    // viewing all of S_{n-1} as the level set of an added fixed point.
    LabeledGraph full = build_graph(hr);
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t k = 0; k < full.vertices.size(); ++k) index[full.vertices[k]] = k;
    std::vector<std::vector<std::size_t>> adj(full.vertices.size());
    for (const auto& e : full.edges) {
      adj[index[e.u]].push_back(index[e.v]);
      adj[index[e.v]].push_back(index[e.u]);
    }
    std::vector<int> comp(full.vertices.size(), -1);
    int ncomp = 0;
    for (std::size_t k = 0; k < full.vertices.size(); ++k) {
      if (comp[k] >= 0) continue;
      std::vector<std::size_t> stack{k};
      comp[k] = ncomp;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : adj[x])
          if (comp[y] < 0) {
            comp[y] = ncomp;
            stack.push_back(y);
          }
      }
      ++ncomp;
    }
    comps.resize(ncomp);
    for (auto& c : comps) c.n = n - 1;
    for (std::size_t k = 0; k < full.vertices.size(); ++k)
      comps[comp[k]].vertices.push_back(full.vertices[k]);
    for (const auto& e : full.edges) comps[comp[index[e.u]]].edges.push_back(e);
    return comps;
  }();

  const LabeledGraph* target = nullptr;
  for (const auto& c : target_components) {
    if (c.vertices.size() != image.size()) continue;
    std::vector<std::uint32_t> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (vs == image) {
      target = &c;
      break;
    }
  }
  if (!target) return false;

  // Edge-by-edge: each component edge maps to a target edge with the same
  // value label, and the counts agree.
  auto edge_key = [](std::uint32_t u, std::uint32_t v, int a, int b) {
    return std::tuple<std::uint32_t, std::uint32_t, int, int>(std::min(u, v), std::max(u, v),
                                                              a, b);
  };
  std::map<std::tuple<std::uint32_t, std::uint32_t, int, int>, int> target_edges;
  for (const auto& e : target->edges)
    ++target_edges[edge_key(e.u, e.v, e.label_a, e.label_b)];

  for (const auto& e : component.edges) {
    const auto key = edge_key(phi(e.u), phi(e.v), e.label_a, e.label_b);
    auto it = target_edges.find(key);
    if (it == target_edges.end() || it->second == 0) return false;
    --it->second;
  }
  for (const auto& [k, cnt] : target_edges)
    if (cnt != 0) return false;
  return true;
}

std::string export_dot(const LabeledGraph& g) {
  std::ostringstream os;
  os << "graph gkm {\n";
  for (auto r : g.vertices)
    os << "  \"" << Perm::from_lex_rank(r, g.n).one_line() << "\";\n";
  for (const auto& e : g.edges) {
    os << "  \"" << Perm::from_lex_rank(e.u, g.n).one_line() << "\" -- \""
       << Perm::from_lex_rank(e.v, g.n).one_line() << "\" [label=\"t"
       << static_cast<int>(e.label_a) << "-t" << static_cast<int>(e.label_b) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const LabeledGraph& g) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    if (k) os << ',';
    os << '"' << Perm::from_lex_rank(g.vertices[k], g.n).one_line() << '"';
  }
  os << "],\"edges\":[";
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (k) os << ',';
    os << "{\"u\":\"" << Perm::from_lex_rank(e.u, g.n).one_line() << "\",\"v\":\""
       << Perm::from_lex_rank(e.v, g.n).one_line() << "\",\"label\":["
       << static_cast<int>(e.label_a) << ',' << static_cast<int>(e.label_b) << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace hesscoh
