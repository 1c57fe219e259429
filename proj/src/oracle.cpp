#include "linrel/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

namespace linrel {

Int oracle_cap() {
  if (const char* env = std::getenv("LINREL_ORACLE_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<Int>(v);
  }
  return 4096;
}

ElementSet members_of(const Submodule& s) {
  std::vector<Vec> all = enumerate_elements(s.parent());
  ElementSet out(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) out[i] = s.contains(all[i]) ? 1 : 0;
  return out;
}

std::vector<Vec> elements_of(const FgModule& m, const ElementSet& set) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set[i]) out.push_back(element_at(m, i));
  return out;
}

namespace {

std::uint32_t add_index(const RelationDigraph& g, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(element_index(g.module, vec_add(g.elements[a], g.elements[b])));
}

// Vertices from which some start vertex can be reached along `adj`.
ElementSet reach(const std::vector<std::vector<std::uint32_t>>& adj, const std::vector<std::uint32_t>& starts) {
  ElementSet seen(adj.size(), 0);
  std::deque<std::uint32_t> q;
  for (std::uint32_t s : starts)
    if (!seen[s]) {
      seen[s] = 1;
      q.push_back(s);
    }
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop_front();
    for (std::uint32_t y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        q.push_back(y);
      }
  }
  return seen;
}

std::vector<std::vector<std::uint32_t>> reversed(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::vector<std::vector<std::uint32_t>> r(adj.size());
  for (std::uint32_t x = 0; x < adj.size(); ++x)
    for (std::uint32_t y : adj[x]) r[y].push_back(x);
  return r;
}

// Vertices with an infinite path along adj: repeatedly delete vertices
// without remaining successors.
ElementSet infinite_paths(const std::vector<std::vector<std::uint32_t>>& adj) {
  auto rev = reversed(adj);
  std::vector<std::size_t> outdeg(adj.size());
  std::deque<std::uint32_t> q;
  ElementSet alive(adj.size(), 1);
  for (std::uint32_t x = 0; x < adj.size(); ++x) {
    outdeg[x] = adj[x].size();
    if (outdeg[x] == 0) q.push_back(x);
  }
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop_front();
    alive[x] = 0;
    for (std::uint32_t p : rev[x])
      if (--outdeg[p] == 0) q.push_back(p);
  }
  return alive;
}

ElementSet meet(const ElementSet& a, const ElementSet& b) {
  ElementSet r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
  return r;
}

}  // namespace

RelationDigraph oracle_digraph(const FgModule& m, const std::vector<Vec>& generators, Int cap) {
  require(m.is_finite(), ErrorKind::InfiniteModule, "oracle needs a finite module");
  RelationDigraph g;
  g.module = m;
  g.elements = enumerate_elements(m, cap);
  std::size_t sz = g.elements.size();
  std::size_t r = m.rank();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gens;
  for (const Vec& v : generators) {
    require(v.size() == 2 * r, ErrorKind::ShapeMismatch, "oracle generator length");
    gens.emplace_back(static_cast<std::uint32_t>(element_index(m, vec_slice(v, 0, r))),
                      static_cast<std::uint32_t>(element_index(m, vec_slice(v, r, r))));
  }
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{0, 0}};
  g.out.assign(sz, {});
  g.out[0].push_back(0);
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (auto [gx, gy] : gens) {
      std::uint32_t nx = add_index(g, x, gx), ny = add_index(g, y, gy);
      std::uint64_t key = static_cast<std::uint64_t>(nx) * sz + ny;
      if (seen.insert(key).second) {
        stack.emplace_back(nx, ny);
        g.out[nx].push_back(ny);
      }
    }
  }
  for (auto& adj : g.out) std::sort(adj.begin(), adj.end());
  g.edge_count = seen.size();
  return g;
}

OracleSets oracle_stable_sets(const RelationDigraph& g) {
  auto rev = reversed(g.out);
  OracleSets s;
  s.prime = reach(rev, {0});
  s.inv_prime = reach(g.out, {0});
  ElementSet fwd = infinite_paths(g.out);
  ElementSet bwd = infinite_paths(rev);
  s.dprime = fwd;
  s.inv_dprime = bwd;
  s.sharp = meet(s.dprime, s.inv_dprime);
  ElementSet a = meet(s.dprime, s.inv_prime), b = meet(s.inv_dprime, s.prime);
  s.flat.assign(g.elements.size(), 0);
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (!a[x]) continue;
    for (std::uint32_t y = 0; y < b.size(); ++y)
      if (b[y]) s.flat[add_index(g, x, y)] = 1;
  }
  return s;
}

OracleSets oracle_stable_sets(const FgModule& m, const std::vector<Vec>& generators, Int cap) {
  return oracle_stable_sets(oracle_digraph(m, generators, cap));
}

std::vector<Vec> oracle_null_witness(const RelationDigraph& g, const Vec& m) {
  auto rev = reversed(g.out);
  std::vector<std::size_t> dist(g.elements.size(), SIZE_MAX);
  std::deque<std::uint32_t> q{0};
  dist[0] = 0;
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop_front();
    for (std::uint32_t p : rev[x])
      if (dist[p] == SIZE_MAX) {
        dist[p] = dist[x] + 1;
        q.push_back(p);
      }
  }
  std::uint32_t cur = static_cast<std::uint32_t>(element_index(g.module, m));
  require(dist[cur] != SIZE_MAX, ErrorKind::NotAMember, "oracle: element has no path to 0");
  std::vector<Vec> path{g.elements[cur]};
  while (dist[cur] > 0) {
    for (std::uint32_t y : g.out[cur])
      if (dist[y] + 1 == dist[cur]) {
        cur = y;
        break;
      }
    path.push_back(g.elements[cur]);
  }
  return path;
}

std::vector<Vec> oracle_mu_leq(const BDiagram& d, const std::string& signs, std::size_t n,
                               const std::vector<Vec>& s, Int cap) {
  require(n <= signs.size(), ErrorKind::RayMismatch, "oracle_mu_leq depth exceeds the ray prefix");
  std::set<Vec> cur;
  const FgModule& mn = d.module(vertex_of(signs.substr(0, n)));
  for (const Vec& v : s) cur.insert(mn.reduce(v));
  for (std::size_t i = n; i >= 1; --i) {
    std::string tau = vertex_of(signs.substr(0, i - 1));
    std::set<Vec> next;
    if (signs[i - 1] == '-') {
      const ModHom& mho = d.mho(tau);
      for (const Vec& x : cur) next.insert(mho.apply(x));
    } else {
      const ModHom& omega = d.omega(tau);
      for (const Vec& y : enumerate_elements(d.module(tau), cap))
        if (cur.count(omega.apply(y))) next.insert(y);
    }
    cur = std::move(next);
  }
  return std::vector<Vec>(cur.begin(), cur.end());
}

}  // namespace linrel
