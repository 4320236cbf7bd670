#include "superlambda/polygon.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace sl {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Tri make_tri(int a, int b, int c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

bool chords_cross(int n, Edge p, Edge q) {
  (void)n;
  auto [a, b] = p;
  auto [c, d] = q;
  if (a == c || a == d || b == c || b == d) return false;
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  return c_in != d_in;
}

bool ccw(int n, int p, int q, int r) {
  int dq = ((q - p) % n + n) % n;
  int dr = ((r - p) % n + n) % n;
  return dq < dr;
}

int third_vertex(const Tri& t, Edge e) {
  for (int v : t)
    if (v != e.first && v != e.second) return v;
  return -1;
}

Triangulation::Triangulation(int n, std::vector<Edge> diagonals) : n_(n) {
  if (n < 3) throw Error(ErrorKind::parse, "polygon needs at least 3 vertices");
  std::set<Edge> seen;
  for (auto& d : diagonals) {
    d = make_edge(d.first, d.second);
    if (d.first < 0 || d.second >= n || d.first == d.second)
      throw Error(ErrorKind::parse, "diagonal endpoint out of range");
    if (is_boundary(d)) throw Error(ErrorKind::parse, "diagonal is a boundary edge");
    if (!seen.insert(d).second) throw Error(ErrorKind::parse, "repeated diagonal");
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals.size(); ++j)
      if (chords_cross(n, diagonals[i], diagonals[j]))
        throw Error(ErrorKind::parse, "diagonals cross");
  if (static_cast<int>(diagonals.size()) != n - 3)
    throw Error(ErrorKind::parse, "triangulation needs exactly n-3 diagonals");
  diagonals_ = std::move(diagonals);
  rebuild_triangles();
}

Triangulation Triangulation::with_default_labels(int n, std::vector<Edge> diagonals, Alphabet& a) {
  Triangulation t(n, std::move(diagonals));
  int i = 1;
  for (const Edge& e : t.edges()) t.edge_labels_[e] = a.even("x" + std::to_string(i++));
  i = 1;
  for (const Tri& f : t.triangles_) t.tri_labels_[f] = a.odd("th" + std::to_string(i++));
  return t;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) out.push_back(make_edge(i, (i + 1) % n_));
  out.insert(out.end(), diagonals_.begin(), diagonals_.end());
  return out;
}

bool Triangulation::is_boundary(Edge e) const {
  e = make_edge(e.first, e.second);
  return e.second - e.first == 1 || (e.first == 0 && e.second == n_ - 1);
}

bool Triangulation::is_diagonal(Edge e) const {
  e = make_edge(e.first, e.second);
  return std::find(diagonals_.begin(), diagonals_.end(), e) != diagonals_.end();
}

bool Triangulation::is_triangle(const Tri& t) const {
  return std::find(triangles_.begin(), triangles_.end(), t) != triangles_.end();
}

std::vector<Tri> Triangulation::triangles_on(Edge e) const {
  e = make_edge(e.first, e.second);
  std::vector<Tri> out;
  for (const Tri& t : triangles_) {
    bool has_a = std::find(t.begin(), t.end(), e.first) != t.end();
    bool has_b = std::find(t.begin(), t.end(), e.second) != t.end();
    if (has_a && has_b) out.push_back(t);
  }
  return out;
}

int Triangulation::edge_label(Edge e) const {
  auto it = edge_labels_.find(make_edge(e.first, e.second));
  if (it == edge_labels_.end())
    throw Error(ErrorKind::parse,
                "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} has no label");
  return it->second;
}

int Triangulation::triangle_label(const Tri& t) const {
  auto it = tri_labels_.find(t);
  if (it == tri_labels_.end()) throw Error(ErrorKind::parse, "triangle has no label");
  return it->second;
}

void Triangulation::replace_diagonal(Edge old, Edge repl) {
  old = make_edge(old.first, old.second);
  repl = make_edge(repl.first, repl.second);
  auto it = std::find(diagonals_.begin(), diagonals_.end(), old);
  if (it == diagonals_.end()) throw Error(ErrorKind::not_internal, "not a diagonal");
  for (const Tri& t : triangles_on(old)) tri_labels_.erase(t);
  *it = repl;
  std::sort(diagonals_.begin(), diagonals_.end());
  rebuild_triangles();
}

void Triangulation::rebuild_triangles() {
  triangles_.clear();
  std::set<Edge> ds(diagonals_.begin(), diagonals_.end());
  auto edge = [&](int u, int v) { return is_boundary({u, v}) || ds.count(make_edge(u, v)) > 0; };
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      if (!edge(a, b)) continue;
      for (int c = b + 1; c < n_; ++c)
        if (edge(a, c) && edge(b, c)) triangles_.push_back({a, b, c});
    }
}

namespace {

struct Walk {
  std::vector<Edge> crossed;
  std::vector<Tri> faces;
};

Walk walk_arc(const Triangulation& t, Arc arc) {
  int n = t.n();
  if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n)
    throw Error(ErrorKind::arc_invalid, "arc endpoint out of range");
  if (arc.from == arc.to) throw Error(ErrorKind::same_vertex, "arc endpoints coincide");
  Walk w;
  Edge chord = make_edge(arc.from, arc.to);
  if (t.is_edge(chord)) return w;
  auto crosses = [&](Edge e) { return chords_cross(n, chord, e); };
  Tri cur{};
  for (const Tri& f : t.triangles()) {
    if (std::find(f.begin(), f.end(), arc.from) == f.end()) continue;
    std::vector<int> rest;
    for (int v : f)
      if (v != arc.from) rest.push_back(v);
    Edge opp = make_edge(rest[0], rest[1]);
    if (crosses(opp)) {
      cur = f;
      w.faces.push_back(f);
      w.crossed.push_back(opp);
      break;
    }
  }
  while (true) {
    Edge entry = w.crossed.back();
    for (const Tri& f : t.triangles_on(entry))
      if (f != cur) {
        cur = f;
        break;
      }
    w.faces.push_back(cur);
    int apex = third_vertex(cur, entry);
    if (apex == arc.to) break;
    Edge e1 = make_edge(entry.first, apex), e2 = make_edge(entry.second, apex);
    w.crossed.push_back(crosses(e1) ? e1 : e2);
  }
  return w;
}

}  // namespace

std::vector<Edge> crossing_sequence(const Triangulation& t, Arc arc) {
  return walk_arc(t, arc).crossed;
}

Restriction restrict_to_arc(const Triangulation& t, Arc arc) {
  Walk w = walk_arc(t, arc);
  if (w.crossed.empty()) {
    Restriction r{t, arc, {}};
    for (int i = 0; i < t.n(); ++i) r.to_original.push_back(i);
    return r;
  }
  std::set<int> vs;
  for (const Tri& f : w.faces) vs.insert(f.begin(), f.end());
  std::vector<int> old(vs.begin(), vs.end());
  std::map<int, int> idx;
  for (int i = 0; i < static_cast<int>(old.size()); ++i) idx[old[i]] = i;
  std::vector<Edge> diags;
  for (const Edge& e : w.crossed) diags.push_back(make_edge(idx[e.first], idx[e.second]));
  Triangulation r(static_cast<int>(old.size()), diags);
  for (const Tri& f : w.faces) {
    Tri nf = make_tri(idx[f[0]], idx[f[1]], idx[f[2]]);
    r.set_triangle_label(nf, t.triangle_label(f));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        r.set_edge_label(make_edge(idx[f[i]], idx[f[j]]), t.edge_label(make_edge(f[i], f[j])));
  }
  return {r, Arc{idx[arc.from], idx[arc.to]}, old};
}

EvenMonomial ArcContext::cross() const {
  EvenMonomial m;
  for (int i = 1; i <= k(); ++i) m = m * EvenMonomial::gen(x_label(i));
  return m;
}

namespace {

int shared_vertex(Edge a, Edge b) {
  if (a.first == b.first || a.first == b.second) return a.first;
  return a.second;
}

int other_end(Edge e, int v) { return e.first == v ? e.second : e.first; }

}  // namespace

FanDecomposition fan_decomposition(const ArcContext& c) {
  FanDecomposition fd;
  fd.centers.push_back(c.arc.from);
  for (int f = 0; f < static_cast<int>(c.faces.size()); ++f) {
    int center = c.face_center[f];
    if (fd.segments.empty() || fd.segments.back().center != center) {
      fd.segments.push_back({center, {}});
      fd.centers.push_back(center);
    }
    fd.segments.back().faces.push_back(f);
  }
  fd.centers.push_back(c.arc.to);
  return fd;
}

DiagOrientation default_orientation(const ArcContext& c) {
  DiagOrientation o;
  int k = c.k();
  for (int i = 0; i < k; ++i) {
    Edge x = c.crossed[i];
    // centers of the faces on either side of x_{i+1}
    int before = c.face_center[i];
    int after = c.face_center[i + 1];
    if (before != after)
      o[x] = after;  // joins two consecutive fan centers
    else
      o[x] = other_end(x, before);  // points away from its center
  }
  return o;
}

PositiveOrder positive_order(const ArcContext& c, const DiagOrientation& o) {
  int k = c.k();
  int n = c.tri.n();
  std::vector<int> seq{c.theta_label(k + 1)};
  for (int m = k; m >= 1; --m) {
    Edge x = c.crossed[m - 1];
    int head = o.at(x);
    int tail = other_end(x, head);
    int w = third_vertex(c.faces[m - 1], x);
    if (right_of(n, tail, head, w))
      seq.insert(seq.begin(), c.theta_label(m));
    else
      seq.push_back(c.theta_label(m));
  }
  return PositiveOrder(seq);
}

ArcContext make_context(const Triangulation& t, Arc arc, QuadCenter quad) {
  Restriction r = restrict_to_arc(t, arc);
  ArcContext c;
  c.tri = r.tri;
  c.arc = r.arc;
  c.to_original = r.to_original;
  Walk w = walk_arc(c.tri, c.arc);
  if (w.crossed.empty()) throw Error(ErrorKind::no_crossing, "arc is an edge of the triangulation");
  c.crossed = w.crossed;
  c.faces = w.faces;
  int k = c.k();
  int n = c.tri.n();
  std::vector<int> s;  // s_i = x_i ∩ x_{i+1}
  for (int i = 0; i + 1 < k; ++i) s.push_back(shared_vertex(c.crossed[i], c.crossed[i + 1]));
  c.face_center.assign(k + 1, -1);
  if (k == 1) {
    // One diagonal: its endpoint on the requested side of the arc.
    Edge x = c.crossed[0];
    bool first_left = ccw(n, c.arc.from, c.arc.to, x.first);
    int center = first_left == (quad == QuadCenter::left) ? x.first : x.second;
    c.face_center[0] = c.face_center[1] = center;
  } else {
    c.face_center[0] = s.front();
    for (int i = 1; i < k; ++i) c.face_center[i] = s[i - 1];
    c.face_center[k] = s.back();
  }
  c.fans = fan_decomposition(c);
  c.orientation = default_orientation(c);
  c.order = positive_order(c, c.orientation);
  return c;
}

std::vector<std::vector<Edge>> all_triangulations(int n) {
  // Triangulations of the sub-polygon i..j (vertices in order), keyed by the
  // base edge (i, j).
  std::map<std::pair<int, int>, std::vector<std::vector<Edge>>> memo;
  std::function<const std::vector<std::vector<Edge>>&(int, int)> rec =
      [&](int i, int j) -> const std::vector<std::vector<Edge>>& {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Edge>> out;
    if (j - i < 2) {
      out.push_back({});
    } else {
      for (int m = i + 1; m < j; ++m) {
        const auto left = rec(i, m);
        const auto right = rec(m, j);
        for (const auto& l : left)
          for (const auto& r : right) {
            std::vector<Edge> d = l;
            d.insert(d.end(), r.begin(), r.end());
            if (m - i > 1) d.push_back({i, m});
            if (j - m > 1) d.push_back({m, j});
            out.push_back(d);
          }
      }
    }
    return memo[key] = out;
  };
  auto res = rec(0, n - 1);
  for (auto& d : res) std::sort(d.begin(), d.end());
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<std::vector<Edge>> triangulations_up_to_rotation(int n) {
  std::set<std::vector<Edge>> canon;
  for (const auto& d : all_triangulations(n)) {
    std::vector<Edge> best;
    for (int r = 0; r < n; ++r) {
      std::vector<Edge> rot;
      for (const Edge& e : d) rot.push_back(make_edge((e.first + r) % n, (e.second + r) % n));
      std::sort(rot.begin(), rot.end());
      if (r == 0 || rot < best) best = rot;
    }
    canon.insert(best);
  }
  return {canon.begin(), canon.end()};
}

}  // namespace sl
