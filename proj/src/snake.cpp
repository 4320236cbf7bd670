#include "superlambda/snake.hpp"

#include <algorithm>

namespace sl {

namespace {

Point corner_point(Point o, Corner c) {
  switch (c) {
    case BL: return o;
    case BR: return {o.x + 1, o.y};
    case TR: return {o.x + 1, o.y + 1};
    case TL: return {o.x, o.y + 1};
  }
  return o;
}

}  // namespace

std::pair<Point, Point> side_points(Point o, Side s) {
  switch (s) {
    case S: return {corner_point(o, BL), corner_point(o, BR)};
    case E: return {corner_point(o, BR), corner_point(o, TR)};
    case N: return {corner_point(o, TL), corner_point(o, TR)};
    case W: return {corner_point(o, BL), corner_point(o, TL)};
  }
  return {o, o};
}

SnakeGraph::SnakeGraph(std::vector<Tile> tiles, std::string word)
    : tiles_(std::move(tiles)), word_(std::move(word)) {
  if (tiles_.empty()) throw Error(ErrorKind::parse, "snake graph needs a tile");
  if (word_.size() + 1 != tiles_.size())
    throw Error(ErrorKind::parse, "word length must be one less than the tile count");
  for (std::size_t i = 0; i < tiles_.size(); ++i) tiles_[i].index = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const Tile& a = tiles_[i];
    const Tile& b = tiles_[i + 1];
    if (word_[i] == 'R') {
      if (a.label[E] != b.label[W]) throw Error(ErrorKind::parse, "glued E/W labels differ");
    } else if (word_[i] == 'U') {
      if (a.label[N] != b.label[S]) throw Error(ErrorKind::parse, "glued N/S labels differ");
    } else {
      throw Error(ErrorKind::parse, "word letters must be R or U");
    }
  }
  Point o{0, 0};
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    if (i > 0) o = word_[i - 1] == 'R' ? Point{o.x + 1, o.y} : Point{o.x, o.y + 1};
    origins_.push_back(o);
  }
  std::map<std::pair<Point, Point>, int> edge_ids;
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    for (int c = 0; c < 4; ++c) {
      Point p = corner_point(origins_[i], static_cast<Corner>(c));
      if (point_ids_.emplace(p, static_cast<int>(points_.size())).second) points_.push_back(p);
    }
    std::array<int, 4> ids{};
    for (int s = 0; s < 4; ++s) {
      auto seg = side_points(origins_[i], static_cast<Side>(s));
      auto [it, inserted] = edge_ids.emplace(seg, static_cast<int>(edges_.size()));
      if (inserted) {
        edges_.push_back({point_ids_.at(seg.first), point_ids_.at(seg.second),
                          tiles_[i].label[s], {}});
      }
      edges_[it->second].refs.push_back({static_cast<int>(i) + 1, static_cast<Side>(s)});
      ids[s] = it->second;
    }
    side_edge_.push_back(ids);
  }
}

int SnakeGraph::vertex_at(Point p) const {
  auto it = point_ids_.find(p);
  return it == point_ids_.end() ? -1 : it->second;
}

int SnakeGraph::corner_vertex(int tile, Corner c) const {
  return point_ids_.at(corner_point(origin(tile), c));
}

SnakeGraph SnakeGraph::prefix(int m) const {
  std::vector<Tile> t(tiles_.begin(), tiles_.begin() + m);
  return SnakeGraph(t, word_.substr(0, m - 1));
}

SnakeGraph build_snake(const ArcContext& c) {
  const Triangulation& t = c.tri;
  int n = t.n();
  int k = c.k();
  std::vector<Tile> tiles;
  for (int i = 1; i <= k; ++i) {
    Edge x = c.crossed[i - 1];
    Tile tl;
    tl.index = i;
    int bl = third_vertex(c.faces[i - 1], x);
    int tr = third_vertex(c.faces[i], x);
    // Odd tiles run bl, br, tr, tl counterclockwise; even tiles clockwise.
    int p = x.first, q = x.second;
    int ccw_next = ccw(n, bl, p, tr) ? p : q;
    int br = (i % 2 == 1) ? ccw_next : (ccw_next == p ? q : p);
    int tlv = br == p ? q : p;
    tl.vertex = {bl, br, tr, tlv};
    tl.label[S] = t.edge_label(make_edge(bl, br));
    tl.label[E] = t.edge_label(make_edge(br, tr));
    tl.label[N] = t.edge_label(make_edge(tr, tlv));
    tl.label[W] = t.edge_label(make_edge(tlv, bl));
    tl.diagonal = t.edge_label(x);
    tl.corner_bl = c.theta_label(i);
    tl.corner_tr = c.theta_label(i + 1);
    tl.orientation_flipped = i % 2 == 0;
    tiles.push_back(tl);
  }
  std::string word;
  for (int i = 0; i + 1 < k; ++i) {
    int next_bl = tiles[i + 1].vertex[BL];
    word += next_bl == tiles[i].vertex[BR] ? 'R' : 'U';
  }
  return SnakeGraph(tiles, word);
}

SnakeGraph build_snake(const Triangulation& t, Arc arc) { return build_snake(make_context(t, arc)); }

EvenMonomial cross(const Triangulation& t, Arc arc) {
  EvenMonomial m;
  for (const Edge& e : crossing_sequence(t, arc)) m = m * EvenMonomial::gen(t.edge_label(e));
  return m;
}

SnakeGraph dual(const SnakeGraph& g) {
  std::vector<Tile> tiles = g.tiles();
  for (Tile& t : tiles) {
    if (t.index % 2 == 1)
      std::swap(t.label[N], t.label[E]);
    else
      std::swap(t.label[S], t.label[W]);
    t.vertex = {-1, -1, -1, -1};
  }
  std::string w = g.word();
  for (std::size_t i = 0; i < w.size(); i += 2) w[i] = w[i] == 'R' ? 'U' : 'R';
  return SnakeGraph(tiles, w);
}

SnakeGraph snake_from_word(const std::string& word, Alphabet& a) {
  int m = static_cast<int>(word.size()) + 1;
  int next = 0;
  auto fresh = [&] { return a.even("e" + std::to_string(++next)); };
  std::vector<Tile> tiles(m);
  for (int i = 0; i < m; ++i) {
    Tile& t = tiles[i];
    if (i > 0) {
      if (word[i - 1] == 'R')
        t.label[W] = tiles[i - 1].label[E];
      else
        t.label[S] = tiles[i - 1].label[N];
    }
    for (int s = 0; s < 4; ++s)
      if (t.label[s] == kUnit) t.label[s] = fresh();
    t.diagonal = a.even("d" + std::to_string(i + 1));
    t.corner_bl = a.odd("th" + std::to_string(i + 1));
    t.corner_tr = a.odd("th" + std::to_string(i + 2));
  }
  return SnakeGraph(tiles, word);
}

ParityReport parity_word_check(const ArcContext& c) {
  ParityReport r;
  r.odd_triangles = (c.k() + 1) % 2 == 1;
  int top = c.fans.centers[c.fans.centers.size() - 2];
  r.top_fan_left = ccw(c.tri.n(), c.arc.from, c.arc.to, top);
  if (c.k() >= 2) {
    SnakeGraph g = build_snake(c);
    r.ends_R = g.word().back() == 'R';
    r.lemma_holds = *r.ends_R == (r.odd_triangles == r.top_fan_left);
  }
  return r;
}

std::vector<std::array<int, 3>> reconstruct_triangles(const SnakeGraph& g) {
  std::vector<std::array<int, 3>> out;
  auto sorted = [](int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
  };
  const Tile& first = g.tile(1);
  out.push_back(sorted(first.label[S], first.label[W], first.diagonal));
  for (const Tile& t : g.tiles()) out.push_back(sorted(t.diagonal, t.label[N], t.label[E]));
  return out;
}

bool diagonal_reappearance_holds(const SnakeGraph& g) {
  for (int i = 1; i < g.size(); ++i) {
    const Tile& a = g.tile(i);
    const Tile& b = g.tile(i + 1);
    bool right = g.word()[i - 1] == 'R';
    int unglued_before = right ? a.label[N] : a.label[E];
    int unglued_after = right ? b.label[S] : b.label[W];
    if (unglued_before != b.diagonal || unglued_after != a.diagonal) return false;
  }
  return true;
}

}  // namespace sl
