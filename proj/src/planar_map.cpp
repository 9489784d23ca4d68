#include "tamari/planar_map.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace tamari {

PlanarMap PlanarMap::edgeless() {
  PlanarMap m;
  m.add_vertex(Color::black);
  return m;
}

PlanarMap PlanarMap::from_rotations(const std::vector<Color>& colors,
                                    const std::vector<std::vector<Dart>>& rotations, Dart root) {
  if (colors.size() != rotations.size()) throw Error("map: one color per vertex expected");
  std::size_t darts = 0;
  for (const auto& r : rotations) darts += r.size();
  if (darts % 2 != 0) throw Error("map: odd number of darts");

  PlanarMap m;
  m.next_.assign(darts, no_dart);
  m.prev_.assign(darts, no_dart);
  m.vertex_.assign(darts, no_vertex);
  m.tag_.assign(darts / 2, EdgeTag::map);
  m.label_.assign(darts / 2, 0);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    VertexId id = m.add_vertex(colors[v]);
    const auto& r = rotations[v];
    for (std::size_t k = 0; k < r.size(); ++k) {
      Dart d = r[k];
      if (d < 0 || static_cast<std::size_t>(d) >= darts) throw Error("map: dart id out of range");
      if (m.vertex_[d] != no_vertex) throw Error("map: dart listed twice");
      m.vertex_[d] = id;
      m.next_[d] = r[(k + 1) % r.size()];
      m.prev_[d] = r[(k + r.size() - 1) % r.size()];
    }
    if (!r.empty()) m.vertices_[id].dart = r.front();
  }
  if (root == no_dart) {
    if (darts != 0) throw Error("map: a map with edges needs a root dart");
    m.root_vertex_ = rotations.empty() ? no_vertex : 0;
  } else {
    m.check_dart(root);
    m.set_root(root);
  }
  return m;
}

VertexId PlanarMap::add_vertex(Color color) {
  vertices_.push_back({color, true, no_dart});
  auto id = static_cast<VertexId>(vertices_.size() - 1);
  if (root_vertex_ == no_vertex) root_vertex_ = id;
  return id;
}

void PlanarMap::check_dart(Dart d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= vertex_.size() || vertex_[d] == no_vertex) {
    throw Error("map: dart " + std::to_string(d) + " does not exist");
  }
}

VertexId PlanarMap::root_vertex() const {
  return root_dart_ != no_dart ? vertex_[root_dart_] : root_vertex_;
}

void PlanarMap::set_root(Dart d) {
  check_dart(d);
  root_dart_ = d;
  root_vertex_ = vertex_[d];
}

std::size_t PlanarMap::degree(VertexId v) const {
  Dart start = vertices_.at(v).dart;
  if (start == no_dart) return 0;
  std::size_t k = 0;
  Dart d = start;
  do {
    ++k;
    d = next_[d];
  } while (d != start);
  return k;
}

std::vector<Dart> PlanarMap::rotation(VertexId v, Dart start) const {
  if (start == no_dart) start = vertices_.at(v).dart;
  std::vector<Dart> out;
  if (start == no_dart) return out;
  if (vertex_.at(start) != v) throw Error("map: rotation start dart is not at the vertex");
  Dart d = start;
  do {
    out.push_back(d);
    d = next_[d];
  } while (d != start);
  return out;
}

std::vector<VertexId> PlanarMap::vertices() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<EdgeId> PlanarMap::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < tag_.size(); ++e) {
    if (edge_alive(static_cast<EdgeId>(e))) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

std::size_t PlanarMap::vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const auto& r) { return r.alive; }));
}

std::size_t PlanarMap::edge_count() const { return edges().size(); }

void PlanarMap::insert_before(Dart d, Corner c) {
  auto& rec = vertices_.at(c.vertex);
  if (!rec.alive) throw Error("map: corner on a deleted vertex");
  if (c.next == no_dart) {
    if (rec.dart != no_dart) throw Error("map: empty corner named on a non-isolated vertex");
    next_[d] = prev_[d] = d;
    rec.dart = d;
  } else {
    check_dart(c.next);
    if (vertex_[c.next] != c.vertex) throw Error("map: corner dart is not at the corner's vertex");
    Dart p = prev_[c.next];
    next_[p] = d;
    prev_[d] = p;
    next_[d] = c.next;
    prev_[c.next] = d;
  }
  vertex_[d] = c.vertex;
  if (root_dart_ == no_dart && c.vertex == root_vertex_) root_dart_ = d;
}

void PlanarMap::unlink(Dart d) {
  VertexId v = vertex_[d];
  auto& rec = vertices_[v];
  Dart successor = next_[d] == d ? no_dart : next_[d];
  if (successor == no_dart) {
    rec.dart = no_dart;
  } else {
    next_[prev_[d]] = next_[d];
    prev_[next_[d]] = prev_[d];
    if (rec.dart == d) rec.dart = successor;
  }
  if (root_dart_ == d) {
    root_dart_ = successor;
    root_vertex_ = v;
  }
  vertex_[d] = no_vertex;
  next_[d] = prev_[d] = no_dart;
}

EdgeId PlanarMap::add_edge(Corner a, Corner b, EdgeTag tag, int label) {
  if (a.next != no_dart && b.next != no_dart) {
    // Same face, or different components (joining components keeps genus 0).
    auto face = face_of(a.next);
    bool shared = std::find(face.begin(), face.end(), b.next) != face.end();
    if (!shared) {
      std::vector<char> seen(vertex_.size(), 0);
      std::vector<Dart> stack{a.next};
      seen[a.next] = 1;
      while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (Dart x : {next_[d], mate(d)}) {
          if (!seen[x]) {
            seen[x] = 1;
            stack.push_back(x);
          }
        }
      }
      if (seen[b.next]) throw Error("add_edge: corners lie on different faces of one component");
    }
  }
  if (a.next == no_dart && b.next == no_dart && a.vertex == b.vertex) {
    throw Error("add_edge: loop on an isolated vertex");
  }
  auto e = static_cast<EdgeId>(tag_.size());
  Dart da = 2 * e;
  Dart db = da + 1;
  next_.resize(next_.size() + 2, no_dart);
  prev_.resize(prev_.size() + 2, no_dart);
  vertex_.resize(vertex_.size() + 2, no_vertex);
  tag_.push_back(tag);
  label_.push_back(label);
  insert_before(da, a);
  insert_before(db, b);
  return e;
}

void PlanarMap::delete_edge(EdgeId e) {
  if (e < 0 || static_cast<std::size_t>(e) >= tag_.size() || !edge_alive(e)) {
    throw Error("delete_edge: unknown edge " + std::to_string(e));
  }
  unlink(2 * e);
  unlink(2 * e + 1);
}

VertexId PlanarMap::contract_edge(EdgeId e) {
  if (e < 0 || static_cast<std::size_t>(e) >= tag_.size() || !edge_alive(e)) {
    throw Error("contract_edge: unknown edge " + std::to_string(e));
  }
  Dart a = 2 * e;
  Dart b = a + 1;
  VertexId x = vertex_[a];
  VertexId y = vertex_[b];
  if (x == y) throw Error("contract_edge: edge " + std::to_string(e) + " is a loop");

  std::vector<Dart> seq;
  for (Dart d = next_[b]; d != b; d = next_[d]) seq.push_back(d);

  if (seq.empty()) {
    unlink(a);
  } else {
    for (Dart d : seq) vertex_[d] = x;
    Dart p = prev_[a];
    Dart q = next_[a];
    if (p == a) {
      p = seq.back();
      q = seq.front();
    }
    next_[p] = seq.front();
    prev_[seq.front()] = p;
    next_[seq.back()] = q;
    prev_[q] = seq.back();
    vertices_[x].dart = seq.front();
    if (root_dart_ == a) root_dart_ = seq.front();
    vertex_[a] = no_vertex;
    next_[a] = prev_[a] = no_dart;
  }
  vertex_[b] = no_vertex;
  next_[b] = prev_[b] = no_dart;
  vertices_[y].alive = false;
  vertices_[y].dart = no_dart;
  if (root_vertex_ == y) root_vertex_ = x;
  return x;
}

VertexId PlanarMap::split_vertex(VertexId v, Dart first, Dart last) {
  check_dart(first);
  check_dart(last);
  if (vertex_[first] != v || vertex_[last] != v) throw Error("split_vertex: arc darts not at the vertex");
  std::vector<Dart> arc{first};
  for (Dart d = first; d != last;) {
    d = next_[d];
    if (d == first) throw Error("split_vertex: arc end not reached");
    arc.push_back(d);
  }
  VertexId w = add_vertex(vertices_[v].color);
  if (next_[last] == first) {
    vertices_[v].dart = no_dart;
  } else {
    Dart p = prev_[first];
    Dart q = next_[last];
    next_[p] = q;
    prev_[q] = p;
    next_[last] = first;
    prev_[first] = last;
    vertices_[v].dart = q;
  }
  for (Dart d : arc) vertex_[d] = w;
  vertices_[w].dart = first;
  return w;
}

std::vector<std::vector<Dart>> PlanarMap::face_orbits() const {
  std::vector<std::vector<Dart>> faces;
  std::vector<char> seen(vertex_.size(), 0);
  for (std::size_t d = 0; d < vertex_.size(); ++d) {
    if (vertex_[d] == no_vertex || seen[d]) continue;
    faces.push_back(face_of(static_cast<Dart>(d)));
    for (Dart x : faces.back()) seen[x] = 1;
  }
  for (const auto& rec : vertices_) {
    if (rec.alive && rec.dart == no_dart) faces.emplace_back();
  }
  return faces;
}

std::vector<Dart> PlanarMap::face_of(Dart corner) const {
  check_dart(corner);
  std::vector<Dart> out;
  Dart d = corner;
  do {
    out.push_back(d);
    d = face_next(d);
  } while (d != corner);
  return out;
}

std::vector<Dart> PlanarMap::outer_face() const {
  if (root_dart_ == no_dart) return {};
  return face_of(root_dart_);
}

Dart PlanarMap::corner_walk_cw(Dart corner, std::size_t steps) const {
  check_dart(corner);
  for (std::size_t k = 0; k < steps; ++k) corner = face_next(corner);
  return corner;
}

bool PlanarMap::is_bridge(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= tag_.size() || !edge_alive(e)) {
    throw Error("is_bridge: unknown edge " + std::to_string(e));
  }
  auto face = face_of(2 * e);
  return std::find(face.begin(), face.end(), 2 * e + 1) != face.end();
}

PlanarMap PlanarMap::compacted() const {
  std::vector<EdgeId> new_edge(tag_.size(), -1);
  EdgeId count = 0;
  for (EdgeId e : edges()) new_edge[e] = count++;
  auto renamed = [&](Dart d) { return 2 * new_edge[edge_of(d)] + (d & 1); };

  std::vector<Color> colors;
  std::vector<std::vector<Dart>> rotations;
  for (VertexId v : vertices()) {
    colors.push_back(color(v));
    auto r = rotation(v);
    for (Dart& d : r) d = renamed(d);
    rotations.push_back(std::move(r));
  }
  Dart root = root_dart_ == no_dart ? no_dart : renamed(root_dart_);
  PlanarMap out = from_rotations(colors, rotations, root);
  if (root == no_dart) {
    VertexId rv = root_vertex();
    auto alive = vertices();
    out.root_vertex_ = static_cast<VertexId>(std::find(alive.begin(), alive.end(), rv) - alive.begin());
  }
  for (EdgeId e : edges()) {
    out.tag_[new_edge[e]] = tag_[e];
    out.label_[new_edge[e]] = label_[e];
  }
  return out;
}

Validation validate(const PlanarMap& m) {
  auto verts = m.vertices();
  auto edges = m.edges();
  if (verts.empty()) return Validation::fail("map has no vertex");

  for (EdgeId e : edges) {
    for (Dart d : {2 * e, 2 * e + 1}) {
      if (m.prev_cw(m.next_cw(d)) != d) return Validation::fail("rotation links are not inverse");
      if (m.vertex(m.next_cw(d)) != m.vertex(d)) return Validation::fail("rotation leaves its vertex");
      if (!m.vertex_alive(m.vertex(d))) return Validation::fail("dart on a deleted vertex");
    }
    if (m.color(m.vertex(2 * e)) == m.color(m.vertex(2 * e + 1))) {
      return Validation::fail("edge " + std::to_string(e) + " joins two vertices of the same color");
    }
  }

  if (edges.empty()) {
    if (verts.size() != 1) return Validation::fail("map is not connected");
  } else {
    for (VertexId v : verts) {
      if (m.degree(v) == 0) return Validation::fail("map is not connected (isolated vertex)");
    }
    std::vector<char> seen(m.edge_slots() * 2, 0);
    std::vector<Dart> stack{2 * edges.front()};
    seen[stack.back()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart x : {m.next_cw(d), mate(d)}) {
        if (!seen[x]) {
          seen[x] = 1;
          ++reached;
          stack.push_back(x);
        }
      }
    }
    if (reached != 2 * edges.size()) return Validation::fail("map is not connected");
  }

  auto faces = m.face_orbits();
  auto euler = static_cast<long>(verts.size()) - static_cast<long>(edges.size()) +
               static_cast<long>(faces.size());
  if (euler != 2) return Validation::fail("genus is not 0 (V - E + F = " + std::to_string(euler) + ")");

  if (m.color(m.root_vertex()) != Color::black) return Validation::fail("root vertex is not black");
  if (!edges.empty() && m.root_dart() == no_dart) return Validation::fail("root corner missing");
  return Validation::pass();
}

MapStats map_stats(const PlanarMap& m) {
  MapStats s;
  for (VertexId v : m.vertices()) {
    (m.color(v) == Color::black ? s.black : s.white)++;
  }
  s.face = m.face_orbits().size();
  s.outdeg = m.outer_face().size() / 2;
  return s;
}

std::size_t count_cycles(const std::vector<std::size_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
  }
  return cycles;
}

namespace {

bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t x : p) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

void write_cycles(std::ostream& os, const std::vector<std::size_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      if (j != i) os << ' ';
      os << j + 1;
      seen[j] = 1;
    }
    os << ')';
  }
}

std::vector<std::size_t> parse_cycles(std::string_view text, std::size_t n) {
  std::vector<std::size_t> perm(n, n);
  std::vector<std::size_t> cycle;
  bool open = false;
  std::size_t pos = 0;
  auto close_cycle = [&] {
    if (cycle.empty()) throw Error("hypermap: empty cycle");
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t from = cycle[k];
      if (perm[from] != n) throw Error("hypermap: element repeated in cycles");
      perm[from] = cycle[(k + 1) % cycle.size()];
    }
    cycle.clear();
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == '(') {
      if (open) throw Error("hypermap: nested '('");
      open = true;
      ++pos;
    } else if (c == ')') {
      if (!open) throw Error("hypermap: unbalanced ')'");
      open = false;
      close_cycle();
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw Error("hypermap: number outside a cycle");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
      }
      if (value < 1 || value > n) throw Error("hypermap: edge id " + std::to_string(value) + " out of range");
      cycle.push_back(value - 1);
    } else {
      throw Error(std::string("hypermap: unexpected character '") + c + "'");
    }
  }
  if (open) throw Error("hypermap: unterminated cycle");
  for (std::size_t x : perm) {
    if (x == n) throw Error("hypermap: every edge must appear (write fixed points explicitly)");
  }
  return perm;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Validation validate(const HypermapCode& h) {
  if (!is_permutation_of(h.sigma, h.n)) return Validation::fail("sigma is not a permutation of the edges");
  if (!is_permutation_of(h.alpha, h.n)) return Validation::fail("alpha is not a permutation of the edges");
  if (h.n == 0) return Validation::pass();
  if (h.root >= h.n) return Validation::fail("root edge out of range");

  std::vector<char> seen(h.n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t e = stack.back();
    stack.pop_back();
    for (std::size_t f : {h.sigma[e], h.alpha[e]}) {
      if (!seen[f]) {
        seen[f] = 1;
        ++reached;
        stack.push_back(f);
      }
    }
  }
  if (reached != h.n) return Validation::fail("sigma and alpha do not act transitively");

  std::vector<std::size_t> faces(h.n);
  for (std::size_t e = 0; e < h.n; ++e) faces[e] = h.sigma[h.alpha[e]];
  if (count_cycles(h.sigma) + count_cycles(h.alpha) + count_cycles(faces) != h.n + 2) {
    return Validation::fail("genus is not 0");
  }
  return Validation::pass();
}

HypermapCode to_hypermap(const PlanarMap& m) {
  if (auto v = validate(m); !v) throw Error("to_hypermap: " + v.message);
  HypermapCode h;
  auto edges = m.edges();
  h.n = edges.size();
  if (h.n == 0) return h;

  auto black_dart = [&](EdgeId e) { return m.color(m.vertex(2 * e)) == Color::black ? 2 * e : 2 * e + 1; };
  auto sigma = [&](EdgeId e) { return edge_of(m.next_cw(black_dart(e))); };
  auto alpha = [&](EdgeId e) { return edge_of(m.next_cw(mate(black_dart(e)))); };

  std::vector<std::size_t> id(m.edge_slots(), h.n);
  std::vector<EdgeId> order;
  std::deque<EdgeId> queue{edge_of(m.root_dart())};
  id[queue.front()] = 0;
  order.push_back(queue.front());
  while (!queue.empty()) {
    EdgeId e = queue.front();
    queue.pop_front();
    for (EdgeId f : {sigma(e), alpha(e)}) {
      if (id[f] == h.n) {
        id[f] = order.size();
        order.push_back(f);
        queue.push_back(f);
      }
    }
  }
  h.sigma.resize(h.n);
  h.alpha.resize(h.n);
  for (EdgeId e : order) {
    h.sigma[id[e]] = id[sigma(e)];
    h.alpha[id[e]] = id[alpha(e)];
  }
  h.root = 0;
  return h;
}

PlanarMap from_hypermap(const HypermapCode& h) {
  if (auto v = validate(h); !v) throw Error("from_hypermap: " + v.message);
  if (h.n == 0) return PlanarMap::edgeless();

  std::vector<Color> colors;
  std::vector<std::vector<Dart>> rotations;
  auto add_cycles = [&](const std::vector<std::size_t>& perm, Color color, Dart offset) {
    std::vector<char> seen(h.n, 0);
    for (std::size_t i = 0; i < h.n; ++i) {
      if (seen[i]) continue;
      std::vector<Dart> rot;
      for (std::size_t j = i; !seen[j]; j = perm[j]) {
        seen[j] = 1;
        rot.push_back(static_cast<Dart>(2 * j) + offset);
      }
      colors.push_back(color);
      rotations.push_back(std::move(rot));
    }
  };
  add_cycles(h.sigma, Color::black, 0);
  add_cycles(h.alpha, Color::white, 1);
  return PlanarMap::from_rotations(colors, rotations, static_cast<Dart>(2 * h.root));
}

std::string format_hypermap(const HypermapCode& h) {
  std::ostringstream os;
  os << "n=" << h.n << '\n';
  if (h.n == 0) return os.str();
  os << "sigma=";
  write_cycles(os, h.sigma);
  os << "\nalpha=";
  write_cycles(os, h.alpha);
  os << "\nroot=" << h.root + 1 << '\n';
  return os.str();
}

HypermapCode parse_hypermap(std::string_view text) {
  HypermapCode h;
  bool have_n = false;
  bool have_sigma = false;
  bool have_alpha = false;
  bool have_root = false;
  std::string sigma_text;
  std::string alpha_text;
  std::size_t root = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("hypermap: expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto number = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error("hypermap: '" + key + "' needs a non-negative integer");
      }
      return static_cast<std::size_t>(std::stoull(s));
    };
    if (key == "n" && !have_n) {
      h.n = number(value);
      have_n = true;
    } else if (key == "sigma" && !have_sigma) {
      sigma_text = value;
      have_sigma = true;
    } else if (key == "alpha" && !have_alpha) {
      alpha_text = value;
      have_alpha = true;
    } else if (key == "root" && !have_root) {
      root = number(value);
      have_root = true;
    } else {
      throw Error("hypermap: unexpected or repeated key '" + key + "'");
    }
  }
  if (!have_n) throw Error("hypermap: missing n=");
  if (h.n == 0) {
    if (have_sigma || have_alpha || have_root) throw Error("hypermap: the edgeless map is just n=0");
    return h;
  }
  if (!have_sigma || !have_alpha || !have_root) throw Error("hypermap: need sigma=, alpha= and root=");
  h.sigma = parse_cycles(sigma_text, h.n);
  h.alpha = parse_cycles(alpha_text, h.n);
  if (root < 1 || root > h.n) throw Error("hypermap: root out of range");
  h.root = root - 1;
  if (auto v = validate(h); !v) throw Error("hypermap: " + v.message);
  return h;
}

std::string canonical_code(const PlanarMap& m) {
  std::string text = format_hypermap(to_hypermap(m));
  text.pop_back();
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string format_working_map(const PlanarMap& m) {
  std::ostringstream os;
  os << "n=" << m.edge_count() << " rot=";
  bool first = true;
  for (VertexId v : m.vertices()) {
    if (!first) os << '|';
    first = false;
    os << v << (m.color(v) == Color::black ? 'B' : 'W') << '(';
    auto r = m.rotation(v);
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
    os << ')';
  }
  os << " tag=";
  first = true;
  for (EdgeId e : m.edges()) {
    if (!first) os << ',';
    first = false;
    os << e << ':';
    if (m.tag(e) == EdgeTag::map) {
      os << 'm';
    } else {
      os << 't' << m.label(e);
    }
  }
  os << " root=";
  if (m.root_dart() == no_dart) {
    os << "v" << m.root_vertex();
  } else {
    os << m.root_dart();
  }
  return os.str();
}

std::string to_dot(const PlanarMap& m, VertexId highlight) {
  std::ostringstream os;
  os << "graph planar_map {\n"
     << "  node [shape=circle, label=\"\", width=0.25];\n";
  for (VertexId v : m.vertices()) {
    os << "  v" << v << " [";
    if (m.color(v) == Color::black) {
      os << "style=filled, fillcolor=black";
    } else {
      os << "style=solid";
    }
    if (v == highlight) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  for (EdgeId e : m.edges()) {
    os << "  v" << m.vertex(2 * e) << " -- v" << m.vertex(2 * e + 1);
    if (m.tag(e) == EdgeTag::tree) {
      os << " [style=bold, color=blue";
      if (m.label(e) != 0) os << ", label=\"" << m.label(e) << "\"";
      os << "]";
    }
    os << ";\n";
  }
  os << "  root [shape=point, width=0.05];\n"
     << "  root -- v" << m.root_vertex() << " [style=dashed";
  if (m.root_dart() != no_dart) os << ", label=\"before e" << edge_of(m.root_dart()) << "\"";
  os << "];\n}\n";
  return os.str();
}

}  // namespace tamari
