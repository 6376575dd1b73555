// Flypes. A tangle is a connected set S of crossings meeting the rest of the
// diagram in exactly four legs, all on one face of S. A flype applies when a
// crossing c outside S is joined to two consecutive legs by two adjacent
// slots: S is turned over about the axis through c, and c moves to the two
// opposite legs.
#include <algorithm>
#include <array>
#include <optional>

#include "map_builder.hpp"
#include "moves_internal.hpp"

namespace knotoid::detail {

namespace {

struct Tangle {
  std::vector<char> inside;        // per vertex
  std::array<Dart, 4> legs_ccw{};  // legs in counterclockwise order around S
};

// Legs of S in counterclockwise order, or nullopt if S is not a 4-leg tangle.
std::optional<Tangle> tangle_of(const Diagram& d, const std::vector<int>& verts) {
  Tangle t;
  t.inside.assign(d.vertex_count(), 0);
  for (int v : verts) {
    if (v < 0 || v >= d.vertex_count() || !d.is_crossing(v) || t.inside[v]) return std::nullopt;
    t.inside[v] = 1;
  }
  if (verts.empty()) return std::nullopt;
  std::vector<Dart> legs;
  for (int v : verts)
    for (int s = 0; s < 4; ++s) {
      const Dart x = d.dart(v, s);
      if (!t.inside[d.vertex_of(d.mate(x))]) legs.push_back(x);
    }
  if (legs.size() != 4) return std::nullopt;

  // Connectivity inside S.
  std::vector<int> stack{verts[0]};
  std::vector<char> seen(d.vertex_count(), 0);
  seen[verts[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const int w = d.vertex_of(d.mate(d.dart(v, s)));
      if (t.inside[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != verts.size()) return std::nullopt;

  // Walk the outer face of S, legs acting as dead ends. The walk meets the
  // legs clockwise.
  auto is_leg = [&](Dart x) { return std::find(legs.begin(), legs.end(), x) != legs.end(); };
  std::vector<Dart> order;
  const Dart start = legs[0];
  Dart x = start;
  std::size_t guard = 0;
  do {
    if (is_leg(x)) order.push_back(x);
    const Dart arrive = is_leg(x) ? x : d.mate(x);
    x = d.prev_ccw(arrive);
    if (++guard > static_cast<std::size_t>(d.dart_count()) + 1) return std::nullopt;
  } while (x != start);
  if (order.size() != 4) return std::nullopt;
  for (int i = 0; i < 4; ++i) t.legs_ccw[i] = order[(4 - i) % 4];
  return t;
}

struct FlypeFrame {
  int c;
  Dart sa, sb, oa, ob;
  std::array<Dart, 4> legs;  // a, b, c, d in counterclockwise order
};

std::optional<FlypeFrame> frame_at(const Diagram& d, const Tangle& t, Dart sa) {
  const int c = d.vertex_of(sa);
  if (!d.is_crossing(c) || t.inside[c]) return std::nullopt;
  const int slot = d.slot_of(sa);
  FlypeFrame f{c, sa, d.dart(c, (slot + 3) % 4), d.dart(c, (slot + 2) % 4), d.dart(c, (slot + 1) % 4), {}};
  const Dart la = d.mate(f.sa), lb = d.mate(f.sb);
  const auto it = std::find(t.legs_ccw.begin(), t.legs_ccw.end(), la);
  if (it == t.legs_ccw.end()) return std::nullopt;
  const int i = static_cast<int>(it - t.legs_ccw.begin());
  if (t.legs_ccw[(i + 1) % 4] != lb) return std::nullopt;
  for (int k = 0; k < 4; ++k) f.legs[k] = t.legs_ccw[(i + k) % 4];
  if (t.inside[d.vertex_of(d.mate(f.oa))] || t.inside[d.vertex_of(d.mate(f.ob))]) return std::nullopt;
  if (d.mate(f.oa) == f.ob) return std::nullopt;
  return f;
}

}  // namespace

void find_flype_sites(const Diagram& d, std::vector<MoveSite>& out) {
  std::vector<int> crossings;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.is_crossing(v)) crossings.push_back(v);
  const int n = static_cast<int>(crossings.size());
  if (n < 2 || n > 24) return;
  // Bit of the crossing behind every crossing slot (0 for endpoints), so the
  // leg count of a subset is a handful of mask tests.
  std::vector<int> index(d.vertex_count(), -1);
  for (int i = 0; i < n; ++i) index[crossings[i]] = i;
  std::vector<std::array<std::uint32_t, 4>> behind(n);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) {
      const int w = index[d.vertex_of(d.mate(d.dart(crossings[i], s)))];
      behind[i][s] = w < 0 ? 0u : (1u << w);
    }
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    int legs = 0;
    for (int i = 0; i < n && legs <= 4; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (int s = 0; s < 4; ++s) legs += (mask & behind[i][s]) ? 0 : 1;
    }
    if (legs != 4) continue;
    // Connected within S, by a flood fill over bits.
    std::uint32_t reach = mask & (~mask + 1u), grown = 0;
    while (grown != reach) {
      grown = reach;
      for (int i = 0; i < n; ++i)
        if ((reach >> i) & 1u)
          for (int s = 0; s < 4; ++s) reach |= behind[i][s] & mask;
    }
    if (reach != mask) continue;
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) verts.push_back(crossings[i]);
    const auto t = tangle_of(d, verts);
    if (!t) continue;
    for (Dart leg : t->legs_ccw) {
      const Dart sa = d.mate(leg);
      if (frame_at(d, *t, sa)) out.push_back({MoveKind::Flype, {sa}, 0, verts});
    }
  }
}

Diagram apply_flype(const Diagram& d, const MoveSite& s) {
  auto stale = [] { return StaleSite("Flype site does not match the diagram"); };
  if (s.anchors.size() != 1 || s.anchors[0] < 0 || s.anchors[0] >= d.dart_count()) throw stale();
  const auto t = tangle_of(d, s.tangle);
  if (!t) throw stale();
  const auto f = frame_at(d, *t, s.anchors[0]);
  if (!f) throw stale();

  const Dart xa = d.mate(f->oa), xb = d.mate(f->ob);
  const Dart xc = d.mate(f->legs[2]), xd = d.mate(f->legs[3]);
  const auto turned = [&](Dart x) {
    return SlotRef{d.vertex_of(x), ((1 - d.slot_of(x)) % 4 + 4) % 4};
  };

  MapBuilder b(d);
  // Turn S over: reflect its rotation and exchange over and under.
  for (int v : s.tangle) {
    for (int slot = 0; slot < 4; ++slot) {
      const Dart x = d.dart(v, slot);
      const Dart m = d.mate(x);
      if (t->inside[d.vertex_of(m)]) b.nbr[v][((1 - slot) % 4 + 4) % 4] = turned(m);
    }
  }
  b.link(turned(f->legs[0]), d.ref(xa));
  b.link(turned(f->legs[1]), d.ref(xb));
  const SlotRef lc = turned(f->legs[2]), ld = turned(f->legs[3]);
  const std::array<SlotRef, 4> around =
      d.slot_of(f->sa) % 2 == 0 ? std::array<SlotRef, 4>{d.ref(xd), lc, ld, d.ref(xc)}
                                : std::array<SlotRef, 4>{lc, ld, d.ref(xc), d.ref(xd)};
  for (int k = 0; k < 4; ++k) b.link({f->c, k}, around[k]);
  return b.build();
}

}  // namespace knotoid::detail
