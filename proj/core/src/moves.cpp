#include <algorithm>
#include <array>

#include "knotoid/moves.hpp"
#include "map_builder.hpp"
#include "moves_internal.hpp"

namespace knotoid {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R3: return "R3";
    case MoveKind::Flype: return "Flype";
  }
  return "?";
}

namespace {

using detail::MapBuilder;

bool valid_dart(const Diagram& d, Dart x) { return x >= 0 && x < d.dart_count(); }

bool crossing_dart(const Diagram& d, Dart x) { return valid_dart(d, x) && d.is_crossing(d.vertex_of(x)); }

// R1-: slot (v,i) mated to (v,i+1) bounds a monogon.
bool is_r1_minus(const Diagram& d, Dart x) {
  if (!crossing_dart(d, x)) return false;
  const int v = d.vertex_of(x);
  return d.mate(x) == d.dart(v, (d.slot_of(x) + 1) % 4);
}

// R2-: bigon (c1,i)-(c2,j), (c2,j-1)-(c1,i+1) where one strand is over at both.
bool is_r2_minus(const Diagram& d, Dart x) {
  if (!crossing_dart(d, x)) return false;
  const Dart m = d.mate(x);
  if (!d.is_crossing(d.vertex_of(m)) || d.vertex_of(m) == d.vertex_of(x)) return false;
  const Dart y = d.face_next(x);
  if (d.face_next(y) != x) return false;
  return d.slot_of(x) % 2 == d.slot_of(m) % 2;
}

// R3: triangle face on three distinct crossings, one side over (or under) at both ends.
bool is_r3(const Diagram& d, Dart x, std::array<Dart, 3>* tri = nullptr) {
  if (!crossing_dart(d, x)) return false;
  std::array<Dart, 3> t{x, d.face_next(x), 0};
  t[2] = d.face_next(t[1]);
  if (d.face_next(t[2]) != x) return false;
  std::array<int, 3> v{};
  for (int k = 0; k < 3; ++k) {
    v[k] = d.vertex_of(t[k]);
    if (!d.is_crossing(v[k])) return false;
  }
  if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) return false;
  bool stacked = false;
  for (int k = 0; k < 3; ++k)
    if (d.slot_of(t[k]) % 2 == d.slot_of(d.mate(t[k])) % 2) stacked = true;
  if (tri) *tri = t;
  return stacked;
}

bool same_face(const Diagram& d, Dart a, Dart b) {
  Dart x = a;
  do {
    if (x == b) return true;
    x = d.face_next(x);
  } while (x != a);
  return false;
}

Diagram apply_r1_plus(const Diagram& d, Dart x, int param) {
  MapBuilder b(d);
  const SlotRef a = d.ref(x), m = d.ref(d.mate(x));
  const int c = b.add_vertex(VertexKind::Crossing, 4);
  const int s = param & 1;
  const bool flip = (param >> 1) != 0;
  b.link(a, {c, flip ? s + 1 : s});
  b.link(m, {c, flip ? s : s + 1});
  b.link({c, s + 2}, {c, (s + 3) % 4});
  return b.build();
}

Diagram apply_r2_plus(const Diagram& d, Dart da, Dart db, bool a_over) {
  MapBuilder b(d);
  const SlotRef ra = d.ref(da), rb = d.ref(db);
  int temp = -1;
  if (db == d.mate(da)) temp = b.subdivide(ra);
  const SlotRef ma = b.mate(ra), mb = b.mate(rb);
  const int x0 = b.add_vertex(VertexKind::Crossing, 4);
  const int x1 = b.add_vertex(VertexKind::Crossing, 4);
  const int r = a_over ? 1 : 0;
  auto slot = [&](int v, int k) { return SlotRef{v, (k + r) % 4}; };
  // x0 = [a_in, b_in, a_out, b_out], x1 = [a_in, b_out, a_out, b_in].
  b.link(ra, slot(x0, 0));
  b.link(slot(x0, 2), slot(x1, 0));
  b.link(slot(x1, 2), ma);
  b.link(rb, slot(x1, 3));
  b.link(slot(x1, 1), slot(x0, 1));
  b.link(slot(x0, 3), mb);
  if (temp >= 0) b.splice_out({temp});
  return b.build();
}

Diagram apply_r3(const Diagram& d, const std::array<Dart, 3>& t) {
  // Triangle side k runs from inner slot t[k] to inner slot mate(t[k]). Each
  // crossing keeps its slots; every strand now meets its two crossings in the
  // opposite order, with the triangle on the far side of each crossing.
  MapBuilder b(d);
  std::array<SlotRef, 6> inner{}, outer{}, attach{};
  for (int k = 0; k < 3; ++k) {
    const SlotRef p = d.ref(t[k]), q = d.ref(d.mate(t[k]));
    inner[2 * k] = p;
    inner[2 * k + 1] = q;
    outer[2 * k] = {p.vertex, (p.slot + 2) % 4};
    outer[2 * k + 1] = {q.vertex, (q.slot + 2) % 4};
    attach[2 * k] = inner[2 * k + 1];
    attach[2 * k + 1] = inner[2 * k];
  }
  auto outer_index = [&](SlotRef r) {
    for (int i = 0; i < 6; ++i)
      if (outer[i] == r) return i;
    return -1;
  };
  std::array<SlotRef, 6> old_mate{};
  for (int i = 0; i < 6; ++i) old_mate[i] = b.mate(outer[i]);
  for (int k = 0; k < 3; ++k) b.link(outer[2 * k], outer[2 * k + 1]);
  for (int i = 0; i < 6; ++i) {
    const int j = outer_index(old_mate[i]);
    b.link(attach[i], j >= 0 ? attach[j] : old_mate[i]);
  }
  return b.build();
}

bool wants(const std::vector<MoveKind>& kinds, MoveKind k) {
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

}  // namespace

std::vector<MoveSite> find_sites(const Diagram& d, const std::vector<MoveKind>& kinds) {
  std::vector<MoveSite> out;
  const auto fs = faces(d);
  if (wants(kinds, MoveKind::R1Minus)) {
    for (Dart x = 0; x < d.dart_count(); ++x)
      if (is_r1_minus(d, x)) out.push_back({MoveKind::R1Minus, {x}, 0, {}});
  }
  if (wants(kinds, MoveKind::R1Plus)) {
    for (Dart x = 0; x < d.dart_count(); ++x) {
      if (x > d.mate(x)) continue;
      for (int param = 0; param < 4; ++param) out.push_back({MoveKind::R1Plus, {x}, param, {}});
    }
  }
  if (wants(kinds, MoveKind::R2Minus)) {
    for (const auto& f : fs)
      if (f.size() == 2 && is_r2_minus(d, f[0])) out.push_back({MoveKind::R2Minus, {std::min(f[0], f[1])}, 0, {}});
  }
  if (wants(kinds, MoveKind::R2Plus)) {
    for (const auto& f : fs)
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
          for (int param = 0; param < 2; ++param) out.push_back({MoveKind::R2Plus, {f[i], f[j]}, param, {}});
  }
  if (wants(kinds, MoveKind::R3)) {
    for (const auto& f : fs)
      if (f.size() == 3) {
        const Dart lo = *std::min_element(f.begin(), f.end());
        if (is_r3(d, lo)) out.push_back({MoveKind::R3, {lo}, 0, {}});
      }
  }
  if (wants(kinds, MoveKind::Flype)) detail::find_flype_sites(d, out);
  return out;
}

Diagram apply(const Diagram& d, const MoveSite& s) {
  auto stale = [&]() { return StaleSite(to_string(s.kind) + " site does not match the diagram"); };
  const std::size_t need = s.kind == MoveKind::R2Plus ? 2 : 1;
  if (s.anchors.size() != need) throw stale();
  for (Dart x : s.anchors)
    if (!valid_dart(d, x)) throw stale();
  const Dart x = s.anchors[0];
  switch (s.kind) {
    case MoveKind::R1Minus: {
      if (!is_r1_minus(d, x)) throw stale();
      detail::MapBuilder b(d);
      b.splice_out({d.vertex_of(x)});
      return b.build();
    }
    case MoveKind::R1Plus:
      if (s.param < 0 || s.param > 3) throw stale();
      return apply_r1_plus(d, x, s.param);
    case MoveKind::R2Minus: {
      if (!is_r2_minus(d, x)) throw stale();
      detail::MapBuilder b(d);
      b.splice_out({d.vertex_of(x), d.vertex_of(d.mate(x))});
      return b.build();
    }
    case MoveKind::R2Plus: {
      const Dart y = s.anchors[1];
      if (x == y || !same_face(d, x, y) || (s.param != 0 && s.param != 1)) throw stale();
      return apply_r2_plus(d, x, y, s.param == 1);
    }
    case MoveKind::R3: {
      std::array<Dart, 3> t{};
      if (!is_r3(d, x, &t)) throw stale();
      return apply_r3(d, t);
    }
    case MoveKind::Flype:
      return detail::apply_flype(d, s);
  }
  throw stale();
}

}  // namespace knotoid
