#include <lel/order.hpp>

namespace lel {

PosetCheck check_partial_order(const Order& o) {
  for (Elem a = 0; a < o.n; ++a)
    if (!o.le(a, a)) return {false, "reflexivity", {a}};
  for (Elem a = 0; a < o.n; ++a)
    for (Elem b = 0; b < o.n; ++b)
      if (a != b && o.le(a, b) && o.le(b, a)) return {false, "antisymmetry", {a, b}};
  for (Elem a = 0; a < o.n; ++a)
    for (Elem b = 0; b < o.n; ++b) {
      if (!o.le(a, b)) continue;
      for (Elem c = 0; c < o.n; ++c)
        if (o.le(b, c) && !o.le(a, c)) return {false, "transitivity", {a, b, c}};
    }
  return {};
}

std::optional<Elem> glb(const Order& o, Elem a, Elem b) {
  for (Elem c = 0; c < o.n; ++c) {
    if (!(o.le(c, a) && o.le(c, b))) continue;
    bool greatest = true;
    for (Elem d = 0; d < o.n; ++d)
      if (o.le(d, a) && o.le(d, b) && !o.le(d, c)) { greatest = false; break; }
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<Elem> lub(const Order& o, Elem a, Elem b) {
  for (Elem c = 0; c < o.n; ++c) {
    if (!(o.le(a, c) && o.le(b, c))) continue;
    bool least = true;
    for (Elem d = 0; d < o.n; ++d)
      if (o.le(a, d) && o.le(b, d) && !o.le(c, d)) { least = false; break; }
    if (least) return c;
  }
  return std::nullopt;
}

LatticeProbe probe_lattice(const Order& o) {
  LatticeProbe p;
  p.ops.meet.assign(static_cast<std::size_t>(o.n) * o.n, kUndef);
  p.ops.join.assign(static_cast<std::size_t>(o.n) * o.n, kUndef);
  for (Elem a = 0; a < o.n; ++a)
    for (Elem b = 0; b < o.n; ++b) {
      auto m = glb(o, a, b);
      if (!m) {
        p.bad_pair = {a, b};
        p.bad_kind = "meet";
        return p;
      }
      auto j = lub(o, a, b);
      if (!j) {
        p.bad_pair = {a, b};
        p.bad_kind = "join";
        return p;
      }
      p.ops.meet[static_cast<std::size_t>(a) * o.n + b] = *m;
      p.ops.join[static_cast<std::size_t>(a) * o.n + b] = *j;
    }
  p.is_lattice = true;
  return p;
}

std::optional<Elem> bottom_of(const Order& o) {
  for (Elem a = 0; a < o.n; ++a) {
    bool least = true;
    for (Elem b = 0; b < o.n; ++b)
      if (!o.le(a, b)) { least = false; break; }
    if (least) return a;
  }
  return std::nullopt;
}

std::optional<Elem> top_of(const Order& o) {
  for (Elem a = 0; a < o.n; ++a) {
    bool greatest = true;
    for (Elem b = 0; b < o.n; ++b)
      if (!o.le(b, a)) { greatest = false; break; }
    if (greatest) return a;
  }
  return std::nullopt;
}

InvolutionCheck check_involution(const Order& o, const std::vector<Elem>& inv) {
  InvolutionCheck r;
  for (Elem a = 0; a < o.n; ++a)
    if (inv[static_cast<std::size_t>(inv[a])] != a) {
      r.period_two = false;
      r.witness = {a};
      return r;
    }
  for (Elem a = 0; a < o.n; ++a)
    for (Elem b = 0; b < o.n; ++b)
      if (o.le(a, b) && !o.le(inv[b], inv[a])) {
        r.antitone = false;
        r.witness = {a, b};
        return r;
      }
  return r;
}

}  // namespace lel
