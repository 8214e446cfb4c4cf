#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <lel/algebra.hpp>

namespace lel {

// A binary relation on {0..n-1} intended as ≤.  Stored densely; all checks
// are exhaustive (carriers are tiny by design).
struct Order {
  int n = 0;
  std::vector<std::uint8_t> bits;  // n*n, row-major: bits[a*n+b] == (a ≤ b)

  Order() = default;
  explicit Order(int size) : n(size), bits(static_cast<std::size_t>(size) * size, 0) {}

  bool le(Elem a, Elem b) const {
    return bits[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] != 0;
  }
  void set_le(Elem a, Elem b, bool v = true) {
    bits[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = v ? 1 : 0;
  }
  bool operator==(const Order&) const = default;
};

// Total meet/join tables for a lattice order, flattened n*n.
struct LatticeOps {
  std::vector<Elem> meet, join;
  Elem meet_of(const Order& o, Elem a, Elem b) const {
    return meet[static_cast<std::size_t>(a) * o.n + static_cast<std::size_t>(b)];
  }
  Elem join_of(const Order& o, Elem a, Elem b) const {
    return join[static_cast<std::size_t>(a) * o.n + static_cast<std::size_t>(b)];
  }
};

// Outcome of the exhaustive partial-order check.  `which` names the failed
// requirement ("reflexivity" | "antisymmetry" | "transitivity"); `witness`
// holds the offending tuple as indices.
struct PosetCheck {
  bool ok = true;
  std::string which;
  std::vector<Elem> witness;
};

PosetCheck check_partial_order(const Order& o);

// Greatest lower / least upper bound by exhaustive search; nullopt when none
// exists or it is not unique-greatest (non-lattice pair).
std::optional<Elem> glb(const Order& o, Elem a, Elem b);
std::optional<Elem> lub(const Order& o, Elem a, Elem b);

struct LatticeProbe {
  bool is_lattice = false;
  LatticeOps ops;                          // valid only when is_lattice
  std::optional<std::pair<Elem, Elem>> bad_pair;
  std::string bad_kind;                    // "meet" | "join"
};

LatticeProbe probe_lattice(const Order& o);

// Unique minimum / maximum of the order, if any.
std::optional<Elem> bottom_of(const Order& o);
std::optional<Elem> top_of(const Order& o);

// Involution requirements relative to an order: period two and antitone.
struct InvolutionCheck {
  bool period_two = true;
  bool antitone = true;
  std::vector<Elem> witness;  // offending element / pair
};

InvolutionCheck check_involution(const Order& o, const std::vector<Elem>& inv);

// The spec-level bundle: a ≤ relation plus optional lattice tables and
// involution (absent when not derivable).
struct OrderStructure {
  Order leq;
  std::optional<LatticeOps> lattice;
  std::optional<std::vector<Elem>> involution;
};

}  // namespace lel
