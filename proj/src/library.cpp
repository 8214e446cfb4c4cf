#include <lel/library.hpp>

#include <numeric>
#include <string>

#include <lel/effect.hpp>
#include <lel/order.hpp>

namespace lel {

namespace {

std::string fraction_label(int k, int n) {
  if (k == 0) return "0";
  if (k == n) return "1";
  int g = std::gcd(k, n);
  return std::to_string(k / g) + "/" + std::to_string(n / g);
}

PartialAlgebra make_mv_chain(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) labels.push_back(fraction_label(k, n));
  PartialAlgebra alg(std::move(labels), 0, n);
  for (Elem a = 0; a <= n; ++a)
    for (Elem b = 0; a + b <= n; ++b) alg.set(a, b, a + b);
  return alg;
}

PartialAlgebra make_boolean(int atoms) {
  // Elements are subsets of the atom set, indexed by bitmask.
  const int n = 1 << atoms;
  static const char* kAtomNames[3] = {"a", "b", "c"};
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int mask = 0; mask < n; ++mask) {
    if (mask == 0) {
      labels[static_cast<std::size_t>(mask)] = "0";
    } else if (mask == n - 1) {
      labels[static_cast<std::size_t>(mask)] = "1";
    } else {
      int bits = 0;
      for (int i = 0; i < atoms; ++i) bits += (mask >> i) & 1;
      if (bits == 1) {
        for (int i = 0; i < atoms; ++i)
          if (mask == (1 << i)) labels[static_cast<std::size_t>(mask)] = kAtomNames[i];
      } else {
        // Co-atom: complement of a single atom.
        for (int i = 0; i < atoms; ++i)
          if (mask == (n - 1) - (1 << i))
            labels[static_cast<std::size_t>(mask)] = std::string(kAtomNames[i]) + "'";
      }
    }
  }
  PartialAlgebra alg(std::move(labels), 0, n - 1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if ((a & b) == 0) alg.set(a, b, a | b);
  return alg;
}

PartialAlgebra make_mo(int pairs) {
  const int n = 2 * pairs + 2;
  static const char* kPairNames[3] = {"a", "b", "c"};
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  labels.push_back("0");
  for (int i = 0; i < pairs; ++i) {
    labels.push_back(kPairNames[i]);
    labels.push_back(std::string(kPairNames[i]) + "'");
  }
  labels.push_back("1");

  Order leq(n);
  const Elem one = n - 1;
  for (Elem x = 0; x < n; ++x) {
    leq.set_le(x, x);
    leq.set_le(0, x);
    leq.set_le(x, one);
  }
  std::vector<Elem> inv(static_cast<std::size_t>(n));
  inv[0] = one;
  inv[static_cast<std::size_t>(one)] = 0;
  for (int i = 0; i < pairs; ++i) {
    Elem x = 1 + 2 * i, y = x + 1;
    inv[static_cast<std::size_t>(x)] = y;
    inv[static_cast<std::size_t>(y)] = x;
  }
  return ortholattice_embed(labels, leq, inv);
}

PartialAlgebra make_diamond() {
  PartialAlgebra alg({"0", "a", "b", "c", "1"}, 0, 4);
  for (Elem x = 0; x < 5; ++x) {
    alg.set(0, x, x);
    alg.set(x, 0, x);
  }
  for (Elem atom : {1, 2, 3}) alg.set(atom, atom, 4);
  return alg;
}

PartialAlgebra make_hexagon() {
  PartialAlgebra alg({"0", "a", "b", "a'", "b'", "1"}, 0, 5);
  for (Elem x = 0; x < 6; ++x) {
    alg.set(0, x, x);
    alg.set(x, 0, x);
  }
  auto both = [&](Elem a, Elem b, Elem v) {
    alg.set(a, b, v);
    alg.set(b, a, v);
  };
  both(1, 2, 5);  // a⊕b  = 1
  both(1, 3, 5);  // a⊕a' = 1
  both(2, 4, 5);  // b⊕b' = 1
  return alg;
}

PartialAlgebra make_octagon() {
  PartialAlgebra alg({"0", "c'", "b", "a", "a'", "b'", "c", "1"}, 0, 7);
  for (Elem x = 0; x < 8; ++x) {
    alg.set(0, x, x);
    alg.set(x, 0, x);
  }
  auto both = [&](const char* a, const char* b, const char* v) {
    Elem ea = *alg.index_of(a), eb = *alg.index_of(b), ev = *alg.index_of(v);
    alg.set(ea, eb, ev);
    alg.set(eb, ea, ev);
  };
  both("c'", "c'", "c'");
  both("c'", "a", "a");
  both("c'", "a'", "a'");
  both("c'", "b", "a'");
  both("c'", "c", "c");
  both("a", "a'", "c");
  both("a", "b", "c");
  both("b", "b'", "1");
  return alg;
}

std::vector<LibraryEntry> build_library() {
  std::vector<LibraryEntry> lib;
  auto add = [&](std::string name, PartialAlgebra alg, bool weak, bool lea, std::string note) {
    LibraryEntry e;
    e.name = std::move(name);
    e.alg = std::move(alg);
    e.expect_weak = weak;
    e.expect_lea = lea;
    e.note = std::move(note);
    lib.push_back(std::move(e));
  };

  add("two_chain", make_mv_chain(1), true, true, "2-element chain");
  for (int n = 1; n <= 10; ++n)
    add("mv_chain_" + std::to_string(n), make_mv_chain(n), true, true,
        "Lukasiewicz chain with " + std::to_string(n + 1) + " elements");
  add("boolean_2", make_boolean(1), true, true, "Boolean algebra, 2 elements");
  add("boolean_4", make_boolean(2), true, true, "Boolean algebra, 4 elements");
  add("boolean_8", make_boolean(3), true, true, "Boolean algebra, 8 elements");
  for (int k = 1; k <= 3; ++k)
    add("mo_" + std::to_string(k), make_mo(k), true, true,
        "horizontal sum MO_" + std::to_string(k) + " (" + std::to_string(2 * k + 2) +
            " elements)");
  add("diamond", make_diamond(), true, true,
      "M3 with every atom its own orthosupplement (x⊕x = 1); Sasaki product not associative");
  add("hexagon", make_hexagon(), true, false,
      "benzene-ring weak structure; a⊕b = a⊕a' = 1 gives a two candidate orthosupplements");
  add("octagon", make_octagon(), true, false,
      "8-element weak structure where a⊕a' = c ≠ 1; no element completes a, a', c or c' to 1");
  return lib;
}

}  // namespace

const std::vector<LibraryEntry>& canonical_library() {
  static const std::vector<LibraryEntry> lib = build_library();
  return lib;
}

const LibraryEntry* find_library(std::string_view name) {
  for (const LibraryEntry& e : canonical_library())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<const LibraryEntry*> canonical_leas() {
  std::vector<const LibraryEntry*> out;
  for (const LibraryEntry& e : canonical_library())
    if (e.expect_lea) out.push_back(&e);
  return out;
}

}  // namespace lel
