#include "lel/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <random>
#include <set>
#include <thread>
#include <utility>

#include "lel/effect.hpp"
#include "lel/error.hpp"
#include "lel/eval.hpp"

namespace lel {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::atomic<std::uint64_t>* nodes = nullptr;
  std::uint64_t cap = kNoNodeBudget;
  Clock::time_point deadline;
  bool has_deadline = false;

  void tick() const {
    const std::uint64_t used =
        nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > cap)
      throw Error(Errc::BudgetExceeded, "enumeration node budget exhausted",
                  Json{{"nodes", used}});
    if (has_deadline && (used & 1023) == 0 && Clock::now() > deadline)
      throw Error(Errc::BudgetExceeded, "enumeration time limit exhausted",
                  Json{{"nodes", used}});
  }
};

struct Frame {
  Order leq;
  LatticeOps lat;
  std::vector<Elem> inv;
};

// All permutations of {0..n-1} fixing 0 and n-1 (the relabelings under
// which canonical forms are minimized).
std::vector<std::vector<Elem>> middle_perms(int n) {
  std::vector<Elem> mid;
  for (Elem e = 1; e + 1 < n; ++e) mid.push_back(e);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> perm = mid;
  do {
    std::vector<Elem> full(static_cast<std::size_t>(n));
    full[0] = 0;
    full[static_cast<std::size_t>(n) - 1] = n - 1;
    for (std::size_t i = 0; i < mid.size(); ++i)
      full[static_cast<std::size_t>(mid[i])] = perm[i];
    out.push_back(std::move(full));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Encoding of the relabeled (order, involution) pair; used to keep exactly
// one representative frame per isomorphism class.
std::vector<std::uint8_t> frame_encoding(const Order& leq,
                                         const std::vector<Elem>& inv,
                                         const std::vector<Elem>& p) {
  const int n = leq.n;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::uint8_t> iv(static_cast<std::size_t>(n), 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (leq.le(a, b))
        bits[static_cast<std::size_t>(p[static_cast<std::size_t>(a)]) * n +
             p[static_cast<std::size_t>(b)]] = 1;
    iv[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])] =
        static_cast<std::uint8_t>(p[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)])]);
  }
  bits.insert(bits.end(), iv.begin(), iv.end());
  return bits;
}

// Full structure image under relabeling p: [n][order][involution][table],
// kUndef serialized as 255.
std::vector<std::uint8_t> structure_encoding(const Order& leq,
                                             const std::vector<Elem>& inv,
                                             const std::vector<Elem>& table,
                                             const std::vector<Elem>& p) {
  const int n = leq.n;
  std::vector<std::uint8_t> enc;
  enc.reserve(1 + 2 * static_cast<std::size_t>(n) * n + n);
  enc.push_back(static_cast<std::uint8_t>(n));
  std::vector<std::uint8_t> frame = frame_encoding(leq, inv, p);
  enc.insert(enc.end(), frame.begin(), frame.end());
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n, 255);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem v = table[static_cast<std::size_t>(a) * n + b];
      if (v != kUndef)
        t[static_cast<std::size_t>(p[static_cast<std::size_t>(a)]) * n +
          p[static_cast<std::size_t>(b)]] =
            static_cast<std::uint8_t>(p[static_cast<std::size_t>(v)]);
    }
  enc.insert(enc.end(), t.begin(), t.end());
  return enc;
}

std::vector<std::string> generated_labels(int n) {
  std::vector<std::string> labels;
  labels.push_back("0");
  for (int i = 1; i + 1 < n; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  labels.push_back("1");
  return labels;
}

// All frames of size n, one per isomorphism class, in deterministic order.
std::vector<Frame> all_frames(int n) {
  const auto perms = middle_perms(n);
  std::vector<Frame> frames;

  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 1; i + 1 < n; ++i)
    for (Elem j = i + 1; j + 1 < n; ++j) pairs.emplace_back(i, j);

  std::vector<int> state(pairs.size(), 0);  // 0: incomparable, 1: i<j, 2: j<i
  while (true) {
    Order o(n);
    for (Elem a = 0; a < n; ++a) {
      o.set_le(a, a);
      o.set_le(0, a);
      o.set_le(a, n - 1);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) o.set_le(pairs[k].first, pairs[k].second);
      if (state[k] == 2) o.set_le(pairs[k].second, pairs[k].first);
    }

    if (check_partial_order(o).ok) {
      LatticeProbe probe = probe_lattice(o);
      if (probe.is_lattice) {
        // Involutions: 0 <-> 1, middle mapped by an involutive permutation,
        // antitone w.r.t. the order.
        for (const auto& q : perms) {
          bool involutive = true;
          for (Elem a = 1; a + 1 < n && involutive; ++a)
            involutive = q[static_cast<std::size_t>(
                              q[static_cast<std::size_t>(a)])] == a;
          if (!involutive) continue;
          std::vector<Elem> inv(static_cast<std::size_t>(n));
          inv[0] = n - 1;
          inv[static_cast<std::size_t>(n) - 1] = 0;
          for (Elem a = 1; a + 1 < n; ++a)
            inv[static_cast<std::size_t>(a)] = q[static_cast<std::size_t>(a)];
          const InvolutionCheck ic = check_involution(o, inv);
          if (!ic.period_two || !ic.antitone) continue;

          const auto enc0 = frame_encoding(o, inv, perms.front());
          bool minimal = true;
          for (const auto& p : perms)
            if (frame_encoding(o, inv, p) < enc0) {
              minimal = false;
              break;
            }
          if (minimal) frames.push_back(Frame{o, probe.ops, inv});
        }
      }
    }

    std::size_t k = 0;
    while (k < state.size() && ++state[k] == 3) {
      state[k] = 0;
      ++k;
    }
    if (k == state.size()) break;
  }
  return frames;
}

// Backtracking completion of the ⊕ table over a fixed frame.  The domain is
// forced (a⊕b defined iff a ≤ b′), the 0-row is forced (0⊕b = b), and every
// open slot is a pair of middle elements.  Candidate values sit above a∨b;
// associativity is re-checked on the partial table after each assignment.
class TableSearch {
 public:
  TableSearch(const Frame& f, int n, AlgClass cls, const Budget& budget,
              const std::vector<std::vector<Elem>>& perms)
      : f_(f), n_(n), cls_(cls), budget_(budget), perms_(perms),
        table_(static_cast<std::size_t>(n) * n, kUndef) {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (f_.leq.le(a, f_.inv[static_cast<std::size_t>(b)]))
          dom_.push_back(1);
        else
          dom_.push_back(0);
    for (Elem b = 0; b < n_; ++b) {
      set(0, b, b);
      set(b, 0, b);
    }
    for (Elem a = 1; a + 1 < n_; ++a)
      for (Elem b = a; b + 1 < n_; ++b)
        if (dom(a, b)) slots_.emplace_back(a, b);
  }

  std::vector<std::vector<std::uint8_t>> run() {
    dfs(0);
    return std::move(found_);
  }

 private:
  bool dom(Elem a, Elem b) const {
    return dom_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  Elem get(Elem a, Elem b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  void set(Elem a, Elem b, Elem v) {
    table_[static_cast<std::size_t>(a) * n_ + b] = v;
  }

  // Definite W2 violation on the current partial table?  Only triples whose
  // prerequisites are already assigned can fail; with a full table this is
  // the complete associativity check.
  bool w2_consistent() const {
    for (Elem a = 1; a + 1 < n_; ++a)
      for (Elem b = 1; b + 1 < n_; ++b) {
        if (!dom(a, b)) continue;
        const Elem ab = get(a, b);
        if (ab == kUndef) continue;
        for (Elem c = 1; c + 1 < n_; ++c) {
          if (!dom(ab, c)) continue;
          if (!dom(b, c)) return false;
          const Elem bc = get(b, c);
          if (bc == kUndef) continue;
          if (!dom(a, bc)) return false;
          const Elem abc = get(ab, c);
          const Elem a_bc = get(a, bc);
          if (abc != kUndef && a_bc != kUndef && abc != a_bc) return false;
        }
      }
    return true;
  }

  // Effect-algebra cancellativity (a⊕b = a⊕c forces b = c) holds in the
  // full-axiom class, so duplicate values within a row can be pruned there.
  bool row_duplicate(Elem a, Elem b, Elem v) const {
    for (Elem c = 0; c < n_; ++c)
      if (c != b && dom(a, c) && get(a, c) == v) return true;
    return false;
  }

  void leaf() {
    WeakStructure w;
    PartialAlgebra alg(generated_labels(n_), 0, n_ - 1);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (get(a, b) != kUndef) alg.set(a, b, get(a, b));
    w.alg = std::move(alg);
    w.leq = f_.leq;
    w.lat = f_.lat;
    w.inv = f_.inv;

    if (!audit_weak_lea(w).pass())
      throw Error(Errc::InternalInconsistency,
                  "enumeration produced a table failing its own audit");

    if (cls_ == AlgClass::Lea) {
      if (!audit_effect_axioms(w.alg).pass()) return;
      if (!(induced_leq(w.alg) == w.leq)) return;
    }

    auto best = structure_encoding(f_.leq, f_.inv, table_, perms_.front());
    for (const auto& p : perms_) {
      auto e = structure_encoding(f_.leq, f_.inv, table_, p);
      if (e < best) best = std::move(e);
    }
    found_.push_back(std::move(best));
  }

  void dfs(std::size_t i) {
    if (i == slots_.size()) {
      leaf();
      return;
    }
    const auto [a, b] = slots_[i];
    const Elem lo = f_.lat.join_of(f_.leq, a, b);  // a, b ≤ a⊕b
    for (Elem v = 0; v < n_; ++v) {
      if (!f_.leq.le(lo, v)) continue;
      budget_.tick();
      if (cls_ == AlgClass::Lea &&
          (row_duplicate(a, b, v) || (a != b && row_duplicate(b, a, v))))
        continue;
      set(a, b, v);
      set(b, a, v);
      if (w2_consistent()) dfs(i + 1);
      set(a, b, kUndef);
      set(b, a, kUndef);
    }
  }

  const Frame& f_;
  int n_;
  AlgClass cls_;
  const Budget& budget_;
  const std::vector<std::vector<Elem>>& perms_;
  std::vector<Elem> table_;
  std::vector<std::uint8_t> dom_;
  std::vector<std::pair<Elem, Elem>> slots_;
  std::vector<std::vector<std::uint8_t>> found_;
};

}  // namespace

int enumeration_cap(AlgClass cls) {
  return cls == AlgClass::WeakLea ? 6 : 7;
}

std::vector<PartialAlgebra> enumerate_algebras(const EnumerationTask& task) {
  if (task.size < 2)
    throw Error(Errc::UsageError, "enumeration size must be at least 2",
                Json{{"size", task.size}});
  if (task.size > enumeration_cap(task.cls))
    throw Error(Errc::UsageError,
                "size exceeds the feasibility cap for this class",
                Json{{"size", task.size}, {"cap", enumeration_cap(task.cls)}});
  if (task.node_budget == 0)
    throw Error(Errc::UsageError, "node budget must be positive");
  const int n = task.size;

  std::atomic<std::uint64_t> nodes{0};
  Budget budget;
  budget.nodes = &nodes;
  budget.cap = task.node_budget;
  if (task.time_limit_secs > 0) {
    budget.has_deadline = true;
    budget.deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(task.time_limit_secs));
  }

  const auto perms = middle_perms(n);
  std::vector<Frame> frames = all_frames(n);

  std::vector<std::size_t> work(frames.size());
  for (std::size_t i = 0; i < work.size(); ++i) work[i] = i;
  if (task.shuffle_seed != 0) {
    std::mt19937 rng(task.shuffle_seed);
    std::shuffle(work.begin(), work.end(), rng);
  }

  // Partition frames round-robin over a bounded worker pool; partitions
  // share only the node counter, and the final set-merge makes the result
  // independent of both partitioning and completion order.
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, std::max<std::size_t>(1, work.size()));
  std::vector<std::future<std::vector<std::vector<std::uint8_t>>>> futs;
  for (std::size_t wi = 0; wi < workers; ++wi) {
    futs.push_back(std::async(std::launch::async, [&, wi] {
      std::vector<std::vector<std::uint8_t>> mine;
      for (std::size_t k = wi; k < work.size(); k += workers) {
        TableSearch search(frames[work[k]], n, task.cls, budget, perms);
        auto found = search.run();
        mine.insert(mine.end(), std::make_move_iterator(found.begin()),
                    std::make_move_iterator(found.end()));
      }
      return mine;
    }));
  }

  std::set<std::vector<std::uint8_t>> canon;
  std::exception_ptr first_error;
  for (auto& f : futs) {
    try {
      for (auto& enc : f.get()) canon.insert(std::move(enc));
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<PartialAlgebra> out;
  out.reserve(canon.size());
  for (const auto& enc : canon) out.push_back(decode_structure(enc).alg);
  return out;
}

std::vector<std::uint8_t> iso_encoding(const WeakStructure& w) {
  const int n = w.alg.size();
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, kUndef);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (w.alg.defined(a, b)) table[static_cast<std::size_t>(a) * n + b] = w.alg.op(a, b);

  // Relabel so the designated bounds land on positions 0 and n-1 first;
  // minimization then ranges over the middle arrangements.
  std::vector<Elem> base(static_cast<std::size_t>(n));
  Elem next = 1;
  for (Elem e = 0; e < n; ++e) {
    if (e == w.alg.zero())
      base[static_cast<std::size_t>(e)] = 0;
    else if (e == w.alg.one())
      base[static_cast<std::size_t>(e)] = n - 1;
    else
      base[static_cast<std::size_t>(e)] = next++;
  }

  std::optional<std::vector<std::uint8_t>> best;
  for (const auto& q : middle_perms(n)) {
    std::vector<Elem> p(static_cast<std::size_t>(n));
    for (Elem e = 0; e < n; ++e)
      p[static_cast<std::size_t>(e)] =
          q[static_cast<std::size_t>(base[static_cast<std::size_t>(e)])];
    auto enc = structure_encoding(w.leq, w.inv, table, p);
    if (!best || enc < *best) best = std::move(enc);
  }
  return *best;
}

WeakStructure decode_structure(const std::vector<std::uint8_t>& enc) {
  const int n = static_cast<int>(enc[0]);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  WeakStructure w;
  w.leq = Order(n);
  for (std::size_t i = 0; i < nn; ++i)
    w.leq.bits[i] = enc[1 + i];
  w.inv.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w.inv[static_cast<std::size_t>(i)] = static_cast<Elem>(enc[1 + nn + i]);
  PartialAlgebra alg(generated_labels(n), 0, n - 1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const std::uint8_t v = enc[1 + nn + static_cast<std::size_t>(n) +
                                 static_cast<std::size_t>(a) * n + b];
      if (v != 255) alg.set(a, b, static_cast<Elem>(v));
    }
  w.alg = std::move(alg);
  LatticeProbe probe = probe_lattice(w.leq);
  if (!probe.is_lattice)
    throw Error(Errc::InternalInconsistency,
                "decoded order is not a lattice");
  w.lat = std::move(probe.ops);
  return w;
}

PartialAlgebra iso_canonical(const PartialAlgebra& alg) {
  WeakRecovery rec = recover_weak(alg);
  if (!rec.structure)
    throw Error(Errc::NotWeakLEAContext,
                "canonical form needs an algebra whose order and involution "
                "are recoverable from the table",
                rec.report.to_json());
  return decode_structure(iso_encoding(*rec.structure)).alg;
}

std::optional<Countermodel> find_countermodel(const FormulaPtr& f, int max_size,
                                              std::vector<std::string> atoms,
                                              std::uint64_t node_budget,
                                              double time_limit_secs) {
  if (max_size < 2 || max_size > enumeration_cap(AlgClass::Lea))
    throw Error(Errc::UsageError,
                "countermodel search size must lie between 2 and the "
                "enumeration cap",
                Json{{"max_size", max_size},
                     {"cap", enumeration_cap(AlgClass::Lea)}});
  if (atoms.empty()) atoms = collect_atoms(f);
  const std::size_t k = atoms.size();

  for (int s = 2; s <= max_size; ++s) {
    EnumerationTask task;
    task.size = s;
    task.cls = AlgClass::Lea;
    task.node_budget = node_budget;
    task.time_limit_secs = time_limit_secs;
    for (const PartialAlgebra& alg : enumerate_algebras(task)) {
      auto lea = std::make_shared<const Lea>(Lea::make(alg));
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        Model m;
        m.lea = lea;
        for (std::size_t i = 0; i < k; ++i)
          m.valuation[atoms[i]] = static_cast<Elem>(idx[i]);
        const Elem v = eval(f, m);
        if (v != lea->one()) {
          Countermodel cm;
          cm.algebra = alg;
          for (std::size_t i = 0; i < k; ++i)
            cm.valuation[atoms[i]] = lea->label(static_cast<Elem>(idx[i]));
          cm.value = lea->label(v);
          return cm;
        }
        std::size_t i = 0;
        while (i < k && ++idx[i] == static_cast<std::size_t>(s)) {
          idx[i] = 0;
          ++i;
        }
        if (i == k) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace lel
