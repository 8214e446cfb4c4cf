#include <lel/effect.hpp>

#include <algorithm>

namespace lel {

namespace {

Json labels_of(const PartialAlgebra& alg, std::initializer_list<std::pair<const char*, Elem>> kv) {
  Json j;
  for (const auto& [key, e] : kv) j[key] = alg.label(e);
  return j;
}

}  // namespace

Order induced_leq(const PartialAlgebra& alg) {
  const int n = alg.size();
  Order o(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c)
      if (alg.defined(a, c)) o.set_le(a, alg.op(a, c));
  return o;
}

std::vector<std::vector<Elem>> completions_to_one(const PartialAlgebra& alg) {
  const int n = alg.size();
  std::vector<std::vector<Elem>> out(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (alg.defined(a, b) && alg.op(a, b) == alg.one()) out[a].push_back(b);
  return out;
}

namespace {

// Unique maximum of `set` under `o`, if one exists.  Used to attach the
// natural partner to orthosupplement-existence witnesses.
std::optional<Elem> unique_max(const Order& o, const std::vector<Elem>& set) {
  for (Elem m : set) {
    bool top = true;
    for (Elem x : set)
      if (!o.le(x, m)) { top = false; break; }
    if (top) return m;
  }
  return std::nullopt;
}

}  // namespace

Report audit_effect_axioms(const PartialAlgebra& alg) {
  Report rep;
  rep.subject = "effect-axioms";
  const int n = alg.size();

  Check& degenerate = rep.add("nondegenerate");
  if (n < 2) {
    degenerate.fail(Json{{"reason", "single-element carrier (0 = 1)"}});
    rep.summary = "degenerate (single-element) algebra";
    return rep;
  }

  Check& e1 = rep.add("E1");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!alg.defined(a, b)) continue;
      if (!alg.defined(b, a) || alg.op(a, b) != alg.op(b, a))
        e1.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  Check& e2 = rep.add("E2");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (!alg.defined(b, c)) continue;
        Elem bc = alg.op(b, c);
        if (!alg.defined(a, bc)) continue;
        bool ok = alg.defined(a, b);
        if (ok) {
          Elem ab = alg.op(a, b);
          ok = alg.defined(ab, c) && alg.op(ab, c) == alg.op(a, bc);
        }
        if (!ok) e2.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
      }

  Order ind = induced_leq(alg);
  PosetCheck poset = check_partial_order(ind);
  auto completions = completions_to_one(alg);

  Check& e3 = rep.add("E3");
  for (Elem a = 0; a < n; ++a) {
    if (completions[a].empty()) {
      Json w;
      w["kind"] = "existence";
      w["element"] = alg.label(a);
      if (poset.ok) {
        // Attach the largest summand-partner so the witness shows how far
        // the sums reach (e.g. the pair whose sum peaks below 1).
        std::vector<Elem> ds;
        for (Elem b = 0; b < n; ++b)
          if (alg.defined(a, b)) ds.push_back(b);
        if (auto partner = unique_max(ind, ds)) {
          w["partner"] = alg.label(*partner);
          w["sum"] = alg.label(alg.op(a, *partner));
        }
      }
      e3.fail(std::move(w));
    } else if (completions[a].size() > 1) {
      Json cands = Json::array();
      for (Elem b : completions[a]) cands.push_back(alg.label(b));
      e3.fail(Json{{"kind", "uniqueness"}, {"element", alg.label(a)}, {"completions", cands}});
    }
  }

  Check& e4 = rep.add("E4");
  for (Elem a = 0; a < n; ++a)
    if (alg.defined(a, alg.one()) && a != alg.zero())
      e4.fail(labels_of(alg, {{"a", a}}));

  Check& order_check = rep.add("order");
  if (!poset.ok) {
    Json w;
    w["requirement"] = poset.which;
    Json elems = Json::array();
    for (Elem e : poset.witness) elems.push_back(alg.label(e));
    w["elements"] = elems;
    order_check.fail(std::move(w));
  }

  Check& lattice_check = rep.add("lattice");
  if (!poset.ok) {
    lattice_check.fail(Json{{"reason", "induced relation is not a partial order"}});
  } else {
    LatticeProbe probe = probe_lattice(ind);
    if (!probe.is_lattice)
      lattice_check.fail(Json{{"kind", probe.bad_kind},
                              {"a", alg.label(probe.bad_pair->first)},
                              {"b", alg.label(probe.bad_pair->second)}});
  }

  bool axioms = e1.pass && e2.pass && e3.pass && e4.pass && order_check.pass;
  if (axioms && lattice_check.pass)
    rep.summary = "lattice effect algebra";
  else if (axioms)
    rep.summary = "effect algebra (induced order is not a lattice)";
  else
    rep.summary = "not an effect algebra";
  return rep;
}

OrderStructure derive_order(const PartialAlgebra& alg) {
  Order ind = induced_leq(alg);
  PosetCheck poset = check_partial_order(ind);
  if (!poset.ok) {
    Json detail;
    detail["requirement"] = poset.which;
    Json elems = Json::array();
    for (Elem e : poset.witness) elems.push_back(alg.label(e));
    detail["elements"] = elems;
    throw Error(Errc::NotAPartialOrder, "induced relation violates " + poset.which, detail);
  }

  OrderStructure os;
  os.leq = ind;

  LatticeProbe probe = probe_lattice(ind);
  if (probe.is_lattice) os.lattice = probe.ops;

  auto completions = completions_to_one(alg);
  bool total = true;
  std::vector<Elem> inv(static_cast<std::size_t>(alg.size()), kUndef);
  for (Elem a = 0; a < alg.size(); ++a) {
    if (completions[a].size() > 1) {
      Json cands = Json::array();
      for (Elem b : completions[a]) cands.push_back(alg.label(b));
      throw Error(Errc::AmbiguousOrthosupplement,
                  "element " + alg.label(a) + " has several completions to 1",
                  Json{{"element", alg.label(a)}, {"candidates", cands}});
    }
    if (completions[a].empty())
      total = false;
    else
      inv[a] = completions[a].front();
  }
  if (total) os.involution = std::move(inv);
  return os;
}

Lea Lea::make(const PartialAlgebra& alg, SasakiMode mode) {
  Report rep = audit_effect_axioms(alg);
  if (!rep.pass())
    throw Error(Errc::NotALEA, "algebra fails the lattice-effect-algebra audit", rep.to_json());
  Lea lea;
  lea.alg_ = alg;
  lea.mode_ = mode;
  lea.leq_ = induced_leq(alg);
  lea.lat_ = probe_lattice(lea.leq_).ops;
  lea.inv_.assign(static_cast<std::size_t>(alg.size()), kUndef);
  auto completions = completions_to_one(alg);
  for (Elem a = 0; a < alg.size(); ++a) lea.inv_[a] = completions[a].front();
  return lea;
}

Elem Lea::ominus(Elem b, Elem a) const {
  Elem found = kUndef;
  for (Elem c = 0; c < size(); ++c) {
    if (alg_.defined(a, c) && alg_.op(a, c) == b) {
      if (found != kUndef)
        throw Error(Errc::InternalInconsistency,
                    "two witnesses for " + label(b) + " ominus " + label(a),
                    labels_of(alg_, {{"a", a}, {"b", b}, {"c1", found}, {"c2", c}}));
      found = c;
    }
  }
  if (found == kUndef)
    throw Error(Errc::NotBelow, label(a) + " is not below " + label(b),
                labels_of(alg_, {{"a", a}, {"b", b}}));
  return found;
}

std::optional<Elem> Lea::odot(Elem a, Elem b) const {
  Elem ai = inv(a), bi = inv(b);
  if (!alg_.defined(ai, bi)) return std::nullopt;
  return inv(alg_.op(ai, bi));
}

Elem Lea::sasaki_product(Elem a, Elem b) const {
  Elem m = meet(a, inv(b));  // a ∧ b'
  if (!alg_.defined(inv(a), m))
    throw Error(Errc::InternalInconsistency,
                "a' oplus (a ∧ b') is undefined although a ∧ b' ≤ a",
                labels_of(alg_, {{"a", a}, {"b", b}}));
  Elem by_formula = inv(alg_.op(inv(a), m));
  if (mode_ == SasakiMode::Audit) {
    Elem by_subtraction = ominus(a, m);  // a ⊖ (a ∧ b')
    if (by_formula != by_subtraction)
      throw Error(Errc::InternalInconsistency,
                  "the two defining expressions of the Sasaki product disagree",
                  labels_of(alg_, {{"a", a},
                                   {"b", b},
                                   {"via_orthosupplement", by_formula},
                                   {"via_subtraction", by_subtraction}}));
  }
  return by_formula;
}

Elem Lea::sasaki_arrow(Elem a, Elem b) const { return inv(sasaki_product(a, inv(b))); }

bool Lea::compatible(Elem a, Elem b) const {
  Elem m = meet(a, b);
  Elem rest = ominus(b, m);  // m ≤ b always holds
  if (!alg_.defined(a, rest)) return false;
  return alg_.op(a, rest) == join(a, b);
}

Centers centers(const Lea& lea) {
  Centers c;
  for (Elem a = 0; a < lea.size(); ++a)
    if (lea.sharp(a)) c.sharp.push_back(a);
  for (Elem a = 0; a < lea.size(); ++a) {
    bool everywhere = true;
    for (Elem b = 0; b < lea.size(); ++b)
      if (!lea.compatible(a, b)) { everywhere = false; break; }
    if (everywhere) c.compatible_center.push_back(a);
  }
  std::set_intersection(c.compatible_center.begin(), c.compatible_center.end(), c.sharp.begin(),
                        c.sharp.end(), std::back_inserter(c.center));
  return c;
}

PartialAlgebra ortholattice_embed(const std::vector<std::string>& labels, const Order& leq,
                                  const std::vector<Elem>& inv) {
  const int n = leq.n;
  PosetCheck poset = check_partial_order(leq);
  if (!poset.ok)
    throw Error(Errc::NotALattice, "relation is not a partial order (" + poset.which + ")");
  auto bot = bottom_of(leq);
  auto top = top_of(leq);
  if (!bot || !top) throw Error(Errc::NotALattice, "order is not bounded");
  LatticeProbe probe = probe_lattice(leq);
  if (!probe.is_lattice) throw Error(Errc::NotALattice, "order is not a lattice");
  InvolutionCheck ic = check_involution(leq, inv);
  if (!ic.period_two || !ic.antitone)
    throw Error(Errc::UsageError,
                std::string("map is not an involution (") +
                    (!ic.period_two ? "period" : "antitone") + " failure)");
  for (Elem a = 0; a < n; ++a)
    if (probe.ops.meet_of(leq, a, inv[a]) != *bot)
      throw Error(Errc::NotSharp, "element " + labels[a] + " is not sharp",
                  Json{{"element", labels[a]}});

  PartialAlgebra alg(labels, *bot, *top);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (leq.le(a, inv[b])) alg.set(a, b, probe.ops.join_of(leq, a, b));
  return alg;
}

Report audit_elaws(const Lea& lea) {
  Report rep;
  rep.subject = "effect-properties";
  const int n = lea.size();
  const Elem zero = lea.zero(), one = lea.one();
  const PartialAlgebra& alg = lea.algebra();
  auto inv = [&](Elem a) { return lea.inv(a); };
  auto le = [&](Elem a, Elem b) { return lea.le(a, b); };

  Check& e1 = rep.add("e1");
  for (Elem a = 0; a < n; ++a)
    if (inv(inv(a)) != a) e1.fail(labels_of(alg, {{"a", a}}));

  Check& e2 = rep.add("e2");
  if (inv(one) != zero || inv(zero) != one)
    e2.fail(Json{{"one'", lea.label(inv(one))}, {"zero'", lea.label(inv(zero))}});

  Check& e3 = rep.add("e3");
  for (Elem a = 0; a < n; ++a)
    if (!alg.defined(a, zero) || alg.op(a, zero) != a) e3.fail(labels_of(alg, {{"a", a}}));

  Check& e4 = rep.add("e4");
  for (Elem a = 0; a < n; ++a)
    if (alg.defined(a, one) != (a == zero)) e4.fail(labels_of(alg, {{"a", a}}));

  Check& e5 = rep.add("e5");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (alg.defined(a, b) && alg.op(a, b) == zero && !(a == zero && b == zero))
        e5.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }
  if (!alg.defined(zero, zero) || alg.op(zero, zero) != zero)
    e5.fail(Json{{"reason", "0 oplus 0 != 0"}});

  Check& e6 = rep.add("e6");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (alg.defined(a, b) != le(a, inv(b))) e6.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& e7 = rep.add("e7");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (le(a, b) && !le(inv(b), inv(a))) e7.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& e8 = rep.add("e8");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (alg.defined(a, c) && alg.defined(b, c) && alg.op(a, c) == alg.op(b, c) && a != b)
          e8.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));

  Check& e9 = rep.add("e9");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (alg.defined(a, c) && alg.defined(b, c) && le(alg.op(a, c), alg.op(b, c)) && !le(a, b))
          e9.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));

  Check& e10 = rep.add("e10");
  Check& e11 = rep.add("e11");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      if (!alg.defined(a, inv(b))) {
        e10.fail(labels_of(alg, {{"a", a}, {"b", b}}));
        e11.fail(labels_of(alg, {{"a", a}, {"b", b}}));
        continue;
      }
      Elem rest = inv(alg.op(a, inv(b)));  // (a ⊕ b')'
      if (!alg.defined(a, rest)) {
        e10.fail(labels_of(alg, {{"a", a}, {"b", b}}));
        e11.fail(labels_of(alg, {{"a", a}, {"b", b}}));
        continue;
      }
      if (alg.op(a, rest) != b) e11.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  Check& e12 = rep.add("e12");
  Check& e13 = rep.add("e13");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        bool ab_is_c = alg.defined(a, b) && alg.op(a, b) == c;
        bool e12_rhs = alg.defined(b, inv(c)) && alg.op(b, inv(c)) == inv(a);
        if (ab_is_c != e12_rhs) e12.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
        bool e13_rhs = alg.defined(b, inv(c)) && inv(alg.op(b, inv(c))) == a;
        if (ab_is_c != e13_rhs) e13.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
      }

  // Second list: the ⊙ properties (source numbering restarts at e13; the
  // first of them is e13b here so every id stays unique).
  auto odot = [&](Elem a, Elem b) { return lea.odot(a, b); };

  Check& e13b = rep.add("e13b");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto ab = odot(a, b), ba = odot(b, a);
      if (ab.has_value() != ba.has_value() || (ab && *ab != *ba))
        e13b.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  Check& e14 = rep.add("e14");
  for (Elem a = 0; a < n; ++a) {
    auto v = odot(a, inv(a));
    if (!v || *v != zero) e14.fail(labels_of(alg, {{"a", a}}));
  }

  Check& e15 = rep.add("e15");
  for (Elem a = 0; a < n; ++a)
    if (odot(a, zero).has_value() && a != one) e15.fail(labels_of(alg, {{"a", a}}));

  Check& e16 = rep.add("e16");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (odot(a, b).has_value() != le(inv(a), b)) e16.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& e17 = rep.add("e17");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        auto ac = odot(a, c), bc = odot(b, c);
        if (ac && bc && *ac == *bc && a != b)
          e17.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
      }

  Check& e18 = rep.add("e18");
  for (Elem a = 0; a < n; ++a) {
    auto aa = odot(a, a);
    if ((aa && *aa == a) != (a == one)) e18.fail(labels_of(alg, {{"a", a}}));
  }

  Check& e19 = rep.add("e19");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        auto bc = odot(b, c);
        if (!bc) continue;
        auto a_bc = odot(a, *bc);
        if (!a_bc) continue;
        auto ab = odot(a, b);
        if (!ab) {
          e19.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
          continue;
        }
        auto ab_c = odot(*ab, c);
        if (!ab_c || *ab_c != *a_bc) e19.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
      }

  rep.summary = rep.pass() ? "all effect-algebra properties hold"
                           : "property violations found (implementation bug on a valid algebra)";
  return rep;
}

Report audit_lea_laws(const Lea& lea) {
  Report rep;
  rep.subject = "lea-laws";
  const int n = lea.size();
  const PartialAlgebra& alg = lea.algebra();
  auto prod = [&](Elem a, Elem b) { return lea.sasaki_product(a, b); };
  auto arrow = [&](Elem a, Elem b) { return lea.sasaki_arrow(a, b); };

  Check& ci1 = rep.add("CI1");
  for (Elem a = 0; a < n; ++a)
    if (prod(lea.one(), a) != a || prod(a, lea.one()) != a) ci1.fail(labels_of(alg, {{"a", a}}));

  Check& ci2 = rep.add("CI2");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (lea.le(prod(a, c), b) != lea.le(c, arrow(a, b)))
          ci2.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));

  Check& ci3 = rep.add("CI3");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!lea.le(prod(a, b), a)) ci3.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& ci4 = rep.add("CI4");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!lea.le(prod(a, arrow(a, b)), b)) ci4.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& ci5 = rep.add("CI5");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (lea.le(a, b) != (arrow(a, b) == lea.one())) ci5.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& ci6 = rep.add("CI6");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (arrow(a, lea.meet(b, c)) != lea.meet(arrow(a, b), arrow(a, c)))
          ci6.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));

  Check& inv_ci = rep.add("involutive");
  for (Elem a = 0; a < n; ++a)
    if (arrow(a, lea.zero()) != lea.inv(a)) inv_ci.fail(labels_of(alg, {{"a", a}}));

  Check& div = rep.add("divisibility");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (lea.le(c, a) && lea.le(c, b) && !lea.le(c, prod(a, arrow(a, b))))
          div.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));

  // Prelinearity in the strong (join-equals-one) form: (a→b) ∨ (b→a) = 1.
  // Writing m = a∧b, the arrows are (a⊖m)′ and (b⊖m)′, so the law is De Morgan
  // dual to (a⊖m) ∧ (b⊖m) = 0, which follows from cancellation: any common
  // lower bound d gives m⊕d ≤ a and m⊕d ≤ b, hence m⊕d ≤ m, hence d = 0.
  // The MTL-style triple form ((a→b)→c)·((b→a)→c) ≤ c is strictly stronger
  // and fails already in MO2 (take c = a→b: the first factor is 1 and the
  // second is b, which is not below a′), so it is not a law of this class.
  Check& prelin = rep.add("strong_prelinearity");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (lea.join(arrow(a, b), arrow(b, a)) != lea.one())
        prelin.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& selfadj = rep.add("self_adjointness");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (lea.le(prod(a, b), lea.inv(c)) && !lea.le(prod(a, c), lea.inv(b)))
          selfadj.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));

  Check& resid = rep.add("residuation");
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      for (Elem b = 0; b < n; ++b)
        if (lea.le(prod(a, x), b) != lea.le(x, arrow(a, b)))
          resid.fail(labels_of(alg, {{"a", a}, {"x", x}, {"b", b}}));

  Check& sawedge = rep.add("sawedge");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem m = lea.meet(a, b);
      if (prod(a, arrow(a, b)) != m || prod(b, arrow(b, a)) != m ||
          lea.inv(arrow(a, lea.inv(arrow(a, b)))) != m ||
          lea.inv(arrow(b, lea.inv(arrow(b, a)))) != m)
        sawedge.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  rep.summary = rep.pass() ? "all conjunction/implication laws hold"
                           : "law violations found (implementation bug on a valid algebra)";
  return rep;
}

}  // namespace lel
