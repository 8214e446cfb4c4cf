#include <lel/weak.hpp>

#include <lel/effect.hpp>

namespace lel {

namespace {

Json labels_of(const PartialAlgebra& alg, std::initializer_list<std::pair<const char*, Elem>> kv) {
  Json j;
  for (const auto& [key, e] : kv) j[key] = alg.label(e);
  return j;
}

}  // namespace

Elem WeakStructure::sasaki_product(Elem a, Elem b) const {
  Elem m = meet(a, invol(b));
  Elem ai = invol(a);
  if (!alg.defined(ai, m))
    throw Error(Errc::InternalInconsistency,
                "a' oplus (a ∧ b') undefined on an audited weak structure",
                labels_of(alg, {{"a", a}, {"b", b}}));
  return invol(alg.op(ai, m));
}

Elem WeakStructure::sasaki_arrow(Elem a, Elem b) const {
  Elem m = meet(a, b);
  Elem ai = invol(a);
  if (!alg.defined(ai, m))
    throw Error(Errc::InternalInconsistency,
                "a' oplus (a ∧ b) undefined on an audited weak structure",
                labels_of(alg, {{"a", a}, {"b", b}}));
  return alg.op(ai, m);
}

WeakRecovery recover_weak(const PartialAlgebra& alg) {
  WeakRecovery out;
  Report& rep = out.report;
  rep.subject = "weak-recovery";
  const int n = alg.size();

  Check& degenerate = rep.add("nondegenerate");
  if (n < 2) {
    degenerate.fail(Json{{"reason", "single-element carrier (0 = 1)"}});
    rep.summary = "degenerate (single-element) algebra";
    return out;
  }

  // Partner sets: D(a) = {b : a⊕b defined}.  For a genuine weak structure
  // D(a) is the down-set of a', so inclusion of partner sets mirrors ≤.
  std::vector<std::vector<std::uint8_t>> partners(
      static_cast<std::size_t>(n), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (alg.defined(a, b)) partners[a][b] = 1;

  Order leq(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      bool contains = true;
      for (Elem x = 0; x < n; ++x)
        if (partners[b][x] && !partners[a][x]) { contains = false; break; }
      leq.set_le(a, b, contains);
    }

  Check& order_check = rep.add("order");
  PosetCheck poset = check_partial_order(leq);
  if (!poset.ok) {
    Json w;
    w["requirement"] = poset.which;
    Json elems = Json::array();
    for (Elem e : poset.witness) elems.push_back(alg.label(e));
    w["elements"] = elems;
    order_check.fail(std::move(w));
    rep.summary = "definedness pattern does not induce a partial order";
    return out;
  }

  Check& bounds = rep.add("bounds");
  auto bot = bottom_of(leq);
  auto top = top_of(leq);
  if (bot != alg.zero() || top != alg.one()) {
    Json w;
    w["bottom"] = bot ? Json(alg.label(*bot)) : Json();
    w["top"] = top ? Json(alg.label(*top)) : Json();
    bounds.fail(std::move(w));
    rep.summary = "designated 0/1 are not the bounds of the recovered order";
    return out;
  }

  Check& lattice_check = rep.add("lattice");
  LatticeProbe probe = probe_lattice(leq);
  if (!probe.is_lattice) {
    lattice_check.fail(Json{{"kind", probe.bad_kind},
                            {"a", alg.label(probe.bad_pair->first)},
                            {"b", alg.label(probe.bad_pair->second)}});
    rep.summary = "recovered order is not a lattice";
    return out;
  }

  Check& invol_check = rep.add("involution");
  std::vector<Elem> inv(static_cast<std::size_t>(n), kUndef);
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem> ds;
    for (Elem b = 0; b < n; ++b)
      if (partners[a][b]) ds.push_back(b);
    std::optional<Elem> best;
    for (Elem m : ds) {
      bool greatest = true;
      for (Elem x : ds)
        if (!leq.le(x, m)) { greatest = false; break; }
      if (greatest) { best = m; break; }
    }
    if (!best) {
      invol_check.fail(Json{{"element", alg.label(a)}, {"reason", "partner set has no maximum"}});
      continue;
    }
    inv[a] = *best;
  }
  if (invol_check.pass) {
    InvolutionCheck ic = check_involution(leq, inv);
    if (!ic.period_two) {
      invol_check.fail(Json{{"element", alg.label(ic.witness[0])}, {"reason", "not period two"}});
    } else if (!ic.antitone) {
      invol_check.fail(Json{{"a", alg.label(ic.witness[0])},
                            {"b", alg.label(ic.witness[1])},
                            {"reason", "not antitone"}});
    }
  }
  if (!invol_check.pass) {
    rep.summary = "no involution is recoverable from the definedness pattern";
    return out;
  }

  rep.summary = "recovered bounded involutive lattice";
  WeakStructure w;
  w.alg = alg;
  w.leq = std::move(leq);
  w.lat = std::move(probe.ops);
  w.inv = std::move(inv);
  out.structure = std::move(w);
  return out;
}

Report audit_weak_lea(const WeakStructure& w) {
  Report rep;
  rep.subject = "weak-lea";
  const PartialAlgebra& alg = w.alg;
  const int n = alg.size();

  Check& degenerate = rep.add("nondegenerate");
  if (n < 2) {
    degenerate.fail(Json{{"reason", "single-element carrier (0 = 1)"}});
    rep.summary = "degenerate (single-element) algebra";
    return rep;
  }

  Check& order_check = rep.add("order");
  PosetCheck poset = check_partial_order(w.leq);
  if (!poset.ok) {
    Json jw;
    jw["requirement"] = poset.which;
    Json elems = Json::array();
    for (Elem e : poset.witness) elems.push_back(alg.label(e));
    jw["elements"] = elems;
    order_check.fail(std::move(jw));
  }
  if (order_check.pass && (bottom_of(w.leq) != alg.zero() || top_of(w.leq) != alg.one()))
    order_check.fail(Json{{"reason", "designated 0/1 are not bottom/top"}});

  Check& lattice_check = rep.add("lattice");
  if (order_check.pass) {
    LatticeProbe probe = probe_lattice(w.leq);
    if (!probe.is_lattice)
      lattice_check.fail(Json{{"kind", probe.bad_kind},
                              {"a", alg.label(probe.bad_pair->first)},
                              {"b", alg.label(probe.bad_pair->second)}});
  } else {
    lattice_check.fail(Json{{"reason", "relation is not a partial order"}});
  }

  Check& invol_check = rep.add("involution");
  {
    InvolutionCheck ic = check_involution(w.leq, w.inv);
    if (!ic.period_two)
      invol_check.fail(Json{{"element", alg.label(ic.witness[0])}, {"reason", "not period two"}});
    else if (!ic.antitone)
      invol_check.fail(Json{{"a", alg.label(ic.witness[0])},
                            {"b", alg.label(ic.witness[1])},
                            {"reason", "not antitone"}});
  }

  Check& wdef = rep.add("Wdef");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (alg.defined(a, b) != w.le(a, w.invol(b)))
        wdef.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& w1 = rep.add("W1");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!alg.defined(a, b)) continue;
      if (!alg.defined(b, a) || alg.op(a, b) != alg.op(b, a))
        w1.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  Check& w2 = rep.add("W2");
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
        if (!ok) w2.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
      }

  Check& w3 = rep.add("W3");
  for (Elem a = 0; a < n; ++a)
    if (!alg.defined(a, alg.zero()) || alg.op(a, alg.zero()) != a)
      w3.fail(labels_of(alg, {{"a", a}}));

  rep.summary =
      rep.pass() ? "weak lattice effect algebra" : "not a weak lattice effect algebra";
  return rep;
}

Report audit_weak_lea(const PartialAlgebra& alg) {
  WeakRecovery rec = recover_weak(alg);
  if (!rec.structure) {
    rec.report.subject = "weak-lea";
    return rec.report;
  }
  return audit_weak_lea(*rec.structure);
}

WeakStructure make_weak(const PartialAlgebra& alg) {
  WeakRecovery rec = recover_weak(alg);
  if (rec.structure) {
    Report audit = audit_weak_lea(*rec.structure);
    if (audit.pass()) return *std::move(rec.structure);
    throw Error(Errc::NotWeakLEAContext, "table is not a weak lattice effect algebra",
                audit.to_json());
  }
  throw Error(Errc::NotWeakLEAContext, "no bounded involutive lattice is recoverable",
              rec.report.to_json());
}

Report audit_derived_w(const WeakStructure& w) {
  Report rep;
  rep.subject = "weak-derived";
  const PartialAlgebra& alg = w.alg;
  const int n = alg.size();
  const Elem zero = alg.zero(), one = alg.one();
  const Json bug_note{{"note",
                       "theorem for weak lattice effect algebras; a failure on an audited "
                       "structure indicates an implementation bug"}};

  Check& w4 = rep.add("W4");
  for (Elem a = 0; a < n; ++a)
    if (alg.defined(a, one) && a != zero) w4.fail(labels_of(alg, {{"a", a}}));

  Check& w5 = rep.add("W5");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!alg.defined(a, b)) continue;
        ++tested;
        Elem c = alg.op(a, b);
        bool ok = w.le(a, c) && w.le(b, c);
        Elem ci = w.invol(c);
        ok = ok && alg.defined(a, ci) && w.le(alg.op(a, ci), w.invol(b));
        ok = ok && alg.defined(b, ci) && w.le(alg.op(b, ci), w.invol(a));
        if (!ok) w5.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
      }
    w5.info = Json{{"tested", tested}};
  }

  Check& w6 = rep.add("W6");
  for (Elem a = 0; a < n; ++a) {
    if (!alg.defined(a, w.invol(a))) {
      w6.fail(labels_of(alg, {{"a", a}}));
      continue;
    }
    Elem r = alg.op(a, w.invol(a));
    if (!(w.le(w.invol(r), a) && w.le(a, r))) w6.fail(labels_of(alg, {{"a", a}, {"r", r}}));
  }

  Check& w7 = rep.add("W7");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      bool lhs = w.le(a, b) && alg.defined(a, w.invol(b)) && alg.op(a, w.invol(b)) != one;
      bool rhs = false;
      for (Elem c = 0; c < n && !rhs; ++c)
        if (c != zero && alg.defined(a, c) && w.le(alg.op(a, c), b)) rhs = true;
      if (lhs != rhs) w7.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  Check& w8 = rep.add("W8");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        bool lhs = alg.defined(a, c) && w.le(alg.op(a, c), b);
        Elem bi = w.invol(b);
        bool rhs = alg.defined(bi, c) && w.le(alg.op(bi, c), w.invol(a));
        if (lhs != rhs) w8.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
      }

  for (Check& c : rep.checks)
    if (!c.pass) c.info = bug_note;
  rep.summary = rep.pass() ? "derived properties W4-W8 hold"
                           : "derived-property violation (implementation bug on an audited "
                             "structure)";
  return rep;
}

Report rd_profile(const WeakStructure& w) {
  Report rep;
  rep.subject = "rd-profile";
  const PartialAlgebra& alg = w.alg;
  const int n = alg.size();
  auto prod = [&](Elem a, Elem b) { return w.sasaki_product(a, b); };
  auto arrow = [&](Elem a, Elem b) { return w.sasaki_arrow(a, b); };

  // RD1: the table alone is a lattice effect algebra whose orthosupplement
  // map coincides with the involution of the structure.
  Check& rd1 = rep.add("RD1");
  {
    Report ea = audit_effect_axioms(alg);
    if (!ea.pass()) {
      for (const Check& c : ea.checks)
        if (!c.pass) {
          Json jw;
          jw["failed"] = c.id;
          if (!c.witnesses.empty()) jw["witness"] = c.witnesses.front();
          rd1.fail(std::move(jw));
        }
    } else {
      auto completions = completions_to_one(alg);
      for (Elem a = 0; a < n; ++a)
        if (completions[a].size() != 1 || completions[a].front() != w.invol(a))
          rd1.fail(Json{{"failed", "orthosupplement=involution"}, {"element", alg.label(a)}});
      // The induced order must also agree with the lattice order.
      Order ind = induced_leq(alg);
      for (Elem a = 0; a < n && rd1.pass; ++a)
        for (Elem b = 0; b < n && rd1.pass; ++b)
          if (ind.le(a, b) != w.le(a, b))
            rd1.fail(Json{{"failed", "induced-order=lattice-order"},
                          {"a", alg.label(a)},
                          {"b", alg.label(b)}});
    }
  }

  Check& rd2 = rep.add("RD2");
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      for (Elem b = 0; b < n; ++b)
        if (w.le(prod(a, x), b) != w.le(x, arrow(a, b)))
          rd2.fail(labels_of(alg, {{"a", a}, {"x", x}, {"b", b}}));

  Check& rd3 = rep.add("RD3");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem x = 0; x < n; ++x) {
        bool lhs = w.le(w.invol(b), arrow(a, w.invol(x)));
        bool rhs = w.le(x, arrow(a, b));
        if (lhs != rhs) rd3.fail(labels_of(alg, {{"a", a}, {"b", b}, {"x", x}}));
      }

  Check& rd4 = rep.add("RD4");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (w.le(a, b) != (arrow(a, b) == alg.one())) rd4.fail(labels_of(alg, {{"a", a}, {"b", b}}));

  Check& rd5 = rep.add("RD5");
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (alg.defined(a, b) && (alg.op(a, b) == alg.one()) != (b == w.invol(a)))
        rd5.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    if (!alg.defined(a, w.invol(a)))
      rd5.fail(labels_of(alg, {{"a", a}, {"b", w.invol(a)}}));
  }

  Check& rd6 = rep.add("RD6");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!alg.defined(a, b)) continue;
      Elem c = alg.op(a, b);
      Elem ci = w.invol(c);
      if (!alg.defined(a, ci) || alg.op(a, ci) != w.invol(b))
        rd6.fail(labels_of(alg, {{"a", a}, {"b", b}, {"c", c}}));
    }

  Check& rd7 = rep.add("RD7");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!w.le(a, b)) continue;
      // a' ⊙ b = (a ⊕ b')'; a ≤ b makes a ⊕ b' defined.
      if (!alg.defined(a, w.invol(b))) {
        rd7.fail(labels_of(alg, {{"a", a}, {"b", b}}));
        continue;
      }
      Elem t = w.invol(alg.op(a, w.invol(b)));
      if (!alg.defined(a, t) || alg.op(a, t) != b) rd7.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  Check& rd8 = rep.add("RD8");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      int count = 0;
      for (Elem c = 0; c < n; ++c)
        if (alg.defined(a, c) && alg.op(a, c) == b) ++count;
      if (w.le(a, b) != (count == 1)) rd8.fail(labels_of(alg, {{"a", a}, {"b", b}}));
    }

  int passed = 0;
  for (const Check& c : rep.checks)
    if (c.pass) ++passed;
  if (passed == 0)
    rep.summary = "all eight conditions fail (uniform)";
  else if (passed == static_cast<int>(rep.checks.size()))
    rep.summary = "all eight conditions hold (uniform)";
  else
    rep.summary = "MIXED PROFILE: the eight conditions are a theorem-level equivalence; "
                  "a mixed outcome indicates an implementation bug";
  rep.meta = Json{{"uniform", passed == 0 || passed == static_cast<int>(rep.checks.size())}};
  return rep;
}

bool rd_uniform(const Report& profile) {
  bool any_pass = false, any_fail = false;
  for (const Check& c : profile.checks) (c.pass ? any_pass : any_fail) = true;
  return !(any_pass && any_fail);
}

}  // namespace lel
