#include <lel/ci.hpp>

#include <utility>

namespace lel {

namespace {

Json named(const std::vector<std::string>& labels,
           std::initializer_list<std::pair<const char*, Elem>> kv) {
  Json j;
  for (const auto& [key, e] : kv) j[key] = labels[static_cast<std::size_t>(e)];
  return j;
}

// "order" / "bounds" / "lattice" verdicts for a relation; fills `probe` on
// success.  Shared by the recovery paths.
bool order_guards(Report& rep, const std::vector<std::string>& labels, const Order& leq,
                  Elem zero, Elem one, LatticeProbe& probe) {
  Check& order_check = rep.add("order");
  PosetCheck poset = check_partial_order(leq);
  if (!poset.ok) {
    Json w;
    w["requirement"] = poset.which;
    Json elems = Json::array();
    for (Elem e : poset.witness) elems.push_back(labels[static_cast<std::size_t>(e)]);
    w["elements"] = elems;
    order_check.fail(std::move(w));
    return false;
  }

  Check& bounds = rep.add("bounds");
  auto bot = bottom_of(leq);
  auto top = top_of(leq);
  if (bot != zero || top != one) {
    Json w;
    w["bottom"] = bot ? Json(labels[static_cast<std::size_t>(*bot)]) : Json();
    w["top"] = top ? Json(labels[static_cast<std::size_t>(*top)]) : Json();
    bounds.fail(std::move(w));
    return false;
  }

  Check& lattice_check = rep.add("lattice");
  probe = probe_lattice(leq);
  if (!probe.is_lattice) {
    lattice_check.fail(Json{{"kind", probe.bad_kind},
                            {"a", labels[static_cast<std::size_t>(probe.bad_pair->first)]},
                            {"b", labels[static_cast<std::size_t>(probe.bad_pair->second)]}});
    return false;
  }
  return true;
}

}  // namespace

CIStructure CIStructure::from_json(const Json& j) {
  Carrier carrier = parse_carrier(j);
  CIStructure ci;
  ci.labels = std::move(carrier.labels);
  ci.zero = carrier.zero;
  ci.one = carrier.one;
  ci.dot = triples_to_table(ci.labels, j, "dot", /*require_total=*/true);
  ci.arrow = triples_to_table(ci.labels, j, "arrow", /*require_total=*/true);
  return ci;
}

Json CIStructure::to_json() const {
  Json j;
  j["elements"] = labels;
  j["zero"] = labels[static_cast<std::size_t>(zero)];
  j["one"] = labels[static_cast<std::size_t>(one)];
  j["dot"] = table_to_triples(labels, dot);
  j["arrow"] = table_to_triples(labels, arrow);
  return j;
}

CIContextRecovery recover_ci_context(const CIStructure& ci) {
  CIContextRecovery out;
  Report& rep = out.report;
  rep.subject = "ci-recovery";
  const int n = ci.size();

  Check& degenerate = rep.add("nondegenerate");
  if (n < 2) {
    degenerate.fail(Json{{"reason", "single-element carrier (0 = 1)"}});
    rep.summary = "degenerate (single-element) structure";
    return out;
  }

  Order leq(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) leq.set_le(a, b, ci.arrow_of(a, b) == ci.one);

  LatticeProbe probe;
  if (!order_guards(rep, ci.labels, leq, ci.zero, ci.one, probe)) {
    rep.summary = "implication table does not induce a bounded lattice";
    return out;
  }

  CIContext ctx;
  ctx.leq = std::move(leq);
  ctx.lat = std::move(probe.ops);
  ctx.inv.resize(static_cast<std::size_t>(n));
  for (Elem a = 0; a < n; ++a) ctx.inv[static_cast<std::size_t>(a)] = ci.arrow_of(a, ci.zero);
  out.context = std::move(ctx);
  rep.summary = "recovered lattice context from the implication table";
  return out;
}

Report audit_ci(const CIStructure& ci, const CIContext& ctx) {
  Report rep;
  rep.subject = "ci-laws";
  const int n = ci.size();

  Check& ci1 = rep.add("CI1");
  for (Elem a = 0; a < n; ++a) {
    if (ci.dot_of(ci.one, a) != a)
      ci1.fail(Json{{"a", ci.labels[static_cast<std::size_t>(a)]}, {"side", "1*a"}});
    if (ci.dot_of(a, ci.one) != a)
      ci1.fail(Json{{"a", ci.labels[static_cast<std::size_t>(a)]}, {"side", "a*1"}});
  }

  Check& ci2 = rep.add("CI2");
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c)
      for (Elem b = 0; b < n; ++b)
        if (ctx.le(ci.dot_of(a, c), b) != ctx.le(c, ci.arrow_of(a, b)))
          ci2.fail(named(ci.labels, {{"a", a}, {"c", c}, {"b", b}}));

  Check& ci3 = rep.add("CI3");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!ctx.le(ci.dot_of(a, b), a)) ci3.fail(named(ci.labels, {{"a", a}, {"b", b}}));

  Check& ci4 = rep.add("CI4");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!ctx.le(ci.dot_of(a, ci.arrow_of(a, b)), b))
        ci4.fail(named(ci.labels, {{"a", a}, {"b", b}}));

  Check& ci5 = rep.add("CI5");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (ctx.le(a, b) != (ci.arrow_of(a, b) == ci.one))
        ci5.fail(named(ci.labels, {{"a", a}, {"b", b}}));

  Check& ci6 = rep.add("CI6");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (ci.arrow_of(a, ctx.meet(b, c)) !=
            ctx.meet(ci.arrow_of(a, b), ci.arrow_of(a, c)))
          ci6.fail(named(ci.labels, {{"a", a}, {"b", b}, {"c", c}}));

  Check& invol = rep.add("involutive");
  {
    std::vector<Elem> neg(static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a) neg[static_cast<std::size_t>(a)] = ci.arrow_of(a, ci.zero);
    InvolutionCheck ic = check_involution(ctx.leq, neg);
    if (!ic.period_two)
      invol.fail(Json{{"element", ci.labels[static_cast<std::size_t>(ic.witness[0])]},
                      {"reason", "a -> 0 is not period two"}});
    else if (!ic.antitone)
      invol.fail(Json{{"a", ci.labels[static_cast<std::size_t>(ic.witness[0])]},
                      {"b", ci.labels[static_cast<std::size_t>(ic.witness[1])]},
                      {"reason", "a -> 0 is not antitone"}});
  }

  const bool base = ci1.pass && ci2.pass;
  bool derived_ok = true;
  for (Check* c : {&ci3, &ci4, &ci5, &ci6}) {
    if (!c->pass) {
      derived_ok = false;
      if (base)
        c->info = Json{{"note",
                        "derivable from CI1-CI2; a failure while those pass indicates an "
                        "implementation bug"}};
    }
  }

  if (base && derived_ok)
    rep.summary = invol.pass ? "involutive CI-lattice" : "CI-lattice (a -> 0 is not an involution)";
  else if (base)
    rep.summary = "CI-lattice with derived-law failures (implementation bug)";
  else
    rep.summary = "not a CI-lattice";
  return rep;
}

Report audit_ci(const CIStructure& ci) {
  CIContextRecovery rec = recover_ci_context(ci);
  Report rep;
  rep.subject = "ci-laws";
  rep.absorb(rec.report);
  if (!rec.context) {
    rep.summary = rec.report.summary.empty() ? "not a CI-lattice" : rec.report.summary;
    return rep;
  }
  Report laws = audit_ci(ci, *rec.context);
  rep.absorb(laws);
  rep.summary = std::move(laws.summary);
  return rep;
}

Report audit_cw(const CIStructure& ci, const CIContext& ctx) {
  Report rep;
  rep.subject = "cw-laws";
  const int n = ci.size();

  Check& cw1 = rep.add("cw1");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (ci.dot_of(a, b) != ctx.invol(ci.arrow_of(a, ctx.invol(b))))
        cw1.fail(named(ci.labels, {{"a", a}, {"b", b}}));

  Check& cw2 = rep.add("cw2");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!ctx.le(a, ctx.invol(b))) continue;
        ++tested;
        Elem lhs = ci.arrow_of(ctx.invol(a), b);
        if (lhs != ci.arrow_of(ctx.invol(b), a) || !ctx.le(a, lhs))
          cw2.fail(named(ci.labels, {{"a", a}, {"b", b}}));
      }
    cw2.info = Json{{"tested", tested}};
  }

  Check& cw3 = rep.add("cw3");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (!ctx.le(a, ctx.invol(b)) || !ctx.le(a, ctx.invol(c))) continue;
          if (!ctx.le(ci.arrow_of(ctx.invol(a), b), ctx.invol(c))) continue;
          ++tested;
          if (!ctx.le(ci.arrow_of(ctx.invol(a), c), ctx.invol(b)))
            cw3.fail(named(ci.labels, {{"a", a}, {"b", b}, {"c", c}}));
        }
    cw3.info = Json{{"tested", tested}};
  }

  Check& cw4 = rep.add("cw4");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (!ctx.le(ctx.invol(b), c) || !ctx.le(ctx.invol(a), ci.dot_of(b, c))) continue;
          ++tested;
          if (ci.dot_of(a, ci.dot_of(b, c)) != ci.dot_of(ci.dot_of(a, b), c))
            cw4.fail(named(ci.labels, {{"a", a}, {"b", b}, {"c", c}}));
        }
    cw4.info = Json{{"tested", tested}};
  }

  Check& cw5 = rep.add("cw5");
  for (Elem a = 0; a < n; ++a)
    if (ci.dot_of(a, ci.one) != a) cw5.fail(named(ci.labels, {{"a", a}}));

  rep.summary = rep.pass() ? "construction laws cw1-cw5 hold"
                           : "construction laws violated";
  return rep;
}

Report audit_cw(const CIStructure& ci) {
  CIContextRecovery rec = recover_ci_context(ci);
  Report rep;
  rep.subject = "cw-laws";
  rep.absorb(rec.report);
  if (!rec.context) {
    rep.summary = "construction laws not evaluated (no lattice context)";
    return rep;
  }
  Report laws = audit_cw(ci, *rec.context);
  rep.absorb(laws);
  rep.summary = std::move(laws.summary);
  return rep;
}

namespace {

PartialAlgebra build_from_cw(const CIStructure& ci, const CIContext& ctx, const Report& audit) {
  for (const Check& c : audit.checks)
    if (!c.pass)
      throw Error(Errc::CwViolation, "construction law does not hold",
                  Json{{"law", c.id},
                       {"witness", c.witnesses.empty() ? Json() : c.witnesses.front()}});
  PartialAlgebra alg(ci.labels, ci.zero, ci.one);
  const int n = ci.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (ctx.le(a, ctx.invol(b))) alg.set(a, b, ci.arrow_of(ctx.invol(a), b));
  return alg;
}

}  // namespace

PartialAlgebra lea_from_ci(const CIStructure& ci, const CIContext& ctx) {
  return build_from_cw(ci, ctx, audit_cw(ci, ctx));
}

PartialAlgebra lea_from_ci(const CIStructure& ci) {
  CIContextRecovery rec = recover_ci_context(ci);
  if (!rec.context) {
    for (const Check& c : rec.report.checks)
      if (!c.pass)
        throw Error(Errc::CwViolation, "no bounded lattice context for the construction",
                    Json{{"law", c.id},
                         {"witness", c.witnesses.empty() ? Json() : c.witnesses.front()}});
    throw Error(Errc::InternalInconsistency, "context recovery failed without a verdict");
  }
  return build_from_cw(ci, *rec.context, audit_cw(ci, *rec.context));
}

CIStructure ci_from_lea(const Lea& lea) {
  CIStructure ci;
  ci.labels = lea.algebra().labels();
  ci.zero = lea.zero();
  ci.one = lea.one();
  const int n = lea.size();
  ci.dot.resize(static_cast<std::size_t>(n) * n);
  ci.arrow.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::size_t cell = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      ci.dot[cell] = lea.sasaki_product(a, b);
      ci.arrow[cell] = lea.sasaki_arrow(a, b);
    }
  return ci;
}

CIStructure ci_from_lea(const PartialAlgebra& alg) { return ci_from_lea(Lea::make(alg)); }

CIContext lea_ci_context(const Lea& lea) {
  CIContext ctx;
  ctx.leq = lea.order();
  ctx.lat = lea.lattice();
  ctx.inv = lea.involution();
  return ctx;
}

CIStructure ortho_ci(std::vector<std::string> labels, Elem zero, Elem one, const CIContext& ctx) {
  CIStructure ci;
  ci.labels = std::move(labels);
  ci.zero = zero;
  ci.one = one;
  const int n = ci.size();
  ci.dot.resize(static_cast<std::size_t>(n) * n);
  ci.arrow.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::size_t cell = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      ci.dot[cell] = ctx.meet(a, b);
      ci.arrow[cell] = ctx.join(ctx.invol(a), b);
    }
  return ci;
}

}  // namespace lel
