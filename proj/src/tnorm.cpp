#include <lel/tnorm.hpp>

#include <utility>

namespace lel {

namespace {

Json named(const std::vector<std::string>& labels,
           std::initializer_list<std::pair<const char*, Elem>> kv) {
  Json j;
  for (const auto& [key, e] : kv) j[key] = labels[static_cast<std::size_t>(e)];
  return j;
}

}  // namespace

Report audit_partial_tnorm(const std::vector<std::string>& labels, const Order& leq, Elem one,
                           const std::vector<Elem>& delta) {
  Report rep;
  rep.subject = "partial-tnorm";
  const int n = static_cast<int>(labels.size());
  auto cell = [n](Elem a, Elem b) {
    return static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
  };
  auto defined = [&](Elem a, Elem b) { return delta[cell(a, b)] != kUndef; };
  auto val = [&](Elem a, Elem b) { return delta[cell(a, b)]; };

  Check& unit = rep.add("i");
  for (Elem a = 0; a < n; ++a)
    if (!defined(one, a) || val(one, a) != a) unit.fail(named(labels, {{"a", a}}));

  Check& comm = rep.add("ii");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!defined(a, b)) continue;
      if (!defined(b, a) || val(a, b) != val(b, a)) comm.fail(named(labels, {{"a", a}, {"b", b}}));
    }

  Check& assoc = rep.add("iii");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (!defined(b, c)) continue;
          Elem bc = val(b, c);
          if (!defined(a, bc)) continue;
          ++tested;
          bool ok = defined(a, b);
          if (ok) {
            Elem ab = val(a, b);
            ok = defined(ab, c) && val(ab, c) == val(a, bc);
          }
          if (!ok) assoc.fail(named(labels, {{"a", a}, {"b", b}, {"c", c}}));
        }
    assoc.info = Json{{"tested", tested}};
  }

  Check& mono = rep.add("iv");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!leq.le(a, b)) continue;
        for (Elem c = 0; c < n; ++c)
          for (Elem d = 0; d < n; ++d) {
            if (!leq.le(c, d) || !defined(a, c) || !defined(b, d)) continue;
            ++tested;
            if (!leq.le(val(a, c), val(b, d)))
              mono.fail(named(labels, {{"a", a}, {"b", b}, {"c", c}, {"d", d}}));
          }
      }
    mono.info = Json{{"tested", tested}};
  }

  rep.summary = rep.pass() ? "partial t-norm" : "not a partial t-norm";
  return rep;
}

std::vector<Elem> odot_table(const Lea& lea) {
  const int n = lea.size();
  std::vector<Elem> t(static_cast<std::size_t>(n) * n, kUndef);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (auto v = lea.odot(a, b)) t[static_cast<std::size_t>(a) * n + b] = *v;
  return t;
}

std::vector<Elem> units_only_delta(int n, Elem one) {
  std::vector<Elem> t(static_cast<std::size_t>(n) * n, kUndef);
  for (Elem a = 0; a < n; ++a) {
    t[static_cast<std::size_t>(one) * n + a] = a;
    t[static_cast<std::size_t>(a) * n + one] = a;
  }
  return t;
}

std::optional<std::vector<Elem>> residual_star(const Lea& lea, const std::vector<Elem>& arrow) {
  const int n = lea.size();
  std::vector<Elem> star(static_cast<std::size_t>(n) * n, kUndef);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      std::vector<std::uint8_t> in_up(static_cast<std::size_t>(n), 0);
      std::optional<Elem> v;
      for (Elem b = 0; b < n; ++b) {
        if (!lea.le(c, arrow[static_cast<std::size_t>(a) * n + b])) continue;
        in_up[static_cast<std::size_t>(b)] = 1;
        v = v ? lea.meet(*v, b) : b;
      }
      if (!v) return std::nullopt;  // empty up-set cannot be principal
      for (Elem b = 0; b < n; ++b)
        if (static_cast<bool>(in_up[static_cast<std::size_t>(b)]) != lea.le(*v, b))
          return std::nullopt;
      star[static_cast<std::size_t>(a) * n + c] = *v;
    }
  return star;
}

Report audit_pt_implication(const Lea& lea, const std::vector<Elem>& arrow,
                            const std::vector<Elem>& delta, const std::vector<Elem>* star) {
  Report rep;
  rep.subject = "pt-implication";
  const int n = lea.size();
  const std::vector<std::string>& labels = lea.algebra().labels();
  auto arr = [&](Elem a, Elem b) {
    return arrow[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  };
  auto dcell = [&](Elem a, Elem b) {
    return delta[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  };

  Report tnorm = audit_partial_tnorm(labels, lea.order(), lea.one(), delta);
  rep.absorb(tnorm);

  Check& e_clause = rep.add("E");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (lea.le(a, b) != (arr(a, b) == lea.one())) e_clause.fail(named(labels, {{"a", a}, {"b", b}}));

  Check& mp = rep.add("MPpt");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem t = dcell(a, arr(a, b));
        if (t == kUndef) continue;
        ++tested;
        if (!lea.le(t, b)) mp.fail(named(labels, {{"a", a}, {"b", b}}));
      }
    mp.info = Json{{"tested", tested}};
  }

  Check& mt = rep.add("MTpt");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem t = dcell(lea.inv(b), arr(a, b));
        if (t == kUndef) continue;
        ++tested;
        if (!lea.le(t, lea.inv(a))) mt.fail(named(labels, {{"a", a}, {"b", b}}));
      }
    mt.info = Json{{"tested", tested}};
  }

  Check& ng = rep.add("NGpt");
  {
    std::size_t tested = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem t = dcell(a, lea.inv(b));
        if (t == kUndef) continue;
        ++tested;
        if (!lea.le(t, lea.inv(arr(a, b)))) ng.fail(named(labels, {{"a", a}, {"b", b}}));
      }
    ng.info = Json{{"tested", tested}};
  }

  bool r_pass = false;
  if (star) {
    Check& r_clause = rep.add("R");
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c)
        for (Elem b = 0; b < n; ++b) {
          Elem s = (*star)[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(c)];
          if (lea.le(s, b) != lea.le(c, arr(a, b)))
            r_clause.fail(named(labels, {{"a", a}, {"c", c}, {"b", b}}));
        }
    r_pass = r_clause.pass;
  }

  const bool weak_ok =
      tnorm.pass() && e_clause.pass && mp.pass && mt.pass && ng.pass;
  const bool full_ok = weak_ok && star && r_pass;

  Check& strict = rep.add("strict");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!lea.le(arr(a, b), lea.sasaki_arrow(a, b))) {
        Json w = named(labels, {{"a", a}, {"b", b}});
        w["arrow"] = labels[static_cast<std::size_t>(arr(a, b))];
        w["sasaki_arrow"] = labels[static_cast<std::size_t>(lea.sasaki_arrow(a, b))];
        strict.fail(std::move(w));
      }
  strict.info = Json{{"theorem_applies", full_ok}};

  Check& central = rep.add("central");
  {
    Centers cs = centers(lea);
    bool agreement = true;
    Json first_disagreement;
    for (Elem a : cs.center)
      for (Elem b : cs.center)
        if (arr(a, b) != lea.join(lea.inv(a), b)) {
          if (agreement) {
            first_disagreement = named(labels, {{"a", a}, {"b", b}});
            first_disagreement["arrow"] = labels[static_cast<std::size_t>(arr(a, b))];
            first_disagreement["ortho"] =
                labels[static_cast<std::size_t>(lea.join(lea.inv(a), b))];
          }
          agreement = false;
        }
    bool is_sasaki = true;
    for (Elem a = 0; a < n && is_sasaki; ++a)
      for (Elem b = 0; b < n && is_sasaki; ++b)
        if (arr(a, b) != lea.sasaki_arrow(a, b)) is_sasaki = false;
    if (agreement != is_sasaki) {
      Json w{{"central_agreement", agreement}, {"is_sasaki", is_sasaki}};
      if (!first_disagreement.is_null()) w["disagreement"] = first_disagreement;
      central.fail(std::move(w));
    }
    central.info = Json{{"central_agreement", agreement},
                        {"is_sasaki", is_sasaki},
                        {"central_count", cs.center.size()},
                        {"theorem_applies", full_ok}};
  }

  if (!tnorm.pass())
    rep.summary = "delta is not a partial t-norm";
  else if (!weak_ok)
    rep.summary = "not a weak pt-implication";
  else if (!star)
    rep.summary = "weak pt-implication (no companion supplied)";
  else
    rep.summary = r_pass ? "pt-implication (clause R holds)"
                         : "weak pt-implication (clause R fails)";
  return rep;
}

Report audit_pt_implication(const PartialAlgebra& alg, const std::vector<Elem>& arrow,
                            const std::vector<Elem>& delta, const std::vector<Elem>* star) {
  try {
    return audit_pt_implication(Lea::make(alg), arrow, delta, star);
  } catch (const Error& e) {
    if (e.code() == Errc::NotALEA)
      throw Error(Errc::NotWeakLEAContext,
                  "pt-implication audit needs the full effect-algebra structure", e.detail());
    throw;
  }
}

PtImplicationSearch search_pt_implications(const Lea& lea) {
  const int n = lea.size();
  if (n > 3)
    throw Error(Errc::UsageError,
                "exhaustive pt-implication search is capped at carriers of size 3",
                Json{{"size", n}});
  PtImplicationSearch out;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<Elem> arrow(cells, 0);

  // Odometer over all n^(n*n) total arrow tables.
  for (;;) {
    // Weak pt-implication for *some* partial t-norm reduces to three
    // pointwise conditions (realized by the units-only t-norm):
    //   (E)  a ≤ b iff a→b = 1,
    //        1→b ≤ b   (MPpt/NGpt at the unit),
    //        a→0 ≤ a′  (MTpt/NGpt at the unit).
    bool weak = true;
    for (Elem a = 0; a < n && weak; ++a)
      for (Elem b = 0; b < n && weak; ++b)
        if (lea.le(a, b) != (arrow[static_cast<std::size_t>(a) * n + b] == lea.one()))
          weak = false;
    for (Elem b = 0; b < n && weak; ++b)
      if (!lea.le(arrow[static_cast<std::size_t>(lea.one()) * n + b], b)) weak = false;
    for (Elem a = 0; a < n && weak; ++a)
      if (!lea.le(arrow[static_cast<std::size_t>(a) * n + lea.zero()], lea.inv(a))) weak = false;

    if (weak) {
      out.weak.push_back(arrow);
      if (auto star = residual_star(lea, arrow)) out.full.emplace_back(arrow, *star);
    }

    std::size_t i = 0;
    while (i < cells && arrow[i] == n - 1) arrow[i++] = 0;
    if (i == cells) break;
    ++arrow[i];
  }
  return out;
}

DeltaTable delta_from_json(const Json& j) {
  DeltaTable d;
  d.carrier = parse_carrier(j);
  d.delta = triples_to_table(d.carrier.labels, j, "delta", /*require_total=*/false);
  return d;
}

Json delta_to_json(const DeltaTable& d) {
  Json j;
  j["elements"] = d.carrier.labels;
  j["zero"] = d.carrier.labels[static_cast<std::size_t>(d.carrier.zero)];
  j["one"] = d.carrier.labels[static_cast<std::size_t>(d.carrier.one)];
  j["delta"] = table_to_triples(d.carrier.labels, d.delta);
  return j;
}

}  // namespace lel
