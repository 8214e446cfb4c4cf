#include <lel/algebra.hpp>

#include <algorithm>

#include <lel/error.hpp>

namespace lel {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::AmbiguousOrthosupplement: return "AmbiguousOrthosupplement";
    case Errc::NotBelow: return "NotBelow";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotALEA: return "NotALEA";
    case Errc::NotSharp: return "NotSharp";
    case Errc::NotWeakLEAContext: return "NotWeakLEAContext";
    case Errc::CwViolation: return "CwViolation";
    case Errc::UnboundAtom: return "UnboundAtom";
    case Errc::MissingMetavariable: return "MissingMetavariable";
    case Errc::UnknownRule: return "UnknownRule";
    case Errc::PremiseNotFound: return "PremiseNotFound";
    case Errc::ConclusionMismatch: return "ConclusionMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

PartialAlgebra::PartialAlgebra(std::vector<std::string> labels, Elem zero, Elem one)
    : labels_(std::move(labels)),
      zero_(zero),
      one_(one),
      table_(labels_.size() * labels_.size(), kUndef) {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    index_.emplace(labels_[i], static_cast<Elem>(i));
}

std::optional<Elem> PartialAlgebra::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void PartialAlgebra::set(Elem a, Elem b, Elem v) {
  table_[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)] = v;
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg, Json detail = Json()) {
  throw Error(Errc::ParseError, msg, std::move(detail));
}

std::string require_string(const Json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_string()) parse_fail(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

Carrier parse_carrier(const Json& j) {
  if (!j.is_object()) parse_fail("algebra file must be a JSON object");
  if (!j.contains("elements")) parse_fail("missing key \"elements\"");
  const Json& elems = j.at("elements");
  if (!elems.is_array() || elems.empty()) parse_fail("\"elements\" must be a non-empty array");

  Carrier c;
  c.labels.reserve(elems.size());
  for (const Json& e : elems) {
    if (!e.is_string() || e.get<std::string>().empty())
      parse_fail("every element label must be a non-empty string");
    c.labels.push_back(e.get<std::string>());
  }
  {
    auto sorted = c.labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) parse_fail("duplicate element label", Json{{"label", *dup}});
  }

  const std::string zero_label = require_string(j, "zero");
  const std::string one_label = require_string(j, "one");
  auto find = [&](const std::string& s) -> std::optional<Elem> {
    auto it = std::find(c.labels.begin(), c.labels.end(), s);
    if (it == c.labels.end()) return std::nullopt;
    return static_cast<Elem>(it - c.labels.begin());
  };
  auto zi = find(zero_label);
  if (!zi) parse_fail("\"zero\" is not an element", Json{{"label", zero_label}});
  auto oi = find(one_label);
  if (!oi) parse_fail("\"one\" is not an element", Json{{"label", one_label}});
  c.zero = *zi;
  c.one = *oi;
  if (c.labels.size() > 1 && c.zero == c.one)
    parse_fail("zero and one coincide on a carrier with more than one element");
  return c;
}

PartialAlgebra PartialAlgebra::from_json(const Json& j) {
  Carrier carrier = parse_carrier(j);
  PartialAlgebra alg(std::move(carrier.labels), carrier.zero, carrier.one);

  if (!j.contains("oplus")) parse_fail("missing key \"oplus\"");
  const Json& table = j.at("oplus");
  if (!table.is_array()) parse_fail("\"oplus\" must be an array of triples");

  const std::size_t n = alg.labels_.size();
  std::vector<std::uint8_t> seen(n * n, 0);
  for (const Json& triple : table) {
    if (!triple.is_array() || triple.size() != 3)
      parse_fail("every oplus entry must be a [a, b, value] triple");
    if (!triple[0].is_string() || !triple[1].is_string())
      parse_fail("oplus operands must be element labels");
    auto a = alg.index_of(triple[0].get<std::string>());
    if (!a) parse_fail("unknown element in oplus", Json{{"label", triple[0]}});
    auto b = alg.index_of(triple[1].get<std::string>());
    if (!b) parse_fail("unknown element in oplus", Json{{"label", triple[1]}});

    std::size_t cell = static_cast<std::size_t>(*a) * n + static_cast<std::size_t>(*b);
    if (seen[cell])
      parse_fail("pair listed twice in oplus",
                 Json{{"a", alg.label(*a)}, {"b", alg.label(*b)}});
    seen[cell] = 1;

    if (triple[2].is_null()) continue;  // explicit undefined marker
    if (!triple[2].is_string()) parse_fail("oplus value must be an element label or null");
    auto v = alg.index_of(triple[2].get<std::string>());
    if (!v) parse_fail("unknown element in oplus value", Json{{"label", triple[2]}});
    alg.set(*a, *b, *v);
  }
  // Undefined entries must be spelled out as null; a missing pair is a
  // truncated file, not an undefined sum.
  for (std::size_t cell = 0; cell < n * n; ++cell)
    if (!seen[cell])
      parse_fail("\"oplus\" must list every pair of elements (use null for undefined sums)",
                 Json{{"a", alg.label(static_cast<Elem>(cell / n))},
                      {"b", alg.label(static_cast<Elem>(cell % n))}});
  return alg;
}

Json PartialAlgebra::to_json() const {
  Json j;
  j["elements"] = labels_;
  j["zero"] = label(zero_);
  j["one"] = label(one_);
  Json triples = Json::array();
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      triples.push_back(Json::array(
          {label(a), label(b), defined(a, b) ? Json(label(op(a, b))) : Json()}));
  j["oplus"] = std::move(triples);
  return j;
}

Json table_to_triples(const std::vector<std::string>& labels, const std::vector<Elem>& table) {
  Json triples = Json::array();
  const std::size_t n = labels.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = table[a * n + b];
      triples.push_back(Json::array(
          {labels[a], labels[b],
           v == kUndef ? Json() : Json(labels[static_cast<std::size_t>(v)])}));
    }
  return triples;
}

std::vector<Elem> triples_to_table(const std::vector<std::string>& labels, const Json& file,
                                   const std::string& key, bool require_total) {
  const std::size_t n = labels.size();
  auto index_of = [&](const Json& v) -> Elem {
    if (!v.is_string()) parse_fail("operand in \"" + key + "\" must be an element label");
    auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
    if (it == labels.end())
      parse_fail("unknown element in \"" + key + "\"", Json{{"label", v}});
    return static_cast<Elem>(it - labels.begin());
  };

  if (!file.contains(key)) parse_fail("missing key \"" + key + "\"");
  const Json& table = file.at(key);
  if (!table.is_array()) parse_fail("\"" + key + "\" must be an array of triples");

  std::vector<Elem> out(n * n, kUndef);
  std::vector<std::uint8_t> seen(n * n, 0);
  for (const Json& triple : table) {
    if (!triple.is_array() || triple.size() != 3)
      parse_fail("every \"" + key + "\" entry must be a [a, b, value] triple");
    Elem a = index_of(triple[0]);
    Elem b = index_of(triple[1]);
    std::size_t cell = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
    if (seen[cell])
      parse_fail("pair listed twice in \"" + key + "\"",
                 Json{{"a", labels[static_cast<std::size_t>(a)]},
                      {"b", labels[static_cast<std::size_t>(b)]}});
    seen[cell] = 1;
    if (triple[2].is_null()) {
      if (require_total)
        parse_fail("\"" + key + "\" is a total operation; null entries are not allowed",
                   Json{{"a", labels[static_cast<std::size_t>(a)]},
                        {"b", labels[static_cast<std::size_t>(b)]}});
      continue;
    }
    out[cell] = index_of(triple[2]);
  }
  // Whether or not the operation is total, a pair absent from the file is a
  // truncated table, not an undefined entry; undefined is spelled null.
  for (std::size_t cell = 0; cell < n * n; ++cell)
    if (!seen[cell])
      parse_fail("\"" + key + "\" must list every pair of elements",
                 Json{{"a", labels[cell / n]}, {"b", labels[cell % n]}});
  return out;
}

}  // namespace lel
