#include <lel/eval.hpp>

#include <cctype>
#include <filesystem>
#include <unordered_map>

#include <lel/io.hpp>
#include <lel/library.hpp>

namespace lel {

namespace {

bool valid_atom_name(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

PartialAlgebra resolve_algebra(const Json& ref, const std::string& base_dir) {
  if (ref.is_object()) return PartialAlgebra::from_json(ref);
  if (!ref.is_string())
    throw Error(Errc::ParseError, "\"algebra\" must be a name, a path or an inline object");
  const std::string name = ref.get<std::string>();
  if (const LibraryEntry* entry = find_library(name)) return entry->alg;
  namespace fs = std::filesystem;
  fs::path relative = fs::path(base_dir) / name;
  if (!base_dir.empty() && fs::exists(relative))
    return PartialAlgebra::from_json(read_json_file(relative.string()));
  if (fs::exists(name)) return PartialAlgebra::from_json(read_json_file(name));
  throw Error(Errc::ParseError, "algebra is neither a library name nor a readable file",
              Json{{"algebra", name}});
}

}  // namespace

Model model_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) throw Error(Errc::ParseError, "model file must be a JSON object");
  if (!j.contains("algebra")) throw Error(Errc::ParseError, "missing key \"algebra\"");
  if (!j.contains("valuation") || !j.at("valuation").is_object())
    throw Error(Errc::ParseError, "missing or non-object key \"valuation\"");

  Model m;
  PartialAlgebra alg = resolve_algebra(j.at("algebra"), base_dir);
  m.lea = std::make_shared<const Lea>(Lea::make(alg));
  for (const auto& [atom, value] : j.at("valuation").items()) {
    if (!valid_atom_name(atom))
      throw Error(Errc::ParseError, "valuation key is not a valid atom name",
                  Json{{"atom", atom}});
    if (!value.is_string())
      throw Error(Errc::ParseError, "valuation values must be element labels",
                  Json{{"atom", atom}});
    auto e = alg.index_of(value.get<std::string>());
    if (!e)
      throw Error(Errc::ParseError, "valuation value is not an element",
                  Json{{"atom", atom}, {"value", value}});
    m.valuation.emplace(atom, *e);
  }
  return m;
}

Model load_model(const std::string& path) {
  return model_from_json(read_json_file(path),
                         std::filesystem::path(path).parent_path().string());
}

namespace {

Elem eval_rec(const Formula* f, const Model& m,
              std::unordered_map<const Formula*, Elem>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  const Lea& lea = *m.lea;
  Elem v = 0;
  switch (f->conn) {
    case Conn::Atom: {
      auto at = m.valuation.find(f->atom);
      if (at == m.valuation.end())
        throw Error(Errc::UnboundAtom, "atom has no value in this model",
                    Json{{"atom", f->atom}});
      v = at->second;
      break;
    }
    case Conn::Bottom: v = lea.zero(); break;
    case Conn::Top: v = lea.one(); break;
    case Conn::Neg: v = lea.inv(eval_rec(f->lhs.get(), m, memo)); break;
    case Conn::Implies:
      v = lea.sasaki_arrow(eval_rec(f->lhs.get(), m, memo), eval_rec(f->rhs.get(), m, memo));
      break;
    case Conn::SConj:
      v = lea.sasaki_product(eval_rec(f->lhs.get(), m, memo), eval_rec(f->rhs.get(), m, memo));
      break;
    case Conn::SDisj:
      // V(φ∨·ψ) = (V(φ)′ ⊗ V(ψ)′)′
      v = lea.inv(lea.sasaki_product(lea.inv(eval_rec(f->lhs.get(), m, memo)),
                                     lea.inv(eval_rec(f->rhs.get(), m, memo))));
      break;
    case Conn::Meet:
      v = lea.meet(eval_rec(f->lhs.get(), m, memo), eval_rec(f->rhs.get(), m, memo));
      break;
    case Conn::Join:
      v = lea.join(eval_rec(f->lhs.get(), m, memo), eval_rec(f->rhs.get(), m, memo));
      break;
  }
  memo.emplace(f, v);
  return v;
}

}  // namespace

Elem eval(const FormulaPtr& f, const Model& m) {
  std::unordered_map<const Formula*, Elem> memo;
  return eval_rec(f.get(), m, memo);
}

bool is_valid(const FormulaPtr& f, const Model& m) { return eval(f, m) == m.lea->one(); }

}  // namespace lel
