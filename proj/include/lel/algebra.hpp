#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <lel/error.hpp>

namespace lel {

// Elements are dense indices into the label list; the label order of the
// source file fixes the index order, so witnesses are reproducible.
using Elem = int;
inline constexpr Elem kUndef = -1;

// A finite carrier with a partial binary operation and designated 0 and 1.
// No laws are assumed here; audits decide what the table actually is.
class PartialAlgebra {
 public:
  PartialAlgebra() = default;
  PartialAlgebra(std::vector<std::string> labels, Elem zero, Elem one);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::optional<Elem> index_of(std::string_view label) const;

  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  bool defined(Elem a, Elem b) const { return at(a, b) != kUndef; }
  Elem op(Elem a, Elem b) const { return at(a, b); }
  void set(Elem a, Elem b, Elem v);

  // File format: {"elements":[...],"zero":"0","one":"1",
  //               "oplus":[["a","b","1"],...]}.
  // Triples list the defined entries; a triple whose value is null is an
  // explicit undefined marker.  Listing the same pair twice is an error even
  // when the values agree.
  static PartialAlgebra from_json(const Json& j);
  Json to_json() const;

  bool same_table(const PartialAlgebra& other) const {
    return labels_ == other.labels_ && zero_ == other.zero_ && one_ == other.one_ &&
           table_ == other.table_;
  }

 private:
  Elem at(Elem a, Elem b) const {
    return table_[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)];
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> index_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<Elem> table_;
};

// The "elements"/"zero"/"one" header shared by every table file.
struct Carrier {
  std::vector<std::string> labels;
  Elem zero = 0;
  Elem one = 0;
};
Carrier parse_carrier(const Json& j);

// Binary tables ("dot", "arrow", "delta") share the algebra file layout.
// Helpers used by the CI-structure and t-norm readers: triples list all
// pairs in row-major order, kUndef serialized as null.
Json table_to_triples(const std::vector<std::string>& labels, const std::vector<Elem>& table);

// Reads a table under `key` into an n*n vector.  Every pair may appear at
// most once; unlisted pairs are kUndef.  With require_total, unlisted pairs
// and null values are parse errors (the operation must be everywhere
// defined).
std::vector<Elem> triples_to_table(const std::vector<std::string>& labels, const Json& file,
                                   const std::string& key, bool require_total);

}  // namespace lel
