#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "et/index.hpp"

namespace et {

/// A finite table of tree labels. Each symbol has a fixed arity; the numeric
/// id is its position in the table. Tables are plain values so that several
/// structures with different tables can coexist.
class LabelTable {
 public:
  LabelTable() = default;

  /// Adds a symbol and returns its id.
  std::uint32_t add(std::string name, std::uint32_t arity);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  std::uint32_t arity(std::uint32_t id) const { return arities_.at(id); }
  std::optional<std::uint32_t> find(const std::string& name) const;
  std::uint32_t id_of(const std::string& name) const;

  bool same_symbols(const LabelTable& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> arities_;
};

/// A finite labeled tree; children count always equals the label's arity.
struct TermTree {
  std::uint32_t label = 0;
  std::vector<TermTree> children;

  static TermTree leaf(std::uint32_t label) { return TermTree{label, {}}; }
  static TermTree node(std::uint32_t label, std::vector<TermTree> kids) {
    return TermTree{label, std::move(kids)};
  }

  bool operator==(const TermTree& other) const = default;
};

/// Index of the tree t = f(t1, ..., tl):
///   pair(id(f), pair(idx(t1), ... pair(idx(tl), 0) ...)),
/// the semicolon chain right-associated; a leaf encodes as pair(id, 0).
Index encode_tree(const LabelTable& table, const TermTree& tree);

/// Inverse of encode_tree on its image. Reports the failing tree position on
/// malformed input (unknown id, arity mismatch, trailing entries).
TermTree decode_tree(const LabelTable& table, const Index& index);

/// Textual syntax: `S(S(0))`, `plus(x,y)`. Symbols are identifiers made of
/// alphanumerics, '_', '+', '-', '*', '/'; children parenthesized and
/// comma-separated. Also accepts the tower shorthand `S^k(0)`.
TermTree parse_term_text(const LabelTable& table, const std::string& text);
std::string term_text(const LabelTable& table, const TermTree& tree);

}  // namespace et
