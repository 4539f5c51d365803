#include "et/encoding.hpp"

#include <cctype>
#include <sstream>

namespace et {

std::uint32_t LabelTable::add(std::string name, std::uint32_t arity) {
  if (find(name)) throw Error("duplicate label '" + name + "'");
  names_.push_back(std::move(name));
  arities_.push_back(arity);
  return static_cast<std::uint32_t>(names_.size() - 1);
}

std::optional<std::uint32_t> LabelTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::uint32_t LabelTable::id_of(const std::string& name) const {
  if (auto id = find(name)) return *id;
  throw Error("unknown label '" + name + "'");
}

bool LabelTable::same_symbols(const LabelTable& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    auto id = other.find(names_[i]);
    if (!id || other.arity(*id) != arities_[i]) return false;
  }
  return true;
}

Index encode_tree(const LabelTable& table, const TermTree& tree) {
  if (tree.label >= table.size())
    throw Error("label id " + std::to_string(tree.label) + " not in table");
  if (tree.children.size() != table.arity(tree.label))
    throw Error("arity mismatch for label '" + table.name(tree.label) + "'");
  Index tail = Index::lit(0);
  for (auto it = tree.children.rbegin(); it != tree.children.rend(); ++it)
    tail = Index::pair(encode_tree(table, *it), tail);
  return Index::pair(Index::lit(tree.label), tail);
}

namespace {

TermTree decode_at(const LabelTable& table, const Index& index, const std::string& pos) {
  std::pair<Index, Index> head;
  try {
    head = index.unpair();
  } catch (const DecodeError&) {
    throw DecodeError("at " + pos + ": index 0 is not a tree code");
  }
  if (!head.first.is_lit() || head.first.lit_value() >= table.size())
    throw DecodeError("at " + pos + ": unknown symbol id");
  auto label = head.first.lit_value().convert_to<std::uint32_t>();
  std::uint32_t arity = table.arity(label);
  TermTree tree;
  tree.label = label;
  Index rest = head.second;
  for (std::uint32_t k = 0; k < arity; ++k) {
    if (rest.is_zero())
      throw DecodeError("at " + pos + ": '" + table.name(label) + "' expects " +
                        std::to_string(arity) + " children, found " + std::to_string(k));
    auto [child, tail] = rest.unpair();
    tree.children.push_back(decode_at(table, child, pos + "." + std::to_string(k)));
    rest = tail;
  }
  if (!rest.is_zero())
    throw DecodeError("at " + pos + ": trailing entries after " + std::to_string(arity) +
                      " children of '" + table.name(label) + "'");
  return tree;
}

struct TermParser {
  const LabelTable& table;
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  static bool symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-' ||
           c == '*' || c == '/' || c == '.';
  }

  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && symbol_char(text[pos])) ++pos;
    if (start == pos) throw ParseError("expected a symbol at offset " + std::to_string(pos));
    return text.substr(start, pos - start);
  }

  TermTree term() {
    std::string name = symbol();
    skip_ws();
    // Tower shorthand S^k(0).
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::string count = symbol();
      std::uint64_t n = 0;
      try {
        n = std::stoull(count);
      } catch (const std::exception&) {
        throw ParseError("bad tower height '" + count + "'");
      }
      expect('(');
      TermTree inner = term();
      expect(')');
      std::uint32_t id = table.id_of(name);
      if (table.arity(id) != 1) throw ParseError("'" + name + "' is not unary");
      TermTree t = inner;
      for (std::uint64_t i = 0; i < n; ++i) t = TermTree::node(id, {t});
      return t;
    }
    std::uint32_t id = table.id_of(name);
    std::uint32_t arity = table.arity(id);
    if (arity == 0) return TermTree::leaf(id);
    expect('(');
    std::vector<TermTree> kids;
    kids.push_back(term());
    for (std::uint32_t k = 1; k < arity; ++k) {
      expect(',');
      kids.push_back(term());
    }
    expect(')');
    return TermTree::node(id, std::move(kids));
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  }
};

}  // namespace

TermTree decode_tree(const LabelTable& table, const Index& index) {
  return decode_at(table, index, "root");
}

TermTree parse_term_text(const LabelTable& table, const std::string& text) {
  TermParser parser{table, text};
  TermTree tree = parser.term();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw ParseError("trailing input at offset " + std::to_string(parser.pos));
  return tree;
}

std::string term_text(const LabelTable& table, const TermTree& tree) {
  std::ostringstream os;
  os << table.name(tree.label);
  if (!tree.children.empty()) {
    os << '(';
    for (std::size_t i = 0; i < tree.children.size(); ++i) {
      if (i) os << ',';
      os << term_text(table, tree.children[i]);
    }
    os << ')';
  }
  return os.str();
}

}  // namespace et
