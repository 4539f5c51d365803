#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "et/encoding.hpp"

using namespace et;

TEST_CASE("pairing closed form and basic values") {
  CHECK(pair_nat(Natural(0), Natural(0)) == 1);
  CHECK(pair_nat(Natural(0), Natural(1)) == 2);
  CHECK(pair_nat(Natural(1), Natural(1)) == 5);
  for (int n = 0; n <= 50; ++n)
    for (int p = 0; p <= 50; ++p) {
      Natural expected = Natural(n + p) * Natural(n + p + 1) / 2 + n + 1;
      CHECK(pair_nat(Natural(n), Natural(p)) == expected);
    }
}

TEST_CASE("unpair inverts pair and rejects zero") {
  auto [a, b] = unpair_nat(Natural(1));
  CHECK(a == 0);
  CHECK(b == 0);
  auto [c, d] = unpair_nat(Natural(5));
  CHECK(c == 1);
  CHECK(d == 1);
  CHECK_THROWS_AS(unpair_nat(Natural(0)), DecodeError);
  for (int n = 0; n <= 200; ++n)
    for (int p = 0; p <= 200; p += 7) {
      auto [x, y] = unpair_nat(pair_nat(Natural(n), Natural(p)));
      CHECK(x == n);
      CHECK(y == p);
    }
}

TEST_CASE("pairing is injective on a grid") {
  std::set<Natural> seen;
  for (int n = 0; n <= 80; ++n)
    for (int p = 0; p <= 80; ++p) seen.insert(pair_nat(Natural(n), Natural(p)));
  CHECK(seen.size() == 81u * 81u);
  CHECK(*seen.begin() >= 1);
}

namespace {
LabelTable nat_table() {
  LabelTable t;
  t.add("0", 0);
  t.add("S", 1);
  return t;
}
}  // namespace

TEST_CASE("tree encoding matches hand evaluation") {
  LabelTable single;
  single.add("0", 0);
  CHECK(encode_tree(single, TermTree::leaf(0)).to_natural() == 1);

  LabelTable t = nat_table();
  TermTree zero = TermTree::leaf(0);
  TermTree one = TermTree::node(1, {zero});
  CHECK(encode_tree(t, zero).to_natural() == 1);
  CHECK(encode_tree(t, one).to_natural() == 12);  // pair(1, pair(1, 0)) = pair(1, 3)
  CHECK(decode_tree(t, Index::lit(12)) == one);
  CHECK(decode_tree(t, Index::lit(1)) == zero);
}

TEST_CASE("decode failures identify the problem") {
  LabelTable t = nat_table();
  CHECK_THROWS_AS(decode_tree(t, Index::lit(0)), DecodeError);
  // pair(7, 0): symbol id 7 is not in the table
  CHECK_THROWS_AS(decode_tree(t, Index::pair(Index::lit(7), Index::lit(0))), DecodeError);
  // S with no child: pair(1, 0)
  CHECK_THROWS_AS(decode_tree(t, Index::pair(Index::lit(1), Index::lit(0))), DecodeError);
  // 0 with a trailing child: pair(0, pair(enc(0), 0))
  Index junk = Index::pair(Index::lit(0), Index::pair(Index::lit(1), Index::lit(0)));
  CHECK_THROWS_AS(decode_tree(t, junk), DecodeError);
}

namespace {
TermTree random_tree(std::mt19937_64& rng, const LabelTable& table, int max_depth) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(table.size() - 1));
  std::uint32_t label = pick(rng);
  if (max_depth <= 1) {
    while (table.arity(label) != 0) label = pick(rng);
  }
  TermTree tree;
  tree.label = label;
  for (std::uint32_t k = 0; k < table.arity(label); ++k)
    tree.children.push_back(random_tree(rng, table, max_depth - 1));
  return tree;
}
}  // namespace

TEST_CASE("encode/decode round-trip on random trees over five symbols") {
  LabelTable t;
  t.add("a", 0);
  t.add("b", 0);
  t.add("f", 1);
  t.add("g", 2);
  t.add("h", 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    TermTree tree = random_tree(rng, t, 6);
    CHECK(decode_tree(t, encode_tree(t, tree)) == tree);
  }
}

TEST_CASE("encoding is label-table independent up to translation") {
  LabelTable a;
  a.add("0", 0);
  a.add("S", 1);
  a.add("f", 2);
  LabelTable b;  // same symbols, permuted ids
  b.add("f", 2);
  b.add("S", 1);
  b.add("0", 0);
  REQUIRE(a.same_symbols(b));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    TermTree tree = random_tree(rng, a, 5);
    // translate ids through names
    std::function<TermTree(const TermTree&)> rename = [&](const TermTree& node) {
      TermTree out;
      out.label = b.id_of(a.name(node.label));
      for (const auto& child : node.children) out.children.push_back(rename(child));
      return out;
    };
    TermTree renamed = rename(tree);
    // decode under a then re-encode under b = direct encoding under b
    TermTree decoded = decode_tree(a, encode_tree(a, tree));
    CHECK(encode_tree(b, rename(decoded)) == encode_tree(b, renamed));
  }
}

TEST_CASE("term text parses and prints") {
  LabelTable t = nat_table();
  TermTree tree = parse_term_text(t, "S(S(0))");
  CHECK(term_text(t, tree) == "S(S(0))");
  CHECK(encode_tree(t, tree).to_natural() == 4280);
  CHECK(parse_term_text(t, "S^2(0)") == tree);
  CHECK_THROWS_AS(parse_term_text(t, "S(S(0)"), ParseError);
  CHECK_THROWS_AS(parse_term_text(t, "Q(0)"), Error);

  LabelTable ops;
  ops.add("x", 0);
  ops.add("y", 0);
  ops.add("plus", 2);
  TermTree sum = parse_term_text(ops, "plus(x,y)");
  CHECK(term_text(ops, sum) == "plus(x,y)");
  CHECK(decode_tree(ops, encode_tree(ops, sum)) == sum);
}

TEST_CASE("symbolic indices: literal, pair and tower forms agree") {
  // Explicitly wrapped towers and lazy towers denote the same naturals.
  for (std::uint64_t h : {0ull, 1ull, 2ull, 5ull, 64ull, 65ull, 70ull, 200ull}) {
    Index lazy = Index::numeral(1, 0, Index::lit(h));
    Index wrapped = Index::pair(Index::lit(0), Index::lit(0));
    for (std::uint64_t i = 0; i < h; ++i)
      wrapped = Index::pair(Index::lit(1), Index::pair(wrapped, Index::lit(0)));
    CHECK(lazy == wrapped);
    if (h > 0) CHECK(lazy != Index::numeral(1, 0, Index::lit(h - 1)));
  }
  // Small towers materialize to the expected values.
  CHECK(Index::numeral(1, 0, Index::lit(0)).to_natural() == 1);
  CHECK(Index::numeral(1, 0, Index::lit(1)).to_natural() == 12);
  CHECK(Index::numeral(1, 0, Index::lit(2)).to_natural() == 4280);
}

TEST_CASE("symbolic increment and decrement match arithmetic") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> small(0, 5000);
  for (int i = 0; i < 300; ++i) {
    Natural n(small(rng));
    Natural p(small(rng));
    Index x = Index::pair(Index::lit(n), Index::lit(p));
    CHECK(x.inc().to_natural() == pair_nat(n, p) + 1);
    CHECK(x.dec().to_natural() == pair_nat(n, p) - 1);
  }
  // Deep symbolic: inc/dec round-trip without materializing.
  Index deep = Index::numeral(1, 0, Index::lit(500));
  Index deep_pair = Index::pair(deep, deep);
  CHECK(deep_pair.inc().dec() == deep_pair);
  CHECK(deep_pair.dec().inc() == deep_pair);
}

TEST_CASE("unpair on symbolic forms") {
  Index big = Index::numeral(1, 0, Index::lit(100));
  auto [head, tail] = big.unpair();
  CHECK(head == Index::lit(1));
  auto [inner, zero] = tail.unpair();
  CHECK(zero.is_zero());
  CHECK(inner == Index::numeral(1, 0, Index::lit(99)));
  CHECK(Index::pair(head, tail) == big);
}
