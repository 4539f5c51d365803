#include "et/index.hpp"

#include <algorithm>
#include <sstream>

namespace et {

namespace {
// pair() computes the value when both components are this small.
constexpr std::size_t kComputeBits = 256;
// Computed pairs stay literal up to this size. Every Pair node therefore
// denotes a value above 2^kMaterializeBits, which keeps the literal-vs-pair
// fast path in eq() sound.
constexpr std::size_t kMaterializeBits = 509;
// numeral() expands towers up to this height into plain pairing form.
constexpr std::uint64_t kNumExpandMax = 64;
// Guard against runaway recursion on pathological mixed representations.
constexpr int kMaxEqDepth = 200000;
}  // namespace

Natural pair_nat(const Natural& n, const Natural& p) {
  Natural w = n + p;
  return w * (w + 1) / 2 + n + 1;
}

std::pair<Natural, Natural> unpair_nat(const Natural& m) {
  if (m.is_zero()) throw DecodeError("0 is not in the pairing image");
  Natural t = m - 1;
  Natural w = triangle_root(t);
  Natural n = t - w * (w + 1) / 2;
  return {n, w - n};
}

Index::NodePtr Index::lit_node(Natural n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lit;
  node->lit = std::move(n);
  return node;
}

Index Index::lit(Natural n) {
  if (n < 0) throw Error("negative value is not a natural");
  return Index(lit_node(std::move(n)));
}

const Natural& Index::lit_value() const { return node_->lit; }
Index Index::pair_first() const { return Index(node_->a); }
Index Index::pair_second() const { return Index(node_->b); }
std::uint32_t Index::num_s() const { return node_->s; }
std::uint32_t Index::num_z() const { return node_->z; }
Index Index::num_height() const { return Index(node_->h); }

Index Index::pair(const Index& a, const Index& b) {
  if (a.is_lit() && b.is_lit() &&
      bit_size(a.lit_value()) < kComputeBits && bit_size(b.lit_value()) < kComputeBits) {
    Natural v = pair_nat(a.lit_value(), b.lit_value());
    if (bit_size(v) <= kMaterializeBits) return lit(std::move(v));
  }
  // Recognize one more successor wrapped around a lazy tower.
  if (a.is_lit() && a.lit_value() <= UINT32_MAX && b.kind() == Kind::Pair) {
    Index inner = b.pair_first();
    if (inner.kind() == Kind::Num && b.pair_second().is_zero() &&
        Natural(inner.num_s()) == a.lit_value()) {
      auto node = std::make_shared<Node>();
      node->kind = Kind::Num;
      node->s = inner.num_s();
      node->z = inner.num_z();
      node->h = inner.num_height().inc().node_;
      return Index(node);
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->a = a.node_;
  node->b = b.node_;
  return Index(node);
}

Index Index::numeral(std::uint32_t s_label, std::uint32_t z_label, const Index& h) {
  if (h.is_lit() && h.lit_value() <= kNumExpandMax) {
    Index x = pair(lit(z_label), lit(0));
    std::uint64_t n = h.lit_value().convert_to<std::uint64_t>();
    for (std::uint64_t i = 0; i < n; ++i) x = pair(lit(s_label), pair(x, lit(0)));
    return x;
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Num;
  node->s = s_label;
  node->z = z_label;
  node->h = h.node_;
  return Index(node);
}

// One unfolding step: Num(s, z, h) = pair(s, pair(Num(s, z, h-1), 0)).
// Only called with h >= 1 (heights <= kNumExpandMax never reach a Num node).
Index Index::expand_num_once() const {
  Index tail = pair(numeral(node_->s, node_->z, Index(node_->h).dec()), lit(0));
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->a = lit_node(Natural(node_->s));
  node->b = tail.node_;
  return Index(node);
}

bool Index::eq(const Index& a, const Index& b, int depth) {
  if (depth > kMaxEqDepth) throw Error("index equality recursion too deep");
  if (a.node_ == b.node_) return true;
  Kind ka = a.kind(), kb = b.kind();
  if (ka == Kind::Lit && kb == Kind::Lit) return a.lit_value() == b.lit_value();
  if (ka == Kind::Num && kb == Kind::Num) {
    if (a.num_s() == b.num_s() && a.num_z() == b.num_z())
      return eq(a.num_height(), b.num_height(), depth + 1);
    return eq(a.expand_num_once(), b.expand_num_once(), depth + 1);
  }
  if (ka == Kind::Pair && kb == Kind::Pair) {
    return eq(a.pair_first(), b.pair_first(), depth + 1) &&
           eq(a.pair_second(), b.pair_second(), depth + 1);
  }
  // Mixed kinds.
  if (ka == Kind::Num) return eq(a.expand_num_once(), b, depth + 1);
  if (kb == Kind::Num) return eq(a, b.expand_num_once(), depth + 1);
  // Lit vs Pair: every Pair node denotes a value above 2^kMaterializeBits,
  // so a smaller literal can never match. Oversized literals (built directly
  // by a caller) are decomposed arithmetically.
  const Index& l = (ka == Kind::Lit) ? a : b;
  const Index& p = (ka == Kind::Lit) ? b : a;
  if (bit_size(l.lit_value()) <= kMaterializeBits) return false;
  auto [n, q] = unpair_nat(l.lit_value());
  return eq(lit(std::move(n)), p.pair_first(), depth + 1) &&
         eq(lit(std::move(q)), p.pair_second(), depth + 1);
}

std::pair<Index, Index> Index::unpair() const {
  switch (kind()) {
    case Kind::Lit: {
      auto [n, p] = unpair_nat(lit_value());
      return {lit(std::move(n)), lit(std::move(p))};
    }
    case Kind::Pair:
      return {pair_first(), pair_second()};
    case Kind::Num: {
      Index e = expand_num_once();
      return {e.pair_first(), e.pair_second()};
    }
  }
  throw Error("unreachable");
}

Index Index::inc() const {
  switch (kind()) {
    case Kind::Lit:
      return lit(lit_value() + 1);
    case Kind::Pair: {
      // pair(n, p) + 1 = pair(n+1, p-1) for p >= 1, pair(n, 0) + 1 = pair(0, n+1).
      Index a = pair_first(), b = pair_second();
      if (b.is_zero()) return pair(lit(0), a.inc());
      return pair(a.inc(), b.dec());
    }
    case Kind::Num:
      return expand_num_once().inc();
  }
  throw Error("unreachable");
}

Index Index::dec() const {
  switch (kind()) {
    case Kind::Lit: {
      if (lit_value().is_zero()) throw Error("decrement of zero");
      return lit(lit_value() - 1);
    }
    case Kind::Pair: {
      // pair(n, p) - 1 = pair(n-1, p+1) for n >= 1, pair(0, p) - 1 = pair(p-1, 0).
      Index a = pair_first(), b = pair_second();
      if (a.is_zero()) return pair(b.dec(), lit(0));
      return pair(a.dec(), b.inc());
    }
    case Kind::Num:
      return expand_num_once().dec();
  }
  throw Error("unreachable");
}

Natural Index::to_natural(std::size_t max_bits) const {
  switch (kind()) {
    case Kind::Lit:
      return lit_value();
    case Kind::Pair: {
      Natural a = pair_first().to_natural(max_bits);
      Natural b = pair_second().to_natural(max_bits);
      if (2 * std::max(bit_size(a), bit_size(b)) + 2 > max_bits)
        throw Error("index too large to materialize");
      return pair_nat(a, b);
    }
    case Kind::Num: {
      Index h = num_height();
      if (!h.is_lit()) throw Error("index too large to materialize");
      Natural n = pair_nat(Natural(num_z()), Natural(0));
      Natural steps = h.lit_value();
      for (Natural i = 0; i < steps; ++i) {
        n = pair_nat(Natural(num_s()), pair_nat(n, Natural(0)));
        if (bit_size(n) > max_bits) throw Error("index too large to materialize");
      }
      return n;
    }
  }
  throw Error("unreachable");
}

int Index::rep_compare(const Index& a, const Index& b) {
  if (a.node_ == b.node_) return 0;
  int ta = static_cast<int>(a.kind()), tb = static_cast<int>(b.kind());
  if (ta != tb) return ta < tb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Lit:
      return a.lit_value() == b.lit_value() ? 0 : (a.lit_value() < b.lit_value() ? -1 : 1);
    case Kind::Pair: {
      int c = rep_compare(a.pair_first(), b.pair_first());
      return c ? c : rep_compare(a.pair_second(), b.pair_second());
    }
    case Kind::Num: {
      if (a.num_s() != b.num_s()) return a.num_s() < b.num_s() ? -1 : 1;
      if (a.num_z() != b.num_z()) return a.num_z() < b.num_z() ? -1 : 1;
      return rep_compare(a.num_height(), b.num_height());
    }
  }
  return 0;
}

std::string Index::str() const {
  switch (kind()) {
    case Kind::Lit:
      return lit_value().str();
    case Kind::Pair:
      return "(" + pair_first().str() + ";" + pair_second().str() + ")";
    case Kind::Num: {
      std::ostringstream os;
      os << "tower[" << num_s() << "," << num_z() << "]^" << num_height().str();
      return os.str();
    }
  }
  return {};
}

}  // namespace et
