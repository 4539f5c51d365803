#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "et/error.hpp"
#include "et/natural.hpp"

namespace et {

/// The pairing function of the tree encoding: (n, p) -> (n+p)(n+p+1)/2 + n + 1.
/// Total, injective, image = positive naturals.
Natural pair_nat(const Natural& n, const Natural& p);

/// Inverse of pair_nat. Throws DecodeError for 0 (not in the image).
std::pair<Natural, Natural> unpair_nat(const Natural& m);

/// An exact natural number kept in pairing form.
///
/// Term indices grow by roughly a factor of four in bit size per tree level,
/// so the raw value of even a modest term tower cannot be written out.
/// An Index is one of
///   - Lit(n)        a materialized value (small),
///   - Pair(a, b)    pair_nat(a, b), unexpanded,
///   - Num(s, z, h)  the index of the unary tower S^h(0) over label ids s, z,
///                   with h itself an Index.
/// Every Index denotes a definite natural; equality, pairing, unpairing and
/// +1/-1 are exact and never require materialization.
class Index {
 public:
  enum class Kind { Lit, Pair, Num };

  Index() : node_(lit_node(Natural(0))) {}

  static Index lit(Natural n);
  static Index lit(std::uint64_t n) { return lit(Natural(n)); }

  /// Smart constructor for pair(a, b); materializes small results.
  static Index pair(const Index& a, const Index& b);

  /// Index of the unary tower S^h(0): Num(s, z, h) with small heights expanded
  /// to pairing form so both construction routes yield one representation.
  static Index numeral(std::uint32_t s_label, std::uint32_t z_label, const Index& h);

  Kind kind() const { return node_->kind; }
  bool is_lit() const { return kind() == Kind::Lit; }
  bool is_zero() const { return is_lit() && node_->lit.is_zero(); }

  const Natural& lit_value() const;
  Index pair_first() const;
  Index pair_second() const;
  std::uint32_t num_s() const;
  std::uint32_t num_z() const;
  Index num_height() const;

  /// Exact equality of denoted values (handles mixed representations).
  friend bool operator==(const Index& a, const Index& b) { return eq(a, b, 0); }
  friend bool operator!=(const Index& a, const Index& b) { return !(a == b); }

  /// Decomposes into the unique (a, b) with *this = pair(a, b).
  /// Throws DecodeError if the value is 0.
  std::pair<Index, Index> unpair() const;

  /// The value plus / minus one, still in pairing form.
  Index inc() const;
  Index dec() const;

  /// Materializes the value. Throws Error if it exceeds max_bits bits.
  Natural to_natural(std::size_t max_bits = 1u << 20) const;

  /// Representation order for use as a container key. Consistent with
  /// equality only between identical representations; not the numeric order.
  static int rep_compare(const Index& a, const Index& b);

  /// Identity of the underlying node; stable while any Index references it.
  const void* node_id() const { return node_.get(); }

  std::string str() const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind = Kind::Lit;
    Natural lit;           // Lit
    NodePtr a, b;          // Pair
    std::uint32_t s = 0;   // Num
    std::uint32_t z = 0;   // Num
    NodePtr h;             // Num
  };

  explicit Index(NodePtr n) : node_(std::move(n)) {}
  static NodePtr lit_node(Natural n);
  static bool eq(const Index& a, const Index& b, int depth);
  Index expand_num_once() const;

  NodePtr node_;
};

struct IndexRepLess {
  bool operator()(const Index& a, const Index& b) const { return Index::rep_compare(a, b) < 0; }
};

}  // namespace et
