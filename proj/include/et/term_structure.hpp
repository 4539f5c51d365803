#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "et/encoding.hpp"
#include "et/indexing.hpp"

namespace et {

class TermStructure;
using TermStructurePtr = std::shared_ptr<const TermStructure>;

/// A term-based indexed structure: carriers indexed by Goedel codes of the
/// terms that generate them.
///
/// The index of a scalar s is the code of the numeral S^x(0), x an index of
/// the substructure; generated elements are denoted by terms over constants
/// and operations. Operations act on indices by re-wrapping: substructure
/// operations rewrap numerals through the substructure's own index-level
/// ops, generated-sort operations prepend their label. The admitted term set
/// is the closure of the canonical forms under the operations; membership is
/// decided by evaluation (terms whose denotation is undefined, such as a
/// division by zero, are outside the domain).
class TermStructure : public StructureView,
                      public std::enable_shared_from_this<TermStructure> {
 public:
  struct ConstantSpec {
    std::string name;
    Value value;
  };

  struct OperationSpec {
    std::string name;
    std::vector<Sort> arg_sorts;
    std::function<Value(std::span<const Value>)> eval;
  };

  /// A lane yields the k-th index of a deterministic listing. Lanes are
  /// always called with consecutive k starting from 0 (the enumerator cache
  /// guarantees it), so implementations may keep sequential state.
  using Lane = std::function<Index(std::uint64_t)>;
  /// Canonical index of a carrier value (the unique canonical term's code).
  using Canonicalizer = std::function<Index(const TermStructure&, const Value&)>;

  struct Spec {
    std::string name;
    /// Substructure whose elements appear as numerals (null for none).
    StructurePtr scalar;
    std::vector<ConstantSpec> constants;
    std::vector<OperationSpec> operations;
    /// Names of scalar-structure ops carried into the combined structure.
    std::vector<std::string> lifted_scalar_ops;
    /// Label-table order; defaults to S, 0, constants, operations.
    std::vector<std::string> label_order;
    /// Optional acceleration lane of canonical terms, interleaved with the
    /// generated all-terms lane (factory receives the built structure).
    std::function<Lane(const TermStructure&)> canonical_lane;
    /// Full custom enumerator; replaces both lanes when set.
    std::function<Lane(const TermStructure&)> custom_enumerator;
    Canonicalizer canonicalizer;
  };

  static TermStructurePtr make(Spec spec);

  // StructureView
  const std::string& tag() const override { return name_; }
  const Indexing& main() const override { return main_; }
  const Indexing* scalar() const override { return scalar_sort_ ? &*scalar_sort_ : nullptr; }
  std::span<const OpEntry> ops() const override { return op_table_; }
  TermShape classify(const Index& x) const override;
  Index make_numeral(const Index& scalar_index) const override;

  // Term-language surface
  const LabelTable& labels() const { return labels_; }
  bool has_scalar_sort() const { return scalar_structure_ != nullptr; }
  const StructurePtr& scalar_structure() const { return scalar_structure_; }
  std::uint32_t s_label() const { return s_label_; }
  std::uint32_t z_label() const { return z_label_; }
  std::uint32_t label_of(const std::string& name) const { return labels_.id_of(name); }
  const ConstantSpec* constant(std::uint32_t label) const;

  /// Code of label(children...): the label paired onto the right-nested
  /// children chain.
  Index wrap(std::uint32_t label, std::span<const Index> children) const;
  Index constant_index(const std::string& name) const;

  /// If x codes a numeral S^h(0), the substructure index h.
  std::optional<Index> as_numeral(const Index& x) const;

  /// The denotation of the coded term; throws DecodeError off-language.
  Value denote(const Index& x) const;

  Index canonical_index(const Value& v) const;

  /// Renders the coded term using label names (towers abbreviated S^h(0)).
  std::string render(const Index& x) const;

 private:
  TermStructure() = default;

  Index enumerate_position(std::uint64_t z) const;
  Index all_terms_lane(std::uint64_t k) const;

  std::string name_;
  LabelTable labels_;
  StructurePtr scalar_structure_;
  std::uint32_t s_label_ = 0, z_label_ = 0;
  std::vector<ConstantSpec> constants_;       // indexed by position
  std::vector<OperationSpec> operations_;
  std::vector<std::uint32_t> constant_labels_;
  std::vector<std::uint32_t> operation_labels_;
  std::vector<OpEntry> op_table_;
  Indexing main_;
  std::optional<Indexing> scalar_sort_;
  Canonicalizer canonicalizer_;
  Lane lane_;  // combined lane behind the memoized enumerator

  // all-terms lane state: terms listed by weight (nodes + scalar ranks)
  struct LaneState {
    std::mutex mu;
    std::vector<std::vector<Index>> by_weight;  // [w] = admitted main terms of weight w
    std::deque<Index> pending;
    std::uint64_t next_weight = 1;
  };
  std::shared_ptr<LaneState> lane_state_ = std::make_shared<LaneState>();

  // Denotation cache keyed by node identity; the stored Index keeps the node
  // alive. Enumerated indices are shared nodes, so searches that rescan an
  // enumeration prefix decode each term once.
  struct DenoteCache {
    std::mutex mu;
    std::unordered_map<const void*, std::pair<Index, Value>> map;
  };
  std::shared_ptr<DenoteCache> denote_cache_ = std::make_shared<DenoteCache>();
};

}  // namespace et
