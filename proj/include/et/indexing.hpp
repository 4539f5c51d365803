#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "et/index.hpp"
#include "et/value.hpp"

namespace et {

/// Step bound for searches. The searches in the underlying constructions are
/// unbounded minimizations; a budget keeps the library total and makes
/// "exhausted" distinguishable from "absent", which is not decidable.
struct SearchBudget {
  std::uint64_t max_steps = 100000;
};

SearchBudget default_budget();  // honors the ET_BUDGET environment variable

/// An indexing of a carrier set: a partial surjection from the naturals,
/// presented by a total domain enumerator, a decoder onto concrete carrier
/// values, and an index-level equality decider defined on the enumerated
/// domain. The decoder throws DecodeError off-domain.
struct Indexing {
  std::string tag;
  std::function<Index(std::uint64_t)> enumerate;
  std::function<Value(const Index&)> decode;
  std::function<bool(const Index&, const Index&)> eq;
};

/// Wraps an enumerator in a thread-safe position cache.
std::function<Index(std::uint64_t)> memoize_enumerator(std::function<Index(std::uint64_t)> fn);

enum class Sort { Scalar, Main };

/// One operation of an indexed structure: an index-level implementation
/// together with its semantic counterpart on decoded values (used by audits).
struct OpEntry {
  std::string name;
  std::vector<Sort> arg_sorts;
  Sort result_sort = Sort::Main;
  std::function<Index(std::span<const Index>)> apply;
  std::function<Value(std::span<const Value>)> eval;
};

/// Shape of a term-structure index, as seen by translators.
struct TermShape {
  enum class Kind { Numeral, Atom, Compound };
  Kind kind = Kind::Atom;
  Index scalar_index;         // Numeral: index of the scalar under the substructure
  std::string op;             // Compound
  std::vector<Index> children;  // Compound
};

/// What translators, audits and searches need from an indexed structure:
/// the carrier indexings and the index-level operations. Term-based
/// structures additionally expose the syntactic shape of their indices.
class StructureView {
 public:
  virtual ~StructureView() = default;

  virtual const std::string& tag() const = 0;
  virtual const Indexing& main() const = 0;
  virtual const Indexing* scalar() const { return nullptr; }
  virtual std::span<const OpEntry> ops() const = 0;

  const OpEntry* find_op(const std::string& name) const;

  /// Syntactic shape of a main-sort index. Structures that are not
  /// term-based treat every index as atomic.
  virtual TermShape classify(const Index&) const { return TermShape{}; }

  /// Index of the scalar numeral S^x(0) in this structure's term language.
  virtual Index make_numeral(const Index&) const {
    throw Error("structure '" + tag() + "' has no scalar numerals");
  }
};

using StructurePtr = std::shared_ptr<const StructureView>;

/// Least-z search for a right inverse: returns g(z) for the least z with
/// match(h(g(z)), y), where g is the domain enumerator. The default match is
/// exact index equality. Throws BudgetExhausted when the budget runs out.
Index right_inverse(const std::function<Index(const Index&)>& h, const Indexing& domain,
                    const Index& y, SearchBudget budget,
                    const std::function<bool(const Index&, const Index&)>& match = {});

/// Derives the inverse of a binary operation by search: the least z with
/// forward(p, g(z)) eq n, yielding subtraction from addition and division
/// from multiplication. Returns g(z).
Index derive_inverse_op(const std::function<Index(const Index&, const Index&)>& forward,
                        const Indexing& domain, const Index& n, const Index& p,
                        SearchBudget budget);

/// A computable map between two indexings of one carrier satisfying
/// target.decode(map(x)) = source.decode(x) on the source domain.
struct Translator {
  StructurePtr source;
  StructurePtr target;
  std::function<Index(const Index&)> map;
};

/// The inductive translator construction: numerals map through the scalar
/// translator, compounds through the target's operation of the same name,
/// and everything else (constants, and subterms whose head operation the
/// source structure does not carry) by least-index search over the target
/// enumerator for a value equal to the source denotation.
Translator build_translator(StructurePtr source, StructurePtr target,
                            std::function<Index(const Index&)> scalar_map, SearchBudget budget);

/// Transports an index-level function along translators: given f computable
/// w.r.t. the target indexings and translators h_k from the primed indexings,
/// returns x -> rightinverse_of_h_result(f(h_1(x_1), ..., h_m(x_m))), which
/// computes f w.r.t. the primed indexings. Right inverses are found by
/// budgeted search with eq-level matching on the result indexing.
std::function<Index(std::span<const Index>)> transport_function(
    std::function<Index(std::span<const Index>)> f_hat, std::vector<Translator> translators,
    SearchBudget budget);

struct AdmissibilityViolation {
  std::string op;
  std::vector<std::uint64_t> tuple;
  std::string detail;
};

struct AdmissibilityReport {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // tuples where the (partial) operation is undefined
  std::vector<AdmissibilityViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Finite-sample audit: over enumerated argument tuples, checks that each
/// operation's index-level implementation lands in the codomain's enumerated
/// domain and decodes to the semantic result.
AdmissibilityReport check_admissible(const StructureView& view, std::uint64_t samples);

}  // namespace et
