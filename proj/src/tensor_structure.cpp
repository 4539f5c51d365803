#include "et/tensor_structure.hpp"

namespace et {

namespace {

TensorVector tv_arg(const Value& v) { return std::get<TensorVector>(v); }

std::uint64_t small_rank(const BasisWord& w) {
  Natural r = w.rank();
  if (r > Natural(UINT64_MAX)) throw Error("basis-word rank out of range");
  return r.convert_to<std::uint64_t>();
}

}  // namespace

TermStructurePtr make_tensor_structure(Alphabet::Ptr alphabet, NumberField::Ptr field,
                                       StructurePtr field_structure, std::string name,
                                       bool reversed_generators) {
  TermStructure::Spec spec;
  spec.name = std::move(name);
  spec.scalar = std::move(field_structure);
  std::size_t g = alphabet->size();
  // Label e_j denotes generator j, or generator g-1-j in the reversed
  // variant; the value space (alphabet) is shared either way.
  std::vector<std::size_t> gen_of_label(g);
  for (std::size_t j = 0; j < g; ++j) gen_of_label[j] = reversed_generators ? g - 1 - j : j;
  for (std::size_t j = 0; j < g; ++j) {
    BasisWord word(alphabet, {static_cast<std::uint32_t>(gen_of_label[j])});
    spec.constants.push_back({"e" + std::to_string(j), Value(TensorVector::basis(word, field))});
  }
  spec.operations = {
      {"smul", {Sort::Scalar, Sort::Main},
       [](std::span<const Value> a) {
         return Value(tv_scale(std::get<FieldElement>(a[0]), tv_arg(a[1])));
       }},
      {"add", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(tv_add(tv_arg(a[0]), tv_arg(a[1]))); }},
      {"tensor", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(tv_tensor(tv_arg(a[0]), tv_arg(a[1]))); }},
  };
  spec.lifted_scalar_ops = {"add", "mul"};
  spec.canonical_lane = [alphabet, g](const TermStructure& ts) -> TermStructure::Lane {
    // Single-summand unit lane: k -> (word w, scalar rank s) by the pairing
    // diagonal, term smul(S^{g_s(s)}(0), word-term of rank w). Unit basis
    // terms therefore appear at position O(rank^2), which keeps least-index
    // searches for basis vectors cheap.
    std::uint32_t smul = ts.label_of("smul");
    std::uint32_t tensor_label = ts.label_of("tensor");
    std::vector<std::uint32_t> label_of_gen(g);
    for (std::size_t j = 0; j < g; ++j) {
      const auto* c = ts.constant(ts.label_of("e" + std::to_string(j)));
      const auto& tv = std::get<TensorVector>(c->value);
      label_of_gen[tv.terms().begin()->first.letters()[0]] =
          ts.label_of("e" + std::to_string(j));
    }
    return [&ts, alphabet, smul, tensor_label, label_of_gen](std::uint64_t k) {
      auto [w, s] = unpair_nat(Natural(k + 1));
      Index lambda = ts.scalar_structure()->main().enumerate(s.convert_to<std::uint64_t>());
      BasisWord word = BasisWord::from_rank(alphabet, w);
      const auto& letters = word.letters();
      Index word_term = ts.wrap(label_of_gen[letters.back()], {});
      for (std::size_t i = letters.size() - 1; i-- > 0;)
        word_term = ts.wrap(
            tensor_label, std::vector<Index>{ts.wrap(label_of_gen[letters[i]], {}), word_term});
      return ts.wrap(smul, std::vector<Index>{ts.make_numeral(lambda), word_term});
    };
  };
  spec.canonicalizer = [](const TermStructure& ts, const Value& v) {
    return tv_to_term(std::get<TensorVector>(v), ts, default_budget());
  };
  return TermStructure::make(std::move(spec));
}

TermStructurePtr make_vector_structure(std::size_t dimension, NumberField::Ptr field,
                                       StructurePtr field_structure, std::string name) {
  std::vector<std::string> gens;
  for (std::size_t j = 0; j < dimension; ++j) gens.push_back(std::to_string(j));
  Alphabet::Ptr alphabet = Alphabet::make(std::move(gens));
  TermStructure::Spec spec;
  spec.name = std::move(name);
  spec.scalar = std::move(field_structure);
  for (std::size_t j = 0; j < dimension; ++j) {
    BasisWord word(alphabet, {static_cast<std::uint32_t>(j)});
    spec.constants.push_back({"e" + std::to_string(j), Value(TensorVector::basis(word, field))});
  }
  spec.operations = {
      {"smul", {Sort::Scalar, Sort::Main},
       [](std::span<const Value> a) {
         return Value(tv_scale(std::get<FieldElement>(a[0]), tv_arg(a[1])));
       }},
      {"add", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(tv_add(tv_arg(a[0]), tv_arg(a[1]))); }},
  };
  spec.lifted_scalar_ops = {"add", "mul"};
  spec.canonical_lane = [alphabet, dimension](const TermStructure& ts) -> TermStructure::Lane {
    return [&ts, dimension](std::uint64_t k) {
      std::uint64_t j = k % dimension;
      std::uint64_t s = k / dimension;
      Index lambda = ts.scalar_structure()->main().enumerate(s);
      Index basis = ts.constant_index("e" + std::to_string(j));
      return ts.wrap(ts.label_of("smul"), std::vector<Index>{ts.make_numeral(lambda), basis});
    };
  };
  spec.canonicalizer = [](const TermStructure& ts, const Value& v) {
    return tv_to_term(std::get<TensorVector>(v), ts, default_budget());
  };
  return TermStructure::make(std::move(spec));
}

PermutationOracle PermutationOracle::identity() {
  return {"identity", [](std::uint64_t p) { return p; }, [](std::uint64_t p) { return p; },
          UINT64_MAX};
}

PermutationOracle PermutationOracle::adjacent_swap() {
  auto swap = [](std::uint64_t p) { return p ^ 1; };
  return {"adjacent-swap", swap, swap, UINT64_MAX};
}

PermutationOracle PermutationOracle::reversal_on(std::uint64_t n) {
  auto rev = [n](std::uint64_t p) { return p < n ? n - 1 - p : p; };
  return {"reversal-on-" + std::to_string(n), rev, rev, UINT64_MAX};
}

TensorVector permute_vector(const TensorVector& v, const PermutationOracle& oracle) {
  TensorVector out(v.alphabet(), v.field());
  for (const auto& [word, coeff] : v.terms()) {
    std::uint64_t rank = small_rank(word);
    if (rank >= oracle.range)
      throw Error("permutation oracle '" + oracle.name + "' undefined at rank " +
                  std::to_string(rank));
    out.accumulate(BasisWord::from_rank(v.alphabet(), Natural(oracle.forward(rank))), coeff);
  }
  return out;
}

namespace {

/// phi o i as a StructureView: shares the base term language, drops the
/// tensor product from the operation table.
class PermutedStructure : public StructureView {
 public:
  PermutedStructure(TermStructurePtr base, PermutationOracle oracle)
      : base_(std::move(base)), oracle_(std::move(oracle)) {
    tag_ = base_->tag() + "+" + oracle_.name;
    // Addition and scalar multiplication commute with the linear phi, so
    // their index-level implementations and semantics carry over unchanged.
    for (const OpEntry& op : base_->ops()) {
      if (op.name == "tensor") continue;  // phi does not commute with it
      ops_.push_back(op);
    }
    const TermStructure* base_raw = base_.get();
    PermutationOracle oracle_copy = oracle_;
    main_.tag = tag_;
    main_.enumerate = base_->main().enumerate;
    main_.decode = [base_raw, oracle_copy](const Index& x) {
      Value v = base_raw->main().decode(x);
      return Value(permute_vector(std::get<TensorVector>(v), oracle_copy));
    };
    // phi is injective, so permuted equality coincides with base equality.
    main_.eq = base_->main().eq;
  }

  const std::string& tag() const override { return tag_; }
  const Indexing& main() const override { return main_; }
  const Indexing* scalar() const override { return base_->scalar(); }
  std::span<const OpEntry> ops() const override { return ops_; }
  TermShape classify(const Index& x) const override { return base_->classify(x); }
  Index make_numeral(const Index& scalar_index) const override {
    return base_->make_numeral(scalar_index);
  }

 private:
  TermStructurePtr base_;
  PermutationOracle oracle_;
  std::string tag_;
  std::vector<OpEntry> ops_;
  Indexing main_;
};

}  // namespace

StructurePtr permuted_indexing(TermStructurePtr base, PermutationOracle oracle) {
  return std::make_shared<PermutedStructure>(std::move(base), std::move(oracle));
}

Index basis_index_term(std::uint64_t p, const TermStructure& base) {
  const auto* scalar = dynamic_cast<const TermStructure*>(base.scalar_structure().get());
  if (!scalar) throw Error("basis_index_term needs a term-based scalar structure");
  Value probe = base.main().decode(base.constant_index("e0"));
  const auto& tv = std::get<TensorVector>(probe);
  auto field = tv.field();
  auto alphabet = tv.alphabet();
  Index z = scalar->canonical_index(Value(field->zero()));
  Index u = scalar->canonical_index(Value(field->one()));
  std::uint32_t smul = base.label_of("smul");
  std::uint32_t add = base.label_of("add");
  std::uint32_t tensor_label = base.labels().find("tensor") ? base.label_of("tensor") : 0;

  // label id denoting generator letter g (inverse of the e_j mapping)
  std::size_t gens = alphabet->size();
  std::vector<std::uint32_t> label_of_gen(gens);
  for (std::size_t j = 0; j < gens; ++j) {
    const auto* c = base.constant(base.label_of("e" + std::to_string(j)));
    const auto& basis_tv = std::get<TensorVector>(c->value);
    label_of_gen[basis_tv.terms().begin()->first.letters()[0]] =
        base.label_of("e" + std::to_string(j));
  }
  auto word_term = [&](std::uint64_t rank) {
    BasisWord word = BasisWord::from_rank(alphabet, Natural(rank));
    const auto& letters = word.letters();
    Index acc = base.wrap(label_of_gen[letters.back()], {});
    for (std::size_t i = letters.size() - 1; i-- > 0;) {
      if (!base.labels().find("tensor"))
        throw Error("structure has no tensor product for multi-letter words");
      acc = base.wrap(tensor_label,
                      std::vector<Index>{base.wrap(label_of_gen[letters[i]], {}), acc});
    }
    return acc;
  };

  std::vector<Index> summands;
  for (std::uint64_t j = 0; j < p; ++j)
    summands.push_back(
        base.wrap(smul, std::vector<Index>{base.make_numeral(z), word_term(j)}));
  summands.push_back(base.wrap(smul, std::vector<Index>{base.make_numeral(u), word_term(p)}));
  Index acc = summands.back();
  for (std::size_t j = summands.size() - 1; j-- > 0;)
    acc = base.wrap(add, std::vector<Index>{summands[j], acc});
  return acc;
}

std::uint64_t which_basis(const Index& x, const TermStructure& base) {
  Value v = base.main().decode(x);
  const auto& tv = std::get<TensorVector>(v);
  if (tv.terms().size() != 1)
    throw NotABasisVector("support size " + std::to_string(tv.terms().size()) + ", expected 1");
  const auto& [word, coeff] = *tv.terms().begin();
  if (!nf_eq(coeff, tv.field()->one()))
    throw NotABasisVector("coefficient " + coeff.str() + ", expected the unit");
  return small_rank(word);
}

std::vector<std::uint64_t> extract_permutation(const Translator& g, const TermStructure& base,
                                               std::uint64_t range) {
  std::vector<std::uint64_t> table(range);
  for (std::uint64_t p = 0; p < range; ++p)
    table[p] = which_basis(g.map(basis_index_term(p, base)), base);
  return table;
}

Index tv_to_term(const TensorVector& v, const TermStructure& ts, SearchBudget budget) {
  const auto* scalar = dynamic_cast<const TermStructure*>(ts.scalar_structure().get());
  if (!scalar) throw Error("tv_to_term needs a term-based scalar structure");
  const Indexing& scalar_ix = scalar->main();

  // Least scalar index of a coefficient value, by enumerator search.
  auto least_scalar = [&](const FieldElement& c) {
    Value target(c);
    for (std::uint64_t z = 0; z < budget.max_steps; ++z) {
      Index candidate = scalar_ix.enumerate(z);
      try {
        if (value_eq(scalar_ix.decode(candidate), target)) return candidate;
      } catch (const DecodeError&) {
      }
    }
    throw BudgetExhausted("no scalar index of " + c.str() + " within " +
                          std::to_string(budget.max_steps) + " steps");
  };

  std::uint32_t smul = ts.label_of("smul");
  std::uint32_t add = ts.label_of("add");
  if (v.is_zero()) {
    Index z = least_scalar(v.field()->zero());
    return ts.wrap(smul, std::vector<Index>{ts.make_numeral(z), ts.constant_index("e0")});
  }

  std::vector<std::uint32_t> label_of_gen(v.alphabet()->size());
  for (std::size_t j = 0; j < v.alphabet()->size(); ++j) {
    const auto* c = ts.constant(ts.label_of("e" + std::to_string(j)));
    const auto& basis_tv = std::get<TensorVector>(c->value);
    label_of_gen[basis_tv.terms().begin()->first.letters()[0]] =
        ts.label_of("e" + std::to_string(j));
  }
  auto word_term = [&](const BasisWord& word) {
    const auto& letters = word.letters();
    Index acc = ts.wrap(label_of_gen[letters.back()], {});
    for (std::size_t i = letters.size() - 1; i-- > 0;) {
      acc = ts.wrap(ts.label_of("tensor"),
                    std::vector<Index>{ts.wrap(label_of_gen[letters[i]], {}), acc});
    }
    return acc;
  };

  std::vector<Index> summands;  // map iteration = word-rank order
  for (const auto& [word, coeff] : v.terms()) {
    Index lambda = least_scalar(coeff);
    summands.push_back(
        ts.wrap(smul, std::vector<Index>{ts.make_numeral(lambda), word_term(word)}));
  }
  Index acc = summands.back();
  for (std::size_t j = summands.size() - 1; j-- > 0;)
    acc = ts.wrap(add, std::vector<Index>{summands[j], acc});
  return acc;
}

TensorVector term_to_tv(const Index& x, const TermStructure& ts) {
  return std::get<TensorVector>(ts.denote(x));
}

}  // namespace et
