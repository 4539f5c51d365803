#include "et/field_structure.hpp"

#include <map>

namespace et {

namespace {

// Field elements listed by total coordinate height (height of a rational is
// |num| + den), diagonally over the d coordinates.
class ElementLister {
 public:
  explicit ElementLister(NumberField::Ptr field) : field_(std::move(field)) {}

  const FieldElement& at(std::uint64_t k) {
    while (items_.size() <= k) extend();
    return items_[k];
  }

 private:
  const std::vector<Rational>& rationals_of_height(std::uint64_t h) {
    while (by_height_.size() <= h) {
      std::uint64_t next = by_height_.size();
      std::vector<Rational> out;
      if (next == 1) out.emplace_back(0);
      if (next >= 2) {
        for (std::uint64_t den = 1; den < next; ++den) {
          Natural num(next - den);
          using boost::multiprecision::gcd;
          if (gcd(num, Natural(den)) != 1) continue;
          out.emplace_back(num, Natural(den));
          out.emplace_back(-num, Natural(den));
        }
      }
      by_height_.push_back(std::move(out));
    }
    return by_height_[h];
  }

  void extend() {
    std::size_t d = field_->degree();
    ++total_;
    if (total_ < d) return extend();
    // compositions of total_ into d parts, each >= 1
    std::vector<std::uint64_t> parts(d, 1);
    std::vector<Rational> coords(d);
    std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t pos,
                                                               std::uint64_t rest) {
      if (pos + 1 == d) {
        parts[pos] = rest;
        std::function<void(std::size_t)> pick = [&](std::size_t cpos) {
          if (cpos == d) {
            items_.push_back(field_->element(coords));
            return;
          }
          for (const Rational& r : rationals_of_height(parts[cpos])) {
            coords[cpos] = r;
            pick(cpos + 1);
          }
        };
        pick(0);
        return;
      }
      for (std::uint64_t v = 1; v + (d - pos - 1) <= rest; ++v) {
        parts[pos] = v;
        walk(pos + 1, rest - v);
      }
    };
    walk(0, total_);
  }

  NumberField::Ptr field_;
  std::uint64_t total_ = 0;
  std::vector<std::vector<Rational>> by_height_;
  std::vector<FieldElement> items_;
};

FieldElement fe_arg(const Value& v) { return std::get<FieldElement>(v); }

}  // namespace

Index field_canonical_index(const TermStructure& ts, const FieldElement& v) {
  const auto& scalar = *ts.scalar_structure();
  std::uint32_t smul = ts.label_of("smul");
  std::uint32_t add = ts.label_of("add");
  std::size_t d = v.coords().size();
  const auto* sts = dynamic_cast<const TermStructure*>(&scalar);
  if (!sts) throw Error("field structure needs a term-based scalar substructure");
  std::vector<Index> summands;
  for (std::size_t j = 0; j < d; ++j) {
    Index lambda = sts->canonical_index(Value(v.coord(j)));
    Index numeral = ts.make_numeral(lambda);
    Index basis = ts.constant_index("e" + std::to_string(j));
    summands.push_back(ts.wrap(smul, std::vector<Index>{numeral, basis}));
  }
  Index acc = summands.back();
  for (std::size_t j = d - 1; j-- > 0;)
    acc = ts.wrap(add, std::vector<Index>{summands[j], acc});
  return acc;
}

TermStructurePtr make_field_structure(NumberField::Ptr field, StructurePtr scalar_structure,
                                      std::string name) {
  TermStructure::Spec spec;
  spec.name = name.empty() ? "field:" + field->name() : std::move(name);
  spec.scalar = std::move(scalar_structure);
  for (std::size_t j = 0; j < field->degree(); ++j)
    spec.constants.push_back({"e" + std::to_string(j), Value(field->basis_element(j))});
  spec.operations = {
      {"smul", {Sort::Scalar, Sort::Main},
       [](std::span<const Value> a) {
         return Value(nf_scale(std::get<Rational>(a[0]), fe_arg(a[1])));
       }},
      {"add", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(nf_add(fe_arg(a[0]), fe_arg(a[1]))); }},
      {"mul", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(nf_mul(fe_arg(a[0]), fe_arg(a[1]))); }},
  };
  spec.lifted_scalar_ops = {"add", "sub", "mul", "div"};
  spec.canonical_lane = [field](const TermStructure& ts) -> TermStructure::Lane {
    auto lister = std::make_shared<ElementLister>(field);
    return [&ts, lister](std::uint64_t k) {
      return field_canonical_index(ts, lister->at(k));
    };
  };
  spec.canonicalizer = [](const TermStructure& ts, const Value& v) {
    return field_canonical_index(ts, std::get<FieldElement>(v));
  };
  return TermStructure::make(std::move(spec));
}

RationalEnumerator::RationalEnumerator(StructurePtr structure, SearchBudget per_item_budget)
    : structure_(std::move(structure)), budget_(per_item_budget) {
  add_ = structure_->find_op("add");
  mul_ = structure_->find_op("mul");
  if (!add_ || !mul_)
    throw Error("rational enumeration needs 'add' and 'mul' on '" + structure_->tag() + "'");
  // Designated indices of 0 and 1: least enumerated indices with those values.
  const Indexing& ix = structure_->main();
  Value probe = ix.decode(ix.enumerate(0));
  const auto* fe = std::get_if<FieldElement>(&probe);
  if (!fe) throw Error("rational enumeration expects a field-element structure");
  auto field = fe->field();
  auto find_value = [&](const Value& v) {
    for (std::uint64_t z = 0; z < budget_.max_steps; ++z) {
      Index c = ix.enumerate(z);
      try {
        if (value_eq(ix.decode(c), v)) return c;
      } catch (const DecodeError&) {
      }
    }
    throw BudgetExhausted("no index of " + value_str(v) + " in enumeration prefix");
  };
  zero_index_ = find_value(Value(field->zero()));
  unit_index_ = find_value(Value(field->one()));
}

Index RationalEnumerator::j_chain(std::uint64_t k) {
  if (j_cache_.empty()) j_cache_.push_back(zero_index_);
  while (j_cache_.size() <= k) {
    std::vector<Index> args{j_cache_.back(), unit_index_};
    j_cache_.push_back(add_->apply(args));
  }
  return j_cache_[k];
}

std::optional<Index> RationalEnumerator::derived(const OpEntry& forward, const Index& n,
                                                 const Index& p, const std::string& memo_key) {
  auto hit = search_cache_.find(memo_key);
  if (hit != search_cache_.end()) return hit->second;
  try {
    Index found = derive_inverse_op(
        [&forward](const Index& a, const Index& b) {
          std::vector<Index> args{a, b};
          return forward.apply(args);
        },
        structure_->main(), n, p, budget_);
    search_cache_.emplace(memo_key, found);
    return found;
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

RationalYield RationalEnumerator::next() {
  RationalYield yield;
  yield.p = p_;
  yield.q = q_;
  yield.r = diag_ - p_ - q_;
  // advance along the diagonal p + q + r = diag, then to the next diagonal
  if (q_ < diag_ - p_) {
    ++q_;
  } else if (p_ < diag_) {
    ++p_;
    q_ = 0;
  } else {
    ++diag_;
    p_ = q_ = 0;
  }

  // f(p,q,r) = (J(p) - J(q)) / (J(r) + u), derived searches over the
  // structure's enumerator.
  long long diff_val = static_cast<long long>(yield.p) - static_cast<long long>(yield.q);
  auto diff = derived(*add_, j_chain(yield.p), j_chain(yield.q),
                      "sub:" + std::to_string(diff_val));
  if (!diff) return yield;
  std::vector<Index> den_args{j_chain(yield.r), unit_index_};
  Index denom = add_->apply(den_args);
  Rational value = Rational(Natural(diff_val)) / Rational(Natural(yield.r + 1));
  auto quot = derived(*mul_, *diff, denom, "div:" + value.str());
  if (!quot) return yield;
  yield.index = *quot;
  Value decoded = structure_->main().decode(*quot);
  yield.value = std::get<FieldElement>(decoded).coord(0);
  return yield;
}

}  // namespace et
