#include "et/structures.hpp"

namespace et {

namespace {

Natural nat_arg(const Value& v) { return std::get<Natural>(v); }
Rational rat_arg(const Value& v) { return std::get<Rational>(v); }

// Rationals listed by height |num| + den: 0, 1, -1, 2, -2, 1/2, -1/2, ...
// one canonical fraction per value.
class RationalLister {
 public:
  const Rational& at(std::uint64_t k) {
    while (items_.size() <= k) extend();
    return items_[k];
  }

 private:
  void extend() {
    ++height_;
    if (height_ == 1) {
      items_.emplace_back(0);
      return;
    }
    for (Natural den = 1; den < height_; ++den) {
      Natural num = height_ - den;
      using boost::multiprecision::gcd;
      if (gcd(num, den) != 1) continue;
      items_.emplace_back(num, den);
      items_.emplace_back(-num, den);
    }
  }

  Natural height_ = 0;
  std::vector<Rational> items_;
};

}  // namespace

TermStructurePtr make_nat_s(bool permuted_labels) {
  TermStructure::Spec spec;
  spec.name = permuted_labels ? "nat-s-alt" : "nat-s";
  spec.constants = {{"0", Value(Natural(0))}};
  spec.operations = {{"S",
                      {Sort::Main},
                      [](std::span<const Value> args) {
                        return Value(nat_arg(args[0]) + 1);
                      }}};
  if (permuted_labels) spec.label_order = {"S", "0"};
  spec.custom_enumerator = [](const TermStructure& ts) -> TermStructure::Lane {
    std::uint32_t s = ts.label_of("S"), z = ts.label_of("0");
    return [s, z](std::uint64_t k) { return Index::numeral(s, z, Index::lit(k)); };
  };
  spec.canonicalizer = [](const TermStructure& ts, const Value& v) {
    return Index::numeral(ts.label_of("S"), ts.label_of("0"), Index::lit(std::get<Natural>(v)));
  };
  return TermStructure::make(std::move(spec));
}

Index nat_plus_numeral(const TermStructure& ts, const Natural& n) {
  Index acc = ts.constant_index("0");
  std::uint32_t add = ts.label_of("add");
  Index one = ts.constant_index("1");
  for (Natural i = 0; i < n; ++i) acc = ts.wrap(add, std::vector<Index>{one, acc});
  return acc;
}

TermStructurePtr make_nat_plus() {
  TermStructure::Spec spec;
  spec.name = "nat-plus";
  spec.constants = {{"0", Value(Natural(0))}, {"1", Value(Natural(1))}};
  spec.operations = {{"add",
                      {Sort::Main, Sort::Main},
                      [](std::span<const Value> args) {
                        return Value(nat_arg(args[0]) + nat_arg(args[1]));
                      }}};
  spec.canonical_lane = [](const TermStructure& ts) -> TermStructure::Lane {
    return [&ts](std::uint64_t k) { return nat_plus_numeral(ts, Natural(k)); };
  };
  spec.canonicalizer = [](const TermStructure& ts, const Value& v) {
    return nat_plus_numeral(ts, std::get<Natural>(v));
  };
  return TermStructure::make(std::move(spec));
}

Index q_canonical_index(const TermStructure& ts, const Rational& v) {
  std::uint32_t add = ts.label_of("add"), sub = ts.label_of("sub");
  std::uint32_t div_label = ts.label_of("div");
  Index zero = ts.constant_index("0");
  Index one = ts.constant_index("1");
  auto numeral = [&](const Natural& n) {
    Index acc = zero;
    for (Natural i = 0; i < n; ++i) acc = ts.wrap(add, std::vector<Index>{one, acc});
    return acc;
  };
  Natural p = v.sign() > 0 ? v.num() : Natural(0);
  Natural q = v.sign() < 0 ? Natural(-v.num()) : Natural(0);
  Natural r = v.den() - 1;
  Index num_term = ts.wrap(sub, std::vector<Index>{numeral(p), numeral(q)});
  Index den_term = ts.wrap(add, std::vector<Index>{one, numeral(r)});
  return ts.wrap(div_label, std::vector<Index>{num_term, den_term});
}

TermStructurePtr make_q(bool permuted_labels) {
  TermStructure::Spec spec;
  spec.name = permuted_labels ? "q-alt" : "q";
  spec.constants = {{"0", Value(Rational(0))}, {"1", Value(Rational(1))}};
  spec.operations = {
      {"add", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(rat_arg(a[0]) + rat_arg(a[1])); }},
      {"sub", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(rat_arg(a[0]) - rat_arg(a[1])); }},
      {"mul", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(rat_arg(a[0]) * rat_arg(a[1])); }},
      {"div", {Sort::Main, Sort::Main},
       [](std::span<const Value> a) { return Value(rat_arg(a[0]) / rat_arg(a[1])); }},
  };
  if (permuted_labels) spec.label_order = {"div", "mul", "sub", "add", "1", "0"};
  spec.canonical_lane = [](const TermStructure& ts) -> TermStructure::Lane {
    auto lister = std::make_shared<RationalLister>();
    return [&ts, lister](std::uint64_t k) { return q_canonical_index(ts, lister->at(k)); };
  };
  spec.canonicalizer = [](const TermStructure& ts, const Value& v) {
    return q_canonical_index(ts, std::get<Rational>(v));
  };
  return TermStructure::make(std::move(spec));
}

}  // namespace et
