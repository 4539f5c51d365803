#include "et/indexing.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace et {

SearchBudget default_budget() {
  SearchBudget budget;
  if (const char* env = std::getenv("ET_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) budget.max_steps = v;
  }
  return budget;
}

std::function<Index(std::uint64_t)> memoize_enumerator(std::function<Index(std::uint64_t)> fn) {
  struct Cache {
    std::mutex mu;
    std::vector<Index> items;
  };
  auto cache = std::make_shared<Cache>();
  return [cache, fn = std::move(fn)](std::uint64_t z) {
    std::lock_guard<std::mutex> lock(cache->mu);
    while (cache->items.size() <= z) cache->items.push_back(fn(cache->items.size()));
    return cache->items[z];
  };
}

const OpEntry* StructureView::find_op(const std::string& name) const {
  for (const auto& op : ops())
    if (op.name == name) return &op;
  return nullptr;
}

Index right_inverse(const std::function<Index(const Index&)>& h, const Indexing& domain,
                    const Index& y, SearchBudget budget,
                    const std::function<bool(const Index&, const Index&)>& match) {
  for (std::uint64_t z = 0; z < budget.max_steps; ++z) {
    Index candidate = domain.enumerate(z);
    try {
      Index image = h(candidate);
      bool hit = match ? match(image, y) : image == y;
      if (hit) return candidate;
    } catch (const DecodeError&) {
    } catch (const DivisionByZero&) {
    }
  }
  throw BudgetExhausted("right_inverse: no preimage within " +
                        std::to_string(budget.max_steps) + " steps over '" + domain.tag + "'");
}

Index derive_inverse_op(const std::function<Index(const Index&, const Index&)>& forward,
                        const Indexing& domain, const Index& n, const Index& p,
                        SearchBudget budget) {
  for (std::uint64_t z = 0; z < budget.max_steps; ++z) {
    Index candidate = domain.enumerate(z);
    try {
      if (domain.eq(forward(p, candidate), n)) return candidate;
    } catch (const DecodeError&) {
    } catch (const DivisionByZero&) {
    }
  }
  throw BudgetExhausted("derive_inverse_op: no solution within " +
                        std::to_string(budget.max_steps) + " steps over '" + domain.tag + "'");
}

namespace {

// Least enumerated target index whose decoded value equals v.
Index search_value(const StructureView& target, const Value& v, SearchBudget budget) {
  const Indexing& ix = target.main();
  for (std::uint64_t z = 0; z < budget.max_steps; ++z) {
    Index candidate = ix.enumerate(z);
    try {
      if (value_eq(ix.decode(candidate), v)) return candidate;
    } catch (const DecodeError&) {
    }
  }
  throw BudgetExhausted("constant search: no index of " + value_str(v) + " within " +
                        std::to_string(budget.max_steps) + " steps over '" + target.tag() + "'");
}

struct TranslatorState {
  StructurePtr source;
  StructurePtr target;
  std::function<Index(const Index&)> scalar_map;
  SearchBudget budget;
  std::mutex mu;
  std::map<Index, Index, IndexRepLess> memo;
  std::map<std::string, Index> atom_cache;  // keyed by decoded-value text
};

// Iterative post-order translation; term towers can be thousands deep.
Index translate(TranslatorState& st, const Index& root) {
  std::lock_guard<std::mutex> lock(st.mu);
  struct Frame {
    Index term;
    TermShape shape;
    std::size_t next = 0;
    std::vector<Index> done;
  };
  std::vector<Frame> stack;
  auto lookup = [&](const Index& x) -> std::optional<Index> {
    auto it = st.memo.find(x);
    if (it != st.memo.end()) return it->second;
    return std::nullopt;
  };
  auto translate_leaf = [&](const Index& x, const TermShape& shape) -> std::optional<Index> {
    switch (shape.kind) {
      case TermShape::Kind::Numeral:
        return st.target->make_numeral(st.scalar_map ? st.scalar_map(shape.scalar_index)
                                                     : shape.scalar_index);
      case TermShape::Kind::Compound:
        if (st.source->find_op(shape.op)) return std::nullopt;  // compositional, not a leaf
        [[fallthrough]];
      case TermShape::Kind::Atom: {
        // Constant case: least target index denoting the source value. Also
        // covers subterms whose head operation the source structure lacks.
        Value v = st.source->main().decode(x);
        std::string key = value_str(v);
        auto it = st.atom_cache.find(key);
        if (it != st.atom_cache.end()) return it->second;
        Index y = search_value(*st.target, v, st.budget);
        st.atom_cache.emplace(std::move(key), y);
        return y;
      }
    }
    return std::nullopt;
  };

  if (auto hit = lookup(root)) return *hit;
  stack.push_back(Frame{root, st.source->classify(root), 0, {}});
  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (frame.next == 0) {
      if (auto leaf = translate_leaf(frame.term, frame.shape)) {
        st.memo.emplace(frame.term, *leaf);
        stack.pop_back();
        continue;
      }
    }
    if (frame.next < frame.shape.children.size()) {
      Index child = frame.shape.children[frame.next];
      if (auto hit = lookup(child)) {
        frame.done.push_back(*hit);
        ++frame.next;
        continue;
      }
      stack.push_back(Frame{child, st.source->classify(child), 0, {}});
      continue;
    }
    const OpEntry* op = st.target->find_op(frame.shape.op);
    if (!op)
      throw Error("translator: target '" + st.target->tag() + "' lacks operation '" +
                  frame.shape.op + "'");
    Index result = op->apply(frame.done);
    st.memo.emplace(frame.term, result);
    stack.pop_back();
  }
  return st.memo.at(root);
}

}  // namespace

Translator build_translator(StructurePtr source, StructurePtr target,
                            std::function<Index(const Index&)> scalar_map, SearchBudget budget) {
  auto st = std::make_shared<TranslatorState>();
  st->source = source;
  st->target = target;
  st->scalar_map = std::move(scalar_map);
  st->budget = budget;
  Translator tr;
  tr.source = std::move(source);
  tr.target = std::move(target);
  tr.map = [st](const Index& x) { return translate(*st, x); };
  return tr;
}

std::function<Index(std::span<const Index>)> transport_function(
    std::function<Index(std::span<const Index>)> f_hat, std::vector<Translator> translators,
    SearchBudget budget) {
  if (translators.empty()) throw Error("transport_function: missing result translator");
  return [f_hat = std::move(f_hat), translators = std::move(translators),
          budget](std::span<const Index> args) {
    if (args.size() + 1 != translators.size())
      throw Error("transport_function: arity mismatch");
    std::vector<Index> mapped;
    mapped.reserve(args.size());
    for (std::size_t k = 0; k < args.size(); ++k) mapped.push_back(translators[k].map(args[k]));
    Index y = f_hat(mapped);
    const Translator& result = translators.back();
    const Indexing& target_ix = result.target->main();
    return right_inverse(result.map, result.source->main(), y, budget,
                         [&target_ix](const Index& a, const Index& b) {
                           return target_ix.eq(a, b);
                         });
  };
}

std::string AdmissibilityReport::summary() const {
  std::ostringstream os;
  os << checked << " tuples checked, " << skipped << " skipped, " << violations.size()
     << " violation(s)";
  for (const auto& v : violations) {
    os << "\n  op " << v.op << " at (";
    for (std::size_t i = 0; i < v.tuple.size(); ++i) os << (i ? "," : "") << v.tuple[i];
    os << "): " << v.detail;
  }
  return os.str();
}

namespace {

void audit_tuple(const StructureView& view, const OpEntry& op,
                 const std::vector<std::uint64_t>& t, AdmissibilityReport& report) {
  std::size_t arity = op.arg_sorts.size();
  std::vector<Index> args;
  std::vector<Value> arg_values;
  for (std::size_t k = 0; k < arity; ++k) {
    const Indexing& ix = op.arg_sorts[k] == Sort::Scalar ? *view.scalar() : view.main();
    args.push_back(ix.enumerate(t[k]));
    try {
      arg_values.push_back(ix.decode(args.back()));
    } catch (const DecodeError&) {
      ++report.skipped;
      return;
    }
  }
  std::optional<Value> expected;
  try {
    expected = op.eval(arg_values);
  } catch (const DivisionByZero&) {
  } catch (const DecodeError&) {
  }
  if (!expected) {
    ++report.skipped;  // partial operation undefined at this tuple
    return;
  }
  ++report.checked;
  const Indexing& out_ix = op.result_sort == Sort::Scalar ? *view.scalar() : view.main();
  try {
    Index result = op.apply(args);
    Value decoded = out_ix.decode(result);  // also certifies domain membership
    if (!value_eq(decoded, *expected)) {
      report.violations.push_back(
          {op.name, t, "decoded " + value_str(decoded) + ", expected " + value_str(*expected)});
    }
  } catch (const Error& e) {
    report.violations.push_back({op.name, t, e.what()});
  }
}

}  // namespace

AdmissibilityReport check_admissible(const StructureView& view, std::uint64_t samples) {
  AdmissibilityReport report;
  for (const auto& op : view.ops()) {
    std::size_t arity = op.arg_sorts.size();
    if (arity == 0) continue;
    // Argument tuples in diagonal order: max coordinate 0, 1, 2, ...
    std::uint64_t produced = 0;
    for (std::uint64_t bound = 0; produced < samples; ++bound) {
      std::vector<std::uint64_t> t(arity, 0);
      while (produced < samples) {
        std::uint64_t mx = 0;
        for (auto c : t) mx = std::max(mx, c);
        if (mx == bound) {
          audit_tuple(view, op, t, report);
          ++produced;
        }
        std::size_t k = arity;
        while (k-- > 0) {
          if (++t[k] <= bound) break;
          t[k] = 0;
        }
        bool wrapped = true;
        for (auto c : t) wrapped = wrapped && c == 0;
        if (wrapped) break;
      }
    }
  }
  return report;
}

}  // namespace et
