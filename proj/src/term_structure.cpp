#include "et/term_structure.hpp"

#include <numeric>
#include <unordered_map>
#include <variant>

namespace et {

namespace {
// Compositions of total into parts entries, each >= 1, lexicographic.
void compositions(std::uint64_t total, std::size_t parts,
                  std::vector<std::uint64_t>& current,
                  const std::function<void(const std::vector<std::uint64_t>&)>& emit) {
  if (parts == 1) {
    if (total >= 1) {
      current.push_back(total);
      emit(current);
      current.pop_back();
    }
    return;
  }
  for (std::uint64_t v = 1; v + (parts - 1) <= total; ++v) {
    current.push_back(v);
    compositions(total - v, parts - 1, current, emit);
    current.pop_back();
  }
}
}  // namespace

TermStructurePtr TermStructure::make(Spec spec) {
  auto ts = std::shared_ptr<TermStructure>(new TermStructure());
  ts->name_ = std::move(spec.name);
  ts->scalar_structure_ = std::move(spec.scalar);
  ts->constants_ = std::move(spec.constants);
  ts->operations_ = std::move(spec.operations);
  ts->canonicalizer_ = std::move(spec.canonicalizer);

  struct Entry {
    std::string name;
    std::uint32_t arity;
    int kind;  // 0 = S wrapper, 1 = 0 wrapper, 2 = constant, 3 = operation
    std::size_t pos;
  };
  std::vector<Entry> entries;
  if (ts->scalar_structure_) {
    entries.push_back({"S", 1, 0, 0});
    entries.push_back({"0", 0, 1, 0});
  }
  for (std::size_t i = 0; i < ts->constants_.size(); ++i)
    entries.push_back({ts->constants_[i].name, 0, 2, i});
  for (std::size_t i = 0; i < ts->operations_.size(); ++i)
    entries.push_back(
        {ts->operations_[i].name,
         static_cast<std::uint32_t>(ts->operations_[i].arg_sorts.size()), 3, i});

  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!spec.label_order.empty()) {
    if (spec.label_order.size() != entries.size())
      throw Error("label_order must list every label of '" + ts->name_ + "'");
    order.clear();
    for (const auto& name : spec.label_order) {
      bool found = false;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].name == name) {
          order.push_back(i);
          found = true;
          break;
        }
      }
      if (!found) throw Error("label_order names unknown label '" + name + "'");
    }
  }
  ts->constant_labels_.resize(ts->constants_.size());
  ts->operation_labels_.resize(ts->operations_.size());
  for (std::size_t i : order) {
    const Entry& e = entries[i];
    std::uint32_t id = ts->labels_.add(e.name, e.arity);
    switch (e.kind) {
      case 0: ts->s_label_ = id; break;
      case 1: ts->z_label_ = id; break;
      case 2: ts->constant_labels_[e.pos] = id; break;
      case 3: ts->operation_labels_[e.pos] = id; break;
    }
  }

  TermStructure* raw = ts.get();

  // Index-level operation table. Generated-sort operations rewrap the
  // argument indices under their own label; substructure operations unwrap
  // numerals, apply the substructure's index-level op, and rewrap.
  for (std::size_t i = 0; i < ts->operations_.size(); ++i) {
    const OperationSpec& op = ts->operations_[i];
    OpEntry entry;
    entry.name = op.name;
    entry.arg_sorts = op.arg_sorts;
    entry.result_sort = Sort::Main;
    std::uint32_t label = ts->operation_labels_[i];
    entry.apply = [raw, label](std::span<const Index> args) { return raw->wrap(label, args); };
    entry.eval = op.eval;
    ts->op_table_.push_back(std::move(entry));
  }
  for (const auto& name : spec.lifted_scalar_ops) {
    if (!ts->scalar_structure_)
      throw Error("'" + ts->name_ + "' lifts scalar ops but has no scalar substructure");
    const OpEntry* inner = ts->scalar_structure_->find_op(name);
    if (!inner)
      throw Error("scalar structure has no op '" + name + "' to lift into '" + ts->name_ + "'");
    OpEntry entry;
    entry.name = "K." + name;
    entry.arg_sorts.assign(inner->arg_sorts.size(), Sort::Scalar);
    entry.result_sort = Sort::Scalar;
    entry.eval = inner->eval;
    entry.apply = [raw, inner](std::span<const Index> args) {
      std::vector<Index> unwrapped;
      unwrapped.reserve(args.size());
      for (const Index& a : args) {
        auto h = raw->as_numeral(a);
        if (!h) throw DecodeError("scalar argument is not a numeral");
        unwrapped.push_back(*h);
      }
      return raw->make_numeral(inner->apply(unwrapped));
    };
    ts->op_table_.push_back(std::move(entry));
  }

  if (spec.custom_enumerator) {
    ts->lane_ = spec.custom_enumerator(*ts);
  } else if (spec.canonical_lane) {
    Lane canon = spec.canonical_lane(*ts);
    ts->lane_ = [raw, canon](std::uint64_t z) {
      return z % 2 == 0 ? canon(z / 2) : raw->all_terms_lane(z / 2);
    };
  } else {
    ts->lane_ = [raw](std::uint64_t z) { return raw->all_terms_lane(z); };
  }

  ts->main_.tag = ts->name_;
  ts->main_.enumerate = memoize_enumerator([raw](std::uint64_t z) { return raw->lane_(z); });
  ts->main_.decode = [raw](const Index& x) { return raw->denote(x); };
  ts->main_.eq = [raw](const Index& x, const Index& y) {
    return value_eq(raw->denote(x), raw->denote(y));
  };

  if (ts->scalar_structure_) {
    Indexing sc;
    sc.tag = ts->name_ + "/scalar";
    sc.enumerate = memoize_enumerator([raw](std::uint64_t z) {
      return raw->make_numeral(raw->scalar_structure_->main().enumerate(z));
    });
    sc.decode = [raw](const Index& x) {
      auto h = raw->as_numeral(x);
      if (!h) throw DecodeError("not a scalar numeral");
      return raw->scalar_structure_->main().decode(*h);
    };
    sc.eq = [raw](const Index& x, const Index& y) {
      auto hx = raw->as_numeral(x), hy = raw->as_numeral(y);
      if (!hx || !hy) throw DecodeError("not a scalar numeral");
      return raw->scalar_structure_->main().eq(*hx, *hy);
    };
    ts->scalar_sort_ = std::move(sc);
  }
  return ts;
}

const TermStructure::ConstantSpec* TermStructure::constant(std::uint32_t label) const {
  for (std::size_t i = 0; i < constant_labels_.size(); ++i)
    if (constant_labels_[i] == label) return &constants_[i];
  return nullptr;
}

Index TermStructure::wrap(std::uint32_t label, std::span<const Index> children) const {
  if (labels_.arity(label) != children.size())
    throw Error("arity mismatch wrapping '" + labels_.name(label) + "'");
  Index tail = Index::lit(0);
  for (std::size_t i = children.size(); i-- > 0;) tail = Index::pair(children[i], tail);
  return Index::pair(Index::lit(label), tail);
}

Index TermStructure::constant_index(const std::string& name) const {
  return wrap(labels_.id_of(name), {});
}

Index TermStructure::make_numeral(const Index& scalar_index) const {
  if (!scalar_structure_)
    throw Error("structure '" + name_ + "' has no scalar numerals");
  return Index::numeral(s_label_, z_label_, scalar_index);
}

std::optional<Index> TermStructure::as_numeral(const Index& x) const {
  if (!scalar_structure_) return std::nullopt;
  std::uint64_t steps = 0;
  Index cur = x;
  while (true) {
    if (cur.kind() == Index::Kind::Num && cur.num_s() == s_label_ && cur.num_z() == z_label_) {
      Index h = cur.num_height();
      for (std::uint64_t i = 0; i < steps; ++i) h = h.inc();
      return h;
    }
    std::pair<Index, Index> parts;
    try {
      parts = cur.unpair();
    } catch (const DecodeError&) {
      return std::nullopt;
    }
    if (!parts.first.is_lit()) return std::nullopt;
    const Natural& head = parts.first.lit_value();
    if (head == z_label_ && parts.second.is_zero()) {
      Index h = Index::lit(steps);
      return h;
    }
    if (head == s_label_) {
      std::pair<Index, Index> tail;
      try {
        tail = parts.second.unpair();
      } catch (const DecodeError&) {
        return std::nullopt;
      }
      if (!tail.second.is_zero()) return std::nullopt;
      ++steps;
      cur = tail.first;
      continue;
    }
    return std::nullopt;
  }
}

TermShape TermStructure::classify(const Index& x) const {
  if (scalar_structure_) {
    if (auto h = as_numeral(x)) {
      TermShape shape;
      shape.kind = TermShape::Kind::Numeral;
      shape.scalar_index = *h;
      return shape;
    }
  }
  std::pair<Index, Index> parts;
  try {
    parts = x.unpair();
  } catch (const DecodeError&) {
    throw DecodeError("index 0 codes no term");
  }
  if (!parts.first.is_lit() || parts.first.lit_value() >= labels_.size())
    throw DecodeError("unknown symbol id in '" + name_ + "' index");
  auto label = parts.first.lit_value().convert_to<std::uint32_t>();
  std::uint32_t arity = labels_.arity(label);
  TermShape shape;
  shape.op = labels_.name(label);
  if (arity == 0) {
    if (!parts.second.is_zero())
      throw DecodeError("trailing entries after constant '" + shape.op + "'");
    shape.kind = TermShape::Kind::Atom;
    return shape;
  }
  shape.kind = TermShape::Kind::Compound;
  Index rest = parts.second;
  for (std::uint32_t k = 0; k < arity; ++k) {
    if (rest.is_zero())
      throw DecodeError("'" + shape.op + "' expects " + std::to_string(arity) + " children");
    auto [child, tail] = rest.unpair();
    shape.children.push_back(child);
    rest = tail;
  }
  if (!rest.is_zero()) throw DecodeError("trailing entries after '" + shape.op + "'");
  return shape;
}

Value TermStructure::denote(const Index& x) const {
  constexpr std::size_t kDenoteCacheMax = 400000;
  struct Frame {
    Index self;
    const OperationSpec* op;
    std::vector<Index> children;
    std::size_t next = 0;
    std::vector<Value> done;
  };
  std::vector<Frame> stack;
  std::optional<Value> ret;
  auto& cache = *denote_cache_;

  auto cache_find = [&](const Index& idx) -> std::optional<Value> {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.map.find(idx.node_id());
    if (it != cache.map.end()) return it->second.second;
    return std::nullopt;
  };
  auto cache_put = [&](const Index& idx, const Value& v) {
    std::lock_guard<std::mutex> lock(cache.mu);
    if (cache.map.size() < kDenoteCacheMax)
      cache.map.emplace(idx.node_id(), std::make_pair(idx, v));
  };

  auto eval_or_push = [&](const Index& idx) {
    if (auto hit = cache_find(idx)) {
      ret = std::move(*hit);
      return;
    }
    TermShape shape = classify(idx);
    switch (shape.kind) {
      case TermShape::Kind::Numeral:
        ret = scalar_structure_->main().decode(shape.scalar_index);
        return;
      case TermShape::Kind::Atom: {
        const ConstantSpec* c = constant(labels_.id_of(shape.op));
        if (!c) throw DecodeError("'" + shape.op + "' is not a constant of '" + name_ + "'");
        ret = c->value;
        return;
      }
      case TermShape::Kind::Compound: {
        const OperationSpec* op = nullptr;
        for (std::size_t i = 0; i < operations_.size(); ++i)
          if (operations_[i].name == shape.op) op = &operations_[i];
        if (!op) throw DecodeError("'" + shape.op + "' is not an operation of '" + name_ + "'");
        stack.push_back(Frame{idx, op, std::move(shape.children), 0, {}});
        return;
      }
    }
  };

  eval_or_push(x);
  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (ret) {
      frame.done.push_back(std::move(*ret));
      ret.reset();
    }
    if (frame.next < frame.children.size()) {
      Index child = frame.children[frame.next++];
      eval_or_push(child);
      continue;
    }
    try {
      ret = frame.op->eval(frame.done);
    } catch (const std::bad_variant_access&) {
      throw DecodeError("ill-sorted arguments to '" + frame.op->name + "'");
    } catch (const DivisionByZero& e) {
      throw DecodeError(std::string("denotation undefined: ") + e.what());
    }
    cache_put(frame.self, *ret);
    stack.pop_back();
  }
  return std::move(*ret);
}

Index TermStructure::canonical_index(const Value& v) const {
  if (!canonicalizer_) throw Error("structure '" + name_ + "' has no canonical form");
  return canonicalizer_(*this, v);
}

std::string TermStructure::render(const Index& x) const {
  TermShape shape = classify(x);
  switch (shape.kind) {
    case TermShape::Kind::Numeral: {
      Index h = shape.scalar_index;
      std::string hs = h.is_lit() ? h.lit_value().str() : "[" + h.str() + "]";
      return "S^" + hs + "(0)";
    }
    case TermShape::Kind::Atom:
      return shape.op;
    case TermShape::Kind::Compound: {
      std::string out = shape.op + "(";
      for (std::size_t i = 0; i < shape.children.size(); ++i) {
        if (i) out += ",";
        out += render(shape.children[i]);
      }
      return out + ")";
    }
  }
  return {};
}

Index TermStructure::all_terms_lane(std::uint64_t k) const {
  auto& st = *lane_state_;
  std::lock_guard<std::mutex> lock(st.mu);
  (void)k;
  while (st.pending.empty()) {
    std::uint64_t w = st.next_weight++;
    if (w > 64) throw Error("term enumeration prefix exhausted (weight cap)");
    // Build the admitted main-sort terms of weight w. Weight counts nodes
    // plus, for each scalar numeral, the rank of its scalar index.
    if (st.by_weight.size() <= w) st.by_weight.resize(w + 1);
    std::vector<Index>& out = st.by_weight[w];
    if (w == 1)
      for (std::uint32_t label : constant_labels_) out.push_back(wrap(label, {}));
    for (std::size_t i = 0; i < operations_.size(); ++i) {
      const OperationSpec& op = operations_[i];
      std::size_t arity = op.arg_sorts.size();
      if (arity == 0 || w < 1 + arity) continue;
      std::vector<std::uint64_t> current;
      compositions(w - 1, arity, current, [&](const std::vector<std::uint64_t>& parts) {
        // Cartesian product of per-argument candidate lists.
        std::vector<std::vector<Index>> cands(arity);
        for (std::size_t a = 0; a < arity; ++a) {
          if (op.arg_sorts[a] == Sort::Scalar) {
            cands[a] = {make_numeral(scalar_structure_->main().enumerate(parts[a] - 1))};
          } else {
            cands[a] = st.by_weight[parts[a]];  // built at lower weights
          }
          if (cands[a].empty()) return;
        }
        std::vector<std::size_t> pick(arity, 0);
        while (true) {
          std::vector<Index> args;
          args.reserve(arity);
          for (std::size_t a = 0; a < arity; ++a) args.push_back(cands[a][pick[a]]);
          out.push_back(wrap(operation_labels_[i], args));
          std::size_t a = arity;
          bool done = true;
          while (a-- > 0) {
            if (++pick[a] < cands[a].size()) {
              done = false;
              break;
            }
            pick[a] = 0;
          }
          if (done) break;
        }
      });
    }
    // Admit only denotable terms; anything containing them stays denotable.
    std::vector<Index> admitted;
    for (const Index& t : out) {
      try {
        denote(t);
        admitted.push_back(t);
      } catch (const DecodeError&) {
      }
    }
    out = admitted;
    for (const Index& t : out) st.pending.push_back(t);
  }
  Index next = st.pending.front();
  st.pending.pop_front();
  return next;
}

}  // namespace et
