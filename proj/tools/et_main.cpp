// Command-line front end: exact circuit simulation, encoding round-trips,
// translator and stability demos, and the rational enumerator.

#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "et/qsim.hpp"
#include "et/registry.hpp"

using namespace et;

namespace {

SearchBudget budget_from(std::uint64_t flag_value) {
  if (flag_value > 0) return SearchBudget{flag_value};
  return default_budget();
}

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-12, 12);
  std::uniform_int_distribution<long long> den(1, 9);
  return Rational(Natural(num(rng)), Natural(den(rng)));
}

FieldElement random_element(const NumberField::Ptr& field, std::mt19937_64& rng) {
  std::vector<Rational> coords(field->degree());
  for (auto& c : coords) c = random_small_rational(rng);
  return field->element(std::move(coords));
}

int cmd_simulate(const std::string& path, const std::string& initial, bool probs) {
  Circuit circuit = load_circuit_file(path);
  std::string start = initial.empty() ? std::string(circuit.qubits, '0') : initial;
  TensorVector state = run_circuit(circuit, parse_qubit_word(start));
  std::cout << state.str() << "\n";
  if (probs) std::cout << probabilities(state).str() << "\n";
  return 0;
}

int cmd_index_encode(const std::string& structure, const std::string& term) {
  auto ts = registry_get_term(structure);
  TermTree tree = parse_term_text(ts->labels(), term);
  Index idx = encode_tree(ts->labels(), tree);
  try {
    std::cout << idx.to_natural().str() << "\n";
  } catch (const Error&) {
    std::cout << idx.str() << "\n";  // too large to print in decimal
  }
  std::cerr << "decodes to: " << value_str(ts->main().decode(idx)) << "\n";
  return 0;
}

int cmd_index_decode(const std::string& structure, const std::string& number) {
  auto ts = registry_get_term(structure);
  Index idx = Index::lit(Natural(number));
  TermTree tree = decode_tree(ts->labels(), idx);
  std::cout << term_text(ts->labels(), tree) << "\n";
  std::cerr << "denotes: " << value_str(ts->main().decode(idx)) << "\n";
  return 0;
}

int cmd_index_translate(const std::string& structure, std::string target_name,
                        const std::string& term, SearchBudget budget) {
  auto source = registry_get_term(structure);
  if (target_name.empty()) {
    auto variant = registry_variant(structure);
    if (!variant) throw Error("no default translation target for '" + structure + "'");
    target_name = *variant;
  }
  auto target = registry_get_term(target_name);
  TermTree tree = parse_term_text(source->labels(), term);
  Index x = encode_tree(source->labels(), tree);
  Translator tr = build_translator(source, target, {}, budget);
  Index y = tr.map(x);
  std::cout << target->render(y) << "\n";
  Value sv = source->main().decode(x);
  Value tv = target->main().decode(y);
  std::cerr << "source denotes " << value_str(sv) << ", target denotes " << value_str(tv)
            << (value_eq(sv, tv) ? " (translator law holds)" : " (LAW VIOLATED)") << "\n";
  return value_eq(sv, tv) ? 0 : 1;
}

int cmd_index_audit(const std::string& structure, std::uint64_t samples) {
  auto view = registry_get(structure);
  AdmissibilityReport report = check_admissible(*view, samples);
  std::cout << report.summary() << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_stability_demo(const std::string& structure, const std::string& permutation,
                       std::uint64_t range, SearchBudget budget) {
  auto base = registry_get_term(structure);
  PermutationOracle oracle = PermutationOracle::identity();
  if (permutation == "adjacent-swap")
    oracle = PermutationOracle::adjacent_swap();
  else if (permutation == "reversal16")
    oracle = PermutationOracle::reversal_on(16);
  else if (permutation != "identity")
    throw Error("unknown permutation '" + permutation + "'");

  StructurePtr permuted = permuted_indexing(base, oracle);
  Translator g = build_translator(permuted, base, {}, budget);

  std::uint64_t audit_count = std::min<std::uint64_t>(range, 100);
  std::uint64_t violations = 0;
  for (std::uint64_t z = 0; z < audit_count; ++z) {
    Index x = permuted->main().enumerate(z);
    if (!value_eq(base->main().decode(g.map(x)), permuted->main().decode(x))) ++violations;
  }
  std::cout << "translator law on " << audit_count << " samples: " << violations
            << " violation(s)\n";

  auto table = extract_permutation(g, *base, range);
  bool match = true;
  for (std::uint64_t p = 0; p < range; ++p) {
    std::cout << p << " -> " << table[p] << "\n";
    if (table[p] != oracle.forward(p)) match = false;
  }
  std::cout << (match ? "recovered permutation = planted" : "MISMATCH with planted permutation")
            << "\n";
  return match && violations == 0 ? 0 : 1;
}

int cmd_enumerate_q(const std::string& field_path, std::uint64_t count, SearchBudget budget) {
  auto field = load_field_file(field_path);
  auto structure = field_structure_for(field);
  RationalEnumerator enumerator(structure, budget);
  for (std::uint64_t i = 0; i < count; ++i) {
    RationalYield y = enumerator.next();
    std::cout << "(" << y.p << "," << y.q << "," << y.r << ") ";
    if (y.skipped()) {
      std::cout << "skipped (budget)\n";
      continue;
    }
    std::string shown;
    try {
      shown = y.index->to_natural(4096).str();
    } catch (const Error&) {
      shown = y.index->str();
    }
    std::cout << shown << " -> " << y.value->str() << "\n";
  }
  return 0;
}

int cmd_field_check(const std::string& field_path, std::uint64_t samples) {
  auto field = load_field_file(field_path);
  std::mt19937_64 rng(20260810);
  struct Axiom {
    std::string name;
    std::function<bool(std::mt19937_64&)> run;
  };
  auto rnd = [&](std::mt19937_64& r) { return random_element(field, r); };
  std::vector<Axiom> axioms = {
      {"add-commutative",
       [&](std::mt19937_64& r) {
         auto a = rnd(r), b = rnd(r);
         return nf_eq(nf_add(a, b), nf_add(b, a));
       }},
      {"mul-commutative",
       [&](std::mt19937_64& r) {
         auto a = rnd(r), b = rnd(r);
         return nf_eq(nf_mul(a, b), nf_mul(b, a));
       }},
      {"add-associative",
       [&](std::mt19937_64& r) {
         auto a = rnd(r), b = rnd(r), c = rnd(r);
         return nf_eq(nf_add(nf_add(a, b), c), nf_add(a, nf_add(b, c)));
       }},
      {"mul-associative",
       [&](std::mt19937_64& r) {
         auto a = rnd(r), b = rnd(r), c = rnd(r);
         return nf_eq(nf_mul(nf_mul(a, b), c), nf_mul(a, nf_mul(b, c)));
       }},
      {"distributive",
       [&](std::mt19937_64& r) {
         auto a = rnd(r), b = rnd(r), c = rnd(r);
         return nf_eq(nf_mul(a, nf_add(b, c)), nf_add(nf_mul(a, b), nf_mul(a, c)));
       }},
      {"mul-inverse",
       [&](std::mt19937_64& r) {
         auto a = rnd(r);
         if (a.is_zero()) return true;
         return nf_eq(nf_mul(a, nf_inverse(a)), field->one());
       }},
  };
  if (field->has_conjugation()) {
    axioms.push_back({"conj-multiplicative", [&](std::mt19937_64& r) {
                        auto a = rnd(r), b = rnd(r);
                        return nf_eq(nf_conj(nf_mul(a, b)), nf_mul(nf_conj(a), nf_conj(b)));
                      }});
    axioms.push_back({"conj-involution", [&](std::mt19937_64& r) {
                        auto a = rnd(r);
                        return nf_eq(nf_conj(nf_conj(a)), a);
                      }});
  }
  bool all_ok = true;
  for (auto& axiom : axioms) {
    std::uint64_t pass = 0;
    std::string witness;
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::mt19937_64 sample_rng(rng());
      bool ok = false;
      try {
        ok = axiom.run(sample_rng);
      } catch (const Error& e) {
        if (witness.empty()) witness = e.what();
      }
      if (ok)
        ++pass;
      else if (witness.empty())
        witness = "sample " + std::to_string(i);
    }
    std::cout << axiom.name << ": " << pass << "/" << samples;
    if (pass != samples) {
      std::cout << "  <- FAIL (" << witness << ")";
      all_ok = false;
    }
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computable-algebra toolkit and quantum-circuit simulator"};
  app.require_subcommand(1);
  std::uint64_t budget_flag = 0;
  app.add_option("--budget", budget_flag, "search budget in steps (default 100000 or ET_BUDGET)");

  auto* simulate = app.add_subcommand("simulate", "run a circuit file exactly");
  std::string circuit_path, initial_word;
  bool probs = false;
  simulate->add_option("circuit", circuit_path, "circuit file")->required();
  simulate->add_option("--initial", initial_word, "initial basis word (default all zeros)");
  simulate->add_flag("--probs", probs, "print the measurement report");

  auto* index = app.add_subcommand("index", "encodings, translators, audits");
  index->require_subcommand(1);
  std::string structure = "q", target, term_or_number;
  std::uint64_t samples = 100;

  auto* encode = index->add_subcommand("encode", "term text -> index");
  encode->add_option("--structure", structure, "structure name")->required();
  encode->add_option("term", term_or_number, "term text, e.g. S(S(0))")->required();

  auto* decode = index->add_subcommand("decode", "index -> term text");
  decode->add_option("--structure", structure, "structure name")->required();
  decode->add_option("index", term_or_number, "index (decimal)")->required();

  auto* translate = index->add_subcommand("translate", "map a term across indexings");
  translate->add_option("--structure", structure, "source structure")->required();
  translate->add_option("--target", target, "target structure (default: the -alt/-rev variant)");
  translate->add_option("term", term_or_number, "term text in the source language")->required();

  auto* audit = index->add_subcommand("audit", "finite-sample admissibility audit");
  audit->add_option("--structure", structure, "structure name")->required();
  audit->add_option("--samples", samples, "tuples per operation");

  auto* stability = app.add_subcommand("stability-demo", "permuted indexing round trip");
  std::string demo_structure = "tensor-q", permutation = "identity";
  std::uint64_t range = 32;
  stability->add_option("--structure", demo_structure, "tensor structure name");
  stability->add_option("--permutation", permutation, "identity|adjacent-swap|reversal16");
  stability->add_option("--range", range, "table range");

  auto* enumq = app.add_subcommand("enumerate-q", "enumerate rational indices in a field");
  std::string field_path;
  std::uint64_t count = 20;
  enumq->add_option("--field", field_path, "field description file")->required();
  enumq->add_option("--count", count, "number of triples");

  auto* fieldcheck = app.add_subcommand("field-check", "field-axiom property run");
  std::string check_path;
  std::uint64_t check_samples = 200;
  fieldcheck->add_option("--field", check_path, "field description file")->required();
  fieldcheck->add_option("--samples", check_samples, "samples per axiom");

  CLI11_PARSE(app, argc, argv);

  try {
    SearchBudget budget = budget_from(budget_flag);
    if (simulate->parsed()) return cmd_simulate(circuit_path, initial_word, probs);
    if (encode->parsed()) return cmd_index_encode(structure, term_or_number);
    if (decode->parsed()) return cmd_index_decode(structure, term_or_number);
    if (translate->parsed())
      return cmd_index_translate(structure, target, term_or_number, budget);
    if (audit->parsed()) return cmd_index_audit(structure, samples);
    if (stability->parsed())
      return cmd_stability_demo(demo_structure, permutation, range, budget);
    if (enumq->parsed()) return cmd_enumerate_q(field_path, count, budget);
    if (fieldcheck->parsed()) return cmd_field_check(check_path, check_samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
