#include "et/tensor.hpp"

#include <cctype>
#include <sstream>

namespace et {

Alphabet::Ptr Alphabet::make(std::vector<std::string> generators) {
  if (generators.empty()) throw Error("alphabet must be nonempty");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j])
        throw Error("duplicate generator '" + generators[i] + "'");
  return Ptr(new Alphabet(std::move(generators)));
}

std::optional<std::size_t> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return i;
  return std::nullopt;
}

BasisWord::BasisWord(Alphabet::Ptr alphabet, std::vector<std::uint32_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("basis word must be nonempty");
  for (auto l : letters_)
    if (l >= alphabet_->size()) throw Error("letter id out of range");
}

Natural BasisWord::rank() const {
  // Words of length < n come first: g + g^2 + ... + g^(n-1) of them; within a
  // length, lexicographic order is base-g numbering.
  Natural g(alphabet_->size());
  Natural before(0), block(1);
  for (std::size_t len = 1; len < letters_.size(); ++len) {
    block *= g;
    before += block;
  }
  Natural offset(0);
  for (auto l : letters_) offset = offset * g + l;
  return before + offset;
}

BasisWord BasisWord::from_rank(const Alphabet::Ptr& alphabet, const Natural& rank) {
  Natural g(alphabet->size());
  Natural before(0), block(1);
  std::size_t len = 1;
  while (true) {
    block *= g;
    if (before + block > rank) break;
    before += block;
    ++len;
  }
  Natural offset = rank - before;
  std::vector<std::uint32_t> letters(len);
  for (std::size_t i = len; i-- > 0;) {
    letters[i] = static_cast<std::uint32_t>(offset % g);
    offset /= g;
  }
  return BasisWord(alphabet, std::move(letters));
}

BasisWord BasisWord::concat(const BasisWord& other) const {
  std::vector<std::uint32_t> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return BasisWord(alphabet_, std::move(letters));
}

std::string BasisWord::str() const {
  std::string s = "|";
  for (auto l : letters_) s += alphabet_->generator(l);
  return s + ">";
}

TensorVector::TensorVector(Alphabet::Ptr alphabet, NumberField::Ptr field)
    : alphabet_(std::move(alphabet)), field_(std::move(field)) {}

TensorVector TensorVector::zero(Alphabet::Ptr alphabet, NumberField::Ptr field) {
  return TensorVector(std::move(alphabet), std::move(field));
}

TensorVector TensorVector::basis(const BasisWord& word, const NumberField::Ptr& field) {
  return single(word, field->one());
}

TensorVector TensorVector::single(const BasisWord& word, const FieldElement& coeff) {
  TensorVector v(word.alphabet(), coeff.field());
  v.accumulate(word, coeff);
  return v;
}

FieldElement TensorVector::coefficient(const BasisWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? field_->zero() : it->second;
}

void TensorVector::accumulate(const BasisWord& word, const FieldElement& c) {
  if (c.field() != field_) throw FieldMismatch("coefficient from a different field");
  if (c.is_zero()) return;
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(word, c);
    return;
  }
  FieldElement sum = nf_add(it->second, c);
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

std::string TensorVector::str() const { return tensor_text(*this); }

namespace {
void check_compatible(const TensorVector& u, const TensorVector& v, const char* op) {
  if (u.field() != v.field())
    throw FieldMismatch(std::string(op) + ": vectors over different fields");
  if (u.alphabet() != v.alphabet())
    throw FieldMismatch(std::string(op) + ": vectors over different alphabets");
}
}  // namespace

TensorVector tv_add(const TensorVector& u, const TensorVector& v) {
  check_compatible(u, v, "tv_add");
  TensorVector out = u;
  for (const auto& [word, coeff] : v.terms()) out.accumulate(word, coeff);
  return out;
}

TensorVector tv_sub(const TensorVector& u, const TensorVector& v) {
  check_compatible(u, v, "tv_sub");
  TensorVector out = u;
  for (const auto& [word, coeff] : v.terms()) out.accumulate(word, nf_neg(coeff));
  return out;
}

TensorVector tv_scale(const FieldElement& s, const TensorVector& v) {
  if (s.field() != v.field()) throw FieldMismatch("tv_scale: scalar from a different field");
  TensorVector out(v.alphabet(), v.field());
  if (s.is_zero()) return out;
  for (const auto& [word, coeff] : v.terms()) out.accumulate(word, nf_mul(s, coeff));
  return out;
}

TensorVector tv_tensor(const TensorVector& u, const TensorVector& v) {
  check_compatible(u, v, "tv_tensor");
  TensorVector out(u.alphabet(), u.field());
  for (const auto& [uw, uc] : u.terms())
    for (const auto& [vw, vc] : v.terms()) out.accumulate(uw.concat(vw), nf_mul(uc, vc));
  return out;
}

bool tv_eq(const TensorVector& u, const TensorVector& v) {
  check_compatible(u, v, "tv_eq");
  if (u.terms().size() != v.terms().size()) return false;
  auto it = u.terms().begin();
  auto jt = v.terms().begin();
  for (; it != u.terms().end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (!nf_eq(it->second, jt->second)) return false;
  }
  return true;
}

std::string tensor_text(const TensorVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, coeff] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(';
    for (std::size_t p = 0; p < coeff.coords().size(); ++p) {
      if (p) os << ',';
      os << coeff.coord(p);
    }
    os << ')' << word.str();
  }
  return os.str();
}

TensorVector parse_tensor_text(const Alphabet::Ptr& alphabet, const NumberField::Ptr& field,
                               const std::string& text) {
  TensorVector v(alphabet, field);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return v;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in state text");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unterminated coefficient tuple");
    FieldElement coeff = parse_field_element(field, text.substr(i, close - i + 1));
    i = close + 1;
    skip_ws();
    if (i >= text.size() || text[i] != '|') throw ParseError("expected '|' after coefficient");
    ++i;
    std::vector<std::uint32_t> letters;
    while (i < text.size() && text[i] != '>') {
      std::string name(1, text[i]);
      auto gen = alphabet->find(name);
      if (!gen) throw ParseError("unknown generator '" + name + "'");
      letters.push_back(static_cast<std::uint32_t>(*gen));
      ++i;
    }
    if (i >= text.size()) throw ParseError("unterminated ket");
    ++i;
    v.accumulate(BasisWord(alphabet, std::move(letters)), coeff);
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '+') throw ParseError("expected '+' between summands");
      ++i;
    }
  }
  return v;
}

}  // namespace et
