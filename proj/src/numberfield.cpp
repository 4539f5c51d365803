#include "et/numberfield.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace et {

namespace {

// Coefficient vectors (constant first) reduced modulo the monic min poly.
using Poly = std::vector<Rational>;

// Multiply by x and reduce: degree stays < d.
Poly shift_mod(const Poly& p, const Poly& min_poly, std::size_t d) {
  Poly out(d);
  for (std::size_t i = 0; i + 1 < d; ++i) out[i + 1] = p[i];
  const Rational& top = p[d - 1];
  if (!top.is_zero())
    for (std::size_t i = 0; i < d; ++i) out[i] -= top * min_poly[i];
  return out;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& min_poly, std::size_t d) {
  Poly acc(d);
  Poly xa = a;
  for (std::size_t j = 0; j < d; ++j) {
    if (!b[j].is_zero())
      for (std::size_t i = 0; i < d; ++i) acc[i] += b[j] * xa[i];
    if (j + 1 < d) xa = shift_mod(xa, min_poly, d);
  }
  return acc;
}

// All roots of a monic polynomial, Durand-Kerner. Display precision only.
std::vector<std::complex<double>> poly_roots(const std::vector<Rational>& coeffs) {
  std::size_t d = coeffs.size() - 1;
  std::vector<std::complex<double>> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = coeffs[i].to_double();
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (std::size_t i = d + 1; i-- > 0;) v = v * x + c[i];
    return v;
  };
  std::vector<std::complex<double>> roots(d);
  for (std::size_t i = 0; i < d; ++i)
    roots[i] = std::pow(std::complex<double>(0.4, 0.9), static_cast<double>(i + 1));
  for (int iter = 0; iter < 200; ++iter) {
    double moved = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den *= roots[i] - roots[j];
      std::complex<double> delta = eval(roots[i]) / den;
      roots[i] -= delta;
      moved += std::abs(delta);
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

}  // namespace

NumberField::Ptr NumberField::from_min_poly(std::vector<Rational> coeffs,
                                            std::optional<std::uint64_t> conj_root_power,
                                            std::string name) {
  if (coeffs.size() < 2) throw InvalidField("minimal polynomial must have degree >= 1");
  if (!(coeffs.back() == Rational(1))) throw InvalidField("minimal polynomial must be monic");
  std::size_t d = coeffs.size() - 1;

  auto field = std::shared_ptr<NumberField>(new NumberField());
  field->degree_ = d;
  field->min_poly_ = coeffs;
  field->conj_power_ = conj_root_power;
  field->name_ = name.empty() ? "deg" + std::to_string(d) : std::move(name);
  for (std::size_t p = 0; p < d; ++p)
    field->basis_labels_.push_back(p == 0 ? "e0" : "e" + std::to_string(p));

  // Powers of the root up to x^(2d-2) reduced mod the polynomial give the
  // structure constants for the power basis.
  std::vector<Poly> powers(2 * d - 1, Poly(d));
  powers[0][0] = Rational(1);
  for (std::size_t k = 1; k < 2 * d - 1; ++k) powers[k] = shift_mod(powers[k - 1], coeffs, d);
  field->constants_.assign(d * d * d, Rational());
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t r = 0; r < d; ++r)
        field->constants_[(p * d + q) * d + r] = powers[p + q][r];

  if (conj_root_power && d == 1) {
    field->conjugation_ = {{Rational(1)}};  // the identity is the only choice on Q
  } else if (conj_root_power) {
    Poly alpha_image(d);
    if (*conj_root_power < d) {
      alpha_image[*conj_root_power] = Rational(1);
    } else {
      alpha_image = powers[1];
      Poly x(d);
      x[1] = Rational(1);
      for (std::uint64_t k = 1; k < *conj_root_power; ++k)
        alpha_image = mul_mod(alpha_image, x, coeffs, d);
    }
    // Substituting the image for the root is a ring map only if the image is
    // itself a root of the minimal polynomial.
    Poly value(d);
    Poly beta_pow(d);
    beta_pow[0] = Rational(1);
    for (std::size_t i = 0; i <= d; ++i) {
      if (!coeffs[i].is_zero())
        for (std::size_t r = 0; r < d; ++r) value[r] += coeffs[i] * beta_pow[r];
      if (i < d) beta_pow = mul_mod(beta_pow, alpha_image, coeffs, d);
    }
    for (std::size_t r = 0; r < d; ++r)
      if (!value[r].is_zero())
        throw InvalidField("root^" + std::to_string(*conj_root_power) +
                           " is not a root of the minimal polynomial");
    field->conjugation_.resize(d, Poly(d));
    field->conjugation_[0][0] = Rational(1);
    for (std::size_t j = 1; j < d; ++j)
      field->conjugation_[j] = mul_mod(field->conjugation_[j - 1], alpha_image, coeffs, d);
    // The table must be an involution to qualify as a conjugation.
    for (std::size_t j = 0; j < d; ++j) {
      Poly twice(d);
      for (std::size_t p = 0; p < d; ++p)
        if (!field->conjugation_[j][p].is_zero())
          for (std::size_t r = 0; r < d; ++r)
            twice[r] += field->conjugation_[j][p] * field->conjugation_[p][r];
      for (std::size_t r = 0; r < d; ++r)
        if (!(twice[r] == (r == j ? Rational(1) : Rational(0))))
          throw InvalidField("conjugation power " + std::to_string(*conj_root_power) +
                             " is not an involution");
    }
  }

  // Numeric embedding: the root with the smallest non-negative argument.
  if (d == 1) {
    field->embedding_ = {std::complex<double>(1, 0)};
  } else {
    auto roots = poly_roots(coeffs);
    std::complex<double> best = roots[0];
    double best_arg = 1e9;
    for (auto r : roots) {
      double arg = std::arg(r);
      if (arg < -1e-12) continue;
      if (arg < best_arg) {
        best_arg = arg;
        best = r;
      }
    }
    if (best_arg > 1e8) best = roots[0];
    field->embedding_.resize(d);
    field->embedding_[0] = 1;
    for (std::size_t p = 1; p < d; ++p) field->embedding_[p] = field->embedding_[p - 1] * best;
  }
  return field;
}

const std::vector<Rational>& NumberField::conjugate_basis(std::size_t p) const {
  if (conjugation_.empty()) throw Error("field '" + name_ + "' has no conjugation table");
  return conjugation_[p];
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(degree_));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& r) const {
  std::vector<Rational> coords(degree_);
  coords[0] = r;
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::basis_element(std::size_t p) const {
  std::vector<Rational> coords(degree_);
  coords.at(p) = Rational(1);
  return FieldElement(shared_from_this(), std::move(coords));
}

NumberField::Ptr NumberField::with_corrupted_constant(const Ptr& field, std::size_t p,
                                                      std::size_t q, std::size_t r,
                                                      const Rational& value) {
  auto copy = std::shared_ptr<NumberField>(new NumberField(*field));
  copy->constants_[(p * copy->degree_ + q) * copy->degree_ + r] = value;
  copy->name_ = field->name_ + "-corrupted";
  return copy;
}

FieldElement::FieldElement(NumberField::Ptr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree())
    throw Error("expected " + std::to_string(field_->degree()) + " coordinates, got " +
                std::to_string(coords_.size()));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t p = 1; p < coords_.size(); ++p)
    if (!coords_[p].is_zero()) return false;
  return true;
}

std::complex<double> FieldElement::embed() const {
  std::complex<double> v = 0;
  for (std::size_t p = 0; p < coords_.size(); ++p)
    v += coords_[p].to_double() * field_->embed_basis(p);
  return v;
}

std::string FieldElement::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  os << '(';
  for (std::size_t p = 0; p < x.coords_.size(); ++p) {
    if (p) os << ", ";
    os << x.coords_[p];
  }
  return os << ')';
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b, const char* op) {
  if (a.field() != b.field())
    throw FieldMismatch(std::string(op) + ": elements of different fields ('" +
                        a.field()->name() + "' vs '" + b.field()->name() + "')");
}
}  // namespace

FieldElement nf_add(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b, "nf_add");
  std::vector<Rational> coords(a.coords().size());
  for (std::size_t p = 0; p < coords.size(); ++p) coords[p] = a.coord(p) + b.coord(p);
  return FieldElement(a.field(), std::move(coords));
}

FieldElement nf_sub(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b, "nf_sub");
  std::vector<Rational> coords(a.coords().size());
  for (std::size_t p = 0; p < coords.size(); ++p) coords[p] = a.coord(p) - b.coord(p);
  return FieldElement(a.field(), std::move(coords));
}

FieldElement nf_neg(const FieldElement& a) {
  std::vector<Rational> coords(a.coords().size());
  for (std::size_t p = 0; p < coords.size(); ++p) coords[p] = -a.coord(p);
  return FieldElement(a.field(), std::move(coords));
}

FieldElement nf_scale(const Rational& s, const FieldElement& a) {
  std::vector<Rational> coords(a.coords().size());
  for (std::size_t p = 0; p < coords.size(); ++p) coords[p] = s * a.coord(p);
  return FieldElement(a.field(), std::move(coords));
}

FieldElement nf_mul(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b, "nf_mul");
  const auto& field = *a.field();
  std::size_t d = field.degree();
  std::vector<Rational> coords(d);
  for (std::size_t p = 0; p < d; ++p) {
    if (a.coord(p).is_zero()) continue;
    for (std::size_t q = 0; q < d; ++q) {
      if (b.coord(q).is_zero()) continue;
      Rational pq = a.coord(p) * b.coord(q);
      for (std::size_t r = 0; r < d; ++r) {
        const Rational& m = field.structure_constant(p, q, r);
        if (!m.is_zero()) coords[r] += pq * m;
      }
    }
  }
  return FieldElement(a.field(), std::move(coords));
}

FieldElement nf_inverse(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in '" + a.field()->name() + "'");
  const auto& field = *a.field();
  std::size_t d = field.degree();
  // Solve M x = e_0 where M is multiplication by a: M[r][q] = sum_p a_p m[p][q][r].
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t p = 0; p < d; ++p)
        if (!a.coord(p).is_zero()) m[r][q] += a.coord(p) * field.structure_constant(p, q, r);
    m[r][d] = (r == 0) ? Rational(1) : Rational(0);
  }
  // Exact Gaussian elimination.
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col].is_zero()) ++pivot;
    if (pivot == d)
      throw InvalidField("structure constants of '" + field.name() +
                         "' do not define a field (singular multiplication)");
    std::swap(m[col], m[pivot]);
    Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j <= d; ++j) m[col][j] *= inv;
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational f = m[row][col];
      for (std::size_t j = col; j <= d; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> coords(d);
  for (std::size_t q = 0; q < d; ++q) coords[q] = m[q][d];
  return FieldElement(a.field(), std::move(coords));
}

FieldElement nf_div(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b, "nf_div");
  return nf_mul(a, nf_inverse(b));
}

FieldElement nf_conj(const FieldElement& a) {
  const auto& field = *a.field();
  if (!field.has_conjugation())
    throw Error("field '" + field.name() + "' has no conjugation table");
  std::size_t d = field.degree();
  std::vector<Rational> coords(d);
  for (std::size_t p = 0; p < d; ++p) {
    if (a.coord(p).is_zero()) continue;
    const auto& image = field.conjugate_basis(p);
    for (std::size_t r = 0; r < d; ++r)
      if (!image[r].is_zero()) coords[r] += a.coord(p) * image[r];
  }
  return FieldElement(a.field(), std::move(coords));
}

bool nf_eq(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b, "nf_eq");
  return a.coords() == b.coords();
}

NumberField::Ptr parse_field_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Rational> coeffs;
  std::optional<std::uint64_t> conj;
  std::string name;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "minpoly:") {
      std::string tok;
      while (ls >> tok) coeffs.push_back(Rational::parse(tok));
    } else if (key == "conj:") {
      std::uint64_t k;
      if (!(ls >> k)) throw ParseError("conj expects a natural number", line_no);
      conj = k;
    } else if (key == "name:") {
      ls >> name;
    } else {
      throw ParseError("unknown field-file key '" + key + "'", line_no);
    }
  }
  if (coeffs.empty()) throw ParseError("field file has no 'minpoly:' line");
  return NumberField::from_min_poly(std::move(coeffs), conj, std::move(name));
}

NumberField::Ptr load_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open field file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_field_file(buffer.str());
}

std::string field_file_text(const NumberField& field) {
  std::ostringstream os;
  os << "name: " << field.name() << "\nminpoly:";
  for (const auto& c : field.min_poly()) os << ' ' << c;
  os << '\n';
  if (field.conj_root_power()) os << "conj: " << *field.conj_root_power() << '\n';
  return os.str();
}

FieldElement parse_field_element(const NumberField::Ptr& field, const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in element tuple");
  ++i;
  std::vector<Rational> coords;
  while (true) {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && text[i] != ')') ++i;
    if (i >= text.size()) throw ParseError("unterminated element tuple");
    std::string tok = text.substr(start, i - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    coords.push_back(Rational::parse(tok));
    if (text[i] == ')') {
      ++i;
      break;
    }
    ++i;
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing input after element tuple");
  return field->element(std::move(coords));
}

}  // namespace et
