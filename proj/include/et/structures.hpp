#pragma once

#include "et/term_structure.hpp"

namespace et {

/// <N, S>: naturals generated from 0 by successor. Every term is a numeral,
/// so the enumerator lists S^k(0) directly and equality is syntactic.
TermStructurePtr make_nat_s(bool permuted_labels = false);

/// <N, +>: naturals over constants 0, 1 and addition, admitting every term
/// (equality decided by evaluation); the canonical lane lists the right-
/// nested numerals 1+(1+...+(1+0)).
TermStructurePtr make_nat_plus();

/// <Q, +, -, x, />: rationals over constants 0, 1. Admitted terms are all
/// division-safe terms; the canonical lane lists the coprime forms
/// (p - q)/(1 + r) in height order.
TermStructurePtr make_q(bool permuted_labels = false);

/// Canonical index of n in the <N,+> language: 1+(1+...+(1+0)).
Index nat_plus_numeral(const TermStructure& ts, const Natural& n);

/// Canonical index of a rational: (p - q)/(1 + r), coprime, p or q zero.
Index q_canonical_index(const TermStructure& ts, const Rational& v);

}  // namespace et
