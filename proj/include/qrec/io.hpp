#pragma once

#include <string>
#include <vector>

#include "qrec/errors.hpp"
#include "qrec/ore.hpp"

namespace qrec {

// JSON container mirroring the on-disk format: polynomial entries are
// expression strings in t, matrices[j] multiplies y(q^j t).
struct SystemDocument {
  Rational q;
  int nu = 0;
  int order = 0;
  int dim = 0;
  std::vector<std::vector<std::vector<std::string>>> matrices;
  std::vector<std::string> rhs;
};

// Recursive-descent parser for polynomial expressions in t.
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*        (juxtaposition multiplies)
//   factor := base ('^' nonneg-int)?
//   base   := rational-literal | 't' | '(' expr ')'
//   rational-literal := digits ('/' digits)?
// Whitespace is insignificant.  Throws ParseError with a 1-based column.
TPoly parse_poly(const std::string& text);

// Canonical rendering: descending powers, explicit signs, no '*'.
std::string render_poly(const TPoly& p);
std::string render_sigma_poly(const SigmaPoly& p);

// Ascending coefficient strings ("p" or "p/q"); empty for the zero polynomial.
std::vector<std::string> coeff_strings(const TPoly& p);
std::vector<std::string> coeff_strings(const SigmaPoly& p);

QRecSystem system_from_document(const SystemDocument& doc);
SystemDocument document_from_system(const QRecSystem& sys);

// Full document text (JSON) -> system; errors carry positions where known.
QRecSystem parse_system(const std::string& json_text);

// Canonical JSON rendering; parse_system(render_system(s)) == s.
std::string render_system(const QRecSystem& sys);

}  // namespace qrec
