#include "qrec/io.hpp"

#include <cctype>

#include <json.hpp>

namespace qrec {

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  TPoly parse() {
    TPoly v = parse_expr();
    skip_ws();
    if (i_ < s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(i_) + 1);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }

  static bool starts_base(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(';
  }

  TPoly parse_expr() {
    const bool negated = eat('-');
    TPoly acc = parse_term();
    if (negated) acc = -acc;
    while (true) {
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  TPoly parse_term() {
    TPoly acc = parse_factor();
    while (true) {
      if (eat('*'))
        acc *= parse_factor();
      else if (starts_base(peek()))
        acc *= parse_factor();
      else
        break;
    }
    return acc;
  }

  TPoly parse_factor() {
    TPoly base = parse_base();
    if (!eat('^')) return base;
    skip_ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail("expected a nonnegative integer exponent");
    const long e = parse_digits().get_si();
    TPoly acc(1);
    for (long k = 0; k < e; ++k) acc *= base;
    return acc;
  }

  TPoly parse_base() {
    const char c = peek();
    if (c == 't') {
      ++i_;
      return TPoly::variable();
    }
    if (c == '(') {
      ++i_;
      TPoly v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = parse_digits();
      if (eat('/')) {
        skip_ws();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
          fail("expected digits after '/'");
        const mpz_class den = parse_digits();
        if (den == 0) fail("zero denominator");
        return TPoly(Rational(num, den));
      }
      return TPoly(Rational(num, 1));
    }
    fail("expected a number, 't' or '('");
  }

  mpz_class parse_digits() {
    skip_ws();
    const size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return mpz_class(s_.substr(start, i_ - start));
  }

  const std::string& s_;
  size_t i_ = 0;
};

TPoly parse_poly_entry(const std::string& text, const std::string& context) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw ParseError(context + ": " + e.raw(), e.line(), e.column());
  }
}

std::pair<int, int> position_of_offset(const std::string& text, size_t offset) {
  int line = 1;
  int col = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

TPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

std::string render_poly(const TPoly& p) { return p.to_string(); }
std::string render_sigma_poly(const SigmaPoly& p) { return p.to_string(); }

namespace {
template <class Tag>
std::vector<std::string> coeff_strings_impl(const BasicPoly<Tag>& p) {
  std::vector<std::string> out;
  if (auto d = p.degree()) {
    out.reserve(static_cast<size_t>(*d) + 1);
    for (int k = 0; k <= *d; ++k) out.push_back(p.coeff(k).str());
  }
  return out;
}
}  // namespace

std::vector<std::string> coeff_strings(const TPoly& p) { return coeff_strings_impl(p); }
std::vector<std::string> coeff_strings(const SigmaPoly& p) { return coeff_strings_impl(p); }

QRecSystem system_from_document(const SystemDocument& doc) {
  if (doc.q.is_zero() || doc.q == Rational(1) || doc.q == Rational(-1))
    throw SemanticError("q must not be a root of unity");
  if (doc.dim < 1) throw SemanticError("system dimension must be at least 1");
  if (doc.order < 0) throw SemanticError("system order must be nonnegative");
  if (doc.nu < 0) throw SemanticError("nu must be nonnegative");
  if (static_cast<int>(doc.matrices.size()) != doc.order + 1)
    throw SemanticError("dimension mismatch: expected " + std::to_string(doc.order + 1) +
                        " coefficient matrices, got " + std::to_string(doc.matrices.size()));
  for (const auto& mat : doc.matrices) {
    if (static_cast<int>(mat.size()) != doc.dim) throw SemanticError("dimension mismatch: matrix is not m x m");
    for (const auto& row : mat)
      if (static_cast<int>(row.size()) != doc.dim) throw SemanticError("dimension mismatch: matrix is not m x m");
  }
  if (static_cast<int>(doc.rhs.size()) != doc.dim)
    throw SemanticError("dimension mismatch: right hand side must have m entries");

  OreMatrix a(doc.q, doc.dim, doc.dim);
  for (int r = 0; r < doc.dim; ++r)
    for (int c = 0; c < doc.dim; ++c) {
      std::vector<TPoly> coeffs;
      coeffs.reserve(static_cast<size_t>(doc.order) + 1);
      for (int j = 0; j <= doc.order; ++j) {
        const std::string ctx = "A[" + std::to_string(j) + "][" + std::to_string(r) + "][" + std::to_string(c) + "]";
        coeffs.push_back(parse_poly_entry(doc.matrices[static_cast<size_t>(j)][static_cast<size_t>(r)][static_cast<size_t>(c)], ctx));
      }
      a.at(r, c) = OrePoly(doc.q, std::move(coeffs));
    }

  std::vector<TPoly> b;
  b.reserve(static_cast<size_t>(doc.dim));
  for (int i = 0; i < doc.dim; ++i)
    b.push_back(parse_poly_entry(doc.rhs[static_cast<size_t>(i)], "b[" + std::to_string(i) + "]"));

  return QRecSystem(std::move(a), std::move(b), doc.nu);
}

SystemDocument document_from_system(const QRecSystem& sys) {
  SystemDocument doc;
  doc.q = sys.q();
  doc.nu = sys.nu;
  doc.order = sys.order();
  doc.dim = sys.dim();
  doc.matrices.assign(static_cast<size_t>(doc.order) + 1,
                      std::vector<std::vector<std::string>>(
                          static_cast<size_t>(doc.dim), std::vector<std::string>(static_cast<size_t>(doc.dim))));
  for (int j = 0; j <= doc.order; ++j)
    for (int r = 0; r < doc.dim; ++r)
      for (int c = 0; c < doc.dim; ++c)
        doc.matrices[static_cast<size_t>(j)][static_cast<size_t>(r)][static_cast<size_t>(c)] =
            render_poly(sys.A.at(r, c).coeff(j));
  doc.rhs.resize(static_cast<size_t>(doc.dim));
  for (int i = 0; i < doc.dim; ++i) doc.rhs[static_cast<size_t>(i)] = render_poly(sys.b[static_cast<size_t>(i)]);
  return doc;
}

QRecSystem parse_system(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = position_of_offset(json_text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON document", line, col);
  }

  const auto require = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw SemanticError(std::string("missing field '") + key + "'");
    return j.at(key);
  };

  SystemDocument doc;
  try {
    const auto& qv = require("q");
    if (qv.is_string())
      doc.q = Rational::from_string(qv.get<std::string>());
    else if (qv.is_number_integer())
      doc.q = Rational(qv.get<long>());
    else
      throw SemanticError("field 'q' must be a rational string or an integer");

    doc.nu = require("nu").get<int>();
    doc.dim = require("m").get<int>();
    doc.order = require("s").get<int>();
    doc.matrices = require("A").get<std::vector<std::vector<std::vector<std::string>>>>();
    doc.rhs = require("b").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw SemanticError(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SemanticError(std::string("malformed document: ") + e.what());
  }
  return system_from_document(doc);
}

std::string render_system(const QRecSystem& sys) {
  const SystemDocument doc = document_from_system(sys);
  nlohmann::json j;
  j["q"] = doc.q.str();
  j["nu"] = doc.nu;
  j["m"] = doc.dim;
  j["s"] = doc.order;
  j["A"] = doc.matrices;
  j["b"] = doc.rhs;
  return j.dump(2) + "\n";
}

}  // namespace qrec
