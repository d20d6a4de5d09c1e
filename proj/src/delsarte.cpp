#include "bhcr/delsarte.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bhcr/error.hpp"

namespace bhcr {

DelsartePolynomial::DelsartePolynomial(IntMatrix exponents, std::vector<std::string> var_names,
                                       std::vector<Integer> coefficients)
    : exponents_(std::move(exponents)), var_names_(std::move(var_names)), coefficients_(std::move(coefficients)) {
  const std::size_t n = exponents_.rows();
  if (n == 0) throw Error(ErrorKind::ParseError, "empty potential");
  if (exponents_.cols() != n)
    throw Error(ErrorKind::NonSquare, std::to_string(n) + " monomials in " + std::to_string(exponents_.cols()) +
                                          " variables");
  if (var_names_.size() != n) throw Error(ErrorKind::DimensionMismatch, "variable name count differs from size");
  if (coefficients_.empty()) coefficients_.assign(n, 1);
  if (coefficients_.size() != n) throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from size");

  std::set<std::vector<Integer>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = exponents_.row(i);
    if (std::any_of(r.begin(), r.end(), [](Integer e) { return e < 0; }))
      throw Error(ErrorKind::NegativeOrMalformedExponent, "negative exponent in monomial " + std::to_string(i));
    if (std::all_of(r.begin(), r.end(), [](Integer e) { return e == 0; }))
      throw Error(ErrorKind::ParseError, "constant monomial " + std::to_string(i));
    if (!seen.insert(r).second)
      throw Error(ErrorKind::DuplicateMonomial, "monomial " + std::to_string(i) + " repeats an earlier one");
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto c = exponents_.column(j);
    if (std::all_of(c.begin(), c.end(), [](Integer e) { return e == 0; }))
      throw Error(ErrorKind::SingularMatrix, "variable " + var_names_[j] + " does not occur");
  }
  det_ = bhcr::determinant(exponents_);
  if (det_ == 0) throw Error(ErrorKind::SingularMatrix, "exponent matrix has zero determinant");
}

namespace {

std::string monomial_string(const std::vector<Integer>& row, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[j];
    if (row[j] != 1) out += '^' + std::to_string(row[j]);
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<Integer, std::string>>& terms) {
  std::string out;
  for (const auto& [coeff, mono] : terms) {
    if (out.empty()) {
      if (coeff < 0) out += '-';
    } else {
      out += coeff < 0 ? '-' : '+';
    }
    Integer mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag) + '*';
    out += mono;
  }
  return out;
}

}  // namespace

std::string DelsartePolynomial::to_string() const {
  std::vector<std::pair<Integer, std::string>> terms;
  for (std::size_t i = 0; i < size(); ++i) terms.emplace_back(coefficients_[i], monomial_string(exponents_.row(i), var_names_));
  return join_terms(terms);
}

std::string DelsartePolynomial::canonical_string() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return exponents_.row(a) > exponents_.row(b);
  });
  std::vector<std::pair<Integer, std::string>> terms;
  for (auto i : order) terms.emplace_back(coefficients_[i], monomial_string(exponents_.row(i), var_names_));
  return join_terms(terms);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  struct Monomial {
    Integer coefficient = 1;
    std::map<std::string, Integer> powers;
    std::vector<std::string> order;  // first-appearance order within the monomial
  };

  std::vector<Monomial> parse() {
    std::vector<Monomial> out;
    skip_ws();
    Integer sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    out.push_back(monomial(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = take();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      sign = c == '-' ? -1 : 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        if (take() == '-') sign = -sign;
      }
      out.push_back(monomial(sign));
    }
    return out;
  }

 private:
  Monomial monomial(Integer sign) {
    Monomial m;
    m.coefficient = sign;
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      m.coefficient *= number();
      skip_ws();
      if (peek() == '*') {
        take();
        skip_ws();
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable");
    factor(m);
    while (true) {
      skip_ws();
      if (peek() == '*') {
        take();
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable after '*'");
        factor(m);
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        factor(m);
      } else {
        break;
      }
    }
    return m;
  }

  void factor(Monomial& m) {
    std::string name = identifier();
    skip_ws();
    Integer e = 1;
    if (peek() == '^') {
      take();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw Error(ErrorKind::NegativeOrMalformedExponent,
                    "exponent of " + name + " at position " + std::to_string(pos_) + " is not a non-negative integer");
      e = number();
    }
    if (!m.powers.count(name)) m.order.push_back(name);
    m.powers[name] += e;
  }

  // Letters, then digits/underscores; a letter after a digit starts the next
  // factor, so "x1x2^3" reads as x1*x2^3.
  std::string identifier() {
    std::string s;
    while (std::isalpha(static_cast<unsigned char>(peek()))) s += take();
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') {
      s += take();
      if (s.back() == '_') {
        while (std::isalnum(static_cast<unsigned char>(peek())) && !std::isdigit(static_cast<unsigned char>(peek())))
          s += take();
      }
    }
    return s;
  }

  Integer number() {
    Integer v = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      any = true;
      v = v * 10 + (take() - '0');
      if (v > 1'000'000'000) fail("number too large");
    }
    if (!any) fail("expected a number");
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Name order with trailing digits compared as numbers.
bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    std::string head = s.substr(0, k);
    std::string digits = s.substr(k);
    return std::make_tuple(head, digits.size(), digits);
  };
  auto [ha, la, da] = split(a);
  auto [hb, lb, db] = split(b);
  if (ha != hb) return ha < hb;
  // Leading zeros are rare; compare by length then lexicographically.
  std::string sa = da, sb = db;
  sa.erase(0, std::min(sa.find_first_not_of('0'), sa.size()));
  sb.erase(0, std::min(sb.find_first_not_of('0'), sb.size()));
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

DelsartePolynomial parse_delsarte(std::string_view text, std::vector<std::string>* warnings,
                                  const std::vector<std::string>* declared_vars) {
  auto monomials = Parser(text).parse();

  std::vector<std::string> names;
  if (declared_vars) {
    names = *declared_vars;
    std::set<std::string> known(names.begin(), names.end());
    for (const auto& m : monomials)
      for (const auto& v : m.order)
        if (!known.count(v)) throw Error(ErrorKind::UnknownVariable, "variable '" + v + "' is not declared");
  } else {
    std::set<std::string> all;
    for (const auto& m : monomials) all.insert(m.order.begin(), m.order.end());
    names.assign(all.begin(), all.end());
    std::sort(names.begin(), names.end(), natural_less);
  }

  if (monomials.size() != names.size())
    throw Error(ErrorKind::NonSquare, std::to_string(monomials.size()) + " monomials in " +
                                          std::to_string(names.size()) + " variables");

  const std::size_t n = names.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < n; ++j) index[names[j]] = j;

  IntMatrix a(n, n);
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [v, e] : monomials[i].powers) a(i, index.at(v)) = e;
    coeffs.push_back(monomials[i].coefficient);
    if (monomials[i].coefficient != 1 && warnings) {
      warnings->push_back("coefficient " + std::to_string(monomials[i].coefficient) + " of monomial " +
                          std::to_string(i + 1) + " ignored (rescaled to 1)");
    }
  }
  return DelsartePolynomial(std::move(a), std::move(names), std::move(coeffs));
}

DelsartePolynomial transpose(const DelsartePolynomial& p) {
  return DelsartePolynomial(p.exponents().transposed(), p.var_names(), p.coefficients());
}

// ---------------------------------------------------------------------------
// Permutation equivalence

namespace {

struct PermSearch {
  const IntMatrix& p;
  const IntMatrix& q;
  std::size_t n;
  std::vector<std::size_t> cols;  // cols[j] = column of p placed at column j of q
  std::vector<bool> used;

  std::vector<Integer> sorted_column(const IntMatrix& m, std::size_t j) const {
    auto c = m.column(j);
    std::sort(c.begin(), c.end());
    return c;
  }

  // Match rows of q against rows of p restricted to the current column order.
  std::optional<std::vector<std::size_t>> match_rows() const {
    std::vector<std::size_t> rows(n);
    std::vector<bool> taken(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::size_t r = 0; r < n && !found; ++r) {
        if (taken[r]) continue;
        bool eq = true;
        for (std::size_t j = 0; j < n && eq; ++j) eq = p(r, cols[j]) == q(i, j);
        if (eq) {
          rows[i] = r;
          taken[r] = true;
          found = true;
        }
      }
      if (!found) return std::nullopt;
    }
    return rows;
  }

  std::optional<PermutationPair> search(std::size_t j) {
    if (j == n) {
      if (auto rows = match_rows()) return PermutationPair{*rows, cols};
      return std::nullopt;
    }
    const auto target = sorted_column(q, j);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sorted_column(p, c) != target) continue;
      used[c] = true;
      cols[j] = c;
      if (auto found = search(j + 1)) return found;
      used[c] = false;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<PermutationPair> equivalent_up_to_permutation(const DelsartePolynomial& p,
                                                            const DelsartePolynomial& q) {
  if (p.size() != q.size()) return std::nullopt;
  PermSearch s{p.exponents(), q.exponents(), p.size(), std::vector<std::size_t>(p.size()),
               std::vector<bool>(p.size(), false)};
  return s.search(0);
}

// ---------------------------------------------------------------------------
// Atomic decomposition

std::string_view to_string(AtomKind kind) {
  switch (kind) {
    case AtomKind::Fermat: return "fermat";
    case AtomKind::Chain: return "chain";
    case AtomKind::Loop: return "loop";
  }
  return "?";
}

std::string AtomicDecomposition::to_string() const {
  if (!determined) return "undetermined";
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << " + ";
    os << bhcr::to_string(blocks[b].kind) << '(';
    for (std::size_t k = 0; k < blocks[b].exponents.size(); ++k) os << (k ? "," : "") << blocks[b].exponents[k];
    os << ')';
  }
  return os.str();
}

namespace {

class AtomSearch {
 public:
  explicit AtomSearch(const IntMatrix& a) : a_(a), n_(a.rows()), own_(n_), used_(n_, false) {}

  std::optional<AtomicDecomposition> run() { return assign(0); }

 private:
  // Column j can be the own variable of row i when every other entry of the
  // row is zero except at most one entry equal to 1.
  bool admissible(std::size_t i, std::size_t j) const {
    if (a_(i, j) < 1) return false;
    int others = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == j || a_(i, k) == 0) continue;
      if (a_(i, k) != 1) return false;
      ++others;
    }
    return others <= 1;
  }

  std::optional<AtomicDecomposition> assign(std::size_t i) {
    if (i == n_) return classify();
    std::vector<std::size_t> candidates;
    if (admissible(i, i) && !used_[i]) candidates.push_back(i);
    for (std::size_t j = 0; j < n_; ++j)
      if (j != i && !used_[j] && admissible(i, j)) candidates.push_back(j);
    for (auto j : candidates) {
      used_[j] = true;
      own_[i] = j;
      if (auto d = assign(i + 1)) return d;
      used_[j] = false;
    }
    return std::nullopt;
  }

  std::optional<AtomicDecomposition> classify() const {
    std::vector<std::size_t> owner(n_);
    for (std::size_t i = 0; i < n_; ++i) owner[own_[i]] = i;
    // next[i]: monomial owning the variable that monomial i points at.
    std::vector<std::optional<std::size_t>> next(n_);
    std::vector<int> indeg(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (k != own_[i] && a_(i, k) != 0) {
          next[i] = owner[k];
          if (++indeg[owner[k]] > 1) return std::nullopt;
        }
      }
    }

    AtomicDecomposition d;
    d.determined = true;
    std::vector<bool> done(n_, false);
    auto exponent = [&](std::size_t i) { return a_(i, own_[i]); };

    // Paths start at monomials nobody points to.
    for (std::size_t i = 0; i < n_; ++i) {
      if (indeg[i] != 0) continue;
      Atom atom{next[i] ? AtomKind::Chain : AtomKind::Fermat, {}, {}, {}};
      for (std::optional<std::size_t> cur = i; cur; cur = next[*cur]) {
        atom.monomials.push_back(*cur);
        atom.variables.push_back(own_[*cur]);
        atom.exponents.push_back(exponent(*cur));
        done[*cur] = true;
      }
      if (atom.exponents.back() < 2) return std::nullopt;
      d.blocks.push_back(std::move(atom));
    }
    // Whatever remains lies on cycles.
    for (std::size_t i = 0; i < n_; ++i) {
      if (done[i]) continue;
      std::size_t start = i;
      for (std::size_t cur = *next[i]; cur != i; cur = *next[cur])
        if (own_[cur] < own_[start]) start = cur;
      Atom atom{AtomKind::Loop, {}, {}, {}};
      std::size_t cur = start;
      do {
        atom.monomials.push_back(cur);
        atom.variables.push_back(own_[cur]);
        atom.exponents.push_back(exponent(cur));
        done[cur] = true;
        cur = *next[cur];
      } while (cur != start);
      if (atom.exponents.size() < 2) return std::nullopt;
      d.blocks.push_back(std::move(atom));
    }
    std::sort(d.blocks.begin(), d.blocks.end(), [](const Atom& x, const Atom& y) {
      return *std::min_element(x.variables.begin(), x.variables.end()) <
             *std::min_element(y.variables.begin(), y.variables.end());
    });
    return d;
  }

  const IntMatrix& a_;
  std::size_t n_;
  std::vector<std::size_t> own_;
  std::vector<bool> used_;
};

}  // namespace

AtomicDecomposition atomic_decomposition(const DelsartePolynomial& p) {
  if (auto d = AtomSearch(p.exponents()).run()) return *d;
  return AtomicDecomposition{};
}

}  // namespace bhcr
