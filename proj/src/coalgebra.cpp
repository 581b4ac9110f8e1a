#include "bialg/coalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bialg {

void Coalgebra::normalize() {
  for (auto& terms : delta) {
    std::map<std::pair<int, int>, Rational> acc;
    for (const auto& t : terms) acc[{t.left, t.right}] += t.coeff;
    terms.clear();
    for (auto& [jk, c] : acc)
      if (!c.is_zero()) terms.push_back({jk.first, jk.second, c});
  }
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  if (a.dim != b.dim || a.counit != b.counit) return false;
  for (int i = 0; i < a.dim; ++i) {
    if (a.delta[i].size() != b.delta[i].size()) return false;
    for (std::size_t t = 0; t < a.delta[i].size(); ++t) {
      const auto& x = a.delta[i][t];
      const auto& y = b.delta[i][t];
      if (x.left != y.left || x.right != y.right || x.coeff != y.coeff) return false;
    }
  }
  return true;
}

std::string power_terms_str(const PowerTerms& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*(";
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) os << "(x)";
      os << "b" << word[i];
    }
    os << ")";
  }
  return os.str();
}

namespace {

void check_shape(const Coalgebra& c) {
  if (c.dim <= 0) throw std::invalid_argument("coalgebra: dim must be positive");
  if ((int)c.delta.size() != c.dim || (int)c.counit.size() != c.dim)
    throw std::invalid_argument("coalgebra: table sizes disagree with dim");
  for (const auto& terms : c.delta)
    for (const auto& t : terms)
      if (t.left < 0 || t.left >= c.dim || t.right < 0 || t.right >= c.dim)
        throw std::invalid_argument("coalgebra: basis index out of range");
}

}  // namespace

ValidationReport validate_coalgebra(const Coalgebra& c) {
  check_shape(c);
  // Coassociativity on every basis element.
  for (int i = 0; i < c.dim; ++i) {
    PowerTerms lhs, rhs;
    for (const auto& t : c.delta[i]) {
      for (const auto& u : c.delta[t.left]) {
        Rational f = t.coeff * u.coeff;
        if (!f.is_zero()) lhs[{u.left, u.right, t.right}] += f;
      }
      for (const auto& u : c.delta[t.right]) {
        Rational f = t.coeff * u.coeff;
        if (!f.is_zero()) rhs[{t.left, u.left, u.right}] += f;
      }
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs != rhs)
      return {false, "coassociativity", i, power_terms_str(lhs), power_terms_str(rhs)};
  }
  // Counit laws on every basis element.
  for (int i = 0; i < c.dim; ++i) {
    Vec left(c.dim), right(c.dim);
    for (const auto& t : c.delta[i]) {
      left[t.right] += c.counit[t.left] * t.coeff;
      right[t.left] += c.counit[t.right] * t.coeff;
    }
    Vec id(c.dim);
    id[i] = Rational(1);
    auto as_terms = [](const Vec& v) {
      PowerTerms t;
      for (int j = 0; j < (int)v.size(); ++j)
        if (!v[j].is_zero()) t[{j}] = v[j];
      return t;
    };
    if (left != id)
      return {false, "counit law (eps (x) id) Delta = id", i,
              power_terms_str(as_terms(left)), power_terms_str(as_terms(id))};
    if (right != id)
      return {false, "counit law (id (x) eps) Delta = id", i,
              power_terms_str(as_terms(right)), power_terms_str(as_terms(id))};
  }
  return {};
}

ValidationReport validate_algebra(const Algebra& a) {
  if (a.dim <= 0) return {false, "algebra shape", -1, "dim <= 0", ""};
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      // Associativity (b_i b_j) b_k = b_i (b_j b_k) for all k.
      for (int k = 0; k < a.dim; ++k) {
        Vec lhs(a.dim), rhs(a.dim);
        for (const auto& t : a.mult[i][j])
          for (const auto& u : a.mult[t.out][k]) lhs[u.out] += t.coeff * u.coeff;
        for (const auto& t : a.mult[j][k])
          for (const auto& u : a.mult[i][t.out]) rhs[u.out] += t.coeff * u.coeff;
        if (lhs != rhs) {
          PowerTerms l, r;
          for (int m = 0; m < a.dim; ++m) {
            if (!lhs[m].is_zero()) l[{m}] = lhs[m];
            if (!rhs[m].is_zero()) r[{m}] = rhs[m];
          }
          return {false, "associativity", i, power_terms_str(l), power_terms_str(r)};
        }
      }
    }
  for (int i = 0; i < a.dim; ++i) {
    Vec lhs(a.dim), rhs(a.dim), id(a.dim);
    id[i] = Rational(1);
    for (int j = 0; j < a.dim; ++j) {
      if (a.unit[j].is_zero()) continue;
      for (const auto& t : a.mult[j][i]) lhs[t.out] += a.unit[j] * t.coeff;
      for (const auto& t : a.mult[i][j]) rhs[t.out] += a.unit[j] * t.coeff;
    }
    if (lhs != id || rhs != id)
      return {false, "unit law", i, "1*b != b or b*1 != b", ""};
  }
  return {};
}

Algebra dual_algebra(const Coalgebra& c) {
  check_shape(c);
  Algebra a;
  a.dim = c.dim;
  a.unit = c.counit;
  a.mult.assign(c.dim, std::vector<std::vector<MultTerm>>(c.dim));
  // (b_i* b_j*)(b_k) = coefficient of b_i (x) b_j in Delta(b_k).
  for (int k = 0; k < c.dim; ++k)
    for (const auto& t : c.delta[k]) a.mult[t.left][t.right].push_back({k, t.coeff});
  for (auto& row : a.mult)
    for (auto& cell : row)
      std::sort(cell.begin(), cell.end(),
                [](const MultTerm& x, const MultTerm& y) { return x.out < y.out; });
  return a;
}

Coalgebra opposite_coproduct(const Coalgebra& c) {
  Coalgebra o = c;
  for (auto& terms : o.delta)
    for (auto& t : terms) std::swap(t.left, t.right);
  o.normalize();
  return o;
}

PowerTerms iterated_coproduct(const Coalgebra& c, const Vec& v, int n) {
  if ((int)v.size() != c.dim)
    throw std::invalid_argument("iterated_coproduct: element dimension mismatch");
  if (n < 0) throw std::invalid_argument("iterated_coproduct: n must be >= 0");
  PowerTerms cur;
  for (int i = 0; i < c.dim; ++i)
    if (!v[i].is_zero()) cur[{i}] = v[i];
  // Expand the last slot n times; coassociativity makes the slot choice
  // immaterial (validated up front, tested as a property).
  for (int step = 0; step < n; ++step) {
    PowerTerms next;
    for (const auto& [word, coeff] : cur) {
      int last = word.back();
      for (const auto& t : c.delta[last]) {
        std::vector<int> w(word.begin(), word.end() - 1);
        w.push_back(t.left);
        w.push_back(t.right);
        Rational f = coeff * t.coeff;
        if (!f.is_zero()) next[std::move(w)] += f;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return cur;
}

}  // namespace bialg
