#include "bialg/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace bialg {

TensorShape::TensorShape(int dim, int max_degree, long long guard)
    : dim_(dim), max_degree_(max_degree) {
  if (dim <= 0) throw std::invalid_argument("TensorShape: dim must be positive");
  if (max_degree < 0) throw std::invalid_argument("TensorShape: negative degree cap");
  if (guard < 1) throw std::invalid_argument("TensorShape: guard must be >= 1");
  offsets_.resize(max_degree + 2);
  offsets_[0] = 0;
  long long size = 1;  // dim^n
  for (int n = 0; n <= max_degree; ++n) {
    offsets_[n + 1] = offsets_[n] + size;
    if (offsets_[n + 1] > guard)
      throw GuardExceeded("coordinate guard exceeded: T_" + std::to_string(max_degree) +
                          " over dim " + std::to_string(dim) + " needs more than " +
                          std::to_string(guard) + " coordinates");
    if (n < max_degree) {
      if (size > guard / dim) size = guard + 1;  // saturate, still trips the guard
      else size *= dim;
    }
  }
}

std::size_t TensorShape::index(const Word& w) const {
  int n = (int)w.size();
  if (n > max_degree_) throw std::invalid_argument("TensorShape::index: word too long");
  long long idx = offsets_[n];
  long long lex = 0;
  for (int letter : w) {
    if (letter < 0 || letter >= dim_)
      throw std::invalid_argument("TensorShape::index: letter out of range");
    lex = lex * dim_ + letter;
  }
  return (std::size_t)(idx + lex);
}

Word TensorShape::word(std::size_t idx) const {
  if (idx >= total()) throw std::invalid_argument("TensorShape::word: index out of range");
  int n = 0;
  while ((long long)idx >= offsets_[n + 1]) ++n;
  long long lex = (long long)idx - offsets_[n];
  Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    w[i] = (int)(lex % dim_);
    lex /= dim_;
  }
  return w;
}

void TensorElement::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  if ((int)w.size() > max_degree_)
    throw std::invalid_argument("TensorElement: word exceeds degree cap");
  for (int letter : w)
    if (letter < 0 || letter >= dim_)
      throw std::invalid_argument("TensorElement: letter out of range");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational TensorElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational() : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("TensorElement: alphabet mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("TensorElement: alphabet mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

TensorElement& TensorElement::scale(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

int TensorElement::top_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, (int)w.size());
  return d;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*";
    if (w.empty()) {
      os << "1";
      continue;
    }
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << "(x)";
      os << "b" << w[i];
    }
    os << ")";
  }
  return os.str();
}

PairTerms word_coproduct(const Coalgebra& c, const GradedElement& v) {
  if (v.dim() != c.dim)
    throw std::invalid_argument("word_coproduct: alphabet disagrees with coalgebra");
  PairTerms out;
  for (const auto& [w, coeff] : v.terms()) {
    // Expand letter by letter, keeping positions aligned.
    std::vector<std::pair<std::pair<Word, Word>, Rational>> partial;
    partial.push_back({{{}, {}}, coeff});
    for (int letter : w) {
      std::vector<std::pair<std::pair<Word, Word>, Rational>> next;
      for (const auto& [lr, f] : partial) {
        for (const auto& t : c.delta[letter]) {
          Word l = lr.first;
          Word r = lr.second;
          l.push_back(t.left);
          r.push_back(t.right);
          Rational g = f * t.coeff;
          if (!g.is_zero()) next.push_back({{std::move(l), std::move(r)}, std::move(g)});
        }
      }
      partial = std::move(next);
    }
    for (auto& [lr, f] : partial) {
      auto it = out.find(lr);
      if (it == out.end()) out.emplace(std::move(lr), std::move(f));
      else {
        it->second += f;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Rational counit_word(const Coalgebra& c, const GradedElement& v) {
  if (v.dim() != c.dim)
    throw std::invalid_argument("counit_word: alphabet disagrees with coalgebra");
  Rational acc;
  for (const auto& [w, coeff] : v.terms()) {
    Rational f = coeff;
    for (int letter : w) {
      if (f.is_zero()) break;
      f *= c.counit[letter];
    }
    acc += f;
  }
  return acc;
}

TensorElement tensor_reverse(const TensorElement& v) {
  TensorElement out(v.dim(), v.max_degree());
  for (const auto& [w, c] : v.terms()) {
    Word r(w.rbegin(), w.rend());
    out.add_term(r, c);
  }
  return out;
}

TensorElement concat_product(const TensorElement& a, const TensorElement& b,
                             int result_cap) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("concat_product: alphabet mismatch");
  int cap = result_cap >= 0 ? result_cap : std::max(a.max_degree(), b.max_degree());
  TensorElement out(a.dim(), cap);
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      if ((int)(u.size() + v.size()) > cap)
        throw GuardExceeded("concat_product: word degree would exceed the cap");
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, cu * cv);
    }
  return out;
}

DualElement dual_product(const Algebra& k, const DualElement& a, const DualElement& b) {
  if (a.dim() != k.dim || b.dim() != k.dim)
    throw std::invalid_argument("dual_product: alphabet disagrees with algebra");
  if (a.max_degree() != b.max_degree())
    throw std::invalid_argument("dual_product: degree caps disagree");
  DualElement out(k.dim, a.max_degree());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      if (u.size() != v.size()) continue;  // cross-degree products vanish
      std::vector<std::pair<Word, Rational>> partial;
      partial.push_back({{}, cu * cv});
      for (std::size_t i = 0; i < u.size() && !partial.empty(); ++i) {
        std::vector<std::pair<Word, Rational>> next;
        for (const auto& [w, f] : partial)
          for (const auto& t : k.mult[u[i]][v[i]]) {
            Word ww = w;
            ww.push_back(t.out);
            Rational g = f * t.coeff;
            if (!g.is_zero()) next.push_back({std::move(ww), std::move(g)});
          }
        partial = std::move(next);
      }
      for (const auto& [w, f] : partial) out.add_term(w, f);
    }
  return out;
}

DualElement dual_unit(const Algebra& k, int max_degree) {
  DualElement out(k.dim, max_degree);
  std::vector<std::pair<Word, Rational>> layer;
  layer.push_back({{}, Rational(1)});
  out.add_term({}, Rational(1));
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<std::pair<Word, Rational>> next;
    for (const auto& [w, f] : layer)
      for (int i = 0; i < k.dim; ++i) {
        if (k.unit[i].is_zero()) continue;
        Word ww = w;
        ww.push_back(i);
        next.push_back({std::move(ww), f * k.unit[i]});
      }
    for (const auto& [w, f] : next) out.add_term(w, f);
    layer = std::move(next);
  }
  return out;
}

Rational dual_pairing(const DualElement& a, const GradedElement& v) {
  if (a.dim() != v.dim())
    throw std::invalid_argument("dual_pairing: alphabet mismatch");
  Rational acc;
  const auto& small = a.terms().size() <= v.terms().size() ? a : v;
  const auto& big = a.terms().size() <= v.terms().size() ? v : a;
  for (const auto& [w, c] : small.terms()) {
    Rational other = big.coeff(w);
    if (!other.is_zero()) acc += c * other;
  }
  return acc;
}

Vec to_coords(const TensorShape& shape, const TensorElement& v) {
  if (shape.dim() != v.dim())
    throw std::invalid_argument("to_coords: alphabet mismatch");
  Vec out(shape.total());
  for (const auto& [w, c] : v.terms()) out[shape.index(w)] = c;
  return out;
}

TensorElement from_coords(const TensorShape& shape, const Vec& coords) {
  if (coords.size() != shape.total())
    throw std::invalid_argument("from_coords: coordinate count mismatch");
  TensorElement out(shape.dim(), shape.max_degree());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.add_term(shape.word(i), coords[i]);
  return out;
}

}  // namespace bialg
