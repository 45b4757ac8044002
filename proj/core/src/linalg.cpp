#include "sullivan/linalg.hpp"

#include <algorithm>

#include "sullivan/errors.hpp"

namespace sullivan {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("malformed rational literal '" + text + "'");
  if (sgn(q.get_den()) == 0) throw Error("zero denominator in rational literal '" + text + "'");
  q.canonicalize();
  return q;
}

SparseVec::SparseVec(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return is_zero(t.second); }),
               merged.end());
  terms_ = std::move(merged);
}

SparseVec SparseVec::unit(int index, Rational coeff) {
  SparseVec v;
  if (!is_zero(coeff)) v.terms_.emplace_back(index, std::move(coeff));
  return v;
}

int SparseVec::leading_index() const { return terms_.empty() ? -1 : terms_.front().first; }

Rational SparseVec::coefficient(int index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVec::add_term(int index, const Rational& coeff) {
  if (is_zero(coeff)) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) {
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  } else {
    terms_.insert(it, {index, coeff});
  }
}

void SparseVec::scale(const Rational& c) {
  if (is_zero(c)) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.second *= c;
}

SparseVec add(const SparseVec& a, const SparseVec& b) { return axpy(a, Rational(1), b); }

SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
  if (is_zero(c) || b.is_zero()) return a;
  SparseVec out;
  std::vector<SparseVec::Term> terms;
  terms.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      terms.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      terms.emplace_back(ib->first, c * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + c * ib->second;
      if (!is_zero(v)) terms.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [](const SparseVec::Term& t) { return is_zero(t.second); }),
              terms.end());
  return SparseVec(std::move(terms));
}

SparseVec scaled(const SparseVec& a, const Rational& c) {
  SparseVec out = a;
  out.scale(c);
  return out;
}

Echelon::Reduction Echelon::reduce(const SparseVec& v) const {
  Reduction red;
  red.remainder = v;
  // Rows are sorted by pivot and mutually reduced, so one forward sweep
  // eliminates every pivot coordinate.
  for (const Row& row : rows_) {
    int pivot = row.vec.leading_index();
    Rational c = red.remainder.coefficient(pivot);
    if (is_zero(c)) continue;
    red.remainder = axpy(red.remainder, -c, row.vec);
    if (track_) red.combination = axpy(red.combination, c, row.comb);
  }
  return red;
}

int Echelon::insert(SparseVec v, bool* reduced_to_zero) {
  return insert_with_dependency(std::move(v), reduced_to_zero, nullptr);
}

int Echelon::insert_with_dependency(SparseVec v, bool* reduced_to_zero, SparseVec* dependency) {
  int tag = next_tag_++;
  Reduction red = reduce(v);
  if (red.remainder.is_zero()) {
    if (reduced_to_zero) *reduced_to_zero = true;
    if (dependency) *dependency = red.combination;
    return tag;
  }
  if (reduced_to_zero) *reduced_to_zero = false;
  if (dependency) *dependency = SparseVec();

  Row row;
  Rational lead = red.remainder.terms().front().second;
  row.vec = scaled(red.remainder, Rational(1) / lead);
  if (track_) {
    SparseVec comb = red.combination;  // v = remainder + comb * inserted
    comb.scale(Rational(-1));
    comb.add_term(tag, Rational(1));
    comb.scale(Rational(1) / lead);
    row.comb = std::move(comb);
  }

  // Back-substitute so the new pivot column vanishes elsewhere (RREF).
  int pivot = row.vec.leading_index();
  for (Row& r : rows_) {
    Rational c = r.vec.coefficient(pivot);
    if (is_zero(c)) continue;
    r.vec = axpy(r.vec, -c, row.vec);
    if (track_) r.comb = axpy(r.comb, -c, row.comb);
  }

  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot, [](const Row& r, int p) {
    return r.vec.leading_index() < p;
  });
  rows_.insert(pos, std::move(row));
  return tag;
}

std::vector<SparseVec> Echelon::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.push_back(r.vec);
  return out;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& images) {
  Echelon ech(/*track_combinations=*/true);
  std::vector<SparseVec> kernel;
  for (const SparseVec& img : images) {
    bool zero = false;
    SparseVec dep;
    int tag = ech.insert_with_dependency(img, &zero, &dep);
    if (zero) {
      // images[tag] = dep * previously inserted images, so the kernel picks
      // up e_tag - dep.
      SparseVec k = scaled(dep, Rational(-1));
      k.add_term(tag, Rational(1));
      kernel.push_back(std::move(k));
    }
  }
  return echelonize(kernel);
}

int rank_of(const std::vector<SparseVec>& vectors) {
  Echelon ech;
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

std::vector<SparseVec> echelonize(const std::vector<SparseVec>& vectors) {
  Echelon ech;
  for (const auto& v : vectors) ech.insert(v);
  return ech.basis();
}

}  // namespace sullivan
