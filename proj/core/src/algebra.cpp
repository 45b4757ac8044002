#include "sullivan/algebra.hpp"

#include <algorithm>

namespace sullivan {

int Monomial::word_length() const {
  int len = 0;
  for (const auto& [g, e] : exps_) len += e;
  return len;
}

int Monomial::exponent(int gen) const {
  for (const auto& [g, e] : exps_) {
    if (g == gen) return e;
    if (g > gen) break;
  }
  return 0;
}

int Monomial::word_length_in(const std::vector<bool>& mask) const {
  int len = 0;
  for (const auto& [g, e] : exps_)
    if (mask[static_cast<std::size_t>(g)]) len += e;
  return len;
}

bool Monomial::uses_only(const std::vector<bool>& mask) const {
  for (const auto& [g, e] : exps_)
    if (!mask[static_cast<std::size_t>(g)]) return false;
  return true;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.exponents().begin(), ea = a.exponents().end();
  auto ib = b.exponents().begin(), eb = b.exponents().end();
  while (ia != ea || ib != eb) {
    int ga = (ia != ea) ? ia->first : std::max(0, (ib->first + 1));
    int gb = (ib != eb) ? ib->first : std::max(0, (ia->first + 1));
    int g = std::min(ga, gb);
    int expa = (ia != ea && ia->first == g) ? ia->second : 0;
    int expb = (ib != eb && ib->first == g) ? ib->second : 0;
    if (expa != expb) return expa < expb;
    if (ia != ea && ia->first == g) ++ia;
    if (ib != eb && ib->first == g) ++ib;
  }
  return false;
}

AlgebraPtr Algebra::create(std::vector<GeneratorSpec> gens) {
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const GeneratorSpec& g = gens[i];
    if (g.name.empty()) throw Error("generator with empty name");
    if (g.degree < 1) throw ValidationError(g.name, "generator '" + g.name + "' has degree < 1");
    auto [it, fresh] = alg->index_.emplace(g.name, static_cast<int>(i));
    if (!fresh) throw ValidationError(g.name, "duplicate generator '" + g.name + "'");
  }
  alg->gens_ = std::move(gens);
  return alg;
}

int Algebra::find_generator(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

Monomial Algebra::monomial(Monomial::Exponents exps) const {
  std::sort(exps.begin(), exps.end());
  Monomial::Exponents merged;
  for (const auto& [g, e] : exps) {
    if (g < 0 || g >= generator_count()) throw Error("monomial references unknown generator");
    if (e <= 0) throw Error("monomial with non-positive exponent");
    if (!merged.empty() && merged.back().first == g)
      merged.back().second += e;
    else
      merged.emplace_back(g, e);
  }
  int degree = 0;
  for (const auto& [g, e] : merged) {
    const GeneratorSpec& spec = generator(g);
    if (spec.odd() && e > 1)
      throw Error("odd generator '" + spec.name + "' with exponent " + std::to_string(e));
    degree += spec.degree * e;
  }
  return Monomial(std::move(merged), degree);
}

Monomial Algebra::generator_monomial(int gen) const { return monomial({{gen, 1}}); }

Algebra::MonoProd Algebra::multiply(const Monomial& a, const Monomial& b) const {
  MonoProd out;
  // Count the odd generators of `a` still to the right of the merge point;
  // each odd generator of `b` emitted before them flips the sign once per
  // crossing (Koszul rule: only odd-odd transpositions contribute).
  int odd_left_remaining = 0;
  for (const auto& [g, e] : a.exponents())
    if (generator(g).odd()) ++odd_left_remaining;

  Monomial::Exponents merged;
  merged.reserve(a.exponents().size() + b.exponents().size());
  int degree = a.degree() + b.degree();
  bool negative = false;

  auto ia = a.exponents().begin(), ea = a.exponents().end();
  auto ib = b.exponents().begin(), eb = b.exponents().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      if (generator(ia->first).odd()) --odd_left_remaining;
      merged.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      if (generator(ib->first).odd() && (odd_left_remaining % 2 == 1)) negative = !negative;
      merged.push_back(*ib++);
    } else {
      if (generator(ia->first).odd()) {
        out.zero = true;  // odd square
        return out;
      }
      merged.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.sign = negative ? -1 : 1;
  out.mono = Monomial(std::move(merged), degree);
  return out;
}

std::vector<Monomial> Algebra::basis_in_degree(int k) const {
  std::vector<Monomial> out;
  if (k < 0) return out;
  Monomial::Exponents current;
  // Enumerate exponent choices generator by generator.
  auto rec = [&](auto&& self, int gi, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(monomial(current));
      return;
    }
    if (gi >= generator_count()) return;
    const GeneratorSpec& g = generator(gi);
    self(self, gi + 1, remaining);
    if (g.odd()) {
      if (g.degree <= remaining) {
        current.emplace_back(gi, 1);
        self(self, gi + 1, remaining - g.degree);
        current.pop_back();
      }
    } else {
      for (int e = 1; e * g.degree <= remaining; ++e) {
        current.emplace_back(gi, e);
        self(self, gi + 1, remaining - e * g.degree);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Algebra::to_string(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [g, e] : m.exponents()) {
    if (!out.empty()) out += "*";
    out += generator(g).name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Element Element::zero(AlgebraPtr alg) {
  Element e;
  e.alg_ = std::move(alg);
  return e;
}

Element Element::unit(AlgebraPtr alg, Rational c) { return term(std::move(alg), Monomial(), std::move(c)); }

Element Element::generator(AlgebraPtr alg, int gen) {
  Monomial m = alg->generator_monomial(gen);
  return term(std::move(alg), std::move(m), Rational(1));
}

Element Element::term(AlgebraPtr alg, Monomial m, Rational c) {
  Element e;
  e.alg_ = std::move(alg);
  if (!is_zero(c)) e.terms_.emplace(std::move(m), std::move(c));
  return e;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int deg = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return std::nullopt;
  return deg;
}

bool Element::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

bool Element::is_homogeneous_of(int k) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != k) return false;
  return true;
}

void Element::add_term(Monomial m, Rational c) {
  if (is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (sullivan::is_zero(it->second)) terms_.erase(it);
  }
}

void Element::check_same_algebra(const Element& o) const {
  if (alg_ != o.alg_) throw Error("operands over different algebras");
  if (!alg_) throw Error("operation on detached element");
}

Element Element::operator+(const Element& o) const {
  check_same_algebra(o);
  Element out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Element Element::operator-(const Element& o) const {
  check_same_algebra(o);
  Element out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Element Element::operator*(const Element& o) const {
  check_same_algebra(o);
  Element out = Element::zero(alg_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Algebra::MonoProd p = alg_->multiply(ma, mb);
      if (p.zero) continue;
      Rational c = ca * cb;
      if (p.sign < 0) c = -c;
      out.add_term(std::move(p.mono), std::move(c));
    }
  }
  return out;
}

Element Element::scaled(const Rational& c) const {
  if (!alg_) throw Error("operation on detached element");
  Element out = Element::zero(alg_);
  if (sullivan::is_zero(c)) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, c * coeff);
  return out;
}

Element Element::pow(int e) const {
  if (!alg_) throw Error("operation on detached element");
  if (e < 0) throw Error("negative power of an algebra element");
  Element out = Element::unit(alg_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool Element::operator==(const Element& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }

std::string Element::to_string() const {
  if (!alg_ || terms_.empty()) return "0";
  std::string out;
  // Highest monomial first reads like the leading term.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = sgn(c) < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string ms = alg_->to_string(m);
    if (m.is_unit()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += ms;
    } else {
      out += mag.get_str() + "*" + ms;
    }
  }
  return out;
}

Element apply_derivation(const Element& e, const std::vector<Element>& images) {
  const AlgebraPtr& alg = e.algebra();
  if (!alg) throw Error("derivation of a detached element");
  if (static_cast<int>(images.size()) != alg->generator_count())
    throw Error("derivation images do not cover the generator set");
  Element out = Element::zero(alg);
  for (const auto& [mono, coeff] : e.terms()) {
    // d(A g^e B) = (-1)^{|A|} A d(g^e) B summed over the generators of the
    // monomial; the residual reorder signs are left to the product.
    int prefix_degree = 0;
    for (std::size_t pos = 0; pos < mono.exponents().size(); ++pos) {
      auto [g, exp] = mono.exponents()[pos];
      const Element& dg = images[static_cast<std::size_t>(g)];
      if (!dg.is_zero()) {
        Monomial::Exponents prefix(mono.exponents().begin(),
                                   mono.exponents().begin() + static_cast<long>(pos));
        Monomial::Exponents suffix(mono.exponents().begin() + static_cast<long>(pos) + 1,
                                   mono.exponents().end());
        if (exp > 1) prefix.emplace_back(g, exp - 1);
        Rational c = coeff * exp;
        if (prefix_degree % 2 != 0) c = -c;
        Element left = Element::term(alg, alg->monomial(std::move(prefix)), std::move(c));
        Element right = Element::term(alg, alg->monomial(std::move(suffix)), Rational(1));
        out = out + left * dg * right;
      }
      prefix_degree += alg->generator(g).degree * exp;
    }
  }
  return out;
}

AlgebraHom::AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->generator_count())
    throw Error("homomorphism images do not cover the generator set");
  for (int i = 0; i < source_->generator_count(); ++i) {
    const Element& img = images_[static_cast<std::size_t>(i)];
    if (img.algebra() != target_) throw Error("homomorphism image over the wrong algebra");
    if (!img.is_homogeneous_of(source_->generator(i).degree))
      throw Error("homomorphism image of '" + source_->generator(i).name +
                  "' is not homogeneous of its degree");
  }
}

Element AlgebraHom::operator()(const Element& e) const {
  if (e.algebra() != source_) throw Error("homomorphism applied to an element over the wrong algebra");
  Element out = Element::zero(target_);
  for (const auto& [mono, coeff] : e.terms()) {
    Element prod = Element::unit(target_, coeff);
    for (const auto& [g, exp] : mono.exponents())
      prod = prod * images_[static_cast<std::size_t>(g)].pow(exp);
    out = out + prod;
  }
  return out;
}

AlgebraHom rename_hom(AlgebraPtr source, AlgebraPtr target) {
  std::vector<Element> images;
  images.reserve(static_cast<std::size_t>(source->generator_count()));
  for (int i = 0; i < source->generator_count(); ++i) {
    const GeneratorSpec& g = source->generator(i);
    int j = target->find_generator(g.name);
    if (j < 0) throw Error("generator '" + g.name + "' missing from the target algebra");
    if (target->generator(j).degree != g.degree)
      throw Error("generator '" + g.name + "' changes degree under renaming");
    images.push_back(Element::generator(target, j));
  }
  return AlgebraHom(std::move(source), std::move(target), std::move(images));
}

}  // namespace sullivan
