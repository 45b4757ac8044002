#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sullivan/errors.hpp"
#include "sullivan/rational.hpp"

namespace sullivan {

/// A generator of a free graded-commutative algebra. Parity is derived from
/// the cohomological degree.
struct GeneratorSpec {
  std::string name;
  int degree = 0;
  bool odd() const { return degree % 2 != 0; }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Canonical monomial: (generator index, exponent) pairs sorted by index,
/// exponents positive, odd generators squarefree (g^2 = 0 is enforced at
/// construction). The total degree is cached so ordering needs no context.
class Monomial {
public:
  using Exponents = std::vector<std::pair<int, int>>;

  Monomial() = default;  // the unit

  int degree() const { return degree_; }
  int word_length() const;
  bool is_unit() const { return exps_.empty(); }
  int exponent(int gen) const;
  const Exponents& exponents() const { return exps_; }

  /// Word length counting only the listed generators.
  int word_length_in(const std::vector<bool>& mask) const;
  bool uses_only(const std::vector<bool>& mask) const;

  bool operator==(const Monomial&) const = default;

private:
  friend class Algebra;
  Monomial(Exponents e, int deg) : exps_(std::move(e)), degree_(deg) {}

  Exponents exps_;
  int degree_ = 0;
};

/// Degree-lexicographic order on the declared generator order: lower total
/// degree first; ties broken at the first generator (in declaration order)
/// whose exponents differ, smaller exponent first.
bool operator<(const Monomial& a, const Monomial& b);

class Element;

/// Generator context of a free graded-commutative algebra over Q. Immutable
/// and shared; Elements over different contexts never mix.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  static AlgebraPtr create(std::vector<GeneratorSpec> gens);

  int generator_count() const { return static_cast<int>(gens_.size()); }
  const GeneratorSpec& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  int find_generator(std::string_view name) const;  // -1 when absent

  Monomial unit() const { return Monomial(); }
  /// Canonicalize (sort, merge). Throws on non-positive exponents, unknown
  /// generators, or an odd generator with exponent > 1.
  Monomial monomial(Monomial::Exponents exps) const;
  Monomial generator_monomial(int gen) const;

  struct MonoProd {
    bool zero = false;
    int sign = 1;
    Monomial mono;
  };
  /// Product with the Koszul sign from counting inversions of odd
  /// generators during the merge. `zero` when a shared odd generator occurs.
  MonoProd multiply(const Monomial& a, const Monomial& b) const;

  /// All canonical monomials of total degree k, ascending canonical order.
  std::vector<Monomial> basis_in_degree(int k) const;

  std::string to_string(const Monomial& m) const;

private:
  Algebra() = default;
  std::vector<GeneratorSpec> gens_;
  std::map<std::string, int, std::less<>> index_;
};

/// Sparse Q-linear combination of monomials over a fixed algebra. Immutable
/// value semantics: all operations return fresh values; equality is equality
/// of the canonical term maps.
class Element {
public:
  using TermMap = std::map<Monomial, Rational>;

  Element() = default;  // detached zero; only comparable/assignable

  static Element zero(AlgebraPtr alg);
  static Element unit(AlgebraPtr alg, Rational c = Rational(1));
  static Element generator(AlgebraPtr alg, int gen);
  static Element term(AlgebraPtr alg, Monomial m, Rational c);

  const AlgebraPtr& algebra() const { return alg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  /// The common degree of all monomials, or nullopt when zero or mixed.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous_of(int k) const;  // the zero element is of every degree

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element scaled(const Rational& c) const;
  Element pow(int e) const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void add_term(Monomial m, Rational c);
  void check_same_algebra(const Element& o) const;

  AlgebraPtr alg_;
  TermMap terms_;
};

inline Element operator*(const Rational& c, const Element& e) { return e.scaled(c); }

/// Extend generator images to the graded derivation of degree +1:
/// d(ab) = d(a) b + (-1)^{|a|} a d(b). images[i] is d of generator i.
Element apply_derivation(const Element& e, const std::vector<Element>& images);

/// Algebra homomorphism determined by generator images. Images must be
/// homogeneous of the generator's degree (or zero), so the map is graded.
class AlgebraHom {
public:
  AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Element& image(int gen) const { return images_[static_cast<std::size_t>(gen)]; }

  Element operator()(const Element& e) const;

private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Element> images_;
};

/// Homomorphism matching generators by name; every source generator must
/// exist in the target with the same degree.
AlgebraHom rename_hom(AlgebraPtr source, AlgebraPtr target);

}  // namespace sullivan
