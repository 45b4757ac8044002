#pragma once

#include <utility>
#include <vector>

#include "sullivan/rational.hpp"

namespace sullivan {

/// Sparse vector over Q: (index, coefficient) pairs sorted by index,
/// no zero coefficients stored.
class SparseVec {
public:
  using Term = std::pair<int, Rational>;

  SparseVec() = default;
  explicit SparseVec(std::vector<Term> terms);
  static SparseVec unit(int index, Rational coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  int leading_index() const;  // smallest index; -1 on zero
  Rational coefficient(int index) const;

  void add_term(int index, const Rational& coeff);
  void scale(const Rational& c);

  bool operator==(const SparseVec&) const = default;

private:
  std::vector<Term> terms_;
};

SparseVec add(const SparseVec& a, const SparseVec& b);
/// a + c*b
SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec scaled(const SparseVec& a, const Rational& c);

/// Incremental reduced row echelon form over Q. Pivot of each row is the
/// smallest stored index, normalized to 1, and eliminated from every other
/// row, so reductions are canonical.
///
/// When combination tracking is on, every inserted vector gets a sequential
/// tag and each row remembers its expression in terms of the inserted
/// vectors, which makes membership certificates and kernel bases cheap.
class Echelon {
public:
  explicit Echelon(bool track_combinations = false) : track_(track_combinations) {}

  struct Reduction {
    SparseVec remainder;
    SparseVec combination;  // over insertion tags; valid when tracking
  };

  /// Reduce v against the current rows without modifying the echelon.
  Reduction reduce(const SparseVec& v) const;

  /// Insert v. Returns the tag assigned to v (tags count every call,
  /// including vectors that reduce to zero). `reduced_to_zero`, when given,
  /// reports whether v was already in the span.
  int insert(SparseVec v, bool* reduced_to_zero = nullptr);

  /// Insert v; when it reduces to zero and tracking is on, *dependency
  /// receives the combination of previously inserted vectors equal to v.
  int insert_with_dependency(SparseVec v, bool* reduced_to_zero, SparseVec* dependency);

  bool contains(const SparseVec& v) const { return reduce(v).remainder.is_zero(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<SparseVec> basis() const;  // rows sorted by pivot

private:
  struct Row {
    SparseVec vec;   // pivot coefficient 1
    SparseVec comb;  // expression over insertion tags
  };
  bool track_ = false;
  int next_tag_ = 0;
  std::vector<Row> rows_;  // kept sorted by pivot index
};

/// Kernel of the linear map e_i -> images[i], as an echelonized list of
/// coefficient vectors over the domain indices. Deterministic.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& images);

/// Rank of a list of vectors.
int rank_of(const std::vector<SparseVec>& vectors);

/// Echelonize a family (reduced form, deterministic basis).
std::vector<SparseVec> echelonize(const std::vector<SparseVec>& vectors);

}  // namespace sullivan
