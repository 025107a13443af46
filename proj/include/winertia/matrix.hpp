#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "winertia/graph.hpp"
#include "winertia/rational.hpp"

namespace winertia {

/// Dense symmetric matrix over the rationals. Every mutator keeps the matrix
/// symmetric by acting on a row and the matching column together, i.e. every
/// mutator is an elementary congruence.
class SymRationalMatrix {
  public:
    SymRationalMatrix() = default;
    explicit SymRationalMatrix(std::size_t order);

    std::size_t order() const { return n_; }

    const Rational& at(std::size_t i, std::size_t j) const;
    /// Sets (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, const Rational& value);

    // In-place elementary congruence operations.
    void swap_rows_cols(std::size_t i, std::size_t j);
    void scale_row_col(std::size_t i, const Rational& k);
    /// row dst += k * row src, then column dst += k * column src.
    void add_row_col(std::size_t src, std::size_t dst, const Rational& k);

    bool is_symmetric() const;

    friend bool operator==(const SymRationalMatrix&, const SymRationalMatrix&) = default;

  private:
    Rational& cell(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Rational& cell(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::size_t n_ = 0;
    std::vector<Rational> data_;
};

/// One row per line, reduced rationals separated by single spaces.
std::string dump_matrix(const SymRationalMatrix& m);

SymRationalMatrix ecmo_swap(const SymRationalMatrix& m, std::size_t i, std::size_t j);
SymRationalMatrix ecmo_scale(const SymRationalMatrix& m, std::size_t i, const Rational& k);
SymRationalMatrix ecmo_add(const SymRationalMatrix& m, std::size_t src, std::size_t dst,
                           const Rational& k);

struct EcmoStep {
    enum class Kind { Swap, Scale, Add };
    Kind kind;
    std::size_t i;  // swap: first index; scale: row; add: source row
    std::size_t j;  // swap: second index; add: destination row; unused for scale
    Rational k;     // unused for swap
};

using EcmoTrace = std::vector<EcmoStep>;

struct Diagonalization {
    Inertia inertia;
    EcmoTrace steps;
    /// Diagonal of the final congruent matrix, in pivot order.
    std::vector<Rational> diagonal;
};

/// Sylvester inertia by symmetric Gaussian elimination with ECMOs only.
///
/// Pivots on the lowest-index nonzero diagonal entry of the active block. When
/// the active diagonal is all zero, the lexicographically smallest nonzero
/// (i, j), i < j, is folded in by add(j, i, 1), which makes (i, i) = 2 m(i, j)
/// (exact over Q, characteristic 0).
Diagonalization congruent_diagonalize(const SymRationalMatrix& m);

/// Inertia of A(g), for any graph.
Inertia inertia_oracle(const WeightedGraph& g);

}  // namespace winertia
