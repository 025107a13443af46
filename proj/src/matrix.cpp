#include "winertia/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace winertia {

SymRationalMatrix::SymRationalMatrix(std::size_t order) : n_(order), data_(order * order) {}

const Rational& SymRationalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    return cell(i, j);
}

void SymRationalMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    cell(i, j) = value;
    cell(j, i) = value;
}

void SymRationalMatrix::swap_rows_cols(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw std::out_of_range("ecmo swap: index out of range");
    if (i == j) throw std::invalid_argument("ecmo swap: indices must differ");
    for (std::size_t c = 0; c < n_; ++c) std::swap(cell(i, c), cell(j, c));
    for (std::size_t r = 0; r < n_; ++r) std::swap(cell(r, i), cell(r, j));
}

void SymRationalMatrix::scale_row_col(std::size_t i, const Rational& k) {
    if (i >= n_) throw std::out_of_range("ecmo scale: index out of range");
    if (sgn(k) == 0) throw std::invalid_argument("ecmo scale: factor must be nonzero");
    for (std::size_t c = 0; c < n_; ++c) cell(i, c) *= k;
    for (std::size_t r = 0; r < n_; ++r) cell(r, i) *= k;
}

void SymRationalMatrix::add_row_col(std::size_t src, std::size_t dst, const Rational& k) {
    if (src >= n_ || dst >= n_) throw std::out_of_range("ecmo add: index out of range");
    if (src == dst) throw std::invalid_argument("ecmo add: source and destination must differ");
    if (sgn(k) == 0) throw std::invalid_argument("ecmo add: factor must be nonzero");
    for (std::size_t c = 0; c < n_; ++c) cell(dst, c) += k * cell(src, c);
    for (std::size_t r = 0; r < n_; ++r) cell(r, dst) += k * cell(r, src);
}

bool SymRationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (cell(i, j) != cell(j, i)) return false;
        }
    }
    return true;
}

std::string dump_matrix(const SymRationalMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) out << ' ';
            out << to_string(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

SymRationalMatrix ecmo_swap(const SymRationalMatrix& m, std::size_t i, std::size_t j) {
    auto out = m;
    out.swap_rows_cols(i, j);
    return out;
}

SymRationalMatrix ecmo_scale(const SymRationalMatrix& m, std::size_t i, const Rational& k) {
    auto out = m;
    out.scale_row_col(i, k);
    return out;
}

SymRationalMatrix ecmo_add(const SymRationalMatrix& m, std::size_t src, std::size_t dst,
                           const Rational& k) {
    auto out = m;
    out.add_row_col(src, dst, k);
    return out;
}

Diagonalization congruent_diagonalize(const SymRationalMatrix& input) {
    SymRationalMatrix m = input;
    const std::size_t n = m.order();
    Diagonalization out;

    for (std::size_t front = 0; front < n; ++front) {
        // Pivot search in the active block [front, n).
        std::size_t pivot = n;
        for (std::size_t i = front; i < n && pivot == n; ++i) {
            if (sgn(m.at(i, i)) != 0) pivot = i;
        }
        if (pivot == n) {
            for (std::size_t i = front; i < n && pivot == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (sgn(m.at(i, j)) != 0) {
                        m.add_row_col(j, i, 1);
                        out.steps.push_back({EcmoStep::Kind::Add, j, i, Rational(1)});
                        pivot = i;
                        break;
                    }
                }
            }
        }
        if (pivot == n) break;  // active block is zero

        if (pivot != front) {
            m.swap_rows_cols(pivot, front);
            out.steps.push_back({EcmoStep::Kind::Swap, pivot, front, Rational(0)});
        }
        const Rational d = m.at(front, front);
        for (std::size_t r = front + 1; r < n; ++r) {
            if (sgn(m.at(r, front)) == 0) continue;
            Rational k = -m.at(r, front) / d;
            m.add_row_col(front, r, k);
            out.steps.push_back({EcmoStep::Kind::Add, front, r, std::move(k)});
        }
        out.diagonal.push_back(d);
        if (sgn(d) > 0) {
            ++out.inertia.pos;
        } else {
            ++out.inertia.neg;
        }
    }
    out.inertia.zero = n - out.inertia.pos - out.inertia.neg;
    return out;
}

Inertia inertia_oracle(const WeightedGraph& g) {
    return congruent_diagonalize(adjacency_matrix(g)).inertia;
}

}  // namespace winertia
