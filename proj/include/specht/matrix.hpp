#pragma once

#include <vector>

#include "specht/field.hpp"

namespace specht {

// Dense exact matrix over Q or F_p. Rank over Q runs fraction-free Bareiss on a
// denominator-cleared integer copy; kernel and reduced echelon forms use exact
// field elimination. Vectors span column spaces throughout.
class ExactMatrix {
public:
    ExactMatrix() : field_(FieldSpec::rationals()) {}

    ExactMatrix(FieldSpec f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(f))
    {
        if (rows < 0 || cols < 0)
            raise(errc::dimension_mismatch, "negative matrix dimension");
    }

    static ExactMatrix identity(FieldSpec f, int n)
    {
        ExactMatrix m(f, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = Scalar::one(f);
        return m;
    }

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c)
    {
        bounds(r, c);
        return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

    const Scalar& at(int r, int c) const
    {
        bounds(r, c);
        return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(field_, cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    ExactMatrix operator*(const ExactMatrix& o) const
    {
        require_same_field(field_, o.field_);
        if (cols_ != o.rows_)
            raise(errc::dimension_mismatch, "matrix product shape");
        ExactMatrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& aik = at(i, k);
                if (aik.is_zero())
                    continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Scalar& bkj = o.at(k, j);
                    if (!bkj.is_zero())
                        r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    ExactMatrix operator-(const ExactMatrix& o) const
    {
        require_same_field(field_, o.field_);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            raise(errc::dimension_mismatch, "matrix difference shape");
        ExactMatrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }

    ExactMatrix scaled(const Scalar& c) const
    {
        ExactMatrix r = *this;
        for (Scalar& v : r.a_)
            v = v * c;
        return r;
    }

    bool is_zero() const
    {
        for (const Scalar& v : a_)
            if (!v.is_zero())
                return false;
        return true;
    }

    bool operator==(const ExactMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
            return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i]))
                return false;
        return true;
    }

    // Columns of `other` appended to the right.
    ExactMatrix augmented(const ExactMatrix& other) const
    {
        require_same_field(field_, other.field_);
        if (rows_ != other.rows_)
            raise(errc::dimension_mismatch, "augment with mismatched row count");
        ExactMatrix r(field_, rows_, cols_ + other.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j)
                r.at(i, j) = at(i, j);
            for (int j = 0; j < other.cols_; ++j)
                r.at(i, cols_ + j) = other.at(i, j);
        }
        return r;
    }

    ExactMatrix rref(std::vector<int>* pivot_cols = nullptr) const
    {
        ExactMatrix m = *this;
        std::vector<int> pivots;
        int lead = 0;
        for (int col = 0; col < cols_ && lead < rows_; ++col) {
            int pr = -1;
            for (int r = lead; r < rows_; ++r)
                if (!m.at(r, col).is_zero()) {
                    pr = r;
                    break;
                }
            if (pr < 0)
                continue;
            m.swap_rows(pr, lead);
            Scalar inv = m.at(lead, col).inv();
            for (int j = col; j < cols_; ++j)
                m.at(lead, j) = m.at(lead, j) * inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == lead)
                    continue;
                Scalar f = m.at(r, col);
                if (f.is_zero())
                    continue;
                for (int j = col; j < cols_; ++j)
                    m.at(r, j) = m.at(r, j) - f * m.at(lead, j);
            }
            pivots.push_back(col);
            ++lead;
        }
        if (pivot_cols)
            *pivot_cols = pivots;
        return m;
    }

    int rank() const
    {
        if (field_.kind == FieldKind::Rationals)
            return bareiss_rank();
        std::vector<int> piv;
        rref(&piv);
        return static_cast<int>(piv.size());
    }

    // Basis of { v : M v = 0 }, one vector per non-pivot column.
    std::vector<std::vector<Scalar>> kernel_basis() const
    {
        std::vector<int> piv;
        ExactMatrix r = rref(&piv);
        std::vector<char> is_pivot(static_cast<size_t>(cols_), 0);
        for (int c : piv)
            is_pivot[static_cast<size_t>(c)] = 1;
        std::vector<std::vector<Scalar>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[static_cast<size_t>(free)])
                continue;
            std::vector<Scalar> v(static_cast<size_t>(cols_), Scalar::zero(field_));
            v[static_cast<size_t>(free)] = Scalar::one(field_);
            for (size_t k = 0; k < piv.size(); ++k)
                v[static_cast<size_t>(piv[k])] = -r.at(static_cast<int>(k), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    bool in_column_space(const std::vector<Scalar>& v) const
    {
        if (static_cast<int>(v.size()) != rows_)
            raise(errc::dimension_mismatch, "vector length vs row count");
        ExactMatrix col(field_, rows_, 1);
        for (int i = 0; i < rows_; ++i)
            col.at(i, 0) = v[static_cast<size_t>(i)];
        return rank() == augmented(col).rank();
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const
    {
        if (static_cast<int>(v.size()) != cols_)
            raise(errc::dimension_mismatch, "vector length vs column count");
        std::vector<Scalar> out(static_cast<size_t>(rows_), Scalar::zero(field_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
                    out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

private:
    void bounds(int r, int c) const
    {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            raise(errc::index_out_of_range, "matrix index");
    }

    void swap_rows(int a, int b)
    {
        if (a == b)
            return;
        for (int j = 0; j < cols_; ++j)
            std::swap(at(a, j), at(b, j));
    }

    // Fraction-free elimination on a denominator-cleared integer copy.
    int bareiss_rank() const
    {
        std::vector<std::vector<Int>> m(static_cast<size_t>(rows_), std::vector<Int>(static_cast<size_t>(cols_)));
        for (int i = 0; i < rows_; ++i) {
            Int l = 1;
            for (int j = 0; j < cols_; ++j)
                l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(at(i, j).rat())));
            for (int j = 0; j < cols_; ++j) {
                Rat q = at(i, j).rat() * Rat(l);
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Int(boost::multiprecision::numerator(q));
            }
        }
        Int prev = 1;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int pr = -1;
            for (int r = row; r < rows_; ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0)
                continue;
            std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(row)]);
            for (int r = row + 1; r < rows_; ++r) {
                for (int j = col + 1; j < cols_; ++j) {
                    Int t = m[static_cast<size_t>(row)][static_cast<size_t>(col)] * m[static_cast<size_t>(r)][static_cast<size_t>(j)]
                        - m[static_cast<size_t>(r)][static_cast<size_t>(col)] * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
                    m[static_cast<size_t>(r)][static_cast<size_t>(j)] = t / prev;
                }
                m[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
            }
            prev = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            ++row;
        }
        return row;
    }

    FieldSpec field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

// Column-span containment: colspace(A) <= colspace(B).
inline bool colspace_contained(const ExactMatrix& inner, const ExactMatrix& outer)
{
    if (inner.rows() != outer.rows())
        raise(errc::dimension_mismatch, "column-space comparison with mismatched row counts");
    return outer.rank() == outer.augmented(inner).rank();
}

inline bool colspace_equal(const ExactMatrix& a, const ExactMatrix& b)
{
    return colspace_contained(a, b) && colspace_contained(b, a);
}

// Columns of both matrices describe subspaces of the same ambient space; the
// result's columns span their intersection.
inline ExactMatrix colspace_intersection(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.rows() != b.rows())
        raise(errc::dimension_mismatch, "intersection with mismatched row counts");
    ExactMatrix stacked = a.augmented(b.scaled(-Scalar::one(a.field())));
    auto ker = stacked.kernel_basis();
    ExactMatrix out(a.field(), a.rows(), static_cast<int>(ker.size()));
    for (size_t k = 0; k < ker.size(); ++k) {
        std::vector<Scalar> x(ker[k].begin(), ker[k].begin() + a.cols());
        std::vector<Scalar> v = a.apply(x);
        for (int i = 0; i < a.rows(); ++i)
            out.at(i, static_cast<int>(k)) = v[static_cast<size_t>(i)];
    }
    return out;
}

} // namespace specht
