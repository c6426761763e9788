#pragma once

#include <map>
#include <vector>

#include "specht/matrix.hpp"
#include "specht/polynomial.hpp"
#include "specht/tableaux.hpp"

namespace specht {

// F_T(d) = (x_{i_1}-x_{j_1})...(x_{i_k}-x_{j_k}) * x_{i_{k+1}}...x_{i_d} for a
// tableau laid out as in Tableau. Defined for every filling; each pair factor
// is (top - bottom), so the sign convention is Delta_{i,j} for increasing
// columns.
inline Polynomial specht_polynomial(const Tableau& T, FieldSpec field)
{
    const ShiftedShape& s = T.shape();
    Polynomial f = Polynomial::constant(field, s.n, 1);
    for (int t = 1; t <= s.k; ++t)
        f *= Polynomial::var(field, T.pair_top(t), s.n) - Polynomial::var(field, T.pair_bottom(t), s.n);
    for (int i = s.k; i < s.d; ++i)
        f *= Polynomial::var(field, T.top()[static_cast<size_t>(i)], s.n);
    return f;
}

// F_T = prod_i Delta_{C_i} for a bijective filling of an arbitrary partition;
// rows[r] lists row r left to right.
inline Polynomial general_specht_polynomial(const std::vector<int>& lambda,
                                            const std::vector<std::vector<int>>& rows, FieldSpec field)
{
    if (lambda.empty() || rows.size() != lambda.size())
        raise(errc::invalid_filling, "row count does not match the partition");
    int n = 0;
    for (size_t r = 0; r < lambda.size(); ++r) {
        if (lambda[r] <= 0 || (r > 0 && lambda[r] > lambda[r - 1]))
            raise(errc::invalid_filling, "not a partition");
        if (static_cast<int>(rows[r].size()) != lambda[r])
            raise(errc::invalid_filling, "row length does not match the partition");
        n += lambda[r];
    }
    std::vector<char> seen(static_cast<size_t>(n + 1), 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                raise(errc::invalid_filling, "entries must be a permutation of 1..n");
            seen[static_cast<size_t>(v)] = 1;
        }
    Polynomial f = Polynomial::constant(field, n, 1);
    for (int col = 0; col < lambda[0]; ++col) {
        std::vector<int> column;
        for (size_t r = 0; r < rows.size(); ++r)
            if (col < lambda[r])
                column.push_back(rows[r][static_cast<size_t>(col)]);
        f *= vandermonde(column, n, field);
    }
    return f;
}

// Coordinates in the standard basis {F_T(d) : T standard}.
struct SpechtVector {
    ShiftedShape shape;
    FieldSpec field;
    std::map<Tableau, Scalar> coords;

    Polynomial expand() const
    {
        Polynomial f = Polynomial::zero(field, shape.n);
        for (const auto& [t, c] : coords)
            f += specht_polynomial(t, field).scaled(c);
        return f;
    }

    bool is_zero() const
    {
        for (const auto& [t, c] : coords)
            if (!c.is_zero())
                return false;
        return true;
    }

    void add(const Tableau& t, const Scalar& c)
    {
        auto it = coords.find(t);
        if (it == coords.end()) {
            if (!c.is_zero())
                coords.emplace(t, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            coords.erase(it);
    }
};

// Basis of V(n,k,d): standard tableaux with their polynomials and the
// coefficient matrix over the degree-d square-free monomial basis (columns are
// basis polynomials, rows are monomials).
struct SpechtModuleBasis {
    ShiftedShape shape;
    FieldSpec field;
    std::vector<Tableau> tableaux;
    std::vector<Polynomial> polynomials;
    std::vector<Monomial> row_monomials;
    ExactMatrix coefficients;

    int dimension() const { return static_cast<int>(tableaux.size()); }
};

inline std::vector<Monomial> squarefree_monomials(int n, int d)
{
    std::vector<Monomial> out;
    for (const auto& s : subsets(n, d)) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (int v : s)
            e[static_cast<size_t>(v - 1)] = 1;
        out.emplace_back(std::move(e));
    }
    return out;
}

inline ExactMatrix squarefree_coefficient_matrix(const std::vector<Polynomial>& polys, int n, int d, FieldSpec field)
{
    std::vector<Monomial> rows = squarefree_monomials(n, d);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < rows.size(); ++i)
        index.emplace(rows[i].exps(), static_cast<int>(i));
    ExactMatrix m(field, static_cast<int>(rows.size()), static_cast<int>(polys.size()));
    for (size_t j = 0; j < polys.size(); ++j)
        for (const Term& t : polys[j].terms()) {
            auto it = index.find(t.m.exps());
            if (it == index.end())
                raise(errc::internal, "non-squarefree term in a Specht polynomial");
            m.at(it->second, static_cast<int>(j)) = t.c;
        }
    return m;
}

inline SpechtModuleBasis module_basis(const ShiftedShape& shape, FieldSpec field)
{
    SpechtModuleBasis b;
    b.shape = shape;
    b.field = field;
    b.tableaux = enumerate_standard(shape);
    for (const Tableau& t : b.tableaux)
        b.polynomials.push_back(specht_polynomial(t, field));
    b.row_monomials = squarefree_monomials(shape.n, shape.d);
    b.coefficients = squarefree_coefficient_matrix(b.polynomials, shape.n, shape.d, field);
    return b;
}

// ---- straightening ------------------------------------------------------
//
// Rewrites F_T(d) as a combination of standard ones by the two-column Specht
// relations. Every rewrite replaces a filling by two fillings strictly higher
// in composition dominance, so the recursion terminates; results are memoized
// per normalized filling.

namespace detail {

struct NormalizedTab {
    Tableau tab;
    int sign; // +1 or -1
};

// Sort columns increasing (sign per swap), free regions ascending (no sign).
inline NormalizedTab normalize_tableau(const Tableau& T)
{
    const ShiftedShape& s = T.shape();
    std::vector<int> top = T.top(), bottom = T.bottom();
    int fb = s.free_bottom_len();
    int sign = 1;
    for (int t = 0; t < s.k; ++t) {
        int& a = top[static_cast<size_t>(t)];
        int& b = bottom[static_cast<size_t>(fb + t)];
        if (a > b) {
            std::swap(a, b);
            sign = -sign;
        }
    }
    std::sort(bottom.begin(), bottom.begin() + fb);
    std::sort(top.begin() + s.k, top.end());
    return {Tableau(s, std::move(top), std::move(bottom)), sign};
}

class Straightener {
public:
    Straightener(ShiftedShape shape, FieldSpec field) : shape_(shape), field_(field) {}

    SpechtVector run(const Tableau& T)
    {
        steps_ = 0;
        NormalizedTab nt = normalize_tableau(T);
        const Coords& c = go(nt.tab);
        SpechtVector out{shape_, field_, {}};
        Scalar sgn = Scalar::from_int(field_, nt.sign);
        for (const auto& [tab, coeff] : c)
            out.add(tab, coeff * sgn);
        return out;
    }

private:
    using Coords = std::map<Tableau, Scalar>;

    const Coords& go(const Tableau& T) // T normalized
    {
        auto hit = memo_.find(T);
        if (hit != memo_.end())
            return hit->second;
        if (++steps_ > step_limit_)
            raise(errc::non_termination, "straightening rewrite limit exceeded");

        const ShiftedShape& s = shape_;
        int fb = s.free_bottom_len();
        Coords result;

        auto rewrite = [&](int a1, int b1, int a2, int b2) {
            // F_T = F_{(a1,b1).T} + F_{(a2,b2).T}
            for (auto [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
                NormalizedTab nt = normalize_tableau(T.transposed_entries(a, b));
                Scalar sgn = Scalar::from_int(field_, nt.sign);
                for (const auto& [tab, coeff] : go(nt.tab))
                    add(result, tab, coeff * sgn);
            }
        };

        if (s.k > 0 && fb > 0 && T.bottom()[static_cast<size_t>(fb - 1)] > T.pair_bottom(1)) {
            // descent between the last free-bottom entry and j_1
            int i1 = T.pair_top(1);
            int j1 = T.pair_bottom(1);
            int w = T.bottom()[static_cast<size_t>(fb - 1)];
            rewrite(w, j1, i1, w);
        } else {
            int pair_descent = 0; // first b with a descent between pairs b, b+1
            bool top_descent = false;
            for (int b = 1; b < s.k; ++b) {
                if (T.pair_top(b) > T.pair_top(b + 1)) {
                    pair_descent = b;
                    top_descent = true;
                    break;
                }
                if (T.pair_bottom(b) > T.pair_bottom(b + 1)) {
                    pair_descent = b;
                    break;
                }
            }
            if (pair_descent > 0) {
                int b = pair_descent;
                int ib = T.pair_top(b), jb = T.pair_bottom(b);
                int ib1 = T.pair_top(b + 1), jb1 = T.pair_bottom(b + 1);
                if (top_descent)
                    rewrite(ib1, jb, ib1, ib); // i_{b+1} < i_b < j_b
                else
                    rewrite(ib1, jb, jb1, jb); // i_b < i_{b+1} < j_{b+1} < j_b
            } else if (s.k > 0 && s.d > s.k && T.pair_top(s.k) > T.top()[static_cast<size_t>(s.k)]) {
                // descent between i_k and the first free-top entry i_{k+1}
                int ik = T.pair_top(s.k), jk = T.pair_bottom(s.k);
                int ik1 = T.top()[static_cast<size_t>(s.k)];
                rewrite(ik1, ik, ik1, jk);
            } else {
                // no descents left: T is standard
                if (!T.is_standard())
                    raise(errc::internal, "normalized tableau without descents must be standard");
                result.emplace(T, Scalar::one(field_));
            }
        }
        return memo_.emplace(T, std::move(result)).first->second;
    }

    static void add(Coords& c, const Tableau& t, const Scalar& v)
    {
        auto it = c.find(t);
        if (it == c.end()) {
            if (!v.is_zero())
                c.emplace(t, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero())
            c.erase(it);
    }

    ShiftedShape shape_;
    FieldSpec field_;
    std::map<Tableau, Coords> memo_;
    long steps_ = 0;
    static constexpr long step_limit_ = 2000000;
};

} // namespace detail

inline SpechtVector straighten(const Tableau& T, FieldSpec field)
{
    detail::Straightener st(T.shape(), field);
    return st.run(T);
}

// ---- the change-of-coordinates map Phi ----------------------------------

inline std::vector<Polynomial> phi_images(int n, FieldSpec field)
{
    std::vector<Polynomial> ys;
    for (int i = 1; i < n; ++i)
        ys.push_back(Polynomial::var(field, n, n) - Polynomial::var(field, i, n));
    ys.push_back(Polynomial::var(field, n, n));
    return ys;
}

// Phi(x_i) = x_n - x_i for i < n, Phi(x_n) = x_n; an involution.
inline Polynomial phi_map(const Polynomial& f)
{
    return f.substitute(phi_images(f.nvars(), f.field()));
}

// ---- support restriction -------------------------------------------------

// Deletes the top cells holding 1..m from a standard tableau whose first m
// top entries are exactly 1..m, relabels the rest by v -> v-m, and lands in
// shape (n-m, max(k-m,0), d-m) on {1..n-m}.
inline Tableau restrict_tableau(const Tableau& T, int m)
{
    const ShiftedShape& s = T.shape();
    if (m < 0 || m > s.d)
        raise(errc::parameter_out_of_range, "restriction depth out of range");
    for (int t = 0; t < m; ++t)
        if (T.top()[static_cast<size_t>(t)] != t + 1)
            raise(errc::support_violation, "tableau does not carry 1.." + std::to_string(m) + " in its first top cells");
    ShiftedShape target(s.n - m, std::max(s.k - m, 0), s.d - m);
    std::vector<int> top, bottom;
    for (size_t i = static_cast<size_t>(m); i < T.top().size(); ++i)
        top.push_back(T.top()[i] - m);
    for (int v : T.bottom())
        bottom.push_back(v - m);
    std::sort(bottom.begin(), bottom.begin() + (s.free_bottom_len() + std::min(m, s.k)));
    return Tableau(target, std::move(top), std::move(bottom));
}

inline SpechtVector restrict_support(const SpechtVector& v, int m)
{
    if (m == 0)
        return v;
    ShiftedShape target(v.shape.n - m, std::max(v.shape.k - m, 0), v.shape.d - m);
    SpechtVector out{target, v.field, {}};
    for (const auto& [t, c] : v.coords)
        out.add(restrict_tableau(t, m), c);
    return out;
}

} // namespace specht
