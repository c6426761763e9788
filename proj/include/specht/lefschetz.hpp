#pragma once

#include <map>
#include <optional>
#include <vector>

#include "specht/matrix.hpp"
#include "specht/specht.hpp"

namespace specht {

// The square-free algebra A = F[x_1..x_n]/(x_1^2..x_n^2) with its graded
// monomial bases, and the sl_2 operators D (lowering), L (raising, times
// e_1) and H (grading) acting between the graded pieces.
class SquareFreeAlgebra {
public:
    SquareFreeAlgebra(int n, FieldSpec field) : n_(n), field_(field)
    {
        if (n < 0)
            raise(errc::parameter_out_of_range, "negative variable count");
        basis_.resize(static_cast<size_t>(n + 1));
        index_.resize(static_cast<size_t>(n + 1));
        for (int d = 0; d <= n; ++d) {
            basis_[static_cast<size_t>(d)] = subsets(n, d);
            for (size_t i = 0; i < basis_[static_cast<size_t>(d)].size(); ++i)
                index_[static_cast<size_t>(d)].emplace(basis_[static_cast<size_t>(d)][i], static_cast<int>(i));
        }
    }

    int n() const { return n_; }
    const FieldSpec& field() const { return field_; }
    int dim(int degree) const
    {
        if (degree < 0 || degree > n_)
            return 0;
        return static_cast<int>(basis_[static_cast<size_t>(degree)].size());
    }
    const std::vector<std::vector<int>>& basis(int degree) const
    {
        check_degree(degree);
        return basis_[static_cast<size_t>(degree)];
    }

    int index_of(int degree, const std::vector<int>& subset) const
    {
        check_degree(degree);
        auto it = index_[static_cast<size_t>(degree)].find(subset);
        if (it == index_[static_cast<size_t>(degree)].end())
            raise(errc::internal, "subset not in the graded basis");
        return it->second;
    }

    // Coefficient vector of a homogeneous square-free polynomial in A_degree.
    std::vector<Scalar> to_vector(const Polynomial& f, int degree) const
    {
        check_degree(degree);
        require_same_field(field_, f.field());
        if (f.nvars() != n_)
            raise(errc::dimension_mismatch, "polynomial over the wrong variable count");
        std::vector<Scalar> v(static_cast<size_t>(dim(degree)), Scalar::zero(field_));
        for (const Term& t : f.terms()) {
            if (!t.m.squarefree() || t.m.deg() != degree)
                raise(errc::invalid_degree, "not a square-free form of degree " + std::to_string(degree));
            std::vector<int> s;
            for (int i = 0; i < n_; ++i)
                if (t.m.exp(i) == 1)
                    s.push_back(i + 1);
            v[static_cast<size_t>(index_of(degree, s))] = t.c;
        }
        return v;
    }

    Polynomial to_polynomial(const std::vector<Scalar>& v, int degree) const
    {
        check_degree(degree);
        if (static_cast<int>(v.size()) != dim(degree))
            raise(errc::dimension_mismatch, "vector length vs graded dimension");
        Polynomial f = Polynomial::zero(field_, n_);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero())
                continue;
            std::vector<int> e(static_cast<size_t>(n_), 0);
            for (int vi : basis_[static_cast<size_t>(degree)][i])
                e[static_cast<size_t>(vi - 1)] = 1;
            f += Polynomial::monomial(field_, Monomial(e), v[i]);
        }
        return f;
    }

private:
    void check_degree(int degree) const
    {
        if (degree < 0 || degree > n_)
            raise(errc::invalid_degree, "degree outside 0..n");
    }

    int n_;
    FieldSpec field_;
    std::vector<std::vector<std::vector<int>>> basis_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

enum class OperatorKind { Lowering, Raising, Grading, RaisingPower };

struct GradedOperator {
    OperatorKind kind;
    int source_degree;
    int power; // RaisingPower only
    ExactMatrix matrix;
};

// D: A_k -> A_{k-1}, L: A_k -> A_{k+1}, H: A_k -> A_k (scalar n-2k),
// L^m: A_k -> A_{k+m}. D and L are 0/1 incidence matrices of subset
// containment, and L at k->k+1 is the transpose of D at k+1->k.
inline GradedOperator operator_matrix(const SquareFreeAlgebra& alg, OperatorKind kind, int degree, int power = 1)
{
    const FieldSpec& f = alg.field();
    int n = alg.n();
    if (degree < 0 || degree > n)
        raise(errc::invalid_degree, "degree outside 0..n");
    switch (kind) {
    case OperatorKind::Lowering: {
        int rows = degree > 0 ? alg.dim(degree - 1) : 0;
        ExactMatrix m(f, rows, alg.dim(degree));
        if (degree > 0)
            for (int c = 0; c < alg.dim(degree); ++c) {
                const auto& s = alg.basis(degree)[static_cast<size_t>(c)];
                for (size_t drop = 0; drop < s.size(); ++drop) {
                    std::vector<int> t;
                    for (size_t i = 0; i < s.size(); ++i)
                        if (i != drop)
                            t.push_back(s[i]);
                    m.at(alg.index_of(degree - 1, t), c) = Scalar::one(f);
                }
            }
        return {kind, degree, 1, std::move(m)};
    }
    case OperatorKind::Raising: {
        int rows = degree < n ? alg.dim(degree + 1) : 0;
        ExactMatrix m(f, rows, alg.dim(degree));
        if (degree < n)
            for (int c = 0; c < alg.dim(degree); ++c) {
                const auto& s = alg.basis(degree)[static_cast<size_t>(c)];
                std::vector<char> in(static_cast<size_t>(n + 1), 0);
                for (int v : s)
                    in[static_cast<size_t>(v)] = 1;
                for (int v = 1; v <= n; ++v) {
                    if (in[static_cast<size_t>(v)])
                        continue;
                    std::vector<int> t = s;
                    t.insert(std::lower_bound(t.begin(), t.end(), v), v);
                    m.at(alg.index_of(degree + 1, t), c) = Scalar::one(f);
                }
            }
        return {kind, degree, 1, std::move(m)};
    }
    case OperatorKind::Grading: {
        ExactMatrix m = ExactMatrix::identity(f, alg.dim(degree)).scaled(Scalar::from_int(f, n - 2 * degree));
        return {kind, degree, 1, std::move(m)};
    }
    case OperatorKind::RaisingPower: {
        if (power < 0)
            raise(errc::invalid_degree, "negative raising power");
        // powers that leave the algebra are the zero map (0 rows)
        ExactMatrix m = ExactMatrix::identity(f, alg.dim(degree));
        for (int i = 0; i < power && degree + i <= n; ++i)
            m = operator_matrix(alg, OperatorKind::Raising, degree + i).matrix * m;
        return {kind, degree, power, std::move(m)};
    }
    }
    raise(errc::internal, "unknown operator kind");
}

// [D,L] = H, [H,D] = 2D, [H,L] = -2L in every degree, exactly.
inline bool check_sl2_relations(const SquareFreeAlgebra& alg)
{
    const FieldSpec& f = alg.field();
    int n = alg.n();
    for (int k = 0; k <= n; ++k) {
        ExactMatrix Dk = operator_matrix(alg, OperatorKind::Lowering, k).matrix;
        ExactMatrix Lk = operator_matrix(alg, OperatorKind::Raising, k).matrix;
        ExactMatrix Hk = operator_matrix(alg, OperatorKind::Grading, k).matrix;
        // [D,L] on A_k: D_{k+1} L_k - L_{k-1} D_k
        ExactMatrix dl(f, alg.dim(k), alg.dim(k));
        if (k < n)
            dl = operator_matrix(alg, OperatorKind::Lowering, k + 1).matrix * Lk;
        if (k > 0)
            dl = dl - operator_matrix(alg, OperatorKind::Raising, k - 1).matrix * Dk;
        if (!(dl == Hk))
            return false;
        // [H,D] = 2D on A_k: H_{k-1} D_k - D_k H_k
        if (k > 0) {
            ExactMatrix hd = operator_matrix(alg, OperatorKind::Grading, k - 1).matrix * Dk - Dk * Hk;
            if (!(hd == Dk.scaled(Scalar::from_int(f, 2))))
                return false;
        }
        // [H,L] = -2L on A_k
        if (k < n) {
            ExactMatrix hl = operator_matrix(alg, OperatorKind::Grading, k + 1).matrix * Lk - Lk * Hk;
            if (!(hl == Lk.scaled(Scalar::from_int(f, -2))))
                return false;
        }
    }
    return true;
}

// Basis of P_k = ker(D) cap A_k as column vectors.
inline ExactMatrix primitive_subspace(const SquareFreeAlgebra& alg, int k)
{
    auto ker = operator_matrix(alg, OperatorKind::Lowering, k).matrix.kernel_basis();
    ExactMatrix m(alg.field(), alg.dim(k), static_cast<int>(ker.size()));
    for (size_t j = 0; j < ker.size(); ++j)
        for (int i = 0; i < alg.dim(k); ++i)
            m.at(i, static_cast<int>(j)) = ker[j][static_cast<size_t>(i)];
    return m;
}

// Span of V(n,k,d) inside A_d as column vectors (one column per standard
// tableau polynomial).
inline ExactMatrix specht_span(const SquareFreeAlgebra& alg, int k, int d)
{
    SpechtModuleBasis b = module_basis(ShiftedShape(alg.n(), k, d), alg.field());
    ExactMatrix m(alg.field(), alg.dim(d), b.dimension());
    for (int j = 0; j < b.dimension(); ++j) {
        auto v = alg.to_vector(b.polynomials[static_cast<size_t>(j)], d);
        for (int i = 0; i < alg.dim(d); ++i)
            m.at(i, j) = v[static_cast<size_t>(i)];
    }
    return m;
}

// Weak Lefschetz for A: every L: A_{i-1} -> A_i has maximal rank.
inline bool has_wlp(int n, FieldSpec field)
{
    SquareFreeAlgebra alg(n, field);
    for (int i = 1; i <= n; ++i) {
        ExactMatrix L = operator_matrix(alg, OperatorKind::Raising, i - 1).matrix;
        if (L.rank() != std::min(alg.dim(i - 1), alg.dim(i)))
            return false;
    }
    return true;
}

// Kustin-Vraciu threshold: p = 0 or p >= floor((n+3)/2).
inline bool wlp_threshold_predicate(int n, long long p)
{
    return p == 0 || p >= (n + 3) / 2;
}

// Strong Lefschetz for (A,L): L^{n-2k}: A_k -> A_{n-k} bijective for all k.
inline bool has_slp(int n, FieldSpec field)
{
    SquareFreeAlgebra alg(n, field);
    for (int k = 0; 2 * k <= n; ++k) {
        ExactMatrix P = operator_matrix(alg, OperatorKind::RaisingPower, k, n - 2 * k).matrix;
        if (P.rank() != alg.dim(k))
            return false;
    }
    return true;
}

inline bool slp_threshold_predicate(int n, long long p)
{
    return p == 0 || p >= n + 1;
}

// Lemma-level report relating surjectivity of D, dim P_k vs dim V(n,k,k) and
// the subspace equality V(n,k,k) = P_k.
struct DSurjectivityReport {
    int n = 0;
    int k = 0;
    FieldSpec field;
    std::vector<bool> surjective;    // D: A_i -> A_{i-1}, i = 1..k
    bool surjective_at_k = false;
    Int dim_primitive{0};
    Int dim_specht{0};
    bool equality = false;           // V(n,k,k) == P_k
    std::optional<Polynomial> witness; // element of P_k not in V(n,k,k)

    bool consistent() const
    {
        // Lemma-forced equivalences: equality <=> surjectivity at k, and
        // surjectivity at k <=> surjectivity for all i <= k.
        bool all = true;
        for (bool s : surjective)
            all = all && s;
        return (equality == surjective_at_k) && (surjective_at_k == all);
    }
};

inline DSurjectivityReport d_surjectivity_equiv(int n, int k, FieldSpec field)
{
    if (2 * k > n)
        raise(errc::parameter_out_of_range, "need 2k <= n");
    SquareFreeAlgebra alg(n, field);
    DSurjectivityReport rep;
    rep.n = n;
    rep.k = k;
    rep.field = field;
    for (int i = 1; i <= k; ++i) {
        ExactMatrix D = operator_matrix(alg, OperatorKind::Lowering, i).matrix;
        rep.surjective.push_back(D.rank() == alg.dim(i - 1));
    }
    rep.surjective_at_k = k == 0 || rep.surjective.back();
    ExactMatrix P = primitive_subspace(alg, k);
    ExactMatrix V = specht_span(alg, k, k);
    rep.dim_primitive = P.rank();
    rep.dim_specht = V.rank();
    rep.equality = colspace_equal(P, V);
    if (!rep.equality) {
        // preferred witness: e_k(x_1..x_{2k-1}) when it is primitive but not
        // in the Specht span, as in the small-characteristic argument
        std::vector<int> vars;
        for (int i = 1; i <= 2 * k - 1; ++i)
            vars.push_back(i);
        Polynomial ek = elementary_symmetric(k, vars, n, field);
        auto vek = alg.to_vector(ek, k);
        bool primitive = true;
        auto dek = operator_matrix(alg, OperatorKind::Lowering, k).matrix.apply(vek);
        for (const Scalar& s : dek)
            primitive = primitive && s.is_zero();
        if (primitive && !V.in_column_space(vek)) {
            rep.witness = ek;
        } else {
            auto ker = operator_matrix(alg, OperatorKind::Lowering, k).matrix.kernel_basis();
            for (const auto& kv : ker)
                if (!V.in_column_space(kv)) {
                    rep.witness = alg.to_polynomial(kv, k);
                    break;
                }
        }
    }
    return rep;
}

// D(L^m(a)) = m (n - 2k + 1 - m) L^{m-1}(a) for all a in P_k.
inline bool sl2_string_identity(int n, int k, int m, FieldSpec field)
{
    if (k < 0 || k > n || m < 0 || k + m > n)
        raise(errc::invalid_degree, "string leaves the algebra");
    SquareFreeAlgebra alg(n, field);
    ExactMatrix P = primitive_subspace(alg, k);
    if (m == 0) {
        ExactMatrix D = operator_matrix(alg, OperatorKind::Lowering, k).matrix;
        for (int j = 0; j < P.cols(); ++j) {
            std::vector<Scalar> col(static_cast<size_t>(P.rows()), Scalar::zero(field));
            for (int i = 0; i < P.rows(); ++i)
                col[static_cast<size_t>(i)] = P.at(i, j);
            for (const Scalar& s : D.apply(col))
                if (!s.is_zero())
                    return false;
        }
        return true;
    }
    ExactMatrix Lm = operator_matrix(alg, OperatorKind::RaisingPower, k, m).matrix;
    ExactMatrix Lm1 = operator_matrix(alg, OperatorKind::RaisingPower, k, m - 1).matrix;
    ExactMatrix D = operator_matrix(alg, OperatorKind::Lowering, k + m).matrix;
    Scalar scalar = Scalar::from_int(field, static_cast<long long>(m) * (n - 2 * k + 1 - m));
    ExactMatrix lhs = (D * Lm) * P;
    ExactMatrix rhs = (Lm1 * P).scaled(scalar);
    return lhs == rhs;
}

// Primitive decomposition report for V(n,k,d) under the strong Lefschetz
// hypothesis p = 0 or p >= n+1.
struct PrimitiveDecomposition {
    ShiftedShape shape;
    FieldSpec field;
    std::vector<int> summand_dims; // dim L^{d-i}(P_i), i = k..d
    Int total{0};
    bool direct_sum_equals_specht = false;
    bool kernel_equals_specht = false;
    bool explicit_basis_matches = false; // e_{d-i}(T^c) F_T spans L^{d-i}(P_i)

    bool holds() const
    {
        return direct_sum_equals_specht && kernel_equals_specht && explicit_basis_matches;
    }
};

inline PrimitiveDecomposition primitive_decomposition(int n, int k, int d, FieldSpec field)
{
    ShiftedShape shape(n, k, d);
    long long p = field.characteristic();
    if (!slp_threshold_predicate(n, p))
        raise(errc::characteristic_too_small, "primitive decomposition needs p = 0 or p >= n+1");
    SquareFreeAlgebra alg(n, field);
    PrimitiveDecomposition rep;
    rep.shape = shape;
    rep.field = field;

    ExactMatrix V = specht_span(alg, k, d);
    ExactMatrix sum(field, alg.dim(d), 0);
    bool explicit_ok = true;
    for (int i = k; i <= d; ++i) {
        ExactMatrix Pi = primitive_subspace(alg, i);
        ExactMatrix Ld = operator_matrix(alg, OperatorKind::RaisingPower, i, d - i).matrix;
        ExactMatrix image = Ld * Pi;
        rep.summand_dims.push_back(image.rank());
        sum = sum.augmented(image);

        // explicit basis e_{d-i}(T^c) F_T over standard T in STab(n,i,i);
        // for 2i > n the shape is empty and P_i = 0 under the hypothesis
        std::vector<Tableau> tabs;
        if (2 * i <= n)
            tabs = enumerate_standard(ShiftedShape(n, i, i));
        ExactMatrix expl(field, alg.dim(d), static_cast<int>(tabs.size()));
        for (size_t j = 0; j < tabs.size(); ++j) {
            std::vector<int> comp = complement(tabs[j].support(), n);
            if (d - i > static_cast<int>(comp.size()))
                continue; // e_{d-i} over too few variables: the summand is zero
            Polynomial g = specht_polynomial(tabs[j], field) * elementary_symmetric(d - i, comp, n, field);
            auto gv = alg.to_vector(g, d);
            for (int r = 0; r < alg.dim(d); ++r)
                expl.at(r, static_cast<int>(j)) = gv[static_cast<size_t>(r)];
        }
        explicit_ok = explicit_ok && colspace_equal(expl, image);
    }
    Int total = 0;
    for (int dim : rep.summand_dims)
        total += dim;
    rep.total = total;
    rep.direct_sum_equals_specht = colspace_equal(sum, V) && Int(sum.rank()) == total;

    ExactMatrix Lpow = operator_matrix(alg, OperatorKind::RaisingPower, d, n - k - d + 1).matrix;
    auto ker = Lpow.kernel_basis();
    ExactMatrix K(field, alg.dim(d), static_cast<int>(ker.size()));
    for (size_t j = 0; j < ker.size(); ++j)
        for (int i = 0; i < alg.dim(d); ++i)
            K.at(i, static_cast<int>(j)) = ker[j][static_cast<size_t>(i)];
    rep.kernel_equals_specht = colspace_equal(K, V);
    rep.explicit_basis_matches = explicit_ok;
    return rep;
}

// Restriction lemma data: V(j,k,k) vs V(n,k,k) cap B_k with B the square-free
// algebra on x_1..x_j. Containment >= holds always; equality is the lemma's
// claim under p = 0 or p >= k+1.
struct RestrictionReport {
    int n = 0, j = 0, k = 0;
    FieldSpec field;
    bool hypothesis_met = false;
    bool containment = false;
    bool equality = false;
};

inline RestrictionReport restriction_report(int n, int j, int k, FieldSpec field)
{
    if (!(2 * k <= j && j <= n))
        raise(errc::parameter_out_of_range, "need 2k <= j <= n");
    SquareFreeAlgebra alg(n, field);
    RestrictionReport rep;
    rep.n = n;
    rep.j = j;
    rep.k = k;
    rep.field = field;
    rep.hypothesis_met = field.characteristic() == 0 || field.characteristic() >= k + 1;

    ExactMatrix Vn = specht_span(alg, k, k);
    // V(j,k,k) embedded into A_k, and B_k as the span of subsets of {1..j}
    SpechtModuleBasis bj = module_basis(ShiftedShape(j, k, k), field);
    ExactMatrix Vj(field, alg.dim(k), bj.dimension());
    for (int c = 0; c < bj.dimension(); ++c) {
        auto v = alg.to_vector(bj.polynomials[static_cast<size_t>(c)].extended(n), k);
        for (int r = 0; r < alg.dim(k); ++r)
            Vj.at(r, c) = v[static_cast<size_t>(r)];
    }
    const auto& basis_k = alg.basis(k);
    std::vector<int> bcols;
    for (size_t i = 0; i < basis_k.size(); ++i)
        if (basis_k[i].empty() || basis_k[i].back() <= j)
            bcols.push_back(static_cast<int>(i));
    ExactMatrix Bk(field, alg.dim(k), static_cast<int>(bcols.size()));
    for (size_t c = 0; c < bcols.size(); ++c)
        Bk.at(bcols[c], static_cast<int>(c)) = Scalar::one(field);

    ExactMatrix inter = colspace_intersection(Vn, Bk);
    rep.containment = colspace_contained(Vj, inter);
    rep.equality = rep.containment && colspace_contained(inter, Vj);
    return rep;
}

inline bool restriction_identity(int n, int j, int k, FieldSpec field)
{
    RestrictionReport rep = restriction_report(n, j, k, field);
    if (!rep.hypothesis_met)
        raise(errc::characteristic_too_small, "restriction lemma needs p = 0 or p >= k+1");
    return rep.equality;
}

} // namespace specht
