#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "specht/groebner.hpp"
#include "specht/lefschetz.hpp"
#include "specht/specht.hpp"

namespace specht {

// ---- ideal constructions --------------------------------------------------

// a(n,k,d), generated by the standard-tableau basis (a minimal generating set).
inline Ideal specht_ideal(int n, int k, int d, FieldSpec field)
{
    SpechtModuleBasis b = module_basis(ShiftedShape(n, k, d), field);
    return Ideal(field, n, b.polynomials);
}

// (x_1..x_n)^(d): all square-free degree-d monomials.
inline Ideal squarefree_power(int n, int d, FieldSpec field)
{
    if (d < 0 || d > n)
        raise(errc::parameter_out_of_range, "square-free power degree out of range");
    std::vector<Polynomial> gens;
    for (const Monomial& m : squarefree_monomials(n, d))
        gens.push_back(Polynomial::monomial(field, m, Scalar::one(field)));
    return Ideal(field, n, std::move(gens));
}

inline void require_ink_params(int n, int k)
{
    if (!(1 <= k && k + 1 <= n - k))
        raise(errc::parameter_out_of_range, "I(n,k) needs 1 <= k < k+1 <= n-k");
}

// I(n,k) = a(n,k,k) + (x_1..x_n)^(k+1); I(n,0) is the unit ideal by the
// usual convention.
inline Ideal specht_monomial_ideal(int n, int k, FieldSpec field)
{
    if (k == 0)
        return Ideal(field, n, {Polynomial::constant(field, n, 1)});
    require_ink_params(n, k);
    return ideal_sum(specht_ideal(n, k, k, field), squarefree_power(n, k + 1, field));
}

// (y_1..y_{n-1})^(k) + (x_n^2) with y_i = x_n - x_i, expanded in x-variables.
inline Ideal y_ideal(int n, int k, FieldSpec field)
{
    require_ink_params(n, k);
    std::vector<Polynomial> gens;
    Polynomial xn = Polynomial::var(field, n, n);
    for (const auto& s : subsets(n - 1, k)) {
        Polynomial g = Polynomial::constant(field, n, 1);
        for (int i : s)
            g *= xn - Polynomial::var(field, i, n);
        gens.push_back(std::move(g));
    }
    gens.push_back(xn * xn);
    return Ideal(field, n, std::move(gens));
}

// J(n,k) = I(n-1,k-1) + (y_1..y_{n-1})^(k) + (x_n^2), in n variables.
inline Ideal j_ideal(int n, int k, FieldSpec field)
{
    require_ink_params(n, k);
    return ideal_sum(specht_monomial_ideal(n - 1, k - 1, field).extended(n), y_ideal(n, k, field));
}

// ---- characteristic predicates ----------------------------------------------

inline bool perfectD_predicate(long long p, int k) { return p == 0 || p >= k + 1; }

// ---- theorem verdicts -------------------------------------------------------

struct TheoremVerdict {
    std::string theorem;
    int n = 0, k = 0, d = 0;
    FieldSpec field;
    bool holds = false;      // the verified statement
    bool predicted = true;   // what the theorem asserts for these parameters
    std::optional<Polynomial> witness; // on failure: in exactly one side
    double elapsed_ms = 0.0;
    std::string note;

    TheoremVerdict() = default;
    TheoremVerdict(std::string thm, int n_, int k_, int d_, FieldSpec f)
        : theorem(std::move(thm)), n(n_), k(k_), d(d_), field(f)
    {
    }

    bool matches() const { return holds == predicted; }
};

namespace detail_thm {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

inline void require_cap(int n, int cap, bool allow_large)
{
    if (n > cap && !allow_large)
        raise(errc::too_large, "n = " + std::to_string(n) + " exceeds the default cap " + std::to_string(cap) + " (override to force)");
}

// an element of J \ I, taken from the reduced basis of J
inline std::optional<Polynomial> separating_witness(const Ideal& inner, const Ideal& outer)
{
    for (const Polynomial& g : outer.groebner_basis())
        if (!ideal_member(g, inner))
            return g;
    return std::nullopt;
}

} // namespace detail_thm

// Theorem: a(n,k,d) = a(n,k,d-1) cap (x_1..x_n)^(d); characteristic-free.
inline TheoremVerdict check_thm_radD(int n, int k, int d, FieldSpec field, bool allow_large = false)
{
    if (!(0 <= k && k < d && d <= n - k))
        raise(errc::parameter_out_of_range, "need 0 <= k < d <= n-k");
    detail_thm::require_cap(n, 6, allow_large);
    detail_thm::Timer timer;
    TheoremVerdict v{"radD", n, k, d, field};
    Ideal lhs = specht_ideal(n, k, d, field);
    Ideal rhs = intersect(specht_ideal(n, k, d - 1, field), squarefree_power(n, d, field));
    v.holds = ideal_equal(lhs, rhs);
    v.predicted = true;
    if (!v.holds) {
        v.witness = detail_thm::separating_witness(lhs, rhs);
        if (!v.witness)
            v.witness = detail_thm::separating_witness(rhs, lhs);
    }
    v.elapsed_ms = timer.ms();
    return v;
}

// Radical identity: the intersection of the S_m-translates of
// (x_1-x_2,...,x_1-x_h) equals the Specht ideal attached to
// (m,h): the two-rowed a(m,K,K) with K = m-h+1 when 2K <= m, and the
// three-rowed (l,l,1) Specht ideal at the odd boundary h = (m+1)/2.
inline TheoremVerdict check_radical(int m, int h, FieldSpec field, bool allow_large = false)
{
    if (!(2 <= h && h <= m))
        raise(errc::parameter_out_of_range, "need 2 <= h <= m");
    detail_thm::require_cap(m, 6, allow_large);
    detail_thm::Timer timer;
    int K = m - h + 1;
    TheoremVerdict v{"rad", m, K, K, field};

    Ideal expected(field, m, {});
    if (2 * K <= m) {
        expected = specht_ideal(m, K, K, field);
    } else if (m % 2 == 1 && h == (m + 1) / 2) {
        // boundary case: I_{2l+1, l+1} is the Specht ideal of (l,l,1)
        int ell = h - 1;
        if (ell > 2)
            raise(errc::too_large, "three-rowed boundary case beyond m = 5");
        std::vector<Polynomial> gens;
        if (ell == 1) {
            std::vector<int> all{1, 2, 3};
            gens.push_back(vandermonde(all, m, field));
        } else { // m = 5: one 3-cell column and one 2-cell column
            for (const auto& c1 : subsets(m, 3)) {
                std::vector<int> c2 = complement(c1, m);
                gens.push_back(vandermonde(c1, m, field) * vandermonde(c2, m, field));
            }
        }
        expected = Ideal(field, m, std::move(gens));
        v.note = "three-rowed boundary case (l,l,1)";
    } else {
        raise(errc::parameter_out_of_range, "h below the shifted-diagonal boundary");
    }

    std::optional<Ideal> inter;
    for (const auto& s : subsets(m, h)) {
        std::vector<Polynomial> gens;
        for (size_t i = 1; i < s.size(); ++i)
            gens.push_back(Polynomial::var(field, s[0], m) - Polynomial::var(field, s[static_cast<size_t>(i)], m));
        Ideal prime(field, m, std::move(gens));
        inter = inter ? intersect(*inter, prime) : prime;
    }
    v.holds = ideal_equal(*inter, expected);
    v.predicted = true;
    if (!v.holds) {
        v.witness = detail_thm::separating_witness(expected, *inter);
        if (!v.witness)
            v.witness = detail_thm::separating_witness(*inter, expected);
    }
    v.elapsed_ms = timer.ms();
    return v;
}

// Corollary: a(n,k,k) + (x_n) = a(n-1,k-1,k) + (x_n), and Phi maps the
// generators of a(n,k,k) onto (-1)^k times those of a(n-1,k-1,k).
inline TheoremVerdict check_coc(int n, int k, FieldSpec field, bool allow_large = false)
{
    if (!(1 <= k && k <= n - k))
        raise(errc::parameter_out_of_range, "need 1 <= k <= n-k");
    detail_thm::require_cap(n, 6, allow_large);
    detail_thm::Timer timer;
    TheoremVerdict v{"coc", n, k, 0, field};
    Ideal xn(field, n, {Polynomial::var(field, n, n)});
    Ideal lhs = ideal_sum(specht_ideal(n, k, k, field), xn);
    Ideal small = specht_ideal(n - 1, k - 1, k, field).extended(n);
    Ideal rhs = ideal_sum(small, xn);
    bool sum_equal = ideal_equal(lhs, rhs);

    // generator-wise: Phi(F_T) = (-1)^k F_{T'}
    bool phi_ok = true;
    SpechtModuleBasis big = module_basis(ShiftedShape(n, k, k), field);
    Scalar sign = Scalar::from_int(field, k % 2 ? -1 : 1);
    for (size_t i = 0; i < big.tableaux.size(); ++i) {
        const Tableau& T = big.tableaux[i];
        std::vector<int> bottom(T.bottom());
        bottom.pop_back(); // the cell holding n
        Tableau Tp(ShiftedShape(n - 1, k - 1, k), T.top(), bottom);
        Polynomial expect = specht_polynomial(Tp, field).extended(n).scaled(sign);
        phi_ok = phi_ok && phi_map(big.polynomials[i]) == expect;
    }
    v.holds = sum_equal && phi_ok;
    v.predicted = true;
    if (!sum_equal) {
        v.witness = detail_thm::separating_witness(lhs, rhs);
        if (!v.witness)
            v.witness = detail_thm::separating_witness(rhs, lhs);
    }
    v.elapsed_ms = timer.ms();
    return v;
}

// Theorem: I(n,k) = I(n-1,k-1) cap ((y)^(k) + (x_n^2)) iff p = 0 or p >= k+1.
inline TheoremVerdict check_thm_perfectD(int n, int k, FieldSpec field, bool allow_large = false)
{
    require_ink_params(n, k);
    if (n < 3)
        raise(errc::parameter_out_of_range, "need n >= 3");
    detail_thm::require_cap(n, 6, allow_large);
    detail_thm::Timer timer;
    TheoremVerdict v{"perfectD", n, k, 0, field};
    Ideal lhs = specht_monomial_ideal(n, k, field);
    Ideal ydl = y_ideal(n, k, field);
    Ideal rhs = k == 1 ? ydl : intersect(specht_monomial_ideal(n - 1, k - 1, field).extended(n), ydl);
    v.holds = ideal_equal(lhs, rhs);
    v.predicted = perfectD_predicate(field.characteristic(), k);
    if (!v.holds) {
        // the containment I(n,k) <= rhs is characteristic-free, so the
        // witness lives in rhs \ I(n,k)
        v.witness = detail_thm::separating_witness(lhs, rhs);
        v.note = "witness lies in the intersection but not in I(n,k)";
    }
    v.elapsed_ms = timer.ms();
    return v;
}

// Lemma: (J(n,k) : x_n) = (x_1..x_{n-1})^(k-1) + (x_n) and
// J(n,k) + (x_n) = I(n-1,k-1) + (x_n), assuming p = 0 or p >= k+1.
inline TheoremVerdict check_lemma_jnk(int n, int k, FieldSpec field, bool allow_large = false)
{
    require_ink_params(n, k);
    if (!perfectD_predicate(field.characteristic(), k))
        raise(errc::characteristic_too_small, "lemma hypothesis p = 0 or p >= k+1");
    detail_thm::require_cap(n, 6, allow_large);
    detail_thm::Timer timer;
    TheoremVerdict v{"jnk", n, k, 0, field};
    Ideal J = j_ideal(n, k, field);
    Polynomial xn = Polynomial::var(field, n, n);
    Ideal xnI(field, n, {xn});

    Ideal colon_lhs = colon(J, xn);
    Ideal colon_rhs = k == 1 ? Ideal(field, n, {Polynomial::constant(field, n, 1)})
                             : ideal_sum(squarefree_power(n - 1, k - 1, field).extended(n), xnI);
    bool first = ideal_equal(colon_lhs, colon_rhs);

    Ideal sum_lhs = ideal_sum(J, xnI);
    Ideal sum_rhs = ideal_sum(specht_monomial_ideal(n - 1, k - 1, field).extended(n), xnI);
    bool second = ideal_equal(sum_lhs, sum_rhs);

    v.holds = first && second;
    v.predicted = true;
    if (!first) {
        v.witness = detail_thm::separating_witness(colon_lhs, colon_rhs);
        if (!v.witness)
            v.witness = detail_thm::separating_witness(colon_rhs, colon_lhs);
    } else if (!second) {
        v.witness = detail_thm::separating_witness(sum_lhs, sum_rhs);
        if (!v.witness)
            v.witness = detail_thm::separating_witness(sum_rhs, sum_lhs);
    }
    v.elapsed_ms = timer.ms();
    return v;
}

// The candidate irredundant primary decomposition of I(n,k):
// I(n,k) = cap over (n-k+1)-subsets S of ((x_a - x_b : a,b in S) + (x_a^2)).
inline TheoremVerdict check_primary_shape(int n, int k, FieldSpec field, bool allow_large = false)
{
    require_ink_params(n, k);
    detail_thm::require_cap(n, 6, allow_large);
    detail_thm::Timer timer;
    TheoremVerdict v{"primary", n, k, 0, field};
    Ideal lhs = specht_monomial_ideal(n, k, field);
    std::optional<Ideal> inter;
    for (const auto& s : subsets(n, n - k + 1)) {
        std::vector<Polynomial> gens;
        Polynomial x0 = Polynomial::var(field, s[0], n);
        for (size_t i = 1; i < s.size(); ++i)
            gens.push_back(x0 - Polynomial::var(field, s[static_cast<size_t>(i)], n));
        gens.push_back(x0 * x0);
        Ideal q(field, n, std::move(gens));
        inter = inter ? intersect(*inter, q) : q;
    }
    v.holds = ideal_equal(lhs, *inter);
    v.predicted = perfectD_predicate(field.characteristic(), k);
    if (!v.holds) {
        v.witness = detail_thm::separating_witness(lhs, *inter);
        if (!v.witness)
            v.witness = detail_thm::separating_witness(*inter, lhs);
    }
    v.elapsed_ms = timer.ms();
    return v;
}

// ---- perfection ------------------------------------------------------------

struct HEGradesReport {
    int height_first = 0;
    int height_second = 0;
    int height_sum = 0;
    bool pattern = false; // (g, g, g+1)
};

inline HEGradesReport check_hE_grades(const Ideal& I, const Ideal& J)
{
    HEGradesReport r;
    r.height_first = hilbert_data(I).height;
    r.height_second = hilbert_data(J).height;
    r.height_sum = hilbert_data(ideal_sum(I, J)).height;
    r.pattern = r.height_first == r.height_second && r.height_sum == r.height_first + 1;
    return r;
}

enum class Outcome { Match, Mismatch, Inconclusive };

struct PerfectionReport {
    int n = 0, k = 0;
    FieldSpec field;
    bool predicted = false; // p = 0 or p >= k+1

    // grade bookkeeping for the Hochster-Eagon transfer
    HEGradesReport grades; // a(n,k,k), m^(k+1), I(n,k)

    // direct evidence on I(n,k)
    std::string ink_evidence;   // CertifiedCM / MaxIdealAssociated / Inconclusive
    // evidence on the Specht-chain model a(n,k,k+1) ~ a(n+1,k+1,k+1)
    std::string chain_evidence; // CertifiedCM / lem:HE transfer / Inconclusive

    Outcome outcome = Outcome::Inconclusive;
    double elapsed_ms = 0.0;
};

// Perfection of I(n,k) and of a(n+1,k+1,k+1), the latter through the
// isomorphic model a(n,k,k+1) = a(n,k,k) cap m^(k+1). Negative verdicts come
// only from an embedded maximal prime plus the Hochster-Eagon grade pattern.
inline PerfectionReport check_perfection(int n, int k, FieldSpec field, bool allow_large = false, unsigned seed = 12345)
{
    require_ink_params(n, k);
    detail_thm::require_cap(n, 6, allow_large);
    detail_thm::Timer timer;
    PerfectionReport rep;
    rep.n = n;
    rep.k = k;
    rep.field = field;
    rep.predicted = perfectD_predicate(field.characteristic(), k);

    Ideal a_kk = specht_ideal(n, k, k, field);
    Ideal power = squarefree_power(n, k + 1, field);
    Ideal ink = specht_monomial_ideal(n, k, field);
    rep.grades = check_hE_grades(a_kk, power);

    bool ink_known = false, ink_perfect = false;
    if (rep.predicted) {
        CmCertificate c = cm_certify(ink, 400, seed);
        if (c.certified()) {
            rep.ink_evidence = "CertifiedCM";
            ink_known = true;
            ink_perfect = true;
        } else {
            rep.ink_evidence = "Inconclusive";
        }
    } else {
        if (embedded_max_prime(ink) == MaxPrimeVerdict::MaxIdealAssociated) {
            rep.ink_evidence = "MaxIdealAssociated";
            ink_known = true;
            ink_perfect = false;
        } else {
            rep.ink_evidence = "Inconclusive";
        }
    }

    // Specht chain: try a direct certificate first, else transfer through
    // lem:HE using the grade pattern and the I(n,k) verdict.
    Ideal chain = specht_ideal(n, k, k + 1, field);
    CmCertificate cc = cm_certify(chain, 400, seed);
    if (cc.certified()) {
        rep.chain_evidence = "CertifiedCM";
    } else if (ink_known && rep.grades.pattern) {
        rep.chain_evidence = ink_perfect ? "PerfectByHETransfer" : "NotPerfectByHETransfer";
    } else {
        rep.chain_evidence = "Inconclusive";
    }

    if (!ink_known) {
        rep.outcome = Outcome::Inconclusive;
    } else {
        rep.outcome = (ink_perfect == rep.predicted) ? Outcome::Match : Outcome::Mismatch;
        // a certified chain in a predicted-imperfect characteristic would be
        // a contradiction worth surfacing
        if (!rep.predicted && rep.chain_evidence == "CertifiedCM")
            rep.outcome = Outcome::Mismatch;
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

} // namespace specht
