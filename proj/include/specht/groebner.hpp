#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "specht/polynomial.hpp"

namespace specht {

// Ideal with cached reduced Groebner bases, one per monomial order. A cached
// basis is reduced (minimal, tail-reduced, monic leading coefficients), so it
// is unique for its order and ideal equality is basis equality.
class Ideal {
public:
    Ideal() : field_(FieldSpec::rationals()), nvars_(0) {}

    Ideal(FieldSpec field, int nvars, std::vector<Polynomial> gens)
        : field_(field), nvars_(nvars)
    {
        for (Polynomial& g : gens) {
            require_same_field(field_, g.field());
            if (g.nvars() != nvars_)
                raise(errc::dimension_mismatch, "generator over wrong variable count");
            if (!g.is_zero())
                gens_.push_back(std::move(g));
        }
    }

    const FieldSpec& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool is_homogeneous() const
    {
        for (const Polynomial& g : gens_)
            if (!g.is_homogeneous())
                return false;
        return true;
    }

    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

    Ideal extended(int new_nvars) const
    {
        std::vector<Polynomial> gens;
        for (const Polynomial& g : gens_)
            gens.push_back(g.extended(new_nvars));
        return Ideal(field_, new_nvars, std::move(gens));
    }

    Ideal permuted(const std::vector<int>& perm) const
    {
        std::vector<Polynomial> gens;
        for (const Polynomial& g : gens_)
            gens.push_back(g.permuted(perm));
        return Ideal(field_, nvars_, std::move(gens));
    }

private:
    FieldSpec field_;
    int nvars_ = 0;
    std::vector<Polynomial> gens_;
    mutable std::map<std::string, std::vector<Polynomial>> cache_;
};

namespace gb {

// Buchberger engine. Elements are kept sorted descending under the active
// order; over Q they are normalized to primitive integer form during the run
// to bound coefficient growth, and made monic only in the final basis.
class Engine {
public:
    Engine(FieldSpec field, int nvars, MonomialOrder ord)
        : field_(field), nvars_(nvars), ord_(std::move(ord))
    {
    }

    using Terms = std::vector<Term>;

    struct Cmp {
        const MonomialOrder* ord;
        bool operator()(const Monomial& a, const Monomial& b) const { return ord->cmp(a, b) > 0; }
    };

    Terms to_internal(const Polynomial& p) const
    {
        Terms t(p.terms().begin(), p.terms().end());
        std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) { return ord_.cmp(a.m, b.m) > 0; });
        return t;
    }

    Polynomial to_polynomial(const Terms& t) const
    {
        std::map<Monomial, Scalar, GrevlexDesc> acc;
        for (const Term& x : t)
            acc.emplace(x.m, x.c);
        return Polynomial::from_map(field_, nvars_, acc);
    }

    static int degree(const Terms& t)
    {
        int d = -1;
        for (const Term& x : t)
            d = std::max(d, x.m.deg());
        return d;
    }

    void normalize(Terms& t) const
    {
        if (t.empty())
            return;
        if (field_.kind == FieldKind::PrimeField) {
            Scalar inv = t.front().c.inv();
            for (Term& x : t)
                x.c = x.c * inv;
            return;
        }
        Int den_lcm = 1;
        for (const Term& x : t)
            den_lcm = boost::multiprecision::lcm(den_lcm, Int(boost::multiprecision::denominator(x.c.rat())));
        Int num_gcd = 0;
        for (const Term& x : t) {
            Rat q = x.c.rat() * Rat(den_lcm);
            num_gcd = boost::multiprecision::gcd(num_gcd, Int(boost::multiprecision::numerator(q)));
        }
        if (num_gcd == 0)
            num_gcd = 1;
        Rat scale(den_lcm, num_gcd);
        if (t.front().c.rat() < 0)
            scale = -scale;
        for (Term& x : t)
            x.c = Scalar::from_rat(x.c.rat() * scale);
    }

    void make_monic(Terms& t) const
    {
        if (t.empty())
            return;
        Scalar inv = t.front().c.inv();
        for (Term& x : t)
            x.c = x.c * inv;
    }

    // Full normal form: every term of the output is reduced.
    Terms reduce(const Terms& f, const std::vector<Terms>& basis) const
    {
        std::map<Monomial, Scalar, Cmp> work{Cmp{&ord_}};
        for (const Term& x : f)
            work.emplace(x.m, x.c);
        Terms out;
        while (!work.empty()) {
            auto it = work.begin();
            Monomial lm = it->first;
            Scalar lc = it->second;
            const Terms* div = nullptr;
            for (const Terms& g : basis)
                if (!g.empty() && g.front().m.divides(lm)) {
                    div = &g;
                    break;
                }
            if (!div) {
                out.push_back({lm, lc});
                work.erase(it);
                continue;
            }
            Monomial u = lm.div(div->front().m);
            Scalar c = lc / div->front().c;
            for (const Term& x : *div) {
                Monomial m = x.m * u;
                Scalar delta = x.c * c;
                auto jt = work.find(m);
                if (jt == work.end()) {
                    work.emplace(std::move(m), -delta);
                } else {
                    jt->second -= delta;
                    if (jt->second.is_zero())
                        work.erase(jt);
                }
            }
        }
        return out;
    }

    std::vector<Polynomial> run(const std::vector<Polynomial>& input) const
    {
        std::vector<Terms> basis;
        std::vector<long> sugars;
        for (const Polynomial& p : input) {
            if (p.is_zero())
                continue;
            Terms t = to_internal(p);
            normalize(t);
            basis.push_back(std::move(t));
            sugars.push_back(degree(basis.back()));
        }

        struct PairKey {
            long sugar;
            int lcm_deg;
            std::vector<int> lcm;
            int i, j;
            bool operator<(const PairKey& o) const
            {
                if (sugar != o.sugar)
                    return sugar < o.sugar;
                if (lcm_deg != o.lcm_deg)
                    return lcm_deg < o.lcm_deg;
                if (lcm != o.lcm)
                    return lcm < o.lcm;
                if (i != o.i)
                    return i < o.i;
                return j < o.j;
            }
        };
        std::set<PairKey> queue;
        std::set<std::pair<int, int>> pending;

        auto push_pair = [&](int i, int j) {
            const Monomial& a = basis[static_cast<size_t>(i)].front().m;
            const Monomial& b = basis[static_cast<size_t>(j)].front().m;
            Monomial l = a.lcm(b);
            long sug = std::max(sugars[static_cast<size_t>(i)] + static_cast<long>(l.deg() - a.deg()),
                                sugars[static_cast<size_t>(j)] + static_cast<long>(l.deg() - b.deg()));
            queue.insert(PairKey{sug, l.deg(), l.exps(), i, j});
            pending.insert({i, j});
        };

        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j)
                push_pair(static_cast<int>(i), static_cast<int>(j));

        while (!queue.empty()) {
            PairKey key = *queue.begin();
            queue.erase(queue.begin());
            pending.erase({key.i, key.j});
            const Terms& fi = basis[static_cast<size_t>(key.i)];
            const Terms& fj = basis[static_cast<size_t>(key.j)];
            const Monomial& mi = fi.front().m;
            const Monomial& mj = fj.front().m;
            if (mi.coprime(mj))
                continue; // product criterion
            Monomial l = mi.lcm(mj);
            bool chained = false;
            for (size_t h = 0; h < basis.size() && !chained; ++h) {
                int hi = static_cast<int>(h);
                if (hi == key.i || hi == key.j)
                    continue;
                if (!basis[h].front().m.divides(l))
                    continue;
                auto p1 = std::minmax(key.i, hi);
                auto p2 = std::minmax(key.j, hi);
                if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                    chained = true; // chain criterion
            }
            if (chained)
                continue;

            // s-polynomial
            std::map<Monomial, Scalar, Cmp> work{Cmp{&ord_}};
            Monomial ui = l.div(mi), uj = l.div(mj);
            Scalar ci = fi.front().c.inv(), cj = fj.front().c.inv();
            for (const Term& x : fi) {
                Monomial m = x.m * ui;
                Scalar c = x.c * ci;
                auto it = work.find(m);
                if (it == work.end())
                    work.emplace(std::move(m), std::move(c));
                else {
                    it->second += c;
                    if (it->second.is_zero())
                        work.erase(it);
                }
            }
            for (const Term& x : fj) {
                Monomial m = x.m * uj;
                Scalar c = x.c * cj;
                auto it = work.find(m);
                if (it == work.end())
                    work.emplace(std::move(m), -c);
                else {
                    it->second -= c;
                    if (it->second.is_zero())
                        work.erase(it);
                }
            }
            Terms s;
            s.reserve(work.size());
            for (auto& [m, c] : work)
                s.push_back({m, c});
            long sug = key.sugar;
            Terms r = reduce_with_sugars(s, basis, sugars, sug);
            if (r.empty())
                continue;
            normalize(r);
            basis.push_back(std::move(r));
            sugars.push_back(sug);
            int newi = static_cast<int>(basis.size()) - 1;
            for (int i = 0; i < newi; ++i)
                push_pair(i, newi);
        }

        // minimalize: drop i when a kept j has LM_j | LM_i (ties keep the
        // earlier element)
        std::vector<char> keep(basis.size(), 1);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !keep[i] || !keep[j])
                    continue;
                const Monomial& mi = basis[i].front().m;
                const Monomial& mj = basis[j].front().m;
                if (mj.divides(mi) && (!(mi == mj) || j < i)) {
                    keep[i] = 0;
                    break;
                }
            }
        std::vector<Terms> minimal;
        for (size_t i = 0; i < basis.size(); ++i)
            if (keep[i])
                minimal.push_back(std::move(basis[i]));

        // tail-reduce each against the others, then make monic
        std::vector<Terms> reduced = minimal;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Terms> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            reduced[i] = reduce(minimal[i], others);
            if (reduced[i].empty())
                raise(errc::internal, "minimal basis element reduced to zero");
            make_monic(reduced[i]);
        }
        std::sort(reduced.begin(), reduced.end(),
                  [this](const Terms& a, const Terms& b) { return ord_.cmp(a.front().m, b.front().m) > 0; });

        std::vector<Polynomial> out;
        out.reserve(reduced.size());
        for (const Terms& t : reduced)
            out.push_back(to_polynomial(t));
        return out;
    }

private:

    Terms reduce_with_sugars(const Terms& f, const std::vector<Terms>& basis, const std::vector<long>& sugars, long& sugar) const
    {
        std::map<Monomial, Scalar, Cmp> work{Cmp{&ord_}};
        for (const Term& x : f)
            work.emplace(x.m, x.c);
        Terms out;
        while (!work.empty()) {
            auto it = work.begin();
            Monomial lm = it->first;
            Scalar lc = it->second;
            size_t div = basis.size();
            for (size_t g = 0; g < basis.size(); ++g)
                if (basis[g].front().m.divides(lm)) {
                    div = g;
                    break;
                }
            if (div == basis.size()) {
                out.push_back({lm, lc});
                work.erase(it);
                continue;
            }
            const Terms& g = basis[div];
            Monomial u = lm.div(g.front().m);
            sugar = std::max(sugar, sugars[div] + static_cast<long>(u.deg()));
            Scalar c = lc / g.front().c;
            for (const Term& x : g) {
                Monomial m = x.m * u;
                Scalar delta = x.c * c;
                auto jt = work.find(m);
                if (jt == work.end()) {
                    work.emplace(std::move(m), -delta);
                } else {
                    jt->second -= delta;
                    if (jt->second.is_zero())
                        work.erase(jt);
                }
            }
        }
        return out;
    }

    FieldSpec field_;
    int nvars_;
    MonomialOrder ord_;
};

} // namespace gb

inline const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const
{
    auto it = cache_.find(ord.key());
    if (it != cache_.end())
        return it->second;
    gb::Engine engine(field_, nvars_, ord);
    return cache_.emplace(ord.key(), engine.run(gens_)).first->second;
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex())
{
    require_same_field(f.field(), I.field());
    if (f.nvars() != I.nvars())
        raise(errc::dimension_mismatch, "polynomial over wrong variable count");
    const auto& basis = I.groebner_basis(ord);
    gb::Engine engine(I.field(), I.nvars(), ord);
    std::vector<gb::Engine::Terms> b;
    for (const Polynomial& g : basis)
        b.push_back(engine.to_internal(g));
    return engine.to_polynomial(engine.reduce(engine.to_internal(f), b));
}

inline bool ideal_member(const Polynomial& f, const Ideal& I)
{
    return normal_form(f, I).is_zero();
}

inline bool ideal_equal(const Ideal& I, const Ideal& J)
{
    require_same_field(I.field(), J.field());
    if (I.nvars() != J.nvars())
        raise(errc::dimension_mismatch, "ideals over different variable counts");
    return I.groebner_basis() == J.groebner_basis();
}

inline bool ideal_contained(const Ideal& I, const Ideal& J)
{
    for (const Polynomial& g : I.generators())
        if (!ideal_member(g, J))
            return false;
    return true;
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J)
{
    require_same_field(I.field(), J.field());
    if (I.nvars() != J.nvars())
        raise(errc::dimension_mismatch, "ideal sum over different variable counts");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.field(), I.nvars(), std::move(gens));
}

// I cap J by elimination: in R[t] with t = x_{n+1}, eliminate t from
// t*I + (1-t)*J and keep the t-free part of the basis.
inline Ideal intersect(const Ideal& I, const Ideal& J)
{
    require_same_field(I.field(), J.field());
    if (I.nvars() != J.nvars())
        raise(errc::dimension_mismatch, "intersection over different variable counts");
    int n = I.nvars();
    FieldSpec f = I.field();
    if (I.generators().empty())
        return Ideal(f, n, {}); // (0) cap J
    if (J.generators().empty())
        return Ideal(f, n, {});
    Polynomial t = Polynomial::var(f, n + 1, n + 1);
    Polynomial one_minus_t = Polynomial::constant(f, n + 1, 1) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        gens.push_back(g.extended(n + 1) * t);
    for (const Polynomial& g : J.generators())
        gens.push_back(g.extended(n + 1) * one_minus_t);
    Ideal K(f, n + 1, std::move(gens));
    std::vector<Polynomial> out;
    for (const Polynomial& g : K.groebner_basis(MonomialOrder::elim({n}))) {
        bool has_t = false;
        for (const Term& x : g.terms())
            if (x.m.exp(n) > 0) {
                has_t = true;
                break;
            }
        if (!has_t)
            out.push_back(g.restricted(n));
    }
    return Ideal(f, n, std::move(out));
}

// Quotient of g by f, assuming exact divisibility.
inline Polynomial divide_exact(const Polynomial& g, const Polynomial& f)
{
    require_same_field(g.field(), f.field());
    if (f.is_zero())
        raise(errc::division_by_zero, "division by the zero polynomial");
    MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial work = g;
    Polynomial quot = Polynomial::zero(g.field(), g.nvars());
    const Term& lf = f.leading_term(ord);
    while (!work.is_zero()) {
        const Term& lw = work.leading_term(ord);
        if (!lf.m.divides(lw.m))
            raise(errc::internal, "inexact polynomial division");
        Polynomial u = Polynomial::monomial(g.field(), lw.m.div(lf.m), lw.c / lf.c);
        quot += u;
        work -= f * u;
    }
    return quot;
}

// (I : f) via the principal-ideal intersection: generators of I cap (f),
// divided by f.
inline Ideal colon(const Ideal& I, const Polynomial& f)
{
    if (f.is_zero())
        raise(errc::zero_divisor_input, "colon by zero");
    Ideal princ(I.field(), I.nvars(), {f});
    Ideal inter = intersect(I, princ);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : inter.generators())
        gens.push_back(divide_exact(g, f));
    return Ideal(I.field(), I.nvars(), std::move(gens));
}

// (I : J) = cap over generators of J.
inline Ideal colon(const Ideal& I, const Ideal& J)
{
    if (J.generators().empty())
        raise(errc::zero_divisor_input, "colon by the zero ideal");
    std::optional<Ideal> acc;
    for (const Polynomial& g : J.generators()) {
        Ideal c = colon(I, g);
        acc = acc ? intersect(*acc, c) : c;
    }
    return *acc;
}

// (I : f^infinity) by iterating the colon until it stabilizes.
inline Ideal saturate(const Ideal& I, const Polynomial& f)
{
    Ideal cur = I;
    for (int round = 0; round < 256; ++round) {
        Ideal next = colon(cur, f);
        if (ideal_equal(next, cur))
            return cur;
        cur = next;
    }
    raise(errc::non_termination, "saturation did not stabilize");
}

// I : m^infinity with m = (x_1..x_n), via iterated colon by the full ideal m.
inline Ideal saturate_max(const Ideal& I)
{
    std::vector<Polynomial> vars;
    for (int i = 1; i <= I.nvars(); ++i)
        vars.push_back(Polynomial::var(I.field(), i, I.nvars()));
    Ideal m(I.field(), I.nvars(), std::move(vars));
    Ideal cur = I;
    for (int round = 0; round < 256; ++round) {
        Ideal next = colon(cur, m);
        if (ideal_equal(next, cur))
            return cur;
        cur = next;
    }
    raise(errc::non_termination, "saturation by the maximal ideal did not stabilize");
}

// f in sqrt(I) by the Rabinowitsch trick: 1 in I + (1 - y f) in R[y].
inline bool radical_member(const Polynomial& f, const Ideal& I)
{
    require_same_field(f.field(), I.field());
    if (f.is_zero())
        return true;
    int n = I.nvars();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        gens.push_back(g.extended(n + 1));
    Polynomial y = Polynomial::var(I.field(), n + 1, n + 1);
    gens.push_back(Polynomial::constant(I.field(), n + 1, 1) - y * f.extended(n + 1));
    Ideal K(I.field(), n + 1, std::move(gens));
    for (const Polynomial& g : K.groebner_basis())
        if (g.is_constant() && !g.is_zero())
            return true;
    return false;
}

// ---- Hilbert series of R/I ------------------------------------------------

struct HilbertData {
    std::vector<Int> numerator; // numerator with (1-t) factors cancelled
    int krull_dim = 0;          // dim R/I
    int height = 0;             // = nvars - krull_dim
    Int numerator_at_one() const
    {
        Int s = 0;
        for (const Int& c : numerator)
            s += c;
        return s;
    }
};

namespace detail_hilbert {

using ZPoly = std::vector<Int>; // coefficient list, index = degree

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

inline ZPoly zp_shift(const ZPoly& a, int k) // times t^k
{
    if (a.empty())
        return a;
    ZPoly r(a.size() + static_cast<size_t>(k), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

inline ZPoly zp_mul_one_minus_tk(const ZPoly& a, int k) // times (1 - t^k)
{
    ZPoly r = a;
    ZPoly s = zp_shift(a, k);
    ZPoly out(std::max(r.size(), s.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i)
        out[i] += r[i];
    for (size_t i = 0; i < s.size(); ++i)
        out[i] -= s[i];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// Minimal generating set of a monomial ideal.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg() < b.deg(); });
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(g);
    }
    return out;
}

// Numerator of the Hilbert series of R/(gens) over (1-t)^n, by the exact
// sequence 0 -> R/(I:x)(-1) -> R/I -> R/(I+(x)) -> 0 with a variable pivot.
inline ZPoly numerator(std::vector<Monomial> gens, int nvars, std::map<std::vector<std::vector<int>>, ZPoly>& memo)
{
    gens = minimalize(std::move(gens));
    for (const Monomial& g : gens)
        if (g.is_one())
            return {};
    if (gens.empty())
        return {Int(1)};

    bool pure_powers = true;
    for (const Monomial& g : gens)
        if (g.weight() != 1)
            pure_powers = false;
    if (pure_powers) {
        ZPoly r{Int(1)};
        for (const Monomial& g : gens)
            r = zp_mul_one_minus_tk(r, g.deg());
        return r;
    }

    std::vector<std::vector<int>> key;
    for (const Monomial& g : gens)
        key.push_back(g.exps());
    std::sort(key.begin(), key.end());
    auto hit = memo.find(key);
    if (hit != memo.end())
        return hit->second;

    // pivot: the most frequent variable among mixed generators
    std::vector<int> freq(static_cast<size_t>(nvars), 0);
    for (const Monomial& g : gens)
        if (g.weight() > 1)
            for (int i = 0; i < nvars; ++i)
                if (g.exp(i) > 0)
                    freq[static_cast<size_t>(i)] += 1;
    int pivot = 0;
    for (int i = 1; i < nvars; ++i)
        if (freq[static_cast<size_t>(i)] > freq[static_cast<size_t>(pivot)])
            pivot = i;

    std::vector<int> xe(static_cast<size_t>(nvars), 0);
    xe[static_cast<size_t>(pivot)] = 1;
    Monomial x(xe);

    std::vector<Monomial> plus = gens;
    plus.push_back(x);
    std::vector<Monomial> quot;
    for (const Monomial& g : gens)
        quot.push_back(g.exp(pivot) > 0 ? g.div(x) : g);

    ZPoly r = zp_add(numerator(std::move(plus), nvars, memo), zp_shift(numerator(std::move(quot), nvars, memo), 1));
    memo.emplace(std::move(key), r);
    return r;
}

} // namespace detail_hilbert

inline HilbertData hilbert_data(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex())
{
    if (!I.is_homogeneous())
        raise(errc::non_homogeneous, "Hilbert data needs a homogeneous ideal");
    std::vector<Monomial> lts;
    for (const Polynomial& g : I.groebner_basis(ord))
        lts.push_back(g.leading_term(ord).m);
    for (const Monomial& m : lts)
        if (m.is_one())
            raise(errc::parameter_out_of_range, "Hilbert data of the unit ideal");
    std::map<std::vector<std::vector<int>>, detail_hilbert::ZPoly> memo;
    detail_hilbert::ZPoly num = detail_hilbert::numerator(lts, I.nvars(), memo);

    // cancel (1-t) factors: numerator(1) = 0 means divisible
    int cancelled = 0;
    while (!num.empty()) {
        Int at_one = 0;
        for (const Int& c : num)
            at_one += c;
        if (at_one != 0)
            break;
        // divide by (1-t): q_i = sum_{j<=i} n_j, degree drops by one
        detail_hilbert::ZPoly q(num.size() - 1, Int(0));
        Int acc = 0;
        for (size_t i = 0; i + 1 < num.size(); ++i) {
            acc += num[i];
            q[i] = acc;
        }
        num = std::move(q);
        ++cancelled;
    }
    HilbertData h;
    h.numerator = std::move(num);
    h.height = cancelled;
    h.krull_dim = I.nvars() - cancelled;
    return h;
}

// ---- Cohen-Macaulay certification -----------------------------------------

struct CmCertificate {
    enum class Verdict { CertifiedCM, Inconclusive } verdict = Verdict::Inconclusive;
    std::vector<Polynomial> lsop;
    bool certified() const { return verdict == Verdict::CertifiedCM; }
};

namespace detail_cm {

// Deterministic candidate stream: coordinates, then 0/1 forms by descending
// support (the symmetric e_1 first), then mixed-sign unit forms, then seeded
// pseudo-random forms.
inline std::vector<Polynomial> linear_candidates(FieldSpec field, int n, int limit, unsigned seed)
{
    std::vector<Polynomial> out;
    std::set<std::string> seen; // up to scalar: store the monic form
    auto push = [&](Polynomial f) {
        if (f.is_zero() || static_cast<int>(out.size()) >= limit)
            return;
        Polynomial monic = f.scaled(f.terms().front().c.inv());
        if (seen.insert(monic.str()).second)
            out.push_back(std::move(f));
    };
    auto form = [&](const std::vector<int>& coef) {
        Polynomial f = Polynomial::zero(field, n);
        for (int i = 0; i < n; ++i)
            if (coef[static_cast<size_t>(i)] != 0)
                f += Polynomial::var(field, i + 1, n).scaled(Scalar::from_int(field, coef[static_cast<size_t>(i)]));
        return f;
    };
    for (int i = 1; i <= n && static_cast<int>(out.size()) < limit; ++i)
        push(Polynomial::var(field, i, n));
    std::vector<std::vector<int>> zero_one;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2)
            continue;
        std::vector<int> c(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            c[static_cast<size_t>(i)] = (mask >> i) & 1u ? 1 : 0;
        zero_one.push_back(std::move(c));
    }
    std::sort(zero_one.begin(), zero_one.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int v : a)
            sa += v;
        for (int v : b)
            sb += v;
        if (sa != sb)
            return sa > sb;
        return a < b;
    });
    for (const auto& c : zero_one)
        push(form(c));
    if (field.characteristic() != 2) {
        std::vector<std::vector<int>> mixed;
        std::vector<int> c(static_cast<size_t>(n), -1);
        while (true) {
            bool nonzero = false, first_pos_seen = false, canonical = true;
            for (int v : c) {
                if (v != 0 && !first_pos_seen) {
                    first_pos_seen = true;
                    if (v < 0)
                        canonical = false;
                }
                nonzero = nonzero || v != 0;
            }
            bool all_nonneg = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
            if (nonzero && canonical && !all_nonneg)
                mixed.push_back(c);
            int i = n - 1;
            while (i >= 0 && c[static_cast<size_t>(i)] == 1)
                c[static_cast<size_t>(i--)] = -1;
            if (i < 0)
                break;
            ++c[static_cast<size_t>(i)];
        }
        for (const auto& v : mixed)
            push(form(v));
    }
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 64 * limit && static_cast<int>(out.size()) < limit; ++attempt) {
        std::vector<int> c(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            c[static_cast<size_t>(i)] = field.kind == FieldKind::PrimeField
                ? static_cast<int>(rng() % static_cast<unsigned>(field.characteristic()))
                : static_cast<int>(rng() % 19) - 9;
        push(form(c));
    }
    return out;
}

} // namespace detail_cm

namespace detail_cm {

inline bool lsop_search(const Ideal& J, int depth, const std::vector<Polynomial>& candidates,
                        int& budget, std::vector<Polynomial>& lsop)
{
    if (depth == 0)
        return true;
    for (const Polynomial& ell : candidates) {
        if (budget <= 0)
            return false;
        --budget;
        if (!ideal_equal(colon(J, ell), J))
            continue;
        lsop.push_back(ell);
        if (lsop_search(ideal_sum(J, Ideal(J.field(), J.nvars(), {ell})), depth - 1, candidates, budget, lsop))
            return true;
        lsop.pop_back(); // dead end over a tiny field: try another branch
    }
    return false;
}

} // namespace detail_cm

// Searches for a full linear system of parameters that is a regular sequence:
// (I_j : l) = I_j at every step certifies depth = dim, hence CM hence
// perfection. The search backtracks; exhausting the test budget is
// Inconclusive, never a negative verdict.
inline CmCertificate cm_certify(const Ideal& I, int trials = 400, unsigned seed = 12345)
{
    HilbertData h = hilbert_data(I);
    CmCertificate cert;
    auto candidates = detail_cm::linear_candidates(I.field(), I.nvars(), trials, seed);
    int budget = trials;
    if (detail_cm::lsop_search(I, h.krull_dim, candidates, budget, cert.lsop))
        cert.verdict = CmCertificate::Verdict::CertifiedCM;
    else
        cert.lsop.clear();
    return cert;
}

enum class MaxPrimeVerdict { MaxIdealAssociated, NotAssociated };

// The maximal ideal is associated iff saturating by it changes the ideal;
// with dim R/I >= 1 this certifies depth 0 < dim, hence not Cohen-Macaulay.
inline MaxPrimeVerdict embedded_max_prime(const Ideal& I)
{
    HilbertData h = hilbert_data(I);
    if (h.krull_dim <= 0)
        raise(errc::zero_dimensional, "embedded maximal prime test is vacuous in dimension 0");
    return ideal_equal(saturate_max(I), I) ? MaxPrimeVerdict::NotAssociated : MaxPrimeVerdict::MaxIdealAssociated;
}

} // namespace specht
