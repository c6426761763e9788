#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "specht/field.hpp"
#include "specht/monomial.hpp"

namespace specht {

struct Term {
    Monomial m;
    Scalar c;
};

// Sparse exact multivariate polynomial. Terms are kept sorted in descending
// grevlex with no zero coefficients, so iteration and printing are canonical.
class Polynomial {
public:
    Polynomial() : field_(FieldSpec::rationals()), nvars_(0) {}

    Polynomial(FieldSpec field, int nvars) : field_(field), nvars_(nvars)
    {
        if (nvars < 0)
            raise(errc::parameter_out_of_range, "negative variable count");
    }

    static Polynomial zero(FieldSpec f, int nvars) { return Polynomial(f, nvars); }

    static Polynomial constant(FieldSpec f, int nvars, const Scalar& c)
    {
        Polynomial p(f, nvars);
        if (!c.is_zero())
            p.terms_.push_back({Monomial::one(nvars), c});
        return p;
    }

    static Polynomial constant(FieldSpec f, int nvars, long long c)
    {
        return constant(f, nvars, Scalar::from_int(f, c));
    }

    static Polynomial monomial(FieldSpec f, const Monomial& m, const Scalar& c)
    {
        Polynomial p(f, m.nvars());
        if (!c.is_zero())
            p.terms_.push_back({m, c});
        return p;
    }

    static Polynomial var(FieldSpec f, int i, int nvars) // x_i, 1-based
    {
        return monomial(f, Monomial::var(i, nvars), Scalar::one(f));
    }

    const FieldSpec& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    int degree() const // -1 for the zero polynomial
    {
        int d = -1;
        for (const Term& t : terms_)
            d = std::max(d, t.m.deg());
        return d;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        int d = terms_.front().m.deg();
        for (const Term& t : terms_)
            if (t.m.deg() != d)
                return false;
        return true;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().m.is_one()); }

    Scalar coeff(const Monomial& m) const
    {
        for (const Term& t : terms_)
            if (t.m == m)
                return t.c;
        return Scalar::zero(field_);
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (Term& t : r.terms_)
            t.c = -t.c;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const
    {
        check_ring(o);
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        GrevlexDesc before;
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].m == o.terms_[j].m) {
                Scalar c = terms_[i].c + o.terms_[j].c;
                if (!c.is_zero())
                    r.terms_.push_back({terms_[i].m, c});
                ++i;
                ++j;
            } else if (before(terms_[i].m, o.terms_[j].m)) {
                r.terms_.push_back(terms_[i]);
                ++i;
            } else {
                r.terms_.push_back(o.terms_[j]);
                ++j;
            }
        }
        for (; i < terms_.size(); ++i)
            r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j)
            r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const
    {
        check_ring(o);
        std::map<Monomial, Scalar, GrevlexDesc> acc;
        for (const Term& a : terms_)
            for (const Term& b : o.terms_) {
                Monomial m = a.m * b.m;
                Scalar c = a.c * b.c;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero())
                        acc.erase(it);
                }
            }
        return from_map(field_, nvars_, acc);
    }

    Polynomial scaled(const Scalar& c) const
    {
        require_same_field(field_, c.field());
        Polynomial r(field_, nvars_);
        if (c.is_zero())
            return r;
        r.terms_ = terms_;
        for (Term& t : r.terms_)
            t.c = t.c * c;
        return r;
    }

    Polynomial mul_monomial(const Monomial& m, const Scalar& c) const
    {
        Polynomial r(field_, nvars_);
        if (c.is_zero())
            return r;
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            r.terms_.push_back({t.m * m, t.c * c});
        return r; // multiplying by a fixed monomial preserves grevlex order
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const
    {
        if (!(field_ == o.field_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
            return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].m == o.terms_[i].m) || !(terms_[i].c == o.terms_[i].c))
                return false;
        return true;
    }

    const Term& leading_term(const MonomialOrder& ord) const
    {
        if (terms_.empty())
            raise(errc::internal, "leading term of zero");
        if (ord.kind == MonomialOrder::Kind::GrevLex)
            return terms_.front();
        size_t best = 0;
        for (size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].m, terms_[best].m))
                best = i;
        return terms_[best];
    }

    // Ring homomorphism x_i -> images[i].
    Polynomial substitute(const std::vector<Polynomial>& images) const
    {
        if (static_cast<int>(images.size()) != nvars_)
            raise(errc::arity_mismatch, "one image per variable required");
        if (images.empty())
            return *this;
        FieldSpec f = images.front().field();
        int m = images.front().nvars();
        for (const Polynomial& g : images) {
            require_same_field(f, g.field());
            if (g.nvars() != m)
                raise(errc::arity_mismatch, "images over different variable counts");
        }
        require_same_field(f, field_);
        Polynomial out = Polynomial::zero(f, m);
        for (const Term& t : terms_) {
            Polynomial prod = Polynomial::constant(f, m, t.c);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < t.m.exp(i); ++e)
                    prod = prod * images[static_cast<size_t>(i)];
            out += prod;
        }
        return out;
    }

    // sigma . f: substitutes x_i -> x_{perm[i-1]} (entry permutation action).
    Polynomial permuted(const std::vector<int>& perm) const
    {
        std::map<Monomial, Scalar, GrevlexDesc> acc;
        for (const Term& t : terms_)
            acc.emplace(t.m.permuted(perm), t.c);
        return from_map(field_, nvars_, acc);
    }

    Polynomial extended(int new_nvars) const
    {
        Polynomial r(field_, new_nvars);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            r.terms_.push_back({t.m.extended(new_nvars), t.c});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return GrevlexDesc{}(a.m, b.m); });
        return r;
    }

    Polynomial restricted(int new_nvars) const
    {
        Polynomial r(field_, new_nvars);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            r.terms_.push_back({t.m.restricted(new_nvars), t.c});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return GrevlexDesc{}(a.m, b.m); });
        return r;
    }

    Scalar eval(const std::vector<Scalar>& point) const
    {
        if (static_cast<int>(point.size()) != nvars_)
            raise(errc::arity_mismatch, "one value per variable required");
        Scalar acc = Scalar::zero(field_);
        for (const Term& t : terms_) {
            Scalar v = t.c;
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < t.m.exp(i); ++e)
                    v = v * point[static_cast<size_t>(i)];
            acc += v;
        }
        return acc;
    }

    std::string str() const;

    static Polynomial parse(std::string_view text, FieldSpec field, int nvars);

    static Polynomial from_map(FieldSpec f, int nvars, const std::map<Monomial, Scalar, GrevlexDesc>& acc)
    {
        Polynomial r(f, nvars);
        r.terms_.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (!c.is_zero())
                r.terms_.push_back({m, c});
        return r;
    }

private:
    void check_ring(const Polynomial& o) const
    {
        require_same_field(field_, o.field_);
        if (nvars_ != o.nvars_)
            raise(errc::dimension_mismatch, "polynomials over different variable counts");
    }

    FieldSpec field_;
    int nvars_ = 0;
    std::vector<Term> terms_;
};

// D = d/dx_1 + ... + d/dx_n, the formal lowering derivative; over F_p the
// exponent multiplies into the coefficient mod p.
inline Polynomial lowering_derivative(const Polynomial& f)
{
    std::map<Monomial, Scalar, GrevlexDesc> acc;
    for (const Term& t : f.terms()) {
        for (int i = 0; i < f.nvars(); ++i) {
            int e = t.m.exp(i);
            if (e == 0)
                continue;
            std::vector<int> exps = t.m.exps();
            exps[static_cast<size_t>(i)] -= 1;
            Monomial m(std::move(exps));
            Scalar c = t.c * Scalar::from_int(f.field(), e);
            if (c.is_zero())
                continue;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        }
    }
    return Polynomial::from_map(f.field(), f.nvars(), acc);
}

// Delta_S = prod_{i<j in S} (x_i - x_j), with Delta_S = 1 when |S| < 2.
inline Polynomial vandermonde(const std::vector<int>& subset, int nvars, FieldSpec field)
{
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    for (int v : s)
        if (v < 1 || v > nvars)
            raise(errc::index_out_of_range, "Vandermonde index out of range");
    Polynomial r = Polynomial::constant(field, nvars, 1);
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            r *= Polynomial::var(field, s[a], nvars) - Polynomial::var(field, s[b], nvars);
    return r;
}

// e_j over the given variables: the sum of all square-free degree-j monomials.
inline Polynomial elementary_symmetric(int j, const std::vector<int>& vars, int nvars, FieldSpec field)
{
    if (j < 0 || j > static_cast<int>(vars.size()))
        raise(errc::invalid_degree, "elementary symmetric degree out of range");
    for (int v : vars)
        if (v < 1 || v > nvars)
            raise(errc::index_out_of_range, "variable out of range");
    // iterate j-subsets of vars
    Polynomial r = Polynomial::zero(field, nvars);
    std::vector<int> idx(static_cast<size_t>(j));
    for (int i = 0; i < j; ++i)
        idx[static_cast<size_t>(i)] = i;
    if (j == 0)
        return Polynomial::constant(field, nvars, 1);
    int n = static_cast<int>(vars.size());
    while (true) {
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        for (int i : idx)
            exps[static_cast<size_t>(vars[static_cast<size_t>(i)] - 1)] += 1;
        r += Polynomial::monomial(field, Monomial(std::move(exps)), Scalar::one(field));
        int t = j - 1;
        while (t >= 0 && idx[static_cast<size_t>(t)] == n - j + t)
            --t;
        if (t < 0)
            break;
        ++idx[static_cast<size_t>(t)];
        for (int u = t + 1; u < j; ++u)
            idx[static_cast<size_t>(u)] = idx[static_cast<size_t>(u - 1)] + 1;
    }
    return r;
}

inline Polynomial elementary_symmetric(int j, int nvars, FieldSpec field)
{
    std::vector<int> vars(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
        vars[static_cast<size_t>(i)] = i + 1;
    return elementary_symmetric(j, vars, nvars, field);
}

// ---- printing ----------------------------------------------------------

namespace detail {

inline std::string monomial_str(const Monomial& m)
{
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m.exp(i);
        if (e == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "x" + std::to_string(i + 1);
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace detail

inline std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        bool neg = false;
        std::string cs;
        if (field_.kind == FieldKind::Rationals) {
            Rat q = t.c.rat();
            neg = q < 0;
            if (neg)
                q = -q;
            cs = q.str();
        } else {
            cs = std::to_string(t.c.residue());
        }
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string ms = detail::monomial_str(t.m);
        if (ms.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += ms;
        } else {
            out += cs + "*" + ms;
        }
    }
    return out;
}

// ---- parsing -----------------------------------------------------------
// Grammar (see the CLI docs):
//   poly   := ["-"] term (("+"|"-") term)*
//   term   := [coeff "*"] factor ("*" factor)* | coeff
//   factor := "x" index ["^" exp]
//   coeff  := integer | integer "/" integer

namespace detail {

struct PolyLexer {
    std::string_view s;
    size_t i = 0;

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool eof()
    {
        skip();
        return i >= s.size();
    }

    char peek()
    {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    char get()
    {
        skip();
        if (i >= s.size())
            raise(errc::parse_error, "unexpected end of polynomial");
        return s[i++];
    }

    Int integer()
    {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start)
            raise(errc::parse_error, "expected an integer at position " + std::to_string(start));
        return Int(std::string(s.substr(start, i - start)));
    }
};

} // namespace detail

inline Polynomial Polynomial::parse(std::string_view text, FieldSpec field, int nvars)
{
    detail::PolyLexer lx{text};
    std::map<Monomial, Scalar, GrevlexDesc> acc;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            raise(errc::parse_error, "expected + or - between terms");
        }
        first = false;
        // term
        Scalar coeff = Scalar::one(field);
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        bool any_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                Int num = lx.integer();
                Int den = 1;
                if (lx.peek() == '/') {
                    lx.get();
                    den = lx.integer();
                }
                coeff = coeff * Scalar::fraction(field, num, den);
                any_factor = true;
            } else if (p == 'x') {
                lx.get();
                Int idx = lx.integer();
                if (idx < 1 || idx > nvars)
                    raise(errc::parse_error, "variable index out of range: x" + idx.str());
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    Int e = lx.integer();
                    if (e < 0 || e > 1000000)
                        raise(errc::parse_error, "exponent out of range");
                    exp = static_cast<int>(e);
                }
                exps[static_cast<size_t>(static_cast<long long>(idx) - 1)] += exp;
                any_factor = true;
            } else {
                raise(errc::parse_error, std::string("unexpected character '") + p + "' in term");
            }
            if (lx.peek() == '*')
                lx.get();
            else
                expect_factor = false;
        }
        if (!any_factor)
            raise(errc::parse_error, "empty term");
        if (sign < 0)
            coeff = -coeff;
        if (!coeff.is_zero()) {
            Monomial m{std::move(exps)};
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(coeff));
            } else {
                it->second += coeff;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        }
    }
    return from_map(field, nvars, acc);
}

} // namespace specht
