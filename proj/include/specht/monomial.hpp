#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "specht/error.hpp"

namespace specht {

// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0), deg_(0)
    {
        if (nvars < 0)
            raise(errc::parameter_out_of_range, "negative variable count");
    }

    explicit Monomial(std::vector<int> exps) : e_(std::move(exps))
    {
        for (int v : e_)
            if (v < 0)
                raise(errc::invalid_degree, "negative exponent");
        deg_ = std::accumulate(e_.begin(), e_.end(), 0);
    }

    static Monomial one(int nvars) { return Monomial(nvars); }

    static Monomial var(int i, int nvars) // i is 1-based
    {
        if (i < 1 || i > nvars)
            raise(errc::index_out_of_range, "variable x" + std::to_string(i) + " out of range");
        Monomial m(nvars);
        m.e_[static_cast<size_t>(i - 1)] = 1;
        m.deg_ = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int deg() const { return deg_; }
    int exp(int i) const { return e_[static_cast<size_t>(i)]; } // 0-based
    const std::vector<int>& exps() const { return e_; }

    bool is_one() const { return deg_ == 0; }

    int weight() const
    {
        int w = 0;
        for (int v : e_)
            if (v > 0)
                ++w;
        return w;
    }

    bool squarefree() const
    {
        for (int v : e_)
            if (v > 1)
                return false;
        return true;
    }

    bool divides(const Monomial& o) const
    {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i])
                return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const
    {
        check(o);
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    // Exact quotient; caller guarantees divisibility.
    Monomial div(const Monomial& o) const
    {
        check(o);
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0)
                raise(errc::internal, "monomial division with remainder");
        }
        r.deg_ -= o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const
    {
        check(o);
        Monomial r = *this;
        r.deg_ = 0;
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const
    {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0)
                return false;
        return true;
    }

    // Radical of the monomial: every positive exponent clipped to 1.
    Monomial radical() const
    {
        Monomial r = *this;
        r.deg_ = 0;
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = e_[i] > 0 ? 1 : 0;
            r.deg_ += r.e_[i];
        }
        return r;
    }

    Monomial permuted(const std::vector<int>& perm) const // perm[i] is 1-based image of x_{i+1}
    {
        if (static_cast<int>(perm.size()) != nvars())
            raise(errc::arity_mismatch, "permutation arity");
        Monomial r(nvars());
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[static_cast<size_t>(perm[i] - 1)] = e_[i];
        r.deg_ = deg_;
        return r;
    }

    Monomial extended(int new_nvars) const
    {
        if (new_nvars < nvars())
            raise(errc::dimension_mismatch, "cannot shrink a monomial");
        Monomial r = *this;
        r.e_.resize(static_cast<size_t>(new_nvars), 0);
        return r;
    }

    Monomial restricted(int new_nvars) const
    {
        Monomial r(new_nvars);
        for (int i = 0; i < nvars(); ++i) {
            if (e_[static_cast<size_t>(i)] == 0)
                continue;
            if (i >= new_nvars)
                raise(errc::dimension_mismatch, "monomial involves a dropped variable");
            r.e_[static_cast<size_t>(i)] = e_[static_cast<size_t>(i)];
            r.deg_ += e_[static_cast<size_t>(i)];
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
    void check(const Monomial& o) const
    {
        if (o.nvars() != nvars())
            raise(errc::dimension_mismatch, "monomials over different variable counts");
    }

    std::vector<int> e_;
    int deg_ = 0;
};

// Term orders. Block orders eliminate the flagged variables first (used for the
// auxiliary t of ideal intersection and the Rabinowitsch variable).
struct MonomialOrder {
    enum class Kind { GrevLex, Lex, Block };

    Kind kind = Kind::GrevLex;
    std::vector<int> block; // 0-based variable indices eliminated first

    static MonomialOrder grevlex() { return MonomialOrder{Kind::GrevLex, {}}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::Lex, {}}; }
    static MonomialOrder elim(std::vector<int> vars) { return MonomialOrder{Kind::Block, std::move(vars)}; }

    std::string key() const
    {
        switch (kind) {
        case Kind::GrevLex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: {
            std::string s = "elim";
            for (int v : block)
                s += ":" + std::to_string(v);
            return s;
        }
        }
        return "?";
    }

    // cmp(a,b) > 0 iff a comes strictly later in the order (a > b).
    int cmp(const Monomial& a, const Monomial& b) const
    {
        switch (kind) {
        case Kind::GrevLex:
            return cmp_grevlex(a, b, nullptr);
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::Block: {
            std::vector<char> mask(static_cast<size_t>(a.nvars()), 0);
            for (int v : block)
                mask[static_cast<size_t>(v)] = 1;
            int da = 0, db = 0;
            for (int i = 0; i < a.nvars(); ++i)
                if (mask[static_cast<size_t>(i)]) {
                    da += a.exp(i);
                    db += b.exp(i);
                }
            if (da != db)
                return da < db ? -1 : 1;
            int c = cmp_grevlex_masked(a, b, mask, true);
            if (c != 0)
                return c;
            return cmp_grevlex_masked(a, b, mask, false);
        }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

private:
    static int cmp_lex(const Monomial& a, const Monomial& b)
    {
        for (int i = 0; i < a.nvars(); ++i) {
            int d = a.exp(i) - b.exp(i);
            if (d != 0)
                return d > 0 ? 1 : -1;
        }
        return 0;
    }

    static int cmp_grevlex(const Monomial& a, const Monomial& b, const void*)
    {
        if (a.deg() != b.deg())
            return a.deg() < b.deg() ? -1 : 1;
        for (int i = a.nvars() - 1; i >= 0; --i) {
            int d = a.exp(i) - b.exp(i);
            if (d != 0)
                return d > 0 ? -1 : 1; // smaller trailing exponent wins
        }
        return 0;
    }

    static int cmp_grevlex_masked(const Monomial& a, const Monomial& b, const std::vector<char>& mask, bool in_block)
    {
        int da = 0, db = 0;
        for (int i = 0; i < a.nvars(); ++i)
            if ((mask[static_cast<size_t>(i)] != 0) == in_block) {
                da += a.exp(i);
                db += b.exp(i);
            }
        if (da != db)
            return da < db ? -1 : 1;
        for (int i = a.nvars() - 1; i >= 0; --i) {
            if ((mask[static_cast<size_t>(i)] != 0) != in_block)
                continue;
            int d = a.exp(i) - b.exp(i);
            if (d != 0)
                return d > 0 ? -1 : 1;
        }
        return 0;
    }
};

// Canonical (grevlex-descending) comparison used for term storage and printing.
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return MonomialOrder::grevlex().cmp(a, b) > 0;
    }
};

} // namespace specht
