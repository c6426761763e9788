#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "specht/groebner.hpp"
#include "specht/specht.hpp"

using namespace specht;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Polynomial P(const std::string& s, int n, FieldSpec f = Q) { return Polynomial::parse(s, f, n); }

Ideal ideal(std::vector<std::string> gens, int n, FieldSpec f = Q)
{
    std::vector<Polynomial> ps;
    for (const auto& s : gens)
        ps.push_back(P(s, n, f));
    return Ideal(f, n, std::move(ps));
}

Ideal squarefree_power_ideal(int n, int d, FieldSpec f)
{
    std::vector<Polynomial> gens;
    for (const Monomial& m : squarefree_monomials(n, d))
        gens.push_back(Polynomial::monomial(f, m, Scalar::one(f)));
    return Ideal(f, n, std::move(gens));
}

Ideal specht_ideal_raw(int n, int k, int d, FieldSpec f)
{
    return Ideal(f, n, module_basis(ShiftedShape(n, k, d), f).polynomials);
}

std::mt19937 g_rng(90210);

Polynomial random_poly(FieldSpec f, int nvars, int maxdeg, int terms)
{
    Polynomial p = Polynomial::zero(f, nvars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        int budget = static_cast<int>(g_rng() % static_cast<unsigned>(maxdeg + 1));
        for (int b = 0; b < budget; ++b)
            e[g_rng() % static_cast<unsigned>(nvars)] += 1;
        p += Polynomial::monomial(f, Monomial(e), Scalar::from_int(f, static_cast<long long>(g_rng() % 7) - 3));
    }
    return p;
}

} // namespace

TEST_CASE("reduced Groebner bases of simple ideals")
{
    Ideal I = ideal({"x1 - x2", "x2 - x3"}, 3);
    auto lexb = I.groebner_basis(MonomialOrder::lex());
    REQUIRE(lexb.size() == 2);
    CHECK(lexb[0] == P("x1 - x3", 3));
    CHECK(lexb[1] == P("x2 - x3", 3));

    Ideal M = ideal({"x1^2", "x1*x2"}, 2);
    auto b = M.groebner_basis();
    REQUIRE(b.size() == 2);
    CHECK(ideal_member(P("x1^2", 2), M));
    CHECK(!ideal_member(P("x2", 2), M));
}

TEST_CASE("membership and equality")
{
    Ideal I = ideal({"x1 - x2", "x2 - x3"}, 3);
    CHECK(ideal_member(P("x1 - x3", 3), I));
    Ideal J = ideal({"x1 - x2", "x2 - x3", "x1 - x3"}, 3);
    CHECK(ideal_equal(I, J));
    CHECK(!ideal_equal(I, ideal({"x1"}, 3)));
}

TEST_CASE("S_4-stability of the Specht ideal via normal forms")
{
    Ideal I = specht_ideal_raw(4, 2, 2, Q);
    for (const auto& perm : permutations(4))
        for (const Polynomial& g : I.generators())
            CHECK(normal_form(g.permuted(perm), I).is_zero());
}

TEST_CASE("colon, intersection, saturation")
{
    Ideal I = ideal({"x1*x2"}, 2);
    Ideal c = colon(I, P("x1", 2));
    CHECK(ideal_equal(c, ideal({"x2"}, 2)));

    Ideal A = ideal({"x1"}, 2);
    Ideal B = ideal({"x2"}, 2);
    CHECK(ideal_equal(intersect(A, B), ideal({"x1*x2"}, 2)));

    Ideal S = saturate(ideal({"x1^3*x2", "x1^2*x2^2"}, 2), P("x1", 2));
    CHECK(ideal_equal(S, ideal({"x2"}, 2)));

    CHECK_THROWS_AS(colon(I, Polynomial::zero(Q, 2)), error);

    // (a(n,k,k) : x_n) = a(n,k,k) at (4,2)
    Ideal sp = specht_ideal_raw(4, 2, 2, Q);
    CHECK(ideal_equal(colon(sp, P("x4", 4)), sp));

    // intersect(a(4,1,1), m^(2)) = a(4,1,2)
    Ideal lhs = intersect(specht_ideal_raw(4, 1, 1, Q), squarefree_power_ideal(4, 2, Q));
    CHECK(ideal_equal(lhs, specht_ideal_raw(4, 1, 2, Q)));
}

TEST_CASE("ideal operation containments on random small ideals")
{
    for (FieldSpec f : {Q, FieldSpec::prime(3)}) {
        for (int trial = 0; trial < 6; ++trial) {
            int n = 2 + static_cast<int>(g_rng() % 2);
            Ideal I(f, n, {random_poly(f, n, 3, 3), random_poly(f, n, 2, 2)});
            Ideal J(f, n, {random_poly(f, n, 3, 3), random_poly(f, n, 2, 2)});
            if (I.generators().empty() || J.generators().empty())
                continue;
            Ideal inter = intersect(I, J);
            CHECK(ideal_contained(inter, I));
            CHECK(ideal_contained(inter, J));
            // I*J <= I cap J
            for (const Polynomial& a : I.generators())
                for (const Polynomial& b : J.generators())
                    CHECK(ideal_member(a * b, inter));
            // colon(I,f)*(f) <= I
            Polynomial f0 = J.generators().front();
            if (!f0.is_zero()) {
                Ideal c = colon(I, f0);
                for (const Polynomial& g : c.generators())
                    CHECK(ideal_member(g * f0, I));
            }
        }
    }
}

TEST_CASE("normal form is canonical, idempotent and linear")
{
    for (FieldSpec f : {Q, FieldSpec::prime(5)}) {
        Ideal I = ideal({"x1^2 - x2", "x1*x2 - x3"}, 3, f);
        for (int trial = 0; trial < 8; ++trial) {
            Polynomial a = random_poly(f, 3, 4, 4);
            Polynomial b = random_poly(f, 3, 4, 4);
            Polynomial na = normal_form(a, I);
            CHECK(normal_form(na, I) == na);
            CHECK(normal_form(a + b, I) == normal_form(normal_form(a, I) + normal_form(b, I), I));
            CHECK(normal_form(a - na, I).is_zero());
            // f in I kills products
            Polynomial g = I.generators()[g_rng() % 2];
            CHECK(normal_form(g * a, I).is_zero());
        }
    }
}

TEST_CASE("radical membership")
{
    CHECK(radical_member(P("x1", 2), ideal({"x1^2"}, 2)));
    CHECK(!radical_member(P("x2", 2), ideal({"x1^2"}, 2)));

    // x1 is not in sqrt(a(3,1,1)): the ideal cuts out the diagonal line
    Ideal a311 = specht_ideal_raw(3, 1, 1, Q);
    CHECK(!radical_member(P("x1", 3), a311));
    CHECK(radical_member(P("x1 - x2", 3), a311));

    // sqrt(I(4,1)) contains the square-free degree-1 products (eq. INKRad)
    Ideal i41 = ideal_sum(specht_ideal_raw(4, 1, 1, Q), squarefree_power_ideal(4, 2, Q));
    CHECK(radical_member(P("x1", 4), i41));
}

TEST_CASE("Hilbert series data")
{
    // m^(2) in 3 vars: series (1+2t)/(1-t)
    HilbertData h = hilbert_data(squarefree_power_ideal(3, 2, Q));
    CHECK(h.krull_dim == 1);
    CHECK(h.height == 2);
    CHECK(h.numerator == std::vector<Int>{1, 2});

    // a(4,2,2) has height n-k = 2
    CHECK(hilbert_data(specht_ideal_raw(4, 2, 2, Q)).height == 2);

    // I(3,1): dim 0, vector space dimension 2
    Ideal i31 = ideal({"x1 - x3", "x2 - x3", "x1*x2", "x1*x3", "x2*x3"}, 3);
    HilbertData h31 = hilbert_data(i31);
    CHECK(h31.krull_dim == 0);
    CHECK(h31.numerator_at_one() == 2);

    CHECK_THROWS_AS(hilbert_data(ideal({"x1 + 1"}, 2)), error); // not homogeneous

    // krull_dim is order-independent
    for (const auto& gens : {std::vector<std::string>{"x1*x2 - x3^2", "x2^2"},
                             std::vector<std::string>{"x1^2*x3", "x2*x3", "x1*x2^2"}}) {
        Ideal I = ideal(gens, 3);
        CHECK(hilbert_data(I, MonomialOrder::grevlex()).krull_dim == hilbert_data(I, MonomialOrder::lex()).krull_dim);
    }
}

TEST_CASE("Cohen-Macaulay certification")
{
    // I(3,1) is zero-dimensional: certified with an empty lsop
    Ideal i31 = ideal({"x1 - x3", "x2 - x3", "x1*x2", "x1*x3", "x2*x3"}, 3);
    CmCertificate c = cm_certify(i31);
    CHECK(c.certified());
    CHECK(c.lsop.empty());

    // a(4,2,2): certified with a 2-element linear system of parameters
    CmCertificate c2 = cm_certify(specht_ideal_raw(4, 2, 2, Q));
    CHECK(c2.certified());
    CHECK(c2.lsop.size() == 2);

    // m^(d) is perfect over any field
    for (FieldSpec f : {Q, FieldSpec::prime(2)})
        for (int d = 1; d <= 3; ++d)
            CHECK(cm_certify(squarefree_power_ideal(3, d, f)).certified());
}

TEST_CASE("embedded maximal prime detection")
{
    CHECK(embedded_max_prime(squarefree_power_ideal(3, 2, Q)) == MaxPrimeVerdict::NotAssociated);
    // dimension 0 is vacuous
    Ideal i31 = ideal({"x1 - x3", "x2 - x3", "x1*x2", "x1*x3", "x2*x3"}, 3);
    CHECK_THROWS_AS(embedded_max_prime(i31), error);

    // a hand-made embedded maximal prime: (x1^2, x1*x2)= (x1) cap (x1^2,x2)
    Ideal e = ideal({"x1^2", "x1*x2"}, 2);
    CHECK(embedded_max_prime(e) == MaxPrimeVerdict::MaxIdealAssociated);
    // cm_certify must not certify it
    CHECK(!cm_certify(e).certified());
}

TEST_CASE("saturate_max agrees with the one-step criterion")
{
    Ideal e = ideal({"x1^2", "x1*x2"}, 2);
    CHECK(ideal_equal(saturate_max(e), ideal({"x1"}, 2)));
    Ideal r = squarefree_power_ideal(4, 2, Q);
    CHECK(ideal_equal(saturate_max(r), r));
}

TEST_CASE("reduced bases satisfy the Buchberger criterion")
{
    // independent certificate: a basis G is a Groebner basis iff every
    // S-polynomial reduces to zero against G; the reduced basis is also
    // minimal (no leading term divides another) and contains the generators
    std::vector<Ideal> ideals{
        ideal({"x1 - x2", "x2 - x3"}, 3),
        ideal({"x1^2 - x2", "x1*x2 - x3"}, 3),
        specht_ideal_raw(4, 1, 2, Q),
        specht_ideal_raw(4, 2, 2, FieldSpec::prime(2)),
        specht_ideal_raw(5, 1, 3, FieldSpec::prime(3)),
    };
    for (int trial = 0; trial < 8; ++trial) {
        FieldSpec f = trial % 2 ? FieldSpec::prime(5) : Q;
        ideals.push_back(Ideal(f, 3, {random_poly(f, 3, 3, 3), random_poly(f, 3, 3, 3), random_poly(f, 3, 2, 2)}));
    }
    MonomialOrder ord = MonomialOrder::grevlex();
    for (const Ideal& I : ideals) {
        const auto& basis = I.groebner_basis(ord);
        Ideal G(I.field(), I.nvars(), basis);
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = i + 1; j < basis.size(); ++j) {
                const Term& li = basis[i].leading_term(ord);
                const Term& lj = basis[j].leading_term(ord);
                Monomial l = li.m.lcm(lj.m);
                Polynomial s = basis[i].mul_monomial(l.div(li.m), li.c.inv()) - basis[j].mul_monomial(l.div(lj.m), lj.c.inv());
                CHECK(normal_form(s, G, ord).is_zero());
                CHECK(!(i != j && li.m.divides(lj.m))); // minimality
            }
            CHECK(basis[i].leading_term(ord).c.is_one()); // monic
        }
        for (const Polynomial& g : I.generators())
            CHECK(normal_form(g, I, ord).is_zero());
        // random combinations of generators are members
        for (int trial = 0; trial < 4 && !I.generators().empty(); ++trial) {
            Polynomial comb = Polynomial::zero(I.field(), I.nvars());
            for (const Polynomial& g : I.generators())
                comb += g * random_poly(I.field(), I.nvars(), 2, 2);
            CHECK(ideal_member(comb, I));
        }
    }
}

TEST_CASE("Hilbert numerator matches brute-force standard-monomial counts")
{
    // oracle: dim_F (R/I)_t = #monomials of degree t not divisible by any
    // leading term, compared against the series expansion of N(t)/(1-t)^dim
    std::vector<Ideal> ideals{
        squarefree_power_ideal(3, 2, Q),
        squarefree_power_ideal(4, 3, Q),
        specht_ideal_raw(4, 1, 2, Q),
        specht_ideal_raw(4, 2, 2, Q),
        ideal({"x1^2", "x2^3"}, 3),
        ideal({"x1*x2 - x3^2", "x1^3"}, 3),
    };
    MonomialOrder ord = MonomialOrder::grevlex();
    for (const Ideal& I : ideals) {
        HilbertData h = hilbert_data(I);
        std::vector<Monomial> lts;
        for (const Polynomial& g : I.groebner_basis())
            lts.push_back(g.leading_term(ord).m);
        int n = I.nvars();
        for (int t = 0; t <= 6; ++t) {
            // brute-force count of standard monomials of total degree t
            Int standard = 0;
            std::vector<int> e(static_cast<size_t>(n), 0);
            std::function<void(int, int)> rec = [&](int pos, int left) {
                if (pos == n - 1) {
                    e[static_cast<size_t>(pos)] = left;
                    Monomial m(e);
                    bool divisible = false;
                    for (const Monomial& lt : lts)
                        divisible = divisible || lt.divides(m);
                    if (!divisible)
                        ++standard;
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    e[static_cast<size_t>(pos)] = v;
                    rec(pos + 1, left - v);
                }
            };
            rec(0, t);
            // series coefficient of N(t) / (1-t)^krull_dim at degree t:
            // convolve the numerator with C(t - j + dim - 1, dim - 1)
            Int coeff = 0;
            for (size_t j = 0; j < h.numerator.size(); ++j) {
                int rem = t - static_cast<int>(j);
                if (rem < 0)
                    continue;
                if (h.krull_dim == 0)
                    coeff += rem == 0 ? h.numerator[j] : 0;
                else
                    coeff += h.numerator[j] * binomial(rem + h.krull_dim - 1, h.krull_dim - 1);
            }
            CHECK(standard == coeff);
        }
    }
}

TEST_CASE("certification never contradicts the embedded-prime probe")
{
    // depth 0 < dim admits no regular linear form, so any ideal with the
    // maximal ideal associated must come back uncertified
    std::vector<Ideal> positives{
        ideal({"x1^2", "x1*x2"}, 2),
        ideal({"x1^2", "x1*x2", "x1*x3"}, 3),
        Ideal(FieldSpec::prime(2), 5,
              [] {
                  auto gens = module_basis(ShiftedShape(5, 2, 2), FieldSpec::prime(2)).polynomials;
                  for (const Monomial& m : squarefree_monomials(5, 3))
                      gens.push_back(Polynomial::monomial(FieldSpec::prime(2), m, Scalar::one(FieldSpec::prime(2))));
                  return gens;
              }()),
    };
    for (const Ideal& I : positives) {
        CHECK(embedded_max_prime(I) == MaxPrimeVerdict::MaxIdealAssociated);
        CHECK(!cm_certify(I, 40).certified());
    }
}
