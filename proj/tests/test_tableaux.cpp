#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "specht/tableaux.hpp"

using namespace specht;

namespace {

// every filling of the shape, rows in all orders
std::vector<Tableau> all_fillings(const ShiftedShape& s)
{
    std::vector<Tableau> out;
    std::vector<int> perm(static_cast<size_t>(s.n));
    for (int i = 0; i < s.n; ++i)
        perm[static_cast<size_t>(i)] = i + 1;
    do {
        std::vector<int> top(perm.begin(), perm.begin() + s.top_len());
        std::vector<int> bottom(perm.begin() + s.top_len(), perm.end());
        out.emplace_back(s, top, bottom);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<LatticePath> all_paths(int n, int d)
{
    std::vector<LatticePath> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != d)
            continue;
        LatticePath p;
        for (int i = 0; i < n; ++i)
            p.steps.push_back((mask >> i) & 1u ? 'N' : 'E');
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

TEST_CASE("shape validation")
{
    CHECK_NOTHROW(ShiftedShape(5, 1, 3));
    CHECK_NOTHROW(ShiftedShape(4, 0, 0));
    CHECK_THROWS_AS(ShiftedShape(5, 3, 3), error); // d > n-k
    CHECK_THROWS_AS(ShiftedShape(5, 2, 1), error); // d < k
}

TEST_CASE("enumeration matches the published (5,1,3) table")
{
    ShiftedShape s(5, 1, 3);
    auto tabs = enumerate_standard(s);
    REQUIRE(tabs.size() == 9);
    CHECK(tabs.front().top() == std::vector<int>{2, 4, 5});
    CHECK(tabs.front().bottom() == std::vector<int>{1, 3});
    CHECK(tabs.back().top() == std::vector<int>{1, 2, 3});
    CHECK(tabs.back().bottom() == std::vector<int>{4, 5});
    for (const Tableau& t : tabs)
        CHECK(t.is_standard());
}

TEST_CASE("enumeration edge cases")
{
    CHECK(enumerate_standard(ShiftedShape(2, 1, 1)).size() == 1);
    CHECK(enumerate_standard(ShiftedShape(2, 1, 1))[0].top() == std::vector<int>{1});

    // brute-force oracle at (4,2,2): filter all fillings by the predicate
    ShiftedShape s(4, 2, 2);
    int count = 0;
    for (const Tableau& t : all_fillings(s))
        if (t.is_standard())
            ++count;
    CHECK(count == 2);
    CHECK(enumerate_standard(s).size() == 2);
}

TEST_CASE("is_standard on worked examples")
{
    Tableau good(ShiftedShape(5, 1, 3), {2, 4, 5}, {1, 3});
    CHECK(good.is_standard());
    Tableau bad(ShiftedShape(11, 4, 6), {3, 4, 6, 7, 9, 11}, {1, 2, 5, 8, 10});
    CHECK(!bad.is_standard());
    Tableau swapped(ShiftedShape(4, 2, 2), {3, 2}, {1, 4});
    CHECK(!swapped.is_standard());
}

TEST_CASE("composition series of the (5,1,3) example")
{
    Tableau t(ShiftedShape(5, 1, 3), {2, 4, 5}, {1, 3});
    auto g = t.composition_series();
    // displayed as rows = global columns, columns = a
    std::vector<std::vector<int>> expect{
        {1, 1, 1, 1, 1},
        {0, 1, 2, 2, 2},
        {0, 0, 0, 1, 1},
        {0, 0, 0, 0, 1},
    };
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 4; ++b)
            CHECK(g[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] == expect[static_cast<size_t>(b - 1)][static_cast<size_t>(a - 1)]);

    // column n of gamma is the column-size vector
    ShiftedShape s(5, 1, 3);
    for (const Tableau& u : enumerate_standard(s)) {
        auto gu = u.composition_series();
        std::vector<int> sizes;
        for (int b = 1; b <= s.global_cols(); ++b)
            sizes.push_back(static_cast<int>(u.column(b).size()));
        CHECK(gu[4] == sizes);
    }

    // gamma is invariant under reordering entries within columns: swap the
    // two-cell column of t
    Tableau flipped(ShiftedShape(5, 1, 3), {3, 4, 5}, {1, 2});
    CHECK(t.composition_series() == flipped.composition_series());
}

TEST_CASE("dominance order")
{
    ShiftedShape s(5, 1, 3);
    Tableau colfill(s, {2, 4, 5}, {1, 3});
    for (const Tableau& t : all_fillings(s)) {
        CHECK(dominates(t, t));
        CHECK(dominates(t, colfill));
    }

    // the transposition dominance lemma on random tableaux for n <= 7
    std::mt19937 rng(60601);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::vector<ShiftedShape> shapes;
        for (int k = 0; k <= n; ++k)
            for (int d = k; d <= n - k; ++d)
                shapes.emplace_back(n, k, d);
        ShiftedShape sh = shapes[rng() % shapes.size()];
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            perm[static_cast<size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        Tableau t(sh, std::vector<int>(perm.begin(), perm.begin() + sh.top_len()),
                  std::vector<int>(perm.begin() + sh.top_len(), perm.end()));
        // find a pair a<b with a strictly right of b
        std::vector<int> colof(static_cast<size_t>(n + 1), 0);
        for (int b = 1; b <= sh.global_cols(); ++b)
            for (int v : t.column(b))
                colof[static_cast<size_t>(v)] = b;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (colof[static_cast<size_t>(a)] > colof[static_cast<size_t>(b)])
                    CHECK(dominates(t, t.transposed_entries(a, b)));
    }

    // antisymmetry up to composition series on all standard pairs, n <= 6
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (int d = k; d <= n - k; ++d) {
                auto tabs = enumerate_standard(ShiftedShape(n, k, d));
                for (const Tableau& a : tabs)
                    for (const Tableau& b : tabs)
                        if (dominates(a, b) && dominates(b, a))
                            CHECK(a.composition_series() == b.composition_series());
            }

    CHECK_THROWS_AS(dominates(Tableau(ShiftedShape(2, 1, 1), {1}, {2}),
                              Tableau(ShiftedShape(3, 1, 1), {1}, {2, 3})),
                    error);
}

TEST_CASE("counting formula for all shapes with n <= 10")
{
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            for (int d = k; d <= n - k; ++d) {
                ShiftedShape s(n, k, d);
                CHECK(Int(enumerate_standard(s).size()) == count_standard(s));
            }
}

TEST_CASE("the worked path example at (11,4,6)")
{
    ShiftedShape s(11, 4, 6);
    LatticePath p = LatticePath::parse("NEENNNENEEN");
    Tableau t = path_to_tableau(p, s);
    CHECK(t.top() == std::vector<int>{1, 4, 6, 7, 8, 11});
    CHECK(t.bottom() == std::vector<int>{2, 3, 5, 9, 10});
    CHECK(path_subdiagonal(p, s));
    CHECK(t.is_standard());
    CHECK(tableau_to_path(t).str() == "NEENNNENEEN");

    // the non-sub-shifted-diagonal path of the same example
    Tableau bad(s, {3, 4, 6, 7, 9, 11}, {1, 2, 5, 8, 10});
    LatticePath pb = tableau_to_path(bad);
    CHECK(!path_subdiagonal(pb, s));
    CHECK(path_to_tableau(pb, s) == bad);
}

TEST_CASE("all-E-then-all-N path lands on the top row 1..d")
{
    // tracing the labeling rule: E-steps carry labels n..d+1 into the bottom
    // row, N-steps labels d..1 into the top row
    ShiftedShape s(5, 1, 3);
    Tableau t = path_to_tableau(LatticePath::parse("EENNN"), s);
    CHECK(t.top() == std::vector<int>{1, 2, 3});
    CHECK(t.bottom() == std::vector<int>{4, 5});
    CHECK(t.is_standard());
    // the greedy hug-the-diagonal path is the one mapping to the dominance-
    // largest (column-filling) tableau
    Tableau colfill = path_to_tableau(LatticePath::parse("NNENE"), s);
    CHECK(colfill.top() == std::vector<int>{2, 4, 5});
    CHECK(colfill.bottom() == std::vector<int>{1, 3});
}

TEST_CASE("bijection: standard iff weakly below the shifted diagonal, n <= 10")
{
    for (int n = 2; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            for (int d = k; d <= n - k; ++d) {
                ShiftedShape s(n, k, d);
                Int below = 0;
                for (const LatticePath& p : all_paths(n, d)) {
                    Tableau t = path_to_tableau(p, s);
                    CHECK(t.is_standard() == path_subdiagonal(p, s));
                    CHECK(tableau_to_path(t).str() == p.str());
                    if (path_subdiagonal(p, s))
                        ++below;
                }
                CHECK(below == count_standard(s));
            }
}

TEST_CASE("path counting")
{
    CHECK(count_paths({0, 0}, {2, 2}) == 6);
    CHECK(count_subdiagonal(ShiftedShape(5, 1, 3)) == 9);
    CHECK_THROWS_AS(count_paths({2, 2}, {1, 3}), error);

    // reflection-principle count vs brute force for n <= 12
    for (int n = 2; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            for (int d = k; d <= n - k; ++d) {
                ShiftedShape s(n, k, d);
                Int touching = 0;
                for (const LatticePath& p : all_paths(n, d)) {
                    LatticePoint pt = p.start;
                    bool touch = pt.y - pt.x >= s.d - s.k + 1;
                    for (char st : p.steps) {
                        (st == 'N' ? pt.y : pt.x) += 1;
                        if (pt.y - pt.x >= s.d - s.k + 1)
                            touch = true;
                    }
                    if (touch)
                        ++touching;
                }
                CHECK(touching == count_touching(s));
                CHECK(count_touching(s) == binomial(n, k - 1));
            }
}

TEST_CASE("tableau text form round-trips")
{
    ShiftedShape s(5, 1, 3);
    Tableau t(s, {2, 4, 5}, {1, 3});
    CHECK(t.str() == "top=2,4,5;bottom=1,3");
    CHECK(Tableau::parse("top=2,4,5;bottom=1,3", s) == t);
    CHECK_THROWS_AS(Tableau::parse("top=2,4;bottom=1,3", s), error);
    CHECK_THROWS_AS(Tableau::parse("top=2,4,5;bottom=1,1", s), error);
}

TEST_CASE("support and path endpoint errors")
{
    Tableau t(ShiftedShape(5, 1, 3), {2, 4, 5}, {1, 3});
    CHECK(t.support() == std::vector<int>{2, 3, 4, 5});
    CHECK_THROWS_AS(path_to_tableau(LatticePath::parse("NNN"), ShiftedShape(5, 1, 3)), error);
}
