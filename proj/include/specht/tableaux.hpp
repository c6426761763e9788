#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/error.hpp"
#include "specht/field.hpp"

namespace specht {

// The d-shifted two-row shape lambda(d) for lambda = (n-k, k).
//
// Global columns run 1..n-k left to right. The bottom row occupies columns
// 1..n-d, the top row columns n-k-d+1..n-k; the k overlap columns
// n-k-d+1..n-d are the two-cell columns.
struct ShiftedShape {
    int n = 0;
    int k = 0;
    int d = 0;

    ShiftedShape() = default;

    ShiftedShape(int n_, int k_, int d_) : n(n_), k(k_), d(d_)
    {
        if (!(0 <= k && k <= d && d <= n - k))
            raise(errc::invalid_shape,
                  "(n,k,d)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ") violates 0<=k<=d<=n-k");
    }

    int top_len() const { return d; }
    int bottom_len() const { return n - d; }
    int free_bottom_len() const { return n - k - d; }
    int free_top_len() const { return d - k; }
    int global_cols() const { return n - k; }

    bool operator==(const ShiftedShape&) const = default;

    std::string str() const
    {
        return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ")";
    }
};

// A filling of the shifted shape by 1..n. Rows are stored left to right:
//   top    = (i_1 .. i_k | i_{k+1} .. i_d)           pair tops, then free tops
//   bottom = (i_{d+1} .. i_{n-k} | j_1 .. j_k)       free bottoms, then pair bottoms
// Pair t is top[t-1] over bottom[free_bottom_len + t - 1].
class Tableau {
public:
    Tableau() = default;

    Tableau(ShiftedShape shape, std::vector<int> top, std::vector<int> bottom)
        : shape_(shape), top_(std::move(top)), bottom_(std::move(bottom))
    {
        if (static_cast<int>(top_.size()) != shape_.top_len() || static_cast<int>(bottom_.size()) != shape_.bottom_len())
            raise(errc::invalid_filling, "row lengths do not match the shape");
        std::vector<char> seen(static_cast<size_t>(shape_.n + 1), 0);
        auto visit = [&](int v) {
            if (v < 1 || v > shape_.n || seen[static_cast<size_t>(v)])
                raise(errc::invalid_filling, "entries must be a permutation of 1..n");
            seen[static_cast<size_t>(v)] = 1;
        };
        for (int v : top_)
            visit(v);
        for (int v : bottom_)
            visit(v);
    }

    const ShiftedShape& shape() const { return shape_; }
    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }

    int pair_top(int t) const { return top_[static_cast<size_t>(t - 1)]; } // 1-based t <= k
    int pair_bottom(int t) const { return bottom_[static_cast<size_t>(shape_.free_bottom_len() + t - 1)]; }

    bool is_standard() const
    {
        for (size_t i = 1; i < top_.size(); ++i)
            if (top_[i - 1] >= top_[i])
                return false;
        for (size_t i = 1; i < bottom_.size(); ++i)
            if (bottom_[i - 1] >= bottom_[i])
                return false;
        for (int t = 1; t <= shape_.k; ++t)
            if (pair_top(t) >= pair_bottom(t))
                return false;
        return true;
    }

    // Entries of global column b (1-based), top cell first when present.
    std::vector<int> column(int b) const
    {
        if (b < 1 || b > shape_.global_cols())
            raise(errc::index_out_of_range, "global column index");
        std::vector<int> out;
        int fb = shape_.free_bottom_len();
        if (b > fb) // top cell present
            out.push_back(top_[static_cast<size_t>(b - fb - 1)]);
        if (b <= shape_.bottom_len())
            out.push_back(bottom_[static_cast<size_t>(b - 1)]);
        return out;
    }

    // supp(T): entries in or right of a two-cell column, i.e. everything
    // except the free-bottom entries.
    std::vector<int> support() const
    {
        std::vector<int> out(top_.begin(), top_.end());
        for (int t = 1; t <= shape_.k; ++t)
            out.push_back(pair_bottom(t));
        std::sort(out.begin(), out.end());
        return out;
    }

    // Composition series gamma(T): entry [a-1][b-1] counts entries <= a in
    // global column b. Invariant under reordering entries within a column.
    std::vector<std::vector<int>> composition_series() const
    {
        int n = shape_.n, cols = shape_.global_cols();
        std::vector<std::vector<int>> g(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(cols), 0));
        for (int b = 1; b <= cols; ++b)
            for (int v : column(b))
                for (int a = v; a <= n; ++a)
                    g[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] += 1;
        return g;
    }

    Tableau transposed_entries(int a, int b) const // swap the entries a and b
    {
        Tableau t = *this;
        for (int& v : t.top_)
            v = v == a ? b : (v == b ? a : v);
        for (int& v : t.bottom_)
            v = v == a ? b : (v == b ? a : v);
        return t;
    }

    Tableau permuted_entries(const std::vector<int>& perm) const // entry v -> perm[v-1]
    {
        Tableau t = *this;
        for (int& v : t.top_)
            v = perm[static_cast<size_t>(v - 1)];
        for (int& v : t.bottom_)
            v = perm[static_cast<size_t>(v - 1)];
        return t;
    }

    std::string str() const
    {
        std::string s = "top=";
        for (size_t i = 0; i < top_.size(); ++i)
            s += (i ? "," : "") + std::to_string(top_[i]);
        s += ";bottom=";
        for (size_t i = 0; i < bottom_.size(); ++i)
            s += (i ? "," : "") + std::to_string(bottom_[i]);
        return s;
    }

    static Tableau parse(std::string_view text, const ShiftedShape& shape)
    {
        auto read_list = [](std::string_view s) {
            std::vector<int> out;
            size_t i = 0;
            while (i < s.size()) {
                size_t j = s.find(',', i);
                if (j == std::string_view::npos)
                    j = s.size();
                try {
                    out.push_back(std::stoi(std::string(s.substr(i, j - i))));
                } catch (const std::exception&) {
                    raise(errc::parse_error, "bad tableau entry list");
                }
                i = j + 1;
            }
            return out;
        };
        std::string_view t = text;
        if (t.rfind("top=", 0) != 0)
            raise(errc::parse_error, "tableau must start with top=");
        size_t semi = t.find(';');
        if (semi == std::string_view::npos || t.substr(semi + 1).rfind("bottom=", 0) != 0)
            raise(errc::parse_error, "tableau must contain ;bottom=");
        std::vector<int> top = read_list(t.substr(4, semi - 4));
        std::vector<int> bottom = read_list(t.substr(semi + 8));
        return Tableau(shape, std::move(top), std::move(bottom));
    }

    bool operator==(const Tableau& o) const
    {
        return shape_ == o.shape_ && top_ == o.top_ && bottom_ == o.bottom_;
    }

    bool operator<(const Tableau& o) const
    {
        if (top_ != o.top_)
            return top_ < o.top_;
        return bottom_ < o.bottom_;
    }

private:
    ShiftedShape shape_;
    std::vector<int> top_, bottom_;
};

// dominates(T, T2) is the composition-dominance relation T <| T2 ("T2
// dominates T"): every prefix sum of every composition vector of T2 is >= the
// one of T.
inline bool dominates(const Tableau& t, const Tableau& t2)
{
    if (!(t.shape() == t2.shape()))
        raise(errc::shape_mismatch, "dominance needs a common shape");
    auto g1 = t.composition_series();
    auto g2 = t2.composition_series();
    int n = t.shape().n, cols = t.shape().global_cols();
    for (int a = 0; a < n; ++a) {
        int s1 = 0, s2 = 0;
        for (int b = 0; b < cols; ++b) {
            s1 += g1[static_cast<size_t>(a)][static_cast<size_t>(b)];
            s2 += g2[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (s1 > s2)
                return false;
        }
    }
    return true;
}

// Standard tableaux of the shape, top rows in descending lexicographic order
// (the order the published table for (5,1,3) is laid out in). A standard
// tableau is determined by its d-row: the complement, sorted ascending, is
// the bottom row, and the filling is standard iff for each t <= k at least t
// complement entries exceed i_{k+1-t}.
inline std::vector<Tableau> enumerate_standard(const ShiftedShape& shape)
{
    std::vector<Tableau> out;
    auto tops = subsets(shape.n, shape.d);
    std::reverse(tops.begin(), tops.end());
    for (const auto& top : tops) {
        std::vector<int> bottom = complement(top, shape.n);
        bool ok = true;
        for (int t = 1; t <= shape.k && ok; ++t) {
            int pivot = top[static_cast<size_t>(shape.k - t)];
            int count = 0;
            for (int v : bottom)
                if (v > pivot)
                    ++count;
            if (count < t)
                ok = false;
        }
        if (!ok)
            continue;
        Tableau T(shape, top, bottom);
        out.push_back(std::move(T));
    }
    return out;
}

inline Int count_standard(const ShiftedShape& shape)
{
    return binomial(shape.n, shape.d) - binomial(shape.n, shape.k - 1);
}

// ---- NE lattice paths ---------------------------------------------------

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    bool operator==(const LatticePoint&) const = default;
};

// A NE path as a step string over {N,E} starting at `start`.
struct LatticePath {
    std::vector<char> steps;
    LatticePoint start{0, 0};

    LatticePoint end() const
    {
        LatticePoint p = start;
        for (char s : steps)
            (s == 'N' ? p.y : p.x) += 1;
        return p;
    }

    static LatticePath parse(std::string_view text)
    {
        LatticePath p;
        for (char c : text) {
            if (c == 'N' || c == 'E')
                p.steps.push_back(c);
            else if (!std::isspace(static_cast<unsigned char>(c)))
                raise(errc::parse_error, "path steps must be N or E");
        }
        return p;
    }

    std::string str() const { return std::string(steps.begin(), steps.end()); }
};

inline Int count_paths(LatticePoint from, LatticePoint to)
{
    if (to.x < from.x || to.y < from.y)
        raise(errc::invalid_endpoints, "endpoint not northeast of start");
    long long total = (to.x - from.x) + (to.y - from.y);
    return binomial(total, to.y - from.y);
}

// Paths from (0,0) to (n-d, d) weakly below y = x + (d-k).
inline Int count_subdiagonal(const ShiftedShape& shape)
{
    return count_standard(shape);
}

// Reflection principle count: paths (0,0) -> (n-d, d) touching y = x+(d-k)+1
// equal all paths from the reflected start (-(d-k)-1, (d-k)+1).
inline Int count_touching(const ShiftedShape& shape)
{
    long long c = shape.d - shape.k + 1;
    if (shape.d < c) // the line is unreachable (k = 0)
        return 0;
    return count_paths(LatticePoint{-c, c}, LatticePoint{shape.n - shape.d, shape.d});
}

inline bool path_subdiagonal(const LatticePath& path, const ShiftedShape& shape)
{
    LatticePoint p = path.start;
    long long bound = shape.d - shape.k;
    if (p.y - p.x > bound)
        return false;
    for (char s : path.steps) {
        (s == 'N' ? p.y : p.x) += 1;
        if (p.y - p.x > bound)
            return false;
    }
    return true;
}

// Step i (1-based) carries the label n-i+1; N-step labels fill the top row
// right to left, E-step labels the bottom row right to left.
inline Tableau path_to_tableau(const LatticePath& path, const ShiftedShape& shape)
{
    if (!(path.start == LatticePoint{0, 0}) || !(path.end() == LatticePoint{shape.n - shape.d, shape.d}))
        raise(errc::endpoint_mismatch, "path must run (0,0) -> (n-d, d)");
    std::vector<int> top, bottom;
    for (size_t i = 0; i < path.steps.size(); ++i) {
        int label = shape.n - static_cast<int>(i);
        if (path.steps[i] == 'N')
            top.push_back(label);
        else
            bottom.push_back(label);
    }
    std::reverse(top.begin(), top.end());
    std::reverse(bottom.begin(), bottom.end());
    return Tableau(shape, std::move(top), std::move(bottom));
}

// Inverse of path_to_tableau; requires row-increasing rows (any standard
// tableau qualifies).
inline LatticePath tableau_to_path(const Tableau& T)
{
    const ShiftedShape& shape = T.shape();
    std::vector<char> in_top(static_cast<size_t>(shape.n + 1), 0);
    for (int v : T.top())
        in_top[static_cast<size_t>(v)] = 1;
    LatticePath p;
    for (int i = 1; i <= shape.n; ++i) {
        int label = shape.n - i + 1;
        p.steps.push_back(in_top[static_cast<size_t>(label)] ? 'N' : 'E');
    }
    return p;
}

} // namespace specht
