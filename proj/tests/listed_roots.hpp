// Positive roots of the exceptional and B(0,n) families as printed, in
// coordinates over the distinguished simple roots alpha_1..alpha_r.
#ifndef SUPERROOT_TESTS_LISTED_ROOTS_HPP
#define SUPERROOT_TESTS_LISTED_ROOTS_HPP

#include <set>
#include <utility>
#include <vector>

namespace listed {

using Coeffs = std::vector<int>;

struct Lists {
    std::set<Coeffs> even;
    std::set<Coeffs> odd;
};

inline Lists d21a() {
    return {{{0, 1, 0}, {0, 0, 1}, {2, 1, 1}}, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}};
}

inline Lists g3() {
    return {{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 3, 2}, {2, 4, 2}},
            {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 3, 2}, {1, 4, 2}}};
}

inline Lists f4() {
    return {{{0, 1, 0, 0},
             {0, 0, 1, 0},
             {0, 0, 0, 1},
             {0, 1, 1, 0},
             {0, 2, 1, 0},
             {0, 0, 1, 1},
             {0, 1, 1, 1},
             {0, 2, 1, 1},
             {0, 2, 2, 1},
             {2, 3, 2, 1}},
            {{1, 0, 0, 0},
             {1, 1, 0, 0},
             {1, 1, 1, 0},
             {1, 2, 1, 0},
             {1, 1, 1, 1},
             {1, 2, 1, 1},
             {1, 2, 2, 1},
             {1, 3, 2, 1}}};
}

// B(0,n): odd alpha_i + ... + alpha_n; even alpha_i + ... + alpha_j (j < n),
// alpha_i + ... + alpha_j + 2(alpha_{j+1} + ... + alpha_n), 2(alpha_i + ... + alpha_n) for i < n.
// The printed even list has no 2 alpha_n; `with_two_alpha_n` adds it back.
inline Lists b0n(int n, bool with_two_alpha_n) {
    const auto span = [n](int i, int j, int two_from) {
        Coeffs c(n, 0);
        for (int k = i; k <= j; ++k) c[k - 1] = 1;
        for (int k = two_from; k <= n; ++k) c[k - 1] = 2;
        return c;
    };
    Lists out;
    for (int i = 1; i <= n; ++i) out.odd.insert(span(i, n, n + 1));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            out.even.insert(span(i, j, n + 1));
            out.even.insert(span(i, j, j + 1));
        }
    for (int i = 1; i <= n - 1; ++i) out.even.insert(span(n + 1, n, i));
    if (with_two_alpha_n) out.even.insert(span(n + 1, n, n));
    return out;
}

} // namespace listed

#endif
