#include "exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace hs {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer add overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer sub overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer mul overflow");
    return r;
}

IMat4 izero4() { return IMat4{}; }

IMat4 iident4() {
    IMat4 m{};
    for (int i = 0; i < 4; ++i) iat(m, i, i) = 1;
    return m;
}

IMat4 imul4(const IMat4& a, const IMat4& b) {
    IMat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 4; ++k) s = checked_add(s, checked_mul(iat(a, i, k), iat(b, k, j)));
            iat(r, i, j) = s;
        }
    return r;
}

bool is_antisymmetric(const IMat4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j)
            if (iat(m, i, j) != -iat(m, j, i)) return false;
    return true;
}

std::int64_t det4_int(const IMat4& m) {
    // cofactor expansion along the first row, 3x3 minors by Sarrus
    auto minor3 = [&](int r0, int c0) {
        std::int64_t a[3][3];
        int ri = 0;
        for (int i = 0; i < 4; ++i) {
            if (i == r0) continue;
            int ci = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == c0) continue;
                a[ri][ci++] = iat(m, i, j);
            }
            ++ri;
        }
        std::int64_t p1 = checked_mul(a[0][0], checked_sub(checked_mul(a[1][1], a[2][2]), checked_mul(a[1][2], a[2][1])));
        std::int64_t p2 = checked_mul(a[0][1], checked_sub(checked_mul(a[1][0], a[2][2]), checked_mul(a[1][2], a[2][0])));
        std::int64_t p3 = checked_mul(a[0][2], checked_sub(checked_mul(a[1][0], a[2][1]), checked_mul(a[1][1], a[2][0])));
        return checked_add(checked_sub(p1, p2), p3);
    };
    std::int64_t d = 0;
    for (int j = 0; j < 4; ++j) {
        if (iat(m, 0, j) == 0) continue;
        std::int64_t c = checked_mul(iat(m, 0, j), minor3(0, j));
        d = (j % 2 == 0) ? checked_add(d, c) : checked_sub(d, c);
    }
    return d;
}

std::int64_t pfaffian4(const IMat4& e) {
    if (!is_antisymmetric(e)) throw std::domain_error("pfaffian4: matrix is not antisymmetric");
    std::int64_t t1 = checked_mul(iat(e, 0, 1), iat(e, 2, 3));
    std::int64_t t2 = checked_mul(iat(e, 0, 2), iat(e, 1, 3));
    std::int64_t t3 = checked_mul(iat(e, 0, 3), iat(e, 1, 2));
    return checked_add(checked_sub(t1, t2), t3);
}

namespace {

void swap_rows(IMat4& m, IMat4& left, int a, int b) {
    for (int j = 0; j < 4; ++j) {
        std::swap(iat(m, a, j), iat(m, b, j));
        std::swap(iat(left, a, j), iat(left, b, j));
    }
}

void swap_cols(IMat4& m, IMat4& right, int a, int b) {
    for (int i = 0; i < 4; ++i) {
        std::swap(iat(m, i, a), iat(m, i, b));
        std::swap(iat(right, i, a), iat(right, i, b));
    }
}

// row a <- row a + f * row b
void add_row(IMat4& m, IMat4& left, int a, int b, std::int64_t f) {
    for (int j = 0; j < 4; ++j) {
        iat(m, a, j) = checked_add(iat(m, a, j), checked_mul(f, iat(m, b, j)));
        iat(left, a, j) = checked_add(iat(left, a, j), checked_mul(f, iat(left, b, j)));
    }
}

void add_col(IMat4& m, IMat4& right, int a, int b, std::int64_t f) {
    for (int i = 0; i < 4; ++i) {
        iat(m, i, a) = checked_add(iat(m, i, a), checked_mul(f, iat(m, i, b)));
        iat(right, i, a) = checked_add(iat(right, i, a), checked_mul(f, iat(right, i, b)));
    }
}

void negate_row(IMat4& m, IMat4& left, int a) {
    for (int j = 0; j < 4; ++j) {
        iat(m, a, j) = checked_sub(0, iat(m, a, j));
        iat(left, a, j) = checked_sub(0, iat(left, a, j));
    }
}

} // namespace

SnfResult smith_normal_form4(const IMat4& input) {
    IMat4 m = input;
    IMat4 left = iident4();
    IMat4 right = iident4();

    for (int k = 0; k < 4; ++k) {
        for (;;) {
            // locate the smallest nonzero entry of the trailing block
            int pi = -1, pj = -1;
            std::int64_t best = 0;
            for (int i = k; i < 4; ++i)
                for (int j = k; j < 4; ++j) {
                    std::int64_t v = iat(m, i, j);
                    if (v != 0 && (pi < 0 || std::abs(v) < std::abs(best))) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break; // trailing block is zero
            if (pi != k) swap_rows(m, left, k, pi);
            if (pj != k) swap_cols(m, right, k, pj);
            if (iat(m, k, k) < 0) negate_row(m, left, k);

            std::int64_t p = iat(m, k, k);
            bool clean = true;
            for (int i = k + 1; i < 4; ++i) {
                std::int64_t q = iat(m, i, k) / p;
                if (q != 0) add_row(m, left, i, k, -q);
                if (iat(m, i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < 4; ++j) {
                std::int64_t q = iat(m, k, j) / p;
                if (q != 0) add_col(m, right, j, k, -q);
                if (iat(m, k, j) != 0) clean = false;
            }
            if (!clean) continue; // remainders became new, smaller pivot candidates

            // enforce divisibility: pivot must divide every remaining entry
            bool fixed = false;
            for (int i = k + 1; i < 4 && !fixed; ++i)
                for (int j = k + 1; j < 4 && !fixed; ++j)
                    if (iat(m, i, j) % p != 0) {
                        add_row(m, left, k, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    SnfResult r;
    r.left = left;
    r.right = right;
    for (int i = 0; i < 4; ++i) r.divisors[static_cast<size_t>(i)] = iat(m, i, i);
    return r;
}

} // namespace hs
