// GF(2^8) arithmetic and the polynomial toolkit built on it: Horner
// evaluation, Lagrange interpolation, and Berlekamp-Welch decoding of
// Reed-Solomon-style point sets.
//
// Field: GF(2)[x] mod x^8 + x^4 + x^3 + x + 1 (0x11B). Addition is XOR.
// Multiplication goes through log/antilog tables over the generator 0x03.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pacdosq::gf256 {

using FieldElement = uint8_t;

namespace detail {

// Carry-less shift-reduce product, used once to seed the tables.
constexpr FieldElement slow_mul(FieldElement a, FieldElement b) {
    uint16_t acc = 0;
    uint16_t aw = a;
    for (int i = 0; i < 8; ++i) {
        if (b & (1 << i)) acc ^= uint16_t(aw << i);
    }
    for (int bit = 15; bit >= 8; --bit) {
        if (acc & (1 << bit)) acc ^= uint16_t(0x11B << (bit - 8));
    }
    return FieldElement(acc);
}

struct Tables {
    std::array<uint8_t, 256> log{};
    std::array<uint8_t, 512> exp{};
    constexpr Tables() {
        FieldElement p = 1;
        for (int i = 0; i < 255; ++i) {
            exp[i] = p;
            log[p] = uint8_t(i);
            p = slow_mul(p, 0x03);
        }
        for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
        log[0] = 0;  // never read; fmul/finv special-case zero
    }
};

inline constexpr Tables tables{};

}  // namespace detail

inline FieldElement fadd(FieldElement a, FieldElement b) { return a ^ b; }
inline FieldElement fsub(FieldElement a, FieldElement b) { return a ^ b; }

inline FieldElement fmul(FieldElement a, FieldElement b) {
    if (a == 0 || b == 0) return 0;
    return detail::tables.exp[detail::tables.log[a] + detail::tables.log[b]];
}

inline FieldElement finv(FieldElement a) {
    if (a == 0) throw std::domain_error("gf256: zero has no inverse");
    return detail::tables.exp[255 - detail::tables.log[a]];
}

inline FieldElement fdiv(FieldElement a, FieldElement b) { return fmul(a, finv(b)); }

// Coefficients lowest degree first. Zero polynomial has degree -1.
struct Polynomial {
    std::vector<FieldElement> coeffs;

    int degree() const {
        for (int i = int(coeffs.size()) - 1; i >= 0; --i)
            if (coeffs[i] != 0) return i;
        return -1;
    }
    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
};

inline FieldElement poly_eval(const Polynomial& p, FieldElement x) {
    FieldElement acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = fadd(fmul(acc, x), *it);
    return acc;
}

using Point = std::pair<FieldElement, FieldElement>;

namespace detail {

inline void check_distinct_x(const std::vector<Point>& points) {
    std::array<bool, 256> seen{};
    for (const auto& [x, y] : points) {
        if (seen[x]) throw std::domain_error("gf256: duplicate x-coordinate");
        seen[x] = true;
    }
}

}  // namespace detail

// Value at x0 of the unique degree-(n-1) polynomial through n points.
inline FieldElement lagrange_interpolate(const std::vector<Point>& points, FieldElement x0) {
    if (points.empty()) throw std::domain_error("gf256: no points");
    detail::check_distinct_x(points);
    FieldElement acc = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        FieldElement num = 1, den = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            num = fmul(num, fadd(x0, points[j].first));
            den = fmul(den, fadd(points[i].first, points[j].first));
        }
        acc = fadd(acc, fmul(points[i].second, fdiv(num, den)));
    }
    return acc;
}

// Lagrange basis weights L_i(x0) for a fixed point set, so one point set can
// be applied across many y-vectors (the per-word PIR reconstruction path).
inline std::vector<FieldElement> lagrange_weights(const std::vector<FieldElement>& xs,
                                                  FieldElement x0) {
    std::vector<FieldElement> w(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        FieldElement num = 1, den = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = fmul(num, fadd(x0, xs[j]));
            den = fmul(den, fadd(xs[i], xs[j]));
        }
        w[i] = fdiv(num, den);
    }
    return w;
}

struct DecodeResult {
    Polynomial poly;          // recovered message polynomial, degree <= t
    FieldElement value;       // poly evaluated at the requested x0
};

namespace detail {

// Row-reduce an n x (m+1) augmented matrix over GF(2^8) in place. Returns
// false when the system is inconsistent. Free variables are set to zero.
inline bool solve_linear(std::vector<std::vector<FieldElement>>& m,
                         std::vector<FieldElement>& solution, size_t unknowns) {
    size_t rows = m.size();
    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < unknowns && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[row]);
        FieldElement inv = finv(m[row][col]);
        for (size_t c = col; c <= unknowns; ++c) m[row][c] = fmul(m[row][c], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            FieldElement f = m[r][col];
            for (size_t c = col; c <= unknowns; ++c)
                m[r][c] = fadd(m[r][c], fmul(f, m[row][c]));
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (size_t r = row; r < rows; ++r)
        if (m[r][unknowns] != 0) return false;
    solution.assign(unknowns, 0);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        solution[pivot_col_of_row[r]] = m[r][unknowns];
    return true;
}

// Polynomial long division; returns {quotient, remainder}.
inline std::pair<Polynomial, Polynomial> poly_divmod(Polynomial num, const Polynomial& den) {
    int dd = den.degree();
    if (dd < 0) throw std::domain_error("gf256: division by zero polynomial");
    Polynomial q;
    q.coeffs.assign(size_t(std::max(num.degree() - dd + 1, 0)), 0);
    while (num.degree() >= dd) {
        int shift = num.degree() - dd;
        FieldElement factor = fdiv(num.coeffs[num.degree()], den.coeffs[dd]);
        q.coeffs[shift] = factor;
        for (int i = 0; i <= dd; ++i)
            num.coeffs[i + shift] = fadd(num.coeffs[i + shift], fmul(factor, den.coeffs[i]));
        num.trim();
    }
    return {q, num};
}

}  // namespace detail

// Berlekamp-Welch unique decoding. Given k > t points of which at most
// floor((k-t-1)/2) deviate from some degree-t polynomial f, recovers f.
// Returns nullopt when no polynomial within the radius explains the points.
inline std::optional<DecodeResult> berlekamp_welch_decode(const std::vector<Point>& points,
                                                          int t, FieldElement x0) {
    int k = int(points.size());
    if (k <= t) throw std::domain_error("gf256: need more than t points");
    detail::check_distinct_x(points);

    int e = (k - t - 1) / 2;
    // Unknowns: E = x^e + e_{e-1} x^{e-1} + ... + e_0 (monic, e coefficients)
    // and Q of degree <= e + t (e + t + 1 coefficients), satisfying
    // y_i * E(x_i) = Q(x_i) for every point.
    size_t ne = size_t(e), nq = size_t(e + t + 1);
    size_t unknowns = ne + nq;
    std::vector<std::vector<FieldElement>> m(size_t(k),
                                             std::vector<FieldElement>(unknowns + 1, 0));
    for (int i = 0; i < k; ++i) {
        auto [x, y] = points[size_t(i)];
        FieldElement xp = 1;
        for (size_t j = 0; j < ne; ++j) {
            m[size_t(i)][j] = fmul(y, xp);
            xp = fmul(xp, x);
        }
        // xp is now x^e, the coefficient of the monic leading term.
        m[size_t(i)][unknowns] = fmul(y, xp);
        xp = 1;
        for (size_t j = 0; j < nq; ++j) {
            m[size_t(i)][ne + j] = xp;
            xp = fmul(xp, x);
        }
    }

    std::vector<FieldElement> sol;
    if (!detail::solve_linear(m, sol, unknowns)) return std::nullopt;

    Polynomial E;
    E.coeffs.assign(sol.begin(), sol.begin() + long(ne));
    E.coeffs.push_back(1);
    Polynomial Q;
    Q.coeffs.assign(sol.begin() + long(ne), sol.end());
    Q.trim();

    auto [f, rem] = detail::poly_divmod(Q, E);
    if (rem.degree() >= 0 || f.degree() > t) return std::nullopt;

    // The decoded polynomial must explain all but at most e points.
    int disagreements = 0;
    for (const auto& [x, y] : points)
        if (poly_eval(f, x) != y) ++disagreements;
    if (disagreements > e) return std::nullopt;

    return DecodeResult{f, poly_eval(f, x0)};
}

}  // namespace pacdosq::gf256
