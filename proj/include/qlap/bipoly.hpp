#pragma once

// Exact bivariate polynomials over the integers in the variables q and x.
// Coefficients are arbitrary-precision (GMP); zero terms are never stored.
// This layer backs every identity that must hold exactly rather than to a
// floating tolerance.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qlap {

struct BiPoly {
    // (q-degree, x-degree) -> coefficient; invariant: no zero values.
    std::map<std::pair<int, int>, mpz_class> terms;

    BiPoly() = default;

    static BiPoly constant(const mpz_class& c) { return monomial(0, 0, c); }
    static BiPoly monomial(int dq, int dx, const mpz_class& c) {
        BiPoly p;
        if (c != 0) p.terms[{dq, dx}] = c;
        return p;
    }
    static BiPoly var_q() { return monomial(1, 0, 1); }
    static BiPoly var_x() { return monomial(0, 1, 1); }

    bool is_zero() const { return terms.empty(); }

    int deg_x() const {
        int d = -1;
        for (const auto& [k, c] : terms) d = std::max(d, k.second);
        return d;
    }
    int deg_q() const {
        int d = -1;
        for (const auto& [k, c] : terms) d = std::max(d, k.first);
        return d;
    }

    mpz_class coeff(int dq, int dx) const {
        auto it = terms.find({dq, dx});
        return it == terms.end() ? mpz_class(0) : it->second;
    }

    // Coefficient of x^dx as a polynomial in q.
    BiPoly coeff_of_x(int dx) const {
        BiPoly out;
        for (const auto& [k, c] : terms)
            if (k.second == dx) out.terms[{k.first, 0}] = c;
        return out;
    }

    void add_term(int dq, int dx, const mpz_class& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.try_emplace({dq, dx}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms) add_term(k.first, k.second, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly out;
        for (const auto& [k, c] : a.terms) out.terms[k] = -c;
        return out;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms)
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
        BiPoly acc = constant(1);
        for (int i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    // Leading term under lexicographic (x-degree, q-degree) order.
    std::pair<std::pair<int, int>, mpz_class> leading_term_xq() const {
        if (terms.empty()) throw std::logic_error("leading term of zero polynomial");
        auto best = terms.begin();
        for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
            auto lhs = std::pair{it->first.second, it->first.first};
            auto rhs = std::pair{best->first.second, best->first.first};
            if (lhs > rhs) best = it;
        }
        return {best->first, best->second};
    }

    // Exact division; throws if the divisor does not divide this polynomial.
    // Valid whenever the quotient exists in Z[q,x], by leading-term reduction
    // under a monomial order.
    BiPoly divided_exactly_by(const BiPoly& g) const {
        if (g.is_zero()) throw std::invalid_argument("BiPoly: division by zero");
        BiPoly rem = *this, quot;
        auto [gk, gc] = g.leading_term_xq();
        while (!rem.is_zero()) {
            auto [rk, rc] = rem.leading_term_xq();
            int dq = rk.first - gk.first;
            int dx = rk.second - gk.second;
            if (dq < 0 || dx < 0 || !mpz_divisible_p(rc.get_mpz_t(), gc.get_mpz_t()))
                throw std::logic_error("BiPoly: non-exact division");
            mpz_class qc;
            mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), gc.get_mpz_t());
            quot.add_term(dq, dx, qc);
            BiPoly t = monomial(dq, dx, qc) * g;
            rem -= t;
        }
        return quot;
    }

    // Substitute x = 0: the polynomial in q formed by the x-free terms.
    BiPoly at_x_zero() const { return coeff_of_x(0); }

    bool has_only_even_q_powers() const {
        for (const auto& [k, c] : terms)
            if (k.first % 2 != 0) return false;
        return true;
    }

    // Evaluate at scalars; T may be double, long double, std::complex<double>,
    // or mpq_class.  Horner in x over Horner-in-q coefficient polynomials.
    template <typename T>
    T eval(const T& q, const T& x) const {
        auto to_scalar = [](const mpz_class& c) -> T {
            if constexpr (std::is_same_v<T, mpq_class>)
                return mpq_class(c);
            else
                return T(c.get_d());
        };
        int dx_max = deg_x();
        if (dx_max < 0) return T(0);
        // Per x-degree, terms sorted by ascending q-degree (map order).
        std::vector<std::vector<std::pair<int, const mpz_class*>>> by_dx(dx_max + 1);
        for (const auto& [k, c] : terms) by_dx[k.second].emplace_back(k.first, &c);
        T acc(0);
        for (int dx = dx_max; dx >= 0; --dx) {
            T cq(0);
            int prev = -1;
            for (auto it = by_dx[dx].rbegin(); it != by_dx[dx].rend(); ++it) {
                auto [dq, c] = *it;
                if (prev < 0) {
                    cq = to_scalar(*c);
                } else {
                    for (int e = 0; e < prev - dq; ++e) cq = cq * q;
                    cq = cq + to_scalar(*c);
                }
                prev = dq;
            }
            if (prev > 0)
                for (int e = 0; e < prev; ++e) cq = cq * q;
            acc = acc * x + cq;
        }
        return acc;
    }

    // Specialize q to an exact rational: coefficient vector in x, degree order
    // ascending (index = x-degree).
    std::vector<mpq_class> specialize_q(const mpq_class& q) const {
        std::vector<mpq_class> out(std::max(0, deg_x() + 1), mpq_class(0));
        for (const auto& [k, c] : terms) {
            mpq_class p(1);
            for (int e = 0; e < k.first; ++e) p *= q;
            out[k.second] += p * mpq_class(c);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    // Terms ordered by descending x-degree, then descending q-degree.
    std::vector<std::pair<std::pair<int, int>, mpz_class>> sorted_terms() const {
        std::vector<std::pair<std::pair<int, int>, mpz_class>> v(terms.begin(), terms.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            return std::pair{a.first.second, a.first.first} >
                   std::pair{b.first.second, b.first.first};
        });
        return v;
    }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : sorted_terms()) {
            auto [dq, dx] = k;
            mpz_class mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool need_num = (mag != 1) || (dq == 0 && dx == 0);
            bool need_star = false;
            if (need_num) {
                os << mag.get_str();
                need_star = true;
            }
            if (dq > 0) {
                if (need_star) os << "*";
                os << (dq == 1 ? "q" : "q^" + std::to_string(dq));
                need_star = true;
            }
            if (dx > 0) {
                if (need_star) os << "*";
                os << (dx == 1 ? "x" : "x^" + std::to_string(dx));
            }
        }
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, c] : sorted_terms())
            arr.push_back({k.first, k.second, c.get_str()});
        return arr;
    }

    static BiPoly from_json(const nlohmann::json& arr) {
        BiPoly p;
        for (const auto& t : arr)
            p.add_term(t.at(0).get<int>(), t.at(1).get<int>(),
                       mpz_class(t.at(2).get<std::string>()));
        return p;
    }
};

// Convenience: small-integer constants and the common building blocks.
inline BiPoly bp_const(long c) { return BiPoly::constant(mpz_class(c)); }
inline BiPoly bp_x() { return BiPoly::var_x(); }
inline BiPoly bp_q() { return BiPoly::var_q(); }

}  // namespace qlap
