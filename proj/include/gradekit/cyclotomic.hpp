#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

#include "gradekit/rational.hpp"

namespace gradekit {

namespace detail {

// Dense polynomials over the rationals, index = degree, trailing zeros trimmed.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Division with remainder; divisor must be nonzero.
inline void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    poly_trim(r);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rational(0));
    while (r.size() >= b.size() && !r.empty()) {
        const size_t shift = r.size() - b.size();
        Rational c = r.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        poly_trim(r);
    }
    poly_trim(q);
}

// Extended Euclid: g = gcd(a,b) together with s,t so that s*a + t*b = g.
inline Poly poly_xgcd(Poly a, Poly b, Poly& s, Poly& t) {
    Poly s0{Rational(1)}, s1, t0, t1{Rational(1)};
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a.swap(b);
        b = r;
        Poly qs = poly_mul(q, s1), qt = poly_mul(q, t1);
        Poly ns = s0, nt = t0;
        ns.resize(std::max(ns.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        nt.resize(std::max(nt.size(), qt.size()), Rational(0));
        for (size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
        poly_trim(ns);
        poly_trim(nt);
        s0.swap(s1);
        s1 = ns;
        t0.swap(t1);
        t1 = nt;
    }
    s = s0;
    t = t0;
    return a;
}

// Reduction data for Q(zeta_n) = Q[x]/Phi_n(x).
struct FieldTable {
    int conductor = 1;
    size_t degree = 1;
    Poly phi;                            // n-th cyclotomic polynomial, monic
    std::vector<std::vector<Rational>> xpow;  // x^e mod phi, e in [0, max_exp]

    const std::vector<Rational>& power(size_t e) const { return xpow.at(e); }
};

inline Poly cyclotomic_polynomial(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly p(static_cast<size_t>(n) + 1, Rational(0));
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly q, r;
        poly_divmod(p, cyclotomic_polynomial(d), q, r);
        p = q;
    }
    return p;
}

inline std::shared_ptr<const FieldTable> field_table(int conductor) {
    require(conductor >= 1 && conductor <= 4096, "unsupported conductor");
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const FieldTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;

    auto tab = std::make_shared<FieldTable>();
    tab->conductor = conductor;
    tab->phi = cyclotomic_polynomial(conductor);
    tab->degree = tab->phi.size() - 1;
    const size_t max_exp = std::max<size_t>(2 * tab->degree, static_cast<size_t>(conductor)) + 1;
    tab->xpow.assign(max_exp + 1, std::vector<Rational>(tab->degree, Rational(0)));
    std::vector<Rational> cur(tab->degree, Rational(0));
    cur[0] = 1;
    tab->xpow[0] = cur;
    for (size_t e = 1; e <= max_exp; ++e) {
        // multiply by x, then reduce the (possible) degree overflow by phi
        Rational top = cur.empty() ? Rational(0) : cur[tab->degree - 1];
        for (size_t k = tab->degree; k-- > 1;) cur[k] = cur[k - 1];
        cur[0] = 0;
        if (top != 0)
            for (size_t k = 0; k < tab->degree; ++k) cur[k] -= top * tab->phi[k];
        tab->xpow[e] = cur;
    }
    cache.emplace(conductor, tab);
    return tab;
}

} // namespace detail

/// Element of the cyclotomic field Q(zeta_n), stored as the reduced residue
/// mod Phi_n. All arithmetic is exact; operands must share the conductor.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}

    explicit Cyclotomic(int conductor)
        : conductor_(conductor), coeffs_(detail::field_table(conductor)->degree, Rational(0)) {}

    Cyclotomic(int conductor, const Rational& value) : Cyclotomic(conductor) { coeffs_[0] = value; }

    Cyclotomic(int conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
        require(coeffs_.size() == detail::field_table(conductor)->degree,
                "coefficient vector length does not match the conductor");
    }

    static Cyclotomic zero(int conductor) { return Cyclotomic(conductor); }
    static Cyclotomic one(int conductor) { return Cyclotomic(conductor, Rational(1)); }

    /// zeta_n^k (k arbitrary, taken mod n).
    static Cyclotomic root_of_unity(int conductor, long k) {
        auto tab = detail::field_table(conductor);
        long e = k % conductor;
        if (e < 0) e += conductor;
        return Cyclotomic(conductor, tab->power(static_cast<size_t>(e)));
    }

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const { return is_rational() && coeffs_[0] == 1; }
    bool is_rational() const {
        for (size_t k = 1; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return false;
        return true;
    }
    const Rational& rational_value() const {
        require(is_rational(), "value is not rational");
        return coeffs_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_conductor(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_conductor(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_conductor(b);
        auto tab = detail::field_table(a.conductor_);
        const size_t deg = tab->degree;
        std::vector<Rational> conv(2 * deg - 1, Rational(0));
        for (size_t i = 0; i < deg; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < deg; ++j) {
                if (b.coeffs_[j] == 0) continue;
                conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        Cyclotomic r(a.conductor_);
        for (size_t k = 0; k < deg; ++k) r.coeffs_[k] = conv[k];
        for (size_t e = deg; e < conv.size(); ++e) {
            if (conv[e] == 0) continue;
            const auto& pw = tab->power(e);
            for (size_t k = 0; k < deg; ++k) r.coeffs_[k] += conv[e] * pw[k];
        }
        return r;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic inverse() const {
        require(!is_zero(), "inversion of zero");
        auto tab = detail::field_table(conductor_);
        detail::Poly a(coeffs_.begin(), coeffs_.end());
        detail::poly_trim(a);
        detail::Poly s, t;
        detail::Poly g = detail::poly_xgcd(a, tab->phi, s, t);
        // Phi_n is irreducible, so g is a nonzero constant.
        Cyclotomic r(conductor_);
        for (size_t k = 0; k < s.size() && k < r.coeffs_.size(); ++k) r.coeffs_[k] = s[k] / g[0];
        // s may have degree >= deg only transiently; xgcd already keeps it reduced
        return r;
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    /// Galois twist zeta_n -> zeta_n^j; j must be coprime to the conductor.
    Cyclotomic galois(long j) const {
        long n = conductor_;
        long jm = j % n;
        if (jm < 0) jm += n;
        require(std::gcd(jm, n) == 1, "galois exponent not coprime to conductor");
        auto tab = detail::field_table(conductor_);
        Cyclotomic r(conductor_);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            const auto& pw = tab->power(static_cast<size_t>((jm * static_cast<long>(k)) % n));
            for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[k] * pw[i];
        }
        return r;
    }

    /// Complex conjugation, zeta_n -> zeta_n^{-1}.
    Cyclotomic conj() const { return conductor_ <= 2 ? *this : galois(conductor_ - 1); }

    bool is_real() const { return *this == conj(); }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic base = *this, acc = one(conductor_);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_conductor(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Total order used only for deterministic output; not a field order.
    static int compare(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
        for (size_t k = 0; k < a.coeffs_.size(); ++k) {
            int c = cmp(a.coeffs_[k], b.coeffs_[k]);
            if (c != 0) return c;
        }
        return 0;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            Rational c = coeffs_[k];
            if (!first) {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            if (k == 0) {
                os << to_string(c);
            } else {
                if (c != 1) os << to_string(c) << "*";
                os << "z" << conductor_;
                if (k > 1) os << "^" << k;
            }
        }
        return first ? "0" : os.str();
    }

private:
    void check_conductor(const Cyclotomic& o) const {
        require(conductor_ == o.conductor_, "conductor mismatch");
    }

    int conductor_;
    std::vector<Rational> coeffs_;
};

/// All roots of unity contained in Q(zeta_n): the group generated by -zeta_n.
inline std::vector<Cyclotomic> roots_of_unity(int conductor) {
    std::vector<Cyclotomic> out;
    auto push = [&](const Cyclotomic& v) {
        for (const auto& w : out)
            if (w == v) return;
        out.push_back(v);
    };
    for (int k = 0; k < conductor; ++k) {
        Cyclotomic z = Cyclotomic::root_of_unity(conductor, k);
        push(z);
        push(-z);
    }
    return out;
}

} // namespace gradekit
