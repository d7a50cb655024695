#include "lsym/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "lsym/errors.hpp"

namespace lsym {

int euler_phi(int m) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
    int result = m, x = m;
    for (int p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0) x /= p;
            result -= result / p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

namespace {

std::vector<long long> compute_cyclotomic(int m) {
    // x^m - 1 divided by every Phi_d with d | m, d < m.
    std::vector<long long> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& den = cyclotomic_polynomial(d);
        std::size_t dn = den.size() - 1;
        std::vector<long long> q(num.size() - dn, 0);
        for (std::size_t k = num.size() - 1; k + 1 > dn; --k) {
            long long c = num[k];  // den is monic
            q[k - dn] = c;
            if (c != 0)
                for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
            if (k == dn) break;
        }
        num = std::move(q);
    }
    return num;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int m) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, std::vector<long long>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(m);  // recursion re-enters the cache lock for divisors
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(poly)).first->second;  // std::map nodes are stable
}

namespace {

void reduce_mod(std::vector<BigRational>& c, int m) {
    const auto& phi = cyclotomic_polynomial(m);
    std::size_t deg = phi.size() - 1;
    for (std::size_t k = c.size(); k-- > deg;) {
        if (c[k].is_zero()) continue;
        BigRational lead = c[k];
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) c[k - deg + j] -= lead * BigRational(phi[j]);
        c[k] = BigRational(0);
    }
    c.resize(deg, BigRational(0));
}

// Polynomial helpers over Q for the inverse.
using QPoly = std::vector<BigRational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, BigRational(0));
    BigRational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        BigRational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    r = a;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

}  // namespace

Cyclotomic::Cyclotomic() : order_(1), c_{BigRational(0)} {}

Cyclotomic::Cyclotomic(const BigRational& q) : order_(1), c_{q} {}

Cyclotomic Cyclotomic::zero(int m) { return Cyclotomic(m, std::vector<BigRational>(euler_phi(m), BigRational(0))); }

Cyclotomic Cyclotomic::one(int m) { return rational(m, BigRational(1)); }

Cyclotomic Cyclotomic::rational(int m, const BigRational& q) {
    Cyclotomic z = zero(m);
    z.c_[0] = q;
    return z;
}

Cyclotomic Cyclotomic::zeta(int m, long long k) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
    long long e = ((k % m) + m) % m;
    std::vector<BigRational> c(static_cast<std::size_t>(e) + 1, BigRational(0));
    c[static_cast<std::size_t>(e)] = BigRational(1);
    return from_coefficients(m, std::move(c));
}

Cyclotomic Cyclotomic::from_coefficients(int m, std::vector<BigRational> coeffs) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
    // fold x^m = 1 first so high powers reduce cheaply
    std::vector<BigRational> folded(static_cast<std::size_t>(m), BigRational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % static_cast<std::size_t>(m)] += coeffs[k];
    reduce_mod(folded, m);
    return Cyclotomic(m, std::move(folded));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0].is_one(); }

Cyclotomic Cyclotomic::lift(int m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw ValidationError("cyclotomic lift target must be a multiple of the order");
    std::size_t step = static_cast<std::size_t>(m / order_);
    std::vector<BigRational> c(c_.size() * step, BigRational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[k * step] = c_[k];
    return from_coefficients(m, std::move(c));
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.order_ == b.order_) return;
    int m = lcm_int(a.order_, b.order_);
    a = a.lift(m);
    b = b.lift(m);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.order_ != order_) {
        Cyclotomic b = o;
        align(*this, b);
        return *this += b;
    }
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::scale(const BigRational& q) {
    for (auto& x : c_)
        if (!x.is_zero()) x *= q;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.order_ != order_) {
        Cyclotomic b = o;
        align(*this, b);
        return *this *= b;
    }
    if (order_ <= 2) {  // Q(zeta_1) = Q(zeta_2) = Q
        c_[0] *= o.c_[0];
        return *this;
    }
    if (o.is_rational()) return scale(o.c_[0]);
    if (is_rational()) {
        BigRational q = c_[0];
        *this = o;
        return scale(q);
    }
    std::vector<BigRational> prod(c_.size() + o.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    reduce_mod(prod, order_);
    c_ = std::move(prod);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw MathError("inverse of zero cyclotomic number");
    if (is_rational()) return rational(order_, BigRational(1) / c_[0]);
    // extended Euclid: s*a + t*Phi = 1
    const auto& phi_i = cyclotomic_polynomial(order_);
    QPoly phi;
    for (long long v : phi_i) phi.emplace_back(v);
    QPoly a = c_;
    trim(a);
    QPoly r0 = phi, r1 = a, s0{}, s1{BigRational(1)};
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_m is irreducible
    BigRational g = r0[0];
    for (auto& x : s0) x /= g;
    return from_coefficients(order_, s0);
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<BigRational> c(static_cast<std::size_t>(order_) + 1, BigRational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        std::size_t e = k == 0 ? 0 : static_cast<std::size_t>(order_) - k;
        c[e] += c_[k];
    }
    return from_coefficients(order_, std::move(c));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    return x.c_ == y.c_;
}

void Cyclotomic::evaluate(double& re, double& im) const {
    re = 0;
    im = 0;
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        double v = c_[k].to_double();
        re += v * std::cos(two_pi * static_cast<double>(k) / order_);
        im += v * std::sin(two_pi * static_cast<double>(k) / order_);
    }
}

bool Cyclotomic::needs_parens() const {
    int nz = 0;
    for (const auto& x : c_)
        if (!x.is_zero()) ++nz;
    return nz > 1;
}

std::string Cyclotomic::to_string() const {
    std::string gen = "z" + std::to_string(order_);
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const BigRational& x = c_[k];
        if (x.is_zero()) continue;
        bool neg = x.sign() < 0;
        BigRational mag = neg ? -x : x;
        std::string body;
        if (k == 0) {
            body = mag.to_string();
        } else {
            std::string pw = k == 1 ? gen : gen + "^" + std::to_string(k);
            body = mag.is_one() ? pw : mag.to_string() + "*" + pw;
        }
        if (first)
            out += neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
        first = false;
    }
    if (first) return "0";
    return needs_parens() ? "(" + out + ")" : out;
}

}  // namespace lsym
