#include "lsym/euler.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "lsym/errors.hpp"

namespace lsym {

EulerFactorDenom::EulerFactorDenom(std::string place) : place_(std::move(place)), f_(0), c_{LaurentPoly(1LL)} {
    if (place_.empty()) throw ValidationError("place variable must be named");
}

EulerFactorDenom EulerFactorDenom::from_coefficients(std::vector<LaurentPoly> c, int residue_degree,
                                                     std::string place) {
    if (residue_degree < 1) throw ValidationError("residue degree must be positive");
    if (c.empty() || !c[0].is_one()) throw ValidationError("Euler factor denominator must have constant term 1");
    EulerFactorDenom e(std::move(place));
    e.c_ = std::move(c);
    e.f_ = residue_degree;
    e.trim();
    return e;
}

const LaurentPoly& EulerFactorDenom::coefficient(int k) const {
    static const LaurentPoly zero;
    if (k < 0 || k > degree()) return zero;
    return c_[static_cast<std::size_t>(k)];
}

void EulerFactorDenom::trim() {
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

EulerFactorDenom& EulerFactorDenom::mul_linear(const LaurentPoly& e, int f) {
    if (f < 1) throw ValidationError("residue degree must be positive");
    if (e.is_zero()) return *this;
    std::size_t uf = static_cast<std::size_t>(f);
    std::size_t old = c_.size();
    c_.resize(old + uf);
    for (std::size_t k = old + uf; k-- > uf;) {
        if (c_[k - uf].is_zero()) continue;
        c_[k] -= c_[k - uf] * e;
    }
    f_ = std::gcd(f_, f);
    trim();
    return *this;
}

EulerFactorDenom& EulerFactorDenom::operator*=(const EulerFactorDenom& o) {
    if (o.place_ != place_) throw ValidationError("Euler factors over different place variables: " + place_ + " vs " + o.place_);
    std::vector<LaurentPoly> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    f_ = std::gcd(f_, o.f_);
    trim();
    return *this;
}

bool operator==(const EulerFactorDenom& a, const EulerFactorDenom& b) {
    return a.place_ == b.place_ && a.c_ == b.c_;
}

EulerFactorDenom EulerFactorDenom::pow(int k) const {
    if (k < 0) throw ValidationError("negative power of an Euler factor denominator");
    EulerFactorDenom r(place_), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return r;
}

EulerFactorDenom EulerFactorDenom::inflate(int k) const {
    if (k < 1) throw ValidationError("inflation exponent must be positive");
    EulerFactorDenom r(place_);
    std::size_t uk = static_cast<std::size_t>(k);
    r.c_.assign((c_.size() - 1) * uk + 1, LaurentPoly());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * uk] = c_[i];
    r.f_ = f_ * k;
    return r;
}

EulerFactorDenom EulerFactorDenom::map_coefficients(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const {
    EulerFactorDenom r = *this;
    for (auto& c : r.c_) c = fn(c);
    r.trim();
    return r;
}

EulerFactorDenom EulerFactorDenom::substitute_roots() const {
    return map_coefficients([](const LaurentPoly& p) { return p.substitute_roots(); });
}

std::vector<Cyclotomic> EulerFactorDenom::specialize_all_to_one() const {
    std::vector<Cyclotomic> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.specialize_all_to_one());
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

std::string EulerFactorDenom::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const LaurentPoly& c = c_[k];
        if (c.is_zero()) continue;
        std::string xp = k == 0 ? "" : (k == 1 ? place_ : place_ + "^" + std::to_string(k));
        bool neg = false;
        std::string body;
        if (c.is_unit_term()) {
            Term t = c.single_term();
            neg = t.coeff.is_rational() && t.coeff.rational_part().sign() < 0;
            std::string s = (neg ? -c : c).to_string();
            body = xp.empty() ? s : (s == "1" ? xp : s + "*" + xp);
        } else {
            body = xp.empty() ? c.to_string() : "(" + c.to_string() + ")*" + xp;
        }
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
    }
    return out.empty() ? "0" : out;
}

std::size_t EulerFactorDenom::term_count() const {
    std::size_t n = 0;
    for (const auto& c : c_) n += c.size();
    return n;
}

std::string EulerFactorDenom::canonical(std::size_t max_len) const {
    std::string s = to_string();
    if (s.size() <= max_len) return s;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf + ";terms=" + std::to_string(term_count()) + ";deg=" + std::to_string(degree());
}

EulerFactorDenom euler_from_eigenvalues(const Multiset& eigs, int f) {
    if (f < 1) throw ValidationError("residue degree must be positive");
    EulerFactorDenom e;
    for (const auto& x : eigs) e.mul_linear(x, f);
    return EulerFactorDenom::from_coefficients(e.coefficients(), f);
}

EulerFactorDenom euler_product(const std::vector<EulerFactorDenom>& factors, const std::string& place) {
    EulerFactorDenom r(factors.empty() ? place : factors.front().place());
    for (const auto& x : factors) r *= x;
    return r;
}

Multiset tensor_eigenvalues(const Multiset& a, const Multiset& b) {
    Multiset out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

EulerFactorDenom poly_sqrt(const EulerFactorDenom& s) {
    if (!s.coefficient(0).is_one()) throw MathError("square root needs constant term 1");
    int d = s.degree();
    if (d % 2 != 0) throw MathError("odd-degree polynomial has no polynomial square root");
    int h = d / 2;
    std::vector<LaurentPoly> p(static_cast<std::size_t>(h) + 1);
    p[0] = LaurentPoly(1LL);
    const Cyclotomic half(BigRational(1, 2));
    for (int k = 1; k <= h; ++k) {
        LaurentPoly acc = s.coefficient(k);
        for (int j = 1; j < k; ++j) acc -= p[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(k - j)];
        p[static_cast<std::size_t>(k)] = acc.scale(half);
    }
    EulerFactorDenom r = EulerFactorDenom::from_coefficients(p, 1, s.place());
    if (r * r != s) throw MathError("polynomial is not a perfect square");
    return r;
}

}  // namespace lsym
