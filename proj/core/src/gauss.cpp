#include "lsym/gauss.hpp"

#include <chrono>
#include <limits>
#include <numeric>
#include <utility>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "lsym/errors.hpp"

namespace lsym {

namespace {

const Real kEps = std::numeric_limits<Real>::epsilon();

Real two_pi() { return boost::math::constants::two_pi<Real>(); }

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

std::vector<std::pair<int, int>> factor(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) out.push_back({p, k});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// One cyclic factor of (Z/N)^x: a generator modulo a prime power and its order.
struct CyclicFactor {
    int modulus;
    long long generator;
    int order;
};

int multiplicative_order(long long g, int m) {
    long long x = g % m;
    int k = 1;
    while (x != 1) {
        x = x * g % m;
        ++k;
    }
    return k;
}

std::vector<CyclicFactor> unit_group(int n) {
    std::vector<CyclicFactor> out;
    for (auto [p, k] : factor(n)) {
        int q = 1;
        for (int t = 0; t < k; ++t) q *= p;
        if (p == 2) {
            if (k == 2) out.push_back({q, 3, 2});
            if (k >= 3) {
                out.push_back({q, q - 1, 2});
                out.push_back({q, 5, q / 4});
            }
            continue;
        }
        int phi = q / p * (p - 1);
        for (long long g = 2;; ++g) {
            if (std::gcd(g, static_cast<long long>(p)) != 1) continue;
            if (multiplicative_order(g, q) == phi) {
                out.push_back({q, g, phi});
                break;
            }
        }
    }
    return out;
}

// Exponent vector of every unit residue modulo N with respect to the cyclic factors.
std::vector<std::vector<int>> discrete_logs(int n, const std::vector<CyclicFactor>& gens) {
    std::vector<std::vector<int>> logs(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        std::vector<int> v(gens.size(), 0);
        std::size_t c = 0;
        while (c < gens.size()) {
            int q = gens[c].modulus;
            std::size_t end = c;
            while (end < gens.size() && gens[end].modulus == q) ++end;
            int target = mod(a, q);
            // search over the (at most two) generators of this prime power
            bool found = false;
            if (end - c == 1) {
                long long x = 1;
                for (int e = 0; e < gens[c].order && !found; ++e, x = x * gens[c].generator % q)
                    if (x == target) {
                        v[c] = e;
                        found = true;
                    }
            } else {
                long long x = 1;
                for (int e0 = 0; e0 < gens[c].order && !found; ++e0, x = x * gens[c].generator % q) {
                    long long y = x;
                    for (int e1 = 0; e1 < gens[c + 1].order && !found; ++e1, y = y * gens[c + 1].generator % q)
                        if (y == target) {
                            v[c] = e0;
                            v[c + 1] = e1;
                            found = true;
                        }
                }
            }
            if (!found) throw MathError("discrete logarithm failed modulo " + std::to_string(q));
            c = end;
        }
        logs[static_cast<std::size_t>(a)] = std::move(v);
    }
    return logs;
}

ComplexApprox root_of_unity(int e, int order) {
    Real angle = two_pi() * Real(e) / Real(order);
    return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle), 4 * kEps};
}

ComplexApprox mul(const ComplexApprox& x, const ComplexApprox& y) {
    ComplexApprox z;
    z.re = x.re * y.re - x.im * y.im;
    z.im = x.re * y.im + x.im * y.re;
    z.error = x.error * y.abs() + y.error * x.abs() + x.error * y.error + 2 * kEps * x.abs() * y.abs();
    return z;
}

Real rising(const Real& s, int r) {
    Real out = 1;
    for (int t = 0; t < r; ++t) out *= s + t;
    return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void require_discriminant(int d) {
    if (d >= 0) throw ValidationError("discriminant must be negative, got " + std::to_string(d));
    if (d < -200) throw ValidationError("discriminant outside -200 <= D < 0: " + std::to_string(d));
    if (!is_fundamental_discriminant(d)) throw ValidationError(std::to_string(d) + " is not a fundamental discriminant");
}

}  // namespace

Real ComplexApprox::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

DirichletChar::DirichletChar(int modulus, int order, std::vector<int> exps) : n_(modulus), order_(order), exps_(std::move(exps)) {
    if (n_ < 1) throw ValidationError("modulus must be positive");
    if (order_ < 1) throw ValidationError("character order must be positive");
    if (static_cast<int>(exps_.size()) != n_) throw ValidationError("one exponent per residue expected");
    for (int a = 0; a < n_; ++a) {
        bool unit = std::gcd(a, n_) == 1;
        int e = exps_[static_cast<std::size_t>(a)];
        if (unit && (e < 0 || e >= order_)) throw ValidationError("character exponent out of range at " + std::to_string(a));
        if (!unit && e != -1) throw ValidationError("character must vanish off units");
    }
}

DirichletChar DirichletChar::principal(int modulus) {
    if (modulus < 1) throw ValidationError("modulus must be positive");
    std::vector<int> e(static_cast<std::size_t>(modulus));
    for (int a = 0; a < modulus; ++a) e[static_cast<std::size_t>(a)] = std::gcd(a, modulus) == 1 ? 0 : -1;
    return DirichletChar(modulus, 1, std::move(e));
}

DirichletChar DirichletChar::kronecker(int d) {
    if (!is_fundamental_discriminant(d)) throw ValidationError(std::to_string(d) + " is not a fundamental discriminant");
    int n = d < 0 ? -d : d;
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        int k = kronecker_symbol(d, a);
        e[static_cast<std::size_t>(a)] = k == 0 ? -1 : (k == 1 ? 0 : 1);
    }
    return DirichletChar(n, 2, std::move(e));
}

std::vector<DirichletChar> DirichletChar::all(int modulus) {
    if (modulus < 1) throw ValidationError("modulus must be positive");
    auto gens = unit_group(modulus);
    auto logs = discrete_logs(modulus, gens);
    int exponent = 1;
    for (const auto& g : gens) exponent = std::lcm(exponent, g.order);
    std::vector<int> j(gens.size(), 0);
    std::vector<DirichletChar> out;
    for (;;) {
        std::vector<int> e(static_cast<std::size_t>(modulus), -1);
        for (int a = 0; a < modulus; ++a) {
            if (std::gcd(a, modulus) != 1) continue;
            long long acc = 0;
            for (std::size_t c = 0; c < gens.size(); ++c)
                acc += static_cast<long long>(j[c]) * logs[static_cast<std::size_t>(a)][c] * (exponent / gens[c].order);
            e[static_cast<std::size_t>(a)] = static_cast<int>(acc % exponent);
        }
        out.emplace_back(modulus, exponent, std::move(e));
        std::size_t c = 0;
        while (c < gens.size() && ++j[c] == gens[c].order) j[c++] = 0;
        if (c == gens.size()) break;
    }
    return out;
}

bool DirichletChar::is_unit(long long a) const { return std::gcd(mod(a, n_), n_) == 1; }

int DirichletChar::exponent(long long a) const { return exps_[static_cast<std::size_t>(mod(a, n_))]; }

Cyclotomic DirichletChar::value(long long a) const {
    int e = exponent(a);
    if (e < 0) return Cyclotomic::zero(order_);
    return Cyclotomic::zeta(order_, e);
}

ComplexApprox DirichletChar::numeric(long long a) const {
    int e = exponent(a);
    if (e < 0) return {};
    if (e == 0) return {1, 0, 0};
    return root_of_unity(e, order_);
}

bool DirichletChar::is_principal() const {
    for (int e : exps_)
        if (e > 0) return false;
    return true;
}

int DirichletChar::conductor() const {
    for (int m = 1; m < n_; ++m) {
        if (n_ % m) continue;
        bool induced = true;
        for (int a = 1; a < n_ && induced; ++a)
            if (std::gcd(a, n_) == 1 && a % m == 1 % m && exps_[static_cast<std::size_t>(a)] != 0) induced = false;
        if (induced) return m;
    }
    return n_;
}

bool DirichletChar::is_primitive() const { return conductor() == n_; }

DirichletChar DirichletChar::conj() const {
    auto e = exps_;
    for (int& x : e)
        if (x > 0) x = order_ - x;
    return DirichletChar(n_, order_, std::move(e));
}

bool DirichletChar::multiplicative() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int ea = exps_[static_cast<std::size_t>(a)], eb = exps_[static_cast<std::size_t>(b)];
            int eab = exps_[static_cast<std::size_t>(mod(static_cast<long long>(a) * b, n_))];
            if ((ea < 0 || eb < 0) != (eab < 0)) return false;
            if (eab >= 0 && (ea + eb) % order_ != eab) return false;
        }
    return true;
}

std::string DirichletChar::label() const {
    std::string out = "chi_" + std::to_string(n_) + "[";
    bool first = true;
    for (int a = 0; a < n_; ++a) {
        if (exps_[static_cast<std::size_t>(a)] < 0) continue;
        out += (first ? "" : ",") + std::to_string(exps_[static_cast<std::size_t>(a)]);
        first = false;
    }
    return out + "]/" + std::to_string(order_);
}

bool is_fundamental_discriminant(long long d) {
    if (d == 0 || d == 1) return false;
    auto squarefree = [](long long x) {
        if (x < 0) x = -x;
        for (long long p = 2; p * p <= x; ++p)
            if (x % (p * p) == 0) return false;
        return true;
    };
    long long r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(d);
    if (r != 0) return false;
    long long m = d / 4;
    long long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
}

int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v > 0) {
        if (a % 2 == 0) return 0;
        long long a8 = ((a % 8) + 8) % 8;
        if (v % 2 == 1 && (a8 == 3 || a8 == 5)) result = -result;
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

ComplexApprox gauss_sum(const DirichletChar& chi) {
    const int n = chi.modulus();
    ComplexApprox sum;
    for (int a = 0; a < n; ++a) {
        if (!chi.is_unit(a)) continue;
        ComplexApprox term = mul(chi.numeric(a), root_of_unity(a, n));
        sum.re += term.re;
        sum.im += term.im;
        sum.error += term.error + 2 * kEps;
    }
    return sum;
}

ComplexApprox dirichlet_L(const DirichletChar& chi, const Real& s, const Real& tol) {
    if (s < 1) throw ValidationError("L-series evaluation needs s >= 1");
    if (!(tol > 0)) throw ValidationError("tolerance must be positive");
    const bool at_one = s == 1;
    if (at_one && chi.is_principal()) throw ValidationError("L(1, chi) diverges for the principal character");
    const int n = chi.modulus();
    const int terms = 8;  // Euler-Maclaurin correction terms
    int units = 0;
    for (int a = 1; a <= n; ++a)
        if (chi.is_unit(a)) ++units;

    // first omitted Euler-Maclaurin term, summed over residues, bounds the tail error
    auto em_bound = [&](int k) {
        Real b = boost::math::bernoulli_b2n<Real>(terms + 1);
        Real fact = 1;
        for (int t = 2; t <= 2 * terms + 2; ++t) fact *= t;
        Real one_term = boost::multiprecision::abs(b) / fact * rising(s, 2 * terms + 1) *
                        boost::multiprecision::pow(Real(k), -s - 2 * terms - 1);
        return 2 * one_term * units * boost::multiprecision::pow(Real(n), -s);
    };
    int blocks = 4;
    while (em_bound(blocks) > tol / 4) blocks *= 2;

    ComplexApprox out;
    Real rounding = 0;
    const long long head = static_cast<long long>(blocks) * n;
    for (long long m = 1; m <= head; ++m) {
        if (!chi.is_unit(m)) continue;
        Real w = boost::multiprecision::pow(Real(m), -s);
        ComplexApprox v = chi.numeric(m);
        out.re += v.re * w;
        out.im += v.im * w;
        rounding += (v.error + 4 * kEps) * w;
    }
    // tail: sum over k >= blocks of (k n + a)^-s = n^-s sum_k (k + a/n)^-s
    const Real scale = boost::multiprecision::pow(Real(n), -s);
    for (int a = 1; a <= n; ++a) {
        if (!chi.is_unit(a)) continue;
        Real x = Real(blocks) + Real(a) / Real(n);
        Real t = at_one ? -boost::multiprecision::log(x) : boost::multiprecision::pow(x, 1 - s) / (s - 1);
        t += boost::multiprecision::pow(x, -s) / 2;
        Real fact = 1;
        for (int j = 1; j <= terms; ++j) {
            fact *= (2 * j - 1) * (2 * j);
            t += boost::math::bernoulli_b2n<Real>(j) / fact * rising(s, 2 * j - 1) * boost::multiprecision::pow(x, -s - 2 * j + 1);
        }
        ComplexApprox v = chi.numeric(a);
        out.re += v.re * t * scale;
        out.im += v.im * t * scale;
        rounding += (v.error + 8 * kEps) * boost::multiprecision::abs(t) * scale;
    }
    out.error = em_bound(blocks) + rounding;
    return out;
}

NumericReport verify_quadratic_gauss(int d, const Real& tol) {
    auto t0 = std::chrono::steady_clock::now();
    require_discriminant(d);
    auto chi = DirichletChar::kronecker(d);
    ComplexApprox g = gauss_sum(chi);
    NumericReport r;
    r.case_id = "gauss:D=" + std::to_string(d);
    r.lhs = g.im;
    r.rhs = boost::multiprecision::sqrt(Real(-d));
    ComplexApprox diff{g.re, g.im - r.rhs, 0};
    r.abs_err = diff.abs();
    r.tol = tol;
    r.error_bound = g.error;
    r.equal = r.abs_err <= tol;
    r.elapsed_ms = ms_since(t0);
    return r;
}

NumericReport verify_gauss_norm(const DirichletChar& chi, const Real& tol) {
    auto t0 = std::chrono::steady_clock::now();
    if (!chi.is_primitive()) throw ValidationError("norm check needs a primitive character, got " + chi.label());
    ComplexApprox g = gauss_sum(chi);
    NumericReport r;
    r.case_id = "norm:" + chi.label();
    r.lhs = g.re * g.re + g.im * g.im;
    r.rhs = Real(chi.modulus());
    r.abs_err = boost::multiprecision::abs(r.lhs - r.rhs);
    r.tol = tol;
    r.error_bound = 2 * g.error * (g.abs() + g.error);
    r.equal = r.abs_err <= tol;
    r.elapsed_ms = ms_since(t0);
    return r;
}

NumericReport class_number_check(int d, int h, int w, const Real& tol) {
    auto t0 = std::chrono::steady_clock::now();
    require_discriminant(d);
    if (h < 1) throw ValidationError("class number must be positive");
    if (w != 2 && w != 4 && w != 6) throw ValidationError("unit count must be 2, 4 or 6");
    auto chi = DirichletChar::kronecker(d);
    ComplexApprox l = dirichlet_L(chi, Real(1), Real("1e-15"));
    NumericReport r;
    r.case_id = "classnumber:D=" + std::to_string(d) + ",h=" + std::to_string(h) + ",w=" + std::to_string(w);
    r.lhs = l.re;
    r.rhs = two_pi() * h / (Real(w) * boost::multiprecision::sqrt(Real(-d)));
    r.abs_err = boost::multiprecision::abs(r.lhs - r.rhs);
    r.tol = tol;
    r.error_bound = l.error;
    r.equal = r.abs_err <= tol;
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace lsym
