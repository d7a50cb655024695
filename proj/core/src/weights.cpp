#include "lsym/weights.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "lsym/errors.hpp"

namespace lsym {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j] < v[j + 1]) return false;
    return true;
}

BigRational half(int doubled) { return BigRational(doubled, 2); }

}  // namespace

int HighestWeight::rank() const {
    if (places.empty()) throw ValidationError("highest weight needs at least one archimedean place");
    std::size_t n = places.front().mu.size();
    for (const auto& p : places)
        if (p.mu.size() != n || p.mu_bar.size() != n) throw ValidationError("highest weight components have different ranks");
    return static_cast<int>(n);
}

void HighestWeight::validate() const {
    if (rank() < 1) throw ValidationError("highest weight rank must be positive");
    for (std::size_t v = 0; v < places.size(); ++v) {
        if (!weakly_decreasing(places[v].mu) || !weakly_decreasing(places[v].mu_bar))
            throw ValidationError("highest weight at place " + std::to_string(v + 1) + " is not weakly decreasing");
    }
}

std::vector<int> dual_weight(const std::vector<int>& mu) {
    std::vector<int> out(mu.rbegin(), mu.rend());
    for (int& x : out) x = -x;
    return out;
}

HighestWeight HighestWeight::conjugate_self_dual(const std::vector<std::vector<int>>& mu) {
    HighestWeight w;
    for (const auto& m : mu) w.places.push_back({m, dual_weight(m)});
    return w;
}

int InfinityType::rank() const { return doubled.empty() ? 0 : static_cast<int>(doubled.front().size()); }

bool InfinityType::regular() const {
    for (const auto& a : doubled) {
        std::set<int> s(a.begin(), a.end());
        if (s.size() != a.size()) return false;
    }
    return true;
}

bool InfinityType::conjugate_self_dual() const {
    for (const auto& a : doubled) {
        std::multiset<int> s(a.begin(), a.end()), neg;
        for (int x : a) neg.insert(-x);
        if (s != neg) return false;
    }
    return true;
}

std::string InfinityType::to_string() const {
    std::string out = "[";
    for (std::size_t v = 0; v < doubled.size(); ++v) {
        out += v ? ",[" : "[";
        for (std::size_t i = 0; i < doubled[v].size(); ++i) out += (i ? "," : "") + half(doubled[v][i]).to_string();
        out += "]";
    }
    return out + "]";
}

InfinityType infinity_type(const HighestWeight& mu, const BigRational& r) {
    mu.validate();
    const int n = mu.rank();
    InfinityType t;
    t.shift = r;
    for (const auto& p : mu.places) {
        std::vector<int> a;
        for (int i = 1; i <= n; ++i) {
            // a = l(mu, i) + r with l(mu, i) = -mu_{n-i+1} - r + (n+1)/2 - i
            BigRational ell = BigRational(-p.mu[static_cast<std::size_t>(n - i)]) - r + BigRational(n + 1, 2) - BigRational(i);
            BigRational val = ell + r;
            BigRational twice = val * BigRational(2);
            if (!twice.is_integer()) throw ValidationError("infinity-type exponent is not a half-integer");
            a.push_back(static_cast<int>(std::stoll(twice.to_string())));
        }
        std::sort(a.begin(), a.end(), std::greater<>());
        t.doubled.push_back(std::move(a));
    }
    return t;
}

int IsobaricShape::total() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

void IsobaricShape::validate() const {
    if (parts.empty()) throw ValidationError("isobaric shape needs at least one block");
    for (int p : parts)
        if (p <= 0) throw ValidationError("isobaric block sizes must be positive");
}

std::vector<int> rho_exponents(const IsobaricShape& shape) {
    shape.validate();
    const std::size_t k = shape.parts.size();
    std::vector<int> a(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        int after = 0, before = 0;
        for (std::size_t j = i + 1; j < k; ++j) after += shape.parts[j];
        for (std::size_t j = 0; j < i; ++j) before += shape.parts[j];
        a[i] = after - before;
    }
    return a;
}

AlgTwist alg_twist(const IsobaricShape& shape, int i) {
    shape.validate();
    if (i < 1 || i > static_cast<int>(shape.parts.size())) throw ValidationError("block index out of range");
    int n = shape.total();
    int ni = shape.parts[static_cast<std::size_t>(i - 1)];
    if ((n - ni) % 2 == 0) return {Twist::None, 0};
    return {Twist::Eta, -1};
}

bool no_middle_class(const InfinityType& a, const InfinityType& b, const BigRational& r, const BigRational& s) {
    if (a.doubled.size() != b.doubled.size()) throw ValidationError("infinity-types over different numbers of places");
    if (b.rank() != a.rank() - 1) throw ValidationError("no-middle-class check needs ranks n and n-1");
    BigRational target = (r + s) * BigRational(2);
    for (std::size_t v = 0; v < a.doubled.size(); ++v)
        for (int x : a.doubled[v])
            for (int y : b.doubled[v])
                if (BigRational(x + y) == target) return false;
    return true;
}

bool CriticalSet::contains(const BigRational& x) const {
    if (!has_points) return false;
    if (!(lo_exclusive < x && x <= hi_inclusive)) return false;
    if (kind == Kind::RankinSelberg) return (x - BigRational(1, 2)).is_integer();
    if (!x.is_integer()) return false;
    bool pos = x.sign() > 0;
    bool odd = !(x * BigRational(1, 2)).is_integer();
    if (*parity == AsaiSign::Same) return pos ? odd : !odd;
    return pos ? !odd : (odd && x.sign() < 0);
}

std::vector<BigRational> CriticalSet::enumerate() const {
    std::vector<BigRational> out;
    if (!has_points) return out;
    // candidates lie on Z or 1/2 + Z; walk from the smallest lattice point above lo
    BigRational offset = kind == Kind::RankinSelberg ? BigRational(1, 2) : BigRational(0);
    mpz_class fl;
    mpq_class q = (lo_exclusive - offset).to_mpq();
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    BigRational x = BigRational(mpq_class(fl)) + offset;
    while (x <= lo_exclusive) x += BigRational(1);
    for (; x <= hi_inclusive; x += BigRational(1))
        if (contains(x)) out.push_back(x);
    return out;
}

std::string CriticalSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& x : enumerate()) {
        out += (first ? "" : ", ") + x.to_string();
        first = false;
    }
    return out + "}";
}

CriticalSet crit_rankin_selberg(const InfinityType& a, const InfinityType& b, const BigRational& r,
                                const BigRational& s) {
    CriticalSet cs;
    cs.kind = CriticalSet::Kind::RankinSelberg;
    if (!no_middle_class(a, b, r, s)) {
        cs.has_points = false;
        return cs;
    }
    std::optional<BigRational> big_m;
    for (std::size_t v = 0; v < a.doubled.size(); ++v)
        for (int x : a.doubled[v])
            for (int y : b.doubled[v]) {
                BigRational d = half(x + y) - r - s;
                if (d.sign() < 0) d = -d;
                if (!big_m || d < *big_m) big_m = d;
            }
    if (!big_m) throw ValidationError("Rankin-Selberg window needs nonempty infinity-types");
    // -M < 1/2 + m + r + s <= M, as a window on x = 1/2 + m
    cs.lo_exclusive = -*big_m - r - s;
    cs.hi_inclusive = *big_m - r - s;
    return cs;
}

CriticalSet crit_asai(const InfinityType& a, AsaiSign sign) {
    if (a.rank() < 2) throw ValidationError("Asai window needs rank at least 2");
    if (!a.regular()) throw ValidationError("Asai critical set needs a regular infinity-type");
    if (!a.conjugate_self_dual()) throw ValidationError("Asai critical set needs a conjugate self-dual infinity-type");
    int max_neg = std::numeric_limits<int>::min();
    int min_pos = std::numeric_limits<int>::max();
    for (const auto& v : a.doubled)
        for (int x : v)
            for (int y : v) {
                if (x == y) continue;
                int diff2 = x - y;  // doubled difference, always even here
                if (diff2 < 0) max_neg = std::max(max_neg, diff2);
                if (diff2 > 0) min_pos = std::min(min_pos, diff2);
            }
    CriticalSet cs;
    cs.kind = CriticalSet::Kind::Asai;
    cs.lo_exclusive = half(max_neg);
    cs.hi_inclusive = half(min_pos);
    cs.parity = sign;
    return cs;
}

bool piano_check(const HighestWeight& mu, const HighestWeight& mu_prime) {
    mu.validate();
    mu_prime.validate();
    const int n = mu.rank();
    if (mu_prime.rank() != n - 1) throw ValidationError("piano check needs ranks n and n-1");
    if (mu.degree() != mu_prime.degree()) throw ValidationError("piano check needs the same archimedean places");
    auto chain = [n](const std::vector<int>& w, const std::vector<int>& wp) {
        // w_1 >= -wp_{n-1} >= w_2 >= -wp_{n-2} >= ... >= -wp_1 >= w_n
        std::vector<int> seq;
        for (int j = 1; j <= n; ++j) {
            seq.push_back(w[static_cast<std::size_t>(j - 1)]);
            if (j < n) seq.push_back(-wp[static_cast<std::size_t>(n - 1 - j)]);
        }
        return weakly_decreasing(seq);
    };
    for (int v = 0; v < mu.degree(); ++v) {
        const auto& p = mu.places[static_cast<std::size_t>(v)];
        const auto& q = mu_prime.places[static_cast<std::size_t>(v)];
        if (!chain(p.mu, q.mu)) return false;
        if (!chain(dual_weight(p.mu_bar), dual_weight(q.mu_bar))) return false;
    }
    return true;
}

bool sufficiently_regular(const HighestWeight& mu) {
    mu.validate();
    for (const auto& p : mu.places)
        for (std::size_t j = 0; j + 1 < p.mu.size(); ++j)
            if (p.mu[j] - p.mu[j + 1] < 2) return false;
    return true;
}

long long bottom_degree(int n, int d) {
    if (n < 1 || d < 1) throw ValidationError("bottom degree needs n >= 1 and d >= 1");
    return static_cast<long long>(d) * n * (n - 1) / 2;
}

}  // namespace lsym
