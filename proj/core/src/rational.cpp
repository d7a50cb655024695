#include "lsym/rational.hpp"

#include <limits>
#include <stdexcept>

#include "lsym/errors.hpp"

namespace lsym {
namespace {

using i128 = Int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    UInt128 u = neg ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
    std::uint64_t words[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (neg) z = -z;
    return z;
}

}  // namespace

BigRational::BigRational(long long num, long long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    assign128(num, den);
}

BigRational::BigRational(const mpq_class& q) { assign(q); }

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& x) {
        while (!x.empty() && (x.front() == ' ' || x.front() == '\t')) x.erase(x.begin());
        while (!x.empty() && (x.back() == ' ' || x.back() == '\t')) x.pop_back();
    };
    trim(s);
    if (s.empty()) throw ValidationError("empty rational literal");
    auto valid_int = [](std::string_view d) {
        std::size_t i = (!d.empty() && (d[0] == '-' || d[0] == '+')) ? 1 : 0;
        if (i >= d.size()) return false;
        for (; i < d.size(); ++i)
            if (d[i] < '0' || d[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    trim(n);
    trim(d);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
        throw ValidationError("malformed rational literal '" + s + "'");
    if (n[0] == '+') n.erase(n.begin());
    mpz_class zn(n), zd(d);
    if (zd == 0) throw ValidationError("rational with zero denominator");
    mpq_class q(zn, zd);
    q.canonicalize();
    return BigRational(q);
}

void BigRational::assign(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_shared<const mpq_class>(q);
        num_ = 0;
        den_ = 1;
    }
}

void BigRational::assign128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    assign(q);
}

bool BigRational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int BigRational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class BigRational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

double BigRational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string BigRational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t BigRational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

BigRational BigRational::operator-() const {
    if (big_) return BigRational(mpq_class(-*big_));
    BigRational r;
    r.assign128(-static_cast<i128>(num_), den_);
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            assign128(static_cast<i128>(num_) + o.num_, 1);
            return *this;
        }
        i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
        i128 d = static_cast<i128>(den_) * o.den_;
        assign128(n, d);
        return *this;
    }
    assign(to_mpq() + o.to_mpq());
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) { return *this += -o; }

BigRational& BigRational::operator*=(const BigRational& o) {
    if (!big_ && !o.big_) {
        assign128(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
        return *this;
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw MathError("division by zero rational");
    if (!big_ && !o.big_) {
        assign128(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
        return *this;
    }
    assign(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const BigRational& a, const BigRational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical storage: a value fits inline or it does not
}

bool operator<(const BigRational& a, const BigRational& b) {
    if (!a.big_ && !b.big_)
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

}  // namespace lsym
