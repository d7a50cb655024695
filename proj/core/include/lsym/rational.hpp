#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lsym {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// Exact rational in lowest terms with positive denominator.
// Values that fit in int64 stay inline; anything larger spills to GMP.
class BigRational {
public:
    BigRational() = default;
    BigRational(long long v) : num_(v) {}  // NOLINT: implicit by design
    BigRational(long long num, long long den);
    explicit BigRational(const mpq_class& q);

    static BigRational parse(std::string_view text);  // "p", "-p/q"

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;
    double to_double() const;
    std::string to_string() const;
    std::size_t hash() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b);
    friend bool operator<(const BigRational& a, const BigRational& b);
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

private:
    void assign(const mpq_class& q);
    void assign128(Int128 n, Int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace lsym
