#include "ggb/scalar.hpp"

#include <cassert>
#include <charconv>

namespace ggb {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(u128(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on (a, p), p prime, a != 0.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

CoeffDomain CoeffDomain::prime_field(std::uint64_t p) {
    if (p < 3) throw Error("prime-field modulus must be >= 3, got " + std::to_string(p));
    if (p >= (1ULL << 62))
        throw Error("prime-field modulus must be below 2^62");
    if (!is_prime_u64(p))
        throw Error("prime-field modulus must be prime, got " + std::to_string(p));
    return CoeffDomain(FieldKind::prime_field, p);
}

std::string CoeffDomain::to_string() const {
    return is_rationals() ? "rational" : "prime:" + std::to_string(modulus_);
}

CoeffDomain CoeffDomain::parse(std::string_view text) {
    if (text == "rational") return rationals();
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::uint64_t p = 0;
        auto body = text.substr(prefix.size());
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size())
            return prime_field(p);
    }
    throw ParseError("unrecognized field '" + std::string(text) +
                         "' (expected rational or prime:<p>)",
                     0);
}

Scalar Scalar::zero(const CoeffDomain& d) {
    Scalar s(d);
    return s;
}

Scalar Scalar::one(const CoeffDomain& d) {
    Scalar s(d);
    if (d.is_rationals())
        s.rat_ = 1;
    else
        s.res_ = 1;
    return s;
}

Scalar Scalar::from_int(const CoeffDomain& d, long long v) {
    Scalar s(d);
    if (d.is_rationals()) {
        s.rat_ = mpq_class(static_cast<long>(v));
    } else {
        const std::uint64_t p = d.modulus();
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
    Scalar s(CoeffDomain::rationals());
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::from_residue(const CoeffDomain& d, std::uint64_t v) {
    if (d.is_rationals())
        throw DomainMismatch("from_residue requires a prime-field domain");
    Scalar s(d);
    s.res_ = v % d.modulus();
    return s;
}

bool Scalar::is_zero() const {
    return dom_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return dom_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_domain(const Scalar& o) const {
    if (dom_ != o.dom_)
        throw DomainMismatch("scalar domains differ: " + dom_.to_string() +
                             " vs " + o.dom_.to_string());
}

void Scalar::assert_canonical() const {
#ifndef NDEBUG
    if (dom_.is_rationals()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), rat_.get_num().get_mpz_t(), rat_.get_den().get_mpz_t());
        assert(rat_.get_den() > 0);
        assert(g == 1 || (rat_.get_num() == 0 && rat_.get_den() == 1));
    } else {
        assert(res_ < dom_.modulus());
    }
#endif
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_domain(o);
    Scalar s(dom_);
    if (dom_.is_rationals()) {
        s.rat_ = rat_ + o.rat_;
    } else {
        const std::uint64_t p = dom_.modulus();
        s.res_ = res_ + o.res_;
        if (s.res_ >= p) s.res_ -= p;
    }
    s.assert_canonical();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_domain(o);
    Scalar s(dom_);
    if (dom_.is_rationals()) {
        s.rat_ = rat_ - o.rat_;
    } else {
        const std::uint64_t p = dom_.modulus();
        s.res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + p - o.res_;
    }
    s.assert_canonical();
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_domain(o);
    Scalar s(dom_);
    if (dom_.is_rationals())
        s.rat_ = rat_ * o.rat_;
    else
        s.res_ = mulmod(res_, o.res_, dom_.modulus());
    s.assert_canonical();
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_domain(o);
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    Scalar s(dom_);
    if (dom_.is_rationals())
        s.rat_ = rat_ / o.rat_;
    else
        s.res_ = mulmod(res_, invmod(o.res_, dom_.modulus()), dom_.modulus());
    s.assert_canonical();
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(dom_);
    if (dom_.is_rationals())
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : dom_.modulus() - res_;
    return s;
}

Scalar Scalar::inverse() const {
    return one(dom_) / *this;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_domain(o);
    return dom_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_domain(o);
    return dom_.is_rationals() ? rat_ < o.rat_ : res_ < o.res_;
}

std::string Scalar::to_string() const {
    if (!dom_.is_rationals()) return std::to_string(res_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

Scalar Scalar::parse(std::string_view text, const CoeffDomain& d) {
    if (text.empty()) throw ParseError("empty scalar", 0);
    std::string buf(text);
    if (buf[0] == '+') buf.erase(0, 1); // GMP rejects a leading '+'
    if (buf.empty()) throw ParseError("empty scalar", 0);
    if (d.is_rationals()) {
        // mpq_class(string) accepts "a" and "a/b"; validate by hand first
        // so malformed input raises ParseError, not a GMP abort.
        std::size_t i = 0;
        auto digits = [&](std::size_t from) {
            std::size_t j = from;
            while (j < buf.size() && std::isdigit(static_cast<unsigned char>(buf[j]))) ++j;
            return j;
        };
        if (buf[i] == '-' || buf[i] == '+') ++i;
        std::size_t end_num = digits(i);
        if (end_num == i) throw ParseError("expected integer in scalar", i);
        if (end_num != buf.size()) {
            if (buf[end_num] != '/') throw ParseError("bad scalar syntax", end_num);
            std::size_t den_start = end_num + 1;
            std::size_t end_den = digits(den_start);
            if (end_den == den_start || end_den != buf.size())
                throw ParseError("expected denominator digits", den_start);
            if (mpz_class(buf.substr(den_start)) == 0)
                throw ParseError("zero denominator", den_start);
        }
        return from_rational(mpq_class(buf));
    }
    std::uint64_t v = 0;
    bool neg = false;
    std::size_t i = 0;
    if (buf[i] == '-') {
        neg = true;
        ++i;
    }
    if (i == buf.size()) throw ParseError("expected residue digits", i);
    for (; i < buf.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(buf[i])))
            throw ParseError("expected residue digits", i);
        // 128-bit step keeps the reduced accumulator from overflowing
        // even for moduli near the 2^62 cap
        v = static_cast<std::uint64_t>(
            (u128(v) * 10 + static_cast<std::uint64_t>(buf[i] - '0')) % d.modulus());
    }
    Scalar s = from_residue(d, v);
    return neg ? -s : s;
}

Scalar sample_scalar(const CoeffDomain& d, Rng& rng,
                     const std::set<Scalar>& exclude) {
    if (d.is_rationals()) {
        if (exclude.size() + 1 >= 2 * static_cast<std::size_t>(kRationalSampleBound))
            throw ExhaustedDomain("rational sampling window exhausted");
        for (;;) {
            std::int64_t v = rng.range(-kRationalSampleBound, kRationalSampleBound);
            if (v == 0) continue;
            Scalar s = Scalar::from_int(d, v);
            if (!exclude.count(s)) return s;
        }
    }
    const std::uint64_t p = d.modulus();
    std::size_t excluded_nonzero = 0;
    for (const Scalar& s : exclude)
        if (!s.is_zero()) ++excluded_nonzero;
    if (excluded_nonzero + 1 >= p)
        throw ExhaustedDomain("prime field has no admissible nonzero value left");
    for (;;) {
        Scalar s = Scalar::from_residue(d, 1 + rng.below(p - 1));
        if (!exclude.count(s)) return s;
    }
}

Scalar sample_scalar(const CoeffDomain& d, Rng& rng) {
    static const std::set<Scalar> empty;
    return sample_scalar(d, rng, empty);
}

} // namespace ggb
