#ifndef GGB_SCALAR_HPP
#define GGB_SCALAR_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ggb/errors.hpp"
#include "ggb/rng.hpp"

namespace ggb {

enum class FieldKind { rationals, prime_field };

// The coefficient field: exact rationals, or integers mod a prime p.
// Values from distinct domains never mix.
class CoeffDomain {
public:
    static CoeffDomain rationals() { return CoeffDomain(FieldKind::rationals, 0); }
    // Validates primality (deterministic Miller-Rabin) and p >= 3.
    static CoeffDomain prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_rationals() const { return kind_ == FieldKind::rationals; }

    bool operator==(const CoeffDomain& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const CoeffDomain& o) const { return !(*this == o); }

    std::string to_string() const; // "rational" or "prime:<p>"
    static CoeffDomain parse(std::string_view text);

private:
    CoeffDomain(FieldKind k, std::uint64_t m) : kind_(k), modulus_(m) {}
    FieldKind kind_;
    std::uint64_t modulus_;
};

// An exact field element. Rational values are kept in lowest terms with a
// positive denominator; prime-field values are canonical residues in [0, p).
class Scalar {
public:
    Scalar() : dom_(CoeffDomain::rationals()) {}

    static Scalar zero(const CoeffDomain& d);
    static Scalar one(const CoeffDomain& d);
    // Integer image in the domain (residue reduction for prime fields).
    static Scalar from_int(const CoeffDomain& d, long long v);
    static Scalar from_rational(const mpq_class& q);
    static Scalar from_residue(const CoeffDomain& d, std::uint64_t v);

    const CoeffDomain& domain() const { return dom_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // DivisionByZero on o == 0
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Value order within one domain (container use).
    bool operator<(const Scalar& o) const;

    // Rational accessor (rationals domain only).
    const mpq_class& rational() const { return rat_; }
    // Residue accessor (prime-field domain only).
    std::uint64_t residue() const { return res_; }

    std::string to_string() const; // "a/b" | "a" | residue
    static Scalar parse(std::string_view text, const CoeffDomain& d);

private:
    explicit Scalar(const CoeffDomain& d) : dom_(d) {}
    void check_same_domain(const Scalar& o) const;
    void assert_canonical() const;

    CoeffDomain dom_;
    mpq_class rat_;
    std::uint64_t res_ = 0;
};

// A nonzero scalar outside `exclude`, uniform over the sampling window of
// the domain (all nonzero residues; integers in [-10^6, 10^6] for
// rationals). Deterministic given the stream state. ExhaustedDomain when
// no admissible value exists.
Scalar sample_scalar(const CoeffDomain& d, Rng& rng,
                     const std::set<Scalar>& exclude);

Scalar sample_scalar(const CoeffDomain& d, Rng& rng);

// Window for "generic" rational integer sampling.
inline constexpr std::int64_t kRationalSampleBound = 1000000;

} // namespace ggb

#endif
