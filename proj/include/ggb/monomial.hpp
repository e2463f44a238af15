#ifndef GGB_MONOMIAL_HPP
#define GGB_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "ggb/errors.hpp"

namespace ggb {

// Exponent vector with cached total degree. Variable i prints as x,y in
// two variables and as x1..xk otherwise, with x1 > x2 > ... > xk.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars);
    static Monomial var(int nvars, int index, int power = 1);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;     // this | o
    Monomial operator/(const Monomial& o) const; // NotDivisible unless o | this

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string() const; // "1" for the unit monomial

private:
    std::vector<int> exps_;
    int degree_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic comparison: higher total degree wins;
// on equal degree the right-most nonzero entry of a-b decides, negative
// meaning a is the greater monomial.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b);

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    return grevlex_cmp(a, b) == std::strong_ordering::less;
}
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    return grevlex_cmp(a, b) == std::strong_ordering::greater;
}

// Comparator for ordered containers keyed by monomials.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(a, b);
    }
};

// All monomials of the given total degree, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(int degree, int nvars);

// Print name of variable `index` in an nvars-variable ring.
std::string variable_name(int nvars, int index);

} // namespace ggb

#endif
