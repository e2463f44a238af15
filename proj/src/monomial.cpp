#include "ggb/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace ggb {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw ArityMismatch("monomial needs at least one variable");
    for (int e : exps_)
        if (e < 0) throw Error("negative exponent in monomial");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::var(int nvars, int index, int power) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = power;
    return Monomial(std::move(e));
}

namespace {
void check_arity(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw ArityMismatch("monomials over different variable counts: " +
                            std::to_string(a.nvars()) + " vs " +
                            std::to_string(b.nvars()));
}
} // namespace

Monomial Monomial::operator*(const Monomial& o) const {
    check_arity(*this, o);
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    check_arity(*this, o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    check_arity(*this, o);
    if (!o.divides(*this))
        throw NotDivisible(o.to_string() + " does not divide " + to_string());
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    std::vector<int> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    if (a.degree() != b.degree())
        return a.degree() <=> b.degree();
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i])
            return ea[i] < eb[i] ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::string variable_name(int nvars, int index) {
    if (nvars == 2) return index == 0 ? "x" : "y";
    return "x" + std::to_string(index + 1);
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        int e = exps_[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(nvars(), i);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {
void enumerate_degree(int degree, int pos, std::vector<int>& cur,
                      std::vector<Monomial>& out) {
    if (pos == static_cast<int>(cur.size()) - 1) {
        cur[static_cast<std::size_t>(pos)] = degree;
        out.emplace_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        enumerate_degree(degree - e, pos + 1, cur, out);
    }
}
} // namespace

std::vector<Monomial> monomials_of_degree(int degree, int nvars) {
    if (nvars < 1) throw ArityMismatch("need at least one variable");
    if (degree < 0) throw Error("negative degree");
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    enumerate_degree(degree, 0, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
    return out;
}

} // namespace ggb
