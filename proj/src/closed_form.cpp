#include "ggb/closed_form.hpp"

#include "ggb/generic.hpp"

namespace ggb {

ClosedFormSpec::ClosedFormSpec(int n_, int m_) : n(n_), m(m_) {
    if (n < 1 || m < n)
        throw Error("closed form needs 1 <= n <= m, got n = " + std::to_string(n) +
                    ", m = " + std::to_string(m));
}

int closed_form_row_length(const ClosedFormSpec& spec, int t) {
    if (t < 1 || t > spec.basis_size())
        throw IndexOutOfRange("basis index " + std::to_string(t) + " outside 1.." +
                              std::to_string(spec.basis_size()));
    return t == 1 ? spec.n + 1 : spec.n - t + 2;
}

Monomial closed_form_monomial(const ClosedFormSpec& spec, int t, int i) {
    if (i < 1 || i > closed_form_row_length(spec, t))
        throw IndexOutOfRange("support index " + std::to_string(i) +
                              " outside row " + std::to_string(t));
    if (t == 1) return Monomial({spec.n - (i - 1), i - 1});
    const int x0 = spec.n - t + 1;
    const int y0 = spec.mu() + 2 * t - 3;
    return Monomial({x0 - (i - 1), y0 + (i - 1)});
}

const Scalar& ClosedFormBasis::coefficient(int t, int i) const {
    if (t < 1 || t > static_cast<int>(rows_.size()))
        throw IndexOutOfRange("row " + std::to_string(t));
    const auto& row = rows_[static_cast<std::size_t>(t - 1)];
    if (i < 1 || i > static_cast<int>(row.size()))
        throw IndexOutOfRange("entry " + std::to_string(i) + " of row " +
                              std::to_string(t));
    return row[static_cast<std::size_t>(i - 1)];
}

Scalar ClosedFormBasis::monic_coefficient(int t, int i) const {
    return coefficient(t, i) / coefficient(t, 1);
}

Polynomial ClosedFormBasis::monic(int t) const {
    if (t < 1 || t > static_cast<int>(polys_.size()))
        throw IndexOutOfRange("basis index " + std::to_string(t));
    return polys_[static_cast<std::size_t>(t - 1)].monic();
}

std::vector<Polynomial> ClosedFormBasis::monic_polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(polys_.size());
    for (const Polynomial& f : polys_) out.push_back(f.monic());
    return out;
}

namespace {

// Checks that f has exactly the t-th schedule row as support.
void check_support(const Polynomial& f, const ClosedFormSpec& spec, int t) {
    const int len = closed_form_row_length(spec, t);
    if (static_cast<int>(f.term_count()) != len)
        throw Degenerate("basis element " + std::to_string(t) + " has " +
                         std::to_string(f.term_count()) + " terms, expected " +
                         std::to_string(len));
    for (int i = 1; i <= len; ++i)
        if (f.terms()[static_cast<std::size_t>(i - 1)].mono !=
            closed_form_monomial(spec, t, i))
            throw Degenerate("basis element " + std::to_string(t) +
                             " support differs from the expected shape");
}

std::vector<Scalar> row_of(const Polynomial& f) {
    std::vector<Scalar> row;
    row.reserve(f.term_count());
    for (const Term& term : f.terms()) row.push_back(term.coeff);
    return row;
}

} // namespace

ClosedFormBasis closed_form_basis(const Polynomial& f1, const Polynomial& r) {
    if (f1.nvars() != 2 || r.nvars() != 2)
        throw ArityMismatch("closed form works in two variables");
    if (f1.domain() != r.domain())
        throw DomainMismatch("f1 and r live in different coefficient domains");
    if (f1.is_zero() || r.is_zero())
        throw ZeroPolynomial("closed form of a zero polynomial");

    const ClosedFormSpec spec(f1.degree(), r.degree());
    check_support(f1, spec, 1);
    check_support(r, spec, 2);

    ClosedFormBasis basis(spec, f1.domain());
    basis.rows_.push_back(row_of(f1));
    basis.rows_.push_back(row_of(r));
    basis.polys_.push_back(f1);
    basis.polys_.push_back(r);

    const int n = spec.n;
    for (int t = 1; t <= n - 1; ++t) {
        // Monic-normalized entries of rows t and t+1; indices 1-based,
        // entries beyond the row length are zero.
        auto b = [&](int s, int i) -> Scalar {
            const auto& row = basis.rows_[static_cast<std::size_t>(s - 1)];
            if (i > static_cast<int>(row.size())) return Scalar::zero(f1.domain());
            return row[static_cast<std::size_t>(i - 1)] / row[0];
        };
        const Scalar head = b(t, 2) - b(t + 1, 2);
        std::vector<Scalar> row;
        std::vector<Term> terms;
        for (int i = 1; i <= n - t; ++i) {
            Scalar value = i <= n - t - 1
                               ? (b(t, i + 2) - b(t + 1, i + 2)) -
                                     b(t + 1, i + 1) * head
                               : b(t, n - t + 2) - b(t + 1, n - t + 1) * head;
            if (value.is_zero())
                throw Degenerate("coefficient a(" + std::to_string(t + 2) + "," +
                                 std::to_string(i) +
                                 ") vanished; input not generic");
            terms.push_back(Term{value, closed_form_monomial(spec, t + 2, i)});
            row.push_back(std::move(value));
        }
        basis.rows_.push_back(std::move(row));
        basis.polys_.emplace_back(f1.domain(), 2, std::move(terms));
    }
    return basis;
}

MonomialIdeal closed_form_initial_ideal(const ClosedFormSpec& spec) {
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(spec.basis_size()));
    gens.push_back(Monomial({spec.n, 0}));
    for (int i = 1; i <= spec.n; ++i)
        gens.push_back(Monomial({spec.n - i, spec.mu() + 2 * i - 1}));
    return MonomialIdeal(2, std::move(gens));
}

namespace {

Polynomial signed_power(const CoeffDomain& domain, int var, int power, bool negative) {
    const Scalar c = negative ? -Scalar::one(domain) : Scalar::one(domain);
    return Polynomial::from_term(domain, c, Monomial::var(2, var, power));
}

} // namespace

Syzygy syzygy_pair(int i, const ClosedFormSpec& spec, const CoeffDomain& domain) {
    if (i < 1 || i > spec.n)
        throw IndexOutOfRange("syzygy pair index " + std::to_string(i) +
                              " outside 1.." + std::to_string(spec.n));
    std::vector<Polynomial> entries(
        static_cast<std::size_t>(spec.basis_size()), Polynomial::zero(domain, 2));
    const int ypow = i == 1 ? spec.mu() + 1 : 2;
    entries[static_cast<std::size_t>(i - 1)] = signed_power(domain, 1, ypow, false);
    entries[static_cast<std::size_t>(i)] = signed_power(domain, 0, 1, true);
    return Syzygy{{i, i + 1}, std::move(entries)};
}

SyzygyExpansion expand_syzygy(int i, int t, const ClosedFormSpec& spec,
                              const CoeffDomain& domain) {
    if (t < 1 || i < 1 || i + t > spec.basis_size())
        throw IndexOutOfRange("syzygy indices (i, i+t) = (" + std::to_string(i) +
                              ", " + std::to_string(i + t) + ") outside 1.." +
                              std::to_string(spec.basis_size()));
    const std::size_t size = static_cast<std::size_t>(spec.basis_size());

    Syzygy direct{{i, i + t}, std::vector<Polynomial>(size, Polynomial::zero(domain, 2))};
    const int ypow = i == 1 ? spec.mu() + 2 * t - 1 : 2 * t;
    direct.entries[static_cast<std::size_t>(i - 1)] =
        signed_power(domain, 1, ypow, false);
    direct.entries[static_cast<std::size_t>(i + t - 1)] =
        signed_power(domain, 0, t, true);

    Syzygy expanded{{i, i + t},
                    std::vector<Polynomial>(size, Polynomial::zero(domain, 2))};
    std::vector<SyzygyExpansion::Step> steps;
    for (int j = 0; j <= t - 1; ++j) {
        const Monomial multiplier({j, 2 * (t - 1 - j)});
        const Syzygy consecutive = syzygy_pair(i + j, spec, domain);
        for (std::size_t k = 0; k < size; ++k)
            expanded.entries[k] =
                expanded.entries[k] + consecutive.entries[k].times_monomial(multiplier);
        steps.push_back(SyzygyExpansion::Step{multiplier, consecutive.label});
    }

    bool equal = true;
    for (std::size_t k = 0; k < size; ++k)
        if (direct.entries[k] != expanded.entries[k]) equal = false;
    return SyzygyExpansion{std::move(direct), std::move(expanded), std::move(steps),
                           equal};
}

bool verify_syzygy(const Syzygy& s, const ClosedFormBasis& basis) {
    const int size = basis.spec().basis_size();
    if (static_cast<int>(s.entries.size()) != size)
        throw LengthMismatch("syzygy has " + std::to_string(s.entries.size()) +
                             " entries for a basis of " + std::to_string(size));
    for (const Polynomial& e : s.entries)
        if (e.domain() != basis.domain())
            throw DomainMismatch("syzygy entries live in a different domain");

    Polynomial pairing = Polynomial::zero(basis.domain(), 2);
    int relation_degree = -1;
    for (int k = 1; k <= size; ++k) {
        const Polynomial& entry = s.entries[static_cast<std::size_t>(k - 1)];
        if (entry.is_zero()) continue;
        if (!entry.is_homogeneous()) return false;
        // LT of the monic basis element is its leading monomial.
        const Monomial lm = closed_form_leading_monomial(basis.spec(), k);
        const int d = entry.degree() + lm.degree();
        if (relation_degree < 0)
            relation_degree = d;
        else if (relation_degree != d)
            return false;
        pairing = pairing + entry.times_monomial(lm);
    }
    return pairing.is_zero();
}

CrossValidateReport cross_validate(const ClosedFormSpec& spec,
                                   const Polynomial& f1, const Polynomial& f2) {
    if (f1.is_zero() || f2.is_zero())
        throw ZeroPolynomial("cross validation of a zero polynomial");
    if (f1.degree() != spec.n || f2.degree() != spec.m)
        throw Error("generator degrees disagree with (n, m)");

    CrossValidateReport report;

    // Route one: division preprocessing + explicit construction.
    const Polynomial r = reduce_second_generator(f1, f2);
    const ClosedFormBasis explicit_basis = closed_form_basis(f1, r);
    const MonomialIdeal expected = closed_form_initial_ideal(spec);

    // Route two: Buchberger on the raw pair.
    const Ideal ideal(f1.domain(), 2, {f1, f2});
    const GroebnerBasis gb = buchberger(ideal);
    const MonomialIdeal computed = initial_ideal(gb);

    report.buchberger_initial = computed.generators();
    report.closed_form_initial = expected.generators();

    if (computed != expected) {
        report.mismatch = "initial ideals differ: buchberger " +
                          computed.to_string() + " vs closed form " +
                          expected.to_string();
        return report;
    }

    const std::vector<Polynomial>& cf = explicit_basis.polynomials();
    for (const Polynomial& f : cf) {
        if (!normal_form(f, gb.elements).is_zero()) {
            report.mismatch = "closed-form element " + f.to_string() +
                              " is not in the Buchberger ideal";
            return report;
        }
    }
    for (const Polynomial& g : gb.elements) {
        if (!normal_form(g, cf).is_zero()) {
            report.mismatch = "Buchberger element " + g.to_string() +
                              " does not reduce to zero against the closed form";
            return report;
        }
    }
    for (std::size_t a = 0; a < cf.size(); ++a) {
        for (std::size_t b = a + 1; b < cf.size(); ++b) {
            if (!normal_form(s_polynomial(cf[a], cf[b]), cf).is_zero()) {
                report.mismatch = "S-polynomial of closed-form pair (" +
                                  std::to_string(a + 1) + ", " +
                                  std::to_string(b + 1) + ") does not vanish";
                return report;
            }
        }
    }

    report.agreement = true;
    return report;
}

} // namespace ggb
