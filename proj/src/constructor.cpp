#include "kodaira/constructor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kodaira {

std::string Prescription::str() const {
    std::ostringstream o;
    bool first = true;
    for (const auto& [p, n] : entries) {
        if (!first) o << ',';
        o << p.get_str() << '=' << n;
        first = false;
    }
    return o.str();
}

Prescription parse_prescription(const std::vector<std::string>& items) {
    Prescription pres;
    for (const auto& it : items) {
        auto eq = it.find('=');
        if (eq == std::string::npos) throw ArgumentError("expected p=n, got '" + it + "'");
        Int p;
        if (p.set_str(it.substr(0, eq), 10) != 0) throw ArgumentError("bad prime in '" + it + "'");
        long n;
        try {
            size_t used = 0;
            n = std::stol(it.substr(eq + 1), &used);
            if (used != it.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ArgumentError("bad exponent in '" + it + "'");
        }
        if (pres.entries.count(p)) throw ArgumentError("prime " + p.get_str() + " given twice");
        pres.set(p, static_cast<int>(n));
    }
    return pres;
}

void validate(const Prescription& pres) {
    for (const auto& [p, n] : pres.entries) {
        if (p < 2 || !is_prime(p)) throw ParameterError("construct.prime", p.get_str() + " is not prime");
        if (n < 0) throw ParameterError("construct.n-negative", "n must be nonnegative");
        if (p == 2 && n >= 1 && n <= 3) throw ParameterError("construct.n2", "n_2 must not be 1, 2 or 3");
    }
}

Exponents exponents_for(const Int& p, int n) {
    if (p == 2) {
        if (n == 0) return {0, 1, 1};
        if (n % 2 == 0) return {1, n / 2, 0};
        return {1, (n - 1) / 2, 1};
    }
    if (n == 0) return {2, 1, 0};
    if (n % 2 == 0) return {1, (n + 2) / 2, 0};
    return {1, (n + 1) / 2, 1};
}

FamilySpec construct(const Prescription& pres) {
    validate(pres);
    if (pres.entries.empty()) throw ParameterError("construct.empty", "empty prescription gives a singular curve");
    Int A = 1, B = 1, D = 1;
    for (const auto& [p, n] : pres.entries) {
        Exponents e = exponents_for(p, n);
        A *= ipow(p, e.l);
        B *= ipow(p, e.r);
        D *= ipow(p, e.s);
    }
    return {TorsionTag::C2, A, B, D};
}

bool VerifyReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return extra_additive.empty();
}

VerifyReport verify_prescription(const Prescription& pres, const FactorOptions& opt) {
    VerifyReport rep{pres, construct(pres), {}, {}};
    WeierstrassModel e = build_curve(rep.spec, {.allow_d1 = true});

    std::set<Int> checked;
    auto at = [&](const Int& p, std::optional<int> n) {
        PrimeCheck c{p, n, tate_local_data(e, p), true};
        if (n) c.ok = c.data.type == KodairaType::Instar(*n);
        rep.checks.push_back(std::move(c));
        checked.insert(p);
    };
    if (!pres.entries.count(2)) at(2, std::nullopt);
    for (const auto& [p, n] : pres.entries) at(p, n);
    std::sort(rep.checks.begin(), rep.checks.end(), [](const auto& x, const auto& y) { return x.p < y.p; });

    // additive primes divide gcd(c4, disc)
    const Invariants& iv = e.invariants();
    for (const auto& pp : factor(gcd(iv.c4, iv.disc), opt).factors) {
        if (checked.count(pp.p)) continue;
        LocalData ld = tate_local_data(e, pp.p);
        if (ld.fp >= 2) rep.extra_additive.push_back(ld);
    }
    return rep;
}

}  // namespace kodaira
