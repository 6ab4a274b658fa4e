#include "dpcolor/bounds.hpp"

#include <algorithm>

#include "dpcolor/errors.hpp"

namespace dpc {

std::vector<int> admissible_level_counts(int m) {
    std::vector<int> out{0};
    for (int s = 1; s <= m; ++s)
        if (s != m - 1) out.push_back(s);
    return out;
}

SethBoundBundle seth_bound(int k, int m, int s) {
    if (k < 1) throw InvalidArgument("seth_bound needs k >= 1");
    if (m < 2) throw InvalidArgument("seth_bound needs m >= 2");
    const auto ok = admissible_level_counts(m);
    if (std::find(ok.begin(), ok.end(), s) == ok.end()) {
        throw InvalidArgument("level count " + std::to_string(s) + " is not admissible for m = " + std::to_string(m));
    }
    SethBoundBundle b;
    b.k = k;
    b.m = m;
    b.s = s;
    const BigInt mm = m;
    const BigInt q = ipow(mm - 2, static_cast<unsigned>(2 * k + 1));
    b.p = (mm - 1) * q;
    b.p1 = exact_div(q - (mm - 2), mm - 1, "p1");
    b.p2 = exact_div(q + 1, mm - 1, "p2");
    b.level_bound = b.p - (s - 1) * b.p1 - (m - s) * b.p2;
    b.nonlevel_bound = b.p - s * b.p1 - (m - 2 - s) * b.p2;
    b.min_total = s * b.level_bound + (m - s) * b.nonlevel_bound;
    return b;
}

BigInt seth_min_total(int k, int m) {
    const auto counts = admissible_level_counts(m);
    BigInt best = seth_bound(k, m, counts.front()).min_total;
    for (int s : counts) best = std::min(best, seth_bound(k, m, s).min_total);
    return best;
}

Rational amalgam_upper_bound(std::span<const BigInt> values, const BigInt& m) {
    if (values.size() < 2) throw InvalidArgument("amalgam bound needs at least two parts");
    if (m < 1) throw InvalidArgument("m must be at least 1");
    BigInt num = 1;
    for (const auto& v : values) num *= v;
    return Rational(num, ipow(m, static_cast<unsigned>(values.size() - 1)));
}

BigInt gluing_lower_bound(std::span<const BigInt> per_part_k, int p, const BigInt& m) {
    if (per_part_k.size() < 2) throw InvalidArgument("gluing bound needs at least two parts");
    if (p < 1) throw InvalidArgument("p must be at least 1");
    if (m < p) throw InvalidArgument("gluing bound needs p <= m");
    BigInt out = falling_factorial(m, static_cast<unsigned>(p));
    for (const auto& k : per_part_k) out *= k;
    return out;
}

BigInt cycle_vertex_bound(int n, const BigInt& m) {
    if (n < 3) throw InvalidArgument("cycle_vertex_bound needs n >= 3");
    if (m < 2) throw InvalidArgument("cycle_vertex_bound needs m >= 2");
    if (n == 3) return (m - 1) * (m - 2);
    const BigInt top = ipow(m - 1, static_cast<unsigned>(n));
    if (n % 2 == 0) return exact_div(top - 1, m, "even cycle vertex bound");
    return exact_div(top - (m - 1), m, "odd cycle vertex bound");
}

TechnicalCheckRecord technical_inequality_check(int m, int s) {
    if (m < 5) throw InvalidArgument("technical check needs m >= 5");
    if (s < 0 || s > m - 2) throw InvalidArgument("technical check needs 0 <= s <= m-2");
    const Rational mm = m;
    const Rational t = mm / Rational(ipow(BigInt(m - 2), 4));
    const Rational a = 1 - t;
    const Rational b = 1 + Rational(1) / ((mm - 1) * (mm - 2)) - t;
    TechnicalCheckRecord r;
    r.m = m;
    r.s = s;
    r.value = rpow(a, static_cast<unsigned>(s)) * rpow(b, static_cast<unsigned>(m - s));
    r.greater_than_one = r.value > 1;
    return r;
}

}  // namespace dpc
