#include "qformlab/qforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

#include "qformlab/ntheory.hpp"

namespace qformlab {

namespace {

long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("quad form coefficient overflow");
    return r;
}

long long checked_sub(long long x, long long y) {
    long long r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("quad form coefficient overflow");
    return r;
}

long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("quad form coefficient overflow");
    return r;
}

}  // namespace

long long discriminant_of(const quad_form& q) {
    return checked_sub(checked_mul(q.b, q.b), checked_mul(4 * q.a, q.c));
}

bool is_positive_definite(const quad_form& q) {
    return q.a > 0 && discriminant_of(q) < 0;
}

bool is_primitive(const quad_form& q) {
    return std::gcd(std::gcd(std::abs(q.a), std::abs(q.b)), std::abs(q.c)) == 1;
}

fundamental_status classify_discriminant(long long neg_d) {
    if (neg_d >= 0) return fundamental_status::not_a_discriminant;
    long long r = ((neg_d % 4) + 4) % 4;
    if (r == 2 || r == 3) return fundamental_status::not_a_discriminant;
    long long bigD = -neg_d;
    if (r == 1) {
        // -D = 1 mod 4, i.e. D = 3 mod 4: fundamental iff D squarefree
        return is_squarefree(bigD) ? fundamental_status::ok
                                   : fundamental_status::not_fundamental;
    }
    // -D = 0 mod 4: need D = 4m with m squarefree and m = 1 or 2 mod 4
    long long m = bigD / 4;
    if (m == 0 || (m % 4 != 1 && m % 4 != 2) || !is_squarefree(m))
        return fundamental_status::not_fundamental;
    return fundamental_status::ok;
}

discriminant discriminant::of(long long neg_d) {
    switch (classify_discriminant(neg_d)) {
        case fundamental_status::ok:
            return discriminant(-neg_d);
        case fundamental_status::not_a_discriminant:
            throw not_a_discriminant(neg_d);
        default:
            throw not_fundamental(
                neg_d, neg_d % 4 == 0 ? "D/4 must be squarefree and 1 or 2 mod 4"
                                      : "D must be squarefree");
    }
}

bool is_reduced(const quad_form& q) {
    if (!is_positive_definite(q)) return false;
    long long ab = std::abs(q.b);
    if (ab > q.a || q.a > q.c) return false;
    if ((ab == q.a || q.a == q.c) && q.b < 0) return false;
    return true;
}

quad_form reduce(quad_form q) {
    if (!is_positive_definite(q))
        throw std::invalid_argument("reduce: form must be positive definite");
    for (;;) {
        // translate x -> x + t*y so that b lands in (-a, a]
        if (q.b > q.a || q.b <= -q.a) {
            long long twoa = 2 * q.a;
            long long t = -(long long)std::floor((double)(q.b + q.a) / (double)twoa);
            // fix rounding: want -a < b + 2at <= a
            while (q.b + twoa * t > q.a) --t;
            while (q.b + twoa * t <= -q.a) ++t;
            q.c = checked_add(checked_add(checked_mul(checked_mul(q.a, t), t),
                                          checked_mul(q.b, t)),
                              q.c);
            q.b = q.b + twoa * t;
        }
        if (q.a > q.c) {
            std::swap(q.a, q.c);
            q.b = -q.b;
            continue;
        }
        break;
    }
    // boundary sign convention
    if (q.b < 0 && (-q.b == q.a || q.a == q.c)) q.b = -q.b;
    return q;
}

quad_form conjugate(const quad_form& q) { return {q.a, -q.b, q.c}; }

quad_form principal_form(const discriminant& d) {
    long long bigD = d.magnitude();
    if (bigD % 4 == 0) return {1, 0, bigD / 4};
    return {1, 1, (1 + bigD) / 4};
}

form_class_list enumerate_reduced(const discriminant& d) {
    const long long bigD = d.magnitude();
    form_class_list out;
    out.bigD = bigD;
    out.principal = principal_form(d);

    std::vector<quad_form> forms;
    long long a_max = (long long)std::sqrt((double)bigD / 3.0) + 1;
    for (long long a = 1; a <= a_max; ++a) {
        if (a * a * 3 > bigD) break;
        for (long long babs = bigD % 2; babs <= a; babs += 2) {
            long long num = babs * babs + bigD;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (!is_primitive({a, babs, c})) continue;
            if (babs == 0 || babs == a || a == c) {
                forms.push_back({a, babs, c});
            } else {
                forms.push_back({a, babs, c});
                forms.push_back({a, -babs, c});
            }
        }
    }

    out.h = (long long)forms.size();
    out.odd_class_number = out.h % 2 == 1;
    out.all.push_back(out.principal);

    std::vector<quad_form> rest;
    for (const auto& f : forms)
        if (!(f == out.principal)) rest.push_back(f);
    std::sort(rest.begin(), rest.end(), [](const quad_form& x, const quad_form& y) {
        return std::tuple(x.a, x.c, std::abs(x.b), -x.b) <
               std::tuple(y.a, y.c, std::abs(y.b), -y.b);
    });

    if (out.odd_class_number) {
        // rest comes in conjugate pairs; after the sort the b > 0 member of
        // each pair is immediately followed by its conjugate
        for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
            out.pairs.emplace_back(rest[i], rest[i + 1]);
            out.all.push_back(rest[i]);
            out.all.push_back(rest[i + 1]);
        }
    } else {
        out.all.insert(out.all.end(), rest.begin(), rest.end());
    }
    return out;
}

long long class_number(const discriminant& d) {
    return enumerate_reduced(d).h;
}

int units_w(const discriminant& d) {
    if (d.magnitude() == 3) return 6;
    if (d.magnitude() == 4) return 4;
    return 2;
}

std::pair<long long, long long> min_nonzero_values(const quad_form& q) {
    if (!is_reduced(q))
        throw std::invalid_argument("min_nonzero_values: form must be reduced");
    if (q.a == 1)
        throw not_applicable("min_nonzero_values excludes the principal form");
    return {q.a, q.c};
}

namespace {

/* Pairs for (D+1)/24 < 6, keyed by D. */
constexpr struct {
    long long bigD;
    quad_form qs, qr;
} kSmallSchoenebergPairs[] = {
    {23, {1, 1, 6}, {2, 1, 3}},
    {47, {2, 1, 6}, {3, 1, 4}},
    {71, {3, 1, 6}, {4, 3, 5}},
    {95, {4, 1, 6}, {5, 5, 6}},
    {119, {5, 1, 6}, {6, 5, 6}},
};

}  // namespace

std::pair<quad_form, quad_form> schoeneberg_pair(long long bigD) {
    if (bigD % 24 != 23) throw wrong_residue(bigD);
    if ((bigD + 1) / 24 < 6) {
        for (const auto& row : kSmallSchoenebergPairs)
            if (row.bigD == bigD) return {row.qs, row.qr};
        throw std::logic_error("missing small Schoeneberg pair row");
    }
    quad_form qs{6, 1, (bigD + 1) / 24};
    quad_form qr{6, 5, (bigD + 25) / 24};
    if (reduce(qs) != qs || reduce(qr) != qr)
        throw std::logic_error("Schoeneberg pair not reduced");
    return {qs, qr};
}

std::string to_triple(const quad_form& q) {
    std::ostringstream os;
    os << q.a << "," << q.b << "," << q.c;
    return os.str();
}

std::string to_pretty(const quad_form& q) {
    auto coeff = [](long long v, bool leading) {
        std::string s;
        if (v < 0)
            s += "-";
        else if (!leading)
            s += "+";
        if (std::abs(v) != 1) s += std::to_string(std::abs(v));
        return s;
    };
    std::ostringstream os;
    os << coeff(q.a, true) << "x^2";
    if (q.b != 0) os << coeff(q.b, false) << "xy";
    if (q.c != 0) os << coeff(q.c, false) << "y^2";
    return os.str();
}

quad_form parse_triple(const std::string& s) {
    quad_form q;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> q.a >> c1 >> q.b >> c2 >> q.c) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("expected form as \"a,b,c\": " + s);
    return q;
}

}  // namespace qformlab
