#include "polydyn/field.hpp"

#include <algorithm>
#include <cctype>

namespace polydyn {

namespace {

bool squarefree(const Int& d) {
    Int a = abs(d);
    if (a == 0) return false;
    for (auto& [p, e] : factor(a))
        if (e > 1) return false;
    return true;
}

}  // namespace

FieldSpec::FieldSpec(Int d) : D(std::move(d)) {
    if (D == 0) throw domain_error("field discriminant 0");
    if (D != 1 && !squarefree(D)) throw domain_error("D must be squarefree");
}

FieldElement::FieldElement(Rat x, Rat y, Int d) : a(std::move(x)), b(std::move(y)), D(std::move(d)) {
    if (D == 0) throw domain_error("field discriminant 0");
    if (D == 1) {
        a += b;
        b = 0;
    }
    if (b == 0) D = 1;
}

namespace {

Int merge_D(const FieldElement& x, const FieldElement& y) {
    if (x.D == 1) return y.D;
    if (y.D == 1) return x.D;
    if (x.D != y.D) throw domain_error("elements of distinct quadratic fields");
    return x.D;
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(a + o.a, b + o.b, merge_D(*this, o));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(a - o.a, b - o.b, merge_D(*this, o));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    Int d = merge_D(*this, o);
    return FieldElement(a * o.a + b * o.b * Rat(d), a * o.b + b * o.a, d);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw domain_error("inverse of 0");
    Rat n = norm();
    return FieldElement(a / n, -b / n, D);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement r(1), base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (a != o.a || b != o.b) return false;
    if (b == 0) return true;
    return D == o.D;
}

FieldElement galois_conjugate(const FieldElement& x) {
    return x.conjugate();
}

FieldElement FieldElement::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty field element");
    auto k = s.find("sqrt(");
    if (k == std::string::npos) return FieldElement(parse_rat(s));
    auto close = s.find(')', k);
    if (close == std::string::npos || close != s.size() - 1)
        throw parse_error("bad sqrt literal: " + raw);
    Int D(s.substr(k + 5, close - k - 5));
    std::string prefix = s.substr(0, k);
    // prefix is one of: "", "-", "b*", "-b*", "a+", "a-", "a+b*", "a-b*"
    std::string a_part, b_part;
    // split at the last top-level +/- that is not the leading sign
    std::size_t split = std::string::npos;
    for (std::size_t i = prefix.size(); i-- > 1;) {
        if (prefix[i] == '+' || prefix[i] == '-') {
            char prev = prefix[i - 1];
            if (prev == '+' || prev == '-' || prev == '/') continue;
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        b_part = prefix;
    } else {
        a_part = prefix.substr(0, split);
        b_part = prefix.substr(split);
    }
    Rat a = a_part.empty() ? Rat(0) : parse_rat(a_part);
    Rat b;
    if (!b_part.empty() && b_part.back() == '*') b_part.pop_back();
    if (b_part.empty() || b_part == "+")
        b = 1;
    else if (b_part == "-")
        b = -1;
    else
        b = parse_rat(b_part);
    if (D == 1) return FieldElement(a + b);
    return FieldElement(a, b, D);
}

std::string FieldElement::str() const {
    if (b == 0) return rat_str(a);
    std::string root = "sqrt(" + D.get_str() + ")";
    std::string bs;
    if (b == 1)
        bs = root;
    else if (b == -1)
        bs = "-" + root;
    else
        bs = rat_str(b) + "*" + root;
    if (a == 0) return bs;
    if (b > 0) return rat_str(a) + "+" + bs;
    return rat_str(a) + bs;
}

namespace {

std::optional<FieldElement> sqrt_in_field(const FieldElement& x) {
    if (x.b == 0) {
        if (auto r = exact_root(x.a, 2)) return FieldElement(*r);
        if (x.D != 1) {
            // maybe x = e^2 * D
            Rat q = x.a / Rat(x.D);
            if (auto e = exact_root(q, 2)) {
                if (*e != 0) return FieldElement(Rat(0), *e, x.D);
            }
        }
        return std::nullopt;
    }
    // (c + e sqrt(D))^2 = x:  c^2 = (a ± sqrt(N))/2, e = b/(2c)
    Rat N = x.norm();
    auto s = exact_root(N, 2);
    if (!s) return std::nullopt;
    for (Rat sg : {Rat(*s), Rat(-*s)}) {
        Rat c2 = (x.a + sg) / 2;
        if (c2 <= 0) continue;
        if (auto c = exact_root(c2, 2)) {
            if (*c == 0) continue;
            Rat e = x.b / (2 * *c);
            FieldElement y(*c, e, x.D);
            if (y * y == x) return y;
        }
    }
    return std::nullopt;
}

std::optional<FieldElement> odd_root_in_field(const FieldElement& x, unsigned k) {
    // k odd >= 3
    if (x.b == 0) {
        if (auto r = exact_root(x.a, k)) return FieldElement(*r);
        return std::nullopt;
    }
    Rat N = x.norm();
    auto r = exact_root(N, k);
    if (!r) return std::nullopt;
    // trace t of the root satisfies s_k(t, r) = 2a; find rational roots
    // of that degree-k polynomial by candidate enumeration over divisors
    std::vector<Rat> coeffs;  // s_k(t,r) as polynomial in t, built by recursion
    // s_j as polynomials in t: vectors of Rat (ascending powers of t)
    std::vector<Rat> s0{Rat(2)}, s1{Rat(0), Rat(1)};
    for (unsigned j = 2; j <= k; j++) {
        std::vector<Rat> s2(s1.size() + 1, Rat(0));
        for (std::size_t i = 0; i < s1.size(); i++) s2[i + 1] += s1[i];
        for (std::size_t i = 0; i < s0.size(); i++) s2[i] -= *r * s0[i];
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    coeffs = s1;
    coeffs[0] -= 2 * x.a;
    for (const Rat& t : rational_poly_roots(coeffs)) {
        Rat c = t / 2;
        Rat e2 = (c * c - *r) / Rat(x.D);
        if (e2 < 0) continue;
        auto e = exact_root(e2, 2);
        if (!e) continue;
        for (Rat es : {Rat(*e), Rat(-*e)}) {
            FieldElement y(c, es, x.D);
            if (y.pow(k) == x) return y;
            if (es == 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<FieldElement> FieldElement::exact_kth_root(unsigned k) const {
    if (k == 0) throw domain_error("0th root");
    if (k == 1) return *this;
    if (is_zero()) return FieldElement(0);
    if (k % 2 == 0) {
        auto h = sqrt_in_field(*this);
        if (h) {
            if (auto y = h->exact_kth_root(k / 2)) return y;
            if (auto y = (-*h).exact_kth_root(k / 2)) return y;
        }
        return std::nullopt;
    }
    unsigned p = 3;
    while (k % p != 0) p += 2;
    auto h = odd_root_in_field(*this, p);
    if (!h) return std::nullopt;
    if (k == p) return h;
    return h->exact_kth_root(k / p);
}

int FieldElement::sign_at(int embedding) const {
    if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (D < 0) throw domain_error("sign at a complex embedding");
    Rat bb = embedding == 0 ? b : -b;
    if (a >= 0 && bb >= 0) return (a == 0 && bb == 0) ? 0 : 1;
    if (a <= 0 && bb <= 0) return -1;
    // opposite signs: compare a^2 with bb^2 D
    Rat lhs = a * a, rhs = bb * bb * Rat(D);
    if (lhs == rhs) return 0;
    return (lhs > rhs) == (a > 0) ? 1 : -1;
}

Int common_field(const std::vector<FieldElement>& xs) {
    Int D = 1;
    for (const auto& x : xs) {
        if (x.D == 1) continue;
        if (D == 1)
            D = x.D;
        else if (D != x.D)
            throw domain_error("mixed quadratic fields");
    }
    return D;
}

}  // namespace polydyn
