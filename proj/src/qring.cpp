#include "polydyn/qring.hpp"

namespace polydyn {

QRing::QRing(Pol<FieldElement> m, Int d) : modulus(std::move(m)), D(std::move(d)) {
    if (modulus.deg() < 1) throw domain_error("modulus must have degree >= 1");
    if (!(modulus.lead() == FieldElement(1))) throw domain_error("modulus must be monic");
}

std::string QRing::str() const {
    std::string s = "t^" + std::to_string(modulus.deg());
    for (int i = modulus.deg() - 1; i >= 0; i--) {
        FieldElement c = modulus.at(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        s += "+(" + c.str() + ")";
        if (i == 1)
            s += "*t";
        else if (i > 1)
            s += "*t^" + std::to_string(i);
    }
    return s;
}

QRElem::QRElem(std::shared_ptr<const QRing> r, Pol<FieldElement> v) : ring(std::move(r)), val(std::move(v)) {
    if (ring) {
        auto [q, rem] = divmod(val, ring->modulus);
        (void)q;
        val = std::move(rem);
        if (val.deg() <= 0) ring.reset();
    }
}

QRElem QRElem::generator(std::shared_ptr<const QRing> r) {
    return QRElem(std::move(r), Pol<FieldElement>::var());
}

FieldElement QRElem::constant() const {
    if (!is_constant()) throw domain_error("non-constant residue");
    return val.at(0);
}

namespace {

std::shared_ptr<const QRing> merge_ring(const QRElem& a, const QRElem& b) {
    if (!a.ring) return b.ring;
    if (!b.ring) return a.ring;
    if (a.ring == b.ring || a.ring->modulus == b.ring->modulus) return a.ring;
    throw domain_error("residues from distinct quotient rings");
}

}  // namespace

QRElem QRElem::operator-() const {
    QRElem r = *this;
    r.val = -r.val;
    return r;
}

QRElem QRElem::operator+(const QRElem& o) const {
    return QRElem(merge_ring(*this, o), val + o.val);
}

QRElem QRElem::operator-(const QRElem& o) const {
    return QRElem(merge_ring(*this, o), val - o.val);
}

QRElem QRElem::operator*(const QRElem& o) const {
    return QRElem(merge_ring(*this, o), val * o.val);
}

QRElem QRElem::inverse() const {
    if (is_zero()) throw domain_error("inverse of 0");
    if (!ring) return QRElem(val.at(0).inverse());
    auto e = ext_gcd(val, ring->modulus);
    if (e.g.deg() != 0) throw domain_error("non-invertible residue");
    return QRElem(ring, e.u * e.g.at(0).inverse());
}

QRElem QRElem::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    QRElem r(1), b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool QRElem::operator==(const QRElem& o) const {
    if (ring && o.ring) merge_ring(*this, o);
    return val == o.val;
}

std::string QRElem::str() const {
    if (val.is_zero()) return "0";
    std::string s;
    for (int i = val.deg(); i >= 0; i--) {
        FieldElement c = val.at(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += "(" + c.str() + ")";
        } else {
            if (!(c == FieldElement(1))) s += "(" + c.str() + ")*";
            s += (i == 1 ? "t" : "t^" + std::to_string(i));
        }
    }
    return s;
}

}  // namespace polydyn
