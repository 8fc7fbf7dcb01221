#include "cychb/field.hpp"

namespace cychb {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// inverse of a mod p, 0 < a < p
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("invmod: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 31)) throw std::invalid_argument("Field::prime: modulus too large (need p < 2^31)");
    if (!is_prime_u64(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

Field Field::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if ((s.size() > 1 && (s[0] == 'F' || s[0] == 'f'))) {
        std::uint64_t p = std::stoull(s.substr(1));
        return prime(p);
    }
    throw std::invalid_argument("Field::parse: expected \"Q\" or \"F<p>\", got \"" + s + "\"");
}

FieldElem FieldElem::zero(Field f) {
    FieldElem e;
    e.p_ = f.characteristic();
    if (e.p_) e.v_ = std::uint64_t{0};
    return e;
}

FieldElem FieldElem::one(Field f) { return of(f, 1); }

FieldElem FieldElem::of(Field f, std::int64_t n) {
    FieldElem e;
    e.p_ = f.characteristic();
    if (e.p_) {
        std::int64_t m = n % static_cast<std::int64_t>(e.p_);
        if (m < 0) m += static_cast<std::int64_t>(e.p_);
        e.v_ = static_cast<std::uint64_t>(m);
    } else {
        e.rat() = n;
    }
    return e;
}

FieldElem FieldElem::ratio(Field f, std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("FieldElem::ratio: zero denominator");
    return of(f, num) / of(f, den);
}

FieldElem FieldElem::from_string(Field f, const std::string& s) {
    FieldElem e;
    e.p_ = f.characteristic();
    if (e.p_) {
        std::size_t pos = 0;
        bool neg = false;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            pos = 1;
        }
        std::uint64_t v = std::stoull(s.substr(pos)) % e.p_;
        e.v_ = neg && v ? e.p_ - v : v;
    } else {
        mpq_class q(s, 10);
        q.canonicalize();
        e.v_ = std::move(q);
    }
    return e;
}

bool FieldElem::is_zero() const { return p_ ? res() == 0 : rat() == 0; }
bool FieldElem::is_one() const { return p_ ? res() == 1 % p_ : rat() == 1; }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    if (p_)
        r.res() = res() ? p_ - res() : 0;
    else
        r.rat() = -rat();
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::invalid_argument("FieldElem::inv: division by zero");
    FieldElem r = *this;
    if (p_)
        r.res() = invmod(res(), p_);
    else
        r.rat() = 1 / rat();
    return r;
}

FieldElem FieldElem::pow(std::int64_t e) const {
    FieldElem base = e < 0 ? inv() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    FieldElem acc = one(field());
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::uint64_t FieldElem::residue() const {
    if (!p_) throw std::invalid_argument("FieldElem::residue: not a prime-field element");
    return res();
}

const mpq_class& FieldElem::rational_value() const {
    if (p_) throw std::invalid_argument("FieldElem::rational_value: not a rational");
    return rat();
}

std::string FieldElem::str() const {
    if (p_) return std::to_string(res());
    if (rat().get_den() == 1) return rat().get_num().get_str();
    return rat().get_num().get_str() + "/" + rat().get_den().get_str();
}

void FieldElem::check_same(const FieldElem& a, const FieldElem& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("FieldElem: mixed fields");
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    FieldElem::check_same(a, b);
    FieldElem r = a;
    if (a.p_) {
        r.res() = a.res() + b.res();
        if (r.res() >= a.p_) r.res() -= a.p_;
    } else {
        r.rat() = a.rat() + b.rat();
    }
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    FieldElem::check_same(a, b);
    FieldElem r = a;
    if (a.p_) {
        r.res() = a.res() >= b.res() ? a.res() - b.res() : a.res() + a.p_ - b.res();
    } else {
        r.rat() = a.rat() - b.rat();
    }
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    FieldElem::check_same(a, b);
    FieldElem r = a;
    if (a.p_)
        r.res() = mulmod(a.res(), b.res(), a.p_);
    else
        r.rat() = a.rat() * b.rat();
    return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    FieldElem::check_same(a, b);
    return a.p_ ? a.res() == b.res() : a.rat() == b.rat();
}

} // namespace cychb
