#include "steinberg/ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace steinberg {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_same_ring(const Scalar& a, const Scalar& b) {
    if (!(a.ring() == b.ring())) throw RingError("ring mismatch");
}

} // namespace

RingSpec RingSpec::mod(std::uint64_t n) {
    if (n < 2) throw RingError("modulus must be at least 2");
    return {RingKind::ModN, n};
}

RingSpec RingSpec::parse(std::string_view text) {
    if (text == "int") return integers();
    if (text == "rat") return rationals();
    if (text.rfind("mod:", 0) == 0) {
        std::string digits(text.substr(4));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw RingError("bad ring spec '" + std::string(text) + "': expected mod:<n>");
        return mod(std::stoull(digits));
    }
    throw RingError("bad ring spec '" + std::string(text) + "': expected int, rat or mod:<n>");
}

bool RingSpec::is_field() const {
    switch (kind) {
        case RingKind::Rationals: return true;
        case RingKind::ModN: return is_prime_u64(modulus);
        case RingKind::Integers: return false;
    }
    return false;
}

std::string RingSpec::name() const {
    switch (kind) {
        case RingKind::Integers: return "int";
        case RingKind::Rationals: return "rat";
        case RingKind::ModN: return "mod:" + std::to_string(modulus);
    }
    return "?";
}

Scalar::Scalar(RingSpec ring, BigInt numerator, BigInt denominator)
    : ring_(ring), num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
}

void Scalar::canonicalize() {
    if (den_ == 0) throw RingError("division by zero");
    if (ring_.kind != RingKind::Rationals) {
        if (den_ != 1) throw RingError("denominator requires the rational ring");
        if (ring_.kind == RingKind::ModN) {
            BigInt n(ring_.modulus);
            num_ %= n;
            if (num_ < 0) num_ += n;
        }
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

std::string Scalar::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Scalar ring_add(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    return Scalar(a.ring(), a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Scalar ring_sub(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    return Scalar(a.ring(), a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Scalar ring_mul(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    return Scalar(a.ring(), a.num() * b.num(), a.den() * b.den());
}

Scalar ring_neg(const Scalar& a) {
    return Scalar(a.ring(), -a.num(), a.den());
}

Scalar ring_inverse(const Scalar& a) {
    if (!a.ring().is_field()) throw RingError("inverse requires a field");
    if (a.is_zero()) throw RingError("division by zero");
    if (a.ring().kind == RingKind::Rationals) return Scalar(a.ring(), a.den(), a.num());
    // mod-p: extended Euclid on (num, p)
    BigInt p(a.ring().modulus);
    BigInt r0 = a.num(), r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return Scalar(a.ring(), s0);
}

Scalar parse_scalar(const RingSpec& ring, std::string_view text) {
    auto bad = [&](const std::string& why) {
        return RingError("bad scalar literal '" + std::string(text) + "': " + why);
    };
    if (text.empty()) throw bad("empty");
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        bool negative = !part.empty() && part[0] == '-';
        std::size_t i = negative ? 1 : 0;
        if (i == part.size()) throw bad("expected digits");
        for (std::size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9') throw bad("expected digits");
        // cpp_int reads a leading 0 as an octal prefix; feed it plain decimal
        while (i + 1 < part.size() && part[i] == '0') ++i;
        std::string digits(part.substr(i));
        if (negative && digits != "0") digits.insert(digits.begin(), '-');
        return BigInt(digits);
    };
    if (slash == std::string_view::npos) return Scalar(ring, parse_int(text));
    if (ring.kind != RingKind::Rationals) throw bad("p/q literals require the rational ring");
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw RingError("division by zero");
    if (den < 0) throw bad("denominator must be positive");
    return Scalar(ring, num, den);
}

} // namespace steinberg
