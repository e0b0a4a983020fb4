#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace steinberg {

using BigInt = boost::multiprecision::cpp_int;

/// Domain errors raised by ring arithmetic (mismatched rings, bad inverses,
/// malformed literals).
class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Rationals, ModN };

/// Names one of the supported coefficient rings: the integers, the rationals,
/// or the integers mod n (n >= 2).
struct RingSpec {
    RingKind kind = RingKind::Integers;
    std::uint64_t modulus = 0; // only meaningful for ModN

    static RingSpec integers() { return {RingKind::Integers, 0}; }
    static RingSpec rationals() { return {RingKind::Rationals, 0}; }
    static RingSpec mod(std::uint64_t n);

    /// Parses the CLI ring syntax: "int" | "rat" | "mod:<n>".
    static RingSpec parse(std::string_view text);

    /// True for the rationals and for mod-p with p prime.
    bool is_field() const;

    std::string name() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// An exact scalar in the ring named by its RingSpec. Representations are
/// canonical: fractions in lowest terms with positive denominator, residues
/// reduced into [0, n). Equal values compare equal bit for bit.
class Scalar {
public:
    Scalar() = default; // zero over the integers

    Scalar(RingSpec ring, BigInt numerator, BigInt denominator = 1);

    const RingSpec& ring() const { return ring_; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    std::string str() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.ring_ == b.ring_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RingSpec ring_;
    BigInt num_ = 0;
    BigInt den_ = 1;

    void canonicalize();
};

Scalar ring_add(const Scalar& a, const Scalar& b);
Scalar ring_sub(const Scalar& a, const Scalar& b);
Scalar ring_mul(const Scalar& a, const Scalar& b);
Scalar ring_neg(const Scalar& a);

/// Multiplicative inverse; requires a field and a nonzero argument.
Scalar ring_inverse(const Scalar& a);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return ring_add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return ring_sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return ring_mul(a, b); }
inline Scalar operator-(const Scalar& a) { return ring_neg(a); }

/// Parses a scalar literal in the shared CLI grammar: integers "-?[0-9]+",
/// rationals additionally "p/q"; mod-n residues are plain integers reduced
/// on input.
Scalar parse_scalar(const RingSpec& ring, std::string_view text);

inline Scalar scalar_of(const RingSpec& ring, std::int64_t v) {
    return Scalar(ring, BigInt(v));
}

} // namespace steinberg
