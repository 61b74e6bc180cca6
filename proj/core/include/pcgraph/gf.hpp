#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace pcg {

// A field element is its integer encoding: the residue for prime fields, and
// the base-p digit packing of the polynomial coefficients for extension
// fields (so F_4 = {0, 1, x, x+1} is {0, 1, 2, 3}). Always < q.
using Elem = std::uint64_t;

// Immutable handle to F_q. Cheap to copy; all state is shared and read-only,
// so a Field can be used from several threads at once.
//
// Prime q of any word size uses residue arithmetic. Extension fields q = p^m
// (m > 1) are supported up to q <= 256 through dense multiplication and
// inverse tables built eagerly over a fixed irreducible modulus.
class Field {
public:
    // Throws NotPrimePower when q is not a prime power (or q < 2), and
    // UnsupportedExtension when q = p^m with m > 1 exceeds 256.
    static Field make(std::uint64_t q);

    std::uint64_t q() const;
    std::uint64_t p() const;
    unsigned m() const;

    // Modulus polynomial of an extension field, coded in base p with the
    // leading coefficient included (x^2+x+1 over F_2 codes as 7). For prime
    // fields this is just p.
    std::uint64_t modulus() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    // Throws DivisionByZero on a = 0.
    Elem inv(Elem a) const;

    // 0, 1, ..., q-1. Guarded like every enumeration: throws TooLarge when
    // q > 2^24.
    std::vector<Elem> elements() const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    struct Rep;
    explicit Field(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

    std::shared_ptr<const Rep> rep_;
};

// Free-function spelling of Field::make.
Field make_field(std::uint64_t q);

}  // namespace pcg
