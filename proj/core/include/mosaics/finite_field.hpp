#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mosaics/errors.hpp"

namespace mosaics {

class FieldElement;

// A finite field GF(p^n).  Elements are represented by canonical indices
// 0..q-1: the element with coefficient vector (c_0, ..., c_{n-1}) over the
// power basis 1, x, ..., x^{n-1} has index sum c_i * p^i.  Index 0 is the
// additive identity and index 1 the multiplicative identity.
//
// The modulus is a monic irreducible polynomial of degree n, stored as
// little-endian coefficients (constant term first, length n+1).  When no
// modulus is supplied the lexicographically smallest monic irreducible is
// chosen, ordering candidates by coefficient vectors read low-degree-first.
//
// FieldSpec is a cheap shared handle; copies refer to the same tables.
class FieldSpec {
 public:
  FieldSpec(int p, int n);
  FieldSpec(int p, int n, std::vector<int> modulus);

  int p() const;
  int n() const;
  int q() const;  // p^n
  const std::vector<int>& modulus() const;

  FieldElement element(int index) const;
  FieldElement zero() const;
  FieldElement one() const;
  // The primitive element of smallest canonical index.
  FieldElement generator() const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(int index) const;

  // Index-level arithmetic (hot paths avoid FieldElement wrappers).
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long e) const;
  int frobenius(int a) const;  // a |-> a^p

  // exp_table()[i] = generator()^i for 0 <= i < q-1;
  // log_table()[e] = discrete log of e base generator() (log_table()[0] = -1).
  const std::vector<int>& exp_table() const;
  const std::vector<int>& log_table() const;

  std::vector<std::vector<int>> addition_table() const;
  std::vector<std::vector<int>> multiplication_table() const;

  // Sorted indices of the nonzero squares.  Requires odd characteristic.
  std::vector<int> quadratic_residues() const;

  // Round-trippable description, e.g. "GF(2^13; x^13+x^12+x^10+x^9+1)".
  std::string to_string() const;

  // True when both handles denote the same (p, n, modulus).
  bool same_field(const FieldSpec& o) const;

  struct Data;  // opaque; public so implementation helpers can name it

 private:
  std::shared_ptr<const Data> d_;
};

// A field element: a canonical index paired with its field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldSpec field, int index)
      : field_(std::move(field)), index_(index) {}

  int index() const { return index_; }
  const FieldSpec& field() const { return field_; }
  std::vector<int> coeffs() const { return field_.coeffs(index_); }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return {field_, field_.add(index_, o.index_)};
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return {field_, field_.sub(index_, o.index_)};
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return {field_, field_.mul(index_, o.index_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(index_)}; }
  FieldElement inv() const { return {field_, field_.inv(index_)}; }
  FieldElement pow(long long e) const { return {field_, field_.pow(index_, e)}; }
  FieldElement frobenius() const { return {field_, field_.frobenius(index_)}; }

  bool is_zero() const { return index_ == 0; }
  bool operator==(const FieldElement& o) const {
    return field_.same_field(o.field_) && index_ == o.index_;
  }

 private:
  void check(const FieldElement& o) const {
    if (!field_.same_field(o.field_)) throw MixedFields();
  }

  FieldSpec field_{2, 1};
  int index_ = 0;
};

// Deterministic primality test for small arguments (trial division).
bool is_prime(long long x);

// Writes q = p^n with p prime; throws NotPrimePower otherwise.
void factor_prime_power(long long q, int& p, int& n);

}  // namespace mosaics
