#pragma once

// Arithmetic for polynomials over GF(2) and for binary extension fields
// GF(2^m). This is the machinery behind cyclic code construction: finding a
// primitive n-th root of unity, minimal polynomials of its powers, and the
// generator polynomial associated with a complete defining set.

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace codebounds {

// Dense polynomial over GF(2), one coefficient per bit, lowest degree at
// bit 0. Degrees above 63 are rejected; nothing in this library needs them.
class Gf2Poly {
 public:
  constexpr Gf2Poly() = default;

  static constexpr Gf2Poly from_bits(std::uint64_t bits) {
    Gf2Poly p;
    p.bits_ = bits;
    return p;
  }
  static constexpr Gf2Poly zero() { return {}; }
  static constexpr Gf2Poly one() { return from_bits(1); }
  static constexpr Gf2Poly x() { return from_bits(2); }
  static Gf2Poly monomial(int degree) {
    if (degree < 0 || degree > 63)
      throw std::invalid_argument("Gf2Poly::monomial: degree out of range");
    return from_bits(std::uint64_t{1} << degree);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr bool is_one() const { return bits_ == 1; }

  // Degree of the zero polynomial is reported as -1.
  constexpr int degree() const { return bits_ == 0 ? -1 : std::bit_width(bits_) - 1; }

  constexpr bool coeff(int i) const { return i >= 0 && i < 64 && ((bits_ >> i) & 1u) != 0; }

  friend constexpr bool operator==(Gf2Poly a, Gf2Poly b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Gf2Poly a, Gf2Poly b) { return a.bits_ != b.bits_; }
  friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return from_bits(a.bits_ ^ b.bits_); }

  std::string to_string() const {
    if (bits_ == 0) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (!coeff(i)) continue;
      if (!s.empty()) s += " + ";
      if (i == 0)
        s += "1";
      else if (i == 1)
        s += "x";
      else
        s += "x^" + std::to_string(i);
    }
    return s;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Carry-less product; degree(result) = degree(a) + degree(b) for nonzero inputs.
inline Gf2Poly poly_mul(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() || b.is_zero()) return Gf2Poly::zero();
  if (a.degree() + b.degree() > 63)
    throw std::overflow_error("poly_mul: product degree exceeds 63");
  std::uint64_t acc = 0;
  std::uint64_t aa = a.bits();
  for (std::uint64_t bb = b.bits(); bb != 0; bb >>= 1, aa <<= 1)
    if (bb & 1u) acc ^= aa;
  return Gf2Poly::from_bits(acc);
}

struct Gf2DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

inline Gf2DivMod poly_divmod(Gf2Poly a, Gf2Poly b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by the zero polynomial");
  std::uint64_t rem = a.bits();
  std::uint64_t quot = 0;
  const int db = b.degree();
  for (int d = Gf2Poly::from_bits(rem).degree(); d >= db;
       d = Gf2Poly::from_bits(rem).degree()) {
    const int shift = d - db;
    rem ^= b.bits() << shift;
    quot |= std::uint64_t{1} << shift;
  }
  return {Gf2Poly::from_bits(quot), Gf2Poly::from_bits(rem)};
}

inline Gf2Poly poly_mod(Gf2Poly a, Gf2Poly b) { return poly_divmod(a, b).remainder; }

inline bool poly_divides(Gf2Poly divisor, Gf2Poly multiple) {
  return poly_mod(multiple, divisor).is_zero();
}

// Trial division against every polynomial of degree 1..m/2.
inline bool is_irreducible(Gf2Poly f) {
  const int m = f.degree();
  if (m <= 0) return false;
  if (m == 1) return true;
  for (int deg = 1; deg <= m / 2; ++deg) {
    const std::uint64_t lo = std::uint64_t{1} << deg;
    for (std::uint64_t bits = lo; bits < (lo << 1); ++bits)
      if (poly_mod(f, Gf2Poly::from_bits(bits)).is_zero()) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      primes.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) primes.push_back(v);
  return primes;
}

class Gf2mElement;

// GF(2^m) realized as GF(2)[x] modulo an irreducible polynomial of degree m.
// m is capped at 24: irreducibility is checked by plain trial division, and
// every use in this library (cyclic codes of odd length up to 63) fits.
class Gf2mField {
 public:
  static constexpr int kMaxDegree = 24;

  explicit Gf2mField(Gf2Poly modulus) : modulus_(modulus), m_(modulus.degree()) {
    if (m_ < 1 || m_ > kMaxDegree)
      throw std::invalid_argument("Gf2mField: extension degree must be in 1.." +
                                  std::to_string(kMaxDegree));
    if (!is_irreducible(modulus_))
      throw std::invalid_argument("Gf2mField: modulus " + modulus_.to_string() +
                                  " is not irreducible");
  }

  // The field GF(2^m) whose modulus is the first irreducible polynomial of
  // degree m in ascending bit order for which x generates the whole
  // multiplicative group. For m=4 this picks x^4 + x + 1.
  static Gf2mField with_degree(int m);

  // Smallest binary extension field containing a primitive n-th root of
  // unity, i.e. with n | 2^m - 1. n must be odd.
  static Gf2mField with_nth_roots_of_unity(int n);

  int m() const { return m_; }
  Gf2Poly modulus() const { return modulus_; }
  std::uint64_t group_order() const { return (std::uint64_t{1} << m_) - 1; }

  Gf2mElement element(std::uint64_t repr) const;
  Gf2mElement element(Gf2Poly p) const;
  Gf2mElement zero() const;
  Gf2mElement one() const;
  Gf2mElement x() const;

  // Element of multiplicative order exactly n; requires n | 2^m - 1.
  Gf2mElement primitive_nth_root(int n) const;

  std::uint64_t add_repr(std::uint64_t a, std::uint64_t b) const { return a ^ b; }

  std::uint64_t mul_repr(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t acc = 0;
    while (b != 0) {
      if (b & 1u) acc ^= a;
      a <<= 1;
      b >>= 1;
    }
    for (int d = std::bit_width(acc) - 1; d >= m_; d = std::bit_width(acc) - 1)
      acc ^= modulus_.bits() << (d - m_);
    return acc;
  }

  std::uint64_t pow_repr(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1;
    while (e != 0) {
      if (e & 1u) result = mul_repr(result, a);
      a = mul_repr(a, a);
      e >>= 1;
    }
    return result;
  }

  std::uint64_t element_order_repr(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("element_order: zero element");
    std::uint64_t t = group_order();
    for (std::uint64_t p : prime_factors(t))
      while (t % p == 0 && pow_repr(a, t / p) == 1) t /= p;
    return t;
  }

  friend bool operator==(const Gf2mField& a, const Gf2mField& b) {
    return a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const Gf2mField& a, const Gf2mField& b) { return !(a == b); }

 private:
  Gf2Poly modulus_;
  int m_;
};

// Element of GF(2^m); holds a pointer to its field, which must outlive it.
class Gf2mElement {
 public:
  Gf2mElement(const Gf2mField& field, std::uint64_t repr) : field_(&field), repr_(repr) {
    if (repr >= (std::uint64_t{1} << field.m()))
      throw std::invalid_argument("Gf2mElement: representation has degree >= m");
  }

  const Gf2mField& field() const { return *field_; }
  std::uint64_t repr() const { return repr_; }
  Gf2Poly as_poly() const { return Gf2Poly::from_bits(repr_); }
  bool is_zero() const { return repr_ == 0; }
  bool is_one() const { return repr_ == 1; }
  std::uint64_t order() const { return field_->element_order_repr(repr_); }

  friend bool operator==(const Gf2mElement& a, const Gf2mElement& b) {
    return *a.field_ == *b.field_ && a.repr_ == b.repr_;
  }
  friend bool operator!=(const Gf2mElement& a, const Gf2mElement& b) { return !(a == b); }

  friend Gf2mElement operator+(const Gf2mElement& a, const Gf2mElement& b) {
    a.require_same_field(b);
    return Gf2mElement(*a.field_, a.field_->add_repr(a.repr_, b.repr_));
  }
  friend Gf2mElement operator*(const Gf2mElement& a, const Gf2mElement& b) {
    a.require_same_field(b);
    return Gf2mElement(*a.field_, a.field_->mul_repr(a.repr_, b.repr_));
  }

 private:
  void require_same_field(const Gf2mElement& other) const {
    if (*field_ != *other.field_)
      throw std::invalid_argument("Gf2mElement: operands live in different fields");
  }

  const Gf2mField* field_;
  std::uint64_t repr_;
};

inline Gf2mElement Gf2mField::element(std::uint64_t repr) const {
  return Gf2mElement(*this, repr);
}

inline Gf2mElement Gf2mField::element(Gf2Poly p) const {
  return Gf2mElement(*this, poly_mod(p, modulus_).bits());
}

inline Gf2mElement Gf2mField::zero() const { return element(std::uint64_t{0}); }
inline Gf2mElement Gf2mField::one() const { return element(std::uint64_t{1}); }
inline Gf2mElement Gf2mField::x() const { return element(std::uint64_t{2}); }

inline Gf2mField Gf2mField::with_degree(int m) {
  if (m < 1 || m > kMaxDegree)
    throw std::invalid_argument("Gf2mField::with_degree: degree must be in 1.." +
                                std::to_string(kMaxDegree));
  const std::uint64_t lo = std::uint64_t{1} << m;
  for (std::uint64_t bits = lo + 1; bits < (lo << 1); bits += 2) {
    const Gf2Poly f = Gf2Poly::from_bits(bits);
    if (!is_irreducible(f)) continue;
    Gf2mField field(f);
    if (field.group_order() == 1 || field.element_order_repr(2) == field.group_order())
      return field;
  }
  throw std::logic_error("with_degree: no primitive modulus found");
}

inline Gf2mField Gf2mField::with_nth_roots_of_unity(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("with_nth_roots_of_unity: n must be odd and positive");
  for (int m = 1; m <= kMaxDegree; ++m) {
    const std::uint64_t group = (std::uint64_t{1} << m) - 1;
    if (group % static_cast<std::uint64_t>(n) == 0) return with_degree(m);
  }
  throw std::invalid_argument("with_nth_roots_of_unity: n=" + std::to_string(n) +
                              " needs an extension degree above " + std::to_string(kMaxDegree));
}

inline Gf2mElement Gf2mField::primitive_nth_root(int n) const {
  if (n < 1 || group_order() % static_cast<std::uint64_t>(n) != 0)
    throw std::invalid_argument("primitive_nth_root: n must divide 2^m - 1");
  if (group_order() == 1) return one();
  for (std::uint64_t g = 2; g <= group_order(); ++g) {
    if (element_order_repr(g) != group_order()) continue;
    const std::uint64_t root = pow_repr(g, group_order() / static_cast<std::uint64_t>(n));
    if (element_order_repr(root) != static_cast<std::uint64_t>(n))
      throw std::logic_error("primitive_nth_root: order check failed");
    return element(root);
  }
  throw std::logic_error("primitive_nth_root: no primitive element found");
}

inline Gf2mElement element_pow(const Gf2mElement& e, std::uint64_t exponent) {
  return e.field().element(e.field().pow_repr(e.repr(), exponent));
}

// Monic lowest-degree GF(2) polynomial annihilating e, computed as the
// product of (x + c) over the conjugacy class {e, e^2, e^4, ...}.
inline Gf2Poly minimal_polynomial(const Gf2mElement& e) {
  if (e.is_zero()) throw std::invalid_argument("minimal_polynomial: zero element");
  const Gf2mField& field = e.field();

  std::vector<std::uint64_t> conjugates;
  std::uint64_t c = e.repr();
  do {
    conjugates.push_back(c);
    c = field.mul_repr(c, c);
  } while (c != e.repr());

  // product over the conjugacy class, coefficients in GF(2^m), lowest first
  std::vector<std::uint64_t> poly{1};
  for (std::uint64_t root : conjugates) {
    std::vector<std::uint64_t> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] ^= poly[i];
      next[i] ^= field.mul_repr(root, poly[i]);
    }
    poly = std::move(next);
  }

  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] > 1)
      throw std::logic_error("minimal_polynomial: coefficient outside GF(2)");
    bits |= poly[i] << i;
  }
  const Gf2Poly result = Gf2Poly::from_bits(bits);

  // the result must annihilate e
  std::uint64_t value = 0;
  for (int i = result.degree(); i >= 0; --i)
    value = field.add_repr(field.mul_repr(value, e.repr()), result.coeff(i) ? 1u : 0u);
  if (value != 0) throw std::logic_error("minimal_polynomial: does not annihilate its element");
  return result;
}

// Generator polynomial of the binary cyclic code of odd length n whose
// complete defining set is `defining_set`: the product of the minimal
// polynomials of alpha^s over one representative s per cyclotomic coset,
// where alpha is a primitive n-th root of unity in the smallest GF(2^m)
// with n | 2^m - 1. The degree equals |defining_set| and the result
// divides x^n - 1.
inline Gf2Poly generator_from_defining_set(int n, const std::set<int>& defining_set) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("generator_from_defining_set: length must be odd and positive, got " +
                                std::to_string(n));
  if (n > 63)
    throw std::invalid_argument("generator_from_defining_set: lengths above 63 are not supported");
  for (int s : defining_set)
    if (s < 0 || s >= n)
      throw std::invalid_argument("generator_from_defining_set: residue " + std::to_string(s) +
                                  " is outside 0.." + std::to_string(n - 1));
  for (int s : defining_set) {
    const int doubled = static_cast<int>((2LL * s) % n);
    if (defining_set.count(doubled) == 0)
      throw std::invalid_argument("defining set is not complete: contains " + std::to_string(s) +
                                  " but is missing " + std::to_string(doubled) +
                                  " (its double mod " + std::to_string(n) + ")");
  }

  const Gf2mField field = Gf2mField::with_nth_roots_of_unity(n);
  const Gf2mElement alpha = field.primitive_nth_root(n);

  std::set<int> seen;
  Gf2Poly generator = Gf2Poly::one();
  for (int s : defining_set) {
    if (seen.count(s)) continue;
    int t = s;
    do {
      seen.insert(t);
      t = static_cast<int>((2LL * t) % n);
    } while (t != s);
    generator = poly_mul(generator, minimal_polynomial(element_pow(alpha, static_cast<std::uint64_t>(s))));
  }

  if (generator.degree() != static_cast<int>(defining_set.size()))
    throw std::logic_error("generator_from_defining_set: degree != |defining set|");
  const Gf2Poly x_n_minus_1 = Gf2Poly::monomial(n) + Gf2Poly::one();
  if (!poly_divides(generator, x_n_minus_1))
    throw std::logic_error("generator_from_defining_set: generator does not divide x^n - 1");
  return generator;
}

}  // namespace codebounds
