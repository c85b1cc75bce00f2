#pragma once

#include <cstdint>
#include <vector>

#include "linkgate/laurent.hpp"
#include "linkgate/polymatrix.hpp"

namespace linkgate {

// Element of Q(zeta) for zeta a primitive q^l-th root of unity, realized
// as Q[x]/Phi_{q^l}(x) with exact rational coefficients.
class Cyclo {
 public:
  Cyclo() : q_(2), l_(1), c_(1, 0) {}
  Cyclo(int q, int l);  // zero

  static Cyclo from_rat(int q, int l, const Rat& r);
  static Cyclo zeta_pow(int q, int l, long long e);

  int q() const { return q_; }
  int l() const { return l_; }
  bool is_zero() const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo inverse() const;  // element must be nonzero
  bool operator==(const Cyclo& o) const = default;

 private:
  int q_, l_;
  std::vector<Rat> c_;  // degree < phi(q^l), reduced mod Phi
  void reduce(std::vector<Rat>& raw) const;
};

// Chain complex of free Z[t^+-]-modules (G = Z): boundary[k] maps C_k to
// C_{k-1} for k = 1..N; dims[k] = rank of C_k. dd = 0 is checked.
struct FreeChainComplex {
  std::vector<int> dims;             // size N+1
  std::vector<PolyMatrix> boundary;  // size N; boundary[k-1] is d_k

  static FreeChainComplex make(std::vector<int> dims,
                               std::vector<PolyMatrix> boundary);
  const PolyMatrix* del(int k) const;  // d_k or null when out of range
};

// Induced representation data for G = Z, K = ker(Z -> Z/t) = tZ, with
// alpha(x^t) = zeta^c, zeta of order q^l. alpha'(x) is the t x t companion
// block with zeta^c in the corner; the twist sends x to alpha'(x) * s.
struct TwistData {
  int q = 2;
  int l = 1;
  int c = 0;
  int t = 2;
};

// alpha'(x)^e as a t x t matrix over Q(zeta) (the s-power is e uniformly).
std::vector<std::vector<Cyclo>> induced_power(const TwistData& rho, int e);

// dim over Z/q of H_n of the augmented complex (x -> 1, coefficients in
// the field Z/q); q must be prime.
int homology_dim_modq(const FreeChainComplex& C, int n, int qprime);

// dim over Q(zeta)(s) of H_n with coefficients twisted by rho.
int homology_dim_twisted(const FreeChainComplex& C, const TwistData& rho,
                         int n);

struct Thm23Result {
  int left = 0;   // dim_{Q(zeta)(s)} H_n(twisted) / M
  int right = 0;  // t * dim_{Z/q} H_n(mod q) / M-bar
  bool holds() const { return left <= right; }
};

// Twisted-vs-mod-q rank inequality for a finite collection of n-cycles
// (columns over
// Z[t^+-]); throws if a supplied column is not a cycle.
Thm23Result check_thm23(const FreeChainComplex& C, const TwistData& rho,
                        int qprime,
                        const std::vector<std::vector<LaurentPoly>>& cycles,
                        int n);

// Seeded random instance of the desk-scale family (G = Z, A = Z/p with
// p in {2,3}, boundary matrices up to 4x4, dd = 0 by construction).
struct RandomInstance {
  FreeChainComplex C;
  TwistData rho;
  int qprime = 2;
  std::vector<std::vector<LaurentPoly>> cycles;
  int n = 1;
};

RandomInstance random_instance(std::uint64_t seed);

}  // namespace linkgate
