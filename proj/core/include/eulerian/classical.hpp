#pragma once

#include <vector>

#include "eulerian/ratfun.hpp"

namespace eulerian::classical {

/// Eulerian number ⟨n,m⟩ by the alternating closed form
/// Σ_l C(n+1,l)(−1)^l (m+1−l)^n, with ⟨0,0⟩ = 1 by convention.
BigInt eulerian_number(long n, long m);

/// Independent oracle: counts permutations of 1..n with exactly m ascents
/// by full enumeration. Bounded at n <= 9.
BigInt eulerian_bruteforce(long n, long m);

/// Ordered set partitions of an n-set, counted by enumerating all maps
/// [n] -> [n] whose image is an initial segment. Bounded at n <= 7.
BigInt fubini_bruteforce(long n);

/// Ascent-count triangle built by the two-term recurrence
/// ⟨n,m⟩ = (n−m)⟨n−1,m−1⟩ + (m+1)⟨n−1,m⟩. Rows extend on demand.
class EulerianTriangle {
 public:
  EulerianTriangle();

  void ensure(long n);
  /// ⟨n,m⟩; zero outside the stored row range.
  const BigInt& at(long n, long m);
  /// Row n as stored: m = 0..max(0, n-1).
  const std::vector<BigInt>& row(long n);
  /// A_n(t) = Σ_l ⟨n,l⟩ t^l.
  MPoly poly(long n);

  /// Overwrite one entry. Fault-injection hook used to demonstrate the
  /// verifier's sensitivity; never called by library code.
  void poke(long n, long m, const BigInt& value);

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Signed first-kind and second-kind Stirling triangles, built by their
/// standard recurrences, extended on demand.
class StirlingTriangles {
 public:
  StirlingTriangles();

  void ensure(long n);
  const BigInt& s1(long n, long k);
  const BigInt& s2(long n, long k);

  /// Fault-injection hook (see EulerianTriangle::poke).
  void poke_s1(long n, long k, const BigInt& value);

 private:
  std::vector<std::vector<BigInt>> s1_, s2_;
};

/// Frobenius–Euler numbers H_n(u) and polynomials H_n(x|u).
/// Numbers satisfy Σ_{k≤n} C(n,k)H_k(u) − u·H_n(u) = (1−u)δ_{0,n},
/// i.e. H_n(u) = Σ_{k<n} C(n,k)H_k(u)/(u−1) for n ≥ 1.
class FrobeniusEulerSequence {
 public:
  FrobeniusEulerSequence();

  void ensure(long n);
  const RatFun& number(long n);
  /// H_n(x|u) = Σ_k C(n,k) H_k(u) x^{n−k}; monic of x-degree n.
  RatFun poly(long n);

 private:
  std::vector<RatFun> numbers_;
};

// Convenience wrappers over one-shot local tables.
MPoly eulerian_poly(long n);
BigInt stirling1(long n, long k);
BigInt stirling2(long n, long k);
RatFun frobenius_euler_number(long n);
RatFun frobenius_euler_poly(long n);

}  // namespace eulerian::classical
