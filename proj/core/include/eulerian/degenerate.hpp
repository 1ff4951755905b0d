#pragma once

#include "eulerian/classical.hpp"

namespace eulerian::degenerate {

/// (x)_{n,λ} = x(x−λ)···(x−(n−1)λ), expanded.
MPoly falling_factorial(long n);
/// (base)_{n,λ} for an arbitrary λ-free-or-not base polynomial.
MPoly falling_factorial_of(const MPoly& base, long n);

/// ⟨x⟩_{n,λ} = x(x+λ)···(x+(n−1)λ), expanded.
MPoly rising_factorial(long n);
MPoly rising_factorial_of(const MPoly& base, long n);

/// |S_{1,λ}(n,l)|: coefficient of x^l in ⟨x⟩_{n,λ}.
MPoly unsigned_stirling1(long n, long l);

/// Degenerate Eulerian polynomial A_{n,λ}(t). Primary computation is the
/// division-free Stirling transform A_{n,λ}(t) = Σ_k A_k(t) λ^{n−k} S_1(n,k);
/// the other routes below exist as independent verification paths.
MPoly eulerian_poly(long n);
MPoly eulerian_poly(long n, classical::EulerianTriangle& tri, classical::StirlingTriangles& st);

/// Route via the self-contained recurrence
/// A_{n,λ}(t) = (t−1)^{-1} Σ_{k<n} C(n,k) A_{k,λ}(t) (t−1)_{n−k,λ},
/// where the division must be exact (NonExactDivision otherwise).
MPoly eulerian_poly_recursive(long n);
std::vector<MPoly> eulerian_poly_recursive_family(long n_max);

/// Route via the generating function (1−t)/((1+λx)^{(t−1)/λ} − t):
/// n! times the x^n series coefficient.
MPoly eulerian_poly_series(long n);
std::vector<MPoly> eulerian_poly_series_family(long n_max);

/// Route via Frobenius–Euler numbers:
/// A_{n,λ}(t) = Σ_k λ^{n−k} S_1(n,k) H_k(t) (t−1)^k.
MPoly eulerian_poly_frobenius(long n, classical::StirlingTriangles& st,
                              classical::FrobeniusEulerSequence& fe);

/// Degenerate Eulerian number ⟨n,l⟩_λ: coefficient of t^l in A_{n,λ}(t).
MPoly eulerian_number(long n, long l);
MPoly eulerian_number(long n, long l, classical::EulerianTriangle& tri,
                      classical::StirlingTriangles& st);
/// Route ⟨n,l⟩_λ = Σ_{k=l..n} ⟨k,l⟩ λ^{n−k} S_1(n,k) from the triangle.
MPoly eulerian_number_stirling(long n, long l, classical::EulerianTriangle& tri,
                               classical::StirlingTriangles& st);
/// Route with the inner alternating closed form in place of ⟨k,l⟩.
MPoly eulerian_number_closed(long n, long l, classical::StirlingTriangles& st);

/// Degenerate ordered Bell number b_{n,λ} = A_{n,λ}(2) = Σ_l ⟨n,l⟩_λ 2^l.
MPoly ordered_bell(long n);
MPoly ordered_bell(long n, classical::EulerianTriangle& tri, classical::StirlingTriangles& st);
/// Route via the generating function 1/(2 − (1+λt)^{1/λ}).
MPoly ordered_bell_gf(long n);
std::vector<MPoly> ordered_bell_gf_family(long n_max);
/// Route b_{n,λ} = Σ_k λ^{n−k} S_1(n,k) H_k(2).
MPoly ordered_bell_frobenius(long n, classical::StirlingTriangles& st,
                             classical::FrobeniusEulerSequence& fe);

/// Degenerate ordered Bell polynomial b_{n,λ}(x): n! times the t^n
/// coefficient of (1+λt)^{x/λ}/(2 − (1+λt)^{1/λ}).
MPoly ordered_bell_poly(long n);
std::vector<MPoly> ordered_bell_poly_family(long n_max);

/// Frobenius–Euler number at u = −q, reduced; denominator divides (1+q)^n.
RatFun h_at_minus_q(long n);
RatFun h_at_minus_q(long n, classical::FrobeniusEulerSequence& fe);

/// Fermionic moment Σ_l |S_{1,λ/(1+q)}(n,l)| H_l(−q); equals
/// (−1)^n A_{n,λ}(−q)/(1+q)^n.
RatFun fermionic_moment(long n);
RatFun fermionic_moment(long n, classical::FrobeniusEulerSequence& fe);

}  // namespace eulerian::degenerate
