#include "eulerian/classical.hpp"

#include <algorithm>
#include <numeric>

namespace eulerian::classical {

namespace {
const BigInt kZero(0);
}

BigInt eulerian_number(long n, long m) {
  if (n < 0 || m < 0) throw NegativeIndex("eulerian_number wants n, m >= 0");
  if (n == 0) return m == 0 ? BigInt(1) : BigInt(0);
  BigInt acc(0);
  for (long l = 0; l <= m + 1; ++l) {
    const BigInt term =
        binomial(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(l)) *
        int_pow(BigInt(m + 1 - l), static_cast<unsigned long>(n));
    if (l % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

BigInt eulerian_bruteforce(long n, long m) {
  if (n < 0 || m < 0) throw NegativeIndex("eulerian_bruteforce wants n, m >= 0");
  if (n > 9) throw OracleBoundExceeded("eulerian_bruteforce enumerates up to n = 9");
  if (n == 0) return m == 0 ? BigInt(1) : BigInt(0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    long ascents = 0;
    for (std::size_t i = 1; i < perm.size(); ++i) {
      if (perm[i] > perm[i - 1]) ++ascents;
    }
    if (ascents == m) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInt(count);
}

BigInt fubini_bruteforce(long n) {
  if (n < 0) throw NegativeIndex("fubini_bruteforce wants n >= 0");
  if (n > 7) throw OracleBoundExceeded("fubini_bruteforce enumerates up to n = 7");
  if (n == 0) return BigInt(1);
  // Every ordered set partition is a surjection onto an initial segment
  // {1..k}: element i goes to block f(i).
  std::vector<int> f(static_cast<std::size_t>(n), 1);
  long count = 0;
  while (true) {
    int hi = 0;
    for (int v : f) hi = std::max(hi, v);
    std::vector<bool> seen(static_cast<std::size_t>(hi) + 1, false);
    for (int v : f) seen[static_cast<std::size_t>(v)] = true;
    bool initial = true;
    for (int v = 1; v <= hi; ++v) initial = initial && seen[static_cast<std::size_t>(v)];
    if (initial) ++count;
    std::size_t i = 0;
    while (i < f.size() && f[i] == n) f[i++] = 1;
    if (i == f.size()) break;
    ++f[i];
  }
  return BigInt(count);
}

EulerianTriangle::EulerianTriangle() { rows_.push_back({BigInt(1)}); }

void EulerianTriangle::ensure(long n) {
  if (n < 0) throw NegativeIndex("triangle row index must be nonnegative");
  while (static_cast<long>(rows_.size()) <= n) {
    const long r = static_cast<long>(rows_.size());
    const auto& prev = rows_.back();
    auto get = [&](long m) -> const BigInt& {
      if (m < 0 || m >= static_cast<long>(prev.size())) return kZero;
      return prev[static_cast<std::size_t>(m)];
    };
    std::vector<BigInt> row(static_cast<std::size_t>(r));
    for (long m = 0; m < r; ++m) {
      row[static_cast<std::size_t>(m)] = BigInt(r - m) * get(m - 1) + BigInt(m + 1) * get(m);
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& EulerianTriangle::at(long n, long m) {
  if (n < 0 || m < 0) throw NegativeIndex("triangle indices must be nonnegative");
  ensure(n);
  const auto& row = rows_[static_cast<std::size_t>(n)];
  if (m >= static_cast<long>(row.size())) return kZero;
  return row[static_cast<std::size_t>(m)];
}

const std::vector<BigInt>& EulerianTriangle::row(long n) {
  ensure(n);
  return rows_[static_cast<std::size_t>(n)];
}

MPoly EulerianTriangle::poly(long n) {
  ensure(n);
  MPoly out;
  const auto& row = rows_[static_cast<std::size_t>(n)];
  for (std::size_t l = 0; l < row.size(); ++l) {
    ExpVec e{};
    e[var_index(Var::T)] = static_cast<std::uint32_t>(l);
    out.add_term(e, Rational(row[l]));
  }
  return out;
}

void EulerianTriangle::poke(long n, long m, const BigInt& value) {
  ensure(n);
  rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(m)) = value;
}

StirlingTriangles::StirlingTriangles() {
  s1_.push_back({BigInt(1)});
  s2_.push_back({BigInt(1)});
}

void StirlingTriangles::ensure(long n) {
  if (n < 0) throw NegativeIndex("triangle row index must be nonnegative");
  while (static_cast<long>(s1_.size()) <= n) {
    const long r = static_cast<long>(s1_.size());
    const auto& p1 = s1_.back();
    const auto& p2 = s2_.back();
    auto get = [](const std::vector<BigInt>& row, long k) -> const BigInt& {
      if (k < 0 || k >= static_cast<long>(row.size())) return kZero;
      return row[static_cast<std::size_t>(k)];
    };
    std::vector<BigInt> r1(static_cast<std::size_t>(r) + 1);
    std::vector<BigInt> r2(static_cast<std::size_t>(r) + 1);
    for (long k = 0; k <= r; ++k) {
      r1[static_cast<std::size_t>(k)] = get(p1, k - 1) - BigInt(r - 1) * get(p1, k);
      r2[static_cast<std::size_t>(k)] = get(p2, k - 1) + BigInt(k) * get(p2, k);
    }
    s1_.push_back(std::move(r1));
    s2_.push_back(std::move(r2));
  }
}

const BigInt& StirlingTriangles::s1(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw IndexOutOfTriangle("stirling1 wants 0 <= k <= n");
  ensure(n);
  return s1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BigInt& StirlingTriangles::s2(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw IndexOutOfTriangle("stirling2 wants 0 <= k <= n");
  ensure(n);
  return s2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void StirlingTriangles::poke_s1(long n, long k, const BigInt& value) {
  ensure(n);
  s1_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k)) = value;
}

FrobeniusEulerSequence::FrobeniusEulerSequence() { numbers_.push_back(RatFun(1)); }

void FrobeniusEulerSequence::ensure(long n) {
  if (n < 0) throw NegativeIndex("frobenius_euler index must be nonnegative");
  const RatFun u_minus_1(MPoly::variable(Var::U) - MPoly(1));
  while (static_cast<long>(numbers_.size()) <= n) {
    const unsigned long m = numbers_.size();
    RatFun acc;
    for (unsigned long k = 0; k < m; ++k) {
      acc += RatFun(Rational(binomial(m, k))) * numbers_[k];
    }
    numbers_.push_back(acc / u_minus_1);
  }
}

const RatFun& FrobeniusEulerSequence::number(long n) {
  ensure(n);
  return numbers_[static_cast<std::size_t>(n)];
}

RatFun FrobeniusEulerSequence::poly(long n) {
  ensure(n);
  RatFun acc;
  const MPoly x = MPoly::variable(Var::X);
  for (long k = 0; k <= n; ++k) {
    acc += RatFun(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)))) *
           numbers_[static_cast<std::size_t>(k)] *
           RatFun(x.pow(static_cast<unsigned long>(n - k)));
  }
  return acc;
}

MPoly eulerian_poly(long n) {
  EulerianTriangle tri;
  return tri.poly(n);
}

BigInt stirling1(long n, long k) {
  StirlingTriangles st;
  return st.s1(n, k);
}

BigInt stirling2(long n, long k) {
  StirlingTriangles st;
  return st.s2(n, k);
}

RatFun frobenius_euler_number(long n) {
  FrobeniusEulerSequence fe;
  return fe.number(n);
}

RatFun frobenius_euler_poly(long n) {
  FrobeniusEulerSequence fe;
  return fe.poly(n);
}

}  // namespace eulerian::classical
