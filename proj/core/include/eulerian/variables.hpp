#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace eulerian {

/// The closed variable universe, in canonical order.
enum class Var : std::uint8_t { X = 0, T = 1, Lambda = 2, U = 3, Q = 4 };

inline constexpr std::size_t kVarCount = 5;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::X, Var::T, Var::Lambda,
                                                        Var::U, Var::Q};

constexpr std::size_t var_index(Var v) { return static_cast<std::size_t>(v); }

std::string_view var_name(Var v);

/// Accepts canonical names plus the ASCII alias "lambda".
std::optional<Var> var_from_name(std::string_view name);

/// Monomial exponents over the fixed universe (x, t, λ, u, q).
using ExpVec = std::array<std::uint32_t, kVarCount>;

inline std::uint64_t total_degree(const ExpVec& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded-lexicographic term order: total degree first, then lexicographic
/// with x the most significant variable.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

}  // namespace eulerian
