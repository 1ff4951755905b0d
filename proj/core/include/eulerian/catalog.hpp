#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/degenerate.hpp"

namespace eulerian::catalog {

/// One tag per numbered identity under verification.
enum class IdentityId {
  EQ01_GF,
  EQ02_VS_EQ04,
  EQ05_GF,
  EQ06_UMBRAL,
  EQ07_COEFFS,
  EQ08_TABLE,
  EQ09_WORPITZKY,
  EQ10_RECURSION,
  EQ11_POWER_SUM,
  EQ12_GF,
  EQ13_GF,
  EQ14_GF,
  EQ15_GF,
  EQ16_GF,
  EQ18_UMBRAL_DEG,
  EQ20_RECURSION_DEG,
  EQ22_STIRLING_TRANSFORM,
  EQ23_25_28_NUMBERS,
  EQ26_27_ORDERED_BELL,
  EQ30_FROBENIUS_FORM,
  EQ31_BELL_FROBENIUS,
  EQ41_Q_FORM,
  EQ44_46_MOMENT,
  LIMIT_LAMBDA_ZERO,
  BRIDGE_A_EQUALS_H,
  STIRLING_ORTHOGONALITY,
  BRUTE_FORCE_EULERIAN,
};

inline constexpr std::size_t kIdentityCount = 27;

struct IdentityInfo {
  IdentityId id;
  std::string_view name;         // stable tag, e.g. "EQ09_WORPITZKY"
  std::string_view description;  // human description
  std::string_view anchor;       // equation anchor, e.g. "Eq. (9)"
  std::string_view lhs_path;     // producing operation of the left side
  std::string_view rhs_path;     // producing operation of the right side
  bool needs_m = false;          // two-index identity
};

struct Counterexample {
  std::vector<long> indices;
  std::string lhs;
  std::string rhs;
  std::string diff;
};

struct IdentityReport {
  IdentityId id;
  long n_max = 0;
  std::optional<long> m_max;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  std::chrono::duration<double> elapsed{0};
};

/// Shared sequence tables. Checks draw classical values from here so a
/// test can corrupt one entry (poke) and watch the verifier catch it.
struct Session {
  classical::EulerianTriangle eulerian;
  classical::StirlingTriangles stirling;
  classical::FrobeniusEulerSequence frobenius;
};

/// Comparison strategy. Symbolic (full polynomial / rational-function
/// equality) is the default and the only mode used for acceptance;
/// RandomProbe evaluates both sides at three random rational points per
/// variable and is a fast smoke mode.
enum class Strategy { Symbolic, RandomProbe };

/// Stable, complete registry (one entry per IdentityId, in enum order).
std::span<const IdentityInfo> list_identities();

const IdentityInfo& identity_info(IdentityId id);
std::string_view to_string(IdentityId id);
/// Throws UnknownIdentity for unrecognized tags.
IdentityId parse_identity(std::string_view name);

/// Run one identity check over indices 0..n_max (and 1..m_max for the
/// two-index checks, which throw MissingSecondIndex when m_max is absent).
IdentityReport verify(IdentityId id, long n_max, std::optional<long> m_max = std::nullopt,
                      Session* session = nullptr, Strategy strategy = Strategy::Symbolic);

/// Run every registered identity at its default range; two-index checks
/// use m_max = 6. Enumeration-bounded checks clamp themselves.
std::vector<IdentityReport> verify_all(long n_max, Session* session = nullptr,
                                       Strategy strategy = Strategy::Symbolic);

}  // namespace eulerian::catalog
