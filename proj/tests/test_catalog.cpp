#include <set>

#include "doctest.h"
#include "eulerian/catalog.hpp"
#include "test_util.hpp"

using namespace eulerian;
namespace cat = eulerian::catalog;

TEST_CASE("registry is stable and complete") {
  const auto all = cat::list_identities();
  CHECK(all.size() == cat::kIdentityCount);
  CHECK(all.size() >= 27);

  std::set<std::string_view> names;
  std::set<cat::IdentityId> ids;
  for (std::size_t i = 0; i < all.size(); ++i) {
    names.insert(all[i].name);
    ids.insert(all[i].id);
    CHECK(static_cast<std::size_t>(all[i].id) == i);  // enum order
    CHECK(!all[i].description.empty());
    CHECK(!all[i].anchor.empty());
  }
  CHECK(names.size() == all.size());  // every tag appears exactly once
  CHECK(ids.size() == all.size());

  const auto& worpitzky = cat::identity_info(cat::IdentityId::EQ09_WORPITZKY);
  CHECK(worpitzky.name == "EQ09_WORPITZKY");
  CHECK(worpitzky.anchor == "Eq. (9)");
}

TEST_CASE("left and right sides never share their producing operation") {
  for (const auto& info : cat::list_identities()) {
    CHECK(info.lhs_path != info.rhs_path);
  }
}

TEST_CASE("tag parsing") {
  CHECK(cat::parse_identity("EQ09_WORPITZKY") == cat::IdentityId::EQ09_WORPITZKY);
  CHECK(cat::to_string(cat::IdentityId::EQ44_46_MOMENT) == "EQ44_46_MOMENT");
  CHECK_THROWS_AS(cat::parse_identity("EQ99"), UnknownIdentity);
}

TEST_CASE("single identity runs") {
  CHECK(cat::verify(cat::IdentityId::EQ09_WORPITZKY, 6).pass);
  CHECK(cat::verify(cat::IdentityId::EQ22_STIRLING_TRANSFORM, 0).pass);
  CHECK(cat::verify(cat::IdentityId::EQ11_POWER_SUM, 4, 6).pass);
  CHECK_THROWS_AS(cat::verify(cat::IdentityId::EQ11_POWER_SUM, 4), MissingSecondIndex);
  CHECK_THROWS_AS(cat::verify(cat::IdentityId::EQ09_WORPITZKY, -1), NegativeIndex);

  const auto report = cat::verify(cat::IdentityId::BRUTE_FORCE_EULERIAN, 12);
  CHECK(report.pass);
  CHECK(report.n_max == 8);  // enumeration bound
}

TEST_CASE("verify_all passes at the base cases and at a small range") {
  for (const auto& report : cat::verify_all(0)) {
    CHECK(report.pass);
    CHECK(!report.counterexample.has_value());
  }
  for (const auto& report : cat::verify_all(5)) {
    CHECK(report.pass);
  }
}

TEST_CASE("reports are deterministic") {
  const auto a = cat::verify(cat::IdentityId::EQ16_GF, 5);
  const auto b = cat::verify(cat::IdentityId::EQ16_GF, 5);
  CHECK(a.id == b.id);
  CHECK(a.pass == b.pass);
  CHECK(a.n_max == b.n_max);
  CHECK(a.counterexample.has_value() == b.counterexample.has_value());
}

TEST_CASE("corrupted eulerian triangle entry is caught with a counterexample") {
  cat::Session session;
  session.eulerian.poke(4, 2, BigInt(12));
  const auto report = cat::verify(cat::IdentityId::EQ02_VS_EQ04, 6, std::nullopt, &session);
  CHECK(!report.pass);
  REQUIRE(report.counterexample.has_value());
  CHECK(report.counterexample->indices == std::vector<long>{4, 2});
  CHECK(report.counterexample->lhs == "11");
  CHECK(report.counterexample->rhs == "12");
  CHECK(report.counterexample->diff == "-1");
}

TEST_CASE("seeded stirling sign error fails the transform and q-form checks") {
  cat::Session session;
  session.stirling.poke_s1(5, 3, BigInt(-35));  // true value is 35
  const auto reports = cat::verify_all(6, &session);
  std::set<cat::IdentityId> failed;
  for (const auto& r : reports) {
    if (!r.pass) {
      failed.insert(r.id);
      REQUIRE(r.counterexample.has_value());
      CHECK(!r.counterexample->lhs.empty());
      CHECK(!r.counterexample->rhs.empty());
    }
  }
  CHECK(failed.contains(cat::IdentityId::EQ22_STIRLING_TRANSFORM));
  CHECK(failed.contains(cat::IdentityId::EQ41_Q_FORM));
  CHECK(failed.contains(cat::IdentityId::EQ14_GF));
  CHECK(failed.contains(cat::IdentityId::STIRLING_ORTHOGONALITY));
  // untouched checks keep passing
  CHECK(!failed.contains(cat::IdentityId::EQ09_WORPITZKY));
  CHECK(!failed.contains(cat::IdentityId::BRUTE_FORCE_EULERIAN));
}

TEST_CASE("random-probe strategy agrees on pass and fail") {
  for (const auto& report : cat::verify_all(4, nullptr, cat::Strategy::RandomProbe)) {
    CHECK(report.pass);
  }
  cat::Session session;
  session.eulerian.poke(4, 2, BigInt(12));
  const auto report = cat::verify(cat::IdentityId::EQ02_VS_EQ04, 6, std::nullopt, &session,
                                  cat::Strategy::RandomProbe);
  CHECK(!report.pass);
}
