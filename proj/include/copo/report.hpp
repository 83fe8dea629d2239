#pragma once

#include <string>
#include <utility>
#include <vector>

#include "copo/element_set.hpp"

namespace copo {

enum class Verdict { Holds, Fails, NotApplicable };

std::string_view to_string(Verdict v);

/// A set evaluated while checking a condition, kept for display and for
/// golden comparisons.
struct Evidence {
  std::string label;
  ElementSet members;
};

/// Outcome of one property check.
///
/// A failing report always names a witness tuple; re-evaluating `condition`
/// on that tuple reproduces the failure (see recheck_witness in
/// properties.hpp). Witness elements index the poset the check ran on.
struct CheckReport {
  std::string condition;
  Verdict verdict = Verdict::Holds;
  std::vector<Element> witness;
  std::vector<Evidence> evidence;
  std::string note;

  bool holds() const { return verdict == Verdict::Holds; }
  bool fails() const { return verdict == Verdict::Fails; }

  static CheckReport pass(std::string condition) {
    return CheckReport{std::move(condition), Verdict::Holds, {}, {}, {}};
  }
  static CheckReport fail(std::string condition, std::vector<Element> witness,
                          std::vector<Evidence> evidence = {}) {
    return CheckReport{std::move(condition), Verdict::Fails, std::move(witness), std::move(evidence), {}};
  }
  static CheckReport not_applicable(std::string condition, std::string why) {
    return CheckReport{std::move(condition), Verdict::NotApplicable, {}, {}, std::move(why)};
  }
};

} // namespace copo
