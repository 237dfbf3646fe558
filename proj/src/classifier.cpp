#include "starconf/classifier.hpp"

#include <stdexcept>

#include "starconf/combinatorics.hpp"

namespace starconf {

std::string to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::AlwaysYes: return "AlwaysYes";
    case ClassVerdict::GenericYes: return "GenericYes";
    case ClassVerdict::GenericNo: return "GenericNo";
    case ClassVerdict::GenericNoLargeD: return "GenericNoLargeD";
    case ClassVerdict::Unknown: return "Unknown";
    case ClassVerdict::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

std::string Classification::verdict_text() const {
  if (at_this_d) return to_string(verdict) + "/" + to_string(*at_this_d);
  return to_string(verdict);
}

std::int64_t dimension_bound(int n, int l) {
  if (n < 1 || l < n) throw std::invalid_argument("dimension_bound: need 1 <= n <= l");
  return static_cast<std::int64_t>(l) * n - binomial(l, n);
}

namespace {

const char* kRoman[] = {"", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};

std::string positive_case(int idx) { return std::string("(2)(") + kRoman[idx] + ")"; }

}  // namespace

Classification classify(int n, int l, int r, int d) {
  if (n < 1 || l < 1 || r < 1 || d < 1) throw std::invalid_argument("classify: all entries must be positive");
  Classification c;
  c.tuple = {n, l, r, d};
  if (!c.tuple.feasible()) {
    c.verdict = ClassVerdict::Infeasible;
    c.case_label = "restriction";
    return c;
  }
  const int codim = l - r + 1;
  if (codim > n) {
    c.verdict = ClassVerdict::AlwaysYes;
    c.case_label = "(3)";
    return c;
  }
  if (codim < n) {
    c.verdict = ClassVerdict::GenericNoLargeD;
    c.at_this_d = ClassVerdict::Unknown;
    c.case_label = "(1)";
    return c;
  }

  c.bound_value = dimension_bound(n, l);
  auto yes = [&](int idx) {
    c.verdict = ClassVerdict::GenericYes;
    c.case_label = positive_case(idx);
  };
  auto no_by_bound = [&] {
    c.verdict = ClassVerdict::GenericNo;
    c.case_label = "bound";
  };

  if (n == 1) {
    yes(1);  // l = r and d >= l by feasibility
  } else if (n == 2) {
    switch (l) {
      case 2: yes(2); break;
      case 3: yes(3); break;
      case 4: yes(4); break;
      case 5:
        if (d >= 5) {
          yes(5);
        } else {
          c.verdict = ClassVerdict::GenericNo;
          c.case_label = positive_case(5);
        }
        break;
      default: no_by_bound(); break;
    }
  } else {
    if (l == n) {
      yes(6);
    } else if (l == n + 1) {
      yes(7);
    } else if (l == n + 2) {
      yes(8);
    } else {
      no_by_bound();
    }
  }
  return c;
}

nlohmann::ordered_json to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["tuple"] = {{"n", c.tuple.n}, {"l", c.tuple.l}, {"r", c.tuple.r}, {"d", c.tuple.d}};
  j["verdict"] = to_string(c.verdict);
  j["at_this_d"] = c.at_this_d ? nlohmann::ordered_json(to_string(*c.at_this_d)) : nlohmann::ordered_json(nullptr);
  j["case"] = c.case_label;
  j["bound_value"] = c.bound_value ? nlohmann::ordered_json(*c.bound_value) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace starconf
