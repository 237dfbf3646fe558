#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "starconf/star.hpp"

namespace starconf {

enum class ClassVerdict { AlwaysYes, GenericYes, GenericNo, GenericNoLargeD, Unknown, Infeasible };

std::string to_string(ClassVerdict v);

/// Answer to: can the generic degree-d form in n+1 variables be written as
/// sum L_sigma M_sigma with l general linear forms and |sigma| = r?
///
/// `case_label` names the clause of the classification that decides the tuple:
///   "(1)"             l-r+1 < n, negative only for d large
///   "(2)(i)".."(2)(viii)" the positive list when l-r+1 = n (also "(2)(v)" for the d=4 negative)
///   "(3)"             l-r+1 > n, every form decomposes
///   "bound"           l-r+1 = n excluded by the dimension count l*n - C(l,n) < 0
///   "restriction"     r > min(d, l)
struct Classification {
  TupleNLRD tuple;
  ClassVerdict verdict = ClassVerdict::Unknown;
  std::string case_label;
  std::optional<std::int64_t> bound_value;  // l*n - C(l,n), present when l-r+1 = n
  /// For GenericNoLargeD: the status at this particular d, which is always Unknown.
  std::optional<ClassVerdict> at_this_d;

  /// "GenericNoLargeD/Unknown" style display form.
  std::string verdict_text() const;
};

Classification classify(int n, int l, int r, int d);

/// l*n - C(l, n); a negative value excludes the tuple (n, l, l-n+1, d) for every d.
std::int64_t dimension_bound(int n, int l);

nlohmann::ordered_json to_json(const Classification& c);

}  // namespace starconf
