#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace psing::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;     // internal error or failed property
inline constexpr int kInvalid = 2;     // validation / usage error
inline constexpr int kCapExceeded = 3; // enumeration cap hit

/// Fixed CSV header for classification rows (classify, search, table).
inline constexpr const char* kRowCsvHeader =
    "p,rep,d,l,codim,D,delta,class,cm,maximizers,upper_bound,lower_bound";
/// Fixed CSV header for shift profiles.
inline constexpr const char* kProfileCsvHeader = "s,sht,jump,nu";
/// Value of the top-level "schema" field in every json document.
inline constexpr const char* kJsonSchema = "psing/1";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psing::cli
