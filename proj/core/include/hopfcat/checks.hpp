#pragma once

#include "hopfcat/linmap.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// Records lhs == rhs in the report, decoding the first differing entry into
/// basis labels as the witness.
void check_equal(Report& rep, const std::string& id, const std::string& anchor, const LinMap& lhs,
                 const LinMap& rhs);

}  // namespace hopfcat
