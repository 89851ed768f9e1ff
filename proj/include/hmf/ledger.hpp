#pragma once

#include <iosfwd>
#include <string>

#include "hmf/hermitian.hpp"
#include "hmf/jacobi.hpp"
#include "hmf/paramodular.hpp"
#include "hmf/qseries.hpp"
#include "hmf/vvform.hpp"

namespace hmf {

// Plain-text coefficient ledgers: a header of "key: value" lines, a "begin"
// line, one record per line with space-separated index fields and the exact
// coefficient, then "end". Records are sorted by index tuple, so serialization
// is deterministic and round-trips are the identity.

std::string to_ledger(const QSeries& f, const std::string& name = "");
std::string to_ledger(const VVForm& f, const std::string& name = "");
std::string to_ledger(const JacobiForm& f, const std::string& name = "");
std::string to_ledger(const ParamExp& f, const std::string& name = "");
std::string to_ledger(const HermExp& f);

QSeries qseries_from_ledger(const std::string& text);
VVForm vvform_from_ledger(const std::string& text);
JacobiForm jacobi_from_ledger(const std::string& text);
ParamExp param_from_ledger(const std::string& text);
HermExp herm_from_ledger(const std::string& text);

// Kind tag of a serialized ledger ("qseries", "vvform", ...).
std::string ledger_kind(const std::string& text);

} // namespace hmf
