#include "displace/checkers/certificate.hpp"

namespace displace {

std::string to_string(Property p) {
  switch (p) {
    case Property::CC: return "CC";
    case Property::CCC: return "CCC";
    case Property::CZC: return "CZC";
    case Property::CZNC: return "CZNC";
    case Property::M: return "M";
    case Property::Binate: return "BINATE";
    case Property::Mitotic: return "MITOTIC";
    case Property::Dissipator: return "DISSIPATOR";
  }
  return "UNKNOWN";
}

Property parse_property(const std::string& text) {
  for (Property p : {Property::CC, Property::CCC, Property::CZC, Property::CZNC, Property::M, Property::Binate,
                     Property::Mitotic, Property::Dissipator}) {
    if (to_string(p) == text) return p;
  }
  throw ParseError("unknown property '" + text + "'");
}

Property WitnessCertificate::property() const {
  static constexpr Property kByIndex[] = {Property::CC,     Property::CCC,    Property::CZC,     Property::CZNC,
                                          Property::M,      Property::Binate, Property::Mitotic, Property::Dissipator};
  return kByIndex[witness.index()];
}

}  // namespace displace
