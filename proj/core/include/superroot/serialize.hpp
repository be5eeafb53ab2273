#ifndef SUPERROOT_SERIALIZE_HPP
#define SUPERROOT_SERIALIZE_HPP

#include <string>
#include <vector>

#include "superroot/characters.hpp"
#include "superroot/levi.hpp"
#include "superroot/verify.hpp"

namespace superroot {

// Encodings
//
// json   Rationals are strings "p/q" (denominator always present). Roots are
//        {"coeffs": [...], "delta": d}. Objects keep a fixed key order and
//        the output ends with a newline. Census reports are one compact
//        object per line.
// dot    Diagrams only:
//          graph "<name>" {
//            n<i> [label="alpha_<i>", parity="even|odd", isotropic="true|false"];
//            n<i> -- n<j> [mult=<k>, toward="n<t>"];   toward only for arrows
//          }
// ascii  Plain text. Characters print as "1 + q + 2q^2 + ...".
enum class Format { Json, Dot, Ascii };

Format parse_format(const std::string& name);
std::string to_string(Format format);

std::string export_finite(const FiniteRootSystem& sys, Format format);
std::string export_affine(const AffineRootSystem& aff, Format format);
std::string export_roots(const AffineRootSystem& aff, const std::vector<Root>& roots, Format format);
std::string export_finite_roots(const FiniteRootSystem& sys, const std::vector<Root>& roots, Format format);
std::string export_diagram(const DynkinDiagram& diagram, const std::string& name, Format format);
std::string export_base(const AffineRootSystem& aff, const Base& base, bool valid, Format format);
std::string export_decomposition(const ParabolicSubset& p, const Decomposition& d, const ParabolicCheck& check,
                                 Format format);
std::string export_levi_report(const LeviReport& report, Format format);
std::string export_census(const std::vector<LeviReport>& census, Format format);
std::string export_character(const GradedCharacter& ch, Format format);
std::string export_weight_character(const WeightCharacter& ch, Format format);
std::string export_report(const Report& report, Format format);

/// "1 + q + 2q^2 + 3q^3" (zero terms dropped; "0" if all vanish).
std::string q_series(const std::vector<std::int64_t>& dims);

} // namespace superroot

#endif
