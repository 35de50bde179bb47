#pragma once

#include <string>
#include <vector>

#include "holder/domain.hpp"

namespace holder {

/// Sector S_theta = {|Arg w| < theta/2}, 0 < theta <= 2pi (2pi = slit plane).
DomainSpec make_sector(double theta);

/// Koebe domain C \ (-inf, -1/4], the image of z/(1-z)^2.
DomainSpec make_koebe();

/// Parallel strip {|Im w| < pi/2}; the negative control (not Holder).
DomainSpec make_strip();

/// Sector translated by `offset`; exercises the 0 not-in-D branches.
DomainSpec make_translated_sector(double theta, Complex offset);

/// Resolves "sector:<theta>", "sector:<theta>:offset=<re>,<im>", "koebe",
/// "strip". Throws UnknownDomain / BadParameter.
DomainSpec parse_domain(const std::string& name);

/// The default analysis catalog (six sectors, koebe, strip, one translated
/// sector with the origin outside).
std::vector<DomainSpec> default_catalog();

}  // namespace holder
