#ifndef JETPVA_RINGIO_HPP
#define JETPVA_RINGIO_HPP

#include <string>

#include "jetpva/jet.hpp"

namespace jetpva {

// JSON presentation format:
// {
//   "vars": ["e", "h", "f"],
//   "relations": ["..."],                   (optional)
//   "poisson": [["0", "-2*e", "h"], ...],   (optional, vars x vars)
//   "weights": {"e": 4, "h": 2, "f": 0}     (optional)
// }
// Polynomials use the canonical text grammar. Throws ParseError with the
// offending field in the message.
RingPresentation parse_ring_json(const std::string& text);
RingPresentation load_ring(const std::string& path);

std::string ring_to_json(const RingPresentation& R);

} // namespace jetpva

#endif
