#pragma once

#include <string>

#include "mpd/betti.hpp"
#include "mpd/complex.hpp"
#include "mpd/oracle.hpp"

namespace mpd {

// Text format `mpfil <N> <p>`, then one simplex per line as
// `<g1> ... <gN> ; <v0> ... <vk>`.  `#` starts a comment, blank lines are
// skipped; serialization is canonical (header + simplices in stored order).
// The field order p travels in the header only; parse reports it through
// p_out when requested.
Multifiltration parse_filtration(const std::string& text, uint32_t* p_out = nullptr);
std::string serialize_filtration(const Multifiltration& k, uint32_t p);

// Text format `fcc <N> <p> <lo> <hi>`, then per degree `gens <d>:` with one
// grade tuple per line, then per differential `map <d>` with one line
// `col <j>: <i>:<c> ...` per column (rows ascending, residues in [0, p)).
// Validity and boundary-squared are asserted on load unless verify = false.
FreeComplex parse_complex(const std::string& text, bool verify = true);
std::string serialize_complex(const FreeComplex& c);

// CSV emitters; deterministic byte output, header always present.
std::string emit_betti(const BettiTable& t, int params);
std::string emit_hilbert(const HilbertFunction& h);
std::string emit_barcode(const Barcode& b, int degree);

}  // namespace mpd
