#pragma once

#include <string>

#include "selfsim/defining.hpp"

namespace selfsim {

// Defining-matrix file format:
//   # comment lines start with '#'
//   base <b>
//   ring q | gf <p> | qt
//   then b rows of b whitespace-separated tokens.
// Token grammar: integer | a/b | poly:[c0;c1;...] | poly:[...]/[...]
// with polynomial coefficients ascending in t, each an integer or a/b.
AnyDefining parse_defining_file(const std::string& text);

AnyDefining load_defining_file(const std::string& path);

std::string serialize_defining(const AnyDefining& def);

RingTag ring_tag_of(const AnyDefining& def);
int base_of(const AnyDefining& def);

}  // namespace selfsim
