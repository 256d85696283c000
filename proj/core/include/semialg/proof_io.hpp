#pragma once

#include <iosfwd>
#include <string>

#include "semialg/proof.hpp"

namespace semialg {

// Proof files are JSON Lines (UTF-8, one object per line): a header object
//   {"format":"saj1","field":p,"mode":"f2"|"fp","hypotheses":[poly strings]}
// followed by one object per proof line, in id order:
//   {"id":n,"kind":"axiom","axiom":"nonneg"|"compl"|"bool_up"|"bool_down","var":name,"poly":s}
//   {"id":n,"kind":"hyp","index":k,"poly":s}
//   {"id":n,"kind":"lincomb","p1":i,"a":frac,"p2":j,"b":frac,"poly":s}
//   {"id":n,"kind":"mult_var"|"mult_compl","p1":i,"var":name,"poly":s}
// Serialization round-trips byte-for-byte on canonical files.
void write_proof(std::ostream& os, const Proof& proof);
Proof read_proof(std::istream& is);

std::string proof_to_string(const Proof& proof);
Proof proof_from_string(const std::string& text);

}  // namespace semialg
