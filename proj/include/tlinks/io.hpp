#pragma once

// File formats and inline notation:
//   braid text       line 1 "strands: N", line 2 whitespace-separated letters
//   code words       one component per line, "x^10 y^2 x^5 ..."
//   vectors          "<2^3,4^2>" (exponent 1 may be omitted)
//   T-link           "T((2,3),(4,6))"
//   generalised      "T((2,3),(4,-4);d=0)"   (last pair is the signed block)
//   twisted          "T^-2((2,5),(2;0))"     (final element is (r_last; d))
// plus JSON mirrors for parameters, braids, PD codes and polynomials.

#include <string>

#include "json.hpp"
#include "tlinks/braid.hpp"
#include "tlinks/laurent.hpp"
#include "tlinks/lorenz.hpp"
#include "tlinks/pd.hpp"
#include "tlinks/tlink.hpp"

namespace tlinks {

BraidWord parse_braid_text(const std::string& text);
std::string braid_to_text(const BraidWord& b);
BraidWord read_braid_file(const std::string& path);
void write_braid_file(const std::string& path, const BraidWord& b);

CodeWordSet parse_code_words(const std::string& text);
std::string code_words_to_text(const CodeWordSet& cw);

LorenzVector parse_vector(const std::string& text);
std::string vector_to_text(const LorenzVector& v);

TLinkParams parse_tlink(const std::string& text);
GenTLinkParams parse_gen_tlink(const std::string& text);
TnLinkParams parse_tn_link(const std::string& text);

std::string tlink_to_text(const TLinkParams& t);
std::string gen_tlink_to_text(const GenTLinkParams& g);
std::string tn_link_to_text(const TnLinkParams& t);

nlohmann::json braid_to_json(const BraidWord& b);
BraidWord braid_from_json(const nlohmann::json& j);
nlohmann::json pd_to_json(const PDCode& pd);
nlohmann::json code_words_to_json(const CodeWordSet& cw);
CodeWordSet code_words_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const LorenzVector& v);
nlohmann::json gen_tlink_to_json(const GenTLinkParams& g);
GenTLinkParams gen_tlink_from_json(const nlohmann::json& j);
nlohmann::json tn_link_to_json(const TnLinkParams& t);
TnLinkParams tn_link_from_json(const nlohmann::json& j);
nlohmann::json laurent_to_json(const LaurentPoly& p);

}  // namespace tlinks
