#include "mwlat/format.hpp"

namespace mwlat {

void append_element_terms(std::vector<Term>& out, const NFElement& c, const std::string& monomial) {
  const auto names = c.field()->generator_names();
  const auto& rep = c.rep();
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (sgn(rep[i]) == 0) continue;
    std::string mono;
    const auto exps = flat_index_exponents(*c.field(), i);
    for (std::size_t l = 0; l < exps.size(); ++l) {
      if (exps[l] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += names[l];
      if (exps[l] > 1) mono += "^" + std::to_string(exps[l]);
    }
    if (!monomial.empty()) mono += (mono.empty() ? "" : " ") + monomial;
    out.push_back({rep[i], mono});
  }
}

std::string join_terms(const std::vector<Term>& terms, bool leading) {
  if (terms.empty()) return leading ? "0" : "";
  std::string s;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    if (first && leading)
      s += neg ? "-" : "";
    else
      s += std::string(first ? "" : " ") + (neg ? "- " : "+ ");
    const Rational mag = abs(t.coeff);
    if (t.monomial.empty())
      s += to_string(mag);
    else if (mag == 1)
      s += t.monomial;
    else
      s += to_string(mag) + " " + t.monomial;
    first = false;
  }
  return s;
}

}  // namespace mwlat
