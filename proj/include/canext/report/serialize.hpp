#pragma once

#include <string>

#include "canext/completions/completion.hpp"
#include "canext/envelopes/envelopes.hpp"
#include "canext/fgv/fgv.hpp"
#include "canext/order/io.hpp"

namespace canext::report {

using io::Json;

inline Json names_of(const Lattice& L, const ElementSet& s) {
  Json j = Json::array();
  for_each_element(s, [&](Elem e) { j.push_back(L.name(e)); });
  return j;
}

/// An element map as {source name: target name}.
inline Json map_of(const Lattice& src, const Lattice& dst, const ElemMap& f) {
  Json j = Json::object();
  for (Elem a = 0; a < f.size(); ++a) j[src.name(a)] = dst.name(f[a]);
  return j;
}

inline Json compactness_json(const Lattice& L, const CompactnessWitness& w) {
  Json j = {{"pass", w.pass}, {"variant", to_string(w.variant)}, {"variants_agree", w.variants_agree}};
  if (!w.pass) {
    if (w.S.size() == L.size()) j["S"] = names_of(L, w.S);
    if (w.T.size() == L.size()) j["T"] = names_of(L, w.T);
    if (!w.S_description.empty()) j["S_description"] = w.S_description;
    if (!w.T_description.empty()) j["T_description"] = w.T_description;
  }
  return j;
}

inline Json star_json(const Lattice& C, const StarReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.star)
    entries.push_back({{"p", C.name(e.p)}, {"maximal_outside", names_of(C, e.extremal)}, {"pass", e.pass()}});
  Json dual = Json::array();
  for (const auto& e : r.star_dual)
    dual.push_back({{"m", C.name(e.p)}, {"minimal_outside", names_of(C, e.extremal)}, {"pass", e.pass()}});
  return {{"pass", r.pass()}, {"star", entries}, {"star_dual", dual}};
}

/// Target lattice, embedding, filter and ideal elements, density and
/// compactness verdicts, irreducibles and the star report of the target.
inline Json completion_json(const Completion& c) {
  const auto dense = is_dense(c);
  const auto compact = is_compact(c);
  const auto view = irreducibles(c.C());
  Json j;
  j["source"] = io::lattice_to_json(c.L());
  j["target"] = io::lattice_to_json(c.C());
  j["embedding"] = map_of(c.L(), c.C(), c.embed);
  j["embedding_is_isomorphism"] = embedding_is_isomorphism(c);
  j["filter_elements"] = names_of(c.C(), c.filter_elements);
  j["ideal_elements"] = names_of(c.C(), c.ideal_elements);
  j["dense"] = {{"pass", dense.dense}};
  if (dense.counterexample) j["dense"]["counterexample"] = c.C().name(*dense.counterexample);
  j["compact"] = compactness_json(c.L(), compact);
  j["join_irreducibles"] = names_of(c.C(), view.J);
  j["meet_irreducibles"] = names_of(c.C(), view.M);
  j["star"] = star_json(c.C(), star_check(c.C()));
  return j;
}

inline Json certificate_json(const Lattice& Csrc, const Lattice& Cdst, const UniversalityCertificate& u) {
  Json j = {{"holds", u.holds()},
            {"continuous", u.continuous},
            {"below_f", u.below_f},
            {"maximal", u.maximal},
            {"maximal_scott", u.maximal_scott},
            {"candidates", u.candidates}};
  if (u.counterexample) j["counterexample"] = map_of(Csrc, Cdst, *u.counterexample);
  return j;
}

inline Json error_json(const Error& e) { return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}; }

}  // namespace canext::report
