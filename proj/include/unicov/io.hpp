#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "unicov/constructions.hpp"
#include "unicov/fourier.hpp"
#include "unicov/group.hpp"
#include "unicov/groupset.hpp"
#include "unicov/solver.hpp"

namespace unicov {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// Parses a JSON array of elements: plain integers are ranks, arrays are
/// coordinate tuples.  "[0,3,5]" or "[[0,1],[1,0]]".
inline GroupSet parse_set_literal(const Group& g, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("set literal: ") + e.what());
  }
  if (!j.is_array()) {
    throw std::invalid_argument("set literal: expected a JSON array");
  }
  GroupSet out(g);
  for (const auto& item : j) {
    if (item.is_number_integer() || item.is_number_unsigned()) {
      const auto v = item.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= g.order) {
        throw std::invalid_argument("set literal: rank out of range");
      }
      out.insert(static_cast<Elem>(v));
    } else if (item.is_array()) {
      if (item.size() != g.factors.size()) {
        throw std::invalid_argument("set literal: coordinate arity mismatch");
      }
      std::vector<std::uint32_t> coords;
      coords.reserve(item.size());
      for (const auto& c : item) {
        if (!c.is_number_integer() && !c.is_number_unsigned()) {
          throw std::invalid_argument("set literal: bad coordinate");
        }
        const auto v = c.get<std::int64_t>();
        if (v < 0) throw std::invalid_argument("set literal: bad coordinate");
        coords.push_back(static_cast<std::uint32_t>(v));
      }
      out.insert(rank_of(g, coords));
    } else {
      throw std::invalid_argument("set literal: expected rank or tuple");
    }
  }
  return out;
}

inline Json set_to_json(const GroupSet& s) {
  Json arr = Json::array();
  s.for_each([&](Elem x) { arr.push_back(x); });
  return arr;
}

inline Json frac_to_json(const Frac& f) {
  return Json{{"num", f.num}, {"den", f.den}, {"value", f.value()}};
}

inline Json cover_to_json(const CoverWitness& c) {
  return Json{{"value", c.value},
              {"witness", set_to_json(c.witness)},
              {"optimal", c.optimal},
              {"lower_bound", c.lower_bound},
              {"nodes", c.nodes}};
}

inline Json universality_to_json(const UniversalityReport& r) {
  Json j{{"optimal", r.optimal}, {"nodes", r.nodes}};
  if (r.infinite) {
    j["value"] = "INFINITE";
  } else {
    j["value"] = r.un;
    j["witnessing_failure"] = r.witnessing_failure;
  }
  return j;
}

inline Json mult_context_to_json(const MultContext& ctx) {
  return Json{{"p", ctx.p},
              {"generator", ctx.generator},
              {"log_group", group_to_string(ctx.log_group)},
              {"dropped_zero_from_set", ctx.dropped_zero_from_set},
              {"dropped_zero_from_universe", ctx.dropped_zero_from_universe}};
}

inline Json spectrum_to_json(const SpectrumSet& s) {
  return Json{{"eps", s.eps}, {"chars", s.chars}};
}

inline Json fourier_cover_to_json(const FourierCoverResult& r) {
  Json j{{"found", r.found},
         {"reference_bound", r.reference_bound},
         {"trials", r.trials}};
  if (r.found) {
    j["value"] = r.value;
    j["witness"] = set_to_json(r.witness);
  } else {
    j["status"] = "NOT_FOUND";
    j["note"] = r.note;
  }
  return j;
}

inline Json sumset_certificate_to_json(const SumsetCertificate& c) {
  return Json{{"n", c.n},
              {"k_requested", c.k_requested},
              {"k_achieved", c.k_achieved},
              {"d", c.d},
              {"base_attempts", c.base_attempts},
              {"base_certified", c.base_certified},
              {"lift_premises", c.lift_premises},
              {"direct_un_checked", c.direct_un_checked},
              {"direct_un", c.direct_un},
              {"difference_full_checked", c.difference_full_checked},
              {"u_size", c.u_size},
              {"a_size", c.a_size},
              {"b_size", c.b_size}};
}

inline Json sumset_construction_to_json(const SumsetConstruction& s) {
  return Json{{"a", set_to_json(s.a)},
              {"b", set_to_json(s.b)},
              {"u", set_to_json(s.u)},
              {"certificate", sumset_certificate_to_json(s.cert)}};
}

/// Provenance block embedded in every report.
inline Json run_config_json(const std::string& command, std::uint64_t seed) {
  return Json{{"command", command}, {"seed", seed}, {"version", kVersion}};
}

}  // namespace unicov
