#include "galcoh/report.hpp"

#include <algorithm>
#include <sstream>

#include "galcoh/cohomology.hpp"
#include "galcoh/errors.hpp"

namespace galcoh {

std::string engine_version() { return std::string("galcoh ") + GALCOH_VERSION; }

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vector_text(std::span<const Integer> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s + "]";
}

std::string vector_machine(std::span<const Integer> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

std::string subgroup_list(const std::vector<Subgroup>& hs) {
  std::string s;
  for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? " " : "") + hs[i].to_string();
  return s;
}

class Runner {
 public:
  Runner(const Scenario& sc, const ReportOptions& opt) : sc_(sc), opt_(opt) {}

  Report run() {
    Report r;
    header(r);
    for (std::size_t i = 0; i < sc_.directives.size(); ++i) {
      const Directive& d = sc_.directives[i];
      ReportSection s;
      s.index = i + 1;
      s.fields.push_back({"record", "directive"});
      s.fields.push_back({"index", std::to_string(i + 1)});
      const std::string context = "directive " + std::to_string(i + 1) + " (" + d.text + ", line " +
                                  std::to_string(d.line) + "): ";
      s.text.push_back("[" + std::to_string(i + 1) + "] " + d.text);
      try {
        execute(d, s);
      } catch (const CapExceeded& e) {
        throw CapExceeded(context + e.what());
      } catch (const DomainError& e) {
        throw DomainError(context + e.what());
      } catch (const InvariantViolation& e) {
        throw InvariantViolation(context + e.what());
      } catch (const Error& e) {
        throw Error(context + e.what());
      }
      r.sections.push_back(std::move(s));
    }
    return r;
  }

 private:
  const Scenario& sc_;
  const ReportOptions& opt_;

  std::string name_of(const GLattice& m, const std::string& fallback) const {
    return sc_.lattice_name(m).value_or(fallback);
  }

  void header(Report& r) const {
    const auto& g = *sc_.group;
    auto& h = r.header;
    h.push_back("galcoh report");
    h.push_back("scenario: " + sc_.name);
    h.push_back("engine: " + engine_version());
    h.push_back("caps: max_degree=" + std::to_string(sc_.limits.max_degree) +
                " size_cap=" + std::to_string(sc_.limits.size_cap));
    h.push_back("model: a place contributes only its decomposition subgroup (no inertia, no local arithmetic)");
    h.push_back("model: Sha groups are character-module Sha, computed on character lattices");
    std::string gens;
    for (auto x : g.generators()) gens += (gens.empty() ? "" : " ") + std::to_string(x);
    h.push_back("group: " + sc_.group_description + ", order " + std::to_string(g.order()) + ", generators " + gens);
    h.push_back("subgroups:");
    const auto cyclic = g.cyclic_subgroups();
    for (const auto& s : g.all_subgroups()) {
      const bool is_cyclic = std::find(cyclic.begin(), cyclic.end(), s) != cyclic.end();
      h.push_back("  " + s.to_string() + " order " + std::to_string(s.order()) + ", index " + std::to_string(s.index()) +
                  (s.is_normal() ? ", normal" : "") + (is_cyclic ? ", cyclic" : ""));
    }
    if (!sc_.lattices.empty()) h.push_back("lattices:");
    for (const auto& [n, m] : sc_.lattices) h.push_back("  " + n + " rank " + std::to_string(m.rank()));
    if (!sc_.tori.empty()) h.push_back("tori:");
    for (const auto& t : sc_.tori)
      h.push_back("  " + t.name + " " + t.kind + " " + subgroup_list(t.subgroups) + ", character rank " +
                  std::to_string(t.torus.rank()));
    if (!sc_.places.empty()) h.push_back("place families:");
    for (const auto& [n, f] : sc_.places) {
      std::string s = "  " + n + ":";
      for (const auto& p : f.places()) s += " " + p.label + "=" + p.decomposition.to_string();
      h.push_back(s);
    }
    if (!sc_.sequences.empty()) h.push_back("sequences:");
    for (const auto& [n, q] : sc_.sequences)
      h.push_back("  " + n + ": 0 -> " + name_of(q.sub(), "A") + " -> " + name_of(q.middle(), "B") + " -> " +
                  name_of(q.quotient(), "C") + " -> 0, ranks " + std::to_string(q.sub().rank()) + ", " +
                  std::to_string(q.middle().rank()) + ", " + std::to_string(q.quotient().rank()));

    r.header_fields = {{"record", "header"},
                       {"scenario", sc_.name},
                       {"engine", GALCOH_VERSION},
                       {"max_degree", std::to_string(sc_.limits.max_degree)},
                       {"size_cap", std::to_string(sc_.limits.size_cap)},
                       {"group_order", std::to_string(g.order())},
                       {"subgroups", std::to_string(g.all_subgroups().size())}};
  }

  void witnesses(ReportSection& s, const std::vector<IntVector>& cocycles, const std::string& what) const {
    if (!opt_.verbose_witnesses) return;
    for (std::size_t k = 0; k < cocycles.size(); ++k) {
      s.text.push_back("  " + what + " " + std::to_string(k + 1) + ": " + vector_text(cocycles[k]));
      s.fields.push_back({"witness_" + std::to_string(k + 1), vector_machine(cocycles[k])});
    }
  }

  void execute(const Directive& d, ReportSection& s) const {
    const std::string deg = std::to_string(d.degree);
    switch (d.kind) {
      case DirectiveKind::Cohomology: {
        CohomologyGroup h(*sc_.find_lattice(d.names[0]), d.degree, sc_.limits);
        s.text.push_back("H^" + deg + "(G, " + d.names[0] + ") = " + h.presentation().to_string());
        s.fields.insert(s.fields.end(), {{"kind", "h"},
                                         {"degree", deg},
                                         {"lattice", d.names[0]},
                                         {"group", h.presentation().to_machine()}});
        witnesses(s, h.generators(), "cocycle");
        return;
      }
      case DirectiveKind::Tate: {
        const GLattice& m = *sc_.find_lattice(d.names[0]);
        auto p = tate_cohomology(m, d.degree, sc_.limits);
        s.text.push_back("Hhat^" + deg + "(G, " + d.names[0] + ") = " + p.to_string());
        s.fields.insert(s.fields.end(),
                        {{"kind", "tate"}, {"degree", deg}, {"lattice", d.names[0]}, {"group", p.to_machine()}});
        return;
      }
      case DirectiveKind::Flasque: {
        auto rep = is_flasque(*sc_.find_lattice(d.names[0]));
        s.text.push_back(d.names[0] + (rep.verdict ? " is flasque" : " is not flasque"));
        s.fields.insert(s.fields.end(), {{"kind", "flasque"}, {"lattice", d.names[0]}, {"verdict", yes_no(rep.verdict)}});
        for (std::size_t k = 0; k < rep.entries.size(); ++k) {
          const auto& e = rep.entries[k];
          s.text.push_back("  Hhat^-1(" + e.subgroup.to_string() + ", " + d.names[0] + ") = " + e.group.to_string());
          s.fields.push_back({"subgroup_" + std::to_string(k + 1), e.subgroup.to_string()});
          s.fields.push_back({"group_" + std::to_string(k + 1), e.group.to_machine()});
        }
        return;
      }
      case DirectiveKind::Resolution: {
        const TorusEntry& t = *sc_.find_torus(d.names[0]);
        FlasqueResolution r = t.resolution ? *t.resolution : flasque_resolution(t.torus);
        const auto& q = r.sequence;
        const bool ok = r.verify();
        s.text.push_back("flasque resolution of " + t.name + ": 0 -> " + name_of(q.sub(), t.name + "_hat") + " -> " +
                         name_of(q.middle(), "R_hat") + " -> " + name_of(q.quotient(), "S_hat") + " -> 0, ranks " +
                         std::to_string(q.sub().rank()) + ", " + std::to_string(q.middle().rank()) + ", " +
                         std::to_string(q.quotient().rank()));
        s.text.push_back("  cover order: " + subgroup_list(r.cover_order));
        std::string summands;
        const auto& sm = r.permutation_certificate.summands;
        for (std::size_t i = 0; i < sm.size();) {
          std::size_t j = i;
          while (j < sm.size() && sm[j] == sm[i]) ++j;
          summands += (summands.empty() ? "" : " + ") + std::string("Z[G/") + sm[i].to_string() + "]^" +
                      std::to_string(j - i);
          i = j;
        }
        s.text.push_back("  permutation summands: " + (summands.empty() ? std::string("none") : summands));
        s.text.push_back("  exactness certificate: " + std::string(ok ? "verified" : "FAILED"));
        s.text.push_back("  permutation certificate: " + std::string(ok ? "verified" : "FAILED"));
        s.text.push_back("  flasque certificate: Hhat^-1(H, S_hat) = 0 for all " +
                         std::to_string(r.flasque_certificate.entries.size()) + " subgroups H");
        s.fields.insert(s.fields.end(), {{"kind", "resolution"},
                                         {"torus", t.name},
                                         {"rank_sub", std::to_string(q.sub().rank())},
                                         {"rank_middle", std::to_string(q.middle().rank())},
                                         {"rank_quotient", std::to_string(q.quotient().rank())},
                                         {"verified", yes_no(ok)}});
        return;
      }
      case DirectiveKind::Br: {
        const TorusEntry& t = *sc_.find_torus(d.names[0]);
        auto b = br_invariant(t.torus, sc_.limits);
        s.text.push_back("Br invariant of " + t.name + ": H^1(G, S_hat) = " + b.group.to_string());
        s.text.push_back("  reversed cover order: H^1(G, S_hat) = " + b.permuted_group.to_string() +
                         ", order independent: " + yes_no(b.order_independent));
        s.fields.insert(s.fields.end(), {{"kind", "br"},
                                         {"torus", t.name},
                                         {"group", b.group.to_machine()},
                                         {"permuted_group", b.permuted_group.to_machine()},
                                         {"order_independent", yes_no(b.order_independent)}});
        return;
      }
      case DirectiveKind::Sha: {
        auto sha = sha_kernel(*sc_.find_lattice(d.names[0]), d.degree, *sc_.find_places(d.names[1]), sc_.limits);
        const bool ok = sha.verify();
        s.text.push_back("Sha^" + deg + "_" + d.names[1] + "(G, " + d.names[0] + ") = " + sha.presentation().to_string() +
                         " inside H^" + deg + " = " + sha.ambient().presentation().to_string());
        s.text.push_back("  witnesses restrict to coboundaries on every decomposition group: " +
                         std::string(ok ? "verified" : "FAILED"));
        s.fields.insert(s.fields.end(), {{"kind", "sha"},
                                         {"degree", deg},
                                         {"lattice", d.names[0]},
                                         {"places", d.names[1]},
                                         {"group", sha.presentation().to_machine()},
                                         {"ambient", sha.ambient().presentation().to_machine()},
                                         {"verified", yes_no(ok)}});
        witnesses(s, sha.witnesses(), "witness");
        return;
      }
      case DirectiveKind::Coverage: {
        auto c = chebotarev_coverage(sc_.group, *sc_.find_places(d.names[0]));
        s.text.push_back("coverage of " + d.names[0] + ": " +
                         (c.covered ? std::string("covered")
                                    : "not covered, uncovered cyclic subgroups " + subgroup_list(c.uncovered)));
        s.fields.insert(s.fields.end(), {{"kind", "coverage"},
                                         {"places", d.names[0]},
                                         {"covered", yes_no(c.covered)},
                                         {"uncovered", std::to_string(c.uncovered.size())}});
        return;
      }
      case DirectiveKind::Transfer: {
        const auto& q = *sc_.find_sequence(d.names[0]);
        auto t = sha_les_transfer(q, d.degree, *sc_.find_places(d.names[1]), sc_.limits);
        const std::string next = std::to_string(d.degree + 1);
        s.text.push_back("Sha transfer along " + d.names[0] + " over " + d.names[1] + ":");
        s.text.push_back("  Sha^" + deg + "(G, " + name_of(q.quotient(), "C") +
                         ") = " + t.sha_quotient.presentation().to_string() + " -> Sha^" + next + "(G, " +
                         name_of(q.sub(), "A") + ") = " + t.sha_sub.presentation().to_string() + " -> Sha^" + next +
                         "(G, " + name_of(q.middle(), "B") + ") = " + t.sha_middle.presentation().to_string());
        s.text.push_back(std::string("  connecting: injective ") + yes_no(t.connecting_injective) + ", surjective " +
                         yes_no(t.connecting_surjective));
        s.text.push_back(std::string("  induced: injective ") + yes_no(t.induced_injective) + ", surjective " +
                         yes_no(t.induced_surjective));
        s.text.push_back(std::string("  exact at the middle term: ") + yes_no(t.exact_at_middle));
        s.fields.insert(s.fields.end(), {{"kind", "transfer"},
                                         {"degree", deg},
                                         {"sequence", d.names[0]},
                                         {"places", d.names[1]},
                                         {"sha_quotient", t.sha_quotient.presentation().to_machine()},
                                         {"sha_sub", t.sha_sub.presentation().to_machine()},
                                         {"sha_middle", t.sha_middle.presentation().to_machine()},
                                         {"connecting_injective", yes_no(t.connecting_injective)},
                                         {"connecting_surjective", yes_no(t.connecting_surjective)},
                                         {"induced_injective", yes_no(t.induced_injective)},
                                         {"induced_surjective", yes_no(t.induced_surjective)},
                                         {"exact_at_middle", yes_no(t.exact_at_middle)}});
        return;
      }
      case DirectiveKind::Connecting: {
        const auto& q = *sc_.find_sequence(d.names[0]);
        CohomologyGroup hc(q.quotient(), d.degree, sc_.limits);
        CohomologyGroup ha(q.sub(), d.degree + 1, sc_.limits);
        GroupHom delta = connecting(q, hc, ha);
        const std::string next = std::to_string(d.degree + 1);
        s.text.push_back("connecting map H^" + deg + "(G, " + name_of(q.quotient(), "C") + ") -> H^" + next + "(G, " +
                         name_of(q.sub(), "A") + "): " + hc.presentation().to_string() + " -> " +
                         ha.presentation().to_string() + ", matrix " + delta.matrix().to_string());
        s.text.push_back(std::string("  injective ") + yes_no(delta.is_injective()) + ", surjective " +
                         yes_no(delta.is_surjective()) + ", isomorphism " + yes_no(delta.is_isomorphism()));
        s.fields.insert(s.fields.end(), {{"kind", "connecting"},
                                         {"degree", deg},
                                         {"sequence", d.names[0]},
                                         {"source", hc.presentation().to_machine()},
                                         {"target", ha.presentation().to_machine()},
                                         {"isomorphism", yes_no(delta.is_isomorphism())}});
        if (opt_.verbose_witnesses) {
          std::vector<IntVector> images;
          for (const auto& c : hc.generators()) images.push_back(connecting_cocycle(q, d.degree, c));
          witnesses(s, images, "image cocycle");
        }
        return;
      }
    }
  }
};

}  // namespace

std::string Report::render(ReportFormat format) const {
  std::ostringstream os;
  if (format == ReportFormat::Text) {
    for (const auto& l : header) os << l << '\n';
    for (const auto& s : sections) {
      os << '\n';
      for (const auto& l : s.text) os << l << '\n';
    }
    return os.str();
  }
  auto record = [&](const Fields& f) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i].first << '=' << f[i].second;
    os << '\n';
  };
  record(header_fields);
  for (const auto& s : sections) record(s.fields);
  return os.str();
}

Report run(const Scenario& scenario, const ReportOptions& options) { return Runner(scenario, options).run(); }

}  // namespace galcoh
