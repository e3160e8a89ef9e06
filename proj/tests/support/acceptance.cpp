#include "testkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "gencov/cover.hpp"
#include "gencov/error.hpp"
#include "gencov/isomorphism.hpp"
#include "gencov/normalize.hpp"
#include "gencov/quotient.hpp"
#include "gencov/symmetry.hpp"
#include "testkit/families.hpp"
#include "testkit/oracles.hpp"

namespace testkit
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Tallies instances and keeps the first failure for the report.
struct Tally
{
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void check(bool ok, std::string const &what)
  {
    ++total;
    if (!ok) {
      if (failed == 0)
        first_failure = what;
      ++failed;
    }
  }

  std::string summary() const
  {
    std::ostringstream out;
    out << (total - failed) << "/" << total << " agree";
    if (failed > 0)
      out << "; first failure: " << first_failure;
    return out.str();
  }
};

CriterionResult guarded(int id, std::string name, std::function<CriterionResult()> const &body)
{
  try {
    CriterionResult r = body();
    r.id = id;
    r.name = std::move(name);
    return r;
  } catch (std::exception const &e) {
    return {id, std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::vector<GenVoltageGraph> sample_gvgs(Rng &rng, std::size_t count)
{
  std::vector<GenVoltageGraph> out;
  while (out.size() < count)
    out.push_back(random_gvg(rng, 24, {4, 10}));
  return out;
}

CriterionResult golden_fixture()
{
  auto start = Clock::now();
  std::ostringstream detail;
  bool ok = true;

  Cover plain = gen_cov(s6_fixture(false));
  bool is_hexagon = find_isomorphism(plain.graph(), cycle_graph(6)).has_value();
  ok = ok && is_hexagon;
  detail << "trivial voltages: " << (is_hexagon ? "6-cycle" : "not a 6-cycle");

  Cover twisted = gen_cov(s6_fixture(true));
  EdgeClassification edges = classify_edges(twisted.graph());
  std::size_t vertices = twisted.graph().vertex_count();
  std::size_t pairs = 0;
  for (auto const &cls : edges.parallel_classes)
    pairs += cls.size() == 2 ? 1 : 0;
  std::size_t comps = components(twisted.graph()).count;
  std::size_t comps_bfs = bfs_component_count(twisted.graph());
  bool twisted_ok = vertices == 6 && edges.edges.size() == 6 && edges.count(EdgeKind::link) == 6 &&
                    edges.parallel_classes.size() == 3 && pairs == 3 && comps == 3 &&
                    comps_bfs == 3;
  ok = ok && twisted_ok;
  double elapsed = seconds_since(start);
  ok = ok && elapsed < 1.0;
  detail << "; twisted: " << vertices << " vertices, " << edges.edges.size() << " edges, "
         << pairs << " parallel pairs, " << comps << " components; " << elapsed << " s";
  return {0, "", ok, detail.str()};
}

CriterionResult reconstruction_round_trip(Rng &rng)
{
  auto start = Clock::now();
  std::vector<ActionSample> samples = action_samples(rng, 200);
  Tally tally;
  for (ActionSample const &s : samples) {
    ActionGroup action(s.graph, s.group);
    Reconstruction r = reconstruct(action);
    Cover const &cover = r.cover;
    bool iso_found = find_isomorphism(s.graph, cover.graph()).has_value();
    bool witness_ok = is_isomorphism(s.graph, cover.graph(), r.isomorphism);
    bool sizes_ok = true;
    for (std::size_t o = 0; o < r.quotient.vertex_orbits.size(); ++o)
      sizes_ok = sizes_ok &&
                 r.quotient.vertex_orbits[o].size() == cover.fibre_size(BaseElement::vertex(o));
    for (std::size_t o = 0; o < r.quotient.dart_orbits.size(); ++o)
      sizes_ok = sizes_ok &&
                 r.quotient.dart_orbits[o].size() == cover.fibre_size(BaseElement::dart(o));
    for (VertexId v = 0; v < s.graph.vertex_count() && witness_ok; ++v)
      sizes_ok = sizes_ok && cover.projection().vertex_map[r.isomorphism.vertex_map[v]] ==
                               r.quotient.map.vertex_map[v];
    bool valid = !literal_gvg_defect(r.gvg.base(), r.gvg.group(), r.gvg.vertex_weights(),
                                     r.gvg.dart_weights(), r.gvg.voltages());
    tally.check(iso_found && witness_ok && sizes_ok && valid && is_faithful_gvg(r.gvg),
                s.name + " |G|=" + std::to_string(s.group.order()));
  }
  double elapsed = seconds_since(start);
  bool ok = tally.failed == 0 && tally.total >= 200 && elapsed < 60.0;
  std::ostringstream detail;
  detail << tally.summary() << " in " << elapsed << " s";
  return {0, "", ok, detail.str()};
}

CriterionResult connectivity(Rng &rng)
{
  Tally tally;
  for (GenVoltageGraph const &gvg : sample_gvgs(rng, 500)) {
    Cover cover = gen_cov(gvg);
    std::size_t comps = bfs_component_count(cover.graph());
    ConnectivityVerdict verdict = is_connected_by_voltage(gvg);
    bool labels_ok = match_by_labels(cover, brute_cover(gvg)).has_value();
    tally.check(verdict.connected == (comps == 1) && verdict.index == comps && labels_ok,
                "components " + std::to_string(comps) + " vs index " +
                  std::to_string(verdict.index));
  }
  return {0, "", tally.failed == 0 && tally.total >= 500, tally.summary()};
}

CriterionResult simplicity(Rng &rng)
{
  Tally tally;
  std::size_t simple_count = 0;
  for (GenVoltageGraph const &gvg : sample_gvgs(rng, 500)) {
    Cover cover = gen_cov(gvg);
    Graph const &g = cover.graph();
    SimplicityVerdict verdict = is_simple_by_voltage(gvg);
    auto semi = has_semiedge_by_voltage(gvg);
    auto parallel = has_parallel_darts_by_voltage(gvg);
    bool ok = verdict.simple == literal_is_simple(g) && semi.has_value() == has_semi_edge(g) &&
              parallel.has_value() == has_parallel_darts(g);
    if (semi)
      ok = ok && g.is_semi_edge(cover.dart_of(*semi, gvg.group().identity()));
    if (parallel) {
      DartId a = cover.dart_of(parallel->x, gvg.group().identity());
      DartId b = cover.dart_of(parallel->y, parallel->h);
      ok = ok && a != b && g.beg(a) == g.beg(b) && g.term(a) == g.term(b);
    }
    simple_count += verdict.simple ? 1 : 0;
    tally.check(ok, "simple " + std::to_string(verdict.simple));
  }
  std::string detail = tally.summary() + " (" + std::to_string(simple_count) + " simple covers)";
  return {0, "", tally.failed == 0 && tally.total >= 500, detail};
}

CriterionResult normalisation(Rng &rng)
{
  Tally tally;
  for (GenVoltageGraph const &gvg : sample_gvgs(rng, 300)) {
    SpanningTree tree = spanning_tree(gvg.base(), 0);
    TNormalisation n = t_normalize(gvg, tree);
    GenVoltageGraph const &after = n.result;
    bool trivial_on_tree = std::all_of(tree.darts.begin(), tree.darts.end(),
                                       [&](DartId x) { return after.voltage(x).is_identity(); });
    bool valid = !literal_gvg_defect(after.base(), after.group(), after.vertex_weights(),
                                     after.dart_weights(), after.voltages());
    Cover from = gen_cov(gvg);
    Cover to = gen_cov(after);
    GraphMorphism map = realize(n.witness, from, to);
    bool iso = is_isomorphism(from.graph(), to.graph(), map);
    bool labels = true;
    for (VertexId v = 0; v < from.graph().vertex_count() && labels; ++v) {
      CoverLabel a = from.vertex_label(v);
      CoverLabel b = to.vertex_label(map.vertex_map[v]);
      labels = a.base == b.base &&
               coset_set(after.weight(b.base), b.representative) ==
                 coset_set(after.weight(a.base), n.witness.multiplier(a.base) * a.representative);
    }
    for (DartId x = 0; x < from.graph().dart_count() && labels; ++x) {
      CoverLabel a = from.dart_label(x);
      CoverLabel b = to.dart_label(map.dart_map[x]);
      labels = a.base == b.base &&
               coset_set(after.weight(b.base), b.representative) ==
                 coset_set(after.weight(a.base), n.witness.multiplier(a.base) * a.representative);
    }
    tally.check(trivial_on_tree && valid && iso && labels,
                std::string(trivial_on_tree ? "" : "tree voltage ") + (valid ? "" : "invalid ") +
                  (iso ? "" : "not an isomorphism ") + (labels ? "" : "label mismatch"));
  }
  return {0, "", tally.failed == 0, tally.summary()};
}

CriterionResult translations(Rng &rng)
{
  Tally tally;
  std::size_t unfaithful = 0;
  for (GenVoltageGraph const &gvg : sample_gvgs(rng, 300)) {
    Cover cover = gen_cov(gvg);
    Graph const &g = cover.graph();
    bool lifts_ok = true;
    for (Perm const &s : gvg.group().generators()) {
      LiftedTranslation lift = lift_translation(cover, s);
      lifts_ok = lifts_ok && is_isomorphism(g, g, lift.map);
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        lifts_ok = lifts_ok && cover.projection().vertex_map[lift.map.vertex_map[v]] ==
                                 cover.projection().vertex_map[v];
      for (DartId x = 0; x < g.dart_count(); ++x)
        lifts_ok = lifts_ok && cover.projection().dart_map[lift.map.dart_map[x]] ==
                                 cover.projection().dart_map[x];
    }

    ElementSet scanned;
    for (Perm const &h : gvg.group().elements()) {
      bool fixes = true;
      for (VertexId v = 0; v < g.vertex_count() && fixes; ++v) {
        CoverLabel l = cover.vertex_label(v);
        fixes = coset_set(gvg.weight(l.base), l.representative * h) ==
                coset_set(gvg.weight(l.base), l.representative);
      }
      for (DartId x = 0; x < g.dart_count() && fixes; ++x) {
        CoverLabel l = cover.dart_label(x);
        fixes = coset_set(gvg.weight(l.base), l.representative * h) ==
                coset_set(gvg.weight(l.base), l.representative);
      }
      if (fixes)
        scanned.push_back(h);
    }
    std::sort(scanned.begin(), scanned.end());

    ElementSet meet = sorted_elements(gvg.group());
    auto const &weights = gvg.base().dart_count() > 0 ? gvg.dart_weights() : gvg.vertex_weights();
    for (Group const &w : weights) {
      ElementSet next;
      ElementSet ws = sorted_elements(w);
      std::set_intersection(meet.begin(), meet.end(), ws.begin(), ws.end(),
                            std::back_inserter(next));
      meet = std::move(next);
    }
    ElementSet core_set = literal_core(Group::from_closed_set(gvg.group().degree(), meet),
                                       gvg.group());

    ActionHomReport report = action_hom(cover);
    bool kernel_ok = scanned == core_set && sorted_elements(report.kernel) == scanned;
    bool injective_ok = report.injective == is_faithful_gvg(gvg) &&
                        report.injective == (scanned.size() == 1);
    unfaithful += report.injective ? 0 : 1;
    tally.check(lifts_ok && kernel_ok && injective_ok,
                std::string(lifts_ok ? "" : "lift ") + (kernel_ok ? "" : "kernel ") +
                  (injective_ok ? "" : "injectivity"));
  }
  std::string detail = tally.summary() + " (" + std::to_string(unfaithful) + " unfaithful)";
  return {0, "", tally.failed == 0, detail};
}

CriterionResult walk_endpoints(Rng &rng)
{
  Tally tally;
  std::vector<GenVoltageGraph> gvgs = sample_gvgs(rng, 50);
  for (std::size_t i = 0; i < 200; ++i) {
    GenVoltageGraph const &gvg = gvgs[i % gvgs.size()];
    Cover cover = gen_cov(gvg);
    Walk walk = random_walk(rng, gvg.base(), rng.between(0, 6));
    std::vector<VertexId> by_voltage = lifted_walk_endpoints(cover, walk);
    std::set<VertexId> by_lifting = enumerate_lift_endpoints(
      cover, cover.vertex_of(walk.initial(), gvg.group().identity()), walk.darts());
    tally.check(std::vector<VertexId>(by_lifting.begin(), by_lifting.end()) == by_voltage,
                "walk of length " + std::to_string(walk.length()));
  }
  return {0, "", tally.failed == 0 && tally.total >= 100, tally.summary()};
}

CriterionResult generation(Rng &rng)
{
  Tally tally;
  std::size_t disconnected = 0;
  for (ActionSample const &s : generation_samples(rng, 150)) {
    ActionGroup action(s.graph, s.group);
    Quotient q = quotient_graph(action);
    TransversalData t = choose_transversal(action, q);
    GenerationVerdict verdict = generation_connectivity_test(action, q, t);
    bool actual = bfs_component_count(s.graph) == 1;
    disconnected += actual ? 0 : 1;
    tally.check(verdict.connected == actual, s.name);
  }

  // Bicoset tree case: K2,3 under Z6 has quotient K2 and ⟨G_u, G_v⟩ = G.
  Graph k23 = complete_bipartite(2, 3);
  Group z6 = action_from_vertex_maps(k23, {{1, 0, 3, 4, 2}});
  ActionGroup action(k23, z6);
  Quotient q = quotient_graph(action);
  TransversalData t = choose_transversal(action, q);
  GenerationVerdict verdict = generation_connectivity_test(action, q, t);
  Group stabilisers = generated_by(z6, {action.vertex_stabiliser(t.vertex_rep[0]),
                                        action.vertex_stabiliser(t.vertex_rep[1])});
  bool tree_case = q.graph.vertex_count() == 2 && q.graph.dart_count() == 2 &&
                   verdict.connected && verdict.shifts.empty() && stabilisers == z6;
  tally.check(tree_case, "bicoset tree case");

  std::string detail =
    tally.summary() + " (" + std::to_string(disconnected) + " disconnected graphs)";
  return {0, "", tally.failed == 0 && disconnected > 0, detail};
}

CriterionResult validator(Rng &rng)
{
  Tally tally;
  std::size_t valid_count = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    RawTables t = random_tables(rng, 12);
    auto violation =
      find_violation(t.base, t.group, t.vertex_weights, t.dart_weights, t.voltages);
    auto defect = literal_gvg_defect(t.base, t.group, t.vertex_weights, t.dart_weights,
                                     t.voltages);
    bool ok = violation.has_value() == defect.has_value();
    if (violation && violation->dart) {
      int eq = violation->code == ErrorCode::Eq1Violation   ? 1
               : violation->code == ErrorCode::Eq2Violation ? 2
               : violation->code == ErrorCode::Eq3Violation ? 3
                                                            : 0;
      if (eq != 0)
        ok = ok && !literal_eq_holds(eq, t.base, t.group, t.vertex_weights, t.dart_weights,
                                     t.voltages, *violation->dart);
    }
    valid_count += defect ? 0 : 1;
    tally.check(ok, defect ? *defect : std::string("valid"));
  }
  std::string detail = tally.summary() + " (" + std::to_string(valid_count) + " valid, " +
                       std::to_string(tally.total - valid_count) + " invalid)";
  return {0, "", tally.failed == 0 && valid_count > 0 && valid_count < tally.total, detail};
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed)
{
  std::vector<CriterionResult> results;
  auto rng_for = [seed](std::uint64_t k) { return Rng(seed * 1000003u + k); };

  results.push_back(guarded(1, "S6 golden fixture", golden_fixture));
  results.push_back(guarded(2, "reconstruction round trip", [&] {
    Rng rng = rng_for(2);
    return reconstruction_round_trip(rng);
  }));
  results.push_back(guarded(3, "connectivity by voltage", [&] {
    Rng rng = rng_for(3);
    return connectivity(rng);
  }));
  results.push_back(guarded(4, "simplicity, semi-edges and parallel darts", [&] {
    Rng rng = rng_for(4);
    return simplicity(rng);
  }));
  results.push_back(guarded(5, "spanning tree normalisation", [&] {
    Rng rng = rng_for(5);
    return normalisation(rng);
  }));
  results.push_back(guarded(6, "lifted translations and kernel", [&] {
    Rng rng = rng_for(6);
    return translations(rng);
  }));
  results.push_back(guarded(7, "lifted walk endpoints", [&] {
    Rng rng = rng_for(7);
    return walk_endpoints(rng);
  }));
  results.push_back(guarded(8, "generation tests", [&] {
    Rng rng = rng_for(8);
    return generation(rng);
  }));
  results.push_back(guarded(9, "validator against literal checker", [&] {
    Rng rng = rng_for(9);
    return validator(rng);
  }));
  return results;
}

std::size_t print_acceptance(std::vector<CriterionResult> const &results, std::ostream &out)
{
  std::size_t failures = 0;
  for (CriterionResult const &r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail
        << "\n";
    failures += r.passed ? 0 : 1;
  }
  return failures;
}

} // namespace testkit
