// Command-line driver: computes rational Witt classes of knots from
// matrix data, applies the unknotting-number obstructions, runs the
// pretzel family checks and the lens-space congruence test.

#include <atomic>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wittknot/knotio.hpp"
#include "wittknot/pretzel.hpp"
#include "wittknot/unknotting.hpp"

using namespace wittknot;
using nlohmann::ordered_json;

namespace {

// Exit codes: 0 ok, 1 usage, 2 data validation failure, 3 a fixture
// assertion (e.g. a stored u1 = true) contradicted the engine.
int worst_exit = 0;
void flag_exit(int code) {
  if (code > worst_exit) worst_exit = code;
}

struct CommonOpts {
  std::string input;
  std::string format;  // "", "json", "csv"
  bool symmetric = false;
  bool strict_seifert = false;
  bool json_out = false;
  unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input) {
  auto* opt = cmd->add_option("--input", o.input, "input file of knot records");
  if (needs_input) opt->required();
  cmd->add_option("--format", o.format, "input format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--symmetric", o.symmetric,
                "treat matrices as already symmetrized");
  cmd->add_flag("--strict-seifert", o.strict_seifert,
                "make det(V - V^T) = 1 a hard error instead of a warning");
  cmd->add_flag("--json", o.json_out, "machine-readable output");
  cmd->add_option("--jobs", o.jobs, "worker threads for batch commands")
      ->check(CLI::PositiveNumber);
}

IngestFormat detect_format(const CommonOpts& o) {
  if (o.format == "json") return IngestFormat::Json;
  if (o.format == "csv") return IngestFormat::Csv;
  if (o.input.size() >= 4 && o.input.substr(o.input.size() - 4) == ".csv")
    return IngestFormat::Csv;
  return IngestFormat::Json;
}

std::vector<KnotRecord> load(const CommonOpts& o) {
  return ingest(o.input, detect_format(o),
                o.symmetric ? IngestMode::Symmetric : IngestMode::Seifert);
}

// Deterministic parallel map: output order equals input order.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  unsigned count = std::min<std::size_t>(jobs, n);
  for (unsigned t = 0; t < count; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string canonical_str(const DiagonalForm& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.entries().size(); ++i) {
    if (i) s += ", ";
    s += canonical_gen(f.entries()[i]).get_str();
  }
  return s + "]";
}

std::string witness_str(const LocalWitness& w) {
  std::string s = "p=" + w.p.get_str() + ": <" + w.f_residue.get_str() +
                  "> vs <" + w.g_residue.get_str() + ">";
  // Residues can share a square class while the local classes still differ
  // (by rank); spell the classes out when the residues alone do not show it.
  if (w.f_residue == w.g_residue)
    s += " (" + w.f_class.str() + " vs " + w.g_class.str() + ")";
  return s;
}

ordered_json witness_json(const LocalWitness& w) {
  return {{"p", w.p.get_str()},
          {"phi_residue", w.f_residue.get_str()},
          {"target_residue", w.g_residue.get_str()},
          {"phi_class", w.f_class.str()},
          {"target_class", w.g_class.str()}};
}

std::string case_str(const CaseResult& c) {
  switch (c.status) {
    case CaseStatus::Consistent:
      return "consistent";
    case CaseStatus::Excluded:
      return c.by_signature ? "excluded(sigma)" : "excluded";
    default:
      return "-";
  }
}

ordered_json case_json(const CaseResult& c) {
  ordered_json j;
  j["status"] = case_str(c);
  if (c.status == CaseStatus::Excluded && !c.by_signature) {
    ordered_json seps = ordered_json::array();
    for (const Int& p : c.separating) seps.push_back(p.get_str());
    j["separating"] = seps;
    if (c.witness) j["witness"] = witness_json(*c.witness);
  }
  return j;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

void report_warnings(const ResolvedKnot& r) {
  for (const auto& w : r.warnings)
    std::cerr << "note: " << r.record.name << ": " << w << "\n";
  if (r.validation_failed) flag_exit(2);
}

std::vector<ResolvedKnot> resolve_all(const std::vector<KnotRecord>& recs,
                                      const CommonOpts& o) {
  std::vector<ResolvedKnot> out(recs.size());
  parallel_for(recs.size(), o.jobs,
               [&](std::size_t i) { out[i] = resolve(recs[i], o.strict_seifert); });
  for (const auto& r : out) report_warnings(r);
  return out;
}

// ---- compute -------------------------------------------------------------

int cmd_compute(const CommonOpts& o) {
  auto resolved = resolve_all(load(o), o);
  ordered_json out = ordered_json::array();
  std::vector<std::vector<std::string>> table{
      {"name", "det", "sigma", "torsion", "diagonal", "canonical"}};
  for (const auto& r : resolved) {
    if (!r.phi) {
      if (!o.json_out)
        std::cerr << "note: " << r.record.name << ": no matrix, skipped\n";
      continue;
    }
    TorsionOrder t = torsion_order(*r.phi);
    if (o.json_out) {
      ordered_json j;
      j["name"] = r.record.name;
      j["det"] = r.det.get_str();
      j["sigma"] = r.sigma;
      j["torsion"] = t.str();
      ordered_json diag = ordered_json::array();
      for (const auto& e : r.phi->entries()) diag.push_back(rat_str(e));
      j["diagonal"] = diag;
      j["canonical"] = canonical_str(*r.phi);
      j["invariant"] = witt_invariant(*r.phi).str();
      out.push_back(std::move(j));
    } else {
      table.push_back({r.record.name, r.det.get_str(), std::to_string(r.sigma),
                       t.str(), r.phi->str(), canonical_str(*r.phi)});
    }
  }
  if (o.json_out)
    std::cout << out.dump(2) << "\n";
  else
    print_table(table);
  return worst_exit;
}

// ---- obstruct-u1 ---------------------------------------------------------

int cmd_obstruct_u1(const CommonOpts& o) {
  auto resolved = resolve_all(load(o), o);
  std::vector<std::optional<ObstructionVerdict>> verdicts(resolved.size());
  parallel_for(resolved.size(), o.jobs, [&](std::size_t i) {
    const auto& r = resolved[i];
    if (r.phi && !r.validation_failed)
      verdicts[i] = u1_obstruction(*r.phi, r.det, r.sigma);
  });

  ordered_json out = ordered_json::array();
  std::vector<std::vector<std::string>> table{{"name", "det", "sigma",
                                              "positive", "negative",
                                              "verdict", "witness"}};
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    const auto& r = resolved[i];
    if (!verdicts[i]) {
      std::cerr << "note: " << r.record.name
                << ": skipped (no usable matrix)\n";
      continue;
    }
    const auto& v = *verdicts[i];
    std::string verdict = v.obstructed ? "obstructed (u >= 2)" : "consistent";
    if (v.signature_excluded) verdict = "obstructed (signature)";
    bool mismatch = false;
    if (r.record.u1_known) {
      if (*r.record.u1_known && v.obstructed) {
        verdict += "  ** contradicts stored u1=true **";
        mismatch = true;
        flag_exit(3);
      } else if (*r.record.u1_known) {
        verdict += " [matches stored u1=true]";
      }
    }
    std::string wit = v.witness ? witness_str(*v.witness) : "-";
    if (o.json_out) {
      ordered_json j;
      j["name"] = r.record.name;
      j["det"] = r.det.get_str();
      j["sigma"] = r.sigma;
      j["positive"] = case_json(v.positive_case);
      j["negative"] = case_json(v.negative_case);
      j["obstructed"] = v.obstructed;
      j["signature_excluded"] = v.signature_excluded;
      if (v.witness) j["witness"] = witness_json(*v.witness);
      if (r.record.u1_known) {
        j["u1_known"] = *r.record.u1_known;
        j["assertion_mismatch"] = mismatch;
      }
      out.push_back(std::move(j));
    } else {
      table.push_back({r.record.name, r.det.get_str(), std::to_string(r.sigma),
                       case_str(v.positive_case), case_str(v.negative_case),
                       verdict, wit});
    }
  }
  if (o.json_out)
    std::cout << out.dump(2) << "\n";
  else
    print_table(table);
  return worst_exit;
}

// ---- obstruct-u2 ---------------------------------------------------------

int cmd_obstruct_u2(const CommonOpts& o, const std::string& d_range,
                    const std::string& candidates_path) {
  auto resolved = resolve_all(load(o), o);
  ordered_json out = ordered_json::array();
  for (const auto& r : resolved) {
    if (!r.phi || r.validation_failed) {
      std::cerr << "note: " << r.record.name
                << ": skipped (no usable matrix)\n";
      continue;
    }
    DiagonalForm phi = *r.phi;
    int sigma = r.sigma;
    bool mirrored = false;
    if (sigma > 0) {  // the target rows assume sigma(K) <= 0
      phi = negate(phi);
      sigma = -sigma;
      mirrored = true;
    }
    ordered_json j;
    j["name"] = r.record.name;
    j["det"] = r.det.get_str();
    j["sigma"] = r.sigma;
    j["mirrored_internally"] = mirrored;
    if (sigma != 0 && sigma != -2 && sigma != -4) {
      std::string note = "no applicable rows: |sigma| > 4 already forces u > 2";
      if (o.json_out) {
        j["note"] = note;
        out.push_back(std::move(j));
      } else {
        std::cout << r.record.name << ": " << note << "\n";
      }
      continue;
    }

    std::vector<Int> d_values;
    std::vector<KnotRecord> cand;
    if (!candidates_path.empty()) {
      CommonOpts co;
      co.input = candidates_path;
      cand = ingest(candidates_path, detect_format(co), IngestMode::Scalars);
      for (const auto& c : cand)
        if (c.det && mpz_odd_p(c.det->get_mpz_t()) && *c.det > 0)
          d_values.push_back(*c.det);
    } else {
      long lo = 1, hi = 75;
      auto dots = d_range.find("..");
      if (!d_range.empty()) {
        if (dots == std::string::npos)
          throw CLI::ValidationError("--d-range must look like LO..HI");
        lo = std::stol(d_range.substr(0, dots));
        hi = std::stol(d_range.substr(dots + 2));
      }
      for (long d = lo; d <= hi; ++d)
        if (d % 2 == 1) d_values.push_back(d);
    }
    // Dedupe while preserving order (table dets can repeat).
    std::vector<Int> unique_d;
    for (const Int& d : d_values)
      if (std::find(unique_d.begin(), unique_d.end(), d) == unique_d.end())
        unique_d.push_back(d);

    std::vector<Int> survivors =
        u2_candidate_filter(phi, r.det, sigma, unique_d);
    auto survives = [&](const Int& d) {
      return std::find(survivors.begin(), survivors.end(), d) !=
             survivors.end();
    };

    ordered_json surv = ordered_json::array();
    std::string surv_str;
    {
      std::vector<Int> sorted = survivors;
      std::sort(sorted.begin(), sorted.end());
      for (const Int& d : sorted) {
        surv.push_back(d.get_str());
        if (!surv_str.empty()) surv_str += ", ";
        surv_str += d.get_str();
      }
    }
    j["surviving_det"] = surv;

    // Table mode: a knot can be the intermediate knot iff it is known to
    // have u = 1, its determinant survives, and its signature is -2 in
    // one of its two orientations. Candidates are named as neighbors of
    // the sigma >= 0 presentation of K: rows tabulated with sigma = -2
    // print mirrored (m prefix), rows with sigma = +2 print plain.
    ordered_json knots = ordered_json::array();
    std::vector<std::string> names;
    if (!candidates_path.empty()) {
      for (const auto& c : cand) {
        if (!c.u1_known || !*c.u1_known) continue;
        if (!c.det || !c.sigma) continue;
        if (*c.sigma != -2 && *c.sigma != 2) continue;
        if (!survives(*c.det)) continue;
        std::string shown = (*c.sigma == -2 ? "m" : "") + c.name;
        names.push_back(shown);
        knots.push_back({{"name", c.name},
                         {"rendered", shown},
                         {"det", c.det->get_str()},
                         {"sigma", *c.sigma}});
      }
      j["candidate_knots"] = knots;
    }

    if (o.json_out) {
      out.push_back(std::move(j));
    } else {
      std::cout << r.record.name << " (det " << r.det.get_str() << ", sigma "
                << r.sigma << (mirrored ? ", mirrored to sigma <= 0" : "")
                << ")\n";
      std::cout << "  surviving det(L): {" << surv_str << "}\n";
      if (!candidates_path.empty()) {
        std::string list;
        for (const auto& n : names) {
          if (!list.empty()) list += ", ";
          list += n;
        }
        std::cout << "  candidate knots:  {" << list << "}\n";
      }
    }
  }
  if (o.json_out) std::cout << out.dump(2) << "\n";
  return worst_exit;
}

// ---- pretzel -------------------------------------------------------------

ordered_json pretzel_check_json(const PretzelCheck& c) {
  ordered_json j;
  j["obstructed"] = c.obstructed;
  j["phi"] = c.phi.str();
  j["target"] = c.target.str();
  ordered_json seps = ordered_json::array();
  for (const Int& p : c.separating) seps.push_back(p.get_str());
  j["separating"] = seps;
  if (c.witness) j["witness"] = witness_json(*c.witness);
  return j;
}

void print_pretzel_class(const std::string& label, const PretzelClass& pc,
                         bool json_out, ordered_json& out) {
  Int adet = abs(pc.signed_det);
  auto verdict = u1_obstruction(pc.phi, adet, pc.sigma);
  std::string v = verdict.obstructed ? "obstructed (u >= 2)" : "consistent";
  if (json_out) {
    ordered_json j;
    j["params"] = label;
    j["phi"] = pc.phi.str();
    j["sigma"] = pc.sigma;
    j["signed_det"] = pc.signed_det.get_str();
    j["u1"] = v;
    if (verdict.witness) j["witness"] = witness_json(*verdict.witness);
    out.push_back(std::move(j));
  } else {
    std::cout << label << ": phi = " << pc.phi.str()
              << ", sigma = " << pc.sigma
              << ", det = " << pc.signed_det.get_str() << ", u1 " << v;
    if (verdict.witness) std::cout << " [" << witness_str(*verdict.witness) << "]";
    std::cout << "\n";
  }
}

int cmd_pretzel(bool json_out, const std::vector<long>& three,
                const std::vector<long>& four,
                const std::vector<long>& check1, long check2, long family_p,
                const std::string& grid, const std::vector<long>& stab) {
  ordered_json out = ordered_json::array();
  // With --stabilize the closed form is evaluated on the base strands; the
  // inserted (p, -p) pair keeps the class and signature and multiplies the
  // signed determinant by -p^2, so the verdict is recomputed for the larger
  // knot from the same class.
  auto emit = [&](const PretzelParams& base, PretzelClass pc) {
    PretzelParams shown = base;
    if (!stab.empty()) {
      shown = upward_stabilize(base, Int(stab[0]),
                               static_cast<std::size_t>(stab[1]),
                               static_cast<std::size_t>(stab[2]));
      pc.signed_det *= -Int(stab[0]) * Int(stab[0]);
    }
    std::string label = "P(";
    for (std::size_t i = 0; i < shown.strands.size(); ++i)
      label += (i ? "," : "") + shown.strands[i].get_str();
    label += ")";
    print_pretzel_class(label, pc, json_out, out);
  };

  if (!three.empty()) {
    auto base =
        PretzelParams::create({Int(three[0]), Int(three[1]), Int(three[2])});
    emit(base, pretzel3_class(base));
  }
  if (!four.empty()) {
    auto base = PretzelParams::create(
        {Int(four[0]), Int(four[1]), Int(four[2]), Int(four[3])});
    emit(base, pretzel4_class(base));
  }
  if (!check1.empty()) {
    auto c = check_pretzel1(Int(check1[0]), Int(check1[1]));
    if (json_out) {
      ordered_json j = pretzel_check_json(c);
      j["check"] = "family P(p1, 4-p1, p3)";
      out.push_back(std::move(j));
    } else {
      std::cout << "check1(" << check1[0] << ", " << check1[1]
                << "): " << (c.obstructed ? "obstructed (u >= 2)" : "not obstructed");
      if (c.witness) std::cout << " [" << witness_str(*c.witness) << "]";
      std::cout << "\n";
    }
  }
  if (check2 > 0) {
    auto c = check_pretzel2(Int(check2));
    if (json_out) {
      ordered_json j = pretzel_check_json(c);
      j["check"] = "family P(p,p,p,-3p-1)";
      out.push_back(std::move(j));
    } else {
      std::cout << "check2(" << check2
                << "): " << (c.obstructed ? "obstructed (u >= 2)" : "not obstructed");
      if (c.witness) std::cout << " [" << witness_str(*c.witness) << "]";
      std::cout << "\n";
    }
  }
  if (family_p > 0) {
    // Grid over the family p_param = 2 + (2k+1) * p^(l+1).
    unsigned K = 2, L = 2;
    if (!grid.empty()) {
      auto x = grid.find('x');
      if (x == std::string::npos)
        throw CLI::ValidationError("--grid must look like KxL");
      K = static_cast<unsigned>(std::stoul(grid.substr(0, x)));
      L = static_cast<unsigned>(std::stoul(grid.substr(x + 1)));
    }
    bool all = true;
    for (unsigned k = 0; k < K; ++k)
      for (unsigned l = 0; l < L; ++l) {
        Int pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(family_p),
                      l + 1);
        Int pp = 2 + (2 * Int(k) + 1) * pe;
        auto c = check_pretzel2(pp);
        all = all && c.obstructed;
        if (json_out) {
          ordered_json j = pretzel_check_json(c);
          j["k"] = k;
          j["l"] = l;
          j["p"] = pp.get_str();
          out.push_back(std::move(j));
        } else {
          std::cout << "family p=" << pp.get_str() << " (k=" << k
                    << ", l=" << l << "): "
                    << (c.obstructed ? "obstructed" : "not obstructed");
          if (c.witness) std::cout << " [" << witness_str(*c.witness) << "]";
          std::cout << "\n";
        }
      }
    if (!json_out)
      std::cout << (all ? "all obstructed" : "NOT all obstructed") << "\n";
  }
  if (json_out) std::cout << out.dump(2) << "\n";
  return worst_exit;
}

// ---- lickorish -----------------------------------------------------------

void lickorish_line(const std::string& name, const Int& p, const Int& q,
                    const Int& det, const std::optional<DiagonalForm>& phi,
                    bool json_out, ordered_json& out) {
  auto lens = LensSurgeryDescription::create(p, q);
  bool ok = lickorish_solvable(lens, det);
  std::string verdict = ok ? "solvable" : "no solution: u > 1";
  if (json_out) {
    ordered_json j;
    if (!name.empty()) j["name"] = name;
    j["p"] = p.get_str();
    j["q"] = q.get_str();
    j["det"] = det.get_str();
    j["solvable"] = ok;
    j["verdict"] = verdict;
    if (phi) j["phi"] = phi->str();
    out.push_back(std::move(j));
  } else {
    if (!name.empty()) std::cout << name << ": ";
    std::cout << "L(" << p.get_str() << ", " << q.get_str() << "), det "
              << det.get_str() << ": " << verdict;
    if (phi) std::cout << "  [phi = " << phi->str() << "]";
    std::cout << "\n";
  }
}

int cmd_lickorish(const CommonOpts& o, const std::vector<long>& pqd) {
  ordered_json out = ordered_json::array();
  if (!pqd.empty()) {
    lickorish_line("", Int(pqd[0]), Int(pqd[1]), Int(pqd[2]), std::nullopt,
                   o.json_out, out);
  } else {
    auto resolved = resolve_all(load(o), o);
    for (const auto& r : resolved) {
      if (!r.record.lens) {
        std::cerr << "note: " << r.record.name << ": no lens data, skipped\n";
        continue;
      }
      lickorish_line(r.record.name, r.record.lens->first,
                     r.record.lens->second, r.det, r.phi, o.json_out, out);
    }
  }
  if (o.json_out) std::cout << out.dump(2) << "\n";
  return worst_exit;
}

// ---- report --------------------------------------------------------------

int cmd_report(const CommonOpts& o) {
  auto resolved = resolve_all(load(o), o);
  ordered_json out = ordered_json::array();
  std::vector<std::vector<std::string>> table{
      {"name", "det", "sigma", "phi", "u1 verdict", "witness", "lens"}};
  for (const auto& r : resolved) {
    ordered_json j;
    j["name"] = r.record.name;
    j["det"] = r.det.get_str();
    j["sigma"] = r.sigma;
    std::string phi_s = "-", u1_s = "-", wit_s = "-", lens_s = "-";
    if (r.phi && !r.validation_failed) {
      phi_s = r.phi->str();
      j["phi"] = phi_s;
      auto v = u1_obstruction(*r.phi, r.det, r.sigma);
      u1_s = v.obstructed ? "obstructed (u >= 2)" : "consistent";
      if (v.signature_excluded) u1_s = "obstructed (signature)";
      if (v.witness) wit_s = witness_str(*v.witness);
      j["u1"] = u1_s;
      if (v.witness) j["witness"] = witness_json(*v.witness);
    }
    if (r.record.lens) {
      auto lens = LensSurgeryDescription::create(r.record.lens->first,
                                                 r.record.lens->second);
      bool ok = lickorish_solvable(lens, r.det);
      lens_s = "L(" + r.record.lens->first.get_str() + "," +
               r.record.lens->second.get_str() + "): " +
               (ok ? "solvable" : "no solution: u > 1");
      j["lens"] = lens_s;
    }
    out.push_back(std::move(j));
    table.push_back({r.record.name, r.det.get_str(), std::to_string(r.sigma),
                     phi_s, u1_s, wit_s, lens_s});
  }
  if (o.json_out)
    std::cout << out.dump(2) << "\n";
  else
    print_table(table);
  return worst_exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational Witt classes and unknotting obstructions"};
  app.require_subcommand(1);

  CommonOpts compute_o, u1_o, u2_o, lick_o, report_o;
  std::string d_range, candidates;
  bool pretzel_json = false;
  std::vector<long> three, four, check1, lick_pqd, stab;
  long check2 = 0, family_p = 0;
  std::string grid;

  auto* c_compute = app.add_subcommand("compute", "diagonal class, det, sigma");
  add_common(c_compute, compute_o, true);

  auto* c_u1 = app.add_subcommand("obstruct-u1", "unknotting number 1 test");
  add_common(c_u1, u1_o, true);

  auto* c_u2 = app.add_subcommand("obstruct-u2",
                                  "intermediate-knot filter for u = 2");
  add_common(c_u2, u2_o, true);
  c_u2->add_option("--d-range", d_range, "candidate determinants LO..HI");
  c_u2->add_option("--candidates", candidates,
                   "CSV table of candidate knots (name, det, sigma, u1)");

  auto* c_pretzel = app.add_subcommand("pretzel", "pretzel family checks");
  c_pretzel->add_flag("--json", pretzel_json, "machine-readable output");
  c_pretzel->add_option("--three", three, "3-strand parameters")
      ->expected(3);
  c_pretzel->add_option("--four", four, "4-strand parameters")->expected(4);
  c_pretzel->add_option("--check1", check1, "p1 p3 for the P(p1,4-p1,p3) test")
      ->expected(2);
  c_pretzel->add_option("--check2", check2, "p for the P(p,p,p,-3p-1) test");
  c_pretzel->add_option("--four-family", family_p,
                        "prime for the p = 2+(2k+1)*prime^(l+1) family");
  c_pretzel->add_option("--grid", grid, "k x l grid size, e.g. 3x3");
  c_pretzel->add_option("--stabilize", stab,
                        "insert strands p at pos1, -p at pos2")
      ->expected(3);

  auto* c_lick = app.add_subcommand("lickorish", "lens-space congruence test");
  add_common(c_lick, lick_o, false);
  c_lick->add_option("pqd", lick_pqd, "positional: p q det")->expected(0, 3);

  auto* c_report = app.add_subcommand("report", "combined report");
  add_common(c_report, report_o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (c_compute->parsed()) return cmd_compute(compute_o);
    if (c_u1->parsed()) return cmd_obstruct_u1(u1_o);
    if (c_u2->parsed()) return cmd_obstruct_u2(u2_o, d_range, candidates);
    if (c_pretzel->parsed())
      return cmd_pretzel(pretzel_json, three, four, check1, check2, family_p,
                         grid, stab);
    if (c_lick->parsed()) {
      if (!lick_pqd.empty() && lick_pqd.size() != 3) {
        std::cerr << "error: lickorish needs p q det\n";
        return 1;
      }
      if (lick_pqd.empty() && lick_o.input.empty()) {
        std::cerr << "error: lickorish needs p q det or --input\n";
        return 1;
      }
      return cmd_lickorish(lick_o, lick_pqd);
    }
    if (c_report->parsed()) return cmd_report(report_o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return worst_exit;
}
