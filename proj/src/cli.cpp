#include "hhext/cli.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "hhext/error.hpp"
#include "hhext/exterior.hpp"
#include "hhext/field.hpp"
#include "hhext/formulas.hpp"
#include "hhext/resolution.hpp"
#include "hhext/ring.hpp"

namespace hhext::cli {

using nlohmann::json;
using exactla::Field;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    case Status::finding: return "finding";
  }
  return "?";
}

namespace {

const std::vector<std::string> kCommands{"dims", "verify", "ring", "cyclic"};
const std::vector<std::string> kSuites{"resolution", "ranks", "identities", "oracle", "ring", "all"};

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "?";
}

json P(std::initializer_list<std::pair<const std::string, json>> kv) { return json(std::map<std::string, json>(kv)); }

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

std::vector<unsigned> RunConfig::n_values() const {
  if (n) return {*n};
  std::vector<unsigned> out;
  for (unsigned k = 2; k <= n_max; ++k) out.push_back(k);
  return out;
}

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw DomainError("unknown command '" + command + "'");
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw DomainError("unknown suite '" + suite + "'");
  if (n && *n < 2) throw DomainError("--n must be at least 2");
  if (n && *n > exterior::kMaxGenerators) throw DomainError("--n is too large");
  if (!n && n_max < 2) throw DomainError("--n-max must be at least 2");
  if (!n && n_max > exterior::kMaxGenerators) throw DomainError("--n-max is too large");
  if (characteristics.empty()) throw DomainError("at least one --char is needed");
  for (auto c : characteristics)
    if (c != 0 && !exactla::is_prime(c)) throw DomainError("--char " + std::to_string(c) + " is neither 0 nor prime");
  if (command == "cyclic")
    for (auto c : characteristics)
      if (c != 0) throw DomainError("cyclic homology is only available in characteristic 0");
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  if (n)
    j["n"] = *n;
  else
    j["n_max"] = n_max;
  j["m_max"] = m_max;
  j["deg_max"] = deg_max;
  j["char"] = characteristics;
  if (command == "verify") j["suite"] = suite;
  j["format"] = format_name(format);
  j["oracle_cap"] = oracle_cap;
  j["strict_findings"] = strict_findings;
  if (command == "dims") j["formula_only"] = formula_only;
  return j;
}

// ---------------------------------------------------------------------------
// Report

Report::Report(RunConfig config) : config_(std::move(config)) {
  if (config_.timestamp) timestamp = utc_now();
}

void Report::add(Record r) { records_.push_back(std::move(r)); }

void Report::compare(std::string id, json params, json expected, json computed, std::string note) {
  const Status s = expected == computed ? Status::pass : Status::fail;
  add({std::move(id), std::move(params), std::move(expected), std::move(computed), s, std::move(note)});
}

void Report::check(std::string id, json params, bool ok, std::string note) {
  add({std::move(id), std::move(params), true, ok, ok ? Status::pass : Status::fail, std::move(note)});
}

void Report::skip(std::string id, json params, std::string reason) {
  add({std::move(id), std::move(params), nullptr, nullptr, Status::skip, std::move(reason)});
}

void Report::finding(std::string id, json params, json expected, json computed, std::string note) {
  const Status s = config_.strict_findings ? Status::fail : Status::finding;
  add({std::move(id), std::move(params), std::move(expected), std::move(computed), s, std::move(note)});
}

void Report::finalize() {
  std::stable_sort(records_.begin(), records_.end(), [](const Record& a, const Record& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.params < b.params;
  });
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records_) {
    switch (r.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::skip: ++s.skip; break;
      case Status::finding: ++s.findings; break;
    }
  }
  return s;
}

int Report::exit_code() const { return summary().fail == 0 ? 0 : 1; }

json to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

// ---------------------------------------------------------------------------
// Checks shared by several commands

namespace {

json J(std::size_t v) { return static_cast<std::uint64_t>(v); }

void dims_records(Report& r, unsigned n, std::uint32_t c, unsigned m_max, bool computed) {
  const Field field = Field::of_characteristic(c);
  for (unsigned m = 0; m <= m_max; ++m) {
    const json params = P({{"n", n}, {"m", m}, {"char", c}});
    const mpz_class hh = formulas::hh_dim_formula(n, m, c);
    const mpz_class hhc = formulas::hhc_dim_formula(n, m, c);
    if (computed) {
      r.compare("dims.hh", params, to_json(hh), J(complexes::hh_dim_computed(n, m, field)));
      r.compare("dims.hhc", params, to_json(hhc), J(complexes::hhc_dim_computed(n, m, field)));
    } else {
      r.add({"dims.hh", params, to_json(hh), nullptr, Status::pass, "formula only"});
      r.add({"dims.hhc", params, to_json(hhc), nullptr, Status::pass, "formula only"});
    }
  }
  const auto hilbert = formulas::hilbert_coeffs(n, c, m_max);
  for (unsigned m = 0; m <= m_max; ++m)
    r.compare("dims.hilbert", P({{"n", n}, {"m", m}, {"char", c}}), to_json(hilbert[m]),
              to_json(formulas::hhc_dim_formula(n, m, c)));
}

/// hc via the recurrence from the given hh values.
std::vector<mpz_class> hc_from_recurrence(const std::vector<mpz_class>& hh) {
  std::vector<mpz_class> hc;
  mpz_class previous = 0;
  for (unsigned m = 0; m < hh.size(); ++m) {
    const mpz_class current = -previous + hh[m] - (m == 0 ? 1 : 0);
    hc.push_back(current + (m % 2 == 0 ? 1 : 0));
    previous = current;
  }
  return hc;
}

std::vector<mpz_class> computed_hh(unsigned n, unsigned m_max) {
  std::vector<mpz_class> hh;
  for (unsigned m = 0; m <= m_max; ++m)
    hh.emplace_back(static_cast<unsigned long>(complexes::hh_dim_computed(n, m, Field::rationals())));
  return hh;
}

void cyclic_records(Report& r, unsigned n, unsigned m_max) {
  const auto hh = computed_hh(n, m_max);
  const auto hc = hc_from_recurrence(hh);
  for (unsigned m = 0; m <= m_max; ++m)
    r.compare("cyclic.hc", P({{"n", n}, {"m", m}}), to_json(formulas::hc_dim_formula(n, m)), to_json(hc[m]));
  r.check("cyclic.recurrence", P({{"n", n}, {"m_max", m_max}}), formulas::cyclic_recurrence_holds(n, hh));
}

void suite_resolution(Report& r, const RunConfig& cfg) {
  for (unsigned n : cfg.n_values())
    for (unsigned m = 1; m <= cfg.m_max; ++m) {
      const json p = P({{"n", n}, {"m", m}});
      r.check("resolution.left_right", p, resolution::verify_left_right(n, m));
      if (m >= 2) r.check("resolution.km_membership", p, resolution::verify_Km_membership(n, m));
      r.check("resolution.km_dim", p, resolution::verify_dim_Km(n, m));
      for (auto c : cfg.characteristics)
        r.check("resolution.delta_squared", P({{"n", n}, {"m", m}, {"char", c}}),
                resolution::verify_delta_squared_zero(n, m, Field::of_characteristic(c)));
    }
}

void suite_ranks(Report& r, const RunConfig& cfg) {
  for (unsigned n : cfg.n_values())
    for (auto c : cfg.characteristics) {
      const Field field = Field::of_characteristic(c);
      std::vector<std::size_t> chain(cfg.m_max + 2, 0), cochain(cfg.m_max + 1, 0);
      for (unsigned m = 1; m <= cfg.m_max + 1; ++m) {
        const auto slice = complexes::chain_matrix(n, m, field);
        chain[m] = exactla::rank(slice.matrix);
        const json p = P({{"n", n}, {"m", m}, {"char", c}});
        r.compare("ranks.chain.double_sum", p, to_json(formulas::chain_rank_double_sum(n, m, c)), J(chain[m]));
        r.compare("ranks.chain.closed_form", p,
                  to_json(c == 2 ? mpz_class(0) : formulas::chain_rank_closed_form(n, m)), J(chain[m]));
        r.check("ranks.chain.grading", p, complexes::preserves_grade(slice));
      }
      for (unsigned m = 0; m <= cfg.m_max; ++m) {
        const auto slice = complexes::cochain_matrix(n, m, field);
        cochain[m] = exactla::rank(slice.matrix);
        const json p = P({{"n", n}, {"m", m}, {"char", c}});
        r.compare("ranks.cochain.double_sum", p, to_json(formulas::cochain_rank_double_sum(n, m, c)),
                  J(cochain[m]));
        r.compare("ranks.cochain.closed_form", p,
                  to_json(c == 2 ? mpz_class(0) : formulas::cochain_rank_closed_form(n, m)), J(cochain[m]));
        r.check("ranks.cochain.grading", p, complexes::preserves_signed_degrees(slice));
      }
      if (c != 2)
        for (unsigned m = 1; m <= cfg.m_max; ++m) {
          const json p = P({{"n", n}, {"m", m}, {"char", c}});
          const mpz_class half = formulas::pow2(n - 1) * formulas::monomial_count(n, m);
          r.compare("ranks.chain.pair_sum", p, to_json(half), J(chain[m] + chain[m + 1]));
          r.compare("ranks.cochain.pair_sum", p, to_json(half), J(cochain[m - 1] + cochain[m]));
        }
      r.check("ranks.squared_zero", P({{"n", n}, {"m_max", cfg.m_max}, {"char", c}}),
              complexes::verify_sigma_squared_zero(n, cfg.m_max, field));
      dims_records(r, n, c, cfg.m_max, true);
      const mpz_class center = c == 2 ? formulas::pow2(n) : formulas::pow2(n - 1) + 1;
      r.compare("center.commutator_quotient", P({{"n", n}, {"char", c}}), to_json(center),
                J(exterior::commutator_quotient_dim(n, field)));
    }
}

void suite_identities(Report& r, const RunConfig& cfg) {
  for (unsigned n : cfg.n_values()) {
    for (unsigned m = 1; m <= cfg.m_max; ++m) {
      for (unsigned j = 0; j <= n - 1; ++j) {
        auto [lhs, rhs] = formulas::binomial_identity_sides(n, m, j);
        r.compare("identities.binomial", P({{"n", n}, {"m", m}, {"j", j}}), to_json(lhs), to_json(rhs));
      }
      r.check("identities.chain_pair_sum", P({{"n", n}, {"m", m}}), formulas::chain_rank_pair_sum_holds(n, m));
      r.check("identities.cochain_pair_sum", P({{"n", n}, {"m", m}}),
              formulas::cochain_rank_pair_sum_holds(n, m));
      r.compare("identities.chain_rank_forms", P({{"n", n}, {"m", m}}),
                to_json(formulas::chain_rank_double_sum(n, m, 0)), to_json(formulas::chain_rank_closed_form(n, m)));
    }
    for (unsigned m = 0; m <= cfg.m_max; ++m)
      r.compare("identities.cochain_rank_forms", P({{"n", n}, {"m", m}}),
                to_json(formulas::cochain_rank_double_sum(n, m, 0)),
                to_json(formulas::cochain_rank_closed_form(n, m)));
  }
}

void suite_oracle(Report& r, const RunConfig& cfg) {
  for (unsigned n : cfg.n_values())
    for (auto c : cfg.characteristics) {
      const Field field = Field::of_characteristic(c);
      complexes::BarComplex bar(std::min(n, 8U), field);
      if (n > 8) {
        for (unsigned m = 0; m <= cfg.m_max; ++m)
          r.skip("oracle.hh", P({{"n", n}, {"m", m}, {"char", c}}), "bar complex not supported for n > 8");
        continue;
      }
      unsigned feasible = 0;
      bool any = false;
      for (unsigned m = 0; m <= cfg.m_max; ++m)
        if (bar.dim(m + 1) <= cfg.oracle_cap) {
          feasible = m;
          any = true;
        } else {
          break;
        }
      std::vector<complexes::OracleDims> dims;
      if (any) dims = complexes::bar_oracle_dims(n, feasible, field, cfg.oracle_cap);
      for (unsigned m = 0; m <= cfg.m_max; ++m) {
        const json p = P({{"n", n}, {"m", m}, {"char", c}});
        if (!any || m > feasible) {
          const std::string reason = "bar complex dimension " + std::to_string(bar.dim(m + 1)) +
                                     " exceeds oracle cap " + std::to_string(cfg.oracle_cap);
          r.skip("oracle.hh", p, reason);
          r.skip("oracle.hhc", p, reason);
          continue;
        }
        r.compare("oracle.hh", p, to_json(formulas::hh_dim_formula(n, m, c)), J(dims[m].homology));
        r.compare("oracle.hhc", p, to_json(formulas::hhc_dim_formula(n, m, c)), J(dims[m].cohomology));
      }
      if (any && feasible >= 1)
        r.check("oracle.squared_zero", P({{"n", n}, {"m_max", feasible}, {"char", c}}),
                complexes::verify_bar_squared_zero(n, feasible, field, cfg.oracle_cap));
    }
}

void relation_records(Report& r, unsigned n, std::uint32_t c) {
  const auto report = ring::verify_table_h(n, Field::of_characteristic(c));
  for (const auto& f : report.families) {
    json computed = P({{"instances", J(f.instances)}, {"failures", J(f.failures)}});
    json expected = P({{"instances", J(f.instances)}, {"failures", 0}});
    r.compare("ring.relation", P({{"n", n}, {"char", c}, {"family", f.id}}), expected, computed, f.statement);
  }
}

void presentation_records(Report& r, unsigned n, std::uint32_t c, unsigned deg_max) {
  for (const auto& d : ring::presentation_graded_dims(n, deg_max, Field::of_characteristic(c))) {
    const json hh = to_json(d.hh_dim);
    const json p_inc = P({{"n", n}, {"char", c}, {"degree", d.degree}, {"reading", "inclusive"}});
    const json p_str = P({{"n", n}, {"char", c}, {"degree", d.degree}, {"reading", "strict"}});
    if (d.matches())
      r.compare("ring.presentation.count", p_inc, hh, J(d.count_inclusive));
    else
      r.finding("ring.presentation.count", p_inc, hh, J(d.count_inclusive),
                "normal forms miss the odd central class x1...xn in degree 0");
    if (hh == J(d.count_strict))
      r.compare("ring.presentation.count", p_str, hh, J(d.count_strict));
    else
      r.finding("ring.presentation.count", p_str, hh, J(d.count_strict),
                "literal lower bound 1 < i_1 drops every normal form using index 1");
    r.compare("ring.presentation.image_rank", P({{"n", n}, {"char", c}, {"degree", d.degree}}),
              J(d.count_inclusive), J(d.image_rank));
  }
}

void char2_records(Report& r, unsigned n, unsigned deg_max) {
  const auto rep = ring::char2_ring_check(n, deg_max);
  const json p = P({{"n", n}, {"deg_max", deg_max}, {"char", 2}});
  r.check("ring.char2.differentials_zero", p, rep.differentials_zero);
  r.check("ring.char2.products", p, rep.products_match, std::to_string(rep.pairs_checked) + " basis pairs");
  r.check("ring.char2.commutative", p, rep.commutative);
  r.check("ring.char2.dims", p, rep.dims_match);
  if (deg_max >= 2) r.check("ring.char2.z_square_nonzero", p, rep.z_square_nonzero);
}

void basis_records(Report& r, ring::CohomologyRing& ring, unsigned n, std::uint32_t c, unsigned deg_max,
                   bool listing) {
  for (unsigned m = 0; m <= deg_max; ++m) {
    const auto basis = ring.hh_basis(m);
    const complexes::ChainBasis chain_basis(n, m);
    exactla::SpanTester span(chain_basis.size(), ring.field());
    bool cocycles = true;
    for (const auto& b : basis) {
      cocycles = cocycles && ring.is_cocycle(b);
      span.insert(b.to_sparse(chain_basis));
    }
    const json p = P({{"n", n}, {"m", m}, {"char", c}});
    r.compare("ring.basis.count", p, to_json(formulas::hhc_dim_formula(n, m, c)), J(basis.size()));
    r.check("ring.basis.cocycles", p, cocycles);
    r.compare("ring.basis.rank", p, J(basis.size()), J(span.rank()));
    if (listing) {
      json names = json::array();
      for (const auto& b : basis) names.push_back(b.to_string());
      r.add({"ring.basis.list", p, nullptr, names, Status::pass, ""});
    }
  }
}

void axiom_records(Report& r, unsigned n, std::uint32_t c, unsigned deg_max) {
  const auto rep = ring::check_ring_axioms(n, Field::of_characteristic(c), deg_max);
  const json p = P({{"n", n}, {"char", c}, {"deg_max", deg_max}});
  r.compare("ring.associative", p, 0, J(rep.associativity_failures), std::to_string(rep.triples) + " triples");
  r.compare("ring.graded_commutative", p, 0, J(rep.commutativity_failures),
            std::to_string(rep.pairs) + " pairs");
  r.compare("ring.unit", p, 0, J(rep.unit_failures));
}

void suite_ring(Report& r, const RunConfig& cfg) {
  for (unsigned n : cfg.n_values())
    for (auto c : cfg.characteristics) {
      if (c == 2) {
        char2_records(r, n, cfg.deg_max);
        continue;
      }
      ring::CohomologyRing ring(n, Field::of_characteristic(c));
      basis_records(r, ring, n, c, cfg.deg_max, false);
      relation_records(r, n, c);
      presentation_records(r, n, c, cfg.deg_max);
      axiom_records(r, n, c, cfg.deg_max);
    }
}

std::vector<std::pair<std::string, ring::CochainVector>> generators(unsigned n, Field field) {
  std::vector<std::pair<std::string, ring::CochainVector>> out;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      out.emplace_back("u(" + std::to_string(i) + "," + std::to_string(j) + ")", ring::gen_u(n, i, j, field));
  for (unsigned p = 1; p <= n; ++p)
    for (unsigned q = 1; q <= n; ++q)
      out.emplace_back("v(" + std::to_string(p) + "," + std::to_string(q) + ")", ring::gen_v(n, p, q, field));
  for (unsigned s = 1; s <= n; ++s)
    for (unsigned t = s; t <= n; ++t)
      out.emplace_back("w(" + std::to_string(s) + "," + std::to_string(t) + ")", ring::gen_w(n, s, t, field));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Commands

Report cmd_dims(const RunConfig& cfg) {
  cfg.validate();
  Report r(cfg);
  for (unsigned n : cfg.n_values())
    for (auto c : cfg.characteristics) {
      dims_records(r, n, c, cfg.m_max, !cfg.formula_only);
      if (c == 0)
        for (unsigned m = 0; m <= cfg.m_max; ++m)
          r.add({"dims.hc", P({{"n", n}, {"m", m}, {"char", c}}), to_json(formulas::hc_dim_formula(n, m)),
                 nullptr, Status::pass, "formula only"});
    }
  if (!cfg.formula_only)
    for (unsigned n : cfg.n_values())
      if (std::find(cfg.characteristics.begin(), cfg.characteristics.end(), 0U) != cfg.characteristics.end())
        cyclic_records(r, n, cfg.m_max);
  r.finalize();
  return r;
}

Report cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  Report r(cfg);
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "resolution") suite_resolution(r, cfg);
  if (all || cfg.suite == "ranks") suite_ranks(r, cfg);
  if (all || cfg.suite == "identities") suite_identities(r, cfg);
  if (all || cfg.suite == "oracle") suite_oracle(r, cfg);
  if (all || cfg.suite == "ring") suite_ring(r, cfg);
  r.finalize();
  return r;
}

Report cmd_ring(const RunConfig& cfg) {
  cfg.validate();
  Report r(cfg);
  for (unsigned n : cfg.n_values())
    for (auto c : cfg.characteristics) {
      if (c == 2) {
        char2_records(r, n, cfg.deg_max);
        continue;
      }
      const Field field = Field::of_characteristic(c);
      ring::CohomologyRing ring(n, field);
      const auto gens = generators(n, field);
      const std::size_t nu = n * (n - 1) / 2, nv = n * n, nw = n * (n + 1) / 2;
      std::map<char, std::size_t> counts{{'u', 0}, {'v', 0}, {'w', 0}};
      bool nontrivial = true;
      for (const auto& [name, g] : gens) {
        ++counts[name.front()];
        nontrivial = nontrivial && ring.is_cocycle(g) && !ring.is_coboundary(g);
      }
      r.compare("ring.generators", P({{"n", n}, {"char", c}}), P({{"u", J(nu)}, {"v", J(nv)}, {"w", J(nw)}}),
                P({{"u", J(counts['u'])}, {"v", J(counts['v'])}, {"w", J(counts['w'])}}));
      r.check("ring.generators.nontrivial", P({{"n", n}, {"char", c}}), nontrivial);
      for (const auto& [a, ga] : gens)
        for (const auto& [b, gb] : gens)
          r.add({"ring.cup", P({{"n", n}, {"char", c}, {"left", a}, {"right", b}}), nullptr,
                 ring.cup_class(ga, gb).to_string(), Status::pass, ""});
      basis_records(r, ring, n, c, cfg.deg_max, true);
      relation_records(r, n, c);
      presentation_records(r, n, c, cfg.deg_max);
    }
  r.finalize();
  return r;
}

Report cmd_cyclic(const RunConfig& cfg) {
  cfg.validate();
  Report r(cfg);
  for (unsigned n : cfg.n_values()) cyclic_records(r, n, cfg.m_max);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string scalar_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string params_text(const json& p) {
  std::string out;
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (!out.empty()) out += ";";
    out += it.key() + "=" + scalar_text(it.value());
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["schema"] = kSchema;
  if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;
  j["config"] = r.config().to_json();
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : r.records()) {
    nlohmann::ordered_json o;
    o["id"] = rec.id;
    o["params"] = rec.params;
    o["expected"] = rec.expected;
    o["computed"] = rec.computed;
    o["status"] = to_string(rec.status);
    if (!rec.note.empty()) o["note"] = rec.note;
    j["records"].push_back(std::move(o));
  }
  const Summary s = r.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}, {"findings", s.findings}};
  return j.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  os << "id,params,expected,computed,status,note\n";
  for (const auto& rec : r.records())
    os << csv_field(rec.id) << ',' << csv_field(params_text(rec.params)) << ','
       << csv_field(scalar_text(rec.expected)) << ',' << csv_field(scalar_text(rec.computed)) << ','
       << to_string(rec.status) << ',' << csv_field(rec.note) << '\n';
  return os.str();
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "hhext " << kVersion << " " << r.config().command;
  if (!r.timestamp.empty()) os << " " << r.timestamp;
  os << "\n";
  for (const auto& rec : r.records()) {
    os << std::left;
    os << to_string(rec.status) << "\t" << rec.id << "\t" << params_text(rec.params);
    if (!rec.expected.is_null()) os << "\texpected=" << scalar_text(rec.expected);
    if (!rec.computed.is_null()) os << "\tcomputed=" << scalar_text(rec.computed);
    if (!rec.note.empty()) os << "\t# " << rec.note;
    os << "\n";
  }
  const Summary s = r.summary();
  os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skip << " skip, " << s.findings
     << " findings\n";
  return os.str();
}

std::string render(const Report& r) {
  switch (r.config().format) {
    case Format::json: return render_json(r);
    case Format::csv: return render_csv(r);
    case Format::text: return render_text(r);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Entry point

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild (co)homology of exterior algebras, computed exactly", "hhext"};
  app.require_subcommand(1);
  RunConfig cfg;
  unsigned n = 0;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of generators (default: the range 2..n-max)")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", cfg.n_max, "largest n when --n is absent");
    sub->add_option("--m-max", cfg.m_max, "largest homological degree");
    sub->add_option("--deg-max", cfg.deg_max, "largest cohomological degree for ring checks");
    sub->add_option("--char", cfg.characteristics, "characteristic: 0 or a prime; repeatable")->delimiter(',');
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "write the report to this path");
    sub->add_option("--oracle-cap", cfg.oracle_cap, "largest bar complex dimension to build");
    sub->add_flag("--no-timestamp", "omit the timestamp so reports are byte-stable");
    sub->add_flag("--strict-findings", cfg.strict_findings, "treat documented discrepancies as failures");
  };
  CLI::App* dims = app.add_subcommand("dims", "dimension tables from formulas and matrices");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* ring_cmd = app.add_subcommand("ring", "cohomology ring: basis, products, relations");
  CLI::App* cyclic = app.add_subcommand("cyclic", "cyclic homology in characteristic 0");
  for (auto* sub : {dims, verify, ring_cmd, cyclic}) add_common(sub);
  dims->add_flag("--formula-only", cfg.formula_only, "skip the matrix computations");
  verify->add_option("--suite", cfg.suite, "resolution, ranks, identities, oracle, ring or all")
      ->check(CLI::IsMember(kSuites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hhext: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (chosen->count("--n") > 0) cfg.n = n;
  if (chosen->count("--char") == 0) cfg.characteristics = cfg.command == "cyclic" ? std::vector<std::uint32_t>{0}
                                                                                 : std::vector<std::uint32_t>{0, 2, 3};
  cfg.timestamp = chosen->count("--no-timestamp") == 0;
  cfg.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
  std::sort(cfg.characteristics.begin(), cfg.characteristics.end());
  cfg.characteristics.erase(std::unique(cfg.characteristics.begin(), cfg.characteristics.end()),
                            cfg.characteristics.end());

  try {
    cfg.validate();
  } catch (const DomainError& e) {
    err << "hhext: " << e.what() << "\n";
    return 2;
  }

  std::optional<Report> report;
  try {
    if (cfg.command == "dims")
      report = cmd_dims(cfg);
    else if (cfg.command == "verify")
      report = cmd_verify(cfg);
    else if (cfg.command == "ring")
      report = cmd_ring(cfg);
    else
      report = cmd_cyclic(cfg);
  } catch (const DomainError& e) {
    err << "hhext: " << e.what() << "\n";
    return 2;
  }

  const std::string text = render(*report);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "hhext: cannot write " << cfg.out << "\n";
      return 2;
    }
    file << text;
  }
  const Summary s = report->summary();
  if (!cfg.out.empty() || cfg.format != Format::text)
    err << "hhext: " << s.pass << " pass, " << s.fail << " fail, " << s.skip << " skip, " << s.findings
        << " findings\n";
  return report->exit_code();
}

}  // namespace hhext::cli
