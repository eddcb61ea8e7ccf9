#include "pretzel/record.hpp"

#include <sstream>

namespace pretzel {

namespace {

std::vector<long> to_vec(const Vec2& v) { return {v(0), v(1)}; }

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

VerdictRecord make_record(const PretzelTuple& t, const Verdict& v) {
  const ObstructionTrace& tr = v.trace;
  VerdictRecord r;
  r.tuple = t.params();
  r.key = mutation_key(t);
  r.knot_class = to_string(tr.knot_class);
  r.verdict = to_string(v.kind);
  if (v.reason) r.reason = to_string(*v.reason);
  if (tr.signature) r.sigma = tr.signature->sigma;
  if (tr.determinant) r.det = tr.determinant->str();
  if (tr.pairs) r.pairs = tr.pairs->t;
  if (tr.normalized) {
    const auto& q = *tr.normalized;
    r.normalized = std::vector<int>{q.a, q.b, q.c, q.d, q.e};
    r.mirrored = q.mirrored;
  }
  if (tr.embedding_checked) r.num_embedding_solutions = static_cast<int>(tr.embedding_solutions.size());
  for (std::size_t i = 0; i < tr.embedding_solutions.size(); ++i) {
    const auto& s = tr.embedding_solutions[i];
    const auto& c = tr.coset_reports[i];
    r.solutions.push_back({{s.alpha, s.beta, s.gamma, s.x, s.y, s.z},
                           to_vec(c.v1_tilde), to_vec(c.v2_tilde),
                           c.R, c.H, c.H_bar, c.cond_I, c.cond_II, c.full_coverage,
                           c.H_bar_bound});
  }
  r.single_twists = tr.single_twists;
  r.simple_ribbon = tr.simple_ribbon;
  r.mutant_ribbon = tr.mutant_ribbon;
  if (tr.ribbon_witness) {
    std::vector<std::vector<int>> steps;
    for (const auto& m : tr.ribbon_witness->moves) steps.push_back(m.arrangement.params());
    steps.push_back(tr.ribbon_witness->reduced.params());
    r.ribbon_witness = steps;
  }
  if (tr.ribbon_mutant) r.ribbon_mutant = tr.ribbon_mutant->params();
  if (tr.unit_pair_reduced) r.unit_pair_reduced = tr.unit_pair_reduced->params();
  return r;
}

nlohmann::ordered_json to_json(const VerdictRecord& r) {
  nlohmann::ordered_json j;
  j["tuple"] = r.tuple;
  j["key"] = r.key;
  j["class"] = r.knot_class;
  j["verdict"] = r.verdict;
  j["reason"] = opt(r.reason);
  j["sigma"] = opt(r.sigma);
  j["det"] = opt(r.det);
  j["pairs"] = opt(r.pairs);
  j["normalized"] = opt(r.normalized);
  j["mirrored"] = opt(r.mirrored);
  j["num_embedding_solutions"] = opt(r.num_embedding_solutions);
  auto sols = nlohmann::ordered_json::array();
  for (const auto& s : r.solutions) {
    nlohmann::ordered_json js;
    js["solution"] = s.solution;
    js["v1_tilde"] = s.v1_tilde;
    js["v2_tilde"] = s.v2_tilde;
    js["R"] = s.R;
    js["H"] = s.H;
    js["H_bar"] = s.H_bar;
    js["cond_I"] = s.cond_I;
    js["cond_II"] = s.cond_II;
    js["full_coverage"] = s.full_coverage;
    js["H_bar_bound"] = opt(s.H_bar_bound);
    sols.push_back(std::move(js));
  }
  j["solutions"] = std::move(sols);
  j["flags"] = {{"single_twists", r.single_twists},
                {"simple_ribbon", r.simple_ribbon},
                {"mutant_ribbon", r.mutant_ribbon}};
  j["ribbon_witness"] = opt(r.ribbon_witness);
  j["ribbon_mutant"] = opt(r.ribbon_mutant);
  j["unit_pair_reduced"] = opt(r.unit_pair_reduced);
  return j;
}

VerdictRecord record_from_json(const nlohmann::json& j) {
  VerdictRecord r;
  r.tuple = j.at("tuple").get<std::vector<int>>();
  r.key = j.at("key").get<std::vector<int>>();
  r.knot_class = j.at("class").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.reason = get_opt<std::string>(j, "reason");
  r.sigma = get_opt<int>(j, "sigma");
  r.det = get_opt<std::string>(j, "det");
  r.pairs = get_opt<int>(j, "pairs");
  r.normalized = get_opt<std::vector<int>>(j, "normalized");
  r.mirrored = get_opt<bool>(j, "mirrored");
  r.num_embedding_solutions = get_opt<int>(j, "num_embedding_solutions");
  for (const auto& js : j.at("solutions")) {
    SolutionRecord s;
    s.solution = js.at("solution").get<std::vector<long>>();
    s.v1_tilde = js.at("v1_tilde").get<std::vector<long>>();
    s.v2_tilde = js.at("v2_tilde").get<std::vector<long>>();
    s.R = js.at("R").get<long>();
    s.H = js.at("H").get<long>();
    s.H_bar = js.at("H_bar").get<long>();
    s.cond_I = js.at("cond_I").get<bool>();
    s.cond_II = js.at("cond_II").get<bool>();
    s.full_coverage = js.at("full_coverage").get<bool>();
    s.H_bar_bound = get_opt<long>(js, "H_bar_bound");
    r.solutions.push_back(std::move(s));
  }
  const auto& flags = j.at("flags");
  r.single_twists = flags.at("single_twists").get<bool>();
  r.simple_ribbon = flags.at("simple_ribbon").get<bool>();
  r.mutant_ribbon = flags.at("mutant_ribbon").get<bool>();
  r.ribbon_witness = get_opt<std::vector<std::vector<int>>>(j, "ribbon_witness");
  r.ribbon_mutant = get_opt<std::vector<int>>(j, "ribbon_mutant");
  r.unit_pair_reduced = get_opt<std::vector<int>>(j, "unit_pair_reduced");
  return r;
}

std::string csv_header() {
  return "tuple,key,class,verdict,reason,sigma,det,pairs,normalized,mirrored,"
         "num_embedding_solutions,R,H,H_bar,full_coverage,single_twists,simple_ribbon,"
         "mutant_ribbon";
}

std::string to_csv_row(const VerdictRecord& r) {
  // Lists use spaces inside a field; per-solution columns use ';'.
  std::ostringstream os;
  std::string rs, hs, hbs, fcs;
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    const std::string sep = i ? ";" : "";
    rs += sep + std::to_string(r.solutions[i].R);
    hs += sep + std::to_string(r.solutions[i].H);
    hbs += sep + std::to_string(r.solutions[i].H_bar);
    fcs += sep + csv_bool(r.solutions[i].full_coverage);
  }
  os << join(r.tuple, ' ') << ',' << join(r.key, ' ') << ',' << r.knot_class << ','
     << r.verdict << ',' << r.reason.value_or("") << ','
     << (r.sigma ? std::to_string(*r.sigma) : "") << ',' << r.det.value_or("") << ','
     << (r.pairs ? std::to_string(*r.pairs) : "") << ','
     << (r.normalized ? join(*r.normalized, ' ') : "") << ','
     << (r.mirrored ? csv_bool(*r.mirrored) : "") << ','
     << (r.num_embedding_solutions ? std::to_string(*r.num_embedding_solutions) : "") << ','
     << rs << ',' << hs << ',' << hbs << ',' << fcs << ',' << csv_bool(r.single_twists) << ','
     << csv_bool(r.simple_ribbon) << ',' << csv_bool(r.mutant_ribbon);
  return os.str();
}

std::string to_text(const VerdictRecord& r) {
  std::ostringstream os;
  os << "knot        P(" << join(r.tuple, ',') << ")  [" << r.knot_class << "]\n";
  os << "verdict     " << r.verdict;
  if (r.reason) os << " (" << *r.reason << ")";
  os << "\n";
  if (r.sigma) os << "signature   " << *r.sigma << "\n";
  if (r.det) os << "determinant " << *r.det << "\n";
  if (r.pairs) os << "pairs       " << *r.pairs << "\n";
  if (r.normalized) {
    const auto& n = *r.normalized;
    os << "normalized  P(" << -n[0] << ',' << -n[1] << ',' << -n[2] << ',' << n[3] << ',' << n[4]
       << ")" << (r.mirrored.value_or(false) ? " (mirrored)" : "") << "\n";
  }
  if (r.num_embedding_solutions) os << "embeddings  " << *r.num_embedding_solutions << "\n";
  for (const auto& s : r.solutions) {
    os << "  (alpha,beta,gamma,x,y,z) = (";
    for (std::size_t i = 0; i < s.solution.size(); ++i) os << (i ? "," : "") << s.solution[i];
    os << ")  v1~=(" << s.v1_tilde[0] << ',' << s.v1_tilde[1] << ") v2~=(" << s.v2_tilde[0] << ','
       << s.v2_tilde[1] << ")  |R|=" << s.R << " |H|=" << s.H << " |H_bar|=" << s.H_bar
       << (s.full_coverage ? "  full coverage" : "  coverage fails") << "\n";
  }
  os << "flags       single_twists=" << csv_bool(r.single_twists)
     << " simple_ribbon=" << csv_bool(r.simple_ribbon)
     << " mutant_ribbon=" << csv_bool(r.mutant_ribbon) << "\n";
  if (r.ribbon_witness) {
    os << "ribbon      ";
    for (std::size_t i = 0; i < r.ribbon_witness->size(); ++i)
      os << (i ? " -> " : "") << "P(" << join((*r.ribbon_witness)[i], ',') << ")";
    os << "\n";
  } else if (r.ribbon_mutant) {
    os << "mutant of   P(" << join(*r.ribbon_mutant, ',') << ") (simple ribbon)\n";
  }
  if (r.unit_pair_reduced)
    os << "unit pair   concordant to P(" << join(*r.unit_pair_reduced, ',') << ")\n";
  return os.str();
}

}  // namespace pretzel
