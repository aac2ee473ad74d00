#include "adklab/json_io.hpp"

#include <chrono>
#include <ctime>

#include "adklab/errors.hpp"

namespace adklab {

std::string tool_version() { return "0.1.0"; }

Json to_json(const Ordinal& o) { return o.to_string(); }

Json to_json(const SpectrumSpace& s) {
  Json j;
  if (s.is_discrete()) {
    j["kind"] = "discrete";
  } else {
    j["kind"] = "interval";
    j["top"] = s.bound().to_string();
  }
  return j;
}

Json to_json(const PointSet& s) {
  Json arr = Json::array();
  for (const auto& pc : s.pieces()) {
    Json row;
    row["lower"] = pc.lower ? Json(pc.lower->to_string()) : Json(nullptr);
    row["upper"] = pc.upper.to_string();
    if (pc.rank_ge > 0) row["rank_ge"] = pc.rank_ge;
    if (pc.rank_le) row["rank_le"] = *pc.rank_le;
    arr.push_back(std::move(row));
  }
  return arr;
}

Json to_json(const Rule& r) {
  Json j;
  if (r.is_const())
    j["const"] = r.offset;
  else
    j["linear"] = Json::array({r.slope, r.offset});
  return j;
}

Json to_json(const IdealFunction& f) {
  Json j;
  j["space"] = to_json(f.space());
  Json segs = Json::array();
  Ordinal lo;
  bool first = true;
  for (const auto& s : f.segments()) {
    Json row;
    row["lower"] = first ? Json(nullptr) : Json(lo.to_string());
    row["upper"] = s.upper.to_string();
    row["rule"] = to_json(s.rule);
    segs.push_back(std::move(row));
    lo = s.upper;
    first = false;
  }
  j["segments"] = std::move(segs);
  Json ov = Json::object();
  for (const auto& [p, v] : f.overrides()) ov[p.to_string()] = v;
  j["overrides"] = std::move(ov);
  j["fg"] = f.fg();
  return j;
}

namespace {

Json tbreak_to_json(const TBreak& b) {
  if (!b.moving) return b.fixed.to_string();
  Json j;
  j["scale"] = b.scale_exp;
  j["t"] = b.t_coeff;
  j["plus"] = b.offset;
  return j;
}

TBreak tbreak_from_json(const Json& j) {
  if (j.is_string()) return TBreak::at(Ordinal::parse(j.get<std::string>()));
  return TBreak::affine(j.value("scale", 0u), j.at("t").get<std::uint64_t>(),
                        j.value("plus", 0ull));
}

Rule rule_from_json(const Json& j) {
  if (j.contains("const")) return Rule::constant(j["const"].get<std::int64_t>());
  auto arr = j.at("linear");
  return Rule::linear(arr.at(0).get<std::int64_t>(), arr.at(1).get<std::int64_t>());
}

}  // namespace

Json to_json(const TailChain& c) {
  Json j;
  j["cut"] = "t";
  Json segs = Json::array();
  for (const auto& s : c.segments()) {
    Json row;
    row["upper"] = tbreak_to_json(s.upper);
    row["rule"] = to_json(s.rule);
    segs.push_back(std::move(row));
  }
  j["segments_template"] = std::move(segs);
  Json ov = Json::object();
  for (const auto& [p, v] : c.limit_overrides()) ov[p.to_string()] = v;
  j["limit_overrides"] = std::move(ov);
  return j;
}

Json to_json(const PointFamily& f) {
  Json j;
  j["rank"] = f.rank();
  j["plateau"] = f.plateau();
  j["peak"] = f.peak();
  if (f.region()) j["region"] = to_json(*f.region());
  return j;
}

Json to_json(const GeneratorSpec& g) {
  Json j;
  if (const auto* f = std::get_if<IdealFunction>(&g))
    j["single"] = to_json(*f);
  else if (const auto* c = std::get_if<TailChain>(&g))
    j["chain"] = to_json(*c);
  else
    j["family"] = to_json(std::get<PointFamily>(g));
  return j;
}

Json to_json(const DomainModel& m) {
  Json j;
  j["name"] = m.name();
  j["space"] = to_json(m.space());
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const FractionalFunction& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

Json to_json(const ExtNat& v) {
  return v.is_infinite() ? Json("infinity") : Json(v.value());
}

Json to_json(const CritReport& r) {
  Json j;
  Json mv = Json::array();
  for (const auto& cv : r.m_values) {
    Json row;
    row["class"] = to_json(cv.cls.points);
    row["representative"] = cv.cls.representative.to_string();
    row["m"] = to_json(cv.m);
    mv.push_back(std::move(row));
  }
  j["m_values"] = std::move(mv);
  Json crit = Json::array();
  for (const auto& [n, s] : r.crit) {
    Json row;
    row["n"] = n;
    row["set"] = to_json(s);
    crit.push_back(std::move(row));
  }
  j["crit"] = std::move(crit);
  j["crit_omega"] = to_json(r.crit_omega);
  j["stable_from"] = r.stable_from;
  j["noncritical"] = to_json(r.noncritical);
  j["noncritical_dense"] = r.noncritical_dense;
  return j;
}

Json to_json(const ChainReport& r) {
  Json j;
  Json stages = Json::array();
  for (const auto& st : r.stages) {
    Json row;
    row["alpha"] = st.alpha.to_string();
    row["set"] = to_json(st.set);
    row["restricted_model"] = st.restricted_model_id;
    row["restricted_top"] =
        st.restricted_top ? Json(st.restricted_top->to_string()) : Json(nullptr);
    stages.push_back(std::move(row));
  }
  j["stages"] = std::move(stages);
  j["sp_rank_stabilization"] = r.sp_rank_stabilization.to_string();
  j["sp_rank_emptiness"] =
      r.sp_rank_emptiness ? Json(r.sp_rank_emptiness->to_string()) : Json(nullptr);
  Json layers = Json::array();
  for (const auto& [a, s] : r.height_layers) {
    Json row;
    row["alpha"] = a.to_string();
    row["layer"] = to_json(s);
    layers.push_back(std::move(row));
  }
  j["height_layers"] = std::move(layers);
  j["verdict"] = r.model_contradiction ? "model-contradiction" : "ok";
  if (r.model_contradiction) {
    j["contradiction_point"] =
        r.contradiction_point ? Json(r.contradiction_point->to_string()) : Json(nullptr);
    j["contradiction_note"] = r.contradiction_note;
  }
  return j;
}

Json to_json(const Factorization& f) {
  Json j;
  j["mode"] = f.mode == Factorization::Mode::Radical ? "radical" : "bounded";
  if (f.n) j["n"] = *f.n;
  Json factors = Json::array();
  for (const auto& g : f.factors) factors.push_back(to_json(g));
  j["factors"] = std::move(factors);
  Json certs = Json::array();
  for (const auto& c : f.certificates) {
    Json row;
    row["sup"] = to_json(c.sup);
    row["support"] = to_json(c.support);
    certs.push_back(std::move(row));
  }
  j["certificates"] = std::move(certs);
  return j;
}

Json to_json(const std::vector<TheoremCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["id"] = c.id;
    row["statement"] = c.statement;
    switch (c.status) {
      case TheoremCheck::Status::Pass: row["status"] = "pass"; break;
      case TheoremCheck::Status::Fail: row["status"] = "fail"; break;
      case TheoremCheck::Status::NotApplicable: row["status"] = "not-applicable"; break;
    }
    if (!c.detail.empty()) row["detail"] = c.detail;
    if (c.model_contradiction) row["label"] = "MODEL-CONTRADICTION";
    arr.push_back(std::move(row));
  }
  return arr;
}

Json to_json(const KernelCertificate& c) {
  Json j;
  j["in_kernel"] = c.in_kernel;
  if (c.blocking_point) j["blocking_point"] = c.blocking_point->to_string();
  if (c.num_bound) j["num_bound"] = *c.num_bound;
  if (c.den_bound) j["den_bound"] = *c.den_bound;
  return j;
}

Json to_json(const RankResult& r) {
  Json j;
  switch (r.verdict) {
    case RankResult::Verdict::Independent: j["verdict"] = "independent"; break;
    case RankResult::Verdict::Dependent: j["verdict"] = "dependent"; break;
    case RankResult::Verdict::WindowTooSmall: j["verdict"] = "window-too-small"; break;
  }
  j["rank"] = r.rank;
  if (!r.kernel_combination.empty()) j["kernel_combination"] = r.kernel_combination;
  if (r.suggested_extension)
    j["suggested_extension"] = r.suggested_extension->to_string();
  return j;
}

Ordinal ordinal_from_json(const Json& j) {
  if (!j.is_string()) fail(ErrorCode::ParseError, "ordinal must be a string");
  return Ordinal::parse(j.get<std::string>());
}

SpectrumSpace space_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "discrete") return SpectrumSpace::discrete();
  if (kind == "interval")
    return SpectrumSpace::interval(ordinal_from_json(j.at("top")));
  fail(ErrorCode::ParseError, "unknown space kind '" + kind + "'");
}

PointSet point_set_from_json(const Json& j, const SpectrumSpace& s) {
  std::vector<PointSet::Piece> pieces;
  for (const auto& row : j) {
    PointSet::Piece pc;
    if (!row.at("lower").is_null()) pc.lower = ordinal_from_json(row["lower"]);
    pc.upper = ordinal_from_json(row.at("upper"));
    pc.rank_ge = row.value("rank_ge", 0u);
    if (row.contains("rank_le")) pc.rank_le = row["rank_le"].get<std::uint32_t>();
    pieces.push_back(std::move(pc));
  }
  return PointSet::from_pieces(s, pieces);
}

IdealFunction function_from_json(const Json& j) {
  SpectrumSpace s = space_from_json(j.at("space"));
  std::vector<IdealFunction::Segment> segs;
  for (const auto& row : j.at("segments"))
    segs.push_back({ordinal_from_json(row.at("upper")), rule_from_json(row.at("rule"))});
  std::map<Ordinal, std::uint64_t> ov;
  if (j.contains("overrides"))
    for (const auto& [k, v] : j["overrides"].items())
      ov[Ordinal::parse(k)] = v.get<std::uint64_t>();
  return IdealFunction(s, std::move(segs), std::move(ov), j.value("fg", true));
}

namespace {

TailChain chain_from_json(const Json& j, const SpectrumSpace& s) {
  std::vector<TailChain::Segment> segs;
  for (const auto& row : j.at("segments_template"))
    segs.push_back({tbreak_from_json(row.at("upper")), rule_from_json(row.at("rule"))});
  std::map<Ordinal, std::uint64_t> ov;
  if (j.contains("limit_overrides"))
    for (const auto& [k, v] : j["limit_overrides"].items())
      ov[Ordinal::parse(k)] = v.get<std::uint64_t>();
  return TailChain(s, std::move(segs), std::move(ov));
}

PointFamily family_from_json(const Json& j, const SpectrumSpace& s) {
  std::optional<PointSet> region;
  if (j.contains("region")) region = point_set_from_json(j["region"], s);
  return PointFamily(s, j.at("rank").get<std::uint32_t>(),
                     j.value("plateau", 1ull), j.value("peak", 1ull), std::move(region));
}

}  // namespace

DomainModel model_from_json(const Json& j) {
  std::string name = j.at("name").get<std::string>();
  SpectrumSpace s = space_from_json(j.at("space"));
  std::vector<GeneratorSpec> gens;
  for (const auto& row : j.at("generators")) {
    if (row.contains("single")) {
      IdealFunction f = function_from_json(row["single"]);
      require_same_space(s, f.space());
      gens.emplace_back(std::move(f));
    } else if (row.contains("chain")) {
      gens.emplace_back(chain_from_json(row["chain"], s));
    } else if (row.contains("family")) {
      gens.emplace_back(family_from_json(row["family"], s));
    } else {
      fail(ErrorCode::ParseError, "generator must be single, chain or family");
    }
  }
  return DomainModel(std::move(name), s, std::move(gens));
}

namespace {

IdealFunction combo_from_json(const Json& j, const DomainModel& model) {
  if (j.contains("gen")) {
    std::size_t i = j["gen"].get<std::size_t>();
    if (i >= model.generators().size())
      fail(ErrorCode::ParseError, "combo refers to a missing generator");
    const GeneratorSpec& g = model.generators()[i];
    if (const auto* f = std::get_if<IdealFunction>(&g)) return *f;
    if (const auto* c = std::get_if<TailChain>(&g))
      return c->instantiate(j.value("t", 0ull));
    const auto& fam = std::get<PointFamily>(g);
    if (!j.contains("at"))
      fail(ErrorCode::ParseError, "family combo needs an 'at' anchor");
    return fam.member_at(Ordinal::parse(j["at"].get<std::string>()));
  }
  auto fold = [&](const Json& list, auto op) {
    std::optional<IdealFunction> acc;
    for (const auto& item : list) {
      IdealFunction f = combo_from_json(item, model);
      acc = acc ? op(*acc, f) : f;
    }
    if (!acc) fail(ErrorCode::ParseError, "empty combination");
    return *acc;
  };
  if (j.contains("add")) return fold(j["add"], IdealFunction::add);
  if (j.contains("min")) return fold(j["min"], IdealFunction::min_fn);
  if (j.contains("max")) return fold(j["max"], IdealFunction::max_fn);
  fail(ErrorCode::ParseError, "combo must be gen/add/min/max");
}

}  // namespace

IdealFunction ideal_from_json(const Json& j, const DomainModel& model) {
  std::optional<IdealFunction> fn, combo;
  if (j.contains("function")) {
    fn = function_from_json(j["function"]);
    require_same_space(model.space(), fn->space());
  }
  if (j.contains("combo")) combo = combo_from_json(j["combo"], model);
  if (fn && combo) {
    if (!(*fn == *combo))
      fail(ErrorCode::ParseError, "ideal file: function and combo disagree");
    return *combo;
  }
  if (combo) return *combo;
  if (fn) return *fn;
  fail(ErrorCode::ParseError, "ideal file needs 'function' or 'combo'");
}

std::string model_hash(const DomainModel& m) {
  std::string dump = to_json(m).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a-") + buf;
}

Json report_envelope(const std::string& command, const DomainModel& model, Json payload) {
  Json j;
  j["tool"] = "adklab";
  j["version"] = tool_version();
  j["command"] = command;
  Json m;
  m["name"] = model.name();
  m["hash"] = model_hash(model);
  j["model"] = std::move(m);
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
  j["timestamp"] = buf;
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace adklab
