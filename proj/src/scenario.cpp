#include "hopf/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

constexpr const char* kSchema = "hopfkit-scenario";
constexpr int kVersion = 1;

void schema_fail(const std::string& what) { throw SchemaError("scenario: " + what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<std::size_t> size_list(const Json& j, const std::string& what) {
  if (!j.is_array()) schema_fail(what + " must be a list");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) schema_fail(what + " must hold non-negative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

Vector scalar_list(const Field& f, const Json& j, const std::string& what) {
  if (!j.is_array()) schema_fail(what + " must be a list");
  Vector out;
  for (const auto& x : j) {
    if (!x.is_string()) schema_fail(what + " entries must be strings");
    try {
      out.push_back(Scalar::parse(f, x.get<std::string>()));
    } catch (const Error& e) {
      schema_fail(what + ": " + e.what());
    }
  }
  return out;
}

std::size_t element_index(const AbelianGroup& g, const Json& j, const std::string& what) {
  auto exps = size_list(j, what);
  if (exps.size() != g.rank()) schema_fail(what + " needs one exponent per cyclic factor");
  for (std::size_t a = 0; a < exps.size(); ++a)
    if (exps[a] >= g.orders()[a]) schema_fail(what + " exponent out of range");
  return g.index(exps);
}

Json scalars_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json exponents_to_json(const AbelianGroup& g, std::size_t idx) {
  Json out = Json::array();
  for (auto e : g.exponents(idx)) out.push_back(e);
  return out;
}

Json dims_to_json(const NicholsTruncation& n) {
  Json out = Json::array();
  for (auto d : n.dims()) out.push_back(d);
  return out;
}

ExitCode code_for(const std::exception& e) {
  if (dynamic_cast<const DimensionBlowup*>(&e) || dynamic_cast<const IncompleteNichols*>(&e))
    return ExitCode::resource;
  if (dynamic_cast<const SchemaError*>(&e)) return ExitCode::schema;
  return ExitCode::verification;
}

ExitCode worse(ExitCode a, ExitCode b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

Scalar q(const Field& f, long long v) { return Scalar(f, v); }

Scenario sweedler_like(const std::string& name, const std::string& description,
                       std::vector<std::string> pipelines) {
  const Field f = Field::rationals();
  Scenario s;
  s.name = name;
  s.description = description;
  GroupTwistDatum& d = s.datum;
  d.field = f;
  d.lambda_orders = {2};
  d.gamma_orders = {2};
  d.z = {1};
  d.eta = {{q(f, -1)}};
  d.g = {1};
  d.chi = {{q(f, -1)}};
  d.phi = {{q(f, -1)}};
  d.s = {0};
  d.lambda = {q(f, 1)};
  s.cap = 4;
  s.pipelines = std::move(pipelines);
  return s;
}

}  // namespace

const std::vector<std::string>& pipeline_names() {
  static const std::vector<std::string> names = {"nichols", "biproduct", "op_iso", "dual_iso",
                                                 "datum",   "twist",     "reduce"};
  return names;
}

Scenario scenario_from_json(const Json& j) {
  try {
    if (!j.is_object()) schema_fail("document must be an object");
    if (field_of(j, "schema") != kSchema) schema_fail("unknown schema");
    if (field_of(j, "version") != kVersion) schema_fail("unsupported version");
    Scenario s;
    s.name = field_of(j, "name").get<std::string>();
    if (j.contains("description")) s.description = j.at("description").get<std::string>();
    GroupTwistDatum& d = s.datum;
    try {
      d.field = Field::parse(field_of(j, "field").get<std::string>());
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      schema_fail(std::string("field: ") + e.what());
    }
    d.lambda_orders = size_list(field_of(j, "lambda_group"), "lambda_group");
    d.gamma_orders = size_list(field_of(j, "gamma_group"), "gamma_group");
    for (auto o : d.lambda_orders)
      if (o == 0) schema_fail("group orders must be positive");
    for (auto o : d.gamma_orders)
      if (o == 0) schema_fail("group orders must be positive");
    AbelianGroup lam(d.lambda_orders), gam(d.gamma_orders);

    const Json& w = field_of(j, "W");
    if (!w.is_array()) schema_fail("W must be a list");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string tag = "W[" + std::to_string(i) + "]";
      d.z.push_back(element_index(lam, field_of(w[i], "degree"), tag + ".degree"));
      d.eta.push_back(scalar_list(d.field, field_of(w[i], "character"), tag + ".character"));
    }
    const Json& v = field_of(j, "V");
    if (!v.is_array()) schema_fail("V must be a list");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string tag = "V[" + std::to_string(i) + "]";
      d.g.push_back(element_index(gam, field_of(v[i], "degree"), tag + ".degree"));
      d.chi.push_back(scalar_list(d.field, field_of(v[i], "character"), tag + ".character"));
    }
    const Json& phi = field_of(j, "phi");
    if (!phi.is_array()) schema_fail("phi must be a list of rows");
    for (std::size_t a = 0; a < phi.size(); ++a)
      d.phi.push_back(scalar_list(d.field, phi[a], "phi[" + std::to_string(a) + "]"));
    d.s = size_list(field_of(j, "s"), "s");
    d.lambda = scalar_list(d.field, field_of(j, "lambda"), "lambda");

    const Json& cap = field_of(j, "cap");
    if (!cap.is_number_unsigned()) schema_fail("cap must be a non-negative integer");
    s.cap = cap.get<std::size_t>();
    const Json& p = field_of(j, "pipelines");
    if (!p.is_array()) schema_fail("pipelines must be a list");
    for (const auto& x : p) {
      if (!x.is_string()) schema_fail("pipeline names must be strings");
      const auto name = x.get<std::string>();
      const auto& known = pipeline_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) schema_fail("unknown pipeline '" + name + "'");
      s.pipelines.push_back(name);
    }
    d.validate();
    return s;
  } catch (const Json::exception& e) {
    schema_fail(e.what());
  }
  return {};
}

Json scenario_to_json(const Scenario& s) {
  const GroupTwistDatum& d = s.datum;
  AbelianGroup lam(d.lambda_orders), gam(d.gamma_orders);
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["name"] = s.name;
  j["description"] = s.description;
  j["field"] = d.field.name();
  j["lambda_group"] = d.lambda_orders;
  j["gamma_group"] = d.gamma_orders;
  j["W"] = Json::array();
  for (std::size_t i = 0; i < d.n(); ++i)
    j["W"].push_back(Json{{"degree", exponents_to_json(lam, d.z[i])}, {"character", scalars_to_json(d.eta[i])}});
  j["V"] = Json::array();
  for (std::size_t i = 0; i < d.m(); ++i)
    j["V"].push_back(Json{{"degree", exponents_to_json(gam, d.g[i])}, {"character", scalars_to_json(d.chi[i])}});
  j["phi"] = Json::array();
  for (const auto& row : d.phi) j["phi"].push_back(scalars_to_json(row));
  j["s"] = d.s;
  j["lambda"] = scalars_to_json(d.lambda);
  j["cap"] = s.cap;
  j["pipelines"] = s.pipelines;
  return j;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return scenario_from_json(j);
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"trivial", "sweedler", "taft3_f7", "qplane", "double_sweedler",
                                                 "reduced_rank"};
  return names;
}

Scenario gallery_scenario(const std::string& name) {
  const auto& all = pipeline_names();
  if (name == "trivial") {
    Scenario s;
    s.name = name;
    s.description = "Trivial groups and no generators; every object is the ground field.";
    s.cap = 2;
    s.pipelines = all;
    return s;
  }
  if (name == "sweedler")
    return sweedler_like(name, "Z/2 with all characters -1 on both sides; both biproducts are Sweedler algebras.",
                         {"nichols", "biproduct", "op_iso", "dual_iso", "datum", "twist"});
  if (name == "double_sweedler")
    return sweedler_like(name, "The Sweedler datum with lambda = 1, twisting Sweedler (x) Sweedler by beta#tau.",
                         {"datum", "twist"});
  if (name == "taft3_f7") {
    const Field f = Field::prime(7);
    Scenario s;
    s.name = name;
    s.description = "Z/3 over F_7 with chi(g) = 2, phi(z)(g) = 4, eta(z) = 4; Taft algebras of dimension 9.";
    GroupTwistDatum& d = s.datum;
    d.field = f;
    d.lambda_orders = {3};
    d.gamma_orders = {3};
    d.z = {1};
    d.eta = {{q(f, 4)}};
    d.g = {1};
    d.chi = {{q(f, 2)}};
    d.phi = {{q(f, 4)}};
    d.s = {0};
    d.lambda = {q(f, 1)};
    s.cap = 4;
    s.pipelines = {"nichols", "biproduct", "op_iso", "dual_iso", "datum"};
    return s;
  }
  if (name == "qplane") {
    const Field f = Field::rationals();
    Scenario s;
    s.name = name;
    s.description = "Two generators of degree g with all braiding scalars -1: the quantum plane at q = -1.";
    GroupTwistDatum& d = s.datum;
    d.field = f;
    d.lambda_orders = {2};
    d.gamma_orders = {2};
    d.z = {1, 1};
    d.eta = {{q(f, -1)}, {q(f, -1)}};
    d.g = {1, 1};
    d.chi = {{q(f, -1)}, {q(f, -1)}};
    d.phi = {{q(f, -1)}};
    d.s = {0, 1};
    d.lambda = {q(f, 1), q(f, 1)};
    s.cap = 4;
    s.pipelines = {"nichols", "biproduct", "op_iso", "dual_iso", "datum"};
    return s;
  }
  if (name == "reduced_rank") {
    Scenario s = sweedler_like(name, "Two W generators paired with one V generator, lambda = (1, 0); reduces to the Sweedler datum.",
                               {"datum", "reduce"});
    const Field& f = s.datum.field;
    s.datum.z = {1, 1};
    s.datum.eta = {{q(f, -1)}, {q(f, -1)}};
    s.datum.s = {0, 0};
    s.datum.lambda = {q(f, 1), q(f, 0)};
    return s;
  }
  throw SchemaError("unknown gallery scenario '" + name + "'");
}

const StageResult* RunResult::stage(const std::string& name) const {
  for (const auto& s : stages)
    if (s.name == name) return &s;
  return nullptr;
}

std::string RunResult::text() const {
  std::ostringstream os;
  os << "scenario " << scenario << "\n";
  for (const auto& s : stages) {
    os << s.name << ": " << s.status;
    if (s.status == "pass" || s.status == "fail") os << " " << s.report.summary(20);
    if (!s.message.empty()) os << "\n  " << s.message;
    os << "\n";
  }
  os << "hilbert " << hilbert.dump() << "\n";
  os << "exit " << static_cast<int>(exit) << "\n";
  return os.str();
}

Json RunResult::json() const {
  Json j;
  j["scenario"] = scenario;
  j["exit_code"] = static_cast<int>(exit);
  j["stages"] = Json::array();
  for (const auto& s : stages) {
    Json e;
    e["name"] = s.name;
    e["status"] = s.status;
    e["message"] = s.message;
    e["data"] = s.data;
    e["report"] = s.report.to_json();
    j["stages"].push_back(std::move(e));
  }
  j["hilbert"] = hilbert;
  j["objects"] = Json::array();
  for (const auto& [id, _] : objects) j["objects"].push_back(id);
  return j;
}

RunResult run_scenario(const Scenario& sc, const NicholsOptions& opts) {
  RunResult out;
  out.scenario = sc.name;
  const GroupTwistDatum& d = sc.datum;
  const Field& f = d.field;

  // Requested pipelines plus prerequisites.
  std::set<std::string> want(sc.pipelines.begin(), sc.pipelines.end());
  if (want.count("reduce") || want.count("twist")) want.insert("datum");
  if (want.count("op_iso") || want.count("dual_iso")) want.insert("biproduct");
  if (want.count("biproduct")) want.insert("nichols");

  AbelianGroup lam(d.lambda_orders), gam(d.gamma_orders);
  HopfPtr k = share(group_algebra(lam, f, "z"));
  HopfPtr h = share(group_algebra(gam, f, "g"));
  YDModule w = diagonal_yd_module(k, lam, d.z, d.eta, "u");
  YDModule v = diagonal_yd_module(h, gam, d.g, d.chi, "a");
  out.objects["K"] = to_json(*k);
  out.objects["H"] = to_json(*h);

  NicholsTruncation nw, nv;
  std::optional<Biproduct> bu, ba;
  std::optional<GroupTwist> gt;
  std::optional<Twist> tw;

  auto run_stage = [&](const std::string& name, const std::vector<std::string>& deps,
                       const std::function<void(StageResult&)>& body) {
    if (!want.count(name)) return;
    StageResult st;
    st.name = name;
    for (const auto& dep : deps) {
      const StageResult* p = out.stage(dep);
      if (!p || p->status != "pass") {
        st.status = "skipped";
        st.message = "requires " + dep;
        out.stages.push_back(std::move(st));
        return;
      }
    }
    try {
      body(st);
      st.status = st.report.ok() ? "pass" : "fail";
      if (!st.report.ok()) out.exit = worse(out.exit, ExitCode::verification);
    } catch (const std::exception& e) {
      st.status = "error";
      st.message = e.what();
      out.exit = worse(out.exit, code_for(e));
    }
    out.stages.push_back(std::move(st));
  };

  run_stage("nichols", {}, [&](StageResult& st) {
    nw = nichols_truncate(w, sc.cap, opts);
    nv = nichols_truncate(v, sc.cap, opts);
    out.hilbert["W"] = dims_to_json(nw);
    out.hilbert["V"] = dims_to_json(nv);
    st.data["W"] = out.hilbert["W"];
    st.data["V"] = out.hilbert["V"];
    st.data["dim_W"] = nw.total_dim();
    st.data["dim_V"] = nv.total_dim();
    st.report.merge(check_yd(w), "W");
    st.report.merge(check_yd(v), "V");
    st.report.merge(check_truncation(nw), "B(W)");
    st.report.merge(check_truncation(nv), "B(V)");
    // Recursive symmetrizer against the sum over permutations.
    for (const auto* m : {&w, &v}) {
      const char* side = m == &w ? "W" : "V";
      for (std::size_t deg = 2; deg <= std::min<std::size_t>(sc.cap, 4); ++deg) {
        if (int_pow(m->dim, deg) > 256) break;
        const std::string check = std::string(side) + ": symmetrizer_brute_force";
        st.report.note_check(check);
        if (quantum_symmetrizer(*m, deg) != quantum_symmetrizer_brute_force(*m, deg)) st.report.fail(check, {deg});
      }
    }
    if (!nw.complete || !nv.complete)
      throw IncompleteNichols("Nichols algebra does not vanish in degrees up to the cap " + std::to_string(sc.cap));
    out.objects["nichols_W"] = to_json(nw.algebra.underlying());
    out.objects["nichols_V"] = to_json(nv.algebra.underlying());
  });

  run_stage("biproduct", {"nichols"}, [&](StageResult& st) {
    bu = build_biproduct(nw.algebra);
    ba = build_biproduct(nv.algebra);
    for (const auto& [tag, b] : {std::pair{"U", &*bu}, std::pair{"A", &*ba}}) {
      st.report.merge(b->report, tag);
      st.data[std::string("dim_") + tag] = b->A.dim;
      Coinvariants c = recover_R(b->A, b->H, b->j, b->pi);
      st.report.merge(c.report, std::string(tag) + ": recover");
      const std::string check = std::string(tag) + ": round_trip";
      st.report.note_check(check);
      if (!same_structure(c.R, b->R) || c.canonical != Matrix::identity(f, b->A.dim)) st.report.fail(check, {});
      out.objects[tag] = to_json(b->A);
    }
  });

  run_stage("op_iso", {"biproduct"}, [&](StageResult& st) {
    for (const auto& [tag, b] : {std::pair{"U", &*bu}, std::pair{"A", &*ba}}) {
      OpBiproduct o = op_biproduct(*b);
      st.report.merge(o.report, tag);
      out.objects[std::string(tag) + "_op"] = to_json(o.B.A);
    }
  });

  run_stage("dual_iso", {"biproduct"}, [&](StageResult& st) {
    for (const auto& [tag, b] : {std::pair{"U", &*bu}, std::pair{"A", &*ba}}) {
      DualBiproduct o = dual_biproduct(*b);
      st.report.merge(o.report, tag);
      out.objects[std::string(tag) + "_dual"] = to_json(o.B.A);
    }
  });

  run_stage("datum", {}, [&](StageResult& st) {
    // The form checks run on their own first so a failing datum reports the
    // offending axiom and indices.
    Form tau;
    tau.matrix = Matrix(f, k->dim, h->dim);
    for (std::size_t x = 0; x < k->dim; ++x)
      for (std::size_t y = 0; y < h->dim; ++y) tau.matrix(x, y) = pairing_value(d, x, y);
    Form beta;
    beta.matrix = Matrix(f, d.n(), d.m());
    for (std::size_t i = 0; i < d.n(); ++i) beta.matrix(i, d.s[i]) = d.lambda[i];
    st.report.merge(check_axioms_A(tau, *k, *h), "tau");
    Report c = check_axioms_C(tau, beta, w, v);
    st.report.merge(c, "tau,beta");
    auto bad = datum_condition_violations(d);
    Json jb = Json::array();
    for (auto i : bad) jb.push_back(i);
    st.data["condition_violations"] = jb;
    if (!st.report.ok()) return;

    gt = build_group_datum(d, sc.cap, opts);
    st.report.merge(gt->report);
    st.data["dim_U"] = gt->U.A.dim;
    st.data["dim_A"] = gt->A.A.dim;
    st.data["smash_rank"] = rank(gt->smash.form.matrix);
    GeneratorImages im = phi_generators(*gt);
    st.report.merge(im.report, "generators");
    Json gens = Json::array();
    for (std::size_t i = 0; i < im.gamma.size(); ++i)
      gens.push_back(Json{{"gamma", vector_to_json(im.gamma[i])}, {"delta", vector_to_json(im.delta[i])}});
    st.data["generators"] = gens;
  });

  run_stage("twist", {"datum"}, [&](StageResult& st) {
    tw = twist_bialgebra(gt->U.A, gt->A.A, gt->smash.form);
    st.report.merge(tw->cocycle.report, "sigma");
    st.report.merge(tw->report);
    st.data["dim"] = tw->H.dim;
    st.data["antipode_bijective"] = tw->H.antipode_inverse.has_value();
    out.objects["twist"] = to_json(tw->H);
  });

  run_stage("reduce", {"datum"}, [&](StageResult& st) {
    Reduction r = reduce_datum(*gt);
    st.report.merge(r.report);
    st.data["support"] = r.support;
    st.data["v_perp"] = matrix_to_json(r.v_perp);
    st.data["w_perp"] = matrix_to_json(r.w_perp);
    st.data["source_dim"] = r.source.H.dim;
    st.data["target_dim"] = r.target.H.dim;
    st.data["F_rank"] = rank(r.F);
    out.objects["reduced_twist"] = to_json(r.target.H);
  });

  return out;
}

void write_run(const RunResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "objects");
  auto write = [](const fs::path& p, const std::string& text) {
    std::ofstream o(p, std::ios::binary);
    if (!o) throw Error("cannot write " + p.string());
    o << text;
  };
  write(fs::path(dir) / "report.txt", r.text());
  write(fs::path(dir) / "report.json", dump(r.json()));
  write(fs::path(dir) / "hilbert.json", dump(r.hilbert));
  for (const auto& [id, j] : r.objects) write(fs::path(dir) / "objects" / (id + ".json"), dump(j));
}

}  // namespace hopf
