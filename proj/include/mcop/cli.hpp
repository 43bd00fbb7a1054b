#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "algebra.hpp"

namespace mcop::cli {

using ordered_json = nlohmann::ordered_json;

inline Kind parse_kind(const std::string& s) {
  if (s == "A") return Kind::A;
  if (s == "C") return Kind::C;
  throw std::invalid_argument("type must be A or C");
}

// Element lists like "(1,1),(1,-2);(2,2)": comma or semicolon separated pairs,
// spaces and unicode minus tolerated.
inline std::vector<Elem> parse_elements(const std::string& raw) {
  std::string s;
  for (std::size_t t = 0; t < raw.size(); ++t) {
    // U+2212 minus sign -> ascii
    if (t + 2 < raw.size() && static_cast<unsigned char>(raw[t]) == 0xe2 &&
        static_cast<unsigned char>(raw[t + 1]) == 0x88 &&
        static_cast<unsigned char>(raw[t + 2]) == 0x92) {
      s += '-';
      t += 2;
    } else if (!std::isspace(static_cast<unsigned char>(raw[t]))) {
      s += raw[t];
    }
  }
  std::vector<Elem> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ',' || s[pos] == ';') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw std::invalid_argument("element list: expected '(' near " + s.substr(pos));
    std::size_t close = s.find(')', pos);
    std::size_t comma = s.find(',', pos);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      throw std::invalid_argument("element list: malformed pair near " + s.substr(pos));
    try {
      int i = std::stoi(s.substr(pos + 1, comma - pos - 1));
      int j = std::stoi(s.substr(comma + 1, close - comma - 1));
      out.push_back({i, j});
    } catch (const std::exception&) {
      throw std::invalid_argument("element list: malformed pair near " + s.substr(pos));
    }
    pos = close + 1;
  }
  if (out.empty()) throw std::invalid_argument("element list: no elements");
  return out;
}

inline std::uint64_t element_mask(const Poset& p, const std::vector<Elem>& elems) {
  std::uint64_t mask = 0;
  for (const Elem& e : elems) mask |= std::uint64_t{1} << p.index(e.i, e.j);
  return mask;
}

inline std::string elements_string(const Poset& p, std::uint64_t mask) {
  std::string out;
  for (int idx = 0; idx < p.size(); ++idx)
    if ((mask >> idx) & 1) {
      const Elem& e = p.element(idx);
      if (!out.empty()) out += ';';
      out += '(' + std::to_string(e.i) + ',' + std::to_string(e.j) + ')';
    }
  return out;
}

inline Weight parse_lambda(const std::string& s, int len) {
  Weight lambda;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      lambda.push_back(std::stoi(s.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw std::invalid_argument("lambda: expected comma separated integers");
    }
    pos = next + 1;
  }
  if (static_cast<int>(lambda.size()) != len)
    throw std::invalid_argument("lambda: expected " + std::to_string(len) + " entries");
  for (int a : lambda)
    if (a < 0) throw std::invalid_argument("lambda: entries must be nonnegative");
  return lambda;
}

// Reproducible marking: the diagonal always, each other element drawn in
// canonical order against a fixed threshold.
inline std::uint64_t random_marking(const Poset& p, std::uint32_t seed, double density) {
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("random marking: density must lie in [0,1]");
  std::mt19937 gen(seed);
  std::uint64_t threshold =
      static_cast<std::uint64_t>(density * 4294967296.0);  // density * 2^32
  std::uint64_t mask = p.diagonal_mask();
  for (int idx = 0; idx < p.size(); ++idx) {
    if ((mask >> idx) & 1) continue;  // diagonal elements consume no draw
    if (std::uint64_t{gen()} < threshold) mask |= std::uint64_t{1} << idx;
  }
  return mask;
}

// O-spec grammar: P, A, random:<seed>:<density>, bare "random" (uses --seed,
// density 0.5), or an explicit element list.
inline std::uint64_t parse_ospec(const Poset& p, const std::string& spec, std::uint32_t seed) {
  std::uint64_t mask;
  if (spec == "P") {
    mask = p.full_mask();
  } else if (spec == "A") {
    mask = p.diagonal_mask();
  } else if (spec == "random") {
    mask = random_marking(p, seed, 0.5);
  } else if (spec.rfind("random:", 0) == 0) {
    std::size_t second = spec.find(':', 7);
    if (second == std::string::npos)
      throw std::invalid_argument("O-spec: expected random:<seed>:<density>");
    std::uint32_t s;
    double d;
    try {
      s = static_cast<std::uint32_t>(std::stoul(spec.substr(7, second - 7)));
      d = std::stod(spec.substr(second + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("O-spec: expected random:<seed>:<density>");
    }
    mask = random_marking(p, s, d);
  } else {
    mask = element_mask(p, parse_elements(spec));
  }
  if (!is_marking(p, mask))
    throw std::invalid_argument("O-spec: marking must contain the whole diagonal");
  return mask;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) out += ' ';
    out += std::to_string(v[t]);
  }
  return out;
}

inline ordered_json elems_json(const Poset& p, std::uint64_t mask) {
  ordered_json arr = ordered_json::array();
  for (int idx = 0; idx < p.size(); ++idx)
    if ((mask >> idx) & 1) {
      const Elem& e = p.element(idx);
      arr.push_back({e.i, e.j});
    }
  return arr;
}

inline ordered_json points_json(const std::vector<Point>& pts) {
  ordered_json arr = ordered_json::array();
  for (const Point& x : pts) arr.push_back(x);
  return arr;
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace detail

struct CheckResult {
  std::string name;
  bool pass = false;
  double ms = 0.0;
  std::string human;
  ordered_json data;
};

struct VerifyContext {
  const Poset& p;
  std::uint64_t o_mask;
  const std::vector<std::vector<Ideal>>& strata;
  std::optional<Weight> lambda;
  int max_degree = 2;
  int jobs = 1;
};

inline const Weight& need_lambda(const VerifyContext& ctx, const std::string& check) {
  if (!ctx.lambda) throw std::invalid_argument(check + ": --lambda is required");
  return *ctx.lambda;
}

inline CheckResult run_check(const std::string& name, const VerifyContext& ctx) {
  CheckResult res;
  res.name = name;
  auto t0 = std::chrono::steady_clock::now();
  const Poset& p = ctx.p;

  if (name == "intpoints") {
    const Weight& lambda = need_lambda(ctx, name);
    auto pts = lattice_points(p, ctx.o_mask, lambda, ctx.strata, ctx.jobs);
    Int dim = weyl_dim(p.kind(), p.n(), lambda);
    bool diag_ok = true;
    for (const Point& x : pts) diag_ok = diag_ok && diagonal_check(p, lambda, x);
    res.pass = Int(static_cast<long>(pts.size())) == dim && diag_ok;
    res.human = "count=" + std::to_string(pts.size()) + " dim=" + dim.get_str();
    res.data["count"] = pts.size();
    res.data["dim"] = dim.get_str();
    res.data["diagonal_ok"] = diag_ok;
  } else if (name == "bijection") {
    res.pass = true;
    ordered_json strata_report = ordered_json::array();
    for (int k = 1; k <= p.n(); ++k) {
      TupleBijectionReport rep = tuple_bijection_check(p, ctx.o_mask, k, ctx.strata[k]);
      res.pass = res.pass && rep.ok;
      strata_report.push_back({{"k", k},
                               {"ideals", rep.ideal_count},
                               {"expected", rep.expected_count},
                               {"ok", rep.ok}});
      if (!rep.ok && !rep.problems.empty() && res.human.empty())
        res.human = "problem: " + rep.problems.front();
    }
    if (res.human.empty()) res.human = "strata=" + std::to_string(p.n());
    res.data["strata"] = strata_report;
  } else if (name == "kernel-eq") {
    KernelEqReport rep = kernel_equality_check(p, ctx.o_mask, ctx.strata);
    bool binomials = toric_relations_match(p, ctx.o_mask, ctx.strata, ctx.max_degree);
    res.pass = rep.kernels_equal && rep.xi_ok && binomials;
    res.human = std::string("kernels_equal=") + (rep.kernels_equal ? "yes" : "no") +
                " map_found=" + (rep.xi_ok ? "yes" : "no") +
                " binomials_match=" + (binomials ? "yes" : "no");
    res.data["kernels_equal"] = rep.kernels_equal;
    res.data["map_found"] = rep.xi_ok;
    res.data["binomials_match"] = binomials;
    res.data["columns"] = rep.a.cols;
    if (!rep.xi_ok) res.data["note"] = rep.note;
  } else if (name == "weight-order") {
    WeightOrderReport rep = find_weight_order(p, ctx.o_mask, ctx.strata);
    bool certified = rep.weights && weight_order_certifies(p, ctx.o_mask, ctx.strata, *rep.weights);
    res.pass = rep.weights.has_value() && certified;
    res.human = std::string("feasible=") + (rep.weights ? "yes" : "no") +
                " certified=" + (certified ? "yes" : "no") +
                " constraints=" + std::to_string(rep.constraints);
    res.data["feasible"] = rep.weights.has_value();
    res.data["certified"] = certified;
    res.data["minors"] = rep.minors;
    res.data["constraints"] = rep.constraints;
    if (rep.weights) {
      ordered_json w = ordered_json::array();
      for (const Int& x : *rep.weights) w.push_back(x.get_str());
      res.data["weights"] = w;
    }
  } else if (name == "sagbi") {
    const Weight& lambda = need_lambda(ctx, name);
    SagbiReport rep = sagbi_hilbert_check(p, ctx.o_mask, lambda, ctx.strata);
    res.pass = rep.ok;
    res.human = "initial=" + std::to_string(rep.initial_count) +
                " rank=" + std::to_string(rep.span_rank) + " dim=" + rep.dim.get_str();
    res.data["products"] = rep.products;
    res.data["initial"] = rep.initial_count;
    res.data["rank"] = rep.span_rank;
    res.data["dim"] = rep.dim.get_str();
  } else if (name == "intermediate") {
    const Weight& lambda = need_lambda(ctx, name);
    RankReport rep = intermediate_hilbert_check(p, lambda);
    res.pass = rep.ok;
    res.human = "rank=" + std::to_string(rep.span_rank) + " dim=" + rep.dim.get_str();
    res.data["products"] = rep.products;
    res.data["rank"] = rep.span_rank;
    res.data["dim"] = rep.dim.get_str();
  } else if (name == "basis") {
    const Weight& lambda = need_lambda(ctx, name);
    BasisReport rep = basis_check(p, ctx.o_mask, lambda, ctx.strata);
    res.pass = rep.ok;
    res.human = "points=" + std::to_string(rep.points) + " rank=" + std::to_string(rep.rank) +
                " dim=" + rep.dim.get_str();
    res.data["points"] = rep.points;
    res.data["rank"] = rep.rank;
    res.data["dim"] = rep.dim.get_str();
  } else if (name == "nu-image") {
    const Weight& lambda = need_lambda(ctx, name);
    NuImageReport rep = nu_image_check(p, ctx.o_mask, lambda, ctx.strata);
    res.pass = rep.ok;
    res.human = "monomials=" + std::to_string(rep.monomials) +
                " points=" + std::to_string(rep.points) +
                " image=" + (rep.image_matches ? "match" : "mismatch") +
                " base=" + (rep.base_matches ? "match" : "mismatch");
    res.data["monomials"] = rep.monomials;
    res.data["points"] = rep.points;
    res.data["image_matches"] = rep.image_matches;
    res.data["base_matches"] = rep.base_matches;
  } else if (name == "no-body") {
    const Weight& lambda = need_lambda(ctx, name);
    NoBody body = newton_okounkov_body(p, ctx.o_mask, lambda, ctx.strata, ctx.jobs);
    auto qpts = lattice_points(p, ctx.o_mask, lambda, ctx.strata, ctx.jobs);
    std::set<Point> expected(qpts.begin(), qpts.end());
    std::set<Point> shifted;
    bool has_origin = false;
    for (Point x : body.points) {
      has_origin = has_origin || std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
      for (int c = 0; c < p.size(); ++c) x[c] += body.base[c];
      shifted.insert(std::move(x));
    }
    bool translate_ok = shifted == expected;
    // Vertex for vertex: translating the body's vertices recovers the
    // polytope's vertices.
    std::vector<Point> body_verts = vertices_of(body.points);
    for (Point& x : body_verts)
      for (int c = 0; c < p.size(); ++c) x[c] += body.base[c];
    std::vector<Point> poly_verts = vertices_of(qpts);
    std::sort(body_verts.begin(), body_verts.end());
    std::sort(poly_verts.begin(), poly_verts.end());
    bool vertices_ok = body_verts == poly_verts;
    res.pass = translate_ok && has_origin && vertices_ok;
    res.human = "points=" + std::to_string(body.points.size()) +
                " vertices=" + std::to_string(poly_verts.size()) +
                " origin=" + (has_origin ? "yes" : "no") +
                " translate=" + (translate_ok ? "match" : "mismatch") +
                " vertexmap=" + (vertices_ok ? "match" : "mismatch");
    res.data["points"] = body.points.size();
    res.data["vertices"] = poly_verts.size();
    res.data["base"] = body.base;
    res.data["origin_in_body"] = has_origin;
    res.data["translate_matches"] = translate_ok;
    res.data["vertices_match"] = vertices_ok;
  } else {
    throw std::invalid_argument("unknown check " + name);
  }
  res.ms = detail::ms_since(t0);
  return res;
}

inline std::vector<std::string> all_checks(Kind kind) {
  if (kind == Kind::A)
    return {"intpoints", "bijection", "kernel-eq", "weight-order", "sagbi", "basis"};
  return {"intpoints", "bijection", "kernel-eq", "weight-order", "intermediate",
          "nu-image", "no-body"};
}

inline int run(int argc, const char* const* argv) {
  CLI::App app{"exact tools for marked chain-order polytopes"};
  app.require_subcommand(1);

  std::string type_str = "A";
  int n = 0;
  std::string ospec = "P";
  std::string lambda_str;
  std::string set_str;
  std::string twist_str;
  std::string render_str;
  std::string expect_str;
  int max_degree = 2;
  unsigned seed = 0;
  int jobs = 1;
  bool json_out = false;
  bool want_ideals = false;
  bool want_points = false, want_vertices = false, want_count = false, want_body = false;

  auto add_common = [&](CLI::App* cmd, bool with_o) {
    cmd->add_option("--type", type_str, "poset kind, A or C")
        ->check(CLI::IsMember({"A", "C"}));
    cmd->add_option("--n", n, "poset rank")->required();
    if (with_o) cmd->add_option("--O", ospec, "marking: P, A, random:<seed>:<density>, or list");
    cmd->add_flag("--json", json_out, "machine readable output");
  };

  CLI::App* poset_cmd = app.add_subcommand("poset", "print the poset and its ideals");
  add_common(poset_cmd, false);
  poset_cmd->add_flag("--ideals", want_ideals, "list the order ideals by stratum");

  CLI::App* pipe_cmd = app.add_subcommand("pipedream", "trace the permutation of a marked set");
  add_common(pipe_cmd, false);
  pipe_cmd->add_option("--set", set_str, "marked elements, e.g. \"(1,1),(1,2)\"")->required();
  pipe_cmd->add_option("--render", render_str, "diagram output")
      ->check(CLI::IsMember({"svg", "ascii"}));
  pipe_cmd->add_option("--twist", twist_str, "compose with the inverse of this marking's permutation");
  pipe_cmd->add_option("--expect", expect_str, "fail unless the printed images equal this list");

  CLI::App* poly_cmd = app.add_subcommand("polytope", "lattice data of a marked polytope");
  add_common(poly_cmd, true);
  poly_cmd->add_option("--lambda", lambda_str, "weight, e.g. 1,1")->required();
  poly_cmd->add_flag("--points", want_points, "list the lattice points");
  poly_cmd->add_flag("--vertices", want_vertices, "list the vertices");
  poly_cmd->add_flag("--count", want_count, "print the lattice point count (default)");
  poly_cmd->add_flag("--no-body", want_body, "list the translated body (kind C)");
  poly_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification checks");
  verify_cmd->require_subcommand(1);
  std::vector<std::string> check_names{"intpoints", "bijection",    "kernel-eq",
                                       "weight-order", "sagbi",     "intermediate",
                                       "basis",     "nu-image",     "no-body",
                                       "all"};
  std::vector<std::pair<std::string, CLI::App*>> check_cmds;
  for (const std::string& name : check_names) {
    CLI::App* sub = verify_cmd->add_subcommand(name, "verification check");
    add_common(sub, true);
    sub->add_option("--lambda", lambda_str, "weight, e.g. 1,1");
    sub->add_option("--max-degree", max_degree, "binomial truncation degree")
        ->check(CLI::Range(1, 3));
    sub->add_option("--seed", seed, "seed for the bare random O-spec");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    check_cmds.emplace_back(name, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Kind kind = parse_kind(type_str);
    Poset p = build_poset(kind, n);

    if (poset_cmd->parsed()) {
      auto strata = enumerate_ideals(p);
      if (json_out) {
        ordered_json j;
        j["schema"] = 1;
        j["kind"] = kind_name(kind);
        j["n"] = n;
        j["elements"] = detail::elems_json(p, p.full_mask());
        if (want_ideals) {
          ordered_json arr = ordered_json::array();
          for (int k = 0; k <= p.n(); ++k)
            for (const Ideal& ideal : strata[k])
              arr.push_back({{"stratum", k}, {"members", detail::elems_json(p, ideal.mask)}});
          j["ideals"] = arr;
        }
        std::puts(j.dump(2).c_str());
      } else {
        std::string line = "kind " + kind_name(kind) + " n " + std::to_string(n) + " elements " +
                           std::to_string(p.size());
        std::puts(line.c_str());
        std::string elems;
        for (int idx = 0; idx < p.size(); ++idx) {
          const Elem& e = p.element(idx);
          if (idx) elems += ' ';
          elems += '(' + std::to_string(e.i) + ',' + std::to_string(e.j) + ')';
        }
        std::puts(elems.c_str());
        if (want_ideals)
          for (int k = 0; k <= p.n(); ++k)
            for (const Ideal& ideal : strata[k]) {
              std::string row = "stratum " + std::to_string(k) + ":";
              for (int idx = 0; idx < p.size(); ++idx)
                if (ideal.contains(idx)) {
                  const Elem& e = p.element(idx);
                  row += " (" + std::to_string(e.i) + ',' + std::to_string(e.j) + ')';
                }
              std::puts(row.c_str());
            }
      }
      return 0;
    }

    if (pipe_cmd->parsed()) {
      std::uint64_t m_mask = element_mask(p, parse_elements(set_str));
      Perm w = perm_from_set(p, m_mask);
      if (trace_perm(p, m_mask) != w)
        throw invariant_error("pipedream: trace and product disagree");
      std::optional<std::uint64_t> twist_mask;
      if (!twist_str.empty()) {
        twist_mask = parse_ospec(p, twist_str, seed);
        w = twisted_perm(p, *twist_mask, m_mask);
      }
      std::string rendering;
      if (!render_str.empty())
        rendering = render_pipe_dream(
            p, m_mask, render_str == "svg" ? RenderFormat::Svg : RenderFormat::Ascii);
      if (json_out) {
        ordered_json j;
        j["schema"] = 1;
        j["kind"] = kind_name(kind);
        j["n"] = n;
        j["set"] = detail::elems_json(p, m_mask);
        j["domain"] = p.domain_values();
        j["images"] = w;
        if (twist_mask) j["twist"] = elements_string(p, *twist_mask);
        if (!rendering.empty()) j["render"] = rendering;
        std::puts(j.dump(2).c_str());
      } else if (!rendering.empty()) {
        std::fputs(rendering.c_str(), stdout);
        if (rendering.back() != '\n') std::fputc('\n', stdout);
      } else {
        std::puts(detail::join_ints(w).c_str());
      }
      if (!expect_str.empty()) {
        std::vector<int> expected;
        std::string cur;
        for (char c : expect_str + " ") {
          if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
          } else if (!cur.empty()) {
            expected.push_back(std::stoi(cur));
            cur.clear();
          }
        }
        if (expected != w) {
          std::fprintf(stderr, "expected %s, got %s\n", detail::join_ints(expected).c_str(),
                       detail::join_ints(w).c_str());
          return 1;
        }
      }
      return 0;
    }

    if (poly_cmd->parsed()) {
      int asked = int(want_points) + int(want_vertices) + int(want_count) + int(want_body);
      if (asked > 1)
        throw std::invalid_argument("polytope: pick one of --points --vertices --count --no-body");
      if (asked == 0) want_count = true;
      std::uint64_t o_mask = parse_ospec(p, ospec, seed);
      Weight lambda = parse_lambda(lambda_str, weight_length(p));
      auto strata = enumerate_ideals(p);
      auto pts = lattice_points(p, o_mask, lambda, strata, jobs);
      ordered_json j;
      j["schema"] = 1;
      j["kind"] = kind_name(kind);
      j["n"] = n;
      j["O"] = elements_string(p, o_mask);
      j["lambda"] = lambda;
      j["count"] = pts.size();
      if (want_count && !json_out) std::puts(std::to_string(pts.size()).c_str());
      if (want_points) {
        if (json_out) j["points"] = detail::points_json(pts);
        else
          for (const Point& x : pts) std::puts(detail::join_ints(x).c_str());
      }
      if (want_vertices) {
        std::vector<Point> verts = vertices_of(pts);
        if (json_out) j["vertices"] = detail::points_json(verts);
        else
          for (const Point& x : verts) std::puts(detail::join_ints(x).c_str());
      }
      if (want_body) {
        NoBody body = newton_okounkov_body(p, o_mask, lambda, strata, jobs);
        if (json_out) {
          j["body"] = {{"base", body.base}, {"points", detail::points_json(body.points)}};
        } else {
          std::puts(("base " + detail::join_ints(body.base)).c_str());
          for (const Point& x : body.points) std::puts(detail::join_ints(x).c_str());
        }
      }
      if (json_out) std::puts(j.dump(2).c_str());
      return 0;
    }

    // verify
    std::string picked;
    for (const auto& [name, sub] : check_cmds)
      if (sub->parsed()) picked = name;
    std::uint64_t o_mask = parse_ospec(p, ospec, seed);
    auto strata = enumerate_ideals(p);
    VerifyContext ctx{p, o_mask, strata,
                      lambda_str.empty()
                          ? std::nullopt
                          : std::optional<Weight>(parse_lambda(lambda_str, weight_length(p))),
                      max_degree, jobs};
    std::vector<std::string> to_run;
    if (picked == "all") to_run = all_checks(kind);
    else
      to_run = {picked};

    bool all_pass = true;
    std::vector<CheckResult> results;
    for (const std::string& name : to_run) {
      CheckResult res = run_check(name, ctx);
      all_pass = all_pass && res.pass;
      results.push_back(std::move(res));
    }
    if (json_out) {
      ordered_json params;
      params["type"] = kind_name(kind);
      params["n"] = n;
      params["O"] = ospec;
      params["O_elements"] = elements_string(p, o_mask);
      if (ctx.lambda) params["lambda"] = *ctx.lambda;
      params["max_degree"] = max_degree;
      ordered_json j;
      j["schema"] = 1;
      j["check"] = picked;
      j["params"] = params;
      j["pass"] = all_pass;
      ordered_json arr = ordered_json::array();
      for (const CheckResult& res : results)
        arr.push_back({{"check", res.name}, {"pass", res.pass}, {"data", res.data}});
      j["reports"] = arr;
      std::puts(j.dump(2).c_str());
    } else {
      for (const CheckResult& res : results) {
        char line[512];
        std::snprintf(line, sizeof line, "[%s] %s: %s (%.1f ms)", res.pass ? "PASS" : "FAIL",
                      res.name.c_str(), res.human.c_str(), res.ms);
        std::puts(line);
      }
      if (to_run.size() > 1) {
        std::size_t passed = 0;
        for (const CheckResult& res : results) passed += res.pass;
        std::string line = std::string("[") + (all_pass ? "PASS" : "FAIL") + "] all: " +
                           std::to_string(passed) + "/" + std::to_string(results.size()) +
                           " checks";
        std::puts(line.c_str());
      }
    }
    return all_pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace mcop::cli
