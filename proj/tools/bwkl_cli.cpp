// Command-line front end for the bwkl library.

#include "bwkl/arcdiagrams.hpp"
#include "bwkl/blockmatrix.hpp"
#include "bwkl/decomp.hpp"
#include "bwkl/io.hpp"
#include "bwkl/klpoly.hpp"
#include "bwkl/weights.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace bwkl;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "brauer";
  int delta = 1;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::optional<int> max_size;
  std::string format = "text";
  std::string diamond = "v";
  bool allow_delta_zero = false;
  int jobs = 1;
  std::string out;
  std::string kind = "both";
  std::optional<std::string> against;
};

Family family_of(const Options &o) {
  try {
    return parse_family(o.family);
  } catch (const WeightError &e) {
    throw UsageError(e.what());
  }
}

Label diamond_of(const Options &o) {
  if (o.diamond == "v")
    return Label::Down;
  if (o.diamond == "^")
    return Label::Up;
  throw UsageError("--diamond must be v or ^");
}

void require_formats(const Options &o, std::initializer_list<const char *> allowed) {
  for (const char *f : allowed)
    if (o.format == f)
      return;
  std::string list;
  for (const char *f : allowed)
    list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("format '" + o.format + "' is not available here (choose " + list + ")");
}

WeightDiagram weight_from(const Options &o, const std::string &text) {
  Shape s = parse_shape(family_of(o), text);
  if (o.delta == 0 && o.allow_delta_zero) {
    static bool warned = false;
    if (!warned)
      std::cerr << "warning: delta = 0 is outside the setting these constructions were proved for\n";
    warned = true;
  }
  return build_weight(s, o.delta, diamond_of(o), o.allow_delta_zero);
}

WeightDiagram lambda_of(const Options &o) {
  if (o.max_size)
    throw UsageError("give either --lambda or --max-size, not both");
  if (!o.lambda)
    throw UsageError("--lambda is required");
  return weight_from(o, *o.lambda);
}

WeightDiagram mu_of(const Options &o) {
  if (!o.mu)
    throw UsageError("--mu is required");
  return weight_from(o, *o.mu);
}

std::string positions_text(const WeightDiagram &w) {
  std::string s;
  for (int p = w.window_lo(); p <= w.window_hi(); p += 2) {
    if (!s.empty())
      s += ' ';
    Label l = w.label_at(p);
    s += format_position(p) + ":" + ((p == 0 && w.has_diamond()) ? std::string("D") : std::string(1, static_cast<char>(l)));
  }
  return s;
}

std::string entries_text(const WeightDiagram &w, const Shape &shape) {
  std::ostringstream os;
  int n = static_cast<int>(shape.family == Family::Brauer ? shape.parts.size()
                                                           : std::max(shape.left.size(), shape.right.size())) +
          2;
  auto join = [](const std::vector<std::string> &v) {
    std::string s;
    for (const auto &x : v)
      s += (s.empty() ? "" : ",") + x;
    return s;
  };
  if (shape.family == Family::Brauer) {
    std::vector<std::string> v;
    for (int x : brauer_entries_doubled(shape, w.delta(), n))
      v.push_back(format_position(x));
    os << "(" << join(v) << ",...)";
  } else {
    auto [neg, pos] = walled_entries(shape, w.delta(), n);
    std::vector<std::string> a, b;
    for (int x : neg)
      a.push_back(std::to_string(x));
    for (int x : pos)
      b.push_back(std::to_string(x));
    os << "(...," << join(a) << ";" << join(b) << ",...)";
  }
  return os.str();
}

std::string cmd_weight(const Options &o) {
  require_formats(o, {"text", "json"});
  WeightDiagram w = lambda_of(o);
  Shape s = weight_to_shape(w);
  if (o.format == "json") {
    Json j = to_json(w);
    j["positions"] = positions_text(w);
    j["entries"] = entries_text(w, s);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "shape: " << display_name(s) << "\n"
     << "family: " << family_name(w.family()) << "\n"
     << "delta: " << w.delta() << "\n"
     << "entries: " << entries_text(w, s) << "\n"
     << "vertices: " << positions_text(w) << "\n"
     << "labels: " << w.label_string() << "\n";
  return os.str();
}

std::string cmd_diagram(const Options &o) {
  require_formats(o, {"text", "tikz", "json"});
  WeightDiagram w = lambda_of(o);
  ArcDiagram c = build_arc_diagram(w);
  if (o.format == "json")
    return to_json(c).dump(2) + "\n";
  if (o.format == "tikz")
    return render_tikz(c, w);
  return render_ascii(c, w);
}

std::string cmd_pair(const Options &o, bool is_d) {
  require_formats(o, {"text", "json"});
  WeightDiagram l = lambda_of(o), m = mu_of(o);
  QPoly direct = is_d ? d_poly(l, m) : p_poly(l, m);
  QPoly rec = is_d ? d_poly_recursive(l, m) : p_poly_recursive(l, m);
  bool match = direct == rec;
  std::string out;
  if (o.format == "json") {
    out = Json{{"direct", to_json(direct)}, {"recursive", to_json(rec)}, {"match", match}}.dump(2) + "\n";
  } else {
    out = direct.to_string() + "\nrecursive: " + rec.to_string() + ", " + (match ? "match" : "MISMATCH") + "\n";
  }
  if (!match)
    throw VerifyFailure("recursive and direct values differ for lambda=" + weight_name(l) + " mu=" + weight_name(m) +
                        " delta=" + std::to_string(o.delta) + " family=" + o.family + "\n" + out);
  return out;
}

std::string cmd_block(const Options &o) {
  require_formats(o, {"text", "json"});
  auto ds = down_set(lambda_of(o));
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto &w : ds)
      a.push_back(to_json(w));
    return a.dump(2) + "\n";
  }
  std::string out;
  for (const auto &w : ds)
    out += weight_name(w) + "\t" + w.label_string() + "\n";
  return out;
}

std::string cmd_matrix(const Options &o) {
  require_formats(o, {"text", "json", "csv"});
  if (o.kind != "d" && o.kind != "p" && o.kind != "both")
    throw UsageError("--kind must be d, p or both");
  auto ds = down_set(lambda_of(o));
  std::vector<std::pair<std::string, PolyMatrix>> mats;
  if (o.kind != "p")
    mats.emplace_back("d", d_matrix(ds, o.jobs));
  if (o.kind != "d")
    mats.emplace_back("p", p_matrix(ds, o.jobs));
  if (o.format == "json") {
    Json j = Json::object();
    for (auto &[name, m] : mats)
      j[name] = to_json(m);
    return j.dump(2) + "\n";
  }
  std::string out;
  for (auto &[name, m] : mats) {
    if (mats.size() > 1)
      out += (out.empty() ? "" : "\n") + std::string("# ") + name + "\n";
    out += to_csv(m);
  }
  if (o.format == "text") {
    std::string text;
    for (char ch : out)
      if (ch != '\r')
        text += ch;
    return text;
  }
  return out;
}

// Checks the inverse identity and recursion agreement on the down-set of one weight.
std::string verify_one(const WeightDiagram &top) {
  auto ds = down_set(top);
  PolyMatrix d = d_matrix(ds), p = p_matrix(ds);
  std::string problems;
  auto tuple = [&](const WeightDiagram &a, const WeightDiagram &b) {
    return "(lambda=" + weight_name(a) + ", mu=" + weight_name(b) + ", delta=" + std::to_string(top.delta()) +
           ", family=" + std::string(family_name(top.family())) + ")";
  };
  for (std::size_t r = 0; r < ds.size(); ++r)
    for (std::size_t c = 0; c < ds.size(); ++c) {
      if (d_poly_recursive(ds[r], ds[c]) != d.at(r, c))
        problems += "d recursion mismatch " + tuple(ds[r], ds[c]) + "\n";
      if (p_poly_recursive(ds[r], ds[c]) != p.at(r, c))
        problems += "p recursion mismatch " + tuple(ds[r], ds[c]) + "\n";
    }
  if (!verify_inverse(p, d).ok)
    problems += "inverse identity fails on the down-set of " + weight_name(top) + " (delta=" +
                std::to_string(top.delta()) + ", family=" + std::string(family_name(top.family())) + ")\n";
  return problems;
}

std::string cmd_verify(const Options &o) {
  require_formats(o, {"text", "json"});
  if (o.lambda)
    throw UsageError("verify sweeps by size; give --max-size instead of --lambda");
  if (!o.max_size || *o.max_size < 0)
    throw UsageError("--max-size is required");
  Family fam = family_of(o);
  std::vector<WeightDiagram> tops;
  for (int n = 0; n <= *o.max_size; ++n) {
    if (fam == Family::Brauer) {
      for (auto &p : partitions_of(n))
        tops.push_back(build_weight(Shape::brauer(p), o.delta, diamond_of(o), o.allow_delta_zero));
      continue;
    }
    for (int m = 0; m <= *o.max_size; ++m)
      for (auto &l : partitions_of(n))
        for (auto &r : partitions_of(m))
          tops.push_back(build_weight(Shape::walled(l, r), o.delta, std::nullopt, o.allow_delta_zero));
  }
  std::vector<std::string> results(tops.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tops.size();)
      results[k] = verify_one(tops[k]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, o.jobs); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &th : pool)
    th.join();
  std::string problems;
  for (const auto &r : results)
    problems += r;
  std::string summary = "checked " + std::to_string(tops.size()) + " weights: " + (problems.empty() ? "ok" : "FAILED");
  std::string out = o.format == "json" ? Json{{"weights", tops.size()}, {"ok", problems.empty()}}.dump(2) + "\n"
                                       : summary + "\n";
  if (!problems.empty())
    throw VerifyFailure(problems.substr(0, problems.find('\n')) + "\n" + problems + out);
  return out;
}

std::string cmd_resolution(const Options &o) {
  require_formats(o, {"text", "json"});
  auto layers = resolution_multiplicities(lambda_of(o));
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto &layer : layers) {
      Json l = Json::object();
      for (const auto &t : layer)
        l[weight_name(t.mu)] = t.multiplicity;
      a.push_back(l);
    }
    return a.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    out += "degree " + std::to_string(i) + ":";
    for (const auto &t : layers[i])
      out += " " + weight_name(t.mu) + "x" + std::to_string(t.multiplicity);
    out += "\n";
  }
  return out;
}

std::string cmd_word(const Options &o) {
  require_formats(o, {"text", "json"});
  WeightDiagram w = lambda_of(o);
  std::optional<int> cutoff;
  if (o.against)
    cutoff = build_arc_diagram(weight_from(o, *o.against)).rightmost_arc_vertex();
  BoeWord word = boe_word(w, cutoff);
  if (o.format == "json")
    return Json{{"word", word.letters}, {"redundant_last", word.redundant_last}, {"text", word.to_string()}}.dump(2) +
           "\n";
  return word.to_string() + "\n";
}

void add_common(CLI::App *sub, Options &o, bool pair, bool sweep) {
  sub->add_option("--family", o.family, "brauer or walled")->capture_default_str();
  sub->add_option("--delta", o.delta, "the parameter delta")->capture_default_str();
  sub->add_option("--lambda", o.lambda, "shape, e.g. \"4,3,2\" or \"2,2,1|3,2\"");
  if (pair)
    sub->add_option("--mu", o.mu, "second shape");
  if (sweep)
    sub->add_option("--max-size", o.max_size, "largest partition size in the sweep");
  sub->add_option("--format", o.format, "text, json, csv or tikz")->capture_default_str();
  sub->add_option("--diamond", o.diamond, "diamond resolution for the block's minimal weight (v or ^)")
      ->capture_default_str();
  sub->add_flag("--allow-delta-zero", o.allow_delta_zero, "accept delta = 0");
  sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  sub->add_option("--out", o.out, "write the result to this file");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decomposition numbers and Kazhdan-Lusztig polynomials for Brauer and walled Brauer algebras", "bwkl"};
  app.require_subcommand(1);
  Options o;
  struct Cmd {
    const char *name;
    const char *help;
    bool pair, sweep;
    std::function<std::string(const Options &)> run;
  };
  std::vector<Cmd> cmds = {
      {"weight", "print the weight diagram of a shape", false, false, cmd_weight},
      {"diagram", "draw the cap/curl diagram of a shape", false, false, cmd_diagram},
      {"dpoly", "d(lambda, mu), direct and recursive", true, false, [](const Options &x) { return cmd_pair(x, true); }},
      {"ppoly", "p(lambda, mu), direct and recursive", true, false, [](const Options &x) { return cmd_pair(x, false); }},
      {"block", "list every weight below lambda in its block", false, false, cmd_block},
      {"matrix", "d and p matrices on the down-set of lambda", false, false, cmd_matrix},
      {"verify", "inverse identity and recursion checks over a sweep", false, true, cmd_verify},
      {"resolution", "projective resolution multiplicities of lambda", false, false, cmd_resolution},
      {"word", "two-letter word of a weight", false, false, cmd_word},
  };
  std::vector<CLI::App *> subs;
  for (auto &c : cmds) {
    auto *sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o, c.pair, c.sweep);
    if (std::string(c.name) == "matrix")
      sub->add_option("--kind", o.kind, "d, p or both")->capture_default_str();
    if (std::string(c.name) == "word")
      sub->add_option("--against", o.against, "read up to the cut-off of this shape's diagram");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::string msg = e.what();
    std::cerr << "error[usage]: " << msg.substr(0, msg.find('\n')) << "\n";
    return 2;
  }

  try {
    std::string out;
    for (std::size_t k = 0; k < cmds.size(); ++k)
      if (subs[k]->parsed())
        out = cmds[k].run(o);
    if (o.out.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f)
        throw UsageError("cannot open output file " + o.out);
      f << out;
    }
    return 0;
  } catch (const UsageError &e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 2;
  } catch (const WeightError &e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return 2;
  } catch (const VerifyFailure &e) {
    std::string msg = e.what();
    std::cerr << "error[mismatch]: " << msg.substr(0, msg.find('\n')) << "\n" << msg.substr(msg.find('\n') + 1);
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
}
