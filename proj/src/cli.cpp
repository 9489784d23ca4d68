#include "tamari/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tamari/bijections.hpp"
#include "tamari/enumeration.hpp"

namespace tamari {

namespace {

enum class Kind { interval, tree, map };

Kind parse_kind(const std::string& name) {
  if (name == "interval" || name == "intervals") return Kind::interval;
  if (name == "tree" || name == "trees") return Kind::tree;
  if (name == "map" || name == "maps") return Kind::map;
  throw Error("unknown family '" + name + "'");
}

const std::vector<std::string> kind_names{"interval", "intervals", "tree", "trees", "map", "maps"};

// Input lines with comments and surrounding blanks removed. Map records span
// several lines and are grouped by their leading n= line.
std::vector<std::string> read_records(std::istream& in, bool group_maps) {
  std::vector<std::string> records;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (group_maps && !records.empty() && line.rfind("n=", 0) != 0) {
      records.back() += '\n' + line;
    } else {
      records.push_back(line);
    }
  }
  return records;
}

std::vector<std::string> load(const std::string& input, std::istream& in, bool group_maps) {
  if (input == "-") return read_records(in, group_maps);
  std::ifstream file(input);
  if (!file) throw Error("cannot open '" + input + "'");
  return read_records(file, group_maps);
}

struct Object {
  Kind kind;
  NewInterval interval{DyckPath::parse("ud"), DyckPath::parse("ud")};
  DegreeTree tree;
  PlanarMap map;
};

Object parse_object(Kind kind, const std::string& text) {
  Object o{kind, NewInterval(DyckPath::parse("ud"), DyckPath::parse("ud")), DegreeTree(), PlanarMap()};
  switch (kind) {
    case Kind::interval:
      o.interval = NewInterval::parse(text);
      break;
    case Kind::tree:
      o.tree = DegreeTree::parse(text);
      if (auto v = validate(o.tree); !v) throw Error("invalid degree tree: " + v.message);
      break;
    case Kind::map:
      o.map = from_hypermap(parse_hypermap(text));
      break;
  }
  return o;
}

Kind detect(const std::string& record) {
  if (record.rfind("n=", 0) == 0) return Kind::map;
  if (record.front() == '(') return Kind::tree;
  return Kind::interval;
}

Object convert(const Object& o, Kind to) {
  Object r = o;
  r.kind = to;
  DegreeTree tree = o.kind == Kind::tree       ? o.tree
                    : o.kind == Kind::map      ? map_to_tree(o.map)
                                               : interval_to_tree(o.interval);
  if (to == Kind::tree) r.tree = tree;
  if (to == Kind::map) r.map = o.kind == Kind::map ? o.map : tree_to_map(tree);
  if (to == Kind::interval) r.interval = o.kind == Kind::interval ? o.interval : tree_to_interval(tree);
  return r;
}

// Canonical text; map records end with a newline, the others do not.
std::string format(const Object& o) {
  switch (o.kind) {
    case Kind::interval: return o.interval.to_string();
    case Kind::tree: return o.tree.to_string();
    case Kind::map: return format_hypermap(to_hypermap(o.map));
  }
  return {};
}

std::string stats_text(const Object& o) {
  std::ostringstream os;
  switch (o.kind) {
    case Kind::interval: {
      auto s = interval_stats(o.interval);
      os << "c00=" << s.c00 << " c01=" << s.c01 << " c11=" << s.c11 << " rcont=" << s.rcont;
      break;
    }
    case Kind::tree: {
      auto s = tree_stats(o.tree);
      os << "lnode=" << s.lnode << " znode=" << s.znode << " pnode=" << s.pnode << " rlabel=" << s.rlabel;
      break;
    }
    case Kind::map: {
      auto s = map_stats(o.map);
      os << "black=" << s.black << " white=" << s.white << " face=" << s.face << " outdeg=" << s.outdeg;
      break;
    }
  }
  return os.str();
}

void write_object(std::ostream& out, const Object& o) {
  out << format(o);
  if (o.kind != Kind::map) out << '\n';
}

void write_frame(const std::filesystem::path& dir, std::size_t index, const std::string& dot) {
  std::ostringstream name;
  name << "step-" << std::setw(4) << std::setfill('0') << index << ".dot";
  std::ofstream file(dir / name.str());
  if (!file) throw Error("cannot write frame in '" + dir.string() + "'");
  file << dot;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bijections between new Tamari intervals, degree trees and bipartite planar maps",
               "tamari-atlas"};
  app.require_subcommand(1);

  std::string family;
  std::string from;
  std::string to;
  std::string input = "-";
  std::string trace_dir;
  std::string render_format = "dot";
  std::size_t size = 0;
  std::size_t max_size = 5;
  bool with_stats = false;

  auto* enumerate = app.add_subcommand("enumerate", "List every object of one family and size");
  enumerate->add_option("--family", family, "intervals, trees or maps")->required()->check(CLI::IsMember(kind_names));
  enumerate->add_option("--size", size, "Interval size, or number of edges")->required();
  enumerate->add_flag("--with-stats", with_stats, "Append statistics as a comment");

  auto* conv = app.add_subcommand("convert", "Apply a bijection to each input object");
  conv->add_option("--from", from, "interval, tree or map")->required()->check(CLI::IsMember(kind_names));
  conv->add_option("--to", to, "interval, tree or map")->required()->check(CLI::IsMember(kind_names));
  conv->add_option("--input", input, "File to read, or - for stdin");

  auto* stats = app.add_subcommand("stats", "Print the statistics of each input object");
  stats->add_option("--family", family, "intervals, trees or maps")->required()->check(CLI::IsMember(kind_names));
  stats->add_option("--input", input, "File to read, or - for stdin");

  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suite");
  verify->add_option("--max-size", max_size, "Largest number of map edges");

  auto* gf = app.add_subcommand("gf", "Print generating-function coefficients");
  gf->add_option("--family", family, "intervals or maps")->required()->check(CLI::IsMember(kind_names));
  gf->add_option("--max-size", max_size, "Largest power of t");

  auto* render = app.add_subcommand("render", "Draw each input map or tree");
  render->add_option("--format", render_format, "Output format")->check(CLI::IsMember({"dot"}));
  render->add_option("--input", input, "File to read, or - for stdin");

  auto* trace = app.add_subcommand("trace", "Run a bijection step by step");
  trace->add_option("--from", from, "map (runs map to tree) or tree (runs tree to map)")
      ->required()
      ->check(CLI::IsMember({"map", "tree"}));
  trace->add_option("--trace-dir", trace_dir, "Directory receiving one dot frame per step");
  trace->add_option("--input", input, "File to read, or - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*enumerate) {
      Kind kind = parse_kind(family);
      auto emit = [&](const Object& o) {
        if (!with_stats) {
          write_object(out, o);
        } else if (o.kind == Kind::map) {
          out << format(o) << "# " << stats_text(o) << '\n';
        } else {
          out << format(o) << " # " << stats_text(o) << '\n';
        }
      };
      Object o = parse_object(Kind::tree, "()");
      o.kind = kind;
      if (kind == Kind::interval) {
        for (auto& interval : enum_new_intervals(size)) {
          o.interval = interval;
          emit(o);
        }
      } else if (kind == Kind::tree) {
        for (auto& dt : enum_degree_trees(size)) {
          o.tree = dt;
          emit(o);
        }
      } else {
        for (auto& m : enum_maps_oracle(size)) {
          o.map = m;
          emit(o);
        }
      }
      return 0;
    }

    if (*conv) {
      Kind source = parse_kind(from);
      Kind target = parse_kind(to);
      for (const auto& record : load(input, in, source == Kind::map)) {
        write_object(out, convert(parse_object(source, record), target));
      }
      return 0;
    }

    if (*stats) {
      Kind kind = parse_kind(family);
      for (const auto& record : load(input, in, kind == Kind::map)) {
        out << stats_text(parse_object(kind, record)) << '\n';
      }
      return 0;
    }

    if (*verify) {
      auto report = verify_suite(max_size);
      out << report.text();
      return report.ok() ? 0 : 2;
    }

    if (*gf) {
      Kind kind = parse_kind(family);
      if (kind == Kind::tree) throw Error("gf supports intervals and maps");
      out << gf_table(kind == Kind::interval ? Family::intervals : Family::maps, max_size).dump();
      return 0;
    }

    if (*render) {
      for (const auto& record : load(input, in, true)) {
        Kind kind = detect(record);
        if (kind == Kind::interval) throw Error("render supports maps and trees");
        Object o = parse_object(kind, record);
        out << (kind == Kind::map ? to_dot(o.map) : to_dot(o.tree));
      }
      return 0;
    }

    if (*trace) {
      Kind kind = parse_kind(from);
      auto records = load(input, in, kind == Kind::map);
      if (records.size() != 1) throw Error("trace expects exactly one input object");
      Object o = parse_object(kind, records.front());
      Trace steps;
      if (kind == Kind::map) {
        map_to_tree(o.map, &steps);
      } else {
        tree_to_map(o.tree, &steps);
      }
      std::filesystem::path dir(trace_dir);
      if (!trace_dir.empty()) std::filesystem::create_directories(dir);
      for (std::size_t i = 0; i < steps.size(); ++i) {
        out << i << ' ' << to_string(steps[i].kind) << ' ' << format_working_map(steps[i].snapshot) << '\n';
        if (!trace_dir.empty()) write_frame(dir, i, to_dot(steps[i].snapshot, steps[i].current));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace tamari
