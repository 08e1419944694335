#include "translat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "translat/io.hpp"
#include "translat/render.hpp"

namespace translat {

namespace {

struct Options {
  std::string spec;
  std::string ts_path;
  int order_cap = 200;
  bool order_cap_given = false;
  int enum_cap = 20;
  std::string cache_dir;
  bool cached_only = false;
  std::string format = "dot";
  std::string target = "ts-hasse";
  std::string out_path;
  bool ascii = false;
  bool strict_audit = false;
  bool close = false;
};

struct Context {
  std::optional<FiniteGroup> group;
  Lattice lattice;
  LatticeAction action;
  std::vector<Subgroup> subgroups;  // empty for abstract lattices
};

Context resolve_context(const std::string& spec, int order_cap) {
  Context ctx;
  if (spec.rfind("lattice:", 0) == 0) {
    std::string path = spec.substr(8);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open lattice file: " + path);
    nlohmann::json j;
    in >> j;
    auto [l, a] = lattice_from_json(j);
    ctx.lattice = std::move(l);
    ctx.action = std::move(a);
    return ctx;
  }
  ctx.group = build_group(GroupSpec::parse(spec), BuildOptions{order_cap});
  auto sl = from_subgroups(*ctx.group);
  ctx.lattice = std::move(sl.lattice);
  ctx.action = std::move(sl.action);
  ctx.subgroups = std::move(sl.subgroups);
  return ctx;
}

std::string resolve_cache_dir(const Options& opts) {
  if (!opts.cache_dir.empty()) return opts.cache_dir;
  if (const char* env = std::getenv("TRANSLAT_CACHE"); env && *env) return env;
  return ".translat-cache";
}

TsLattice get_enumeration(const Context& ctx, const Options& opts) {
  std::string dir = resolve_cache_dir(opts);
  if (auto cached = load_cache(dir, ctx.lattice, ctx.action)) return *cached;
  if (opts.cached_only)
    throw DomainError("no cache for " +
                      (ctx.lattice.source.empty() ? std::string("this lattice")
                                                  : ctx.lattice.source) +
                      " under " + dir);
  EnumerateOptions eopts;
  eopts.max_lattice_size = opts.enum_cap;
  TsLattice tsl = enumerate_all(ctx.lattice, ctx.action, eopts);
  if (!ctx.lattice.source.empty()) write_cache(dir, ctx.lattice, tsl);
  return tsl;
}

void emit(const Options& opts, std::ostream& out, const std::string& text) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + opts.out_path);
  f << text;
}

TsFile read_ts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open transfer-system file: " + path);
  nlohmann::json j;
  in >> j;
  return ts_file_from_json(j);
}

std::string factorization_string(int n, bool ascii) {
  std::string sep = ascii ? "*" : "·";
  std::string out;
  for (auto [p, e] : factorize(n)) {
    if (!out.empty()) out += sep;
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

int cmd_group(const Options& opts, std::ostream& out) {
  Context ctx = resolve_context(opts.spec, opts.order_cap);
  if (!ctx.group) throw DomainError("'group' needs a group spec, not a lattice file");
  const auto& g = *ctx.group;
  auto q = quotient(ctx.lattice, ctx.action);
  out << g.label << " (" << g.spec.str() << ")\n";
  out << "order: " << g.order << "\n";
  out << "subgroups: " << ctx.lattice.size << "\n";
  out << "conjugacy classes of subgroups:\n";
  for (int c = 0; c < q.num_classes(); ++c) {
    int rep = q.classes[c][0];
    out << "  " << q.labels[c] << "  (order "
        << ctx.subgroups[rep].order() << ", " << q.classes[c].size()
        << (q.classes[c].size() == 1 ? " copy)" : " copies)") << "\n";
  }
  out << "lossless: " << (is_lossless(g) ? "yes" : "no") << "\n";
  out << "modular subgroup lattice: " << (is_modular(ctx.lattice) ? "yes" : "no")
      << "\n";
  return 0;
}

int cmd_width(const Options& opts, std::ostream& out) {
  Context ctx = resolve_context(opts.spec, opts.order_cap);
  if (!ctx.group) throw DomainError("'width' needs a group spec, not a lattice file");
  WidthReport report = width(*ctx.group);
  out << "w(" << report.group_label << ") = " << report.width << "\n";
  if (report.formula_value)
    out << "closed form: " << *report.formula_value << "\n";
  out << "meet-irreducible classes and generating edges:\n";
  for (const auto& edge : report.generating_edges) out << "  " << edge << "\n";
  return 0;
}

int cmd_enumerate(const Options& opts, std::ostream& out) {
  Context ctx = resolve_context(opts.spec, opts.order_cap);
  TsLattice tsl = get_enumeration(ctx, opts);
  std::string name = ctx.lattice.source.empty() ? opts.spec : ctx.lattice.source;
  out << name << ": " << tsl.count() << " transfer systems\n";
  if (!ctx.lattice.source.empty())
    out << "cache: " << cache_file_path(resolve_cache_dir(opts), ctx.lattice.source)
        << "\n";
  return 0;
}

int cmd_hasse(const Options& opts, std::ostream& out) {
  Context ctx = resolve_context(opts.spec, opts.order_cap);
  RenderSpec rspec{parse_render_format(opts.format), opts.ascii};
  RenderTarget target = parse_render_target(opts.target);
  std::string text;
  switch (target) {
    case RenderTarget::SubgroupLattice:
      text = render_lattice(ctx.lattice, ctx.action, rspec);
      break;
    case RenderTarget::QuotientPoset:
      text = render_quotient(quotient(ctx.lattice, ctx.action), rspec);
      break;
    case RenderTarget::TransferSystem: {
      if (opts.ts_path.empty())
        throw DomainError("--ts <file> is required for the transfer-system target");
      TransferSystem ts = load_transfer_system(ctx.lattice, ctx.action,
                                               read_ts_file(opts.ts_path), opts.close);
      text = render_transfer(ctx.lattice, ts, rspec);
      break;
    }
    case RenderTarget::TsHasse:
      text = render_ts_hasse(ctx.lattice, get_enumeration(ctx, opts), rspec);
      break;
  }
  emit(opts, out, text);
  return 0;
}

int cmd_check(const Options& opts, std::ostream& out) {
  Context ctx = resolve_context(opts.spec, opts.order_cap);
  TsFile file = read_ts_file(opts.ts_path);
  if (!lattice_ref_matches(ctx.lattice, file.lattice_ref))
    throw DomainError("file targets lattice '" + file.lattice_ref + "'");
  BitMatrix rel(ctx.lattice.size);
  for (int i = 0; i < ctx.lattice.size; ++i) rel.set(i, i);
  for (const Edge& e : file.edges) {
    if (e.lo >= ctx.lattice.size || e.hi >= ctx.lattice.size)
      throw DomainError("edge index out of range");
    rel.set(e.lo, e.hi);
  }
  if (opts.close) rel = close_relation(ctx.lattice, ctx.action, std::move(rel)).rel;
  auto violations = validate(ctx.lattice, ctx.action, rel);
  if (violations.empty()) {
    out << "ok: valid transfer system with " << (rel.count() - ctx.lattice.size)
        << " non-reflexive edges\n";
    return 0;
  }
  out << violations.size() << " axiom violation(s):\n";
  size_t shown = std::min<size_t>(violations.size(), 25);
  for (size_t i = 0; i < shown; ++i)
    out << "  " << violations[i].describe(ctx.lattice) << "\n";
  if (shown < violations.size())
    out << "  ... and " << violations.size() - shown << " more\n";
  return 1;
}

int cmd_props(const Options& opts, std::ostream& out) {
  Context ctx = resolve_context(opts.spec, opts.order_cap);
  TransferSystem ts = load_transfer_system(ctx.lattice, ctx.action,
                                           read_ts_file(opts.ts_path), opts.close);
  TsLattice tsl = get_enumeration(ctx, opts);
  int idx = tsl.find(ts);
  if (idx < 0) throw DomainError("system not found in the enumeration");
  const auto& l = ctx.lattice;
  out << "saturated: " << (is_saturated(l, ts) ? "yes" : "no") << "\n";
  out << "cosaturated: " << (is_cosaturated(l, ctx.action, ts) ? "yes" : "no") << "\n";
  out << "connected: " << (is_connected(l, ts) ? "yes" : "no") << "\n";
  out << "lsp: " << (is_lsp(l, ctx.action, ts, tsl.systems) ? "yes" : "no") << "\n";
  TransferSystem hull = saturated_hull(l, ctx.action, ts);
  out << "hull: " << ts_to_json(l, hull).dump() << "\n";
  return 0;
}

int cmd_audit(const Options& opts, std::ostream& out) {
  Context ctx = resolve_context(opts.spec, opts.order_cap);
  TsLattice tsl = get_enumeration(ctx, opts);
  LspAudit lsp = audit_lsp_two_component(ctx.lattice, ctx.action, tsl);
  BisatPathAudit paths = audit_bisaturated_paths(tsl);
  emit(opts, out, audit_to_json(tsl, lsp, paths).dump(1) + "\n");
  if (opts.strict_audit && !lsp.counterexamples.empty())
    throw DomainError("audit found " + std::to_string(lsp.counterexamples.size()) +
                      " counterexample(s)");
  return 0;
}

int cmd_frobenius_table(const Options& opts, std::ostream& out) {
  // default cap raised so the whole table (up to F_19, order 342) fits
  int cap = opts.order_cap_given ? opts.order_cap : 400;
  out << "group  order factorization  width\n";
  for (int q : {5, 7, 8, 9, 11, 13, 16, 17, 19}) {
    int order = q * (q - 1);
    if (order > cap) continue;
    FiniteGroup g = build_group(GroupSpec{GroupSpec::Family::Frobenius, q, {}},
                                BuildOptions{cap});
    WidthReport report = width(g);
    std::string name = "F_" + std::to_string(q);
    out << name << std::string(name.size() < 7 ? 7 - name.size() : 1, ' ')
        << factorization_string(order, opts.ascii) << "  " << report.width << "\n";
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"transfer systems on subgroup lattices of finite groups"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* cmd, bool with_spec = true) {
    if (with_spec)
      cmd->add_option("spec", opts.spec,
                      "group spec (C:<n> D:<n> Q:<2^k> Dic:<n> F:<q> A:4 "
                      "perm:<path>) or lattice:<file.json>")
          ->required();
    cmd->add_option("--order-cap", opts.order_cap, "largest allowed group order")
        ->each([&](const std::string&) { opts.order_cap_given = true; });
    cmd->add_option("--enum-cap", opts.enum_cap, "largest lattice size to enumerate");
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "enumeration cache directory (env TRANSLAT_CACHE)");
    cmd->add_flag("--cached-only", opts.cached_only, "fail instead of enumerating");
    cmd->add_option("--out", opts.out_path, "write output to a file");
    cmd->add_flag("--ascii", opts.ascii, "ASCII decoration markers");
    return cmd;
  };

  auto* group_cmd = add_common(app.add_subcommand("group", "order, subgroups, classes"));
  auto* width_cmd = add_common(app.add_subcommand("width", "width report"));
  auto* enum_cmd = add_common(app.add_subcommand("enumerate", "count all transfer systems"));
  auto* hasse_cmd = add_common(app.add_subcommand("hasse", "render diagrams"));
  hasse_cmd->add_option("--format", opts.format, "dot, tikz or json");
  hasse_cmd->add_option("--target", opts.target,
                        "subgroup-lattice, quotient-poset, transfer-system or ts-hasse");
  hasse_cmd->add_option("--ts", opts.ts_path, "transfer-system file (for that target)");
  hasse_cmd->add_flag("--close", opts.close, "close the loaded relation");
  auto* check_cmd = add_common(app.add_subcommand("check", "validate a transfer-system file"));
  check_cmd->add_option("ts", opts.ts_path, "transfer-system JSON file")->required();
  check_cmd->add_flag("--close", opts.close, "close the relation before validating");
  auto* props_cmd = add_common(app.add_subcommand("props", "properties of one system"));
  props_cmd->add_option("ts", opts.ts_path, "transfer-system JSON file")->required();
  props_cmd->add_flag("--close", opts.close, "close the loaded relation");
  auto* audit_cmd = add_common(app.add_subcommand("audit", "conjecture audits"));
  audit_cmd->add_flag("--strict-audit", opts.strict_audit,
                      "treat counterexamples as errors");
  auto* frob_cmd = add_common(app.add_subcommand("frobenius-table",
                                                 "width table of Frobenius groups"),
                              /*with_spec=*/false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (group_cmd->parsed()) return cmd_group(opts, out);
    if (width_cmd->parsed()) return cmd_width(opts, out);
    if (enum_cmd->parsed()) return cmd_enumerate(opts, out);
    if (hasse_cmd->parsed()) return cmd_hasse(opts, out);
    if (check_cmd->parsed()) return cmd_check(opts, out);
    if (props_cmd->parsed()) return cmd_props(opts, out);
    if (audit_cmd->parsed()) return cmd_audit(opts, out);
    if (frob_cmd->parsed()) return cmd_frobenius_table(opts, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace translat
