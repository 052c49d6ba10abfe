#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "munn/cliffmunn.hpp"
#include "munn/models.hpp"
#include "munn/serialize.hpp"
#include "munn/specht.hpp"

namespace munn::cli {

  namespace {
    struct Options {
      std::string spec;
      std::size_t cap = kDefaultElementCap;
      // eggbox
      std::string jclass;
      bool        all    = false;
      std::string format = "text";
      // irreps
      bool check = false;
      // rep
      std::string build;
      std::string out_file;
    };

    std::string rank_label(MonoidModel const& model, index_t j) {
      return model.jclass_name(j);
    }

    // ---- order ---------------------------------------------------------

    void cmd_order(MonoidModel const& model, std::ostream& out) {
      out << "monoid " << model.spec().text() << "\n"
          << "order " << model.monoid()->size() << "\n";
      if (auto const* sgl = model.sgl()) {
        auto const  report = sgl->order();
        auto const& lat    = sgl->lattice().lattice;
        out << "formula " << report.formula << "\n"
            << "enumerated " << report.enumerated << "\n"
            << "agree " << (report.formula == report.enumerated ? "yes" : "no") << "\n"
            << "lattice_elements " << report.index_per_element.size() << "\n";
        if (sgl->lattice().kind == LatticeKind::set_partitions) {
          // What the Young-subgroup description of the maximal subgroups
          // would predict; it need not match the order above.
          auto const young = young_index_sum(sgl->lattice());
          out << "young_index_sum " << young << "\n"
              << "young_index_agree " << (young == report.enumerated ? "yes" : "no") << "\n";
        }
        for (index_t a = 0; a < report.index_per_element.size(); ++a) {
          out << "index " << lat.label(a) << " " << report.index_per_element[a] << "\n";
        }
      }
    }

    // ---- eggbox --------------------------------------------------------

    std::size_t subgroup_order(GreenStructure const& g, index_t j) {
      auto const idem = g.idempotents_in(j);
      return idem.empty() ? 0 : g.H().members[g.H().of[idem.front()]].size();
    }

    void eggbox_text(MonoidModel const& model, index_t j, std::ostream& out) {
      auto const& g   = model.green();
      auto const& m   = *model.monoid();
      auto const  box = eggbox(g, j);
      auto const  sub = subgroup_order(g, j);
      out << "jclass " << model.jclass_name(j) << "\n"
          << "size " << g.J().members[j].size() << "\n"
          << "rows " << box.rows.size() << "\n"
          << "cols " << box.cols.size() << "\n"
          << "regular " << (sub > 0 ? "yes" : "no") << "\n"
          << "subgroup_order " << (sub > 0 ? std::to_string(sub) : "-") << "\n";
      std::vector<std::string> cells;
      std::size_t              width = 0;
      for (std::size_t r = 0; r < box.rows.size(); ++r) {
        for (std::size_t c = 0; c < box.cols.size(); ++c) {
          auto const h = box.cell(r, c);
          cells.push_back((box.is_idempotent(r, c) ? "*" : " ")
                          + m.label(g.H().members[h].front()));
          width = std::max(width, cells.back().size());
        }
      }
      out << "grid\n";
      for (std::size_t r = 0; r < box.rows.size(); ++r) {
        std::string line = " ";
        for (std::size_t c = 0; c < box.cols.size(); ++c) {
          auto const& cell = cells[r * box.cols.size() + c];
          line += " " + cell + std::string(width - cell.size(), ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << "\n";
      }
    }

    void poset_text(MonoidModel const& model, std::ostream& out) {
      auto const& g = model.green();
      auto        hasse = g.j_hasse();
      auto const& order = model.jclass_order();
      auto        rank  = [&](index_t j) {
        return std::find(order.begin(), order.end(), j) - order.begin();
      };
      std::sort(hasse.begin(), hasse.end(), [&](auto const& a, auto const& b) {
        return std::pair(rank(a.second), rank(a.first)) < std::pair(rank(b.second), rank(b.first));
      });
      out << "jclasses " << g.J().count() << "\n";
      for (auto const& [lo, hi] : hasse) {
        out << "cover " << model.jclass_name(hi) << " > " << model.jclass_name(lo) << "\n";
      }
    }

    void eggbox_graph_poset(MonoidModel const& model, std::ostream& out) {
      auto const& g = model.green();
      out << "digraph jposet {\n  rankdir=BT;\n";
      for (auto j : model.jclass_order()) {
        auto const box = eggbox(g, j);
        out << "  \"" << model.jclass_name(j) << "\" [label=\"" << model.jclass_name(j)
            << "\\n" << box.rows.size() << "x" << box.cols.size() << " |H|="
            << g.H().members[box.cells.front()].size() << "\"];\n";
      }
      auto hasse = g.j_hasse();
      std::vector<std::pair<std::string, std::string>> edges;
      for (auto const& [lo, hi] : hasse) {
        edges.emplace_back(model.jclass_name(lo), model.jclass_name(hi));
      }
      std::sort(edges.begin(), edges.end());
      for (auto const& [lo, hi] : edges) {
        out << "  \"" << lo << "\" -> \"" << hi << "\";\n";
      }
      out << "}\n";
    }

    void eggbox_graph_class(MonoidModel const& model, index_t j, std::ostream& out) {
      auto const& g   = model.green();
      auto const& m   = *model.monoid();
      auto const  box = eggbox(g, j);
      out << "graph \"" << model.jclass_name(j) << "\" {\n";
      for (std::size_t r = 0; r < box.rows.size(); ++r) {
        out << "  \"R" << r << "\" [shape=box, label=\"R " << m.label(g.R().members[box.rows[r]].front())
            << "\"];\n";
      }
      for (std::size_t c = 0; c < box.cols.size(); ++c) {
        out << "  \"L" << c << "\" [shape=ellipse, label=\"L " << m.label(g.L().members[box.cols[c]].front())
            << "\"];\n";
      }
      for (std::size_t r = 0; r < box.rows.size(); ++r) {
        for (std::size_t c = 0; c < box.cols.size(); ++c) {
          auto const h = box.cell(r, c);
          out << "  \"R" << r << "\" -- \"L" << c << "\" [label=\"" << g.H().members[h].size()
              << "\"" << (box.is_idempotent(r, c) ? ", style=bold" : "") << "];\n";
        }
      }
      out << "}\n";
    }

    void cmd_eggbox(MonoidModel const& model, Options const& opt, std::ostream& out) {
      if (opt.format != "text" && opt.format != "graph") {
        throw ParseError("--format must be text or graph");
      }
      std::vector<index_t> classes;
      if (!opt.jclass.empty()) {
        classes.push_back(model.jclass_parse(opt.jclass));
      } else {
        classes = model.jclass_order();
      }
      bool const single = !opt.jclass.empty();
      if (opt.format == "graph") {
        if (single) {
          eggbox_graph_class(model, classes.front(), out);
        } else {
          eggbox_graph_poset(model, out);
        }
        return;
      }
      out << "monoid " << model.spec().text() << "\n"
          << "order " << model.monoid()->size() << "\n";
      if (!single) {
        poset_text(model, out);
      }
      for (auto j : classes) {
        out << "\n";
        eggbox_text(model, j, out);
      }
    }

    // ---- irreps --------------------------------------------------------

    std::vector<CatalogEntry> sorted_catalog(MonoidModel const& model) {
      auto const points = model.point_action();
      if (!points || !model.is_inverse()) {
        throw Unsupported("irreps: " + model.spec().text()
                          + " is not an inverse monoid. Its algebra over Q is not "
                            "semisimple in general (for T:n with n >= 2 the mapping "
                            "representation has the invariant hyperplane x_1 + ... + "
                            "x_n = 0 with no invariant complement), so there is no "
                            "Clifford-Munn catalog to list.");
      }
      auto        catalog = cm_catalog(model.green(), *points);
      auto const& order   = model.jclass_order();
      std::stable_sort(catalog.begin(), catalog.end(), [&](auto const& a, auto const& b) {
        return std::find(order.begin(), order.end(), a.apex)
               < std::find(order.begin(), order.end(), b.apex);
      });
      return catalog;
    }

    int cmd_irreps(MonoidModel const& model, Options const& opt, std::ostream& out) {
      auto const catalog = sorted_catalog(model);
      auto const verdict = SemisimplicityTest::run(model.green());
      out << "monoid " << model.spec().text() << "\n"
          << "order " << model.monoid()->size() << "\n"
          << "semisimple " << (verdict.certificate ? "yes" : "no") << " (" << verdict.reason
          << ")\n"
          << "entries " << catalog.size() << "\n";
      for (auto const& c : catalog) {
        out << "entry " << rank_label(model, c.apex) << " " << c.label << " " << c.dim() << "\n";
      }
      auto const sq = sum_of_squares(catalog);
      out << "sum_dim_squared " << sq << "\n";
      if (!opt.check) {
        return kExitOk;
      }
      bool ok = sq == model.monoid()->size();
      out << "check sum_dim_squared " << sq << " order " << model.monoid()->size() << " "
          << (ok ? "ok" : "FAILED") << "\n";
      for (auto const& c : catalog) {
        auto const rt   = cm_roundtrip_check(model.green(), c);
        bool const good = rt.reduce_of_induce && rt.induce_of_reduce;
        ok              = ok && good;
        out << "check roundtrip " << rank_label(model, c.apex) << " " << c.label << " "
            << (good ? "ok" : "FAILED") << "\n";
      }
      out << "check " << (ok ? "passed" : "FAILED") << "\n";
      return ok ? kExitOk : kExitVerification;
    }

    // ---- rep -----------------------------------------------------------

    struct Built {
      std::optional<Representation> rep;  // empty for a zero reduction
      std::string                   over;
    };

    std::vector<IntegerPartition> find_label(YoungIdentification const& id,
                                             std::string const&          label) {
      std::vector<std::size_t> sizes;
      for (auto const& b : id.blocks) {
        sizes.push_back(b.size());
      }
      std::string known;
      for (auto const& t : partition_tuples(sizes)) {
        if (young_label(t) == label) {
          return t;
        }
        known += " " + young_label(t);
      }
      throw ParseError("no irreducible \"" + label + "\" here; choose one of" + known);
    }

    index_t regular_idempotent(MonoidModel const& model, std::string const& jclass) {
      auto const j = model.jclass_parse(jclass);
      if (model.green().idempotents_in(j).empty()) {
        throw ParseError("J-class " + model.jclass_name(j) + " has no idempotent");
      }
      return model.green().least_idempotent(j);
    }

    Built build(MonoidModel const& model, std::string const& what) {
      auto const  colon = what.find(':');
      std::string head  = what.substr(0, colon);
      std::string rest  = colon == std::string::npos ? "" : what.substr(colon + 1);

      if (head == "mapping" && rest.empty()) {
        return {model.mapping_rep(), "monoid"};
      }
      if (head == "specht") {
        if (model.spec().kind != SpecKind::symmetric) {
          throw Unsupported("specht:<partition> needs a symmetric group spec S:n");
        }
        auto const  lambda = partition_parse(rest);
        std::size_t size   = 0;
        for (auto p : lambda) {
          size += p;
        }
        if (size != model.spec().degree) {
          throw ParseError(rest + " is not a partition of " + std::to_string(model.spec().degree));
        }
        std::vector<point_t> labels(size);
        std::iota(labels.begin(), labels.end(), 0);
        auto const sn   = symmetric_group(size);
        auto const data = specht_rep(lambda, labels, sn);
        return {Representation(model.monoid(), data.rep.dim(), data.rep.matrices()), "monoid"};
      }
      if (head == "induce") {
        auto const sep = rest.find(':');
        if (sep == std::string::npos) {
          throw ParseError("induce needs <jclass>:<label>");
        }
        auto const e      = regular_idempotent(model, rest.substr(0, sep));
        auto const points = model.point_action();
        if (!points) {
          throw Unsupported("no block model for the maximal subgroups of "
                            + model.spec().text());
        }
        auto const id = identify_young(model.green(), *points, e);
        auto const v  = young_irrep(id, find_label(id, rest.substr(sep + 1)));
        return {induce(model.green(), v, e), "monoid"};
      }
      if (head == "reduce") {
        auto const sep = rest.find(':');
        if (sep == std::string::npos) {
          throw ParseError("reduce needs <jclass>:<build>");
        }
        auto const e     = regular_idempotent(model, rest.substr(0, sep));
        auto const inner = build(model, rest.substr(sep + 1));
        if (!inner.rep || inner.over != "monoid") {
          throw ParseError("reduce needs a representation of the whole monoid");
        }
        auto red = reduce(model.green(), *inner.rep, e);
        return {std::move(red.rep), "maximal subgroup at " + model.monoid()->label(e)};
      }
      throw ParseError("unknown --build \"" + what
                       + "\"; expected mapping, specht:<partition>, "
                         "induce:<jclass>:<label> or reduce:<jclass>:<build>");
    }

    void cmd_rep(MonoidModel const& model, Options const& opt, std::ostream& out) {
      auto const built = build(model, opt.build);
      std::ostringstream text;
      if (built.rep) {
        built.rep->verify_all_pairs();
        write_representation(text, to_text(*built.rep, model.spec().text(), built.over));
      } else {
        text << "representation\nmonoid " << model.spec().text() << "\nover " << built.over
             << "\nelements 0\ndim 0\nend\n";
      }
      if (opt.out_file.empty()) {
        out << text.str();
        return;
      }
      std::ofstream file(opt.out_file);
      if (!(file << text.str())) {
        throw std::runtime_error("cannot write " + opt.out_file);
      }
      out << "wrote " << opt.out_file << " dim " << (built.rep ? built.rep->dim() : 0) << "\n";
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite monoids, Green's relations and their representations", "munn"};
    app.require_subcommand(1);
    Options opt;
    bool    timing = false;

    auto add_common = [&](CLI::App* sub) {
      sub->add_option("spec", opt.spec, "S:n, I:n, T:n, SGL:<subsets|partitions|ordperm>:n or gens:<file>")
          ->required();
      sub->add_option("--cap", opt.cap, "Element cap for enumerations");
      sub->add_flag("--timing", timing, "Report elapsed time on stderr");
    };
    auto* order = app.add_subcommand("order", "Order of a monoid");
    add_common(order);
    auto* egg = app.add_subcommand("eggbox", "J-order and eggbox diagrams");
    add_common(egg);
    auto* jopt = egg->add_option("--jclass", opt.jclass, "One J-class by name, number or alias");
    egg->add_flag("--all", opt.all, "Every J-class (the default)")->excludes(jopt);
    egg->add_option("--format", opt.format, "text or graph");
    auto* irreps = app.add_subcommand("irreps", "Irreducible representations of an inverse monoid");
    add_common(irreps);
    irreps->add_flag("--check", opt.check, "Check the sum of squares and every round trip");
    auto* rep = app.add_subcommand("rep", "Build and write one representation");
    add_common(rep);
    rep->add_option("--build", opt.build,
                    "mapping | specht:<partition> | induce:<jclass>:<label> | reduce:<jclass>:<build>")
        ->required();
    rep->add_option("--out", opt.out_file, "Write here instead of stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kExitParse;
    }

    auto const start = std::chrono::steady_clock::now();
    int        code  = kExitOk;
    try {
      auto const model = MonoidModel::load(parse_monoid_spec(opt.spec), opt.cap);
      if (order->parsed()) {
        cmd_order(model, out);
      } else if (egg->parsed()) {
        cmd_eggbox(model, opt, out);
      } else if (irreps->parsed()) {
        code = cmd_irreps(model, opt, out);
      } else {
        cmd_rep(model, opt, out);
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kExitParse;
    } catch (Unsupported const& e) {
      err << "error: " << e.what() << "\n";
      return kExitParse;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
      return kExitParse;
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << "\n";
      return kExitCap;
    } catch (VerificationFailure const& e) {
      err << "internal verification failure: " << e.what() << "\n";
      return kExitVerification;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    if (timing) {
      std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
      err << "elapsed " << std::fixed << std::setprecision(3) << dt.count() << " s\n";
    }
    return code;
  }

}  // namespace munn::cli
