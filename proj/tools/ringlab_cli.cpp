#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/nil.hpp"
#include "ringlab/suites.hpp"

namespace {

using namespace ringlab;

struct CliConfig {
    std::string expr;
    std::string file;
    std::string suite = "all";
    int max_order = 4096;
    int build_cap = kDefaultOrderCap;
    int exchange_cap = 4096;
    uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json";
    std::string output;
};

void write_out(const CliConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
        out << text << "\n";
    }
}

RingTable ring_from_config(const CliConfig& cfg) {
    if (!cfg.expr.empty() && !cfg.file.empty())
        throw std::runtime_error("give exactly one of --expr and --file");
    if (!cfg.expr.empty()) return build(cfg.expr, cfg.build_cap);
    if (!cfg.file.empty()) return load_file(cfg.file);
    throw std::runtime_error("one of --expr or --file is required");
}

std::string classification_text(const RingTable& R, const ClassificationReport& rep) {
    std::ostringstream s;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    s << R.label << " (order " << R.order << (R.one ? ", unital" : ", non-unital") << ")\n";
    s << "  NR: " << yn(rep.nr.holds) << "   NI: " << yn(rep.ni.holds)
      << "   Abelian: " << yn(rep.abelian.holds) << "   Boolean: " << yn(rep.boolean_ring.holds)
      << "\n";
    s << "  exchange: "
      << (rep.exchange.status == ExchangeVerdict::Status::skipped
              ? "not computed"
              : yn(rep.exchange.holds()))
      << "   strongly nil clean: " << yn(rep.strongly_nil_clean.holds)
      << "   bounded index: " << rep.bounded_index << "\n";
    if (rep.uu)
        s << "  UU: " << yn(rep.uu->holds) << "   clean: " << yn(rep.clean->holds)
          << "   nil clean: " << yn(rep.nil_clean->holds) << "\n";
    s << "  closure:";
    for (size_t i = 0; i < kClosureOps.size(); ++i)
        s << " " << to_string(kClosureOps[i]) << "=" << yn(rep.closures[i].holds);
    return s.str();
}

std::string suite_text(const SuiteResult& r) {
    std::ostringstream s;
    s << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.rings
      << " rings, " << r.checks << " checks, " << r.vacuous << " vacuous, " << int(r.ms) << " ms)";
    for (const auto& v : r.violations) {
        s << "\n  violation: " << v.ring << " / " << v.statement;
        if (!v.witness.empty()) {
            s << " witness (";
            for (size_t i = 0; i < v.witness.size(); ++i) s << (i ? "," : "") << v.witness[i];
            s << ")";
        }
    }
    for (const auto& n : r.notes) s << "\n  note: " << n;
    return s.str();
}

int run_verify(const CliConfig& cfg) {
    CorpusSpec spec;
    spec.seed = cfg.seed;
    spec.max_order = cfg.max_order;
    std::vector<RingTable> corpus = generate_corpus(spec);
    if (!cfg.expr.empty()) corpus.push_back(build(cfg.expr, cfg.build_cap));
    if (!cfg.file.empty()) corpus.push_back(load_file(cfg.file));

    SuiteOptions opts;
    opts.seed = cfg.seed;
    opts.jobs = cfg.jobs;
    opts.exchange_cap = cfg.exchange_cap;

    std::vector<SuiteResult> results;
    auto want = [&](const std::string& id) { return cfg.suite == "all" || cfg.suite == id; };
    if (want("main")) results.push_back(verify_main_equivalences(corpus, opts));
    if (want("index2")) results.push_back(verify_index2_lemmas(corpus, opts));
    if (want("semiprime")) results.push_back(verify_semiprime_lemmas(corpus, opts));
    if (want("quotient")) results.push_back(verify_quotient_theorems(corpus, opts));
    if (want("corollaries")) results.push_back(verify_corollaries(corpus, opts));
    if (want("probe")) results.push_back(probe_questions(spec, opts));
    if (results.empty()) throw std::runtime_error("unknown suite: " + cfg.suite);

    bool violations = false;
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        write_out(cfg, arr.dump(2));
    } else {
        std::ostringstream s;
        for (size_t i = 0; i < results.size(); ++i) s << (i ? "\n" : "") << suite_text(results[i]);
        write_out(cfg, s.str());
    }
    for (const auto& r : results) violations |= !r.passed();
    return violations ? 1 : 0;
}

int run_examples(const CliConfig& cfg) {
    std::vector<SuiteResult> results;
    results.push_back(reproduce_example_m3());
    results.push_back(reproduce_example_m2t(3));
    results.push_back(reproduce_example_m2t(4));
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        write_out(cfg, arr.dump(2));
    } else {
        std::ostringstream s;
        for (size_t i = 0; i < results.size(); ++i) s << (i ? "\n" : "") << suite_text(results[i]);
        write_out(cfg, s.str());
    }
    for (const auto& r : results)
        if (!r.passed()) return 1;
    return 0;
}

int run_corpus(const CliConfig& cfg) {
    if (cfg.output.empty()) throw std::runtime_error("corpus requires --output DIRECTORY");
    CorpusSpec spec;
    spec.seed = cfg.seed;
    spec.max_order = cfg.max_order;
    std::vector<std::string> notices;
    std::vector<RingTable> corpus = generate_corpus(spec, &notices);
    std::filesystem::create_directories(cfg.output);
    int i = 0;
    for (const auto& ring : corpus) {
        std::string name = ring.label;
        for (char& c : name)
            if (!std::isalnum(uint8_t(c))) c = '_';
        char idx[16];
        std::snprintf(idx, sizeof idx, "ring_%03d_", i++);
        std::ofstream out(std::filesystem::path(cfg.output) / (idx + name + ".json"));
        out << serialize(ring) << "\n";
    }
    for (const auto& n : notices) std::cerr << "notice: " << n << "\n";
    std::cout << "wrote " << corpus.size() << " rings to " << cfg.output << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ringlab: finite-ring nil-structure computations"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_ring_opts = [&](CLI::App* cmd) {
        cmd->add_option("--expr", cfg.expr, "constructor expression, e.g. \"M(2,Z(2))\"");
        cmd->add_option("--file", cfg.file, "ring table JSON file");
        cmd->add_option("--max-order", cfg.build_cap, "order cap for built rings");
        cmd->add_option("--format", cfg.format, "json|text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--output,-o", cfg.output, "output path (default stdout)");
    };

    auto* cmd_build = app.add_subcommand("build", "build a ring and emit its table file");
    add_ring_opts(cmd_build);
    auto* cmd_classify = app.add_subcommand("classify", "emit the classification report");
    add_ring_opts(cmd_classify);
    cmd_classify->add_option("--exchange-cap", cfg.exchange_cap,
                             "skip the exchange check above this order");
    auto* cmd_analyze = app.add_subcommand("analyze", "emit the nil-structure report");
    add_ring_opts(cmd_analyze);

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites over a corpus");
    cmd_verify->add_option("--suite", cfg.suite,
                           "main|index2|semiprime|quotient|corollaries|probe|all");
    cmd_verify->add_option("--expr", cfg.expr, "extra ring to include in the corpus");
    cmd_verify->add_option("--file", cfg.file, "extra ring table file to include");
    cmd_verify->add_option("--seed", cfg.seed, "corpus seed");
    cmd_verify->add_option("--max-order", cfg.max_order, "corpus order cap");
    cmd_verify->add_option("--exchange-cap", cfg.exchange_cap, "exchange check order cap");
    cmd_verify->add_option("--jobs", cfg.jobs, "parallelism degree")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--format", cfg.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_verify->add_option("--output,-o", cfg.output, "output path (default stdout)");

    auto* cmd_examples = app.add_subcommand("examples", "run both example reproducers");
    cmd_examples->add_option("--format", cfg.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_examples->add_option("--output,-o", cfg.output, "output path (default stdout)");

    auto* cmd_corpus = app.add_subcommand("corpus", "emit corpus ring files to a directory");
    cmd_corpus->add_option("--seed", cfg.seed, "corpus seed");
    cmd_corpus->add_option("--max-order", cfg.max_order, "corpus order cap");
    cmd_corpus->add_option("--output,-o", cfg.output, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_build->parsed()) {
            RingTable R = ring_from_config(cfg);
            write_out(cfg, serialize(R));
            return 0;
        }
        if (cmd_classify->parsed()) {
            RingTable R = ring_from_config(cfg);
            ClassifyOptions opts;
            opts.exchange_cap = cfg.exchange_cap;
            ClassificationReport rep = classify(R, opts);
            write_out(cfg, cfg.format == "json" ? to_json(rep).dump(2)
                                                : classification_text(R, rep));
            return 0;
        }
        if (cmd_analyze->parsed()) {
            RingTable R = ring_from_config(cfg);
            write_out(cfg, to_json(nil_report(R)).dump(2));
            return 0;
        }
        if (cmd_verify->parsed()) return run_verify(cfg);
        if (cmd_examples->parsed()) return run_examples(cfg);
        if (cmd_corpus->parsed()) return run_corpus(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: syntax error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AxiomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
