#include "conprove/harness/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "conprove/mcts/engine.hpp"
#include "conprove/syntax/tptp.hpp"

namespace conprove {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string join(const std::set<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
  return s.empty() ? "-" : s;
}

}  // namespace

int cmd_prove(const std::string& problem, ProveOptions opts, std::ostream& out, std::ostream& err) {
  Matrix m;
  try {
    m = load_matrix(problem, opts.load);
    if (opts.model) opts.engine.model = ProvabilityModel(Store::load_file(*opts.model));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  const std::string id = std::filesystem::path(problem).stem().string();
  RunReport r;
  try {
    r = run_engine(m, id, opts.engine);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << format_report(r);
  err << "time: " << std::fixed << std::setprecision(3) << r.wall_time << "s\n";
  if (r.certificate && opts.proof_out) {
    try {
      write_file(*opts.proof_out, format_certificate(*r.certificate));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitError;
    }
  }
  if (r.certificate && !r.solved()) {
    err << "error: emitted certificate was rejected by the checker\n";
    return kExitError;
  }
  return r.solved() ? kExitProof : kExitNoProof;
}

TrainSummary train_corpus(const std::vector<ProblemInfo>& corpus, const TrainOptions& opts, std::ostream& err) {
  EngineConfig engine = opts.engine;
  engine.engine = EngineKind::Deepening;
  engine.deepening.collect_training = true;

  struct Result {
    bool loaded = false;
    std::string error;
    RunReport report;
  };
  auto results = run_parallel<Result>(corpus.size(), opts.jobs, [&](std::size_t i) {
    Result r;
    try {
      const Matrix m = load_matrix(corpus[i].path, opts.load);
      r.report = run_engine(m, corpus[i].id, engine);
      r.loaded = true;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    return r;
  });

  TrainSummary s;
  s.problems = corpus.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].loaded) {
      err << "warning: skipping " << corpus[i].path << ": " << results[i].error << "\n";
      ++s.skipped;
      continue;
    }
    if (!results[i].report.solved()) continue;
    ++s.solved;
    s.store.record(results[i].report.events);
  }
  return s;
}

int cmd_train(const std::string& corpus_dir, const TrainOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<ProblemInfo> corpus;
  try {
    corpus = list_corpus(corpus_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  TrainSummary s = train_corpus(corpus, opts, err);
  out << "problems: " << s.problems << "\n";
  out << "solved: " << s.solved << "\n";
  out << "unsolved: " << s.problems - s.solved - s.skipped << "\n";
  out << "skipped: " << s.skipped << "\n";
  out << "entries: " << s.store.size() << "\n";
  if (s.store.saturated()) err << "warning: some counts saturated\n";
  if (opts.model_out) {
    try {
      s.store.save_file(*opts.model_out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitError;
    }
  }
  return 0;
}

BenchResult bench_corpus(const std::vector<ProblemInfo>& corpus, const BenchOptions& opts, std::ostream& err) {
  std::vector<std::optional<Matrix>> matrices(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    try {
      matrices[i] = load_matrix(corpus[i].path, opts.load);
    } catch (const std::exception& e) {
      err << "warning: " << corpus[i].path << ": " << e.what() << "\n";
    }
  }
  BenchResult b;
  std::map<std::string, std::set<std::string>> solved;
  for (const EngineConfig& cfg : opts.configs) {
    auto reports = run_parallel<RunReport>(corpus.size(), opts.jobs, [&](std::size_t i) {
      if (!matrices[i]) {
        RunReport r;
        r.problem = corpus[i].id;
        r.config = cfg.name;
        r.engine = cfg.engine;
        r.outcome = "error";
        return r;
      }
      try {
        return run_engine(*matrices[i], corpus[i].id, cfg);
      } catch (const std::exception&) {
        RunReport r;
        r.problem = corpus[i].id;
        r.config = cfg.name;
        r.engine = cfg.engine;
        r.outcome = "error";
        return r;
      }
    });
    auto& set = solved[cfg.name];
    for (const auto& r : reports) {
      if (r.solved()) set.insert(r.problem);
    }
    b.reports.push_back(std::move(reports));
  }
  b.unique = unique_solves(solved);
  return b;
}

int cmd_bench(const std::string& corpus_dir, const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<ProblemInfo> corpus;
  try {
    corpus = list_corpus(corpus_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  const BenchResult b = bench_corpus(corpus, opts, err);

  for (std::size_t c = 0; c < opts.configs.size(); ++c) {
    std::size_t n = 0;
    for (const auto& r : b.reports[c]) n += r.solved() ? 1 : 0;
    out << "config " << opts.configs[c].name << ": solved " << n << "/" << corpus.size() << "\n";
  }
  out << "\n" << std::left << std::setw(24) << "problem";
  for (const auto& cfg : opts.configs) out << " " << std::setw(16) << cfg.name;
  out << "\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out << std::setw(24) << corpus[i].id;
    for (std::size_t c = 0; c < opts.configs.size(); ++c) out << " " << std::setw(16) << b.reports[c][i].outcome;
    out << "\n";
  }
  out << "\n";
  for (const auto& [name, set] : b.unique.unique) out << "unique " << name << ": " << join(set) << "\n";
  for (const auto& [pair, set] : b.unique.pairwise) {
    out << "only " << pair.first << " not " << pair.second << ": " << join(set) << "\n";
  }

  if (opts.csv_out) {
    std::string csv = csv_header();
    for (const auto& reports : b.reports) {
      for (const auto& r : reports) csv += csv_row(r);
    }
    try {
      write_file(*opts.csv_out, csv);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitError;
    }
  }
  return 0;
}

int cmd_tsp(const TspOptions& opts, std::ostream& out, std::ostream& err) {
  tsp::Instance inst;
  try {
    inst = opts.instance ? tsp::Instance::load_file(*opts.instance)
                         : tsp::Instance::random(opts.random_cities, opts.instance_seed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  mcts::SearchConfig search = opts.search;
  search.max_sim_depth = std::max<std::uint32_t>(search.max_sim_depth, static_cast<std::uint32_t>(inst.size()));
  tsp::TspProblem problem(inst, opts.reading);
  mcts::Search<tsp::TspProblem> engine(problem, search);
  const auto result = engine.run();

  out << std::setprecision(10);
  out << "cities: " << inst.size() << "\n";
  out << "status: " << mcts::to_string(result.status) << "\n";
  out << "iterations: " << result.stats.iterations << "\n";
  if (problem.best()) {
    out << "best-length: " << problem.best()->length << "\n";
    out << "best-tour:";
    for (auto c : problem.best()->tour) out << " " << c + 1;
    out << "\n";
  }
  if (inst.size() <= 10) {
    const auto opt = tsp::brute_force_optimum(inst);
    out << "optimum-length: " << opt.length << "\n";
    if (problem.best()) out << "optimal: " << (problem.best()->length <= opt.length + 1e-9 ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_check(const std::string& problem, const std::string& certificate, const LoadOptions& load,
              std::ostream& out, std::ostream& err) {
  try {
    const Matrix m = load_matrix(problem, load);
    const ProofCertificate cert = parse_certificate(read_file(certificate));
    const CheckResult r = check_proof(m, cert);
    if (r.accepted) {
      out << "accept (" << r.extensions << " extensions)\n";
      return kExitProof;
    }
    out << "reject at step " << r.failed_step << ": " << r.reason << "\n";
    return kExitNoProof;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace conprove
