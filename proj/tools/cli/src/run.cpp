#include "qlc/cli/run.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "qlc/error.hpp"

namespace qlc::cli {

namespace fs = std::filesystem;

namespace {

json error_doc(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

int status_for(const Error& e) { return e.kind() == Error::Kind::kDegenerate ? 2 : 1; }

RunResult run_guarded(const std::function<json()>& body) {
  try {
    return {0, body()};
  } catch (const Error& e) {
    return {status_for(e), error_doc(e.code(), e.what())};
  } catch (const json::exception& e) {
    return {1, error_doc("json.schema", e.what())};
  } catch (const std::exception& e) {
    return {1, error_doc("internal", e.what())};
  }
}

fs::path corpus_dir(const Job& job) {
  if (auto it = job.options.find("dir"); it != job.options.end()) return it->second;
  if (const char* env = std::getenv("QC_CORPUS_DIR"); env && *env) return env;
  return "corpus";
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_invalid("io.write", "cannot write " + path.string());
  out << text;
}

struct CheckOutcome {
  std::string verdict;  // pass | fail | updated
  std::string reason;
};

CheckOutcome run_check(const json& check, const fs::path& dir, bool update) {
  std::vector<std::string> args;
  for (const auto& a : check.at("args")) {
    std::string s = a.get<std::string>();
    if (s.rfind("corpus:", 0) == 0) s = (dir / s.substr(7)).string();
    args.push_back(std::move(s));
  }
  RunResult got = run_guarded([&] {
    Job job = parse_args(args);
    if (job.command == "corpus") throw_invalid("corpus.recursive", "corpus checks cannot run the corpus");
    RunResult r = run(job);
    return json{{"status", r.status}, {"document", r.document}};
  });
  json actual = got.status != 0               ? json{{"status", got.status}, {"document", got.document}}
                : got.document["status"] == 0 ? got.document["document"]
                                              : got.document;
  // messages may quote input paths; keep goldens independent of where the corpus lives
  std::string text = actual.dump();
  const std::string root = (dir / "").string();
  for (auto at = text.find(root); at != std::string::npos; at = text.find(root, at + 7)) text.replace(at, root.size(), "corpus:");
  actual = json::parse(text);
  fs::path golden = dir / check.at("golden").get<std::string>();
  if (update) {
    fs::create_directories(golden.parent_path());
    write_file(golden, actual.dump(2) + "\n");
    return {"updated", ""};
  }
  std::ifstream in(golden, std::ios::binary);
  if (!in) return {"fail", "missing golden file " + check.at("golden").get<std::string>()};
  json expected = json::parse(in, nullptr, false);
  if (expected.is_discarded()) return {"fail", "golden file is not valid JSON"};
  if (expected != actual) {
    json patch = json::diff(expected, actual);
    std::string first = patch.empty() ? "" : patch[0].value("path", "");
    return {"fail", "output differs from golden at " + (first.empty() ? "/" : first)};
  }
  return {"pass", ""};
}

json run_corpus(const Job& job) {
  fs::path dir = corpus_dir(job);
  fs::path manifest_path = dir / "manifest.json";
  if (!fs::exists(manifest_path)) throw_invalid("corpus.manifest", "missing manifest: " + manifest_path.string());
  json manifest = read_json_file(manifest_path.string());
  if (!manifest.contains("checks") || !manifest["checks"].is_array())
    throw_invalid("corpus.manifest", "manifest: expected a \"checks\" array");
  std::string filter = job.options.count("filter") ? job.options.at("filter") : "";
  bool update = job.options.count("update") > 0;

  std::vector<json> selected;
  for (const auto& c : manifest["checks"]) {
    std::string name = c.at("name").get<std::string>(), module = c.value("module", "");
    if (filter.empty() || name.find(filter) != std::string::npos || module == filter) selected.push_back(c);
  }
  std::vector<std::future<CheckOutcome>> pending;
  for (const auto& c : selected)
    pending.push_back(std::async(std::launch::async, [&c, &dir, update] {
      try {
        return run_check(c, dir, update);
      } catch (const std::exception& e) {
        return CheckOutcome{"fail", e.what()};
      }
    }));

  json checks = json::array();
  int passed = 0, failed = 0;
  for (std::size_t k = 0; k < selected.size(); ++k) {
    CheckOutcome o = pending[k].get();
    (o.verdict == "fail" ? failed : passed) += 1;
    json e{{"name", selected[k]["name"]},
           {"module", selected[k].value("module", "")},
           {"origin", selected[k].value("origin", "")},
           {"result", o.verdict}};
    if (!o.reason.empty()) e["reason"] = o.reason;
    checks.push_back(std::move(e));
  }
  return {{"corpus", dir.generic_string()},
          {"total", selected.size()},
          {"passed", passed},
          {"failed", failed},
          {"checks", std::move(checks)}};
}

void render_text(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

RunResult run(const Job& job) {
  if (job.command == "corpus") {
    RunResult r = run_guarded([&] { return run_corpus(job); });
    if (r.status == 0 && r.document.value("failed", 0) > 0) r.status = 1;
    return r;
  }
  return run_guarded([&] { return dispatch(job); });
}

std::string render(const json& doc, const std::string& format) {
  if (format == "text") {
    std::ostringstream out;
    render_text(doc, "", out);
    return out.str();
  }
  return doc.dump(2) + "\n";
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string help;
  Job job;
  try {
    job = parse_args(args, &help);
  } catch (const Error& e) {
    std::cout << render(error_doc(e.code(), e.what()), "json");
    return 1;
  }
  if (job.command == "help") {
    std::cout << help;
    return 0;
  }
  RunResult r = run(job);
  std::string text = render(r.document, job.output_format);
  std::cout << text;
  if (!job.output_path.empty()) {
    try {
      write_file(job.output_path, text);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  }
  return r.status;
}

}  // namespace qlc::cli
