#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "wellconn/error.hpp"
#include "wellconn/treatments.hpp"

extern char** environ;

namespace wellconn {

namespace {

namespace fs = std::filesystem;

// Removes the file on scope exit.
class TempFile {
 public:
  explicit TempFile(const char* stem) {
    std::string pattern = (fs::temp_directory_path() / (std::string(stem) + "-XXXXXX")).string();
    const int fd = ::mkstemp(pattern.data());
    if (fd < 0) throw ClustererError(std::string("cannot create temporary file: ") + std::strerror(errno));
    ::close(fd);
    path_ = pattern;
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

int run_process(const std::vector<std::string>& args) {
  std::vector<char*> argv;
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);

  // The tool's stdout goes to our stderr so it never mixes with reports.
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, STDERR_FILENO, STDOUT_FILENO);
  pid_t pid = 0;
  const int rc = posix_spawnp(&pid, argv[0], &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) throw ClustererError("cannot start '" + args[0] + "': " + std::strerror(rc));

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0)
    if (errno != EINTR) throw ClustererError(std::string("waitpid failed: ") + std::strerror(errno));
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
}

}  // namespace

ExternalClusterer::ExternalClusterer(std::string command_template)
    : template_(std::move(command_template)), argv_(tokenize(template_)) {
  if (argv_.empty()) throw ContractViolation("external clusterer: empty command template");
}

std::vector<std::string> ExternalClusterer::tokenize(const std::string& command_template) {
  std::vector<std::string> tokens;
  std::string current;
  bool in_token = false, quoted = false;
  for (char ch : command_template) {
    if (ch == '"') {
      quoted = !quoted;
      in_token = true;
    } else if (!quoted && (ch == ' ' || ch == '\t' || ch == '\n')) {
      if (in_token) tokens.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current.push_back(ch);
      in_token = true;
    }
  }
  if (quoted) throw ParseError("external clusterer: unbalanced quote in command template");
  if (in_token) tokens.push_back(std::move(current));
  return tokens;
}

Clustering ExternalClusterer::cluster(const Graph& part) const {
  TempFile input("wellconn-part");
  TempFile output("wellconn-clusters");
  {
    std::ofstream out(input.path(), std::ios::binary);
    write_edgelist(part, out);
    if (!out) throw ClustererError("cannot write part edgelist to " + input.path());
  }

  std::vector<std::string> args = argv_;
  for (auto& a : args) {
    if (a == "{input}") a = input.path();
    else if (a == "{output}") a = output.path();
  }
  const std::string where = " on a part of " + std::to_string(part.n()) + " nodes (first node '" +
                            (part.n() ? part.label(0) : "") + "')";
  if (const int code = run_process(args); code != 0)
    throw ClustererError("'" + template_ + "' exited with status " + std::to_string(code) + where);

  std::vector<AssignmentRow> rows;
  try {
    rows = read_assignment_file(output.path());
  } catch (const ParseError& e) {
    throw ClustererError("'" + template_ + "' wrote malformed output" + where + ": " + e.what());
  }
  for (const auto& row : rows)
    if (!part.find(row.label))
      throw ClustererError("'" + template_ + "' reported unknown node '" + row.label + "'" + where);
  return attach_clustering(rows, part).clustering;
}

std::unique_ptr<Clusterer> make_clusterer(const std::string& spec) {
  if (spec == "identity") return std::make_unique<IdentityClusterer>();
  if (spec == "components") return std::make_unique<ComponentsClusterer>();
  constexpr std::string_view prefix = "external:";
  if (spec.rfind(prefix, 0) == 0) return std::make_unique<ExternalClusterer>(spec.substr(prefix.size()));
  throw ParseError("unknown clusterer '" + spec + "' (want identity, components or external:<command>)");
}

}  // namespace wellconn
