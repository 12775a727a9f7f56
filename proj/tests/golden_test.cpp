// Replays tests/golden/cases.txt through the CLI and diffs against the
// stored transcripts. AUTOSEQ_REGEN=1 rewrites the transcripts instead.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "cli.hpp"

namespace {

std::string transcript(const std::string& dir, const std::string& line) {
  std::string args_text = line;
  boost::replace_all(args_text, "{dir}", dir);
  std::vector<std::string> args;
  boost::split(args, args_text, boost::is_space(), boost::token_compress_on);
  args.erase(std::remove(args.begin(), args.end(), ""), args.end());
  std::ostringstream out, err;
  const int code = autoseq::cli::run(args, out, err);
  std::string err_text = err.str();
  boost::replace_all(err_text, dir, "{dir}");
  std::ostringstream t;
  t << "$ " << boost::trim_copy(line) << "\nexit: " << code << "\n--- stdout\n" << out.str() << "--- stderr\n" << err_text;
  return t.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : GOLDEN_DIR;
  const bool regen = std::getenv("AUTOSEQ_REGEN") != nullptr;
  std::ifstream cases(dir + "/cases.txt");
  if (!cases) {
    std::cerr << "cannot open " << dir << "/cases.txt\n";
    return 2;
  }
  int failures = 0, total = 0;
  std::string line;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    const std::string name = boost::trim_copy(line.substr(0, bar));
    const std::string got = transcript(dir, line.substr(bar + 1));
    const std::string path = dir + "/" + name + ".out";
    ++total;
    if (regen) {
      std::ofstream(path) << got;
      continue;
    }
    std::ifstream in(path);
    std::stringstream want;
    want << in.rdbuf();
    if (!in || want.str() != got) {
      ++failures;
      std::cout << "MISMATCH " << name << "\n--- expected\n" << want.str() << "--- actual\n" << got << "\n";
    }
  }
  std::cout << (regen ? "regenerated " : "checked ") << total << " transcripts, " << failures << " mismatches\n";
  return failures == 0 ? 0 : 1;
}
