// Regenerates the bundled group corpus under data/corpus: one group/v1 file
// per group of order <= 24 (all 74 isomorphism types, constructed and
// census-checked by corpus_groups()), each carrying the lex-least
// representative of every subgroup conjugacy class, plus an index file.
// The output is deterministic, so a rerun leaves a clean checkout unchanged.

#include "hopfkit/json_io.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace hopfkit;

namespace {

std::string safe_name(const std::string& name) {
  std::string out;
  for (char c : name)
    out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_dir = "data/corpus";
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--out" && i + 1 < argc)
      out_dir = argv[++i];
    else {
      std::fprintf(stderr, "usage: gen_corpus [--out DIR]\n");
      return 2;
    }
  }

  std::vector<GroupTable> groups = corpus_groups();
  Json index;
  index["schema"] = "corpus-index/v1";
  Json files = Json::array();
  std::size_t pair_count = 0;

  for (const GroupTable& g : groups) {
    Json j = group_to_json(g);
    Json reps = Json::array();
    for (const SubgroupClass& cls : subgroup_conjugacy_classes(g)) {
      reps.push_back(cls.representative);
      ++pair_count;
    }
    j["subgroup_reps"] = std::move(reps);

    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "%02zu_", g.order);
    std::string fname = prefix + safe_name(g.name) + ".json";
    write_file(out_dir + "/" + fname, j.dump(2) + "\n");
    files.push_back(fname);
  }

  index["files"] = std::move(files);
  index["groups"] = groups.size();
  index["pairs"] = pair_count;
  write_file(out_dir + "/index.json", index.dump(2) + "\n");
  std::printf("wrote %zu groups, %zu subgroup-class pairs to %s\n", groups.size(), pair_count,
              out_dir.c_str());
  return 0;
}
