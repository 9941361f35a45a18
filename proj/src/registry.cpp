#include "dlas/registry.hpp"

#include <cctype>
#include <string>

namespace dlas {
namespace {

struct Entry {
  const char* name;  // lowercase
  Fitness best_known;
  double cutoff_seconds;
};

constexpr Entry kTable[] = {
    // TSP
    {"dsj1000", 18659688, 100},
    {"pr1002", 259045, 120},
    {"u1060", 224094, 150},
    {"vm1084", 239297, 155},
    {"pcb1173", 56892, 160},
    {"d1291", 50801, 165},
    {"nrw1379", 56638, 177},
    {"fl1400", 20127, 180},
    {"u1432", 152970, 200},
    {"fl1577", 22249, 250},
    {"d1655", 62128, 270},
    {"vm1748", 336556, 280},
    {"u1817", 57201, 290},
    {"d2103", 80450, 309},
    {"u2152", 64253, 320},
    {"u2319", 234256, 350},
    {"pr2392", 378032, 370},
    {"pcb3038", 137694, 521},
    {"fl3795", 28772, 1110},
    {"fnl4461", 182566, 1150},
    {"rl5915", 565530, 1200},
    {"rl5934", 556045, 1320},
    {"pla7397", 23260728, 2545},
    // QAP
    {"lipa80a", 253195, 20},
    {"tai80a", 13499184, 21},
    {"lipa80b", 7763962, 26},
    {"tai80b", 818415043, 27},
    {"sko81", 90998, 24},
    {"lipa90a", 360630, 23},
    {"lipa90b", 12490441, 36},
    {"dre90", 1838, 35},
    {"sko90", 115534, 28},
    {"sko100a", 152002, 40},
    {"tai100a", 21052466, 35},
    {"sko100b", 153890, 52},
    {"tai100b", 1185996137, 55},
    {"sko100c", 147862, 42},
    {"sko100d", 149576, 42},
    {"sko100e", 149150, 42},
    {"sko100f", 149036, 42},
    {"wil100", 273038, 35},
    {"dre110", 2264, 37},
    {"esc128", 64, 21},
    {"dre132", 2744, 65},
    {"tai150b", 498896643, 105},
    {"tho150", 8133398, 130},
    {"tai256c", 44759294, 60},
};

}  // namespace

std::optional<BenchmarkEntry> best_known(std::string_view instance_name) {
  std::string key(instance_name);
  for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const Entry& entry : kTable)
    if (key == entry.name) return BenchmarkEntry{entry.best_known, entry.cutoff_seconds};
  return std::nullopt;
}

}  // namespace dlas
