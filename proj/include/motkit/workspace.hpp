#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "motkit/cgm.hpp"
#include "motkit/equiv.hpp"
#include "motkit/motive.hpp"
#include "motkit/qform.hpp"

namespace motkit {

// A workspace file bundles everything the CLI can reference by name:
// one extension lattice with its atoms, plus named motives, group data,
// Tits tables, quadratic forms and Witt tables. All numbers are integers or
// rational strings "p/q"; saving produces canonical JSON (sorted keys).
class Workspace {
public:
  static Workspace from_json(const nlohmann::json& j);
  static Workspace load(const std::string& path);
  nlohmann::json to_json() const;
  void save(const std::string& path) const;

  const LatticePtr& lattice() const;  // throws when the workspace has none
  bool has_lattice() const { return lattice_ != nullptr; }

  const FormalMotive& motive(const std::string& name) const;
  const GroupDatum& group(const std::string& name) const;
  const TitsTable& tits_table(const std::string& name) const;
  const QuadraticForm& form(const std::string& name) const;
  WittIndexTable witt_table(const std::string& name) const;

  const std::map<std::string, FormalMotive>& motives() const { return motives_; }

  static LaurentPoly poly_from_json(const nlohmann::json& j);
  static nlohmann::json poly_to_json(const LaurentPoly& p);

private:
  struct WittSpec {
    std::optional<std::string> form;
    std::optional<int> dim;
    std::map<std::string, int> nodes;     // explicit entries
    std::map<std::string, int> asserted;  // overrides for non-computable nodes
  };

  int version_ = 1;
  LatticePtr lattice_;
  // Raw node/atom specs kept for canonical re-serialization.
  std::string base_id_;
  std::vector<ExtensionLattice::NodeSpec> node_specs_;
  std::vector<std::pair<std::string, std::string>> edge_specs_;
  std::vector<ExtensionLattice::AtomSpec> atom_specs_;
  int prime_ = 2;

  std::map<std::string, FormalMotive> motives_;
  std::map<std::string, GroupDatum> groups_;
  std::map<std::string, TitsTable> tits_tables_;
  std::map<std::string, nlohmann::json> tits_raw_;
  std::map<std::string, QuadraticForm> forms_;
  std::map<std::string, WittSpec> witt_specs_;
};

}  // namespace motkit
