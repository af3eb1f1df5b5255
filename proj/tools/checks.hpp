#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blockperm/blocks.hpp"
#include "blockperm/vertex_weight.hpp"
#include "parse.hpp"

namespace blockperm::tools {

/// One block of kG and the modules built from it, computed on demand.
class BlockCase {
 public:
  BlockCase(const std::string& group, const std::string& field, std::size_t index,
            std::uint64_t seed);

  const PermGroup& group() const { return g_; }
  const Field& field() const { return *f_; }
  const std::vector<BlockData>& blocks() const { return blocks_; }
  const BlockData& block() const { return blocks_.at(index_); }
  std::uint64_t seed() const { return seed_; }

  const GModule& sylow_module();  // B tensor_S k
  const GDecomposition& sylow_decomposition();
  const GModule& defect_module();  // B tensor_P k
  const GDecomposition& defect_decomposition();
  const SourceIdempotent& source_idempotent();
  const GModule& source_module();  // Bi tensor_P k
  const GDecomposition& source_decomposition();
  const FinDimAlgebra& source_endomorphisms();
  std::vector<Weight> block_weights();
  const BrauerCorrespondent& correspondent();
  std::size_t simples();

 private:
  PermGroup g_;
  const Field* f_;
  std::vector<BlockData> blocks_;
  std::size_t index_;
  std::uint64_t seed_;
  std::optional<GModule> sylow_, defect_, source_;
  std::optional<GDecomposition> sylow_dec_, defect_dec_, source_dec_;
  std::optional<SourceIdempotent> idem_;
  std::optional<FinDimAlgebra> source_end_;
  std::optional<std::vector<Weight>> weights_;
  std::optional<BrauerCorrespondent> corr_;
  std::optional<std::size_t> simples_;
};

/// Shares block computations between the checks of one run.
class Workspace {
 public:
  explicit Workspace(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t seed() const { return seed_; }
  BlockCase& block_case(const std::string& group, const std::string& field,
                        std::size_t index = 0);

 private:
  std::uint64_t seed_;
  std::map<std::string, std::unique_ptr<BlockCase>> cases_;
};

struct Assertion {
  std::string name;
  bool pass = false;
  json computed;
  json expected;
};

class CheckContext {
 public:
  CheckContext(Workspace& ws, std::vector<Assertion>& out) : ws_(ws), out_(out) {}
  Workspace& ws() { return ws_; }
  std::uint64_t seed() const { return ws_.seed(); }
  void expect_eq(const std::string& name, const json& computed, const json& expected);
  void expect(const std::string& name, bool pass, const json& computed, const json& expected);

 private:
  Workspace& ws_;
  std::vector<Assertion>& out_;
};

struct CheckSpec {
  std::string id;
  std::string anchor;  // what the check reproduces
  std::string group;
  std::string field;
  std::vector<std::string> suites;
  std::function<void(CheckContext&)> run;
};

struct CheckReport {
  std::string id;
  std::string anchor;
  std::string group;
  std::string field;
  std::uint64_t seed = 0;
  bool pass = false;
  std::vector<Assertion> assertions;
  std::optional<std::string> failure;  // "cap: ..." or "error: ..."
  double wall_ms = 0;
  json to_json(bool with_time) const;
};

const std::vector<CheckSpec>& all_checks();
const std::vector<std::string>& suite_names();
/// Checks of a suite in id order; throws ParseError for an unknown suite.
std::vector<const CheckSpec*> suite_checks(const std::string& suite);
const CheckSpec& find_check(const std::string& id);

CheckReport run_check(const CheckSpec& spec, Workspace& ws);
CheckReport run_check(const CheckSpec& spec, std::uint64_t seed);
std::vector<CheckReport> run_suite(const std::string& suite, std::uint64_t seed);
json suite_json(const std::string& suite, std::uint64_t seed,
                const std::vector<CheckReport>& reports, bool with_time);

}  // namespace blockperm::tools
