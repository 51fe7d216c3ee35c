#pragma once

#include "charvan/builtin.hpp"
#include "charvan/chartable.hpp"
#include "charvan/classfun.hpp"
#include "charvan/group.hpp"
#include "charvan/subgroups.hpp"
#include "charvan/vanishing.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace charvan {

class Context;

// Lazily computed per-group data (classes, table, vanishing profile, class
// closures), shared between theorem cases. Thread safe; results are
// schedule-independent.
class GroupBundle {
public:
  GroupBundle(PermGroup g, std::string name, Limits lim, int jobs, std::string cache_dir);

  const PermGroup& group() const { return group_; }
  const std::string& name() const { return name_; }

  std::shared_ptr<const ClassData> class_data();
  std::shared_ptr<const CharacterTable> table();
  const VanishingProfile& vanishing();
  std::shared_ptr<const ClassClosures> closures();

private:
  PermGroup group_;
  std::string name_;
  Limits lim_;
  int jobs_;
  std::string cache_dir_;

  std::mutex mu_;
  std::shared_ptr<const ClassData> cd_;
  std::shared_ptr<const CharacterTable> table_ptr_;
  std::optional<VanishingProfile> vp_;
  std::shared_ptr<const ClassClosures> closures_;
};

// Shared cache of group bundles keyed by the group fingerprint.
class Context {
public:
  Limits limits;
  int jobs = 1;
  std::string cache_dir; // empty: no disk cache

  std::shared_ptr<GroupBundle> bundle(const PermGroup& g, const std::string& name_hint);

private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<GroupBundle>> bundles_;
};

enum class Hyp { Holds, Vacuous, Fails, Unknown };
enum class Concl { Holds, Fails, Skipped };

const char* hyp_name(Hyp h);
const char* concl_name(Concl c);

struct VerificationReport {
  std::string theorem;
  std::string group_name;
  std::string normal_name; // empty when N = G
  std::string parameter;   // "p=2", "pi={2,3}", or empty
  Hyp hypothesis = Hyp::Unknown;
  Concl conclusion = Concl::Skipped;
  std::vector<std::string> witnesses;
  double millis = 0.0;
  bool open_question = false; // findings reported, not asserted false

  bool counterexample() const {
    return !open_question &&
           (hypothesis == Hyp::Holds || hypothesis == Hyp::Vacuous) &&
           conclusion == Concl::Fails;
  }
  bool finding() const { return open_question && conclusion == Concl::Fails; }
};

// Theorem predicates. N must be normal in G (input error otherwise).
VerificationReport thm_A(Context& ctx, const PermGroup& g, const std::string& gname,
                         const PermGroup& n, const std::string& nname, u64 p);
// Pairwise equivalence (i)-(iii); when N = G also the degree criterion.
// H defaults to a Sylow p-subgroup of G; beta ranges over all of Irr(H/P0).
VerificationReport thm_B(Context& ctx, const PermGroup& g, const std::string& gname,
                         const PermGroup& n, const std::string& nname, u64 p,
                         const PermGroup* h = nullptr);
VerificationReport thm_C1(Context& ctx, const PermGroup& g, const std::string& gname,
                          const PermGroup& n, const std::string& nname, const PiSet& pi);
VerificationReport thm_C2(Context& ctx, const PermGroup& g, const std::string& gname,
                          const PermGroup& n, const std::string& nname, const PiSet& pi);
VerificationReport thm_pipi(Context& ctx, const PermGroup& g, const std::string& gname,
                            const PermGroup& n, const std::string& nname, const PiSet& pi);
VerificationReport thm_E(Context& ctx, const PermGroup& g, const std::string& gname,
                         const PermGroup& n, const std::string& nname, const PiSet& pi);
VerificationReport thm_D(Context& ctx, const PermGroup& g, const std::string& gname);
VerificationReport lemma_suite(Context& ctx, const PermGroup& g, const std::string& gname,
                               const PermGroup& n, const std::string& nname,
                               const PiSet& pi);
VerificationReport inw_scan(Context& ctx, const PermGroup& g, const std::string& gname);

// N = G specializations.
VerificationReport thm_van_pi_prime(Context& ctx, const PermGroup& g,
                                    const std::string& gname, const PiSet& pi);
VerificationReport thm_van_pi(Context& ctx, const PermGroup& g, const std::string& gname,
                              const PiSet& pi);
VerificationReport thm_core(Context& ctx, const PermGroup& g, const std::string& gname,
                            const PiSet& pi);

extern const std::vector<std::string> theorem_ids;
bool known_theorem_id(const std::string& id);

struct CorpusCase {
  std::string theorem;
  std::string group;  // builtin name
  std::string normal; // named normal subgroup; empty = G itself
  std::string param;  // "2" for p, "2,3" for pi, empty for D / INW_SCAN
};

std::vector<CorpusCase> default_corpus();

// Runs one case against a group and its optional named normal subgroup.
VerificationReport run_case(Context& ctx, const CorpusCase& c);
VerificationReport run_theorem(Context& ctx, const std::string& theorem,
                               const PermGroup& g, const std::string& gname,
                               const PermGroup* n, const std::string& nname,
                               const std::string& param);

struct CorpusReport {
  std::vector<VerificationReport> reports;
  int counterexamples = 0;
  int inw_findings = 0;
  int non_vacuous = 0;
  int vacuous = 0;
  int skipped = 0;
  std::vector<std::string> missing_nonvacuous;

  bool ok() const {
    return counterexamples == 0 && inw_findings == 0 && missing_nonvacuous.empty();
  }
};

// Selection filters by theorem id; an empty selection yields an empty
// report. Cases run in a worker pool; report order is the case order
// regardless of schedule.
CorpusReport run_corpus(Context& ctx, const std::vector<std::string>& selection,
                        int jobs);

std::string report_line(const VerificationReport& r);
std::string corpus_report_text(const CorpusReport& r);
std::string corpus_report_json(const CorpusReport& r);

} // namespace charvan
