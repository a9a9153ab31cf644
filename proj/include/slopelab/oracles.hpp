#pragma once

// Sound triviality / nontriviality certification in finitely presented groups.
//
// certify() runs, in order: bounded relator rewriting (Trivial), the homology
// obstruction (Nontrivial), Todd-Coxeter within budget (exact decision when it
// completes) and finite-quotient search (Nontrivial). Anything else is
// Unknown. Every Trivial or Nontrivial verdict carries a certificate that
// replay() re-checks without reusing the code path that produced it.

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slopelab/coset_enum.hpp"
#include "slopelab/fillings.hpp"
#include "slopelab/presentations.hpp"
#include "slopelab/quotients.hpp"
#include "slopelab/rewriting.hpp"

namespace slopelab {

enum class VerdictKind { Trivial, Nontrivial, Unknown };
std::string to_string(VerdictKind k);

struct Budget {
    std::size_t max_cosets = 200000;
    int sym_max = 6;
    std::vector<int> psl2_primes{5, 7, 11, 13};
    std::size_t max_rewrite_steps = 8;
    /// Per target group; 0 means unlimited.
    std::uint64_t max_hom_assignments = 50'000'000;
    std::optional<double> timeout_seconds;
    /// Use the OpenMP homomorphism enumerator.
    bool parallel = true;

    std::vector<std::string> targets() const { return target_ladder(sym_max, psl2_primes); }
};

struct Certificate {
    enum class Type { None, NormalClosure, CosetTable, FiniteQuotient, Homology };

    Type type = Type::None;
    NormalClosureWitness witness;          // NormalClosure
    std::size_t cosets = 0;                // CosetTable: group order
    std::size_t max_cosets = 0;            // CosetTable: enumeration bound used
    std::optional<FiniteQuotient> quotient; // FiniteQuotient
    HomologyClass homology;                // Homology
    AbelianGroup group;                    // Homology
};

struct BudgetSpent {
    std::uint64_t cosets_defined = 0;
    std::size_t max_cosets_alive = 0;
    bool coset_enumeration_completed = false;
    std::uint64_t hom_assignments = 0;
    std::size_t rewrite_steps = 0;
    double wall_ms = 0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    Certificate certificate;
    BudgetSpent spent;
    /// Pipeline stage that settled the verdict ("rewriting", "homology",
    /// "coset_table", "finite_quotient" or "none").
    std::string stage = "none";
};

/// Every stage run independently, for cross-checking.
struct StageReport {
    std::optional<NormalClosureWitness> rewriting; // Trivial evidence
    std::optional<HomologyClass> homology;        // Nontrivial evidence (nonzero class)
    std::optional<bool> coset_trivial;            // exact when enumeration completed
    std::optional<FiniteQuotient> quotient;       // Nontrivial evidence

    /// True when some stage proves trivial while another proves nontrivial.
    bool contradictory() const;
};

/// Certification context for one presentation. Word-independent work (the
/// abelianization, the coset enumeration and the homomorphism catalogue) is
/// computed on first use and reused across words.
class FillingOracle {
public:
    FillingOracle(Presentation p, Budget budget);

    const Presentation& presentation() const { return p_; }
    const Budget& budget() const { return budget_; }

    Verdict certify(const Word& w);
    StageReport run_all_stages(const Word& w);

    const Abelianizer& abelianizer();
    const CosetEnumeration& coset_enumeration();

    /// Plain rewriting first; on failure, retries with words this oracle has
    /// already certified trivial as extra relators.
    std::optional<NormalClosureWitness> rewriting_stage(const Word& w) const;
    std::size_t lemma_count() const { return lemmas_.size(); }
    std::optional<HomologyClass> homology_stage(const Word& w);
    std::optional<bool> coset_stage(const Word& w);
    std::optional<FiniteQuotient> quotient_stage(const Word& w);

private:
    struct Catalogue {
        std::string target;
        std::vector<ImageTuple> homs;
        HomSearchStats stats;
    };
    const std::vector<Catalogue>& catalogue();

    Presentation p_;
    Budget budget_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::unique_ptr<Abelianizer> abelianizer_;
    std::optional<CosetEnumeration> cosets_;
    std::optional<std::vector<Catalogue>> catalogue_;
    std::vector<DerivedRelator> lemmas_;
};

/// Homology obstruction: a certificate iff the class of w is nonzero.
std::optional<Certificate> abelian_test(const Presentation& p, const Word& w);

Verdict certify(const Presentation& p, const Word& w, const Budget& budget);

/// Per-slope verdicts for w in fill(p, r), sorted by slope. Slopes may be
/// evaluated in parallel (jobs <= 0 means the OpenMP default); the result does
/// not depend on the schedule.
std::vector<std::pair<Slope, Verdict>> sk_scan(const Presentation& p, const Word& w,
                                               const std::vector<Slope>& slopes, const Budget& budget,
                                               int jobs = 0);

/// Re-verifies a verdict's certificate against (p, w) without trusting the
/// producer: witness products are recomputed in the free group, quotient
/// images are multiplied as permutations or matrices, coset tables are
/// re-enumerated and homology is recomputed. Unknown verdicts replay as false.
bool replay(const Presentation& p, const Word& w, const Verdict& v);

/// Certificate for w transformed into one for c^-1 w c (or for w^-1).
Verdict transform_for_conjugate(const Verdict& v, const Word& c);
Verdict transform_for_inverse(const Presentation& p, const Verdict& v);

/// {"kind":..., "target":..., ...}; see README for the schema.
nlohmann::ordered_json certificate_json(const Presentation& p, const Verdict& v);
nlohmann::ordered_json budget_json(const BudgetSpent& spent);
/// Replays a serialized certificate.
bool replay_json(const Presentation& p, const Word& w, const nlohmann::json& cert);

} // namespace slopelab
