#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/homology.hpp"
#include "json.hpp"

namespace artin {

using Json = nlohmann::json;

/// Thrown when a check needs a syzygy or Tor index beyond the computed depth.
class DepthExceeded : public Error {
  public:
    DepthExceeded() : Error("depth exceeded") {}
};

/// An ideal together with everything the checkers derive from it.
struct IdealContext {
    IdealContext(const MonomialAlgebra& R, IdealRep I);

    IdealRep I;
    RingInvariants inv;
    IdealRep mI;
    IdealRep I2;
    bool m2I_zero = false;
};

/// A module with its resolution and memoized lengths of I·M_t.
class ModuleProfile {
  public:
    /// `relation_ideal` is the ideal generated by the presentation entries, if known.
    ModuleProfile(ModuleRep M, int depth, std::optional<IdealRep> relation_ideal = std::nullopt);

    int depth() const { return res_.depth(); }
    const ModuleRep& module() const { return M_; }
    const Resolution& resolution() const { return res_; }
    const std::optional<IdealRep>& relation_ideal() const { return relation_ideal_; }

    /// M_t with M_0 = M.
    const ModuleRep& syzygy(int t) const;
    std::size_t betti(int t) const;
    std::size_t length(int t) const { return syzygy(t).dim(); }
    bool is_free() const { return free_; }
    bool is_zero() const { return M_.dim() == 0; }

    /// λ(J·M_t), memoized by the ideal's key.
    std::size_t length_times(int t, const IdealRep& J);
    /// The zero module counts as I-free here.
    bool I_free(int t, const IdealRep& I);
    Rational gamma(int t, const IdealRep& I);
    /// dim Soc(M_t).
    std::size_t socle_dim(int t);
    /// Soc(M_t) = I·M_t as subspaces.
    bool socle_equals(int t, const IdealRep& I);

    /// Profile of the Matlis dual, built on first use.
    ModuleProfile& dual();

  private:
    ModuleRep M_;
    Resolution res_;
    std::optional<IdealRep> relation_ideal_;
    bool free_ = false;
    std::map<std::pair<int, std::string>, std::size_t> times_;
    std::map<std::pair<int, std::string>, bool> socle_eq_;
    std::map<int, std::size_t> socle_dim_;
    std::unique_ptr<ModuleProfile> dual_;
};

/// Tor(M, N) and the modules M ⊗ N_i, computed from the resolution of N.
class PairProfile {
  public:
    PairProfile(ModuleProfile& M, ModuleProfile& N);

    ModuleProfile& first() { return M_; }
    ModuleProfile& second() { return N_; }
    /// λ(Tor_i(M, N)) for 0 ≤ i < depth of N.
    std::size_t tor_length(int i) const;
    /// M ⊗ N_i for 0 ≤ i < depth of N.
    const ModuleRep& tensor_syzygy(int i);
    std::size_t tensor_length(int i) { return tensor_syzygy(i).dim(); }
    std::size_t tensor_times(int i, const IdealRep& J);
    Rational tensor_gamma(int i, const IdealRep& I);
    /// λ(Tor_1(M, N_{i-1})) from a separate resolution of N_{i-1}.
    std::size_t tor1_of_syzygy(int i);

  private:
    ModuleProfile& M_;
    ModuleProfile& N_;
    TensorComplex complex_;
    std::map<int, ModuleRep> tensors_;
    std::map<std::pair<int, std::string>, std::size_t> times_;
    std::map<int, std::size_t> tor1_;
};

/// Ring-level data shared by every instance over R.
class RingContext {
  public:
    RingContext(RingPtr R, int depth);

    const RingPtr& ring() const { return R_; }
    const MonomialAlgebra& algebra() const { return *R_; }
    int depth() const { return depth_; }
    const IdealRep& maximal() const { return m_; }
    const Subspace& socle() const { return soc_; }
    const Subspace& m2() const { return m2_; }
    int e() const { return static_cast<int>(m_.mingens.size()); }
    int loewy() const { return loewy_; }
    bool gorenstein() const { return soc_.dim() == 1; }

    ModuleProfile& omega();
    PairProfile& omega_pair();
    /// Pair (M, ω) for a module profile owned elsewhere.
    PairProfile& with_omega(ModuleProfile& M);
    /// Pair (M, M†).
    PairProfile& with_dual(ModuleProfile& M);

  private:
    RingPtr R_;
    int depth_;
    IdealRep m_;
    Subspace soc_;
    Subspace m2_;
    int loewy_ = 0;
    std::unique_ptr<ModuleProfile> omega_;
    std::unique_ptr<PairProfile> omega_pair_;
    std::map<const ModuleProfile*, std::unique_ptr<PairProfile>> with_omega_;
    std::map<const ModuleProfile*, std::unique_ptr<PairProfile>> with_dual_;
};

/// The objects a statement is evaluated on. Unused members may be null.
struct Instance {
    RingContext* ring = nullptr;
    IdealContext* ideal = nullptr;
    ModuleProfile* M = nullptr;
    ModuleProfile* N = nullptr;
    PairProfile* pair = nullptr;
};

enum class Mode { check, probe };
enum class Scope { ring, ideal, module, pair };

struct Params {
    int i = 1;
    int j = 1;
    int lo = 3;
    int hi = 8;
};

struct Hypothesis {
    std::string name;
    bool holds = false;
    Json witness;
};

struct Report {
    std::string statement;
    Mode mode = Mode::check;
    Json params = Json::object();
    std::vector<Hypothesis> hypotheses;
    bool applicable = true;
    std::optional<bool> conclusion;
    std::vector<Hypothesis> internal_checks;
    bool internal_ok = true;
    Json data = Json::object();

    /// applicable with a false conclusion, or a failed internal check.
    bool counterexample() const { return (applicable && conclusion == false) || !internal_ok; }
    Json to_json() const;
};

class Evaluation;

struct StatementInfo {
    std::string id;
    Scope scope;
    /// Listed among the open questions: counterexamples are findings, not failures.
    bool flagged = false;
    /// Which members of Params the statement reads.
    std::vector<std::string> param_names;
    std::string summary;
    std::function<void(Evaluation&, Instance&, const Params&)> run;
    /// Parameter values exercised by the suite at a given resolution depth.
    std::function<std::vector<Params>(int depth)> suite_params;
};

const std::vector<StatementInfo>& statements();
/// Throws Error("unknown statement: …").
const StatementInfo& find_statement(const std::string& id);

/// Full report with witnesses and data.
Report evaluate(const StatementInfo& s, Instance& in, const Params& p, Mode mode = Mode::check);

/// Fast verdict without witnesses: 'T' applicable and true, 'F' applicable and
/// false, 'X' internal check failed, '-' not applicable, '?' depth exceeded.
char verdict(const StatementInfo& s, Instance& in, const Params& p);

Json params_json(const StatementInfo& s, const Params& p);

}  // namespace artin
