#pragma once

#include "ppv/ore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppv {

/// Subgroup of the additive group: everything, or the kernel of an operator.
/// Kernel(1) is the trivial group.
class GaSubgroup {
public:
    static GaSubgroup full() { return GaSubgroup(); }
    /// Stored monic; kernel(c * L) == kernel(L).
    static GaSubgroup kernel(const OreOperator& l);

    bool is_full() const { return !op_.has_value(); }
    bool is_trivial() const { return op_ && op_->order() == 0; }
    const OreOperator& op() const { return *op_; }

    std::string render() const;
    friend bool operator==(const GaSubgroup& a, const GaSubgroup& b) { return a.op_ == b.op_; }

private:
    std::optional<OreOperator> op_;
};

/// Subgroup of the multiplicative group: everything, the n-th roots of
/// unity, or {a : L(Da/a) = 0}. LogKernel(1) is the group of constants.
class GmSubgroup {
public:
    enum class Kind { Full, FiniteCyclic, LogKernel };

    static GmSubgroup full() { return GmSubgroup(); }
    static GmSubgroup finite_cyclic(long n);
    static GmSubgroup log_kernel(const OreOperator& l);

    Kind kind() const { return kind_; }
    long n() const { return n_; }
    const OreOperator& op() const { return *op_; }

    /// Set when the true group may be smaller than described.
    bool upper_bound_only = false;

    std::string render() const;
    friend bool operator==(const GmSubgroup& a, const GmSubgroup& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.op_ == b.op_;
    }

private:
    Kind kind_ = Kind::Full;
    long n_ = 0;
    std::optional<OreOperator> op_;
};

/// True when h is a subgroup of g. Kernels compare by right division:
/// ker L1 is inside ker L2 iff L1 right-divides L2.
bool ga_contains(const GaSubgroup& g, const GaSubgroup& h);
bool gm_contains(const GmSubgroup& g, const GmSubgroup& h);

GaSubgroup ga_intersect(const GaSubgroup& a, const GaSubgroup& b);
GmSubgroup gm_intersect(const GmSubgroup& a, const GmSubgroup& b);

/// Zariski closure, as an algebraic group over the constants.
struct ClosureTag {
    enum class Kind { TrivialGroup, FiniteCyclic, FullGa, FullGm };
    Kind kind;
    long n = 0;

    std::string render() const;
    friend bool operator==(const ClosureTag&, const ClosureTag&) = default;
};

ClosureTag zariski_closure(const GaSubgroup& g);
ClosureTag zariski_closure(const GmSubgroup& g);
/// Inclusion of closures: Trivial < FiniteCyclic(n) (ordered by divisibility) < Full.
bool closure_contains(const ClosureTag& big, const ClosureTag& small);

/// Da/a for the designated derivation. Throws std::domain_error on zero.
Rat log_derivative(const Rat& f, std::size_t derivation);

struct SubgroupTableRow {
    GmSubgroup group;
    std::string fixed_field;
};

/// Subgroups of the multiplicative group for the field generated by x^t and
/// log x over k, and their fixed fields. `n` picks the member of the
/// finite cyclic family in the first row.
std::vector<SubgroupTableRow> gm_del_subgroup_table(const RingPtr& ring, std::size_t derivation, long n = 1);

} // namespace ppv
