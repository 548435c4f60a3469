#pragma once

#include "sphtd/fgab.hpp"

#include <string>
#include <vector>

namespace sphtd {

/* H^0 .. H^top; every degree outside that range is the zero group. */
class GradedGroup {
public:
    GradedGroup() = default;
    explicit GradedGroup(std::vector<AbelianGroup> groups);

    /* Degrees 0..top, all zero. */
    static GradedGroup zero(int top);

    int top() const { return static_cast<int>(groups_.size()) - 1; }
    const AbelianGroup& at(int degree) const;
    void set(int degree, AbelianGroup g);
    const std::vector<AbelianGroup>& groups() const { return groups_; }

    bool has_torsion() const;

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
    std::vector<AbelianGroup> groups_;
};

/* Closed, connected, oriented manifold of dimension 2n, described by its
 * integral cohomology. */
struct BaseManifold {
    std::string name;
    int half_dim = 0;
    GradedGroup cohomology;

    int dim() const { return 2 * half_dim; }
    bool torsion_free() const { return !cohomology.has_torsion(); }

    friend bool operator==(const BaseManifold&, const BaseManifold&) = default;
};

/* Empty iff the model is admissible; otherwise one line per violated condition. */
std::vector<std::string> validate_base(const BaseManifold& m);

struct ParityParts {
    AbelianGroup even;
    AbelianGroup odd;

    friend bool operator==(const ParityParts&, const ParityParts&) = default;
};

ParityParts parity_parts(const GradedGroup& g);

/*
 * Cohomology of (H^*(Z), cup with the flux) for a sphere-bundle total space Z
 * of dimension 4n-1. The flux sits in the top degree, so the only non-trivial
 * component of the twisted differential is  x h : H^0 -> H^{4n-1}.
 */
ParityParts twisted_cohomology(const GradedGroup& total_space, const Integer& h);

}  // namespace sphtd
