#pragma once

// End-to-end computation for one module D^r / N: Rees presentation,
// resolution, verification, K-polynomial, codimension and multidegree.

#include "dmdeg/dimension.hpp"
#include "dmdeg/kpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dmdeg {

/// Raised when a produced object fails one of its structural checks.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalysisOptions {
  std::optional<TermOrder> tiebreak;
  bool allow_negative_shifts = false;
  /// Build the full bifiltered resolution (otherwise K is read off the
  /// leading monomials of the Rees basis).
  bool build_resolution = false;
  bool check_exactness = false;
  bool certify_basis = true;
};

struct Analysis {
  BifilteredPresentation presentation;
  std::optional<BifilteredResolution> resolution;
  ComplexReport verification;
  LaurentPoly2 kpoly;
  CodimResult codim;
  std::optional<Multidegree> multidegree;  // absent for the zero module

  bool ok() const { return verification.ok; }
};

inline Analysis analyze(const GeneratorList& gens, const std::vector<Bidegree>& shifts, const VarSpec& vs,
                        const AnalysisOptions& opt = {}) {
  Analysis a;
  auto fail = [&](std::string s) {
    a.verification.ok = false;
    a.verification.failures.push_back(std::move(s));
  };
  PresentationOptions po;
  po.tiebreak = opt.tiebreak;
  po.allow_negative_shifts = opt.allow_negative_shifts;
  a.presentation = rees_presentation(gens, shifts, vs, po);
  if (opt.certify_basis && !certify(a.presentation.gb, Ring::rees(vs))) fail("Rees basis fails the S-pair check");
  a.kpoly = k_polynomial(a.presentation);
  if (opt.build_resolution) {
    a.resolution = bifiltered_resolution(a.presentation);
    ComplexReport rep = verify_complex(*a.resolution, opt.check_exactness);
    for (auto& f : rep.failures) fail(std::move(f));
    if (k_polynomial(*a.resolution) != a.kpoly) fail("resolution K-polynomial differs from the initial-module count");
  }
  a.codim = codim(gens, vs, a.presentation.rank, opt.tiebreak);
  if (a.codim.codim) {
    if (*a.codim.codim > vs.size())
      fail("codimension " + std::to_string(*a.codim.codim) + " exceeds the number of variables for a nonzero module");
    a.multidegree = multidegree(a.kpoly, *a.codim.codim);
  }
  return a;
}

}  // namespace dmdeg
