#ifndef CROSSCAPS_SERIALIZE_HPP
#define CROSSCAPS_SERIALIZE_HPP

// JSON wire formats for every domain type.  Complex numbers travel as
// [re, im]; matrices as row-major lists.  Requires nlohmann/json on the
// include path (vendored as json.hpp).

#include <json.hpp>

#include "crosscaps/bundles.hpp"
#include "crosscaps/clutching.hpp"
#include "crosscaps/cohomology.hpp"
#include "crosscaps/holonomy.hpp"
#include "crosscaps/realcurves.hpp"
#include "crosscaps/spectral.hpp"
#include "crosscaps/surfaces.hpp"

namespace crosscaps {

using Json = nlohmann::json;

// surfaces:  {"genus": g, "boundary": ["standard", "crosscap", ...]}
void to_json(Json& j, const ShSurface& s);
void from_json(const Json& j, ShSurface& s);

void to_json(Json& j, const ClosedSurfaceInfo& info);
void from_json(const Json& j, ClosedSurfaceInfo& info);

// cohomology: rings and classes as bit arrays / matrices
void to_json(Json& j, const SurfaceCohomology& ring);
void from_json(const Json& j, SurfaceCohomology& ring);

void to_json(Json& j, const H1Presentation& h);
void from_json(const Json& j, H1Presentation& h);

// bundles:  {"rank": n, "maslov": mu, "std_w1": [bits]} / {"rank": n, "twist": b}
void to_json(Json& j, const RealBundlePair& p);
RealBundlePair real_bundle_pair_from_json(const Json& j);

void to_json(Json& j, const KleinTorusPair& k);
void from_json(const Json& j, KleinTorusPair& k);

// holonomy:  {"surface": ..., "std": [{"w1_b":b,"w1_alpha":b,"w2_beta":b}...],
//             "cc": [{"eqw2":b}...]}
void to_json(Json& j, const OperatorLoop& loop);
void from_json(const Json& j, OperatorLoop& loop);

struct TrivializationSignInput {
    TrivializationChange change;
    std::vector<BoundaryClassRef> boundary;
};

void from_json(const Json& j, TrivializationSignInput& in);

// clutching:  {"n": n, "samples": [[[re,im] x n^2] x N]} row-major matrices
void to_json(Json& j, const SampledLoop& loop);
void from_json(const Json& j, SampledLoop& loop);

// realcurves:  {"n":.., "d":.., "A":[..], "roots":[[[re,im],..],..]}
void to_json(Json& j, const RealMapParams& p);
void from_json(const Json& j, RealMapParams& p);

void to_json(Json& j, const PolyTuple& t);
void from_json(const Json& j, PolyTuple& t);

void to_json(Json& j, const DiskProblem& p);
void from_json(const Json& j, DiskProblem& p);

}  // namespace crosscaps

#endif
