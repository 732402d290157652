#pragma once

// Umbrella header.

#include "hos/error.hpp"
#include "hos/rational.hpp"
#include "hos/fields/tower.hpp"
#include "hos/fields/sign.hpp"
#include "hos/fields/square.hpp"
#include "hos/fields/merge.hpp"
#include "hos/fields/parse.hpp"
#include "hos/fields/io.hpp"
#include "hos/star/quaternion.hpp"
#include "hos/star/four_square.hpp"
#include "hos/star/no_sqrt.hpp"
#include "hos/star/traits.hpp"
#include "hos/star/star_scalar.hpp"
#include "hos/spaces/vector.hpp"
#include "hos/spaces/subspace.hpp"
#include "hos/orthosets/projective.hpp"
#include "hos/orthosets/finite.hpp"
#include "hos/symmetries/orthogonal_map.hpp"
#include "hos/symmetries/transport.hpp"
#include "hos/embeddings/field_hom.hpp"
#include "hos/embeddings/hilbert.hpp"
#include "hos/report.hpp"
#include "hos/random.hpp"
