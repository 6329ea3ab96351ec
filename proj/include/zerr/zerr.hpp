#pragma once

// Everything except zerr/io.hpp, which needs nlohmann/json.

#include "zerr/bigint.hpp"
#include "zerr/channel_graph.hpp"
#include "zerr/channel_series.hpp"
#include "zerr/dfa.hpp"
#include "zerr/error.hpp"
#include "zerr/generator_series.hpp"
#include "zerr/generator_set.hpp"
#include "zerr/independence.hpp"
#include "zerr/intermingled.hpp"
#include "zerr/polynomial.hpp"
#include "zerr/rational_fraction.hpp"
#include "zerr/recurrence.hpp"
#include "zerr/regex.hpp"
#include "zerr/roots.hpp"
#include "zerr/spectral.hpp"
#include "zerr/vertex_set.hpp"
#include "zerr/word_text.hpp"
