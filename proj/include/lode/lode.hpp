#pragma once

#include "lode/config.hpp"
#include "lode/context.hpp"
#include "lode/endpoint.hpp"
#include "lode/enhancer.hpp"
#include "lode/error.hpp"
#include "lode/eval.hpp"
#include "lode/levenshtein.hpp"
#include "lode/linking.hpp"
#include "lode/ranking.hpp"
#include "lode/rdf/ntriples.hpp"
#include "lode/rdf/repository.hpp"
#include "lode/rdf/term.hpp"
#include "lode/render.hpp"
#include "lode/search.hpp"
#include "lode/service.hpp"
#include "lode/sparql_client.hpp"
#include "lode/wikistat.hpp"
