#pragma once

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/corpus.hpp"
#include "centerbound/error.hpp"
#include "centerbound/group.hpp"
#include "centerbound/perm.hpp"
#include "centerbound/proof_replay.hpp"
#include "centerbound/rank.hpp"
#include "centerbound/report.hpp"
#include "centerbound/small_group.hpp"
#include "centerbound/statements.hpp"
#include "centerbound/structure.hpp"
