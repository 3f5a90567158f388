// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hopfcat/dual.hpp"
#include "hopfcat/duoidal.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/format.hpp"
#include "hopfcat/fundamental.hpp"
#include "hopfcat/graded.hpp"
#include "hopfcat/groupoid.hpp"
#include "hopfcat/hopf_category.hpp"
#include "hopfcat/linalg.hpp"
#include "hopfcat/linmap.hpp"
#include "hopfcat/modules.hpp"
#include "hopfcat/report.hpp"
#include "hopfcat/scalar.hpp"
#include "hopfcat/transform.hpp"
#include "hopfcat/verify.hpp"
#include "hopfcat/weak_hopf.hpp"
