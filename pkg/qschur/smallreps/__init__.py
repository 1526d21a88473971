# This file is part of qschur-smallreps.
#
# Copyright 2026 The qschur-smallreps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# SPDX-License-Identifier: Apache-2.0

# Version of the module
__version__ = "0.1.0"

# Export what we care about
from .combinatorics import (
    Partition,
    Permutation,
    StdTableau,
    dominance_le,
    dual_partition,
    enumerate_compositions,
    partitions,
    residue,
    std_tableaux,
    superstandard_tableau,
)
from .database import ReportArchive, ReportArchiveSQLite
from .drinfeld import (
    DrinfeldTuple,
    Multisegment,
    P_from_lambda,
    P_from_Q,
    Q_from_lambda,
    Q_from_segments_cor,
    Segment,
    central_scalar,
    is_dominant,
    partial_inverse,
    partial_map,
    s_lambda_a,
)
from .exceptions import (
    ConsistencyError,
    DomainError,
    ParseError,
    QSchurError,
    UnsupportedInputError,
)
from .hecke import (
    AffineLetter,
    AffineWord,
    HeckeElt,
    MurphyBasis,
    ev_a,
    in_ideal_above,
    murphy_basis_elt,
    murphy_L,
    residue_congruence,
    star,
    x_lambda,
    y_lambda,
)
from .ring import LaurentQA, Monomial, UPoly, a_pow, poly_from_inverse_roots, q_pow, qbinom, qint
from .tensor import GenKind, GenLabel, Mutation, TensorElt, TensorSpace, tensor_space
from .verify import (
    Report,
    Status,
    SuiteConfig,
    verify_affine_hecke,
    verify_all,
    verify_commuting,
    verify_drinfeld,
    verify_eval_compat,
    verify_jm,
    verify_lemmas,
    verify_qgl,
    verify_ring,
)
