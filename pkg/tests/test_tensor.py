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

# pylint: disable=useless-suppression,missing-function-docstring,missing-class-docstring
# pylint: disable=too-many-statements,too-many-public-methods

import unittest

from qschur.smallreps import DomainError
from qschur.smallreps.hecke import Q2_MINUS_1, AffineLetter, AffineWord
from qschur.smallreps.ring import ONE, a_pow, q_pow
from qschur.smallreps.tensor import (
    GenKind,
    GenLabel,
    Mutation,
    TensorElt,
    TensorSpace,
    bar,
    tensor_space,
    u_lambda_j,
    weight_of,
)

T1 = AffineLetter("T", 1, 1)


def w(space: TensorSpace, *idx: int) -> TensorElt:
    return space.basis(idx)


class UnitTests(unittest.TestCase):
    def test_tensor_elt_basics(self):
        v = TensorElt(2, 3, {(1, 2): 2, (2, 1): 0})
        self.assertEqual(v.support(), [(1, 2)])
        self.assertEqual(v.coefficient((1, 2)), ONE + ONE)
        self.assertTrue((v - v).is_zero())
        self.assertEqual(str(TensorElt.basis((1, 2), 3).scale(q_pow(1))), "(q)*w[1,2]")
        self.assertEqual(
            TensorElt.basis((1,), 3).tensor(TensorElt.basis((2,), 3)), TensorElt.basis((1, 2), 3)
        )
        with self.assertRaises(DomainError):
            TensorElt(2, 3, {(1,): 1})
        with self.assertRaises(DomainError):
            _ = TensorElt.basis((1,), 3) + TensorElt.basis((1, 2), 3)

    def test_bar_and_weight(self):
        self.assertEqual(bar(0, 3), 3)
        self.assertEqual(bar(4, 3), 1)
        self.assertEqual(bar(-2, 3), 1)
        self.assertEqual(weight_of((1, 4, 2), 3), (2, 1, 0))

    def test_u_lambda_j(self):
        self.assertEqual(u_lambda_j((2, 1), 1), (2, 1, 2))
        self.assertEqual(u_lambda_j((2, 1), 2), (1, 2, 2))
        self.assertEqual(u_lambda_j((3, 0, 1), 2), (1, 3, 1, 3))
        with self.assertRaises(DomainError):
            u_lambda_j((2, 1), 3)

    def test_space_validation(self):
        with self.assertRaises(DomainError):
            TensorSpace(1, 2)
        space = TensorSpace(3, 2)
        with self.assertRaises(DomainError):
            space.basis((1,))
        with self.assertRaises(DomainError):
            space.act_left(GenLabel(GenKind.E, 4), w(space, 1, 2))
        with self.assertRaises(DomainError):
            space.act_left(GenLabel(GenKind.ZPLUS, 0), w(space, 1, 2))
        with self.assertRaises(DomainError):
            space.act_right(AffineLetter("T", 2, 1), w(space, 1, 2))
        with self.assertRaises(DomainError):
            space.act_left(GenLabel(GenKind.E, 1), TensorElt.basis((1, 2, 3), 3))
        self.assertEqual(len(list(space.finite_basis())), 9)
        self.assertEqual(list(space.window_basis(2, 1)), [])

    def test_e_and_f(self):
        space = TensorSpace(3, 2)
        self.assertEqual(
            space.act_left(GenLabel(GenKind.E, 1), w(space, 2, 2)),
            w(space, 1, 2).scale(q_pow(-1)) + w(space, 2, 1),
        )
        self.assertEqual(
            space.act_left(GenLabel(GenKind.F, 1), w(space, 1, 1)),
            w(space, 2, 1) + w(space, 1, 2).scale(q_pow(-1)),
        )
        # E_n lowers an index congruent to 1 into the previous period
        self.assertEqual(space.act_left(GenLabel(GenKind.E, 3), w(space, 3, 1)), w(space, 3, 0))
        self.assertEqual(
            space.act_left(GenLabel(GenKind.E, 3), w(space, 1, 3)), w(space, 0, 3).scale(q_pow(1))
        )

    def test_k_and_z(self):
        space = TensorSpace(3, 2)
        self.assertEqual(
            space.act_left(GenLabel(GenKind.KPLUS, 1), w(space, 1, 4)),
            w(space, 1, 4).scale(q_pow(2)),
        )
        self.assertEqual(
            space.act_left(GenLabel(GenKind.KMINUS, 2), w(space, 2, 1)),
            w(space, 2, 1).scale(q_pow(-1)),
        )
        self.assertEqual(
            space.act_left(GenLabel(GenKind.ZPLUS, 1), w(space, 1, 2)),
            w(space, -2, 2) + w(space, 1, -1),
        )
        self.assertEqual(
            space.act_left(GenLabel(GenKind.ZMINUS, 2), w(space, 1, 2)),
            w(space, 7, 2) + w(space, 1, 8),
        )

    def test_split_coproduct_agrees(self):
        space = TensorSpace(3, 3)
        labels = [GenLabel(kind, 1) for kind in GenKind] + [
            GenLabel(GenKind.E, 3),
            GenLabel(GenKind.F, 2),
            GenLabel(GenKind.ZPLUS, 2),
        ]
        for idx in space.window_basis(0, 3):
            v = space.basis(idx)
            for g in labels:
                self.assertEqual(space.act_left(g, v), space.act_left_split(g, v), (g, idx))

    def test_finite_t(self):
        space = TensorSpace(3, 2)
        self.assertEqual(space.act_right(T1, w(space, 1, 2)), w(space, 2, 1).scale(q_pow(1)))
        self.assertEqual(
            space.act_right(T1, w(space, 2, 1)),
            w(space, 1, 2).scale(q_pow(1)) + w(space, 2, 1).scale(Q2_MINUS_1),
        )
        self.assertEqual(space.act_right(T1, w(space, 3, 3)), w(space, 3, 3).scale(q_pow(2)))

    def test_affine_t(self):
        space = TensorSpace(2, 2)
        self.assertEqual(space.act_right(T1, w(space, 0, 1)), w(space, 1, 0).scale(q_pow(1)))
        self.assertEqual(
            space.act_right(T1, w(space, 3, 1)),
            w(space, 1, 3).scale(q_pow(2)) + w(space, 3, 1).scale(Q2_MINUS_1),
        )
        self.assertEqual(space.act_right(T1, w(space, 1, 3)), w(space, 3, 1))

    def test_t_quadratic_relation_on_window(self):
        space = TensorSpace(2, 2)
        for idx in space.window_basis(-1, 4):
            v = space.basis(idx)
            vt = space.act_right(T1, v)
            lhs = space.act_right(T1, vt)
            self.assertEqual(lhs, vt.scale(Q2_MINUS_1) + v.scale(q_pow(2)), idx)

    def test_x_action(self):
        space = TensorSpace(3, 2)
        self.assertEqual(space.act_right(AffineLetter("X", 2, 1), w(space, 1, 2)), w(space, 1, -1))
        self.assertEqual(space.act_right(AffineLetter("X", 1, -1), w(space, 1, 2)), w(space, 4, 2))
        word = AffineWord([AffineLetter("X", 1, 1), T1], q_pow(1))
        self.assertEqual(
            space.apply_word(w(space, 4, 2), word),
            space.act_right(T1, w(space, 1, 2)).scale(q_pow(1)),
        )

    def test_left_and_right_commute_on_finite_basis(self):
        space = TensorSpace(2, 2)
        for idx in space.finite_basis():
            v = space.basis(idx)
            for kind in (GenKind.E, GenKind.F):
                g = GenLabel(kind, 1)
                self.assertEqual(
                    space.act_left(g, space.act_right(T1, v)),
                    space.act_right(T1, space.act_left(g, v)),
                    (kind, idx),
                )

    def test_eps_a(self):
        space = TensorSpace(2, 1)
        self.assertEqual(space.eps_a(w(space, 0)), w(space, 2).scale(a_pow(1)))
        self.assertEqual(space.eps_a(w(space, 1)), w(space, 1))
        pair = TensorSpace(2, 2)
        self.assertEqual(pair.eps_a(w(pair, 3, 1)), w(pair, 1, 1).scale(a_pow(-1)))
        self.assertEqual(pair.eps_a(w(pair, 1, 3)), w(pair, 1, 1).scale(a_pow(-1).shift(0, -2)))
        # eps_a is a map of Hecke modules
        self.assertEqual(
            pair.eps_a(pair.act_right(T1, w(pair, 3, 1))),
            pair.act_right(T1, pair.eps_a(w(pair, 3, 1))),
        )

    def test_evaluation_images(self):
        space = TensorSpace(2, 1)
        self.assertEqual(space.apply_ev_en(w(space, 1)), w(space, 2).scale(a_pow(1)))
        with self.assertRaises(DomainError):
            space.apply_ev_en(w(space, 0))
        with self.assertRaises(DomainError):
            space.apply_fk(3, w(space, 1))
        with self.assertRaises(DomainError):
            space.apply_en(1, w(space, 1))

    def test_mutations_change_results(self):
        t_sign = TensorSpace(3, 2, [Mutation.T_MIDDLE_SIGN])
        self.assertEqual(t_sign.act_right(T1, w(t_sign, 2, 2)), w(t_sign, 2, 2).scale(q_pow(-2)))
        e_side = TensorSpace(3, 2, [Mutation.E_COPRODUCT_SIDE])
        self.assertEqual(
            e_side.act_left(GenLabel(GenKind.E, 1), w(e_side, 2, 2)),
            w(e_side, 1, 2) + w(e_side, 2, 1).scale(q_pow(-1)),
        )
        naive = TensorSpace(2, 2, [Mutation.NAIVE_AFFINE_T])
        self.assertNotEqual(
            naive.act_right(T1, w(naive, 3, 1)),
            TensorSpace(2, 2).act_right(T1, TensorSpace(2, 2).basis((3, 1))),
        )

    def test_restrict_to_finite_part(self):
        space = TensorSpace(2, 2)
        v = w(space, 1, 2) + w(space, 0, 1).scale(q_pow(1)) + w(space, 2, 3)
        self.assertEqual(space.restrict(v), w(space, 1, 2))
        self.assertFalse(space.is_finite(v))
        self.assertTrue(space.is_finite(space.restrict(v)))
        self.assertTrue(space.is_finite(space.zero()))
        with self.assertRaises(DomainError):
            space.restrict(TensorElt.basis((1, 2), 3))
        # the evaluation images reject vectors with any support outside [1, n]^r
        with self.assertRaises(DomainError):
            space.apply_ev_fn(v)
        self.assertEqual(
            space.apply_ev_en(space.restrict(v)), space.apply_ev_en(w(space, 1, 2))
        )

    def test_tensor_space_is_shared(self):
        self.assertIs(tensor_space(3, 2), tensor_space(3, 2))
        mutated = tensor_space(3, 2, frozenset({Mutation.T_MIDDLE_SIGN}))
        self.assertIsNot(tensor_space(3, 2), mutated)
