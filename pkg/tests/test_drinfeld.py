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

from qschur.smallreps import ConsistencyError, DomainError, UnsupportedInputError
from qschur.smallreps.combinatorics import Partition, partitions
from qschur.smallreps.drinfeld import (
    DrinfeldTuple,
    Multisegment,
    P_from_lambda,
    P_from_Q,
    Q_from_lambda,
    Q_from_segments_cor,
    Segment,
    central_scalar,
    is_dominant,
    multisegment_partition,
    partial_inverse,
    partial_map,
    product_identity,
    residue_power_sum,
    s_lambda_a,
    segment_expand,
)
from qschur.smallreps.ring import ONE, LaurentQA, Monomial, UPoly, a_pow, poly_from_inverse_roots


def aq(e_q: int) -> Monomial:
    return Monomial(1, 1, e_q)


class UnitTests(unittest.TestCase):
    def test_segment(self):
        seg = Segment(aq(0), 3)
        self.assertEqual(segment_expand(seg), [aq(-2), aq(0), aq(2)])
        with self.assertRaises(DomainError):
            Segment(aq(0), 0)
        with self.assertRaises(DomainError):
            Segment(LaurentQA.monomial(1, 1, 0), 1)

    def test_multisegment_order(self):
        short, long_ = Segment(aq(2), 1), Segment(aq(-1), 2)
        ms = Multisegment([short, long_])
        self.assertEqual(ms.segments, (long_, short))
        self.assertEqual(ms, Multisegment([long_, short]))
        self.assertEqual(ms.total, 3)
        self.assertEqual(multisegment_partition(ms), Partition((2, 1)))
        self.assertEqual(Multisegment().total, 0)

    def test_tuple_for_two_one(self):
        lam = Partition((2, 1))
        Q = Q_from_lambda(lam, 3)
        self.assertEqual(Q.factored, ((aq(0), aq(2)), (aq(-2),), ()))
        self.assertEqual(Q.polys[1], poly_from_inverse_roots([aq(-2)]))
        self.assertEqual(Q.polys[2], UPoly([ONE]))
        self.assertEqual(Q.degrees, (2, 1, 0))
        self.assertEqual(Q, Q_from_segments_cor(lam, 3))

    def test_segment_tuple_inverts_segment_zeros(self):
        cor = Q_from_segments_cor(Partition((2, 1)), 3)
        self.assertEqual(cor.factored, ((aq(0), aq(2)), (aq(-2),), ()))
        zero = segment_expand(Segment(Monomial(1, -1, 2), 1))[0]
        self.assertEqual(cor.factored[1], (zero.inverse(),))
        self.assertEqual(Q_from_segments_cor(Partition((1,)), 2).polys[0], UPoly([ONE, -a_pow(1)]))
        for r in range(1, 6):
            for lam in partitions(r):
                cor = Q_from_segments_cor(lam, 5)
                self.assertEqual(cor.degrees, lam.padded(5), lam)
                self.assertEqual(cor.factored, Q_from_lambda(lam, 5).factored, lam)

    def test_p_for_two_one(self):
        lam = Partition((2, 1))
        expected = [poly_from_inverse_roots([aq(2)]), poly_from_inverse_roots([aq(-1)])]
        self.assertEqual(P_from_lambda(lam, 3), expected)
        self.assertEqual(P_from_Q(Q_from_lambda(lam, 3)), expected)

    def test_recursion_matches_segments(self):
        for r in range(1, 6):
            for lam in partitions(r):
                Q = Q_from_lambda(lam, 5)
                self.assertTrue(is_dominant(Q), lam)
                self.assertEqual(P_from_Q(Q), P_from_lambda(lam, 5), lam)

    def test_too_many_parts(self):
        with self.assertRaises(DomainError):
            Q_from_lambda(Partition((1, 1, 1, 1)), 3)
        with self.assertRaises(DomainError):
            P_from_lambda(Partition((1, 1, 1, 1)), 3)

    def test_s_lambda_a(self):
        self.assertEqual(
            s_lambda_a(Partition((2, 1))), Multisegment([Segment(aq(-1), 2), Segment(aq(2), 1)])
        )
        self.assertEqual(s_lambda_a(Partition(())), Multisegment())
        for lam in partitions(4):
            self.assertEqual(partial_map(s_lambda_a(lam), 5), Q_from_lambda(lam, 5), lam)
            self.assertEqual(partial_inverse(Q_from_lambda(lam, 5)), s_lambda_a(lam), lam)

    def test_central_scalar(self):
        lam = Partition((2, 1))
        self.assertEqual(
            central_scalar(lam, 1, 1),
            a_pow(1) + LaurentQA.monomial(1, 1, 2) + LaurentQA.monomial(1, 1, -2),
        )
        self.assertEqual(central_scalar(lam, 2, -1), residue_power_sum(lam, 2, -1))
        self.assertEqual(central_scalar(Partition(()), 1, 1), LaurentQA())
        with self.assertRaises(DomainError):
            central_scalar(lam, 1, 0)

    def test_product_identity(self):
        for lam in partitions(4):
            lhs, rhs = product_identity(lam, 4)
            self.assertEqual(lhs, rhs, lam)

    def test_non_dominant_tuple(self):
        Q = DrinfeldTuple([UPoly([ONE]), poly_from_inverse_roots([aq(0)])])
        self.assertFalse(is_dominant(Q))
        with self.assertRaises(DomainError):
            P_from_Q(Q)
        with self.assertRaises(UnsupportedInputError):
            partial_inverse(Q)
        with self.assertRaises(DomainError):
            partial_inverse(DrinfeldTuple.from_roots([[], [aq(0)]]))
        with self.assertRaises(DomainError):
            partial_inverse(DrinfeldTuple.from_roots([[], [aq(0)], []]))

    def test_tuple_validation(self):
        with self.assertRaises(DomainError):
            DrinfeldTuple([])
        with self.assertRaises(DomainError):
            DrinfeldTuple([UPoly([a_pow(1)])])
        with self.assertRaises(ConsistencyError):
            DrinfeldTuple([poly_from_inverse_roots([aq(0)])], [[aq(2)]])

    def test_partial_map_round_trip(self):
        c = Monomial(2, 0, 1)
        samples = [
            Multisegment(),
            Multisegment([Segment(c, 2), Segment(c, 1)]),
            Multisegment([Segment(aq(0), 1), Segment(aq(0), 1), Segment(aq(4), 3)]),
            Multisegment([Segment(Monomial(-1, 2, -3), 2), Segment(aq(1), 2)]),
        ]
        for ms in samples:
            Q = partial_map(ms, ms.total + 1)
            self.assertEqual(Q.polys[-1], UPoly([ONE]))
            self.assertEqual(partial_inverse(Q), ms, ms)

    def test_partial_map_needs_room(self):
        with self.assertRaises(DomainError):
            partial_map(s_lambda_a(Partition((2, 1))), 3)
