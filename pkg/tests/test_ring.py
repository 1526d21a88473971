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
# pylint: disable=too-many-statements,too-many-instance-attributes,too-many-public-methods

import random
import unittest
from fractions import Fraction

import sympy

from qschur.smallreps import DomainError, UnsupportedInputError
from qschur.smallreps.ring import (
    ONE,
    ZERO,
    LaurentQA,
    Monomial,
    UPoly,
    a_pow,
    laurent_arith,
    poly_from_inverse_roots,
    q_pow,
    qbinom,
    qint,
    upoly_arith,
)

A, Q = sympy.symbols("a q")


def to_sympy(x: LaurentQA):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c)
        * A**e_a
        * Q**e_q
        for e_a, e_q, c in x.terms()
    )


def random_laurent(rng: random.Random) -> LaurentQA:
    return LaurentQA(
        {
            (rng.randint(-2, 2), rng.randint(-3, 3)): Fraction(
                rng.randint(-4, 4), rng.randint(1, 3)
            )
            for _ in range(rng.randint(0, 4))
        }
    )


class UnitTests(unittest.TestCase):
    def test_zero_coefficients_are_dropped(self):
        x = LaurentQA({(0, 1): 0, (1, 0): 2})
        self.assertEqual(x, LaurentQA.monomial(2, 1, 0))
        self.assertEqual(len(x), 1)
        self.assertTrue(LaurentQA({(3, 3): 0}).is_zero())

    def test_fractions_are_canonical(self):
        x = LaurentQA.constant(Fraction(4, 2))
        self.assertEqual(x.coefficient(0, 0), 2)
        self.assertIsInstance(x.coefficient(0, 0), int)
        self.assertEqual(LaurentQA.constant(Fraction(1, 2)) * 2, ONE)

    def test_float_coefficients_rejected(self):
        with self.assertRaises(DomainError):
            LaurentQA({(0, 0): 0.5})

    def test_arithmetic_against_sympy(self):
        rng = random.Random(7)
        for _ in range(40):
            x, y = random_laurent(rng), random_laurent(rng)
            self.assertEqual(sympy.expand(to_sympy(x + y) - to_sympy(x) - to_sympy(y)), 0)
            self.assertEqual(sympy.expand(to_sympy(x * y) - to_sympy(x) * to_sympy(y)), 0)
            self.assertEqual(x - x, ZERO)

    def test_str(self):
        self.assertEqual(str(ZERO), "0")
        self.assertEqual(str((ONE + q_pow(1)) * (ONE - q_pow(1))), "-q^2 + 1")
        self.assertEqual(str(LaurentQA.monomial(1, 1, -1)), "a*q^-1")
        self.assertEqual(str(LaurentQA.monomial(Fraction(-3, 2), 2, 0)), "-3/2*a^2")

    def test_shift_and_components(self):
        x = a_pow(1) + q_pow(2) + LaurentQA.monomial(3, 1, -1)
        self.assertEqual(x.a_degrees(), [0, 1])
        self.assertEqual(x.a_component(1), a_pow(1) + LaurentQA.monomial(3, 1, -1))
        self.assertEqual(x.shift(-1, 1), LaurentQA({(-1, 3): 1, (0, 1): 1, (0, 0): 3}))

    def test_divide_exact(self):
        num = q_pow(2) - ONE
        self.assertEqual(num.divide(q_pow(1) - ONE), q_pow(1) + ONE)
        self.assertEqual(num.divide(LaurentQA.monomial(2, 1, 1)),
                         LaurentQA({(-1, 1): Fraction(1, 2), (-1, -1): Fraction(-1, 2)}))

    def test_divide_not_exact(self):
        self.assertIsNone((q_pow(2) + ONE).divide(q_pow(1) + ONE))

    def test_divide_by_zero(self):
        with self.assertRaises(DomainError):
            ONE.divide(ZERO)

    def test_qint(self):
        self.assertEqual(qint(0), ZERO)
        self.assertEqual(qint(1), ONE)
        self.assertEqual(qint(3), q_pow(2) + ONE + q_pow(-2))
        self.assertEqual(qint(-2), -(q_pow(1) + q_pow(-1)))
        for n in range(-5, 6):
            self.assertEqual(qint(n) * (q_pow(1) - q_pow(-1)), q_pow(n) - q_pow(-n))

    def test_qbinom(self):
        self.assertEqual(qbinom(3, 0), ONE)
        self.assertEqual(qbinom(3, 1), qint(3))
        self.assertEqual(
            qbinom(4, 2), q_pow(4) + q_pow(2) + LaurentQA.constant(2) + q_pow(-2) + q_pow(-4)
        )
        for n in range(1, 7):
            for m in range(1, n):
                self.assertEqual(
                    qbinom(n, m),
                    q_pow(m) * qbinom(n - 1, m) + q_pow(m - n) * qbinom(n - 1, m - 1),
                )
                self.assertEqual(qbinom(n, m), qbinom(n, n - m))

    def test_qbinom_out_of_range(self):
        with self.assertRaises(DomainError):
            qbinom(2, 3)
        with self.assertRaises(DomainError):
            qbinom(-1, 0)

    def test_laurent_arith_dispatch(self):
        x, y = q_pow(1), a_pow(1)
        self.assertEqual(laurent_arith("add", x, y), x + y)
        self.assertEqual(laurent_arith("mul", x, y), LaurentQA.monomial(1, 1, 1))
        self.assertEqual(laurent_arith("neg", x), -x)
        self.assertTrue(laurent_arith("eq", x, q_pow(1)))
        with self.assertRaises(DomainError):
            laurent_arith("pow", x, y)

    def test_monomial(self):
        m = Monomial(2, 1, -3)
        self.assertEqual(m * m.inverse(), Monomial())
        self.assertEqual(m**-2, Monomial(Fraction(1, 4), -2, 6))
        self.assertEqual(m.shift_q(5), Monomial(2, 1, 2))
        self.assertLess(Monomial(1, 0, 5), Monomial(1, 1, -5))
        with self.assertRaises(DomainError):
            Monomial(0, 1, 1)

    def test_upoly_str_and_degree(self):
        f = poly_from_inverse_roots([Monomial(1, 1, 0)])
        self.assertEqual(str(f), "1 - a*u")
        self.assertEqual(f.degree, 1)
        self.assertEqual(UPoly([ONE, ZERO, ZERO]).degree, 0)

    def test_exact_divide(self):
        f = poly_from_inverse_roots([Monomial(1, 1, 0), Monomial(1, 1, 2)])
        g = poly_from_inverse_roots([Monomial(1, 1, 0)])
        self.assertEqual(f.exact_divide(g), poly_from_inverse_roots([Monomial(1, 1, 2)]))
        self.assertIsNone(g.exact_divide(poly_from_inverse_roots([Monomial(1, 1, 2)])))
        self.assertIsNone(g.exact_divide(f))
        with self.assertRaises(DomainError):
            f.exact_divide(UPoly())

    def test_exact_divide_outside_the_laurent_ring(self):
        q2_plus_1 = q_pow(2) + ONE
        q_plus_1 = q_pow(1) + ONE
        # (1 + (q^2+1)u) / (1 + (q+1)u) leaves a remainder even over the fraction field
        self.assertIsNone(UPoly([ONE, q2_plus_1]).exact_divide(UPoly([ONE, q_plus_1])))
        # (q^2+1)(1+u) / (q+1)(1+u) is exact, but its quotient is not a Laurent polynomial
        with self.assertRaises(UnsupportedInputError):
            UPoly([q2_plus_1, q2_plus_1]).exact_divide(UPoly([q_plus_1, q_plus_1]))
        self.assertEqual(
            UPoly([q2_plus_1 * q_plus_1, q2_plus_1 * q_plus_1]).exact_divide(
                UPoly([q_plus_1, q_plus_1])
            ),
            UPoly([q2_plus_1]),
        )

    def test_exact_divide_random_products(self):
        rng = random.Random(11)
        for _ in range(20):
            f = UPoly([random_laurent(rng) for _ in range(rng.randint(0, 3))] + [q_pow(1)])
            g = UPoly([random_laurent(rng) for _ in range(rng.randint(0, 3))] + [a_pow(-1)])
            self.assertEqual((f * g).exact_divide(g), f)

    def test_substitute_scale(self):
        f = poly_from_inverse_roots([Monomial(1, 1, 0)])
        self.assertEqual(
            f.substitute_scale(Monomial(1, 0, 2)), poly_from_inverse_roots([Monomial(1, 1, 2)])
        )
        self.assertEqual(upoly_arith("substitute_scale", f, Monomial(1, 0, 2)),
                         f.substitute_scale(Monomial(1, 0, 2)))

    def test_poly_from_inverse_roots_order(self):
        roots = [Monomial(1, 1, -2), Monomial(2, 0, 1), Monomial(1, 1, 4)]
        self.assertEqual(poly_from_inverse_roots(roots), poly_from_inverse_roots(roots[::-1]))
        self.assertEqual(poly_from_inverse_roots([]), UPoly([ONE]))
        self.assertEqual(poly_from_inverse_roots(roots).constant_term(), ONE)
