# Copyright 2026 The subsetsum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction
import itertools

import pytest

import subsetsum as ss


class Mt64:
    """Reference 64-bit Mersenne Twister, written from the published constants."""

    N, M = 312, 156
    UPPER, LOWER = 0xFFFFFFFF80000000, 0x7FFFFFFF
    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.mt = [seed & self.MASK]
        for i in range(1, self.N):
            prev = self.mt[-1]
            self.mt.append((6364136223846793005 * (prev ^ (prev >> 62)) + i) & self.MASK)
        self.index = self.N

    def _twist(self):
        mt = self.mt
        for i in range(self.N):
            x = (mt[i] & self.UPPER) | (mt[(i + 1) % self.N] & self.LOWER)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            mt[i] = mt[(i + self.M) % self.N] ^ xa
        self.index = 0

    def __call__(self):
        if self.index >= self.N:
            self._twist()
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & self.MASK

    def below(self, bound):
        threshold = ((1 << 64) - bound) % bound
        while True:
            r = self()
            if r >= threshold:
                return r % bound

    def between(self, lo, hi):
        return lo + self.below(hi - lo + 1)


def reference_restricted_uniform(n, seed):
    draws = Mt64(seed)
    bound = 2**n - 1
    a = [draws.between(-bound, bound) for _ in range(n)]
    target = n * 2**n - 1
    return a, draws.between(-target, target)


def test_reference_generator_matches_published_value():
    g = Mt64(5489)
    for _ in range(9999):
        g()
    assert g() == 9981545732273789042


@pytest.mark.parametrize("n,seed", [(1, 0), (5, 7), (16, 12345), (40, 2**63 + 5)])
def test_restricted_uniform_matches_reference(n, seed):
    inst, witness = ss.generate(n, "restricted_uniform", seed)
    assert witness is None
    assert (inst.a, inst.b) == reference_restricted_uniform(n, seed)


def test_solve_small_instance():
    inst = ss.Instance([3, 4], 7)
    report = ss.solve(inst, "mitm")
    assert report["solvable"] and report["certificate"] == [1, 1]
    assert report["elements_sorted"] == 4
    assert ss.verify(inst, report["certificate"])
    assert not ss.solve(ss.Instance([2, 4, 6], 5), "brute")["solvable"]


def test_solvers_agree_with_enumeration():
    for seed in range(40):
        inst, _ = ss.generate(1 + seed % 9, "planted" if seed % 2 else "restricted_uniform", seed)
        sums = {sum(w for w, x in zip(inst.a, xs) if x)
                for xs in itertools.product((0, 1), repeat=inst.n)}
        expected = inst.b in sums
        for algorithm in ("brute", "mitm"):
            assert ss.solve(inst, algorithm)["solvable"] == expected
        if inst.n >= 2:
            for strategy in ("independent", "shared_sort", "merged"):
                report = ss.solve_pair(inst, strategy)
                assert report["solvable"] == expected
                if expected:
                    assert ss.verify(inst, report["certificate"])


def test_analytic_cost_units():
    assert ss.analytic_cost("independent", 5)["total_units"] == 12
    assert ss.analytic_cost("shared_sort", 5)["total_units"] == Fraction(9)
    assert ss.analytic_cost("merged", 5)["total_units"] == 8
    assert ss.analytic_cost("merged", 4)["total_units"] == ss.analytic_cost("shared_sort", 4)["total_units"]
    with pytest.raises(ss.UsageError):
        ss.analytic_cost("merged", 0)


def test_text_and_json_round_trip():
    inst = ss.Instance([2**100, -3, 0], -(2**90))
    assert ss.read_text(inst.to_text()) == inst
    assert ss.read_json(inst.to_json()) == inst
    assert ss.Instance([3, 4], 7).to_text() == "2\n3 4\n7\n"


def test_errors_are_typed():
    with pytest.raises(ss.ParseError, match="line 2, column 2"):
        ss.read_text("2\n3\n7\n")
    with pytest.raises(ss.CapacityError):
        ss.Instance([2**130], 0)
    with pytest.raises(ValueError):
        ss.solve(ss.Instance([1], 1), "nope")


def test_fit_exponent():
    fit = ss.fit_exponent([(n, 2.0**n) for n in range(10, 21)])
    assert fit["slope"] == pytest.approx(1.0)
    assert fit["r_squared"] == pytest.approx(1.0)
