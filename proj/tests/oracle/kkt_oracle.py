# Copyright 2026 The Langlands Retraction Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent exact oracle for the nearest dominant point.

Written against sympy only; shares no code with the C++ library. For each
subset J it solves the KKT system of

    minimize |x - y|^2  subject to  <y, alpha_i> >= 0

and returns the unique feasible stationary point.
"""

import itertools

import sympy


def cartan(kind, n):
    """Symmetrized Cartan matrix, short roots of squared length 2."""
    g = sympy.zeros(n, n)
    for i in range(n):
        g[i, i] = 2
    if kind == "A":
        for i in range(n - 1):
            g[i, i + 1] = g[i + 1, i] = -1
    elif kind == "B":
        for i in range(n - 1):
            g[i, i] = 4
        for i in range(n - 2):
            g[i, i + 1] = g[i + 1, i] = -2
        g[n - 2, n - 1] = g[n - 1, n - 2] = -2
    elif kind == "C":
        g[n - 1, n - 1] = 4
        for i in range(n - 2):
            g[i, i + 1] = g[i + 1, i] = -1
        g[n - 2, n - 1] = g[n - 1, n - 2] = -2
    elif kind == "G":
        g[0, 0] = 2
        g[1, 1] = 6
        g[0, 1] = g[1, 0] = -3
    else:
        raise ValueError(kind)
    return g


def nearest_dominant(gram, x):
    """Returns (y, J) with y the metric projection of x onto {G y >= 0}."""
    n = gram.shape[0]
    x = sympy.Matrix(x)
    for size in range(n + 1):
        for j in itertools.combinations(range(n), size):
            # y = x - sum_{k in J} c_k alpha_k, <y, alpha_k> = 0 on J.
            if j:
                gjj = gram.extract(list(j), list(j))
                rhs = (gram * x).extract(list(j), [0])
                c = gjj.LUsolve(rhs)
            else:
                c = sympy.zeros(0, 1)
            y = sympy.Matrix(x)
            for idx, k in enumerate(j):
                y[k] -= c[idx]
            p = gram * y
            if all(v >= 0 for v in p) and all(v <= 0 for v in c):
                return y, j
    raise RuntimeError("no KKT point found")


def fmt(v):
    v = sympy.Rational(v)
    return str(v.p) if v.q == 1 else f"{v.p}/{v.q}"
