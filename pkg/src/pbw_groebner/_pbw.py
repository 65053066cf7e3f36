"""Pure-Python PBW normal-ordering kernel.

Monomials are exponent tuples over the variables ``0..N-1`` in normal order.
Products of monomials have integer coefficients because the structure
constants are integers.
"""


class PBWKernel:
    def __init__(self, nvars, table):
        self.nvars = nvars
        self.table = table
        self._memo = {}

    def clear(self):
        self._memo.clear()

    def mono_var(self, mono, k):
        """Normal form of ``mono * x_k`` as ``{monomial: int}``."""
        j = self.nvars - 1
        while j > k and mono[j] == 0:
            j -= 1
        if j <= k:
            m = list(mono)
            m[k] += 1
            return {tuple(m): 1}
        key = (mono, k)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        # mono = rest * x_j with j > k:  rest * x_j * x_k = (rest * x_k) * x_j + rest * [x_j, x_k]
        rest = list(mono)
        rest[j] -= 1
        rest = tuple(rest)
        out = {}
        for t, c in self.mono_var(rest, k).items():
            for t2, c2 in self.mono_var(t, j).items():
                out[t2] = out.get(t2, 0) + c * c2
        for l, c in self.table[j][k]:
            for t, c2 in self.mono_var(rest, l).items():
                out[t] = out.get(t, 0) + c * c2
        out = {t: c for t, c in out.items() if c}
        self._memo[key] = out
        return out

    def mono_mono(self, a, b):
        """Normal form of ``a * b``."""
        cur = {a: 1}
        for k in range(self.nvars):
            for _ in range(b[k]):
                nxt = {}
                for t, c in cur.items():
                    for t2, c2 in self.mono_var(t, k).items():
                        nxt[t2] = nxt.get(t2, 0) + c * c2
                cur = {t: c for t, c in nxt.items() if c}
        return cur

    def product(self, xterms, yterms):
        """Product of two coefficient maps; zero coefficients are dropped."""
        out = {}
        mm = self.mono_mono
        for a, ca in xterms.items():
            for b, cb in yterms.items():
                c = ca * cb
                for t, ct in mm(a, b).items():
                    out[t] = out.get(t, 0) + c * ct
        return {t: c for t, c in out.items() if c}
