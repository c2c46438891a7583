"""Dense univariate polynomials over tower fields, small square matrices over
them, and exact linear solving."""

from __future__ import annotations


from .field import NUMBER, FieldElement, Tower

NEG_INF = float("-inf")


def common_tower(elements) -> Tower | None:
    tower = None
    for e in elements:
        tower = e.tower if tower is None else tower.join(e.tower)
    return tower


class Poly:
    """Immutable polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "t"):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def from_values(cls, values, tower: Tower, var: str = "t") -> "Poly":
        return cls([tower(v) for v in values], var)

    @classmethod
    def constant(cls, c, tower: Tower | None = None, var: str = "t") -> "Poly":
        if not isinstance(c, FieldElement):
            c = tower(c)
        return cls([c], var)

    @classmethod
    def monomial(cls, c: FieldElement, k: int, var: str = "t") -> "Poly":
        return cls([c.tower.zero] * k + [c], var)

    @property
    def degree(self):
        """Degree, with ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if i < len(self.coeffs) else None

    def _var(self, other: "Poly") -> str:
        if self.var == other.var or other.degree <= 0:
            return self.var
        if self.degree <= 0:
            return other.var
        raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (FieldElement,) + NUMBER):
            if isinstance(other, FieldElement):
                return Poly([other], self.var)
            if other == 0:
                return Poly((), self.var)
            if not self.coeffs:
                raise TypeError("cannot coerce a plain number next to the zero polynomial")
            return Poly([self.coeffs[0].tower(other)], self.var)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        var = self._var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]), var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (FieldElement,) + NUMBER):
            if isinstance(other, NUMBER) and other == 0:
                return Poly((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        var = self._var(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), var)
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                v = x * y
                out[i + j] = v if out[i + j] is None else out[i + j] + v
        zero = a[0].tower.join(b[0].tower).zero
        return Poly([zero if c is None else c for c in out], var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            base = base * base
            n >>= 1
        if result is None:
            if not self.coeffs:
                raise ValueError("0**0 is undefined here")
            return Poly([self.coeffs[0].tower.one], self.var)
        return result

    def __eq__(self, other):
        if isinstance(other, NUMBER + (FieldElement,)):
            other = self._lift(other) if self.coeffs or other == 0 else None
            if other is None:
                return False
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = []
        inv = other.lc.inverse()
        d = len(other.coeffs) - 1
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            c = rem[-1] * inv
            q.append((k, c))
            for i, oc in enumerate(other.coeffs):
                rem[i + k] = rem[i + k] - c * oc
            rem.pop()
            while rem and rem[-1].is_zero():
                rem.pop()
        if q:
            zero = q[0][1].tower.zero
            qc = [zero] * (q[0][0] + 1)
            for k, c in q:
                qc[k] = c
        else:
            qc = []
        return Poly(qc, self.var), Poly(rem, self.var)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * self.lc.inverse()

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a field element or a polynomial."""
        if not self.coeffs:
            return x * 0 if isinstance(x, Poly) else self._zero_like(x)
        acc = self.coeffs[-1]
        if isinstance(x, Poly):
            acc = Poly([acc], x.var)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    @staticmethod
    def _zero_like(x):
        return x.tower.zero if isinstance(x, FieldElement) else 0

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mon = "" if i == 0 else self.var if i == 1 else f"{self.var}^{i}"
            cs = c.render(parenthesize=True)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            else:
                parts.append(f"{cs}*{mon}")
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()!r})"

    def to_json(self) -> list[str]:
        return [c.render() for c in self.coeffs]


class PolyMatrix:
    """Square matrix with ``Poly`` entries, all in one variable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix is not square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def var(self) -> str:
        for row in self.rows:
            for p in row:
                if p.degree > 0:
                    return p.var
        return self.rows[0][0].var

    @classmethod
    def identity(cls, n: int, tower: Tower, var: str = "t") -> "PolyMatrix":
        one, zero = Poly([tower.one], var), Poly((), var)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, var: str = "t") -> "PolyMatrix":
        return cls([[Poly((), var)] * n for _ in range(n)])

    @classmethod
    def from_lists(cls, data, tower: Tower, var: str = "t") -> "PolyMatrix":
        """Nested lists of coefficient lists (lowest degree first)."""
        return cls([[Poly.from_values(e, tower, var) for e in row] for row in data])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "PolyMatrix"):
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._check(other)
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._check(other)
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            self._check(other)
            n = self.n
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for col in cols:
                    acc = None
                    for a, b in zip(r, col):
                        if a.is_zero() or b.is_zero():
                            continue
                        v = a * b
                        acc = v if acc is None else acc + v
                    row.append(acc if acc is not None else Poly((), r[0].var))
                out.append(row)
            return PolyMatrix(out)
        if isinstance(other, (Poly, FieldElement) + NUMBER):
            return PolyMatrix([[a * other for a in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Poly, FieldElement) + NUMBER):
            return PolyMatrix([[other * a if isinstance(other, Poly) else a * other for a in r] for r in self.rows])
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative matrix power")
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            base = base * base
            k >>= 1
        if result is None:
            raise ValueError("M**0 needs a tower; use PolyMatrix.identity")
        return result

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.rows for p in r)

    def scalar_part(self) -> Poly | None:
        """``s`` if the matrix equals ``s*I``, else None."""
        s = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, p in enumerate(r):
                if i == j and p != s:
                    return None
                if i != j and not p.is_zero():
                    return None
        return s

    def trace(self) -> Poly:
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def det(self) -> Poly:
        if self.n == 1:
            return self.rows[0][0]
        if self.n == 2:
            return self[0, 0] * self[1, 1] - self[0, 1] * self[1, 0]
        acc = Poly((), self.var)
        for j in range(self.n):
            minor = PolyMatrix([r[:j] + r[j + 1:] for r in self.rows[1:]])
            term = self[0, j] * minor.det()
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def max_degree(self):
        return max(p.degree for r in self.rows for p in r)

    def evaluate(self, t0) -> "PolyMatrix":
        """Substitute ``t = t0``; entries become constant polynomials."""
        return PolyMatrix([[Poly([p(t0)] if p else (), p.var) for p in r] for r in self.rows])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(p) for p in r] for r in self.rows])

    def flatten(self, length: int, tower: Tower) -> list[FieldElement]:
        """All coefficients of all entries, row-major, padded to ``length``."""
        zero = tower.zero
        out = []
        for r in self.rows:
            for p in r:
                cs = [c.lift(tower) for c in p.coeffs]
                if len(cs) > length:
                    raise ValueError("entry degree exceeds flatten length")
                out.extend(cs + [zero] * (length - len(cs)))
        return out

    def towers(self):
        return [c for r in self.rows for p in r for c in p.coeffs]

    def render(self) -> str:
        cells = [[p.render() for p in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "PolyMatrix(" + repr([[p.render() for p in r] for r in self.rows]) + ")"

    def to_json(self) -> list:
        return [[p.to_json() for p in r] for r in self.rows]


def commutator(a, b):
    return a * b - b * a


def trace_det_ch2(a: PolyMatrix) -> tuple[Poly, Poly, PolyMatrix]:
    """Trace, determinant and the Cayley-Hamilton residual
    ``A^2 - tr(A) A + det(A) I`` of a 2x2 matrix."""
    if a.n != 2:
        raise ValueError("trace_det_ch2 needs a 2x2 matrix")
    tr, det = a.trace(), a.det()
    tower = common_tower(a.towers()) or _default_tower(a)
    ident = PolyMatrix.identity(2, tower, a.var)
    residual = a * a - a * tr + ident * det
    return tr, det, residual


def _default_tower(a: PolyMatrix) -> Tower:
    raise ValueError("cannot infer coefficient field of the zero matrix")


# exact linear algebra

def _echelon(rows: list[list[FieldElement]], ncols: int):
    """Fraction-free (Bareiss) forward elimination in place.

    Eliminates in the first ``ncols`` columns; returns the pivot columns.
    """
    pivots = []
    prev = None
    r = 0
    m = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, m) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        pc = pr[c]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            if f.is_zero():
                if prev is not None:
                    # keep the Bareiss scaling uniform across rows
                    for j in range(c + 1, len(row)):
                        row[j] = pc * row[j] / prev
                else:
                    for j in range(c + 1, len(row)):
                        row[j] = pc * row[j]
                continue
            for j in range(c + 1, len(row)):
                v = pc * row[j] - f * pr[j]
                row[j] = v / prev if prev is not None else v
            row[c] = f.tower.zero
        prev = pc
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def _vectors(columns: list[PolyMatrix], target: PolyMatrix | None):
    mats = list(columns) + ([target] if target is not None else [])
    tower = common_tower(e for m in mats for e in m.towers())
    if tower is None:
        return None, 0, []
    length = max(max(int(m.max_degree()) if not m.is_zero() else 0 for m in mats) + 1, 1)
    return tower, length, [m.flatten(length, tower) for m in mats]


def solve_vectors(columns: list[list[FieldElement]], target: list[FieldElement]):
    """Solve ``sum x_j columns[j] = target`` exactly; None if inconsistent.

    Free variables are set to zero.
    """
    n = len(columns)
    m = len(target)
    rows = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    pivots = _echelon(rows, n)
    for row in rows[len(pivots):]:
        if not row[n].is_zero():
            return None
    zero = target[0].tower.zero if target else None
    x = [zero] * n
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        row = rows[k]
        acc = row[n]
        for j in range(c + 1, n):
            if not row[j].is_zero() and not x[j].is_zero():
                acc = acc - row[j] * x[j]
        x[c] = acc / row[c]
    return x


def rank_vectors(vectors: list[list[FieldElement]]) -> int:
    if not vectors:
        return 0
    m = len(vectors[0])
    rows = [[v[i] for v in vectors] for i in range(m)]
    return len(_echelon(rows, len(vectors)))


def solve_linear(columns: list[PolyMatrix], target: PolyMatrix):
    """Coordinates of ``target`` in the span of ``columns`` over the
    coefficient field (each matrix flattened to its coefficient vector), or
    None when ``target`` lies outside the span."""
    for c in columns:
        if c.n != target.n:
            raise ValueError("shape mismatch")
    tower, _, vecs = _vectors(columns, target)
    if tower is None:
        return []
    return solve_vectors(vecs[:-1], vecs[-1])


def rank(columns: list[PolyMatrix]) -> int:
    tower, _, vecs = _vectors(columns, None)
    if tower is None:
        return 0
    return rank_vectors(vecs)


class LinearSolver:
    """Solver for many right-hand sides against one independent column set.

    Factorizes once: selects pivot rows with the elimination above and
    inverts that square block, so each solve is a matrix-vector product
    followed by a full residual check.
    """

    def __init__(self, columns: list[list[FieldElement]]):
        self.columns = columns
        n = len(columns)
        m = len(columns[0]) if columns else 0
        self.tower = common_tower(e for col in columns for e in col)
        # pivot columns of the n x m matrix of column vectors index a maximal
        # set of independent equations
        work = [list(col) for col in columns]
        chosen = _echelon(work, m) if n else []
        basis = [[columns[j][i] for j in range(n)] for i in chosen]
        self.rank = len(basis)
        self.rows = chosen
        self.inverse = _invert(basis) if self.rank == n else None

    @property
    def independent(self) -> bool:
        return self.inverse is not None

    def solve(self, target: list[FieldElement]):
        if self.inverse is None:
            return solve_vectors(self.columns, target)
        b = [target[i] for i in self.rows]
        x = []
        for inv_row in self.inverse:
            acc = self.tower.zero
            for a, v in zip(inv_row, b):
                if not a.is_zero() and not v.is_zero():
                    acc = acc + a * v
            x.append(acc)
        for i, t in enumerate(target):
            acc = self.tower.zero
            for col, xj in zip(self.columns, x):
                if not xj.is_zero() and not col[i].is_zero():
                    acc = acc + col[i] * xj
            if acc != t:
                return None
        return x


def _invert(a: list[list[FieldElement]]) -> list[list[FieldElement]]:
    n = len(a)
    tower = common_tower(e for r in a for e in r)
    work = [list(r) + [tower.one if i == j else tower.zero for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if not work[i][c].is_zero())
        work[c], work[piv] = work[piv], work[c]
        inv = work[c][c].inverse()
        work[c] = [v * inv for v in work[c]]
        for i in range(n):
            if i != c and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [v - f * w for v, w in zip(work[i], work[c])]
    return [r[n:] for r in work]
