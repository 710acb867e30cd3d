"""Exact symbolic weight-enumerator algebra for self-dual binary codes.

Everything here is exact rational arithmetic (stdlib fractions); there is
no floating point in this module.  The pipeline is:

  1. ``gleason_expand`` writes the weight enumerator of a length-n
     self-dual code in the invariant basis
     (1+y^2)^(n/2-4j) (y^2(1-y^2)^2)^j with coefficients a_j, solving for
     as many a_j as the supplied low-order coefficients determine.
  2. ``shadow_transform`` rewrites the shadow enumerator in the same a_j
     via (-1)^j a_j 2^(n/2-6j) y^(n/2-4j) (1-y^4)^(2j).
  3. ``apply_shadow_case`` pins the a_j forced by a shadow minimum-weight
     assumption and renames the surviving parameters to conventional
     letters, yielding the parameterized families for n = 58, 82, 106, 130.
  4. ``c1_basis`` / ``w1_family`` / ``derive_parity`` express the
     enumerator of one shadow half-coset and extract the parity
     restrictions (gamma, c, d, e even) its integrality forces.

Polynomials are sparse maps exponent -> coefficient, where a coefficient
is either a rational (RationalPoly) or an affine-linear form in named
parameters (ParamPoly).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Rational = Union[int, Fraction]


class InconsistentConstraints(ValueError):
    """A linear constraint system admits no solution."""


class InfeasibleCase(ValueError):
    """A shadow case forces a negative coefficient."""


_NAME_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


def _name_key(name: str) -> tuple[str, int]:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"invalid parameter name {name!r}")
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def _fmt(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class LinearForm:
    """An affine-linear combination of named parameters, exact rationals.

    ``terms`` is kept sorted by parameter name with zero coefficients
    pruned, so equal forms compare and hash equal.
    """

    constant: Fraction
    terms: tuple[tuple[str, Fraction], ...]

    @classmethod
    def make(
        cls, constant: Rational = 0, terms: Mapping[str, Rational] | None = None
    ) -> "LinearForm":
        clean = {}
        for name, c in (terms or {}).items():
            q = Fraction(c)
            if q:
                clean[name] = q
        ordered = tuple(
            (name, clean[name]) for name in sorted(clean, key=_name_key)
        )
        return cls(Fraction(constant), ordered)

    @classmethod
    def var(cls, name: str) -> "LinearForm":
        return cls.make(0, {name: 1})

    @classmethod
    def of(cls, value: "LinearForm | Rational") -> "LinearForm":
        if isinstance(value, LinearForm):
            return value
        return cls.make(value)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.terms)

    def coeff(self, name: str) -> Fraction:
        for n, c in self.terms:
            if n == name:
                return c
        return Fraction(0)

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms) or bool(self.constant)

    def __add__(self, other: "LinearForm | Rational") -> "LinearForm":
        other = LinearForm.of(other)
        acc = dict(self.terms)
        for n, c in other.terms:
            acc[n] = acc.get(n, Fraction(0)) + c
        return LinearForm.make(self.constant + other.constant, acc)

    def __sub__(self, other: "LinearForm | Rational") -> "LinearForm":
        return self + (LinearForm.of(other) * -1)

    def __mul__(self, scalar: Rational) -> "LinearForm":
        q = Fraction(scalar)
        return LinearForm.make(
            self.constant * q, {n: c * q for n, c in self.terms}
        )

    __rmul__ = __mul__

    def substitute(
        self, mapping: Mapping[str, "LinearForm | Rational"]
    ) -> "LinearForm":
        out = LinearForm.make(self.constant)
        for n, c in self.terms:
            if n in mapping:
                out = out + LinearForm.of(mapping[n]) * c
            else:
                out = out + LinearForm.make(0, {n: c})
        return out

    def evaluate(self, assignment: Mapping[str, Rational]) -> Fraction:
        total = self.constant
        for n, c in self.terms:
            if n not in assignment:
                raise ValueError(f"no value for parameter {n}")
            total += c * Fraction(assignment[n])
        return total

    def __str__(self) -> str:
        parts = []
        if self.constant or not self.terms:
            parts.append(_fmt(self.constant))
        for n, c in self.terms:
            if c == 1:
                term = n
            elif c == -1:
                term = f"-{n}"
            else:
                term = f"{_fmt(c)}*{n}"
            if parts and not term.startswith("-"):
                parts.append(f"+ {term}")
            elif parts:
                parts.append(f"- {term[1:]}")
            else:
                parts.append(term)
        return " ".join(parts)


_ZERO = LinearForm.make(0)


# -- sparse polynomial helpers (plain dicts internally) ---------------------


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def _ppow(a: dict, exp: int) -> dict:
    out = {0: Fraction(1)}
    base = dict(a)
    e = exp
    while e:
        if e & 1:
            out = _pmul(out, base)
        e >>= 1
        if e:
            base = _pmul(base, base)
    return out


def _pscale(a: dict, s: Fraction) -> dict:
    return {e: c * s for e, c in a.items()} if s else {}


@dataclass(frozen=True)
class RationalPoly:
    """A univariate polynomial with exact rational coefficients, sparse."""

    coefficients: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_dict(cls, d: Mapping[int, Rational]) -> "RationalPoly":
        clean = {int(e): Fraction(c) for e, c in d.items() if c}
        return cls(tuple(sorted(clean.items())))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coefficients)

    def coeff(self, e: int) -> Fraction:
        for ee, c in self.coefficients:
            if ee == e:
                return c
        return Fraction(0)

    @property
    def degree(self) -> int:
        return self.coefficients[-1][0] if self.coefficients else -1

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(
            f"{_fmt(c)}*y^{e}" if e else _fmt(c) for e, c in self.coefficients
        )


@dataclass(frozen=True)
class ParamPoly:
    """A polynomial whose coefficients are LinearForm values.

    Substituting rationals for every parameter turns it into a
    RationalPoly; this is the representation of every W_C / W_S family.
    """

    coefficients: tuple[tuple[int, LinearForm], ...]

    @classmethod
    def from_dict(cls, d: Mapping[int, LinearForm]) -> "ParamPoly":
        clean = {int(e): f for e, f in d.items() if f}
        return cls(tuple(sorted(clean.items())))

    def as_dict(self) -> dict[int, LinearForm]:
        return dict(self.coefficients)

    def coeff(self, e: int) -> LinearForm:
        for ee, f in self.coefficients:
            if ee == e:
                return f
        return _ZERO

    @property
    def degree(self) -> int:
        return self.coefficients[-1][0] if self.coefficients else -1

    @property
    def params(self) -> tuple[str, ...]:
        names = {n for _, f in self.coefficients for n in f.names}
        return tuple(sorted(names, key=_name_key))

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.coefficients)

    def substitute(self, mapping: Mapping[str, LinearForm | Rational]) -> "ParamPoly":
        return ParamPoly.from_dict(
            {e: f.substitute(mapping) for e, f in self.coefficients}
        )

    def to_rational(self) -> RationalPoly:
        bad = self.params
        if bad:
            raise ValueError(f"free parameters remain: {', '.join(bad)}")
        return RationalPoly.from_dict(
            {e: f.constant for e, f in self.coefficients}
        )

    def truncate(self, max_exponent: int) -> "ParamPoly":
        return ParamPoly(
            tuple((e, f) for e, f in self.coefficients if e <= max_exponent)
        )

    def eval_at(self, y: Rational) -> LinearForm:
        """Value at a numeric y, as a form in the remaining parameters."""
        q = Fraction(y)
        total = _ZERO
        for e, f in self.coefficients:
            total = total + f * q**e
        return total

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        acc = {e: f for e, f in self.coefficients}
        for e, f in other.coefficients:
            acc[e] = acc.get(e, _ZERO) + f
        return ParamPoly.from_dict(acc)

    def scale(self, s: Rational) -> "ParamPoly":
        q = Fraction(s)
        return ParamPoly.from_dict({e: f * q for e, f in self.coefficients})

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for e, f in self.coefficients:
            inner = str(f)
            if f.is_constant and "/" not in inner and not inner.startswith("-"):
                body = inner
            else:
                body = f"({inner})"
            parts.append(f"{body}*y^{e}" if e else body)
        return " + ".join(parts)


def _param_sum(pairs: Iterable[tuple[LinearForm, dict]]) -> dict[int, LinearForm]:
    """Accumulates Sum(form_i * poly_i) as exponent -> LinearForm."""
    acc: dict[int, LinearForm] = {}
    for form, poly in pairs:
        for e, c in poly.items():
            acc[e] = acc.get(e, _ZERO) + form * c
    return acc


# -- Gleason expansion and the shadow transform -----------------------------


def _gleason_basis(n: int) -> list[dict]:
    one_y2 = {0: Fraction(1), 2: Fraction(1)}
    # y^2 (1-y^2)^2 = y^2 - 2y^4 + y^6
    g2 = {2: Fraction(1), 4: Fraction(-2), 6: Fraction(1)}
    out = []
    for j in range(n // 8 + 1):
        out.append(_pmul(_ppow(one_y2, n // 2 - 4 * j), _ppow(g2, j)))
    return out


def _shadow_basis(n: int) -> list[dict]:
    one_m_y4_sq = {0: Fraction(1), 4: Fraction(-1)}
    out = []
    for j in range(n // 8 + 1):
        scale = Fraction(-1) ** j * Fraction(2) ** (n // 2 - 6 * j)
        poly = _pscale(_ppow(one_m_y4_sq, 2 * j), scale)
        out.append({e + n // 2 - 4 * j: c for e, c in poly.items()})
    return out


@dataclass(frozen=True)
class GleasonCoeffs:
    """Coefficients a_0 .. a_(n//8) of the invariant-basis expansion.

    Entries are LinearForm values: solved coefficients are constants (or
    forms in foreign parameters), unsolved ones remain the free variables
    a0, a1, ...
    """

    n: int
    a: tuple[LinearForm, ...]

    @property
    def free_params(self) -> tuple[str, ...]:
        names = {nm for f in self.a for nm in f.names}
        return tuple(sorted(names, key=_name_key))

    def to_enumerator(self) -> ParamPoly:
        """Reconstructs W_C from the coefficients."""
        basis = _gleason_basis(self.n)
        return ParamPoly.from_dict(_param_sum(zip(self.a, basis)))


def _solve_for(eq: LinearForm, name: str) -> LinearForm:
    """Solves eq == 0 for the named parameter."""
    c = eq.coeff(name)
    assert c != 0
    rest = eq - LinearForm.make(0, {name: c})
    return rest * (Fraction(-1) / c)


def gleason_expand(
    n: int, known_A: Mapping[int, LinearForm | Rational]
) -> GleasonCoeffs:
    """Expands a self-dual weight enumerator in the Gleason basis.

    ``known_A`` maps weights to their (possibly symbolic) coefficients and
    must contain A_0 = 1.  Constraints are consumed in weight order; the
    constraint at weight 2m determines a_m (the basis is triangular), and
    constraints beyond the last basis element become consistency checks.

    Raises:
        InconsistentConstraints: when a constraint cannot be satisfied;
            the message names the offending weight.
    """
    if n <= 0 or n % 2:
        raise ValueError("n must be a positive even integer")
    if 0 not in known_A or LinearForm.of(known_A[0]) != LinearForm.make(1):
        raise ValueError("known_A must include A_0 = 1")
    J = n // 8
    basis = _gleason_basis(n)
    a_names = [f"a{j}" for j in range(J + 1)]
    sym = _param_sum(
        (LinearForm.var(a_names[j]), basis[j]) for j in range(J + 1)
    )
    mapping: dict[str, LinearForm] = {}
    for w in sorted(known_A):
        target = LinearForm.of(known_A[w])
        form = sym.get(w, _ZERO).substitute(mapping) - target.substitute(mapping)
        free = [nm for nm in form.names if nm in a_names]
        if not free:
            if form:
                raise InconsistentConstraints(
                    f"coefficient of y^{w} forces {form} = 0"
                )
            continue
        pick = max(free, key=_name_key)
        mapping[pick] = _solve_for(form, pick)
    a = tuple(
        mapping.get(nm, LinearForm.var(nm)).substitute(mapping)
        for nm in a_names
    )
    return GleasonCoeffs(n=n, a=a)


def shadow_transform(g: GleasonCoeffs) -> ParamPoly:
    """The shadow enumerator W_S in terms of the same Gleason coefficients."""
    basis = _shadow_basis(g.n)
    return ParamPoly.from_dict(_param_sum(zip(g.a, basis)))


# -- shadow minimum-weight cases --------------------------------------------


@dataclass(frozen=True)
class Family:
    """A parameterized enumerator pair (W_C, W_S) for one shadow case.

    Iterating yields (wc, ws), so ``wc, ws = apply_shadow_case(...)``
    works; the extra fields carry the context the CLI and the feasibility
    reporting need.
    """

    n: int
    case: str
    d: int
    wc: ParamPoly
    ws: ParamPoly

    def __iter__(self) -> Iterator[ParamPoly]:
        return iter((self.wc, self.ws))

    @property
    def params(self) -> tuple[str, ...]:
        names = set(self.wc.params) | set(self.ws.params)
        return tuple(sorted(names, key=_name_key))


# constraints: ("B", w, value) pins a shadow coefficient;
# ("ABmatch",) equates A_d with B_(d-1) at the inferred minimum weight d.
# renames: ("aj", j, scale, name) sets a_j = scale * name;
# ("ws", w, name) names the shadow coefficient at weight w and solves it
# for the highest surviving a_j.
_CASES: dict[tuple[int, str], tuple[list, list]] = {
    (82, "wt1"): (
        [("B", 1, 1), ("B", 5, 0), ("B", 9, 0), ("ABmatch",)],
        [],
    ),
    (82, "min5"): (
        [("B", 1, 0), ("B", 5, 1)],
        [("aj", 8, 128, "alpha"), ("aj", 7, 2, "beta")],
    ),
    (82, "min9"): (
        [("B", 1, 0), ("B", 5, 0)],
        [("aj", 8, 128, "alpha"), ("aj", 7, 2, "beta")],
    ),
    (82, "ge5"): (
        [("B", 1, 0)],
        [("aj", 8, 128, "b"), ("aj", 7, 2, "c"), ("ws", 5, "a")],
    ),
    (58, "min5"): (
        [("B", 1, 0)],
        [("ws", 5, "beta"), ("ws", 9, "gamma")],
    ),
    (106, "min5"): (
        [("B", 1, 0)],
        [
            ("aj", 11, 8192, "b"),
            ("aj", 10, 128, "c"),
            ("aj", 9, 2, "d"),
            ("ws", 5, "a"),
        ],
    ),
    (130, "min5"): (
        [("B", 1, 0)],
        [
            ("aj", 14, 524288, "b"),
            ("aj", 13, 8192, "c"),
            ("aj", 12, 128, "d"),
            ("aj", 11, 2, "e"),
            ("ws", 5, "a"),
        ],
    ),
}
# the three-parameter n=82 family doubles as the d(S) >= 5 case there
_CASES[(58, "ge5")] = _CASES[(58, "min5")]
_CASES[(106, "ge5")] = _CASES[(106, "min5")]
_CASES[(130, "ge5")] = _CASES[(130, "min5")]

SHADOW_CASES = ("wt1", "min5", "min9", "ge5")


def _supported_cases() -> str:
    return ", ".join(f"n={n}:{c}" for n, c in sorted(_CASES))


def apply_shadow_case(g: GleasonCoeffs, case: str) -> Family:
    """Instantiates the enumerator family for a shadow minimum-weight case.

    Cases: for n = 82, "wt1" (d(S) = 1: the shadow's unique weight-1
    vector forces B_1 = 1, B_5 = B_9 = 0 and A_d = B_(d-1)), "min5"
    (d(S) = 5, so B_1 = 0 and B_5 = 1 by uniqueness), "min9" (B_1 = B_5
    = 0), and "ge5" (the three-parameter d(S) >= 5 family).  For n = 58,
    106, 130 the cases "min5"/"ge5" both give the d(S) >= 5 family with
    B_1 = 0; B_5 stays a free parameter at those lengths.

    The surviving free coefficients are renamed to the conventional
    letters (alpha, beta for n = 82 cases 2-3; beta, gamma for n = 58;
    a..e for the uniform families).

    Raises:
        ValueError: unsupported (n, case) combination.
        InconsistentConstraints: the constraints admit no solution.
        InfeasibleCase: a fully determined coefficient comes out negative.
    """
    key = (g.n, case)
    if key not in _CASES:
        raise ValueError(
            f"unsupported shadow case {case!r} for n={g.n}; "
            f"supported: {_supported_cases()}"
        )
    constraints, renames = _CASES[key]
    a_names = [f"a{j}" for j in range(len(g.a))]
    sym_ws = shadow_transform(g).as_dict()
    sym_wc = g.to_enumerator().as_dict()
    mapping: dict[str, LinearForm] = {}

    def current(table: dict[int, LinearForm], w: int) -> LinearForm:
        return table.get(w, _ZERO).substitute(mapping)

    def solve_constraint(form: LinearForm, what: str):
        free = [nm for nm in form.names if nm in a_names]
        if not free:
            if form:
                raise InconsistentConstraints(f"{what} forces {form} = 0")
            return
        pick = max(free, key=_name_key)
        mapping[pick] = _solve_for(form, pick)

    d = _min_weight_of(sym_wc, mapping)
    for con in constraints:
        if con[0] == "B":
            _, w, value = con
            solve_constraint(current(sym_ws, w) - value, f"B_{w} = {value}")
        else:
            d = _min_weight_of(sym_wc, mapping)
            eq = current(sym_wc, d) - current(sym_ws, d - 1)
            solve_constraint(eq, f"A_{d} = B_{d - 1}")
    for rn in renames:
        if rn[0] == "aj":
            _, j, scale, name = rn
            nm = f"a{j}"
            if nm in mapping:
                raise InconsistentConstraints(
                    f"cannot rename {nm}: already pinned to {mapping[nm]}"
                )
            mapping[nm] = LinearForm.make(0, {name: scale})
        else:
            _, w, name = rn
            form = current(sym_ws, w) - LinearForm.var(name)
            solve_constraint(form, f"naming B_{w} = {name}")
    wc = ParamPoly.from_dict(sym_wc).substitute(mapping)
    ws = ParamPoly.from_dict(sym_ws).substitute(mapping)
    leftover = [nm for nm in wc.params if nm in a_names] + [
        nm for nm in ws.params if nm in a_names
    ]
    if leftover:
        # the constraint-and-rename table matches the tabulated minimum
        # weight; a smaller dmin leaves extra coefficients unnamed
        names = ", ".join(sorted(set(leftover), key=_name_key))
        raise ValueError(
            f"case {case!r} for n={g.n} leaves free coefficients {names}; "
            "supply enough vanishing low-weight terms first"
        )
    for poly in (wc, ws):
        for e, f in poly.coefficients:
            if f.is_constant and f.constant < 0:
                raise InfeasibleCase(
                    f"coefficient of y^{e} is forced to {f.constant} < 0"
                )
    d = _min_weight_of(sym_wc, mapping)
    return Family(n=g.n, case=case, d=d, wc=wc, ws=ws)


def _min_weight_of(sym_wc: dict[int, LinearForm], mapping) -> int:
    """Smallest positive exponent whose coefficient form is nonzero."""
    for e in sorted(sym_wc):
        if e and sym_wc[e].substitute(mapping):
            return e
    raise InconsistentConstraints("enumerator vanished above weight 0")


def family_for(n: int, dmin: int, case: str) -> Family:
    """Convenience pipeline: Gleason expansion at d >= dmin, then the case."""
    known: dict[int, int] = {0: 1}
    for w in range(2, dmin, 2):
        known[w] = 0
    return apply_shadow_case(gleason_expand(n, known), case)


# -- the W(1) - W(3) basis and parity restrictions --------------------------


def c1_basis(k: int) -> ParamPoly:
    """The span of W(1) - W(3) for length n = 24k + 10, parameters b_i.

    Sum over i < k of b_i (1+14y^4+y^8)^(3k-1-3i) (y^4(1-y^4)^4)^i f(y)
    with f(y) = y - 34y^5 + 34y^13 - y^17.
    """
    if not 1 <= k <= 5:
        raise ValueError("k must be between 1 and 5")
    phi = {0: Fraction(1), 4: Fraction(14), 8: Fraction(1)}
    psi = _pmul({4: Fraction(1)}, _ppow({0: Fraction(1), 4: Fraction(-1)}, 4))
    f = {
        1: Fraction(1),
        5: Fraction(-34),
        13: Fraction(34),
        17: Fraction(-1),
    }
    acc: dict[int, LinearForm] = {}
    for i in range(k):
        poly = _pmul(_pmul(_ppow(phi, 3 * k - 1 - 3 * i), _ppow(psi, i)), f)
        for e, c in poly.items():
            acc[e] = acc.get(e, _ZERO) + LinearForm.make(0, {f"b{i}": c})
    return ParamPoly.from_dict(acc)


_FAMILY_FOR_K = {2: (58, "min5"), 3: (82, "ge5"), 4: (106, "min5"), 5: (130, "min5")}


def w1_family(k: int) -> ParamPoly:
    """Enumerator of the shadow half-coset containing no weight-1 vector.

    W(1) = (W_S + (W(1) - W(3))) / 2 where W_S is the d(S) >= 5 family of
    length 24k + 10 and the difference comes from c1_basis with b_0 = 0
    (the shadow contains no vector of weight 1).
    """
    if not 2 <= k <= 5:
        raise ValueError("k must be between 2 and 5")
    n, case = _FAMILY_FOR_K[k]
    fam = family_for(n, 4 * k + 2, case)
    diff = c1_basis(k).substitute({"b0": 0})
    return (fam.ws + diff).scale(Fraction(1, 2))


@dataclass(frozen=True)
class CongruenceSystem:
    """Congruences form ≡ 0 (mod modulus) on integer parameter values."""

    relations: tuple[tuple[LinearForm, int], ...]

    def __str__(self) -> str:
        if not self.relations:
            return "(no congruences)"
        return "; ".join(f"{f} == 0 (mod {m})" for f, m in self.relations)


# truncation degrees matching the displayed family prefixes
_W1_CUTOFF = {2: 17, 3: 17, 4: 17, 5: 21}
_WC_CUTOFF = {58: 12, 82: 18, 106: 24, 130: 30}
_WS_CUTOFF = {58: 17, 82: 21, 106: 17, 130: 21}


def display_cutoffs(n: int) -> tuple[int | None, int | None]:
    """Truncation degrees (W_C, W_S) of the displayed family prefixes."""
    return _WC_CUTOFF.get(n), _WS_CUTOFF.get(n)


def derive_parity(k: int, max_exponent: int | None = None) -> CongruenceSystem:
    """Parity restrictions forced by integrality of the W(1) coefficients.

    Every coefficient of W(1) must be a nonnegative integer.  Doubling a
    coefficient form clears the only possible denominator, 2; reducing
    the doubled forms mod 2 gives a GF(2) system in the parameters, and
    eliminating the auxiliary b_i leaves the congruences on the shadow
    parameters.  Coefficients are taken up to ``max_exponent`` (default:
    the degree of the displayed prefix for this k).

    For k = 2, 3, 4, 5 the result is gamma, c, d, e even, respectively.
    """
    if not 2 <= k <= 5:
        raise ValueError("k must be between 2 and 5")
    cutoff = max_exponent if max_exponent is not None else _W1_CUTOFF[k]
    w1 = w1_family(k)
    b_names = {f"b{i}" for i in range(1, k)}
    rows: list[tuple[dict[str, int], int]] = []
    for e, form in w1.coefficients:
        if e > cutoff:
            continue
        doubled = form * 2
        bits = {}
        for nm, c in doubled.terms:
            if c.denominator != 1:
                raise ValueError(
                    f"coefficient of y^{e} doubled is not integral: {doubled}"
                )
            if c.numerator % 2:
                bits[nm] = 1
        if doubled.constant.denominator != 1:
            raise ValueError(
                f"coefficient of y^{e} doubled is not integral: {doubled}"
            )
        const = doubled.constant.numerator % 2
        if bits or const:
            rows.append((bits, const))
    # eliminate the b_i over GF(2)
    for b in sorted(b_names, key=_name_key):
        pivot = next((i for i, (bits, _) in enumerate(rows) if b in bits), None)
        if pivot is None:
            continue
        pbits, pconst = rows[pivot]
        reduced = []
        for i, (bits, const) in enumerate(rows):
            if i == pivot:
                continue
            if b in bits:
                merged = dict(bits)
                for nm in pbits:
                    if nm in merged:
                        del merged[nm]
                    else:
                        merged[nm] = 1
                const ^= pconst
                bits = merged
            if bits or const:
                reduced.append((bits, const))
        rows = reduced
    out = []
    seen = set()
    for bits, const in rows:
        if not bits:
            if const:
                raise InconsistentConstraints(
                    "integrality forces 1 == 0 (mod 2)"
                )
            continue
        key = (tuple(sorted(bits)), const)
        if key in seen:
            continue
        seen.add(key)
        form = LinearForm.make(const, {nm: 1 for nm in bits})
        out.append((form, 2))
    return CongruenceSystem(relations=tuple(out))


# -- feasibility and export -------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    """A linear inequality form >= 0 from coefficient nonnegativity."""

    source: str  # "W_C" or "W_S"
    exponent: int
    form: LinearForm

    def __str__(self) -> str:
        return f"{self.source}[y^{self.exponent}]: {self.form} >= 0"


def feasible_range(
    family: Family, max_exponent: int | None = None
) -> list[Constraint]:
    """Nonnegativity constraints on the family's listed coefficients.

    Only coefficients actually involving parameters become constraints;
    fully determined coefficients were already checked when the family
    was built.  The default truncation is the displayed prefix degree
    for the family's length.
    """
    out = []
    for source, poly, cutoff in (
        ("W_C", family.wc, _WC_CUTOFF.get(family.n)),
        ("W_S", family.ws, _WS_CUTOFF.get(family.n)),
    ):
        limit = max_exponent if max_exponent is not None else cutoff
        if limit is None:
            limit = poly.degree
        for e, form in poly.coefficients:
            if e <= limit and not form.is_constant:
                out.append(Constraint(source=source, exponent=e, form=form))
    return out


def _form_json(f: LinearForm) -> dict:
    return {
        "const": _fmt(f.constant),
        "terms": {nm: _fmt(c) for nm, c in f.terms},
    }


def family_to_json(family: Family, max_exponent: int | None = None) -> dict:
    """JSON-ready description of a family; rationals become "p/q" strings."""

    def poly_json(poly: ParamPoly) -> list[dict]:
        return [
            {"deg": e, **_form_json(f)}
            for e, f in poly.coefficients
            if max_exponent is None or e <= max_exponent
        ]

    return {
        "n": family.n,
        "case": family.case,
        "d": family.d,
        "params": list(family.params),
        "W_C": poly_json(family.wc),
        "W_S": poly_json(family.ws),
    }
