"""Exact formal sums over the four registered bases, and generic Hopf machinery.

An :class:`Element` is a finite integer combination of basis indices living
in one :class:`Space` (algebra plus basis).  A :class:`Tensor` is the same
over tuples of indices, one space per tensor slot.  Structure maps are
registered per space as a :class:`HopfStructure`; everything in this module
(extension of rules, iterated coproducts, the Takeuchi antipode, the axiom
verifier) only talks to that registry.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping, Sequence

from .errors import SpaceMismatch


@dataclass(frozen=True)
class Space:
    algebra: str  # "SSym" or "QSym"
    basis: str  # "F" or "M"

    @property
    def tag(self) -> str:
        return self.basis if self.algebra == "SSym" else self.basis + "q"

    def degree(self, index) -> int:
        return len(index) if self.algebra == "SSym" else sum(index)

    def sort_key(self, index):
        return (self.degree(index), tuple(index))

    def __str__(self):
        return f"{self.algebra}/{self.basis}"


SSYM_F = Space("SSym", "F")
SSYM_M = Space("SSym", "M")
QSYM_F = Space("QSym", "F")
QSYM_M = Space("QSym", "M")
SPACES = (SSYM_F, SSYM_M, QSYM_F, QSYM_M)
SPACE_BY_TAG = {s.tag: s for s in SPACES}

BasisKey = namedtuple("BasisKey", "algebra basis index")


def _accumulate(target, key, value):
    new = target.get(key, 0) + value
    if new:
        target[key] = new
    else:
        target.pop(key, None)


class Element:
    """Immutable integer combination of basis indices of one space."""

    __slots__ = ("space", "_terms")

    def __init__(self, space: Space, terms: Mapping | None = None):
        self.space = space
        self._terms = {k: int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, space, index, coeff=1):
        return cls(space, {index: coeff})

    @classmethod
    def _raw(cls, space, terms):
        # terms already pruned and owned
        obj = cls.__new__(cls)
        obj.space = space
        obj._terms = terms
        return obj

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: self.space.sort_key(kv[0]))

    def keys(self):
        return [BasisKey(self.space.algebra, self.space.basis, k) for k, _ in self.sorted_items()]

    def coefficient(self, index) -> int:
        return self._terms.get(tuple(index), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def degrees(self) -> set:
        return {self.space.degree(k) for k in self._terms}

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def homogeneous_component(self, d: int) -> Element:
        return Element._raw(self.space, {k: c for k, c in self._terms.items() if self.space.degree(k) == d})

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatch(f"cannot combine {self.space} with {other.space}")
        return True

    def __add__(self, other):
        if not isinstance(other, Element) and other == 0:
            return self
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(out, k, c)
        return Element._raw(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.space, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        if isinstance(other, Element):
            return extend_product(structure(self.space).product, self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Element):
            return NotImplemented
        return self.space == other.space and self._terms == other._terms

    def __hash__(self):
        return hash((self.space, frozenset(self._terms.items())))

    def __repr__(self):
        from .syntax import format_element

        return f"<{self.space}: {format_element(self)}>"

    def __str__(self):
        from .syntax import format_element

        return format_element(self)


class Tensor:
    """Immutable integer combination of index tuples; one space per slot."""

    __slots__ = ("spaces", "_terms")

    def __init__(self, spaces: Sequence[Space], terms: Mapping | None = None):
        self.spaces = tuple(spaces)
        self._terms = {tuple(k): int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, spaces, terms):
        obj = cls.__new__(cls)
        obj.spaces = spaces
        obj._terms = terms
        return obj

    @property
    def rank(self) -> int:
        return len(self.spaces)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        def key(kv):
            return tuple(s.sort_key(i) for s, i in zip(self.spaces, kv[0]))

        return sorted(self._terms.items(), key=key)

    def coefficient(self, indices) -> int:
        return self._terms.get(tuple(tuple(i) for i in indices), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if other.spaces != self.spaces:
            raise SpaceMismatch("tensor slots differ")
        return True

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(out, k, c)
        return Tensor._raw(self.spaces, out)

    def __neg__(self):
        return Tensor._raw(self.spaces, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Integer scaling, or the slotwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
        if isinstance(other, int):
            return Tensor._raw(self.spaces, {k: c * other for k, c in self._terms.items()} if other else {})
        if self._check(other) is NotImplemented:
            return NotImplemented
        rules = [structure(s).product for s in self.spaces]
        out = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                factors = [rule(a, b) for rule, a, b in zip(rules, ka, kb)]
                for combo in itertools.product(*(f.items() for f in factors)):
                    coeff = ca * cb
                    for _, c in combo:
                        coeff *= c
                    _accumulate(out, tuple(i for i, _ in combo), coeff)
        return Tensor._raw(self.spaces, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.spaces == other.spaces and self._terms == other._terms

    def __hash__(self):
        return hash((self.spaces, frozenset(self._terms.items())))

    def __repr__(self):
        from .syntax import format_tensor

        return f"<Tensor {'|'.join(map(str, self.spaces))}: {format_tensor(self)}>"

    def __str__(self):
        from .syntax import format_tensor

        return format_tensor(self)


# Coproducts land in rank-2 tensors.
Tensor2 = Tensor


# --------------------------------------------------------------------------
# plumbing


def add(x: Element, y: Element) -> Element:
    return x + y


def negate(x: Element) -> Element:
    return -x


def scale(x: Element, c: int) -> Element:
    if not c:
        return Element._raw(x.space, {})
    return Element._raw(x.space, {k: v * c for k, v in x._terms.items()})


def zero(space: Space) -> Element:
    return Element._raw(space, {})


def tensor(*factors: Element) -> Tensor:
    out = {}
    for combo in itertools.product(*(f.items() for f in factors)):
        coeff = 1
        for _, c in combo:
            coeff *= c
        _accumulate(out, tuple(i for i, _ in combo), coeff)
    return Tensor._raw(tuple(f.space for f in factors), out)


def extend_product(rule: Callable, x: Element, y: Element) -> Element:
    """Bilinear extension of ``rule(i, j) -> Element``."""
    out = {}
    space = x.space
    for i, a in x.items():
        for j, b in y.items():
            r = rule(i, j)
            space = r.space
            for k, c in r.items():
                _accumulate(out, k, a * b * c)
    return Element._raw(space, out)


def extend_coproduct(rule: Callable, x: Element) -> Tensor:
    """Linear extension of ``rule(i) -> Tensor``."""
    out = {}
    spaces = (x.space, x.space)
    for i, a in x.items():
        r = rule(i)
        spaces = r.spaces
        for k, c in r.items():
            _accumulate(out, k, a * c)
    return Tensor._raw(spaces, out)


def extend_linear(rule: Callable, x: Element, target: Space) -> Element:
    """Linear extension of ``rule(i) -> Element`` into ``target``."""
    out = {}
    for i, a in x.items():
        r = rule(i)
        if r.space != target:
            raise SpaceMismatch(f"rule produced {r.space}, expected {target}")
        for k, c in r.items():
            _accumulate(out, k, a * c)
    return Element._raw(target, out)


def map_slot(t: Tensor, slot: int, rule: Callable, target: Space) -> Tensor:
    """Apply a linear map ``rule(i) -> Element`` to one tensor slot."""
    out = {}
    for key, c in t.items():
        for k, d in rule(key[slot]).items():
            _accumulate(out, key[:slot] + (k,) + key[slot + 1 :], c * d)
    spaces = t.spaces[:slot] + (target,) + t.spaces[slot + 1 :]
    return Tensor._raw(spaces, out)


def split_slot(t: Tensor, slot: int, rule: Callable) -> Tensor:
    """Apply a coproduct ``rule(i) -> Tensor`` to one slot, raising the rank by one."""
    out = {}
    new_spaces = None
    for key, c in t.items():
        r = rule(key[slot])
        new_spaces = r.spaces
        for pair, d in r.items():
            _accumulate(out, key[:slot] + pair + key[slot + 1 :], c * d)
    if new_spaces is None:
        new_spaces = (t.spaces[slot],) * 2
    spaces = t.spaces[:slot] + new_spaces + t.spaces[slot + 1 :]
    return Tensor._raw(spaces, out)


def as_tensor(x: Element) -> Tensor:
    return Tensor._raw((x.space,), {(k,): c for k, c in x.items()})


def tensor_degrees(t: Tensor) -> set:
    return {tuple(s.degree(i) for s, i in zip(t.spaces, key)) for key in t._terms}


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class HopfStructure:
    """Structure maps of a graded connected Hopf algebra on one basis.

    ``product(i, j)`` and ``antipode(i)`` return Elements, ``coproduct(i)`` a
    rank-2 Tensor, and ``basis(n)`` the indices of degree ``n``.
    """

    space: Space
    unit_index: tuple
    product: Callable
    coproduct: Callable
    basis: Callable
    antipode: Callable | None = None
    name: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def degree(self, index):
        return self.space.degree(index)

    def unit(self) -> Element:
        return Element._raw(self.space, {self.unit_index: 1})


_REGISTRY: dict = {}


def register(h: HopfStructure):
    _REGISTRY[h.space] = h
    return h


def structure(space: Space) -> HopfStructure:
    if space not in _REGISTRY:
        # registration happens on import of the algebra modules
        import importlib

        importlib.import_module(f".{space.algebra.lower()}", __package__)
    return _REGISTRY[space]


def unit(space: Space) -> Element:
    return structure(space).unit()


def counit(x: Element) -> int:
    return sum(c for k, c in x.items() if x.space.degree(k) == 0)


def coproduct(x: Element, hopf: HopfStructure | None = None) -> Tensor:
    h = hopf or structure(x.space)
    return extend_coproduct(h.coproduct, x)


def product(x: Element, y: Element, hopf: HopfStructure | None = None) -> Element:
    h = hopf or structure(x.space)
    return extend_product(h.product, x, y)


def antipode(x: Element, hopf: HopfStructure | None = None) -> Element:
    """Apply the registered antipode (the closed formula where one exists)."""
    h = hopf or structure(x.space)
    if h.antipode is None:
        return takeuchi_antipode(x, h)
    return extend_linear(h.antipode, x, x.space)


def iterated_coproduct(x: Element, k: int, bracket: str = "left", hopf: HopfStructure | None = None) -> Tensor:
    """Delta^{(k)}(x), a rank-(k+1) tensor.

    ``bracket="left"`` splits the first slot at each step, ``"right"`` the last.
    """
    h = hopf or structure(x.space)
    t = as_tensor(x)
    for r in range(k):
        slot = 0 if bracket == "left" else r
        t = split_slot(t, slot, h.coproduct)
    return t


def multiply_out(key: tuple, h: HopfStructure, cache: dict) -> Element:
    """Product of the basis elements in ``key``, memoised on prefixes."""
    got = cache.get(key)
    if got is not None:
        return got
    if len(key) == 1:
        got = Element.basis(h.space, key[0])
    else:
        got = extend_product(h.product, multiply_out(key[:-1], h, cache), Element.basis(h.space, key[-1]))
    cache[key] = got
    return got


def takeuchi_antipode(x: Element, hopf: HopfStructure | None = None) -> Element:
    """S(x) = sum_k (-1)^k m^{(k-1)} pi^{(x)k} Delta^{(k-1)}(x).

    ``pi`` kills degree 0.  The positive part of Delta^{(k-1)} is built one
    split at a time, so the sum stops once every slot has degree 1.
    """
    h = hopf or structure(x.space)
    deg = h.space.degree
    out = {}
    eps = counit(x)
    if eps:
        out[h.unit_index] = eps
    layer = {(k,): c for k, c in x.items() if deg(k) > 0}
    sign = -1
    cache = {}
    while layer:
        for key, c in layer.items():
            for k, d in multiply_out(key, h, cache).items():
                _accumulate(out, k, sign * c * d)
        nxt = {}
        for key, c in layer.items():
            for (a, b), d in h.coproduct(key[-1]).items():
                if deg(a) > 0 and deg(b) > 0:
                    _accumulate(nxt, key[:-1] + (a, b), c * d)
        layer = nxt
        sign = -sign
    return Element._raw(h.space, out)


# --------------------------------------------------------------------------
# axiom verification


@dataclass
class Violation:
    axiom: str
    space: Space
    witness: tuple
    detail: str = ""

    def __str__(self):
        from .syntax import format_index

        wit = ", ".join(format_index(self.space, w) for w in self.witness)
        return f"{self.axiom} fails in {self.space} at ({wit}){': ' + self.detail if self.detail else ''}"


@dataclass
class HopfAxiomReport:
    max_degree: int
    checked: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _tick(self, axiom):
        self.checked[axiom] = self.checked.get(axiom, 0) + 1

    def summary(self) -> str:
        lines = [f"{name}: {count} checks" for name, count in sorted(self.checked.items())]
        lines += [f"VIOLATION {v}" for v in self.violations]
        lines.append("all axioms hold" if self.ok else f"{len(self.violations)} violation(s)")
        return "\n".join(lines)


def _tuples_with_total(bases, count, max_degree):
    for degs in itertools.product(range(max_degree + 1), repeat=count):
        if sum(degs) <= max_degree:
            yield from itertools.product(*(bases[d] for d in degs))


def verify_structure(h: HopfStructure, max_degree: int, report: HopfAxiomReport | None = None) -> HopfAxiomReport:
    """Exhaustively check the Hopf axioms of one registered basis up to ``max_degree``."""
    report = report or HopfAxiomReport(max_degree)
    sp = h.space
    bases = {d: tuple(h.basis(d)) for d in range(max_degree + 1)}
    one = h.unit()

    def fail(axiom, *witness, detail=""):
        report.violations.append(Violation(axiom, sp, tuple(witness), detail))

    def E(i):
        return Element.basis(sp, i)

    def prod(x, y):
        return extend_product(h.product, x, y)

    def cop(x):
        return extend_coproduct(h.coproduct, x)

    for a, b in _tuples_with_total(bases, 2, max_degree):
        ab = h.product(a, b)
        report._tick("grading (product)")
        if ab and ab.degrees() != {sp.degree(a) + sp.degree(b)}:
            fail("grading (product)", a, b)
        report._tick("compatibility")
        if cop(ab) != cop(E(a)) * cop(E(b)):
            fail("compatibility", a, b, detail="Delta(ab) != Delta(a)Delta(b)")

    for a in itertools.chain.from_iterable(bases.values()):
        report._tick("unit")
        if prod(one, E(a)) != E(a) or prod(E(a), one) != E(a):
            fail("unit", a)

    for a, b, c in _tuples_with_total(bases, 3, max_degree):
        report._tick("associativity")
        if prod(prod(E(a), E(b)), E(c)) != prod(E(a), prod(E(b), E(c))):
            fail("associativity", a, b, c)

    for a in itertools.chain.from_iterable(bases.values()):
        d = cop(E(a))
        report._tick("grading (coproduct)")
        if any(sum(ds) != sp.degree(a) for ds in tensor_degrees(d)):
            fail("grading (coproduct)", a)
        report._tick("coassociativity")
        if split_slot(d, 0, h.coproduct) != split_slot(d, 1, h.coproduct):
            fail("coassociativity", a)
        report._tick("counit")
        left = Element._raw(sp, {})
        right = Element._raw(sp, {})
        for (x, y), c in d.items():
            if sp.degree(x) == 0:
                left = left + Element.basis(sp, y, c)
            if sp.degree(y) == 0:
                right = right + Element.basis(sp, x, c)
        if left != E(a) or right != E(a):
            fail("counit", a)
        eps_one = one * counit(E(a))
        s_left = Element._raw(sp, {})
        s_right = Element._raw(sp, {})
        for (x, y), c in d.items():
            s_left = s_left + prod(antipode(E(x), h), E(y)) * c
            s_right = s_right + prod(E(x), antipode(E(y), h)) * c
        report._tick("antipode (left)")
        if s_left != eps_one:
            fail("antipode (left)", a, detail=f"m(S(x)id)Delta = {s_left}")
        report._tick("antipode (right)")
        if s_right != eps_one:
            fail("antipode (right)", a, detail=f"m(id(x)S)Delta = {s_right}")
    return report


def verify_hopf_axioms(algebra: str, max_degree: int, structures: Sequence[HopfStructure] | None = None) -> HopfAxiomReport:
    """Check every Hopf axiom on all basis elements of ``algebra`` up to ``max_degree``.

    Both registered bases are checked unless ``structures`` is given (e.g. a
    deliberately corrupted structure for fault injection).  Violations are
    reported, never raised.
    """
    from ._config import check_degree

    check_degree(max_degree)
    if structures is None:
        structures = [structure(s) for s in SPACES if s.algebra == algebra]
    report = HopfAxiomReport(max_degree)
    for h in structures:
        verify_structure(h, max_degree, report)
    return report
